# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Dense int64 transfer kernel; see ``_matching.transfer_counts_py`` for the semantics."""

import numpy as np

from libc.stdint cimport int64_t


def transfer_counts(const int[:, ::1] next_state, const unsigned char[:, ::1] closes,
                    const int[::1] letters, int n_states):
    """Return ``counts[m, h, l]`` after applying every letter.

    Callers guarantee ``len(letters) <= 62`` so no entry can overflow.
    """
    cdef Py_ssize_t c = letters.shape[0]
    cdef Py_ssize_t width = c + 1
    cur_arr = np.zeros((n_states, width, width), dtype=np.int64)
    new_arr = np.zeros((n_states, width, width), dtype=np.int64)
    cdef int64_t[:, :, ::1] cur = cur_arr
    cdef int64_t[:, :, ::1] new = new_arr
    cdef int64_t[:, :, ::1] tmp
    cdef Py_ssize_t j, m, m2, h, l, l2, top
    cdef int g, i, cl
    cdef int64_t v
    cur[0, 0, 0] = 1
    for j in range(c):
        g = letters[j]
        i = (g if g > 0 else -g) - 1
        top = j + 1
        for m in range(n_states):
            for h in range(top + 1):
                for l in range(top + 1):
                    new[m, h, l] = 0
        for m in range(n_states):
            m2 = next_state[m, i]
            cl = closes[m, i]
            for h in range(top):
                for l in range(top):
                    v = cur[m, h, l]
                    if v == 0:
                        continue
                    l2 = l + cl
                    if g > 0:
                        new[m, h + 1, l] += v
                        new[m2, h, l2] += v
                    else:
                        new[m, h, l] += v
                        new[m2, h + 1, l2] += v
        tmp = cur
        cur = new
        new = tmp
    return np.asarray(cur)
