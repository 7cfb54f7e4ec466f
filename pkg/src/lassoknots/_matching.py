"""Planar matchings and the pure-Python transfer kernel.

A state of a partially smoothed braid on ``n`` strands is a non-crossing
perfect matching of ``2n`` boundary points: bottom points ``0..n-1`` and top
points ``n..2n-1``.  Smoothing a crossing at generator ``i`` either keeps the
matching (vertical smoothing) or caps top points ``i, i+1`` and opens a new cup
there, closing a loop when those two points were already joined.

The kernel tracks, per matching, how many states reached it with a given
number ``h`` of ``A`` factors and ``l`` closed interior loops.  These counts are
non-negative and sum to ``2**c`` after ``c`` letters, so 64-bit storage is exact
for ``c <= 62``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = ["MatchingTable", "matching_table", "transfer_counts_py"]


@dataclass(frozen=True)
class MatchingTable:
    strands: int
    matchings: tuple[tuple[int, ...], ...]
    # next_state[m][i], closes[m][i] for generator index i (0-based)
    next_state: tuple[tuple[int, ...], ...]
    closes: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.matchings)

    @lru_cache(maxsize=None)
    def closure(self, axis: int = 0) -> tuple[tuple[int, int], ...]:
        """Per matching: (contractible loops, wrapping loops) of its closure.

        Closure arcs of strands ``>= axis`` go around the core.
        """
        return tuple(_close(m, self.strands, axis) for m in self.matchings)


def _apply_cap(match: tuple[int, ...], n: int, i: int) -> tuple[tuple[int, ...], int]:
    a, b = n + i, n + i + 1
    p = list(match)
    if p[a] == b:
        return match, 1
    pa, pb = p[a], p[b]
    p[pa], p[pb] = pb, pa
    p[a], p[b] = b, a
    return tuple(p), 0


def _close(match: tuple[int, ...], n: int, axis: int) -> tuple[int, int]:
    seen = [False] * (2 * n)
    contractible = wrapping = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        x = start
        net = 0
        while True:
            seen[x] = True
            y = match[x]
            seen[y] = True
            # follow the closure arc from y
            if y >= n:
                j = y - n
                if j >= axis:
                    net += 1
                x = j
            else:
                if y >= axis:
                    net -= 1
                x = y + n
            if x == start:
                break
        if net not in (-1, 0, 1):
            raise AssertionError(f"closure loop with winding {net}")
        if net:
            wrapping += 1
        else:
            contractible += 1
    return contractible, wrapping


@lru_cache(maxsize=None)
def matching_table(n: int) -> MatchingTable:
    identity = tuple(list(range(n, 2 * n)) + list(range(n)))
    index = {identity: 0}
    order = [identity]
    nxt: list[list[int]] = []
    cls: list[list[int]] = []
    k = 0
    while k < len(order):
        m = order[k]
        row_n, row_c = [], []
        for i in range(n - 1):
            m2, closed = _apply_cap(m, n, i)
            if m2 not in index:
                index[m2] = len(order)
                order.append(m2)
            row_n.append(index[m2])
            row_c.append(closed)
        nxt.append(row_n)
        cls.append(row_c)
        k += 1
    return MatchingTable(
        n,
        tuple(order),
        tuple(tuple(r) for r in nxt),
        tuple(tuple(r) for r in cls),
    )


def transfer_counts_py(table: MatchingTable, letters: tuple[int, ...]) -> dict[tuple[int, int, int], int]:
    """Sparse transfer: ``{(matching, h, l): count}`` after all letters.

    ``h`` counts ``A`` factors; the ``A``-exponent is ``2h - len(letters)``.
    """
    nxt, cls = table.next_state, table.closes
    cur: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    for g in letters:
        i = abs(g) - 1
        pos = g > 0
        new: dict[tuple[int, int, int], int] = {}
        get = new.get
        for (m, h, l), v in cur.items():
            m2 = nxt[m][i]
            l2 = l + cls[m][i]
            if pos:
                k1, k2 = (m, h + 1, l), (m2, h, l2)
            else:
                k1, k2 = (m, h, l), (m2, h + 1, l2)
            new[k1] = get(k1, 0) + v
            new[k2] = get(k2, 0) + v
        cur = new
    return cur
