"""Kauffman brackets, Jones and Alexander polynomials of lassos, braid closures and satellites.

The bracket transfer kernel is compiled with Cython when available; the
pure-Python kernel is used otherwise, or when ``LASSOKNOTS_PURE_PYTHON`` is set.
``lassoknots.KERNEL`` names the active one.
"""

__version__ = "0.1.0"

from .poly import LaurentPolynomial, delta, framing_factor
from .skein import SkeinElement, embed_to_s3, geometric_degree, skein_mul, substitute_basis
from .lasso import Lasso, bracket as lasso_bracket, degree, jones_st, normalize, reverse, writhe
from .braid import (
    KERNEL,
    BraidWord,
    NotAKnotError,
    bracket_closure,
    cable,
    connected_sum,
    framed_cable,
    half_twists,
    jones_closure,
    parallel_jones,
    state_sum_oracle,
)
from .alexander import alexander_closure, connected_sum_alexander, parse_spec, realize_spec
from .satellite import (
    AnnularPattern,
    SatelliteSpec,
    distinguish,
    satellite_alexander,
    satellite_bracket,
    satellite_jones,
    satellite_writhe,
)

__all__ = [
    "__version__", "KERNEL",
    "LaurentPolynomial", "delta", "framing_factor",
    "SkeinElement", "embed_to_s3", "geometric_degree", "skein_mul", "substitute_basis",
    "Lasso", "lasso_bracket", "degree", "jones_st", "normalize", "reverse", "writhe",
    "BraidWord", "NotAKnotError", "bracket_closure", "cable", "connected_sum", "framed_cable",
    "half_twists", "jones_closure", "parallel_jones", "state_sum_oracle",
    "alexander_closure", "connected_sum_alexander", "parse_spec", "realize_spec",
    "AnnularPattern", "SatelliteSpec", "distinguish", "satellite_alexander", "satellite_bracket",
    "satellite_jones", "satellite_writhe",
]
