"""Reference polynomial values used by ``--self-test``, frozen as canonical text."""

from __future__ import annotations

from .poly import LaurentPolynomial

__all__ = ["REFERENCE", "reference_checks"]

REFERENCE = {
    "trefoil_annular_bracket": {"0": "A^7 - A^3 + A^-1", "2": "A^-3"},
    "trefoil_sphere_bracket": "A^7 - A^3 - A^-5",
    "figure_eight_2cable_bracket": "-A^26 + A^22 - A^2 - A^-2 + A^-22 - A^-26",
    "sat_trefoil_pattern_4_1_bracket": "-A^23 + A^19 + A^7 - A^3 - A^-5 + A^-25 - A^-29",
    "sat_trefoil_pattern_4_1_jones": "t^5 - t^4 + t^-1 + t^-3 - t^-4 - t^-7 + t^-8",
    "trefoil_parallel_2": "-t^-1/2 - t^-5/2 - t^-9/2 + t^-17/2 + t^-21/2 - t^-23/2",
    "sat_L2_3_1_jones": "t^-1 + t^-3 - t^-4 + t^-5 - t^-6 - t^-9 + t^-10 - t^-11 + 2t^-12 - t^-13",
    "sat_L4_3_1_jones": (
        "t^-1 - t^-2 + 2t^-3 - t^-4 + 2t^-5 - 2t^-6 + t^-7 - t^-8 - t^-9 + t^-10"
        " - 2t^-11 + 3t^-12 - 2t^-13 + 2t^-14 - t^-15"
    ),
}


def _u(text: str) -> LaurentPolynomial:
    return LaurentPolynomial.parse(text, "u")


def _a(text: str) -> LaurentPolynomial:
    return LaurentPolynomial.parse(text, "A")


def reference_checks() -> list[tuple[str, bool, str]]:
    """Recompute every reference value; ``(label, ok, detail)`` per check."""
    from .alexander import alexander_closure
    from .braid import BraidWord, bracket_closure, framed_cable, parallel_jones
    from .lasso import Lasso
    from .satellite import AnnularPattern, SatelliteSpec, satellite_alexander, satellite_bracket, satellite_jones
    from .skein import SkeinElement

    t3 = BraidWord(2, (-1, -1, -1))
    f8 = BraidWord(3, (1, -2, 1, -2))
    R = REFERENCE
    out = []

    def check(label, got, want):
        out.append((label, got == want, str(got)))

    ann = bracket_closure(t3, "annulus")
    want = SkeinElement({int(k): _a(v) for k, v in R["trefoil_annular_bracket"].items()})
    check("annular bracket of the trefoil", ann, want)
    check("embedding into S^3", ann.embed_to_s3(), _a(R["trefoil_sphere_bracket"]))
    check("0-framed 2-cable bracket of 4_1", bracket_closure(framed_cable(f8, 2), "sphere"),
          _a(R["figure_eight_2cable_bracket"]))
    s = SatelliteSpec(AnnularPattern(t3), f8, "4_1")
    check("satellite bracket, trefoil pattern on 4_1", satellite_bracket(s), _a(R["sat_trefoil_pattern_4_1_bracket"]))
    check("satellite Jones, trefoil pattern on 4_1", satellite_jones(s, verify=True),
          _u(R["sat_trefoil_pattern_4_1_jones"]))
    check("J(3_1;2)", parallel_jones(t3, 2), _u(R["trefoil_parallel_2"]))
    j2 = satellite_jones(SatelliteSpec(Lasso.of(2), t3, "3_1"), verify=True)
    j4 = satellite_jones(SatelliteSpec(Lasso.of(4), t3, "3_1"), verify=True)
    check("J(Sat(L(2),3_1)) recomputed", j2, _u(R["sat_L2_3_1_jones"]))
    check("J(Sat(L(4),3_1)) recomputed", j4, _u(R["sat_L4_3_1_jones"]))
    out.append(("J(Sat(L(2),3_1)) != J(Sat(L(4),3_1))", j2 != j4, ""))
    one = LaurentPolynomial.one("t")
    for r in (2, 4):
        check(f"alexander of Sat(L({r}),3_1)", satellite_alexander(SatelliteSpec(Lasso.of(r), t3)), one)
    check("alexander of Sat(L(1,2),3_1)", satellite_alexander(SatelliteSpec(Lasso.of(1, 2), t3)),
          alexander_closure(t3))
    return out
