"""Inverting coefficients and variables.

Two constructions: passing to the fraction field of the coefficients (the
twist and the derivation extend to fractions), and inverting the first r
variables of a quantum space to get a skew quantum polynomial ring.

    python demos/localization.py
"""
from pathlib import Path

from skewpbw import (
    Endomorphism,
    apply_delta,
    apply_sigma,
    build_quantum_laurent,
    classify_over_ore,
    classify_quasi_commutative,
    format_polynomial,
    laurent_commutation,
    load_catalog,
    load_document,
    localize_coefficients,
    multiply,
    parse_polynomial,
)

RINGS = Path(__file__).resolve().parent / "rings"


def fractions():
    doc = load_document(RINGS / "ore-derivations.json")
    loc = localize_coefficients(doc.presentation)
    lp = loc.presentation
    ff = lp.backend.domain
    print("q-difference operators d1 t1 = 2 t1 d1 + 1, d2 t2 = 3 t2 d2 + 1")
    print("  coefficients after localizing:", ff)
    r = ff.fraction(ff.base.param("t1"), ff.base.param("t1") + 1)
    print(f"  r = {ff.format(r)}")
    print(f"  sigma_1(r) = {ff.format(apply_sigma(lp.backend, 0, r))}")
    print(f"  delta_1(r) = {ff.format(apply_delta(lp.backend, 0, r))}")
    print(f"  d1 * r     = {format_polynomial(lp, multiply(lp, lp.var(0), lp.const(r)))}")
    f = parse_polynomial("d1*t1 + t2", doc.presentation)
    print(f"  psi({format_polynomial(doc.presentation, f)}) = {format_polynomial(lp, loc.psi(f))}")


def ore_classifier():
    doc = load_document(RINGS / "o3.json")
    p = doc.ring
    images = ("(1 + q12)*x1", "x2", "(q13 - 2)*x3")
    e = Endomorphism(p, tuple(parse_polynomial(t, p) for t in images))
    print("\nO_3 with scalars that are not units of the coefficient ring")
    print("  base classifier:", classify_quasi_commutative(p, e).verdict)
    cls = classify_over_ore(p, e)
    fmt = p.backend.domain.format
    print(f"  over the fractions: {cls.verdict}, lambda=({', '.join(map(fmt, cls.scalars))}),"
          f" non-unit positions {[w + 1 for w in cls.non_units]}")


def laurent():
    plane = load_catalog("quantum-plane").ring
    for r in (1, 2):
        qr = build_quantum_laurent(plane, r)
        p = qr.presentation
        print(f"\nquantum plane with the first {r} variable(s) inverted")
        print(f"  x2 x1^-1 = {format_polynomial(p, multiply(p, p.var(1), p.var(0, -1)))}")
        if r == 2:
            a = laurent_commutation(qr, 0, 1, -3, 2)
            print(f"  x1^2 x2^-3 = ({p.backend.domain.format(a)}) x2^-3 x1^2")
            print(f"  x1^-1 x2^-1 x1 x2 = "
                  f"{format_polynomial(p, parse_polynomial('x1^-1*x2^-1*x1*x2', p))}")


def main():
    fractions()
    ore_classifier()
    laurent()


if __name__ == "__main__":
    main()
