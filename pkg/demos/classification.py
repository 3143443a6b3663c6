"""Which endomorphisms does a quantum space admit?

Walks through the classifiers on the example rings in ``demos/rings``:
diagonal maps on a general three-variable quantum space, a brute-force search
confirming that nothing else survives, affine maps on a ring with lower
terms, the inversion automorphism of a quantum torus, and the q = -1 swap
that falls outside the hypotheses.

    python demos/classification.py
"""
import itertools
from pathlib import Path

from skewpbw import (
    CoeffBackend,
    Endomorphism,
    Presentation,
    RationalField,
    SkewPoly,
    build_quantum_laurent,
    classify_filtered,
    classify_quantum,
    classify_quasi_commutative,
    compose,
    format_polynomial,
    independent_in_R_star_mod_N,
    invert_diagonal,
    load_document,
)

RINGS = Path(__file__).resolve().parent / "rings"


def report(p, label, cls):
    fmt = p.backend.domain.format
    line = f"  {label:10s} {cls.verdict}"
    if cls.scalars:
        line += f"  eps={cls.epsilon:+d}  lambda=({', '.join(map(fmt, cls.scalars))})"
    if any(cls.constants):
        line += f"  a0=({', '.join(map(fmt, cls.constants))})"
    if cls.reasons:
        line += f"  [{cls.reasons[0]}]"
    print(line)


def general_space():
    doc = load_document(RINGS / "o3.json")
    p = doc.ring
    units = [p.c[j][i] for j in range(3) for i in range(j)]
    print("O_3 with multiparameters q12, q13, q23")
    print("  independent in R*/N:", bool(independent_in_R_star_mod_N(p.backend, None, units)))
    for name in ("diag", "mixed", "collapse"):
        report(p, name, classify_quasi_commutative(p, doc.endomorphism(name)))

    # every map sending each x_w to a monomial of degree <= 1 times {1, 2, q12}
    dom = p.backend.domain
    monos = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    cands = [SkewPoly({m: a}) for m in monos for a in (dom.one, dom.coerce(2), dom.param("q12"))]
    survivors = []
    for ys in itertools.product(cands, repeat=3):
        e = Endomorphism(p, ys)
        if e.validate().ok:
            survivors.append(e)
    diagonal = sum(classify_quasi_commutative(p, e).verdict == "Diagonal" for e in survivors)
    print(f"  brute force: {len(cands) ** 3} candidates, {len(survivors)} valid, {diagonal} diagonal")


def affine():
    doc = load_document(RINGS / "shifted-space.json")
    p = doc.ring
    print("\nshifted space: x2 x1 = 2 x1 x2 + x1, x3 x2 = 5 x2 x3 + 4 x3")
    for name in ("affine", "translate"):
        report(p, name, classify_filtered(p, doc.endomorphism(name)))
    e = doc.endomorphism("affine")
    print("  images:", ", ".join(format_polynomial(p, y) for y in e.images))


def torus():
    doc = load_document(RINGS / "torus3.json")
    qr = build_quantum_laurent(doc.ring, 3)
    p = qr.presentation
    print("\nthree-variable quantum torus")
    e = doc.endomorphism("invert")
    report(p, "invert", classify_quantum(qr, e))
    report(p, "binomial", classify_quantum(qr, doc.endomorphism("binomial")))
    mu = invert_diagonal(e)
    print("  inverse:", ", ".join(format_polynomial(p, y) for y in mu.images))
    both = compose(mu, e)
    both.validate()
    print("  composite on generators:", ", ".join(format_polynomial(p, both(p.var(w))) for w in range(3)))


def swap():
    Q = RationalField()
    p = Presentation(CoeffBackend(Q), 2, ((None, None), (Q.coerce(-1), None)))
    e = Endomorphism(p, (p.var(1), p.var(0)))
    print("\nquantum plane at q = -1")
    print("  swap validates:", e.validate().ok)
    report(p, "swap", classify_quasi_commutative(p, e))


def main():
    general_space()
    affine()
    torus()
    swap()


if __name__ == "__main__":
    main()
