"""Arithmetic in the quantum plane and its relatives.

Loads catalog rings, multiplies in left normal form, compares the engine with
the closed-form exchange scalar, and looks at the associated graded ring of
the quantum Weyl algebra.

    python demos/quantum_plane.py
"""
from skewpbw import (
    associated_graded,
    closed_form_coefficient,
    format_polynomial,
    load_catalog,
    multiply,
    parse_polynomial,
)


def show(p, label, f):
    print(f"  {label:24s} = {format_polynomial(p, f)}")


def main():
    plane = load_catalog("quantum-plane").ring
    print("quantum plane, x2 x1 = q x1 x2")
    show(plane, "x2 * x1", multiply(plane, plane.var(1), plane.var(0)))
    show(plane, "x2^3 * x1^2", multiply(plane, plane.var(1, 3), plane.var(0, 2)))
    f = parse_polynomial("x1 + x2", plane)
    show(plane, "(x1 + x2)^3", multiply(plane, f, multiply(plane, f, f)))

    # the engine and the closed form agree on every monomial pair
    c = closed_form_coefficient(plane, (0, 3), (2, 0))
    print(f"  closed form for x2^3 x1^2: {plane.backend.domain.format(c)}")

    torus = load_catalog("quantum-torus").ring
    print("\nquantum torus, both variables inverted")
    g = parse_polynomial("x1^-1*x2", torus)
    show(torus, "(x1^-1 x2)(x1 x2^-1)", multiply(torus, g, parse_polynomial("x1*x2^-1", torus)))
    show(torus, "x2 * x1^-1", multiply(torus, torus.var(1), torus.var(0, -1)))

    dq = load_catalog("dqsq").ring
    print("\nq-differential operators on the quantum plane")
    show(dq, "d1 * x1^2", parse_polynomial("d1*x1^2", dq))
    show(dq, "d2 * x1 * x2", parse_polynomial("d2*x1*x2", dq))
    gr = associated_graded(dq).presentation
    print("  in Gr the lower terms vanish:")
    show(gr, "d1 * x1^2", multiply(gr, gr.var(2), gr.var(0, 2)))

    s3 = load_catalog("skew-3dim").ring
    print("\nthree-dimensional skew polynomial algebra")
    show(s3, "z * y", multiply(s3, s3.var(2), s3.var(1)))
    show(s3, "z * x * y", parse_polynomial("z*x*y", s3))


if __name__ == "__main__":
    main()
