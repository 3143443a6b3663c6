from fractions import Fraction

import pytest

from skewpbw import (
    CoeffBackend,
    InvalidPresentation,
    LaurentRing,
    LaurentUnsupported,
    Presentation,
    RationalField,
    SkewPoly,
    ZeroPolynomial,
    degree,
    leading_term,
    load_catalog,
    multiply,
    parse_polynomial,
    smallest_term,
    validate_presentation,
)
from skewpbw.ring import in_filtration, top_degree_part

from conftest import demo, quantum_space, random_poly, twisted_plane

LQ = LaurentRing(["q"])
q = LQ.param("q")


def plane():
    return Presentation(CoeffBackend(LQ), 2, ((None, None), (q, None)))


def test_quantum_plane_valid():
    p = plane()
    assert validate_presentation(p).ok
    assert p.c[0][1] == q.inverse()


def test_inconsistent_c_reported():
    p = Presentation(CoeffBackend(LQ), 2, ((None, q), (q, None)))
    rep = validate_presentation(p)
    assert not rep.ok
    assert "c_ij*c_ji" in rep.kinds()


def test_non_cocycle_reported():
    # sigma_3 moves q12, which breaks x3 (x2 x1) = (x3 x2) x1
    dom = LaurentRing(["q12"])
    from skewpbw import MonomialMap
    be = CoeffBackend(dom, (None, None, MonomialMap((2,), ((1,),))))
    c = [[None] * 3 for _ in range(3)]
    c[1][0] = dom.param("q12")
    c[2][0] = c[2][1] = dom.one
    rep = validate_presentation(Presentation(be, 3, tuple(map(tuple, c))))
    assert not rep.ok
    assert set(rep.kinds()) & {"Q-cocycle", "associativity"}


def test_catalog_presentations_valid(catalog_doc):
    assert validate_presentation(catalog_doc.presentation).ok


def test_diffusion_has_lower_terms():
    p = load_catalog("diffusion").presentation
    assert p.d_lower and not p.quasi_commutative
    assert validate_presentation(p).ok


def test_bad_relation_detected():
    # x2 x1 = x1 x2 + x1, x3 x2 = 2 x2 x3 + x3, x3 x1 = x1 x3 is not associative
    Q = RationalField()
    c = ((None,) * 3, (1, None, None), (1, 2, None))
    p = Presentation(CoeffBackend(Q), 3, c, {(1, 0): {(1, 0, 0): 1}, (2, 1): {(0, 0, 1): 1}})
    assert "associativity" in validate_presentation(p).kinds()


def test_multiply_plane():
    p = plane()
    x1, x2 = p.var(0), p.var(1)
    assert multiply(p, x2, x1) == SkewPoly({(1, 1): q})
    assert multiply(p, p.one(), x2) == x2
    assert multiply(p, p.zero(), x2) == p.zero()


def test_multiply_qweyl():
    p = load_catalog("dqsq").presentation
    d1, x1 = p.var(2), p.var(0)
    got = multiply(p, d1, multiply(p, x1, x1))
    assert got == parse_polynomial("q^2*x1^2*d1 + (q+1)*x1", p)


def test_multiply_twisted_coefficient():
    p = twisted_plane()
    x2 = p.var(1)
    assert multiply(p, x2, p.const(q)) == SkewPoly({(0, 1): 2 * q})


def test_multiply_with_derivation():
    doc = demo("ore-derivations")
    p = doc.presentation
    t1 = p.const(p.backend.domain.param("t1"))
    d1 = p.var(0)
    assert multiply(p, d1, t1) == parse_polynomial("2*t1*d1 + 1", p)


def test_leading_and_smallest():
    Q = RationalField()
    p = Presentation(CoeffBackend(Q), 2, ((None, None), (1, None)))
    f = SkewPoly({(1, 1): Fraction(3), (0, 4): Fraction(5)})
    assert leading_term(f) == ((1, 1), 3)
    assert smallest_term(f) == ((0, 4), 5)
    g = SkewPoly({(2, 0): Fraction(7)})
    assert leading_term(g) == smallest_term(g) == ((2, 0), 7)
    with pytest.raises(ZeroPolynomial):
        leading_term(p.zero())
    t = quantum_space([[None], ["q"]], r=1)
    h = parse_polynomial("x1^-1 + x1", t)
    assert smallest_term(h) == ((-1, 0), t.backend.one)


def test_degree_and_filtration():
    Q = RationalField()
    c = ((None,) * 3, (1, None, None), (1, 1, None))
    p = Presentation(CoeffBackend(Q), 3, c)
    f = parse_polynomial("x1*x2 + x3", p)
    assert degree(f, p) == 2
    assert degree(p.const(5), p) == 0 and in_filtration(p.const(5), 0, p)
    assert not in_filtration(p.var(0, 3), 2, p)
    assert in_filtration(p.zero(), 0, p)
    assert top_degree_part(f) == parse_polynomial("x1*x2", p)
    torus = load_catalog("quantum-torus").presentation
    with pytest.raises(LaurentUnsupported):
        degree(torus.var(0), torus)


def test_laurent_inverse_collapse():
    p = load_catalog("quantum-torus").presentation
    for i in range(2):
        assert multiply(p, p.var(i), p.var(i, -1)) == p.one()
        assert multiply(p, p.var(i, -1), p.var(i)) == p.one()


def test_negative_exponent_rejected_outside_laurent():
    with pytest.raises(InvalidPresentation):
        plane().var(1, -1)


def test_associativity_and_distributivity(catalog_doc, rng):
    p = catalog_doc.ring
    pool_scalar = p.backend.coerce(3)
    for _ in range(25):
        f, g, h = (random_poly(p, rng, max_deg=2) for _ in range(3))
        assert multiply(p, multiply(p, f, g), h) == multiply(p, f, multiply(p, g, h))
        lhs = multiply(p, f.scale(pool_scalar) + g, h)
        assert lhs == multiply(p, f, h).scale(pool_scalar) + multiply(p, g, h)


def test_degree_additive_in_quasi_commutative(rng):
    p = load_catalog("multiplicative-weyl").presentation
    for _ in range(30):
        f, g = random_poly(p, rng), random_poly(p, rng)
        if f and g:
            assert degree(multiply(p, f, g), p) == degree(f, p) + degree(g, p)


def test_messages_use_names():
    import json

    from skewpbw import parse_document
    from skewpbw.catalog import catalog_text

    data = json.loads(catalog_text("skew-3dim"))
    data["relations"]["d_lower"]["3,1"] = "x"
    rep = validate_presentation(parse_document(json.dumps(data)).presentation)
    assert [str(v) for v in rep] == ["(z y) x != z (y x)"]
