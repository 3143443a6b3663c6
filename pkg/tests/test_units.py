import random
from fractions import Fraction

import pytest

from skewpbw import (
    CoeffBackend,
    LaurentPoly,
    LaurentRing,
    MonomialMap,
    NotAUnit,
    PrimeField,
    RationalField,
    UnitLogUnsupported,
    apply_sigma,
    independent_in_R_star_mod_N,
    n_lattice,
    unit_log,
)
from skewpbw.ratfunc import FractionField
from skewpbw.units import UnitLog

Q = RationalField()
LQ = LaurentRing(["q"])
q = LQ.param("q")


def scale_q(c):
    return MonomialMap((c,), ((1,),))


def test_rational_log():
    lg = unit_log(Q, Fraction(12))
    assert lg.as_dict() == {("p", 2): 2, ("p", 3): 1}
    assert lg.torsion == 0
    assert unit_log(Q, Fraction(-1, 4)).torsion == 1
    with pytest.raises(NotAUnit):
        unit_log(Q, Fraction(0))


def test_prime_field_log():
    F = PrimeField(5)
    lg = unit_log(F, F.coerce(2))
    assert lg.torsion == 1 and lg.order == 4


def test_laurent_log():
    lg = unit_log(LQ, -3 * q * q)
    assert lg.torsion == 1
    assert lg.as_dict() == {("p", 3): 1, ("x", "q"): 2}
    with pytest.raises(NotAUnit):
        unit_log(LQ, q + 1)


def test_prime_bound():
    with pytest.raises(UnitLogUnsupported):
        unit_log(Q, Fraction(14), prime_bound=5)
    assert unit_log(Q, Fraction(12), prime_bound=3).as_dict() == {("p", 2): 2, ("p", 3): 1}


def random_unit(rng, dom):
    if dom.kind == "prime":
        return dom.coerce(rng.randint(1, dom.p - 1))
    c = Fraction(rng.choice([-1, 1]) * rng.randint(1, 60), rng.randint(1, 60))
    if dom.kind == "rational":
        return c
    mono = LaurentPoly.monomial(tuple(rng.randint(-3, 3) for _ in dom.params), c)
    if dom.kind == "laurent":
        return mono
    f = dom.base.param(0) + rng.randint(1, 3)
    return dom.coerce(mono) * dom.coerce(f) ** rng.choice([-1, 1, 2])


@pytest.mark.parametrize("dom", [Q, PrimeField(101), LaurentRing(["a", "b"]),
                                 FractionField(LaurentRing(["a"]))], ids=lambda d: d.kind)
def test_log_is_homomorphism(dom):
    rng = random.Random(3)
    for _ in range(200):
        u, v = random_unit(rng, dom), random_unit(rng, dom)
        assert unit_log(dom, u * v) == unit_log(dom, u) + unit_log(dom, v)
    assert unit_log(dom, dom.one).is_zero()


def test_n_lattice_examples():
    assert n_lattice(CoeffBackend(LQ, (None,))).generators == ()
    lat = n_lattice(CoeffBackend(LQ, (scale_q(2),)))
    assert lat.contains(unit_log(LQ, LQ.coerce(2)))
    assert not lat.contains(unit_log(LQ, LQ.coerce(3)))
    F7 = n_lattice(CoeffBackend(PrimeField(7)))
    assert F7.generators == () and F7.order == 6


def test_independence_examples():
    be = CoeffBackend(Q)
    assert independent_in_R_star_mod_N(be, None, [2, 3, 5])
    res = independent_in_R_star_mod_N(be, None, [2, 3, 6])
    assert not res
    assert res.certificate.exponents in ((1, 1, -1), (-1, -1, 1))
    assert res.certificate.replay([2, 3, 6])
    minus = independent_in_R_star_mod_N(be, None, [-1])
    assert not minus and minus.certificate.exponents == (2,)
    assert minus.certificate.replay([-1])


def test_independence_laurent():
    dom = LaurentRing(["q12", "q13", "q23"])
    be = CoeffBackend(dom)
    ps = [dom.param(k) for k in range(3)]
    assert independent_in_R_star_mod_N(be, None, ps)
    res = independent_in_R_star_mod_N(be, None, [ps[0], ps[0], ps[2]])
    assert not res and res.certificate.replay([ps[0], ps[0], ps[2]])


def test_independence_with_twist():
    be = CoeffBackend(LQ, (scale_q(2),))
    res = independent_in_R_star_mod_N(be, None, [q, 2 * q])
    assert not res
    assert res.certificate.replay([q, 2 * q])
    assert independent_in_R_star_mod_N(be, None, [q, 3 * q])


def test_independence_invariances():
    rng = random.Random(5)
    dom = LaurentRing(["a", "b"])
    sigma = MonomialMap((2, 1), ((1, 0), (0, 1)))
    be = CoeffBackend(dom, (sigma,))
    nu = dom.coerce(2)  # a^{-1} sigma(a)
    for _ in range(30):
        units = [random_unit(rng, dom) for _ in range(rng.randint(1, 3))]
        base = bool(independent_in_R_star_mod_N(be, None, units))
        assert bool(independent_in_R_star_mod_N(be, None, units[::-1])) == base
        k = rng.randrange(len(units))
        moved = list(units)
        moved[k] = moved[k] * nu
        assert bool(independent_in_R_star_mod_N(be, None, moved)) == base
        res = independent_in_R_star_mod_N(be, None, units)
        if not res:
            assert res.certificate.replay(units)


def test_sigma_power_coherence():
    dom = LaurentRing(["a", "b"])
    perm = MonomialMap((3, Fraction(1, 2)), ((0, 1), (1, 0)))
    be = CoeffBackend(dom, (perm,))
    lat = n_lattice(be)
    rng = random.Random(6)
    for _ in range(20):
        z = random_unit(rng, dom)
        for k in range(-5, 6):
            d = unit_log(dom, apply_sigma(be, 0, z, k)) - unit_log(dom, z)
            assert lat.contains(d)


def test_reduce_is_canonical():
    be = CoeffBackend(LQ, (scale_q(6),))
    lat = n_lattice(be)
    a = unit_log(LQ, 5 * q)
    b = unit_log(LQ, 30 * q)  # differs by 6 in N
    assert lat.reduce(a) == lat.reduce(b)
    assert lat.reduce(a) != lat.reduce(unit_log(LQ, 10 * q))


def test_fraction_field_units():
    FF = FractionField(LQ)
    be = CoeffBackend(FF, (scale_q(2),))
    u = FF.coerce(q + 1)
    v = FF.coerce(2 * q + 1)
    lg = unit_log(FF, u / v)
    assert not lg.is_zero()
    # (q+1)^{-1} sigma(q+1) = (2q+1)/(q+1) lies in N
    res = independent_in_R_star_mod_N(be, None, [v / u])
    assert not res and res.certificate.replay([v / u])


def test_unitlog_arithmetic():
    a = UnitLog.from_dict({("p", 2): 1}, 1)
    assert (a + a).as_dict() == {("p", 2): 2} and (a + a).torsion == 0
    assert (a - a).is_zero()
    assert (a * 3).as_dict() == {("p", 2): 3}
