import random
from fractions import Fraction
from pathlib import Path

import pytest

from skewpbw import (
    CoeffBackend,
    LaurentRing,
    MonomialMap,
    Presentation,
    SkewPoly,
    load_catalog,
    load_document,
)

ROOT = Path(__file__).resolve().parent.parent
DEMO_RINGS = ROOT / "demos" / "rings"


def demo(name):
    return load_document(DEMO_RINGS / f"{name}.json")


def coefficient_pool(dom):
    """Seven coefficients mixing scalars and parameter monomials."""
    base = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 3), Fraction(-5, 2)]
    pool = [dom.coerce(c) for c in base]
    params = list(getattr(dom, "params", ()))
    if params:
        pool.append(dom.param(params[0]))
        pool.append(dom.param(params[-1], -1) + dom.coerce(3))
    else:
        pool += [dom.coerce(7), dom.coerce(Fraction(-3, 4))]
    return pool


def random_poly(p, rng, max_terms=4, max_deg=3, pool=None):
    """Random element: at most ``max_terms`` terms, each of total degree <= ``max_deg``."""
    pool = pool or coefficient_pool(p.backend.domain)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_deg)
        e = [0] * p.n
        for _ in range(d):
            e[rng.randrange(p.n)] += 1
        for k in range(p.r):
            if e[k] and rng.random() < 0.5:
                e[k] = -e[k]
        terms[tuple(e)] = terms.get(tuple(e), p.backend.zero) + rng.choice(pool)
    return SkewPoly(terms)


def laurent_ring(params):
    return LaurentRing(params)


def twisted_plane():
    """Quantum plane with sigma_2(q) = 2q."""
    dom = LaurentRing(["q"])
    sigma = (None, MonomialMap((2,), ((1,),)))
    be = CoeffBackend(dom, sigma)
    return Presentation(be, 2, ((None, None), (dom.param("q"), None)))


def quantum_space(params_c, r=0, sigma=()):
    """``n``-variable space with ``c[j][i]`` given by parameter names (lower triangle)."""
    names = sorted({x for row in params_c for x in row if x})
    dom = LaurentRing(names)
    n = len(params_c)
    c = [[None] * n for _ in range(n)]
    for j, row in enumerate(params_c):
        for i, name in enumerate(row):
            if i < j:
                c[j][i] = dom.param(name) if isinstance(name, str) else dom.coerce(name)
    return Presentation(CoeffBackend(dom, sigma), n, tuple(tuple(row) for row in c), r=r)


@pytest.fixture
def rng():
    return random.Random(20261019)


@pytest.fixture(params=["quantum-plane", "quantum-torus", "multiplicative-weyl",
                        "skew-3dim", "diffusion", "dqsq"])
def catalog_doc(request):
    return load_catalog(request.param)
