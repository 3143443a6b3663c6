"""Ore localization of the coefficients and skew quantum polynomial rings.

:func:`localize_coefficients` replaces a Laurent-parameter coefficient ring
by its field of fractions, lifting ``sigma_i`` and ``delta_i``; the canonical
map ``psi`` sends ``sum a_t x^t`` to ``sum (a_t/1) x^t``.

:func:`build_quantum_laurent` inverts the first ``r`` variables of a
quasi-commutative bijective extension.  Both constructions feed the
classifiers at the end of the module.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coeffs import CoeffBackend
from .errors import (
    IndependenceFails,
    InvalidExponent,
    NotADomain,
    NotBijective,
    NotLaurent,
    NotQuasiCommutative,
)
from .morphisms import (
    Classification,
    Endomorphism,
    _diagonal,
    _not_endo,
    _not_met,
    classify_quasi_commutative,
    general_hypothesis,
)
from .quasi import block_exchange_scalar
from .ratfunc import FractionField
from .ring import Presentation, SkewPoly, leading_term, multiply, smallest_term

__all__ = [
    "Localization",
    "QuantumLaurentRing",
    "localize_coefficients",
    "build_quantum_laurent",
    "laurent_commutation",
    "classify_quantum",
    "classify_over_ore",
]


@dataclass(frozen=True)
class Localization:
    """``S^{-1}A`` with ``S`` the nonzero coefficients, and the map ``psi``."""

    source: Presentation
    presentation: Presentation

    @property
    def is_identity(self):
        return self.source is self.presentation

    def psi(self, f):
        """``sum a_t x^t -> sum (a_t / 1) x^t``."""
        if self.is_identity:
            return f
        dom = self.presentation.backend.domain
        return SkewPoly({e: dom.embed(a) for e, a in f.items()})

    def pull_back(self, f):
        """Preimage under ``psi``, or ``None`` if some coefficient is a proper fraction."""
        if self.is_identity:
            return f
        out = {}
        for e, a in f.items():
            if a.den != self.presentation.backend.domain.base.one:
                return None
            out[e] = a.num
        return SkewPoly(out)

    def check_homomorphism(self, pairs):
        """Pairs ``(f, g)`` for which ``psi(fg) != psi(f) psi(g)``."""
        p, lp = self.source, self.presentation
        return [(f, g) for f, g in pairs
                if self.psi(multiply(p, f, g)) != multiply(lp, self.psi(f), self.psi(g))]


def localize_coefficients(p):
    """Pass to the fraction field of the coefficient domain."""
    kind = p.backend.kind
    if kind in ("rational", "prime", "fraction"):
        return Localization(p, p)
    if kind != "laurent":
        raise NotADomain(f"cannot localize over {p.backend.domain!r}")
    ff = FractionField(p.backend.domain)
    be = CoeffBackend(ff, p.backend.sigma, p.backend.delta)
    lp = Presentation(be, p.n, p.c, p.d_lower, p.r, p.names)
    return Localization(p, lp)


@dataclass(frozen=True)
class QuantumLaurentRing:
    """A skew quantum polynomial ring: the first ``r`` variables are units."""

    presentation: Presentation

    @property
    def n(self):
        return self.presentation.n

    @property
    def r(self):
        return self.presentation.r


def build_quantum_laurent(p, r):
    """Invert ``x_1 .. x_r`` in a quasi-commutative bijective extension."""
    if not p.quasi_commutative:
        raise NotQuasiCommutative("Laurent variables need a quasi-commutative extension")
    if not p.units_c:
        raise NotBijective("commutation coefficients must all be units")
    if not 0 <= r <= p.n:
        raise InvalidExponent(f"r={r} outside 0..{p.n}")
    return QuantumLaurentRing(p if p.r == r else p.replace(r=r))


def _presentation(qr):
    return qr.presentation if isinstance(qr, QuantumLaurentRing) else qr


def laurent_commutation(qr, i, j, s, t):
    """The scalar ``a`` with ``x_i^t x_j^s = a x_j^s x_i^t``."""
    p = _presentation(qr)
    for idx, k in ((i, t), (j, s)):
        if k < 0 and idx >= p.r:
            raise InvalidExponent(f"negative exponent on non-Laurent variable {p.names[idx]}")
    if i == j or not s or not t:
        return p.backend.one
    if i > j:
        return block_exchange_scalar(p, i, t, j, s)
    return p.backend.inv(block_exchange_scalar(p, j, s, i, t))


def classify_quantum(qr, e):
    """Diagonal classification ``x_w -> lambda_w x_w^eps`` on skew quantum rings."""
    p = _presentation(qr)
    if not p.quasi_commutative or not p.units_c:
        raise NotLaurent("need a skew quantum polynomial ring (quasi-commutative, unit q's)")
    if p.n < 3:
        return _not_met(f"n={p.n} < 3: fewer than three nonzero images possible")
    gen = general_hypothesis(p)
    if not gen:
        return _not_met("not general: multiparameters are dependent in R*/N")
    nonzero = [w for w, y in enumerate(e.images) if y]
    if len(nonzero) < 3:
        return _not_met(f"only {len(nonzero)} nonzero images, need at least three")
    be = p.backend
    for w in nonzero:
        y = e.images[w]
        if not be.is_unit(leading_term(y)[1]):
            return _not_met(f"leading coefficient of the image of {p.names[w]} is not a unit")
        if not be.is_unit(smallest_term(y)[1]):
            return _not_met(f"smallest coefficient of the image of {p.names[w]} is not a unit")
    rep = e.validate()
    if not rep.ok:
        return _not_endo(rep)
    return _diagonal(p, e)


def classify_over_ore(p, e):
    """Classify after lifting ``e`` to the localized ring; scalars pulled back along ``psi``."""
    if not p.quasi_commutative:
        raise NotQuasiCommutative("classifier needs a quasi-commutative presentation")
    loc = localize_coefficients(p)
    lp = loc.presentation
    gen = general_hypothesis(lp)
    if not gen:
        raise IndependenceFails("multiparameters are not independent in (S^{-1}R)*/N")
    nonzero = [w for w, y in enumerate(e.images) if y]
    if len(nonzero) < 3:
        return _not_met(f"only {len(nonzero)} nonzero images, need at least three")
    le = Endomorphism(lp, tuple(loc.psi(y) for y in e.images))
    cls = classify_quantum(lp, le) if lp.r else classify_quasi_commutative(lp, le)
    if cls.verdict != "Diagonal":
        return cls
    scalars = []
    for a in cls.scalars:
        back = loc.pull_back(SkewPoly({(0,) * p.n: a}))
        scalars.append(next(iter(back.values())) if back else p.backend.zero)
    non_units = tuple(w for w, a in enumerate(scalars) if not p.backend.is_unit(a))
    return Classification("Diagonal", scalars=tuple(scalars), epsilon=cls.epsilon, non_units=non_units)
