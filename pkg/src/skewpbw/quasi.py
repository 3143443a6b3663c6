"""Quasi-commutative extensions: closed-form commutation scalars, the
associated graded ring and the iterated skew polynomial description.

In a quasi-commutative extension ``x^t x^l = a x^{t+l}`` for a unit ``a``.
:func:`closed_form_coefficient` assembles ``a`` block by block: each power
``x_i^{l_i}`` is carried leftwards past the blocks ``x_k^{m_k}`` (``k > i``)
already in place, picking up the twisted scalar of that exchange, and the
scalar is then pushed through the prefix ``x_1^{m_1} ... x_{k-1}^{m_{k-1}}``
by the corresponding composite of automorphisms.  No rewriting is involved.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coeffs import CoeffBackend, MonomialMap, apply_sigma
from .errors import InvalidPresentation, NotEndomorphismType, NotQuasiCommutative
from .ring import Presentation, SkewPoly, twisted_product
from .units import n_lattice, unit_log

__all__ = [
    "closed_form_coefficient",
    "block_exchange_scalar",
    "unit_class_of_product",
    "GradedRing",
    "associated_graded",
    "IteratedStep",
    "IteratedSkewData",
    "to_iterated_skew",
    "from_iterated_skew",
]


def _require_qc(p):
    if not p.quasi_commutative:
        raise NotQuasiCommutative("presentation has lower-order terms or derivations")
    if not p.units_c:
        raise NotQuasiCommutative("commutation coefficients must be units")


def block_exchange_scalar(p, k, m, i, l):
    """``a`` with ``x_k^m x_i^l = a x_i^l x_k^m`` for ``k > i``."""
    return twisted_product(p.backend, k, twisted_product(p.backend, i, p.c[k][i], l), m)


def _push_through(p, prefix, a):
    """``x^prefix a = sigma^prefix(a) x^prefix``."""
    for idx in range(len(prefix) - 1, -1, -1):
        if prefix[idx]:
            a = apply_sigma(p.backend, idx, a, prefix[idx])
    return a


def closed_form_coefficient(p, t, l):
    """The unit ``a`` with ``x^t x^l = a x^{t+l}``.

    Integer exponents are accepted on the Laurent variables.
    """
    _require_qc(p)
    t, l = tuple(t), tuple(l)
    p.check_exponent(t)
    p.check_exponent(l)
    n = p.n
    m = list(t)
    coeff = p.backend.one
    for i in range(n):
        if not l[i]:
            continue
        for k in range(n - 1, i, -1):
            if m[k]:
                s = block_exchange_scalar(p, k, m[k], i, l[i])
                coeff = coeff * _push_through(p, m[:k], s)
        m[i] += l[i]
    return coeff


def unit_class_of_product(p, t, l, lattice=None):
    """Classes in ``R*/N`` of the closed form and of ``prod c_{ji}^{t_j l_i}``.

    Returns ``(closed_class, predicted_class)``; both are canonical
    :class:`~skewpbw.units.UnitLog` representatives and agree whenever the
    presentation is consistent.
    """
    a = closed_form_coefficient(p, t, l)
    be = p.backend
    pred = be.one
    for j in range(p.n):
        for i in range(j):
            k = t[j] * l[i]
            if k:
                c = p.c[j][i] if k > 0 else be.inv(p.c[j][i])
                for _ in range(abs(k)):
                    pred = pred * c
    la, lp = unit_log(be, a), unit_log(be, pred)
    if lattice is None:
        lattice = n_lattice(be, seeds=la.labels + lp.labels)
    return lattice.reduce(la), lattice.reduce(lp)


# ---------------------------------------------------------------------------
# associated graded ring


@dataclass(frozen=True)
class GradedRing:
    """``Gr(A)`` realised as a quasi-commutative presentation."""

    presentation: Presentation
    source: Presentation

    @property
    def bijective(self):
        return self.presentation.bijective


def associated_graded(p):
    """Zero the lower-order terms and derivations of ``p``."""
    if p.r:
        raise InvalidPresentation("the degree filtration is only defined for r = 0")
    if p.quasi_commutative:
        return GradedRing(p, p)
    gr = p.replace(backend=p.backend.without_derivations(), d_lower={})
    return GradedRing(gr, p)


# ---------------------------------------------------------------------------
# iterated skew polynomial rings


@dataclass(frozen=True)
class IteratedStep:
    """Adjoin ``x_j`` with ``theta_j``: ``sigma`` on coefficients and the
    images ``theta_j(x_i)`` of the earlier variables (as polynomials)."""

    sigma: MonomialMap | None
    images: tuple


@dataclass(frozen=True)
class IteratedSkewData:
    """``R[x_1; theta_1][x_2; theta_2] ... [x_n; theta_n]``."""

    domain: object
    steps: tuple
    names: tuple


def to_iterated_skew(p):
    """Describe a quasi-commutative ``p`` as an iterated skew polynomial ring."""
    if not p.quasi_commutative:
        raise NotQuasiCommutative("only quasi-commutative extensions are iterated skew rings")
    if p.r:
        raise NotQuasiCommutative("Laurent variables are not part of an iterated skew ring")
    steps = []
    for j in range(p.n):
        imgs = tuple(p.monomial(tuple(int(k == i) for k in range(p.n)), p.c[j][i]) for i in range(j))
        steps.append(IteratedStep(p.backend.sigma_map(j), imgs))
    return IteratedSkewData(p.backend.domain, tuple(steps), p.names)


def from_iterated_skew(data):
    """Rebuild the quasi-commutative presentation from iterated skew data."""
    n = len(data.steps)
    dom = data.domain
    c = [[None] * n for _ in range(n)]
    for j, step in enumerate(data.steps):
        if len(step.images) != j:
            raise NotEndomorphismType(f"step {j + 1} must give images of the {j} earlier variables")
        for i, img in enumerate(step.images):
            target = tuple(int(k == i) for k in range(n))
            if not isinstance(img, SkewPoly) or set(img) != {target}:
                raise NotEndomorphismType(
                    f"theta_{j + 1}(x{i + 1}) must be a scalar multiple of x{i + 1}")
            a = img[target]
            if not dom.is_unit(a):
                raise NotEndomorphismType(f"theta_{j + 1}(x{i + 1}) has a non-unit scalar")
            c[j][i] = a
    backend = CoeffBackend(dom, tuple(s.sigma for s in data.steps), ())
    return Presentation(backend, n, tuple(tuple(row) for row in c), names=data.names)
