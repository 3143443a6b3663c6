"""Endomorphisms fixing the coefficient ring.

An :class:`Endomorphism` is given by the images ``y_i`` of the variables.
It is checked against the defining relations by the rewriting engine
(:func:`validate_endomorphism`) before it may be applied.  The classifiers
check the hypotheses of the diagonal and affine classification results and
then read the scalars off the validated images.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    LaurentUnsupported,
    NonUnitScalar,
    NotFiltered,
    NotQuantumSpace,
    NotQuasiCommutative,
    NotValidated,
    SkewPBWError,
)
from .coeffs import apply_delta, apply_sigma
from .ring import (
    SkewPoly,
    ValidationReport,
    degree,
    leading_term,
    multiply,
    smallest_term,
)
from .units import independent_in_R_star_mod_N

__all__ = [
    "Endomorphism",
    "Classification",
    "validate_endomorphism",
    "apply_endomorphism",
    "substitute",
    "monomial_inverse",
    "compose",
    "general_hypothesis",
    "leading_exponent_check",
    "classify_quasi_commutative",
    "classify_filtered",
    "invert_diagonal",
    "alev_chamarie_linear_check",
]


def monomial_inverse(p, f):
    """Inverse of a unit term ``a x^e`` (``e`` supported on Laurent slots).

    Returns ``None`` when ``f`` is not such a term or ``a`` is not a unit.
    """
    if len(f) != 1:
        return None
    (e, a), = f.items()
    if any(e[k] for k in range(p.r, p.n)) or not p.backend.is_unit(a):
        return None
    neg = tuple(-x for x in e)
    prod = multiply(p, p.monomial(neg), f)
    (_, s), = prod.items()
    return p.monomial(neg, p.backend.inv(s))


class _Substituter:
    def __init__(self, p, images):
        self.p = p
        self.images = images
        self.powers = {}

    def power(self, i, k):
        key = (i, k)
        hit = self.powers.get(key)
        if hit is not None:
            return hit
        p = self.p
        if k == 0:
            out = p.one()
        elif k < 0:
            inv = monomial_inverse(p, self.images[i])
            if inv is None:
                raise NotValidated(f"image of {p.names[i]} is not invertible")
            out = multiply(p, self.power(i, k + 1), inv)
        else:
            out = multiply(p, self.power(i, k - 1), self.images[i])
        self.powers[key] = out
        return out

    def __call__(self, f):
        p = self.p
        total = {}
        for t, a in f.items():
            term = p.const(a)
            for i, k in enumerate(t):
                if k:
                    term = multiply(p, term, self.power(i, k))
            for e, b in term.items():
                s = total.get(e)
                s = b if s is None else s + b
                if s:
                    total[e] = s
                else:
                    total.pop(e, None)
        return SkewPoly(total)


def substitute(p, images, f):
    """``f(y_1, ..., y_n)`` with coefficients kept on the left."""
    return _Substituter(p, tuple(images))(f)


@dataclass(eq=False)
class Endomorphism:
    """Images of ``x_1 .. x_n`` under a map fixing the coefficients."""

    over: object
    images: tuple
    _report: ValidationReport | None = field(default=None, repr=False)
    _subst: object = field(default=None, repr=False)

    def __post_init__(self):
        p = self.over
        images = tuple(self.images)
        if len(images) != p.n:
            raise SkewPBWError(f"need {p.n} images, got {len(images)}")
        clean = []
        for y in images:
            y = SkewPoly({e: p.backend.coerce(a) for e, a in y.items()})
            for e in y:
                p.check_exponent(e)
            clean.append(y)
        self.images = tuple(clean)

    @classmethod
    def identity(cls, p):
        return cls(p, tuple(p.var(i) for i in range(p.n)))

    def validate(self):
        if self._report is None:
            self._report = validate_endomorphism(self.over, self.images)
        return self._report

    @property
    def is_valid(self):
        return self.validate().ok

    def __call__(self, f):
        return apply_endomorphism(self, f)

    def __eq__(self, other):
        return isinstance(other, Endomorphism) and self.over == other.over and self.images == other.images

    def __hash__(self):
        return hash(self.images)


def validate_endomorphism(p, images):
    """Check the defining relations on the images (report, never raises)."""
    rep = ValidationReport()
    images = tuple(images)
    be = p.backend
    sub = _Substituter(p, images)
    for i, y in enumerate(images[: p.r]):
        if monomial_inverse(p, y) is None:
            if len(y) == 1:
                rep.add("laurent-unit", f"image of {p.names[i]} is not a unit", i)
            else:
                rep.add("laurent-unit",
                        f"image of {p.names[i]} is not a unit monomial; invertibility unverifiable", i)
    for j in range(p.n):
        for i in range(j):
            lhs = multiply(p, images[j], images[i])
            rhs = multiply(p, images[i], images[j]).scale(p.c[j][i])
            d = p.d_lower.get((j, i))
            if d:
                rhs = rhs + sub(d)
            if lhs != rhs:
                rep.add("relation",
                        f"relation ({p.names[j]}, {p.names[i]}) fails on the images", (j, i))
    for i, y in enumerate(images):
        for a in be.generators():
            lhs = multiply(p, y, p.const(a))
            rhs = multiply(p, p.const(apply_sigma(be, i, a)), y)
            da = apply_delta(be, i, a)
            if da:
                rhs = rhs + p.const(da)
            if lhs != rhs:
                rep.add("coefficient",
                        f"image of {p.names[i]} does not commute with {be.domain.format(a)} as {p.names[i]} does",
                        (i, a))
    return rep


def apply_endomorphism(e, f):
    """``e(f)``: substitute the images and evaluate with the engine."""
    if e._report is None:
        raise NotValidated("call validate() before applying an endomorphism")
    if not e._report.ok:
        raise NotValidated("endomorphism failed validation")
    if e._subst is None:
        e._subst = _Substituter(e.over, e.images)
    return e._subst(f)


def compose(e, f):
    """``e o f``: ``x_i -> e(f(x_i))``."""
    return Endomorphism(e.over, tuple(apply_endomorphism(e, y) for y in f.images))


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    """Outcome of a classifier.

    ``verdict`` is one of ``Diagonal``, ``Affine``, ``HypothesesNotMet`` and
    ``NotEndomorphism``.  ``scalars`` holds ``lambda_w``, ``constants`` the
    affine ``a_w0``, ``non_units`` the indices whose ``lambda_w`` is not a unit.
    """

    verdict: str
    scalars: tuple = ()
    epsilon: int | None = None
    constants: tuple = ()
    reasons: tuple = ()
    witness: object = None
    non_units: tuple = ()

    @property
    def is_diagonal(self):
        return self.verdict == "Diagonal"


def _not_met(*reasons):
    return Classification("HypothesesNotMet", reasons=tuple(reasons))


def _not_endo(report):
    v = report.violations[0]
    return Classification("NotEndomorphism", reasons=tuple(str(x) for x in report), witness=v.witness)


def general_hypothesis(p):
    """Independence of the commutation units ``c_{ji}`` (``j > i``) in ``R*/N``."""
    units = [p.c[j][i] for j in range(p.n) for i in range(j)]
    if not all(p.backend.is_unit(u) for u in units):
        return None
    return independent_in_R_star_mod_N(p.backend, None, units)


def leading_exponent_check(p, e):
    """Pairs violating ``l_r t_s = delta_ri delta_sj + t_r l_s`` for ``r > s``.

    ``l`` and ``t`` are the leading exponents of the images of ``x_i`` and
    ``x_j`` (``i > j``, both nonzero).  Returns ``(i, j, r, s)`` tuples.
    """
    bad = []
    lead = {w: leading_term(y)[0] for w, y in enumerate(e.images) if y}
    for i in lead:
        for j in lead:
            if i <= j:
                continue
            l, t = lead[i], lead[j]
            for r in range(p.n):
                for s in range(r):
                    if l[r] * t[s] != int(r == i and s == j) + t[r] * l[s]:
                        bad.append((i, j, r, s))
    return bad


def _diagonal_shape(p, images):
    """``(scalars, epsilon)`` if every nonzero image is ``lambda_w x_w^eps``."""
    eps = None
    scalars = []
    for w, y in enumerate(images):
        if not y:
            scalars.append(p.backend.zero)
            continue
        if len(y) != 1:
            return None
        (ex, a), = y.items()
        sign = ex[w]
        if sign not in (1, -1) or any(x for k, x in enumerate(ex) if k != w):
            return None
        if eps is None:
            eps = sign
        elif eps != sign:
            return None
        scalars.append(a)
    return tuple(scalars), eps or 1


def _diagonal(p, e, report_nonunits=True):
    shape = _diagonal_shape(p, e.images)
    if shape is None:
        w = next(w for w, y in enumerate(e.images)
                 if y and (len(y) != 1 or sum(abs(x) for x in next(iter(y))) != 1 or next(iter(y))[w] == 0))
        return Classification(
            "NotEndomorphism",
            reasons=(f"image of {p.names[w]} is not a scalar multiple of {p.names[w]}^(+-1) "
                     "although the relations hold",),
            witness=("shape", w))
    scalars, eps = shape
    non_units = tuple(w for w, a in enumerate(scalars) if not p.backend.is_unit(a))
    return Classification("Diagonal", scalars=scalars, epsilon=eps, non_units=non_units)


def classify_quasi_commutative(p, e):
    """Diagonal classification of endomorphisms of a general quasi-commutative ring."""
    if not p.quasi_commutative:
        raise NotQuasiCommutative("classifier needs a quasi-commutative presentation")
    if p.r:
        return _not_met("Laurent variables present; use the quantum classifier")
    if p.n < 3:
        return _not_met(f"n={p.n} < 3: fewer than three nonzero images possible")
    gen = general_hypothesis(p)
    if gen is None:
        return _not_met("not general: some commutation coefficient is not a unit")
    if not gen:
        return _not_met("not general: commutation coefficients are dependent in R*/N")
    nonzero = [w for w, y in enumerate(e.images) if y]
    if len(nonzero) < 3:
        return _not_met(f"only {len(nonzero)} nonzero images, need at least three")
    for w in nonzero:
        if not p.backend.is_unit(leading_term(e.images[w])[1]):
            return _not_met(f"leading coefficient of the image of {p.names[w]} is not a unit")
    rep = e.validate()
    if not rep.ok:
        return _not_endo(rep)
    return _diagonal(p, e)


def classify_filtered(p, e):
    """Affine classification ``x_w -> a_w0 + lambda_w x_w`` of filtered endomorphisms."""
    if p.r:
        raise LaurentUnsupported("filtered endomorphisms are defined for r = 0")
    for w, y in enumerate(e.images):
        if y and degree(y) > 1:
            raise NotFiltered(f"image of {p.names[w]} has degree {degree(y)} > 1")
    rep = e.validate()
    if not rep.ok:
        return _not_endo(rep)
    from .quasi import associated_graded

    gr = associated_graded(p).presentation
    be = p.backend
    top = []
    count = 0
    for w, y in enumerate(e.images):
        lin = SkewPoly({ex: a for ex, a in y.items() if sum(ex) == 1})
        if lin:
            if not be.is_unit(leading_term(lin)[1]):
                return _not_met(f"leading coefficient of the image of {p.names[w]} is not a unit")
            count += 1
        top.append(lin)
    if count < 3:
        return _not_met(f"only {count} images outside F_0, need at least three")
    ge = Endomorphism(gr, tuple(top))
    cls = classify_quasi_commutative(gr, ge)
    if cls.verdict != "Diagonal":
        if cls.verdict == "HypothesesNotMet":
            return _not_met(*("Gr: " + r for r in cls.reasons))
        return cls
    zero = (0,) * p.n
    consts = tuple(y.get(zero, be.zero) for y in e.images)
    return Classification("Affine", scalars=cls.scalars, epsilon=1, constants=consts,
                          non_units=cls.non_units)


def invert_diagonal(e, classification=None):
    """The inverse ``mu`` of a diagonal endomorphism with unit scalars.

    For ``eps = 1`` this is ``x_w -> lambda_w^{-1} x_w``.  For ``eps = -1``
    the scalar is solved with the engine: ``mu(x_w) = beta_w x_w^{-1}`` with
    ``beta_w`` chosen so that ``e(mu(x_w)) = x_w``.
    """
    p = e.over
    if not e.is_valid:
        raise NotValidated("endomorphism failed validation")
    shape = _diagonal_shape(p, e.images)
    if shape is None or (classification is not None and classification.verdict != "Diagonal"):
        raise NonUnitScalar("not a diagonal endomorphism")
    scalars, eps = shape
    be = p.backend
    for w, a in enumerate(scalars):
        if not be.is_unit(a):
            raise NonUnitScalar(f"lambda_{w + 1} = {a!r} is not a unit")
    images = []
    for w, a in enumerate(scalars):
        if eps == 1:
            images.append(p.var(w).scale(be.inv(a)))
        else:
            # e(beta x_w^{-1}) = beta * e(x_w)^{-1} = beta * s x_w
            inv = monomial_inverse(p, e.images[w])
            (_, s), = inv.items()
            images.append(p.var(w, -1).scale(be.inv(s)))
    mu = Endomorphism(p, tuple(images))
    if not mu.is_valid:
        raise NonUnitScalar("the candidate inverse does not satisfy the relations")
    for w in range(p.n):
        x = p.var(w)
        if apply_endomorphism(e, apply_endomorphism(mu, x)) != x or \
                apply_endomorphism(mu, apply_endomorphism(e, x)) != x:
            raise NonUnitScalar(f"composite is not the identity on {p.names[w]}")
    return mu


def alev_chamarie_linear_check(q, alpha, backend=None):
    """Whether ``alpha_ik alpha_jl (1 - q_ij q_lk) = alpha_il alpha_jk (q_ij - q_lk)``
    for all ``i < j`` and ``k <= l``.

    ``q`` is the multiparameter matrix (``x_i x_j = q_ij x_j x_i``) and
    ``alpha`` the matrix of the linear map ``x_i -> sum_k alpha_ik x_k``.
    Passing a backend with non-trivial automorphisms raises
    :class:`NotQuantumSpace`.
    """
    if backend is not None and any(m is not None for m in backend.sigma):
        raise NotQuantumSpace("the criterion is for quantum spaces (all sigma_i = id)")
    if backend is not None and backend.has_derivations():
        raise NotQuantumSpace("the criterion is for quantum spaces (no derivations)")
    n = len(q)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l in range(k, n):
                    lhs = alpha[i][k] * alpha[j][l] * (1 - q[i][j] * q[l][k])
                    rhs = alpha[i][l] * alpha[j][k] * (q[i][j] - q[l][k])
                    if lhs != rhs:
                        return False
    return True
