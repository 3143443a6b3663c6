"""Skew PBW presentations, left normal forms and the rewriting multiplier.

Variables are indexed from 0 internally; names default to ``x1 .. xn``.
A :class:`SkewPoly` is an immutable map from exponent tuples to nonzero
coefficients, read as ``sum a_t x^t`` with coefficients on the left and
monomials ``x^t = x_1^{t_1} ... x_n^{t_n}`` in increasing variable order.
Only the first ``r`` variables may carry negative exponents.

The multiplier rewrites

* ``x_i a -> sigma_i(a) x_i + delta_i(a)`` for coefficients ``a``,
* ``x_j x_i -> c_{j,i} x_i x_j + d_lower(j, i)`` for ``j > i``,
* Laurent swaps ``x_j^{e} x_i^{f} -> gamma x_i^{f} x_j^{e}`` (``e, f = +-1``)
  in quasi-commutative Laurent presentations,

until every word is in normal form.  Products of a single variable with a
normal monomial are memoised per presentation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .coeffs import CoeffBackend, apply_delta, apply_sigma
from .errors import InvalidPresentation, LaurentUnsupported, ZeroPolynomial

__all__ = [
    "SkewPoly",
    "Presentation",
    "Violation",
    "ValidationReport",
    "multiply",
    "validate_presentation",
    "leading_term",
    "smallest_term",
    "degree",
    "in_filtration",
    "top_degree_part",
    "twisted_product",
]


class SkewPoly(Mapping):
    """Immutable polynomial in left normal form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    def __getitem__(self, e):
        return self._terms[tuple(e)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"SkewPoly({self._terms!r})"

    def __add__(self, other):
        out = dict(self._terms)
        for e, c in other.items():
            if e in out:
                out[e] = out[e] + c
            else:
                out[e] = c
        return SkewPoly(out)

    def __neg__(self):
        return SkewPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        """Left scalar multiple ``a * self`` (coefficients commute)."""
        if not a:
            return SkewPoly()
        return SkewPoly({e: a * c for e, c in self._terms.items()})

    def support(self):
        return sorted(self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def coefficient(self, e, default=None):
        return self._terms.get(tuple(e), default)


def _add_into(acc, e, c):
    if e in acc:
        s = acc[e] + c
        if s:
            acc[e] = s
        else:
            del acc[e]
    elif c:
        acc[e] = c


def twisted_product(backend, i, x, m):
    """``x sigma_i(x) ... sigma_i^{m-1}(x)`` for ``m >= 0``; for ``m < 0`` the
    product of ``sigma_i^{-v}(x^{-1})`` over ``v = 1..|m|``.

    This is the scalar picked up by moving ``x_i^m`` across a variable whose
    single-step commutation scalar is ``x``.
    """
    out = backend.one
    if m >= 0:
        for v in range(m):
            out = out * apply_sigma(backend, i, x, v)
    else:
        xinv = backend.inv(x)
        for v in range(1, -m + 1):
            out = out * apply_sigma(backend, i, xinv, -v)
    return out


@dataclass(eq=False)
class Presentation:
    """A skew PBW extension (or skew quantum polynomial ring when ``r > 0``).

    ``c[j][i]`` is the commutation coefficient of ``x_j x_i = c[j][i] x_i x_j
    + d_lower[(j, i)]``; entries with ``j < i`` default to the inverse of
    ``c[i][j]`` when it is a unit.  ``d_lower`` is keyed by ``(j, i)`` with
    ``j > i``.
    """

    backend: CoeffBackend
    n: int
    c: tuple
    d_lower: Mapping = field(default_factory=dict)
    r: int = 0
    names: tuple = ()
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise InvalidPresentation("need at least one variable")
        if not 0 <= self.r <= n:
            raise InvalidPresentation(f"Laurent count r={self.r} outside 0..{n}")
        self.backend = self.backend.with_nvars(n)
        if not self.names:
            self.names = tuple(f"x{i + 1}" for i in range(n))
        self.names = tuple(self.names)
        if len(self.names) != n or len(set(self.names)) != n:
            raise InvalidPresentation("variable names must be n distinct strings")
        be = self.backend
        if len(self.c) != n or any(len(row) != n for row in self.c):
            raise InvalidPresentation("commutation matrix must be n x n")
        c = [[None] * n for _ in range(n)]
        for j, row in enumerate(self.c):
            for i, v in enumerate(row):
                if v is not None:
                    c[j][i] = be.coerce(v)
        for i in range(n):
            if c[i][i] is None:
                c[i][i] = be.one
        for j in range(n):
            for i in range(j):
                if c[j][i] is None:
                    raise InvalidPresentation(f"missing c[{j + 1},{i + 1}]")
                if not c[j][i]:
                    raise InvalidPresentation(f"c[{j + 1},{i + 1}] must be nonzero")
                if c[i][j] is None and be.is_unit(c[j][i]):
                    c[i][j] = be.inv(c[j][i])
        self.c = tuple(tuple(row) for row in c)
        d = {}
        for key, poly in dict(self.d_lower).items():
            j, i = key
            if not (0 <= i < j < n):
                raise InvalidPresentation(f"d_lower key ({j + 1},{i + 1}) must satisfy j > i")
            poly = SkewPoly({e: be.coerce(v) for e, v in poly.items()})
            for e in poly:
                if len(e) != n or any(x < 0 for x in e) or sum(e) > 1:
                    raise InvalidPresentation(f"d_lower({j + 1},{i + 1}) must lie in R + R x_1 + ... + R x_n")
            if poly:
                d[(j, i)] = poly
        self.d_lower = d
        if self.r > 0:
            if not self.quasi_commutative:
                raise InvalidPresentation("Laurent variables need a quasi-commutative presentation")
            if not self.units_c:
                raise InvalidPresentation("Laurent variables need unit commutation coefficients")

    # -- flags ------------------------------------------------------------

    @property
    def quasi_commutative(self):
        return not self.d_lower and not self.backend.has_derivations()

    @property
    def units_c(self):
        be = self.backend
        return all(self.c[j][i] is not None and be.is_unit(self.c[j][i])
                   for j in range(self.n) for i in range(self.n))

    @property
    def bijective(self):
        # every supported automorphism is invertible
        be = self.backend
        return all(be.is_unit(self.c[j][i]) for j in range(self.n) for i in range(j))

    @property
    def laurent(self):
        return self.r > 0

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self.backend == other.backend and self.n == other.n and self.r == other.r
                and self.c == other.c and self.d_lower == other.d_lower and self.names == other.names)

    def replace(self, **changes):
        kw = dict(backend=self.backend, n=self.n, c=self.c, d_lower=self.d_lower,
                  r=self.r, names=self.names)
        kw.update(changes)
        return Presentation(**kw)

    # -- element constructors ---------------------------------------------

    def zero(self):
        return SkewPoly()

    def one(self):
        return self.const(self.backend.one)

    def const(self, a):
        return SkewPoly({(0,) * self.n: self.backend.coerce(a)})

    def var(self, i, power=1):
        return self.monomial(tuple(power if k == i else 0 for k in range(self.n)))

    def monomial(self, exps, coeff=None):
        exps = tuple(exps)
        self.check_exponent(exps)
        a = self.backend.one if coeff is None else self.backend.coerce(coeff)
        return SkewPoly({exps: a})

    def check_exponent(self, exps):
        if len(exps) != self.n:
            raise InvalidPresentation(f"exponent {exps} has wrong length")
        for k in range(self.r, self.n):
            if exps[k] < 0:
                raise InvalidPresentation(f"negative exponent on non-Laurent variable {self.names[k]}")

    def mul(self, f, g):
        return multiply(self, f, g)

    def power(self, f, k):
        out = self.one()
        for _ in range(k):
            out = multiply(self, out, f)
        return out

    def engine(self):
        eng = self._cache.get("engine")
        if eng is None:
            eng = self._cache["engine"] = _Engine(self)
        return eng


class _Engine:
    """Rewriting multiplier for one presentation (memoised)."""

    def __init__(self, p):
        self.p = p
        self.be = p.backend
        self.n = p.n
        self.gen_cache = {}
        self.mono_cache = {}
        self.swap_cache = {}
        self.has_delta = p.backend.has_derivations()

    def swap(self, k, e, j, f):
        """``x_k^e x_j^f = gamma x_j^f x_k^e + d`` for ``j < k``."""
        key = (k, e, j, f)
        hit = self.swap_cache.get(key)
        if hit is not None:
            return hit
        p = self.p
        if e == 1 and f == 1:
            out = (p.c[k][j], p.d_lower.get((k, j)))
        else:
            c = p.c[k][j]
            if not self.be.is_unit(c):
                raise InvalidPresentation("Laurent swap needs a unit commutation coefficient")
            inner = twisted_product(self.be, j, c, f)
            out = (twisted_product(self.be, k, inner, e), None)
        self.swap_cache[key] = out
        return out

    def gen_times_mono(self, k, e, t):
        """``x_k^e * x^t`` as a term dict."""
        key = (k, e, t)
        hit = self.gen_cache.get(key)
        if hit is not None:
            return hit
        j = next((idx for idx, x in enumerate(t) if x), None)
        if j is None or j >= k:
            nt = list(t)
            nt[k] += e
            if k >= self.p.r and nt[k] < 0:
                raise InvalidPresentation(f"negative power of non-Laurent variable {self.p.names[k]}")
            out = {tuple(nt): self.be.one}
        else:
            f = 1 if t[j] > 0 else -1
            rest = list(t)
            rest[j] -= f
            rest = tuple(rest)
            gamma, d = self.swap(k, e, j, f)
            inner = self.gen_times_mono(k, e, rest)
            moved = self.left_letter(j, f, inner)
            out = {}
            for u, a in moved.items():
                _add_into(out, u, gamma * a)
            if d:
                for u, a in self.mul_dicts(dict(d.items()), {rest: self.be.one}).items():
                    _add_into(out, u, a)
        self.gen_cache[key] = out
        return out

    def left_letter(self, k, e, poly):
        """``x_k^e * poly``."""
        out = {}
        for u, a in poly.items():
            sa = apply_sigma(self.be, k, a, e)
            if sa:
                for v, b in self.gen_times_mono(k, e, u).items():
                    _add_into(out, v, sa * b)
            if e == 1 and self.has_delta:
                da = apply_delta(self.be, k, a)
                if da:
                    _add_into(out, u, da)
        return out

    def mono_times_mono(self, s, t):
        key = (s, t)
        hit = self.mono_cache.get(key)
        if hit is not None:
            return hit
        poly = {t: self.be.one}
        for idx in range(self.n - 1, -1, -1):
            e = 1 if s[idx] > 0 else -1
            for _ in range(abs(s[idx])):
                poly = self.left_letter(idx, e, poly)
        self.mono_cache[key] = poly
        return poly

    def mono_times_coeff(self, s, b):
        """``x^s * b`` as a term dict."""
        if not self.has_delta:
            a = b
            for idx in range(self.n - 1, -1, -1):
                if s[idx]:
                    a = apply_sigma(self.be, idx, a, s[idx])
            return {s: a}
        poly = {(0,) * self.n: b}
        for idx in range(self.n - 1, -1, -1):
            e = 1 if s[idx] > 0 else -1
            for _ in range(abs(s[idx])):
                poly = self.left_letter(idx, e, poly)
        return poly

    def mul_dicts(self, f, g):
        out = {}
        for s, a in f.items():
            for t, b in g.items():
                for u, cb in self.mono_times_coeff(s, b).items():
                    coeff = a * cb
                    if not coeff:
                        continue
                    for v, m in self.mono_times_mono(u, t).items():
                        _add_into(out, v, coeff * m)
        return out


def multiply(p, f, g):
    """The product ``f g`` in left normal form."""
    if not f or not g:
        return SkewPoly()
    return SkewPoly(p.engine().mul_dicts(dict(f.items()), dict(g.items())))


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    witness: object = None

    def __str__(self):
        return self.message


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        # truthy when there is something to report
        return bool(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)

    def add(self, kind, message, witness=None):
        self.violations.append(Violation(kind, message, witness))

    def kinds(self):
        return [v.kind for v in self.violations]


def validate_presentation(p):
    """Report every violated constraint of ``p``; an empty report means valid."""
    rep = ValidationReport()
    be, n, c, names = p.backend, p.n, p.c, p.names
    for i in range(n):
        if c[i][i] != be.one:
            rep.add("c_ii", f"c_{{{i + 1}{i + 1}}} != 1", (i, i))
    for i in range(n):
        for j in range(i + 1, n):
            cij, cji = c[i][j], c[j][i]
            if cij is not None and cji is not None and be.is_unit(cji):
                if cij * cji != be.one:
                    rep.add("c_ij*c_ji", f"c_{{{i + 1}{j + 1}}}c_{{{j + 1}{i + 1}}} != 1", (i, j))
    if p.r and not p.quasi_commutative:
        rep.add("laurent", "Laurent presentation must be quasi-commutative")
    gens = be.generators()
    # sigma compatibility on commutative backends: the automorphisms commute
    for i in range(n):
        for j in range(i + 1, n):
            for g in gens:
                a = apply_sigma(be, i, apply_sigma(be, j, g))
                b = apply_sigma(be, j, apply_sigma(be, i, g))
                if a != b:
                    rep.add("sigma-compat",
                            f"sigma_{i + 1} sigma_{j + 1} != sigma_{j + 1} sigma_{i + 1} on {be.domain.format(g)}",
                            (i, j, g))
                    break
    if p.quasi_commutative and p.units_c:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if len({i, j, k}) < 3:
                        continue
                    val = (_Q(p, i, j, k) * _Q(p, j, k, i) * _Q(p, k, i, j))
                    if val != be.one:
                        rep.add("Q-cocycle", f"Q_{{{i + 1}{j + 1}{k + 1}}}Q_{{{j + 1}{k + 1}{i + 1}}}Q_{{{k + 1}{i + 1}{j + 1}}} != 1", (i, j, k))
    if rep.violations:
        return rep
    try:
        _associativity_smoke(p, rep)
    except (InvalidPresentation, ArithmeticError) as exc:
        rep.add("rewriting", f"rewriting failed: {exc}")
    return rep


def _Q(p, i, j, k):
    # Q_{ijk} = q_{ij} sigma_j(q_{ik}), with x_i x_j = q_{ij} x_j x_i
    return p.c[i][j] * apply_sigma(p.backend, j, p.c[i][k])


def _associativity_smoke(p, rep):
    n, nm, fmt = p.n, p.names, p.backend.domain.format
    xs = [p.var(i) for i in range(n)]
    for k in range(n):
        for j in range(k):
            for i in range(j):
                left = multiply(p, multiply(p, xs[k], xs[j]), xs[i])
                right = multiply(p, xs[k], multiply(p, xs[j], xs[i]))
                if left != right:
                    rep.add("associativity",
                            f"({nm[k]} {nm[j]}) {nm[i]} != {nm[k]} ({nm[j]} {nm[i]})", (k, j, i))
    for j in range(n):
        for i in range(j + 1):
            for g in p.backend.generators():
                gp = p.const(g)
                left = multiply(p, multiply(p, xs[j], xs[i]), gp)
                right = multiply(p, xs[j], multiply(p, xs[i], gp))
                if left != right:
                    rep.add("associativity",
                            f"({nm[j]} {nm[i]}) {fmt(g)} != {nm[j]} ({nm[i]} {fmt(g)})", (j, i, g))


# ---------------------------------------------------------------------------
# terms and degrees


def leading_term(f):
    """Lex-greatest exponent and its coefficient."""
    if not f:
        raise ZeroPolynomial("leading term of 0")
    e = max(f)
    return e, f[e]


def smallest_term(f):
    """Lex-least exponent and its coefficient."""
    if not f:
        raise ZeroPolynomial("smallest term of 0")
    e = min(f)
    return e, f[e]


def _require_plain(p):
    if p is not None and p.r > 0:
        raise LaurentUnsupported("the degree filtration is only defined for r = 0")


def degree(f, p=None):
    """Total degree ``max |t|`` over the support."""
    _require_plain(p)
    if not f:
        raise ZeroPolynomial("degree of 0")
    if any(x < 0 for e in f for x in e):
        raise LaurentUnsupported("negative exponents have no filtration degree")
    return max(sum(e) for e in f)


def in_filtration(f, m, p=None):
    _require_plain(p)
    if not f:
        return True
    return degree(f) <= m


def top_degree_part(f):
    d = degree(f)
    return SkewPoly({e: a for e, a in f.items() if sum(e) == d})
