"""Exact coefficient rings.

Three kinds of coefficient domain are supported:

* :class:`RationalField` -- elements are :class:`fractions.Fraction`;
* :class:`PrimeField` -- elements are :class:`Zp` residues;
* :class:`LaurentRing` -- elements are :class:`LaurentPoly`, Laurent
  polynomials over the rationals in a fixed list of parameter names.

A :class:`CoeffBackend` couples a domain with the twisting data of a skew
extension: for every ring variable ``x_i`` an automorphism ``sigma_i`` (a
:class:`MonomialMap`, only non-trivial on Laurent rings) and a
``sigma_i``-derivation ``delta_i`` given by its values on the parameters.

All elements are immutable and hashable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction

from sympy import isprime

from .errors import BackendMismatch, InvalidPresentation, NotAUnit

__all__ = [
    "Zp",
    "LaurentPoly",
    "RationalField",
    "PrimeField",
    "LaurentRing",
    "MonomialMap",
    "CoeffBackend",
    "coeff_arith",
    "apply_sigma",
    "apply_delta",
]


# ---------------------------------------------------------------------------
# prime field residues


class Zp:
    """A residue modulo the prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        if isinstance(value, Fraction):
            value = value.numerator * pow(value.denominator, -1, p)
        self.value = int(value) % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Zp):
            if other.p != self.p:
                raise BackendMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, (int, Fraction)):
            return Zp(other, self.p).value
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Zp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Zp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Zp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Zp(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Zp(-self.value, self.p)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Zp(pow(self.value, k, self.p), self.p)

    def inverse(self):
        if self.value == 0:
            raise NotAUnit("0 is not invertible")
        return Zp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Zp(o, self.p).inverse()

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Zp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == Zp(other, self.p).value
        return NotImplemented

    def __hash__(self):
        return hash(("Zp", self.value, self.p))

    def __repr__(self):
        return f"Zp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# Laurent polynomials


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Laurent polynomial over Q in ``nvars`` parameters.

    ``terms`` maps exponent tuples to nonzero :class:`Fraction` coefficients.
    """

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms, nvars):
        clean = {}
        for e, c in terms.items():
            if len(e) != nvars:
                raise BackendMismatch(f"exponent {e} has wrong length for {nvars} parameters")
            if c:
                clean[tuple(e)] = Fraction(c)
        self.terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def const(cls, c, nvars):
        return cls({(0,) * nvars: Fraction(c)}, nvars)

    @classmethod
    def monomial(cls, exps, c=1):
        return cls({tuple(exps): Fraction(c)}, len(exps))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise BackendMismatch("Laurent polynomials over different parameter lists")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _mono_mul(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        return len(self.terms) == 1

    def inverse(self):
        if len(self.terms) != 1:
            raise NotAUnit(f"{self!r} is not a unit of the Laurent polynomial ring")
        (e, c), = self.terms.items()
        return LaurentPoly({tuple(-x for x in e): 1 / c}, self.nvars)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.terms!r}, {self.nvars})"


# ---------------------------------------------------------------------------
# domains


class RationalField:
    kind = "rational"
    params = ()

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise BackendMismatch(f"cannot coerce {x!r} into Q")

    def check(self, a):
        if not isinstance(a, Fraction):
            raise BackendMismatch(f"{a!r} is not a rational")
        return a

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        return 1 / a

    def generators(self):
        return (Fraction(1),)

    def apply_map(self, m, a):
        return a

    def apply_derivation(self, m, table, a):
        return Fraction(0)

    def format(self, a):
        return str(a)

    def is_atomic(self, a):
        return True

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    kind = "prime"
    params = ()

    def __init__(self, p):
        if not isprime(p) or p > 2**31:
            raise InvalidPresentation(f"PrimeField needs a prime p <= 2^31, got {p}")
        self.p = p

    def coerce(self, x):
        if isinstance(x, Zp):
            if x.p != self.p:
                raise BackendMismatch(f"GF({x.p}) element in GF({self.p})")
            return x
        if isinstance(x, (int, Fraction)):
            return Zp(x, self.p)
        raise BackendMismatch(f"cannot coerce {x!r} into GF({self.p})")

    def check(self, a):
        if not isinstance(a, Zp) or a.p != self.p:
            raise BackendMismatch(f"{a!r} is not in GF({self.p})")
        return a

    @property
    def zero(self):
        return Zp(0, self.p)

    @property
    def one(self):
        return Zp(1, self.p)

    def is_unit(self, a):
        return bool(a)

    def inv(self, a):
        return a.inverse()

    def generators(self):
        return (self.one,)

    def apply_map(self, m, a):
        return a

    def apply_derivation(self, m, table, a):
        return self.zero

    def format(self, a):
        return str(a.value)

    def is_atomic(self, a):
        return True

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class LaurentRing:
    """``Q[p_1^{+-1}, ..., p_m^{+-1}]`` for the given parameter names."""

    kind = "laurent"

    def __init__(self, params):
        params = tuple(params)
        if len(set(params)) != len(params):
            raise InvalidPresentation(f"duplicate parameter names in {params}")
        self.params = params

    @property
    def nvars(self):
        return len(self.params)

    def coerce(self, x):
        if isinstance(x, LaurentPoly):
            if x.nvars != self.nvars:
                raise BackendMismatch("Laurent polynomial over a different parameter list")
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x, self.nvars)
        raise BackendMismatch(f"cannot coerce {x!r} into {self!r}")

    def check(self, a):
        if not isinstance(a, LaurentPoly):
            raise BackendMismatch(f"{a!r} is not a Laurent polynomial")
        return self.coerce(a)

    def param(self, name_or_index, power=1):
        k = self.params.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        e = [0] * self.nvars
        e[k] = power
        return LaurentPoly.monomial(e)

    @property
    def zero(self):
        return LaurentPoly({}, self.nvars)

    @property
    def one(self):
        return LaurentPoly.const(1, self.nvars)

    def is_unit(self, a):
        return a.is_unit()

    def inv(self, a):
        return a.inverse()

    def generators(self):
        gens = []
        for k in range(self.nvars):
            gens.append(self.param(k))
            gens.append(self.param(k, -1))
        return tuple(gens) or (self.one,)

    def apply_map(self, m, a):
        out = {}
        for e, c in a.terms.items():
            img_e, scal = m.image_of_exponent(e)
            out[img_e] = out.get(img_e, 0) + c * scal
        return LaurentPoly(out, self.nvars)

    def apply_derivation(self, m, table, a):
        if table is None:
            return self.zero
        memo = {}
        total = self.zero
        for e, c in a.terms.items():
            total = total + self._delta_monomial(m, table, e, memo) * c
        return total

    def _delta_monomial(self, m, table, e, memo):
        # sigma-Leibniz on a monomial, peeling one parameter factor at a time
        if e in memo:
            return memo[e]
        k = next((i for i, x in enumerate(e) if x), None)
        if k is None:
            return self.zero
        s = 1 if e[k] > 0 else -1
        u = self.param(k, s)
        rest = list(e)
        rest[k] -= s
        rest = tuple(rest)
        sig_pk = self.apply_map(m, self.param(k)) if m is not None else self.param(k)
        if s == 1:
            du = table[k]
            sig_u = sig_pk
        else:
            du = -(sig_pk.inverse() * table[k] * self.param(k, -1))
            sig_u = sig_pk.inverse()
        out = sig_u * self._delta_monomial(m, table, rest, memo) + du * LaurentPoly.monomial(rest)
        memo[e] = out
        return out

    def format(self, a):
        """Parseable text, terms in decreasing lex order, no spaces."""
        if not a:
            return "0"
        out = ""
        for e, c in sorted(a.terms.items(), reverse=True):
            mono = "*".join(name if k == 1 else f"{name}^{k}" for name, k in zip(self.params, e) if k)
            if not mono:
                t = str(c)
            elif c == 1:
                t = mono
            elif c == -1:
                t = "-" + mono
            else:
                t = f"{c}*{mono}"
            if out and not t.startswith("-"):
                out += "+"
            out += t
        return out

    def is_atomic(self, a):
        return len(a.terms) <= 1

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.params == self.params

    def __hash__(self):
        return hash(("Laurent", self.params))

    def __repr__(self):
        return f"LaurentRing({list(self.params)})"


# ---------------------------------------------------------------------------
# monomial automorphisms of Laurent rings


def _int_matrix_inverse(mat):
    """Inverse of a unimodular integer matrix (Gauss-Jordan over Q)."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise InvalidPresentation("monomial map matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise InvalidPresentation("monomial map matrix is not unimodular, map is not invertible")
    return tuple(tuple(int(x) for x in row) for row in inv)


@dataclass(frozen=True)
class MonomialMap:
    """``p_k -> scalars[k] * p^matrix[k]``, extended multiplicatively.

    Parameter permutations and scalings are the special cases with a
    permutation matrix.  ``matrix`` must be unimodular.
    """

    scalars: tuple
    matrix: tuple

    def __post_init__(self):
        n = len(self.scalars)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise InvalidPresentation("monomial map: matrix/scalar size mismatch")
        if any(Fraction(s) == 0 for s in self.scalars):
            raise InvalidPresentation("monomial map: scalars must be nonzero")
        object.__setattr__(self, "scalars", tuple(Fraction(s) for s in self.scalars))
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in row) for row in self.matrix))
        _int_matrix_inverse(self.matrix)

    @classmethod
    def identity(cls, n):
        return cls((1,) * n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_images(cls, images):
        """Build from unit monomial images of each parameter (LaurentPoly list)."""
        scalars, rows = [], []
        for img in images:
            if not img.is_monomial():
                raise InvalidPresentation(f"automorphism image {img!r} is not a unit monomial")
            (e, c), = img.terms.items()
            scalars.append(c)
            rows.append(e)
        return cls(tuple(scalars), tuple(rows))

    def is_identity(self):
        return self == MonomialMap.identity(len(self.scalars))

    def image_of_exponent(self, e):
        n = len(self.scalars)
        img = [0] * n
        scal = Fraction(1)
        for k, ek in enumerate(e):
            if ek:
                row = self.matrix[k]
                for j in range(n):
                    img[j] += ek * row[j]
                scal *= self.scalars[k] ** ek
        return tuple(img), scal

    def inverse(self):
        return self._inverse

    @cached_property
    def _inverse(self):
        inv = _int_matrix_inverse(self.matrix)
        n = len(self.scalars)
        scalars = []
        for k in range(n):
            s = Fraction(1)
            for j in range(n):
                s *= self.scalars[j] ** (-inv[k][j])
            scalars.append(s)
        return MonomialMap(tuple(scalars), inv)

    def images(self):
        return tuple(LaurentPoly.monomial(row, s) for s, row in zip(self.scalars, self.matrix))


# ---------------------------------------------------------------------------
# backends


@dataclass(frozen=True)
class CoeffBackend:
    """A coefficient domain together with ``sigma_i`` / ``delta_i`` tables.

    ``sigma[i]`` is a :class:`MonomialMap` or ``None`` (identity) and
    ``delta[i]`` is ``None`` (zero derivation) or a tuple giving
    ``delta_i(p_k)`` for every parameter ``p_k``.
    """

    domain: object
    sigma: tuple = ()
    delta: tuple = ()

    def __post_init__(self):
        n = max(len(self.sigma), len(self.delta))
        sigma = tuple(self.sigma) + (None,) * (n - len(self.sigma))
        delta = tuple(self.delta) + (None,) * (n - len(self.delta))
        sigma = tuple(None if (m is None or m.is_identity()) else m for m in sigma)
        delta = tuple(None if (t is None or not any(t)) else tuple(t) for t in delta)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "delta", delta)
        if self.domain.kind in ("rational", "prime"):
            if any(m is not None for m in sigma) or any(t is not None for t in delta):
                raise InvalidPresentation(f"{self.domain!r} only admits identity automorphisms and zero derivations")
        for m in sigma:
            if m is not None and len(m.scalars) != len(self.domain.params):
                raise InvalidPresentation("automorphism size does not match the parameter count")
        for i, t in enumerate(delta):
            if t is not None:
                if len(t) != len(self.domain.params):
                    raise InvalidPresentation("derivation table size does not match the parameter count")
                self._check_leibniz(i)

    def _check_leibniz(self, i):
        # on a commutative ring, delta(ab) = delta(ba) forces
        # (sigma(a) - a) delta(b) = (sigma(b) - b) delta(a) on generators
        dom = self.domain
        for a in range(len(dom.params)):
            for b in range(a + 1, len(dom.params)):
                pa, pb = dom.param(a), dom.param(b)
                lhs = (apply_sigma(self, i, pa) - pa) * self.delta[i][b]
                rhs = (apply_sigma(self, i, pb) - pb) * self.delta[i][a]
                if lhs != rhs:
                    raise InvalidPresentation(
                        f"delta_{i + 1} is not a sigma_{i + 1}-derivation on "
                        f"{dom.params[a]}, {dom.params[b]}")

    @property
    def kind(self):
        return self.domain.kind

    @property
    def nvars(self):
        return len(self.sigma)

    def coerce(self, x):
        return self.domain.coerce(x)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def is_unit(self, a):
        return self.domain.is_unit(a)

    def inv(self, a):
        return self.domain.inv(a)

    def generators(self):
        return self.domain.generators()

    def sigma_map(self, i):
        return self.sigma[i] if i < len(self.sigma) else None

    def delta_table(self, i):
        return self.delta[i] if i < len(self.delta) else None

    def has_derivations(self):
        return any(t is not None for t in self.delta)

    def with_nvars(self, n):
        """Same data padded (or truncated) to ``n`` ring variables."""
        sig = (tuple(self.sigma) + (None,) * n)[:n]
        dlt = (tuple(self.delta) + (None,) * n)[:n]
        return CoeffBackend(self.domain, sig, dlt)

    def without_derivations(self):
        return CoeffBackend(self.domain, self.sigma, (None,) * len(self.sigma))


def coeff_arith(a, b=None, op="add"):
    """Exact ``add``/``mul``/``neg``/``inv`` on coefficient elements."""
    if op in ("add", "mul") and type(a) is not type(b):
        if not (isinstance(b, (int, Fraction)) or isinstance(a, (int, Fraction))):
            raise BackendMismatch(f"{type(a).__name__} vs {type(b).__name__}")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        if isinstance(a, Fraction):
            if a == 0:
                raise NotAUnit("0 is not invertible")
            return 1 / a
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")


def apply_sigma(backend, i, a, power=1):
    """``sigma_i^power(a)``; negative powers use the inverse automorphism."""
    m = backend.sigma_map(i)
    if m is None or power == 0:
        return a
    if power < 0:
        m = m.inverse()
    for _ in range(abs(power)):
        a = backend.domain.apply_map(m, a)
    return a


def apply_delta(backend, i, a):
    """``delta_i(a)``, extended from the parameter table by sigma-Leibniz."""
    table = backend.delta_table(i)
    if table is None:
        return backend.zero
    return backend.domain.apply_derivation(backend.sigma_map(i), table, a)

