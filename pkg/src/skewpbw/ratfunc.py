"""Fraction fields of Laurent polynomial rings.

Elements are reduced fractions ``num/den`` of :class:`LaurentPoly`.  The
canonical form keeps ``den`` an honest polynomial with no monomial factor and
lex-leading coefficient 1; monomials are units upstairs and live in ``num``.
Greatest common divisors come from sympy's sparse polynomial rings.
"""
from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.rings import ring as sympy_ring

from .coeffs import LaurentPoly, LaurentRing
from .errors import BackendMismatch, NotAUnit

__all__ = ["RatFunc", "FractionField"]


def _to_mpq(c):
    return QQ(c.numerator, c.denominator)


def _from_mpq(c):
    return Fraction(int(c.numerator), int(c.denominator))


class RatFunc:
    """An element of ``Frac(Q[p^{+-1}])``, always stored reduced."""

    __slots__ = ("num", "den", "field", "_hash")

    def __init__(self, num, den, field, _reduced=False):
        self.field = field
        if not _reduced:
            num, den = field._reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise BackendMismatch("fractions over different base rings")
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den, self.field)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, self.field)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.field, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise NotAUnit("0 is not invertible")
        return RatFunc(self.den, self.num, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        for _ in range(k):
            out = out * self
        return out

    def is_unit(self):
        return bool(self.num)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


class FractionField:
    """``S^{-1}R`` for ``R`` a Laurent polynomial ring and ``S = R - {0}``."""

    kind = "fraction"

    def __init__(self, base):
        if not isinstance(base, LaurentRing):
            raise TypeError("FractionField needs a LaurentRing base")
        self.base = base
        self.params = base.params
        self._ring = None

    def _sympy(self):
        if self._ring is None:
            names = ",".join(f"_p{k}" for k in range(len(self.params))) or "_p0"
            self._ring = sympy_ring(names, QQ)[0]
        return self._ring

    # -- canonical form ---------------------------------------------------

    def _split(self, lp):
        """``lp = p^shift * P`` with ``P`` a polynomial free of monomial factors."""
        n = lp.nvars
        shift = tuple(min(e[k] for e in lp.terms) for k in range(n))
        poly = {tuple(x - s for x, s in zip(e, shift)): c for e, c in lp.terms.items()}
        return shift, poly

    def _to_sympy(self, poly):
        R = self._sympy()
        if not self.params:
            return R.from_dict({(0,): _to_mpq(poly.get((), Fraction(0)))}) if poly else R.zero
        return R.from_dict({e: _to_mpq(c) for e, c in poly.items()})

    def _from_sympy(self, f, shift):
        n = len(self.params)
        terms = {}
        for e, c in f.to_dict().items():
            e = e[:n] if n else ()
            terms[tuple(x + s for x, s in zip(e, shift))] = _from_mpq(c)
        return LaurentPoly(terms, n)

    def _reduce(self, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        n = len(self.params)
        if not num:
            return LaurentPoly({}, n), LaurentPoly.const(1, n)
        if den.is_monomial():
            return num * den.inverse(), LaurentPoly.const(1, n)
        dshift, dpoly = self._split(den)
        nshift, npoly = self._split(num)
        fn, fd = self._to_sympy(npoly), self._to_sympy(dpoly)
        fn, fd = fn.cancel(fd)
        lc = fd.LC
        fn, fd = fn.quo_ground(lc), fd.quo_ground(lc)
        zero = (0,) * n
        num = self._from_sympy(fn, tuple(a - b for a, b in zip(nshift, dshift)))
        den = self._from_sympy(fd, zero)
        if den.is_monomial():
            return num * den.inverse(), LaurentPoly.const(1, n)
        return num, den

    def factor(self, lp):
        """Factor a nonzero Laurent polynomial as ``c * p^shift * prod f_k^{m_k}``.

        Returns ``(c, shift, [(f_k, m_k), ...])`` with each ``f_k`` an
        irreducible polynomial, free of monomial factors, with lex-leading
        coefficient 1.  Factors are sorted by their term tuples.
        """
        if not lp:
            raise NotAUnit("0 has no factorization")
        shift, poly = self._split(lp)
        f = self._to_sympy(poly)
        c, facs = f.factor_list()
        c = _from_mpq(c)
        zero = (0,) * len(self.params)
        out = []
        for g, k in facs:
            lc = g.LC
            c *= _from_mpq(lc) ** k
            g = self._from_sympy(g.quo_ground(lc), zero)
            if g.is_constant():
                c *= g.constant_value() ** k
                continue
            out.append((g, k))
        out.sort(key=lambda gk: sorted(gk[0].terms.items()))
        return c, shift, out

    # -- domain protocol --------------------------------------------------

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if x.field != self:
                raise BackendMismatch("fraction from another field")
            return x
        if isinstance(x, (int, Fraction)):
            x = LaurentPoly.const(x, len(self.params))
        if isinstance(x, LaurentPoly):
            return RatFunc(self.base.coerce(x), self.base.one, self, _reduced=True)
        raise BackendMismatch(f"cannot coerce {x!r} into {self!r}")

    def embed(self, a):
        """The canonical map ``a -> a/1``."""
        return self.coerce(a)

    def fraction(self, a, s):
        return RatFunc(self.base.coerce(a), self.base.coerce(s), self)

    def param(self, name_or_index, power=1):
        return self.coerce(self.base.param(name_or_index, power))

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def is_unit(self, a):
        return bool(a)

    def inv(self, a):
        return a.inverse()

    def generators(self):
        return tuple(self.coerce(g) for g in self.base.generators())

    def apply_map(self, m, a):
        """``sigma-bar(a/s) = sigma(a)/sigma(s)``."""
        return RatFunc(self.base.apply_map(m, a.num), self.base.apply_map(m, a.den), self)

    def apply_derivation(self, m, table, a):
        """``delta-bar(a/s) = (delta(a) - (a/s) delta(s)) / sigma(s)``.

        This is the unique extension compatible with sigma-Leibniz on
        ``s * (a/s) = a``.
        """
        if table is None:
            return self.zero
        da = self.base.apply_derivation(m, table, a.num)
        ds = self.base.apply_derivation(m, table, a.den)
        sig_s = self.base.apply_map(m, a.den) if m is not None else a.den
        return (self.coerce(da) - a * self.coerce(ds)) / self.coerce(sig_s)

    def format(self, a):
        if a.den == self.base.one:
            return self.base.format(a.num)
        num, den = self.base.format(a.num), self.base.format(a.den)
        if not self.base.is_atomic(a.num) or "/" in num:
            num = f"({num})"
        if not self.base.is_atomic(a.den) or len(a.den.terms) == 1 and "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def is_atomic(self, a):
        return a.den == self.base.one and self.base.is_atomic(a.num)

    def __eq__(self, other):
        return isinstance(other, FractionField) and other.base == self.base

    def __hash__(self):
        return hash(("Frac", self.base))

    def __repr__(self):
        return f"FractionField({self.base!r})"
