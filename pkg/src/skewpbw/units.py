"""Unit-group logarithms, the subgroup N and independence in R*/N.

Every supported coefficient domain has a unit group of the form
``free abelian x finite cyclic``:

* ``Q*``: sign times the free group on the primes;
* ``GF(p)*``: cyclic of order ``p - 1`` (discrete log to a primitive root);
* ``Q[p^{+-1}]*``: ``Q*`` times the free group on the parameters;
* ``Frac(Q[p^{+-1}])*``: ``Q*`` times the parameters times the free group
  on monic irreducible polynomials.

A :class:`UnitLog` records the free coordinates as ``(label, exponent)``
pairs and the torsion coordinate as an integer modulo the torsion order.
Labels are ``("p", prime)``, ``("x", parameter name)`` and ``("f", terms)``
for an irreducible polynomial.

``N`` is generated by commutators and the elements ``z^{-1} sigma_i(z)``.
All supported domains are commutative, so commutators are trivial and
``z -> z^{-1} sigma_i(z)`` is a homomorphism; its values on generators of
``R*`` span ``N``.  Membership and independence questions become integer
lattice problems solved with the Smith normal form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from sympy import factorint
from sympy.ntheory import discrete_log, primitive_root

from .coeffs import CoeffBackend, LaurentPoly
from .errors import NotAUnit, UnitLogUnsupported
from .lattice import column_hermite, integer_kernel, smith_normal_form

__all__ = [
    "UnitLog",
    "NGenerator",
    "NLattice",
    "Certificate",
    "Independence",
    "unit_log",
    "n_lattice",
    "unit_class",
    "independent_in_R_star_mod_N",
]


@dataclass(frozen=True)
class UnitLog:
    """Coordinates of a unit: free exponents plus a torsion residue."""

    free: tuple = ()
    torsion: int = 0
    order: int = 2

    def __post_init__(self):
        items = dict(self.free)
        free = tuple(sorted((k, int(v)) for k, v in items.items() if v))
        object.__setattr__(self, "free", free)
        object.__setattr__(self, "torsion", int(self.torsion) % self.order)

    @classmethod
    def from_dict(cls, d, torsion=0, order=2):
        return cls(tuple(d.items()), torsion, order)

    def as_dict(self):
        return dict(self.free)

    @property
    def labels(self):
        return tuple(k for k, _ in self.free)

    def __add__(self, other):
        if self.order != other.order:
            raise UnitLogUnsupported("unit logs from different groups")
        d = self.as_dict()
        for k, v in other.free:
            d[k] = d.get(k, 0) + v
        return UnitLog.from_dict(d, self.torsion + other.torsion, self.order)

    def __neg__(self):
        return UnitLog(tuple((k, -v) for k, v in self.free), -self.torsion, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return UnitLog(tuple((lab, k * v) for lab, v in self.free), k * self.torsion, self.order)

    __rmul__ = __mul__

    def is_zero(self):
        return not self.free and self.torsion == 0

    def vector(self, labels):
        """Free coordinates on ``labels`` followed by the torsion residue."""
        d = self.as_dict()
        extra = set(d) - set(labels)
        if extra:
            raise ValueError(f"labels {sorted(extra)} missing from the coordinate list")
        return [d.get(k, 0) for k in labels] + [self.torsion]

    def __str__(self):
        parts = [f"{_label_str(k)}^{v}" for k, v in self.free]
        if self.order == 2:
            parts.insert(0, "-" if self.torsion else "+")
        else:
            parts.insert(0, f"g^{self.torsion} (mod {self.order})")
        return " ".join(parts)


def _label_str(label):
    kind, val = label
    if kind == "f":
        return "(" + " + ".join(f"{c}*{e}" for e, c in val) + ")"
    return str(val)


def _domain(backend):
    return backend.domain if isinstance(backend, CoeffBackend) else backend


def _torsion_order(dom):
    return dom.p - 1 if dom.kind == "prime" else 2


def _rational_log(c, prime_bound):
    c = Fraction(c)
    if c == 0:
        raise NotAUnit("0 is not a unit")
    d = {}
    for p, k in factorint(abs(c.numerator)).items():
        d[("p", int(p))] = d.get(("p", int(p)), 0) + k
    for p, k in factorint(c.denominator).items():
        d[("p", int(p))] = d.get(("p", int(p)), 0) - k
    if prime_bound is not None:
        big = [lab[1] for lab in d if lab[1] > prime_bound]
        if big:
            raise UnitLogUnsupported(f"primes {big} exceed the declared bound {prime_bound}")
    return d, int(c < 0)


@lru_cache(maxsize=None)
def _primitive_root(p):
    return int(primitive_root(p))


def _poly_label(f):
    return ("f", tuple(sorted(f.terms.items())))


def _label_poly(label, nvars):
    return LaurentPoly(dict(label[1]), nvars)


def unit_log(backend, u, prime_bound=None):
    """The :class:`UnitLog` of the unit ``u``.

    ``prime_bound`` optionally restricts rational scalars to primes up to the
    bound; a larger prime factor raises :class:`UnitLogUnsupported`.
    """
    dom = _domain(backend)
    kind = dom.kind
    if kind == "rational":
        d, sign = _rational_log(u, prime_bound)
        return UnitLog.from_dict(d, sign)
    if kind == "prime":
        u = dom.coerce(u)
        if not u:
            raise NotAUnit("0 is not a unit")
        g = _primitive_root(dom.p)
        return UnitLog((), int(discrete_log(dom.p, u.value, g)), dom.p - 1)
    if kind == "laurent":
        u = dom.coerce(u)
        if not u.is_unit():
            raise NotAUnit(f"{u!r} is not a unit of the Laurent ring")
        (e, c), = u.terms.items()
        d, sign = _rational_log(c, prime_bound)
        for name, k in zip(dom.params, e):
            if k:
                d[("x", name)] = k
        return UnitLog.from_dict(d, sign)
    if kind == "fraction":
        u = dom.coerce(u)
        if not u:
            raise NotAUnit("0 is not a unit")
        c1, s1, f1 = dom.factor(u.num)
        c2, s2, f2 = dom.factor(u.den)
        d, sign = _rational_log(c1 / c2, prime_bound)
        for name, a, b in zip(dom.params, s1, s2):
            if a - b:
                d[("x", name)] = a - b
        for f, k in f1:
            d[_poly_label(f)] = d.get(_poly_label(f), 0) + k
        for f, k in f2:
            d[_poly_label(f)] = d.get(_poly_label(f), 0) - k
        return UnitLog.from_dict(d, sign)
    raise UnitLogUnsupported(f"no unit logarithm for {dom!r}")


def _pow(dom, a, k):
    if k < 0:
        a, k = dom.inv(a), -k
    out = dom.one
    for _ in range(k):
        out = out * a
    return out


# ---------------------------------------------------------------------------
# the subgroup N


@dataclass(frozen=True)
class NGenerator:
    """``value = z^{-1} sigma_i(z)`` together with its log."""

    i: int
    z: object
    value: object
    log: UnitLog


@dataclass(frozen=True)
class NLattice:
    """Logs of the generators of ``N`` plus the torsion relation."""

    domain: object
    generators: tuple
    order: int
    _echelon: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def labels(self):
        return tuple(sorted({lab for g in self.generators for lab in g.log.labels}))

    @property
    def torsion_relation(self):
        """The ambient relation ``order * g = 0`` on the torsion coordinate."""
        return self.order

    def _coords(self, extra=()):
        return tuple(sorted(set(self.labels) | set(extra)))

    def matrix(self, labels):
        """Columns: generator logs, then the torsion relation."""
        cols = [g.log.vector(labels) for g in self.generators]
        cols.append([0] * len(labels) + [self.order])
        return [list(row) for row in zip(*cols)]

    def decompose(self, log):
        """Integers ``(n_1..n_s, t)`` with ``log = sum n_j g_j + t*order*e_tors``.

        Returns ``None`` when ``log`` is not in the lattice.
        """
        labels = self._coords(log.labels)
        a = self.matrix(labels)
        v = log.vector(labels)
        S, U, V = smith_normal_form(a)
        uv = [sum(x * y for x, y in zip(row, v)) for row in U]
        ncols = len(a[0])
        y = [0] * ncols
        for k, val in enumerate(uv):
            s = S[k][k] if k < ncols else 0
            if s == 0:
                if val:
                    return None
            elif val % s:
                return None
            else:
                y[k] = val // s
        return [sum(V[i][k] * y[k] for k in range(ncols)) for i in range(ncols)]

    def contains(self, log):
        return self.decompose(log) is not None

    def reduce(self, log):
        """Canonical representative of ``log`` modulo the lattice."""
        labels = self._coords()
        extra = {k: v for k, v in log.free if k not in labels}
        basis = self._echelon.get("basis")
        if basis is None:
            cols = [g.log.vector(labels) for g in self.generators]
            cols.append([0] * len(labels) + [self.order])
            basis = self._echelon["basis"] = column_hermite(cols, range(len(labels) + 1))
        v = UnitLog.from_dict({k: v for k, v in log.free if k in labels}, log.torsion, log.order)
        v = v.vector(labels)
        for col in basis:
            r = next((k for k, x in enumerate(col) if x), None)
            if r is None:
                continue
            q = v[r] // col[r]
            if q:
                v = [a - q * b for a, b in zip(v, col)]
        d = dict(zip(labels, v[:-1]))
        d.update(extra)
        return UnitLog.from_dict(d, v[-1], log.order)

    def same_class(self, a, b):
        return self.contains(a - b)


def _sigma_list(backend, sigmas):
    if sigmas is not None:
        return tuple(sigmas)
    if isinstance(backend, CoeffBackend):
        return tuple(backend.sigma)
    return ()


def n_lattice(backend, sigmas=None, seeds=(), orbit_depth=4):
    """Generators of ``N`` for ``backend`` under the automorphisms ``sigmas``.

    ``sigmas`` defaults to the backend's own table.  For fraction fields the
    unit group is not finitely generated; generators are taken for the
    irreducible factors among ``seeds`` (labels) and their sigma-orbits up
    to ``orbit_depth`` steps in either direction.
    """
    dom = _domain(backend)
    sig = tuple(m for m in _sigma_list(backend, sigmas))
    return _n_lattice(dom, sig, frozenset(lab for lab in seeds if lab[0] == "f"), orbit_depth)


@lru_cache(maxsize=256)
def _n_lattice(dom, sigmas, seeds, depth):
    order = _torsion_order(dom)
    gens = []
    active = [(i, m) for i, m in enumerate(sigmas) if m is not None and not m.is_identity()]
    if active and dom.kind in ("rational", "prime"):
        raise UnitLogUnsupported(f"{dom!r} has no non-trivial automorphisms")
    if dom.kind in ("laurent", "fraction"):
        zs = [dom.param(k) for k in range(len(dom.params))]
        if dom.kind == "fraction" and active:
            base = dom.base
            polys = {lab: _label_poly(lab, base.nvars) for lab in seeds}
            frontier = list(polys.values())
            for _ in range(depth):
                nxt = []
                for f in frontier:
                    for _, m in active:
                        for mm in (m, m.inverse()):
                            for g, _k in dom.factor(base.apply_map(mm, f))[2]:
                                lab = _poly_label(g)
                                if lab not in polys:
                                    polys[lab] = g
                                    nxt.append(g)
                frontier = nxt
            zs += [dom.coerce(polys[lab]) for lab in sorted(polys)]
        for i, m in active:
            for z in zs:
                w = dom.inv(z) * dom.apply_map(m, z)
                lg = unit_log(dom, w)
                if not lg.is_zero():
                    gens.append(NGenerator(i, z, w, lg))
    return NLattice(dom, tuple(gens), order)


def unit_class(backend, u, sigmas=None, lattice=None):
    """Canonical representative of the class of ``u`` in ``R*/N``."""
    lg = unit_log(backend, u)
    if lattice is None:
        lattice = n_lattice(backend, sigmas, seeds=lg.labels)
    return lattice.reduce(lg)


# ---------------------------------------------------------------------------
# independence


@dataclass(frozen=True)
class Certificate:
    """``prod u_k^{m_k} = prod g_j^{n_j}`` with ``g_j`` generators of ``N``.

    The torsion coordinates agree up to ``torsion_multiple * order``, which
    is an honest identity in the group.
    """

    exponents: tuple
    n_coefficients: tuple
    torsion_multiple: int
    lattice: NLattice

    def replay(self, units):
        """Recompute both sides with exact arithmetic; ``True`` if equal."""
        dom = self.lattice.domain
        lhs = dom.one
        for u, m in zip(units, self.exponents):
            lhs = lhs * _pow(dom, dom.coerce(u), m)
        rhs = dom.one
        for g, k in zip(self.lattice.generators, self.n_coefficients):
            rhs = rhs * _pow(dom, g.value, k)
        return lhs == rhs

    def as_dict(self, fmt=str):
        return {
            "exponents": list(self.exponents),
            "n_generators": [
                {"index": g.i + 1, "z": fmt(g.z), "value": fmt(g.value), "power": k}
                for g, k in zip(self.lattice.generators, self.n_coefficients) if k
            ],
            "torsion_multiple": self.torsion_multiple,
        }


@dataclass(frozen=True)
class Independence:
    independent: bool
    certificate: Certificate | None
    shape: tuple

    def __bool__(self):
        return self.independent


def independent_in_R_star_mod_N(backend, sigmas, units, prime_bound=None, orbit_depth=4):
    """Decide whether ``units`` have independent images in ``R*/N``.

    The logs of the units, the generators of ``N`` and the torsion relation
    are stacked as columns of an integer matrix; the units are dependent
    iff its kernel has a vector whose unit part is nonzero.
    """
    dom = _domain(backend)
    units = [dom.coerce(u) for u in units]
    logs = [unit_log(dom, u, prime_bound) for u in units]
    seeds = {lab for lg in logs for lab in lg.labels}
    lat = n_lattice(backend, sigmas, seeds, orbit_depth)
    labels = tuple(sorted(seeds | set(lat.labels)))
    m = len(logs)
    cols = [lg.vector(labels) for lg in logs]
    cols += [g.log.vector(labels) for g in lat.generators]
    cols.append([0] * len(labels) + [lat.order])
    a = [list(row) for row in zip(*cols)]
    shape = (len(a), len(cols))
    kernel = integer_kernel(a, len(cols))
    rel = [v for v in kernel if any(v[:m])]
    if not rel:
        return Independence(True, None, shape)
    best = column_hermite(rel, range(m))[0]
    if next(x for x in best[:m] if x) < 0:
        best = [-x for x in best]
    # sum m_k log u_k + sum n'_j g_j + t*order = 0
    exps = tuple(best[:m])
    ncoef = tuple(-x for x in best[m:-1])
    cert = Certificate(exps, ncoef, -best[-1], lat)
    return Independence(False, cert, shape)
