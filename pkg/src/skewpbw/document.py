"""JSON ring documents.

A document names a coefficient backend, the variables, the relations
(1-based ``"j,i"`` keys), optional endomorphisms and directives::

    {
      "name": "quantum-plane",
      "backend": {"kind": "laurent", "params": ["q"]},
      "variables": {"n": 2, "names": ["x1", "x2"]},
      "relations": {"c": {"2,1": "q"}},
      "endomorphisms": {"diag": ["2*x1", "q*x2"]},
      "directives": {"localize": false, "laurent": null}
    }

A key ``"i,j"`` with ``i < j`` gives ``c_ij`` (``x_i x_j = c_ij x_j x_i``);
the matching ``c_ji`` defaults to its inverse.  The directives turn the
declared presentation into the *working ring*: ``localize`` passes to the
fraction field of the coefficients, ``laurent: r`` inverts ``x_1 .. x_r``.
Endomorphism images are read in the working ring.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .coeffs import CoeffBackend, LaurentRing, MonomialMap, PrimeField, RationalField
from .errors import InvalidPresentation, NotAUnit, ParseError, SchemaError
from .expr import format_polynomial, parse_coefficient, parse_polynomial
from .localization import build_quantum_laurent, localize_coefficients
from .morphisms import Endomorphism
from .ring import Presentation

__all__ = ["RingDocument", "parse_document", "load_document", "dump_document"]

_TOP = {"name", "description", "backend", "variables", "relations", "endomorphisms", "directives"}
_BACKEND = {"kind", "params", "p", "sigma", "delta", "generators"}
_VARIABLES = {"n", "r", "names"}
_RELATIONS = {"c", "d_lower"}
_DIRECTIVES = {"localize", "laurent"}


def _expect(obj, kind, path):
    if not isinstance(obj, kind) or isinstance(obj, bool) and kind is not bool:
        name = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise SchemaError(f"{path}: expected {name}, got {type(obj).__name__}")
    return obj


def _keys(obj, allowed, path):
    _expect(obj, dict, path)
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SchemaError(f"{path}: unknown key(s) {', '.join(extra)}")


def _pair(key, n, path):
    try:
        a, b = (int(x) for x in key.split(","))
    except ValueError:
        raise SchemaError(f"{path}: key {key!r} must look like \"j,i\"") from None
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise SchemaError(f"{path}: key {key!r} needs distinct indices in 1..{n}")
    return a - 1, b - 1


def _at(path, fn, *args):
    """Run a parser, prefixing errors with the JSON path."""
    try:
        return fn(*args)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.args[0]}", exc.line, exc.column) from None
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from None


@dataclass(eq=False)
class RingDocument:
    """A parsed document: the declared presentation and the working ring."""

    name: str
    description: str
    presentation: Presentation
    ring: Presentation
    endomorphisms: dict
    generators: tuple = ()
    localize: bool = False
    laurent: int | None = None
    localization: object = None
    _pairs: tuple = field(default=(), repr=False)

    def endomorphism(self, name):
        if name not in self.endomorphisms:
            known = ", ".join(sorted(self.endomorphisms)) or "none"
            raise SchemaError(f"no endomorphism {name!r} (known: {known})")
        return self.endomorphisms[name]

    def to_json(self):
        """Canonical JSON-ready dict; all expressions re-printed."""
        p = self.presentation
        dom = p.backend.domain
        backend = {"kind": dom.kind}
        if dom.kind == "laurent":
            backend["params"] = list(dom.params)
        if dom.kind == "prime":
            backend["p"] = dom.p
        sigma = {}
        for i in range(p.n):
            m = p.backend.sigma_map(i)
            if m is not None:
                sigma[str(i + 1)] = {name: dom.format(img) for name, img in zip(dom.params, m.images())}
        if sigma:
            backend["sigma"] = sigma
        delta = {}
        for i in range(p.n):
            t = p.backend.delta_table(i)
            if t is not None:
                delta[str(i + 1)] = {name: dom.format(v) for name, v in zip(dom.params, t) if v}
        if delta:
            backend["delta"] = delta
        if self.generators:
            backend["generators"] = [dom.format(g) for g in self.generators]
        c = {f"{a + 1},{b + 1}": dom.format(p.c[a][b]) for a, b in self._pairs}
        relations = {"c": c}
        d = {f"{j + 1},{i + 1}": format_polynomial(p, poly) for (j, i), poly in sorted(p.d_lower.items())}
        if d:
            relations["d_lower"] = d
        out = {"name": self.name}
        if self.description:
            out["description"] = self.description
        out["backend"] = backend
        out["variables"] = {"n": p.n, "r": p.r, "names": list(p.names)}
        out["relations"] = relations
        if self.endomorphisms:
            out["endomorphisms"] = {
                name: [format_polynomial(self.ring, y) for y in e.images]
                for name, e in self.endomorphisms.items()}
        out["directives"] = {"localize": self.localize, "laurent": self.laurent}
        return out

    def __eq__(self, other):
        return isinstance(other, RingDocument) and self.to_json() == other.to_json()


def _backend(block, n):
    _keys(block, _BACKEND, "backend")
    kind = _expect(block.get("kind"), str, "backend.kind")
    if kind == "rational":
        dom = RationalField()
    elif kind == "prime":
        p = _expect(block.get("p"), int, "backend.p")
        try:
            dom = PrimeField(p)
        except InvalidPresentation as exc:
            raise SchemaError(f"backend.p: {exc}") from None
    elif kind == "laurent":
        params = _expect(block.get("params", []), list, "backend.params")
        for k, name in enumerate(params):
            _expect(name, str, f"backend.params[{k}]")
        dom = LaurentRing(params)
    else:
        raise SchemaError(f"backend.kind: unknown kind {kind!r} (rational, prime, laurent)")
    if kind != "laurent" and "params" in block:
        raise SchemaError(f"backend.params: a {kind} backend has no parameters")
    sigma = [None] * n
    delta = [None] * n
    for key, table, slot in (("sigma", block.get("sigma", {}), sigma), ("delta", block.get("delta", {}), delta)):
        _expect(table, dict, f"backend.{key}")
        for var, images in table.items():
            path = f"backend.{key}.{var}"
            if not var.isdigit() or not 1 <= int(var) <= n:
                raise SchemaError(f"{path}: variable index must be in 1..{n}")
            _expect(images, dict, path)
            unknown = sorted(set(images) - set(dom.params))
            if unknown:
                raise SchemaError(f"{path}: unknown parameter(s) {', '.join(unknown)}")
            vals = []
            for name in dom.params:
                default = dom.param(name) if key == "sigma" else dom.zero
                text = images.get(name)
                vals.append(default if text is None else
                            _at(f"{path}.{name}", parse_coefficient, _expect(text, str, f"{path}.{name}"), dom))
            if key == "sigma":
                try:
                    slot[int(var) - 1] = MonomialMap.from_images(vals)
                except InvalidPresentation as exc:
                    raise SchemaError(f"{path}: {exc}") from None
            else:
                slot[int(var) - 1] = tuple(vals)
    try:
        backend = CoeffBackend(dom, tuple(sigma), tuple(delta))
    except InvalidPresentation as exc:
        raise SchemaError(f"backend: {exc}") from None
    gens = []
    for k, text in enumerate(_expect(block.get("generators", []), list, "backend.generators")):
        gens.append(_at(f"backend.generators[{k}]", parse_coefficient,
                        _expect(text, str, f"backend.generators[{k}]"), dom))
    return backend, tuple(gens)


def _from_dict(data):
    _keys(data, _TOP, "document")
    for key in ("name", "backend", "variables", "relations"):
        if key not in data:
            raise SchemaError(f"document: missing key {key!r}")
    name = _expect(data["name"], str, "name")
    description = _expect(data.get("description", ""), str, "description")
    var = data["variables"]
    _keys(var, _VARIABLES, "variables")
    n = _expect(var.get("n"), int, "variables.n")
    if n < 1:
        raise SchemaError("variables.n: need at least one variable")
    r = _expect(var.get("r", 0), int, "variables.r")
    if not 0 <= r <= n:
        raise SchemaError(f"variables.r: must be in 0..{n}")
    names = _expect(var.get("names", [f"x{i + 1}" for i in range(n)]), list, "variables.names")
    if len(names) != n or len(set(names)) != n or not all(isinstance(s, str) and s.isidentifier() for s in names):
        raise SchemaError(f"variables.names: need {n} distinct identifiers")

    backend, gens = _backend(data["backend"], n)
    dom = backend.domain
    clash = sorted(set(names) & set(dom.params))
    if clash:
        raise SchemaError(f"variables.names: {', '.join(clash)} also used as parameter")

    rel = data["relations"]
    _keys(rel, _RELATIONS, "relations")
    c = [[None] * n for _ in range(n)]
    pairs = []
    for key, text in _expect(rel.get("c", {}), dict, "relations.c").items():
        a, b = _pair(key, n, "relations.c")
        c[a][b] = _at(f"relations.c.{key}", parse_coefficient, _expect(text, str, f"relations.c.{key}"), dom)
        pairs.append((a, b))
    for j in range(n):
        for i in range(j):
            if c[j][i] is None and c[i][j] is not None:
                try:
                    c[j][i] = dom.inv(c[i][j])
                except NotAUnit:
                    raise SchemaError(f"relations.c.{i + 1},{j + 1}: needs a unit to infer c_{j + 1},{i + 1}") from None
            if c[j][i] is None:
                raise SchemaError(f"relations.c: missing \"{j + 1},{i + 1}\"")

    # lower-order terms only involve x_1 .. x_n linearly, so parse them in
    # a scratch presentation with the same variables
    scratch = Presentation(backend, n, tuple(tuple(row) for row in c), {}, r, tuple(names))
    d_lower = {}
    for key, text in _expect(rel.get("d_lower", {}), dict, "relations.d_lower").items():
        j, i = _pair(key, n, "relations.d_lower")
        if j < i:
            raise SchemaError(f"relations.d_lower: key {key!r} must have j > i")
        d_lower[(j, i)] = _at(f"relations.d_lower.{key}", parse_polynomial,
                              _expect(text, str, f"relations.d_lower.{key}"), scratch)
    try:
        pres = Presentation(backend, n, tuple(tuple(row) for row in c), d_lower, r, tuple(names))
    except InvalidPresentation as exc:
        raise SchemaError(f"relations: {exc}") from None

    direct = _expect(data.get("directives", {}), dict, "directives")
    _keys(direct, _DIRECTIVES, "directives")
    localize = _expect(direct.get("localize", False), bool, "directives.localize")
    laurent = direct.get("laurent")
    if laurent is not None:
        _expect(laurent, int, "directives.laurent")
    ring, loc = pres, None
    if localize:
        loc = localize_coefficients(pres)
        ring = loc.presentation
    if laurent is not None:
        try:
            ring = build_quantum_laurent(ring, laurent).presentation
        except Exception as exc:
            raise SchemaError(f"directives.laurent: {exc}") from None

    endos = {}
    for ename, images in _expect(data.get("endomorphisms", {}), dict, "endomorphisms").items():
        path = f"endomorphisms.{ename}"
        _expect(images, list, path)
        if len(images) != n:
            raise SchemaError(f"{path}: need {n} images, got {len(images)}")
        ys = tuple(_at(f"{path}[{k}]", parse_polynomial, _expect(t, str, f"{path}[{k}]"), ring)
                   for k, t in enumerate(images))
        endos[ename] = Endomorphism(ring, ys)
    return RingDocument(name, description, pres, ring, endos, gens, localize, laurent, loc,
                        _pairs=tuple(sorted(pairs, key=lambda ab: (max(ab), min(ab), ab[0] < ab[1]))))


def parse_document(text):
    """Parse JSON text into a :class:`RingDocument`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return _from_dict(data)


def load_document(path):
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def dump_document(doc):
    """Canonical JSON text; ``parse_document(dump_document(d)) == d``."""
    return json.dumps(doc.to_json(), indent=2) + "\n"
