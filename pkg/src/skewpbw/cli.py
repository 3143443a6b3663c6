"""Command line front end: ``skewpbw <command> --ring FILE ...``.

Exit status is 0 on success, 1 when violations are found (an invalid
presentation or endomorphism, or a map classified as not an endomorphism)
and 2 on errors (bad input, unsupported request).
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .catalog import catalog_names, catalog_text, load_catalog
from .document import load_document
from .errors import SkewPBWError
from .expr import format_monomial, format_polynomial, parse_coefficient, parse_polynomial
from .localization import (
    build_quantum_laurent,
    classify_over_ore,
    classify_quantum,
    laurent_commutation,
    localize_coefficients,
)
from .morphisms import classify_filtered, classify_quasi_commutative, general_hypothesis
from .quasi import associated_graded, closed_form_coefficient
from .ring import SkewPoly, multiply, validate_presentation
from .units import independent_in_R_star_mod_N

__all__ = ["main", "build_parser"]


def _load_ring(ref):
    if os.path.exists(ref):
        return load_document(ref)
    name = ref[:-5] if ref.endswith(".json") else ref
    if name in catalog_names():
        return load_catalog(name)
    raise SkewPBWError(f"no such ring file or catalog entry: {ref}")


def _fmt(p):
    return p.backend.domain.format


def _emit(args, data, lines):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for line in lines:
            print(line)


def _relation_lines(p):
    fmt = _fmt(p)
    out = []
    for j in range(p.n):
        for i in range(j):
            lhs = f"{p.names[j]}*{p.names[i]}"
            c = p.c[j][i]
            rhs = f"{p.names[i]}*{p.names[j]}"
            if c != p.backend.one:
                rhs = (f"({fmt(c)})" if not p.backend.domain.is_atomic(c) else fmt(c)) + "*" + rhs
            d = p.d_lower.get((j, i))
            if d:
                low = format_polynomial(p, d)
                rhs += " - " + low[1:] if low.startswith("-") else " + " + low
            out.append(f"{lhs} = {rhs}")
    return out


# ---------------------------------------------------------------------------
# commands


def _closed_form_mismatches(p, k):
    lo = -k if p.r else 0
    rng = range(lo, k + 1)
    bad = []
    for t in itertools.product(rng, repeat=p.n):
        if any(x < 0 for x in t[p.r:]):
            continue
        for l in itertools.product(rng, repeat=p.n):
            if any(x < 0 for x in l[p.r:]):
                continue
            s = tuple(a + b for a, b in zip(t, l))
            prod = multiply(p, p.monomial(t), p.monomial(l))
            if prod != SkewPoly({s: closed_form_coefficient(p, t, l)}):
                bad.append((t, l))
    return bad


def cmd_validate(args):
    doc = _load_ring(args.ring)
    p = doc.ring
    rep = validate_presentation(p)
    items = [{"kind": v.kind, "message": v.message} for v in rep]
    if args.max_degree is not None and p.quasi_commutative:
        for t, l in _closed_form_mismatches(p, args.max_degree):
            items.append({"kind": "closed-form",
                          "message": f"x^{list(t)} x^{list(l)} disagrees with the closed form"})
    if args.endo:
        for v in doc.endomorphism(args.endo).validate():
            items.append({"kind": "endomorphism", "message": v.message})
    lines = [f"{it['kind']}: {it['message']}" for it in items] or [f"{doc.name}: valid"]
    _emit(args, {"ring": doc.name, "valid": not items, "violations": items}, lines)
    return 1 if items else 0


def cmd_multiply(args):
    doc = _load_ring(args.ring)
    p = doc.ring
    f = p.one()
    for text in args.factors:
        f = multiply(p, f, parse_polynomial(text, p))
    out = format_polynomial(p, f)
    _emit(args, {"product": out}, [out])
    return 0


def _classification_json(p, cls):
    fmt = _fmt(p)
    return {
        "verdict": cls.verdict,
        "scalars": [fmt(a) for a in cls.scalars],
        "epsilon": cls.epsilon,
        "constants": [fmt(a) for a in cls.constants],
        "non_units": [p.names[w] for w in cls.non_units],
        "reasons": list(cls.reasons),
    }


def _classification_lines(p, cls):
    fmt = _fmt(p)
    if cls.verdict in ("Diagonal", "Affine"):
        sign = "+1" if cls.epsilon == 1 else "-1"
        head = f"{cls.verdict} ε={sign}, λ=({','.join(fmt(a) for a in cls.scalars)})"
        if cls.verdict == "Affine":
            head += f", a0=({','.join(fmt(a) for a in cls.constants)})"
        lines = [head]
        for w, a in enumerate(cls.scalars):
            y = p.monomial(_unit(p.n, w, cls.epsilon), a) if p.backend.is_unit(a) or cls.epsilon == 1 else None
            if y is None:
                line = f"  {p.names[w]} -> ({fmt(a)})*{p.names[w]}^-1"
            else:
                if cls.constants:
                    y = y + p.const(cls.constants[w])
                line = f"  {p.names[w]} -> {format_polynomial(p, y)}"
            lines.append(line)
        for w in cls.non_units:
            lines.append(f"  note: scalar of {p.names[w]} is not a unit")
        return lines
    return [cls.verdict] + [f"  {r}" for r in cls.reasons]


def cmd_classify(args):
    doc = _load_ring(args.ring)
    e = doc.endomorphism(args.endo)
    method = args.method
    p = doc.ring
    if method == "auto":
        if p.r:
            method = "quantum"
        elif not p.quasi_commutative:
            method = "filtered"
        else:
            method = "quasi"
    if method == "quantum":
        cls = classify_quantum(p, e)
    elif method == "filtered":
        cls = classify_filtered(p, e)
    elif method == "ore":
        cls = classify_over_ore(p, e)
    else:
        cls = classify_quasi_commutative(p, e)
    _emit(args, _classification_json(p, cls), _classification_lines(p, cls))
    return 1 if cls.verdict == "NotEndomorphism" else 0


def cmd_gr(args):
    doc = _load_ring(args.ring)
    gr = associated_graded(doc.ring).presentation
    gen = general_hypothesis(gr)
    rels = _relation_lines(gr)
    data = {"relations": rels, "bijective": gr.bijective,
            "general": None if gen is None else bool(gen)}
    lines = rels + [f"bijective: {'yes' if gr.bijective else 'no'}",
                    "general: " + ("n/a (non-unit coefficients)" if gen is None else "yes" if gen else "no")]
    _emit(args, data, lines)
    return 0


def cmd_localize(args):
    doc = _load_ring(args.ring)
    loc = localize_coefficients(doc.presentation)
    lp = loc.presentation
    elems = [parse_polynomial(t, doc.presentation) for t in args.elements]
    images = [format_polynomial(lp, loc.psi(f)) for f in elems]
    bad = loc.check_homomorphism([(f, g) for f in elems for g in elems])
    data = {"coefficients": repr(lp.backend.domain), "images": images, "homomorphism_failures": len(bad)}
    lines = [f"coefficients: {lp.backend.domain!r}"]
    lines += [f"psi({t}) = {img}" for t, img in zip(args.elements, images)]
    if elems:
        lines.append("psi multiplicative on the given elements: " + ("yes" if not bad else "no"))
    _emit(args, data, lines)
    return 1 if bad else 0


def cmd_laurent(args):
    doc = _load_ring(args.ring)
    r = args.r if args.r is not None else doc.ring.r
    qr = build_quantum_laurent(doc.ring, r)
    p = qr.presentation
    fmt = _fmt(p)
    k = args.max_degree or 1
    table = []
    for j in range(p.n):
        for i in range(j):
            for t in range(-k if j < r else 0, k + 1):
                for s in range(-k if i < r else 0, k + 1):
                    if s and t:
                        a = laurent_commutation(qr, j, i, s, t)
                        table.append({"i": j + 1, "t": t, "j": i + 1, "s": s, "scalar": fmt(a)})
    lines = [f"r = {r}"] + [
        f"{format_monomial(p, _unit(p.n, row['i'] - 1, row['t']))} "
        f"{format_monomial(p, _unit(p.n, row['j'] - 1, row['s']))} = ({row['scalar']}) "
        f"{format_monomial(p, _unit(p.n, row['j'] - 1, row['s']))} "
        f"{format_monomial(p, _unit(p.n, row['i'] - 1, row['t']))}"
        for row in table]
    _emit(args, {"r": r, "commutation": table}, lines)
    return 0


def _unit(n, i, k):
    return tuple(k if m == i else 0 for m in range(n))


def cmd_independence(args):
    doc = _load_ring(args.ring)
    p = doc.ring
    dom = p.backend.domain
    if args.units:
        units = [parse_coefficient(t, dom) for t in args.units]
        labels = list(args.units)
    else:
        units = [p.c[j][i] for j in range(p.n) for i in range(j)]
        labels = [f"c{j + 1}{i + 1}" for j in range(p.n) for i in range(j)]
    res = independent_in_R_star_mod_N(p.backend, None, units, prime_bound=args.prime_bound)
    data = {"independent": res.independent, "units": labels}
    lines = [("independent" if res else "dependent") + " in R*/N: " + ", ".join(labels)]
    if not res:
        cert = res.certificate
        data["certificate"] = cert.as_dict(dom.format)
        data["replays"] = cert.replay(units)
        rel = " * ".join(f"({lab})^{m}" for lab, m in zip(labels, cert.exponents) if m)
        lines.append(f"  {rel} lies in N (certificate replays: {'yes' if data['replays'] else 'no'})")
    _emit(args, data, lines)
    return 0


def cmd_catalog(args):
    if args.action == "list":
        names = catalog_names()
        rows = [(n, json.loads(catalog_text(n)).get("description", "")) for n in names]
        _emit(args, [{"name": n, "description": d} for n, d in rows],
              [f"{n:22s} {d}" for n, d in rows])
        return 0
    if args.json:
        sys.stdout.write(catalog_text(args.name))
        return 0
    doc = load_catalog(args.name)
    p = doc.ring
    lines = [f"{doc.name}: {doc.description}", f"coefficients: {p.backend.domain!r}",
             f"variables: {', '.join(p.names)} (Laurent: {p.r})"] + _relation_lines(p)
    for name, e in doc.endomorphisms.items():
        lines.append(f"endomorphism {name}: " + ", ".join(format_polynomial(p, y) for y in e.images))
    _emit(args, None, lines)
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-degree", type=int, default=None, metavar="K",
                        help="exponent bound for table and oracle checks")
    common.add_argument("--prime-bound", type=int, default=None, metavar="B",
                        help="largest prime allowed when factoring rational units")

    parser = argparse.ArgumentParser(prog="skewpbw", description="Skew PBW extensions from the command line.")
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_cmd(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--ring", required=True, help="ring document (file or catalog name)")
        sp.set_defaults(fn=fn)
        return sp

    sp = ring_cmd("validate", cmd_validate, "check the presentation (and optionally an endomorphism)")
    sp.add_argument("--endo", help="also validate this endomorphism")
    sp = ring_cmd("multiply", cmd_multiply, "multiply elements, left to right")
    sp.add_argument("factors", nargs="+", metavar="EXPR")
    sp = ring_cmd("classify", cmd_classify, "classify an endomorphism of the document")
    sp.add_argument("--endo", required=True)
    sp.add_argument("--method", choices=("auto", "quasi", "filtered", "quantum", "ore"), default="auto")
    ring_cmd("gr", cmd_gr, "associated graded ring")
    sp = ring_cmd("localize", cmd_localize, "localize the coefficients and apply psi")
    sp.add_argument("elements", nargs="*", metavar="EXPR")
    sp = ring_cmd("laurent", cmd_laurent, "commutation rules of the skew quantum polynomial ring")
    sp.add_argument("--r", type=int, default=None, help="number of inverted variables")
    sp = ring_cmd("independence", cmd_independence, "independence of units in R*/N")
    sp.add_argument("units", nargs="*", metavar="UNIT", help="defaults to the c_ji, j > i")
    sp = sub.add_parser("catalog", help="bundled example rings")
    actions = sp.add_subparsers(dest="action", required=True)
    actions.add_parser("list", parents=[common], help="names and descriptions").set_defaults(fn=cmd_catalog)
    show = actions.add_parser("show", parents=[common], help="print one catalog ring")
    show.add_argument("name")
    show.set_defaults(fn=cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SkewPBWError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
