"""``varlat`` command line.

One JSON document per invocation goes to stdout; ``--verbose`` adds a human
rendering on stderr.  Exit codes: 0 ok, 1 negative answer under ``--expect``,
2 input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import latcheck as LC
from . import varieties as V
from .commwords import Identity
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, VarlatError
from .models import CayleyTable, counterexample_in_table
from .nilcalc import entails
from .parsing import parse_identity, parse_variety, render

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _bool_arg(text: str) -> bool:
    low = text.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _caps(args) -> Caps:
    return Caps(args.max_letters, args.max_p, args.max_carrier, args.lattice_cap)


def _desc(v) -> dict:
    if isinstance(v, V.Com):
        return {"text": "COM"}
    return {"text": render(v), "d": v.d, "m": v.m, "nil": str(v.nil)}


def _lattice_json(lat: LC.FiniteLattice) -> dict:
    return {
        "size": lat.n,
        "labels": [lat.label(i) for i in range(lat.n)],
        "covers": [list(c) for c in lat.covers()],
        "distributive": LC.is_distributive(lat),
        "modular": LC.is_modular(lat),
    }


def _emit_dot(lat: LC.FiniteLattice, path: str | None) -> str | None:
    if not path:
        return None
    Path(path).write_text(LC.to_dot(lat), encoding="utf-8")
    return path


def _expect(result: bool, expected: bool | None) -> int:
    return EXIT_NEGATIVE if expected is not None and result != expected else EXIT_OK


# -- commands ----------------------------------------------------------------------


def cmd_classify(args, caps):
    v = parse_variety(args.variety, caps)
    report = V.classify(v, caps)
    result = report.as_dict()
    result["canonical"] = V.is_canonical(v, caps)
    code = EXIT_OK
    for item in args.expect or ():
        name, _, want = item.partition("=")
        key = name.replace("-", "_")
        if key not in ("upper_modular", "codistributive", "costandard", "neutral"):
            raise _InputError(f"unknown property {name!r}")
        if result[key] != (_bool_arg(want) if want else True):
            code = EXIT_NEGATIVE
    lines = [f"{render(v)}"] + [
        f"  {k.replace('_', '-')}: {'yes' if result[k] else 'no'}"
        for k in ("upper_modular", "codistributive", "costandard", "neutral")
    ]
    lines.append(f"  modular: {report.modular}; clause {report.matched_clause}")
    return {"variety": _desc(v), **result}, code, lines


def cmd_entails(args, caps):
    v = parse_variety(args.basis, caps)
    ident = parse_identity(args.identity)
    if isinstance(v, V.Composite) and v.d == 1 and v.m == 0:
        holds = entails(V.nil_basis(v.nil), ident, caps, method=args.method)
    else:
        holds = V.satisfies(v, ident, caps)
    word = "entails" if holds else "does not entail"
    return (
        {"basis": _desc(v), "identity": str(ident), "holds": holds},
        _expect(holds, args.expect),
        [f"{render(v)} {word} {ident}"],
    )


def cmd_degree(args, caps):
    v = parse_variety(args.variety, caps)
    deg = V.degree_of(v, args.bound, cross_check=args.cross_check, caps=caps)
    return {"variety": _desc(v), "degree": str(deg)}, EXIT_OK, [f"degree of {render(v)}: {deg}"]


def cmd_invariants(args, caps):
    v = parse_variety(args.variety, caps)
    if isinstance(v, V.Com):
        result = {"variety": _desc(v), "periodic": False, "degree": "infinite", "canonical": True}
        return result, EXIT_OK, ["COM: not periodic, infinite degree"]
    canon = V.is_canonical(v, caps)
    node = V.resolve_catalog(V.effective_nil(v, caps) if canon else v.nil, caps)
    deg = V.degree_of(v, caps=caps)
    result = {
        "variety": _desc(v),
        "periodic": True,
        "gr": V.gr(v),
        "m": V.m_index(v, cross_check=args.cross_check, caps=caps),
        "degree": str(deg),
        "canonical": canon,
        "catalog_node": None if node is None else str(node),
        "normal_form": render(V.normalize(v, caps)) if canon else None,
    }
    lines = [f"{render(v)}: Gr exponent {result['gr']}, m = {result['m']}, degree {deg}"]
    return result, EXIT_OK, lines


def _binary(args, caps, op):
    a, b = parse_variety(args.left, caps), parse_variety(args.right, caps)
    r = op(a, b, caps)
    return {"left": _desc(a), "right": _desc(b), "result": _desc(V.normalize(r, caps))}, EXIT_OK, [render(r)]


def cmd_join(args, caps):
    return _binary(args, caps, V.join)


def cmd_meet(args, caps):
    return _binary(args, caps, V.meet)


def cmd_equal(args, caps):
    a, b = parse_variety(args.left, caps), parse_variety(args.right, caps)
    eq = V.equal(a, b, caps)
    result = {"left": _desc(a), "right": _desc(b), "equal": eq, "leq": V.leq(a, b, caps), "geq": V.leq(b, a, caps)}
    return result, _expect(eq, args.expect), [f"{render(a)} {'=' if eq else '!='} {render(b)}"]


def cmd_catalog(args, caps):
    elems = V.catalog_elements(args.max_index)
    leq = [[V.catalog_leq(a, b) for b in elems] for a in elems]
    lat = LC.build(leq, [str(e) for e in elems])
    rows = [
        {"name": str(e), "basis": str(V.catalog_basis(e)), "degree": str(V.catalog_degree(e))}
        for e in elems
    ]
    result = {"elements": rows, "lattice": _lattice_json(lat), "dot": _emit_dot(lat, args.emit_dot)}
    return result, EXIT_OK, [f"{r['name']}: {r['basis']}" for r in rows]


def cmd_sublattice(args, caps):
    seeds = [parse_variety(s, caps) for s in args.seed]
    lat = LC.generate_sublattice(seeds, caps=caps)
    elements = []
    for i in range(lat.n):
        v = lat.labels[i]
        report = V.classify(v, caps)
        local = LC.has_property(lat, i, LC.ElementKind.UPPER_MODULAR)
        elements.append(
            {
                "index": i,
                "variety": render(v),
                "upper_modular_in_com": report.upper_modular,
                "upper_modular_here": local,
            }
        )
    consistent = all(e["upper_modular_here"] for e in elements if e["upper_modular_in_com"])
    out = _lattice_json(lat)
    out.update({"elements": elements, "consistent": consistent, "dot": _emit_dot(lat, args.emit_dot)})
    lines = [f"{lat.n} elements"] + [f"  {e['index']}: {e['variety']}" for e in elements]
    return out, EXIT_OK if consistent else EXIT_NEGATIVE, lines


def cmd_lattice_check(args, caps):
    lat = LC.loads_leq(Path(args.file).read_text(encoding="utf-8"))
    kinds = [LC.ElementKind(k) for k in args.kind] if args.kind else list(LC.ElementKind)
    xs = args.element if args.element else list(range(lat.n))
    per = {}
    for x in xs:
        if not 0 <= x < lat.n:
            raise _InputError(f"element {x} outside lattice of size {lat.n}")
        per[str(x)] = {}
        for k in kinds:
            w = LC.find_witness(lat, x, k)
            per[str(x)][k.value] = {"holds": w is None, "witness": None if w is None else list(w)}
    out = _lattice_json(lat)
    out.update({"elements": per, "dot": _emit_dot(lat, args.emit_dot)})
    lines = [f"{lat.n}-element lattice, distributive: {out['distributive']}"]
    for x, row in per.items():
        lines.append(f"  {x}: " + ", ".join(k for k, r in row.items() if r["holds"]))
    code = EXIT_OK
    if args.expect is not None:
        allhold = all(r["holds"] for row in per.values() for r in row.values())
        code = _expect(allhold, args.expect)
    return out, code, lines


def cmd_table_check(args, caps):
    t = CayleyTable.loads(Path(args.file).read_text(encoding="utf-8"))
    ident: Identity = parse_identity(args.identity)
    cex = counterexample_in_table(t, ident)
    holds = cex is None
    result = {"order": t.n, "zero": t.zero, "identity": str(ident), "holds": holds,
              "counterexample": None if holds else list(cex)}
    msg = f"{ident} holds" if holds else f"{ident} fails at {cex}"
    return result, _expect(holds, args.expect), [msg]


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-letters", type=int, default=DEFAULT_CAPS.max_letters)
    common.add_argument("--max-p", type=int, default=DEFAULT_CAPS.max_p)
    common.add_argument("--max-carrier", type=int, default=DEFAULT_CAPS.max_carrier)
    common.add_argument("--lattice-cap", type=int, default=DEFAULT_CAPS.lattice_cap)
    common.add_argument("-v", "--verbose", action="store_true", help="human-readable report on stderr")

    parser = argparse.ArgumentParser(prog="varlat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "special-element status in Com")
    p.add_argument("variety")
    p.add_argument("--expect", action="append", metavar="PROP[=BOOL]",
                   help="upper-modular, codistributive, costandard or neutral")

    p = add("entails", cmd_entails, "does a basis (or descriptor) imply an identity")
    p.add_argument("--basis", required=True)
    p.add_argument("identity")
    p.add_argument("--method", choices=("search", "quotient"), default="search")
    p.add_argument("--expect", type=_bool_arg)

    p = add("degree", cmd_degree, "nilpotency degree")
    p.add_argument("variety")
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--cross-check", action="store_true")

    p = add("invariants", cmd_invariants, "Gr, m, degree, canonical form")
    p.add_argument("variety")
    p.add_argument("--cross-check", action="store_true")

    for name, func in (("join", cmd_join), ("meet", cmd_meet)):
        p = add(name, func, f"{name} of two canonical descriptors")
        p.add_argument("left")
        p.add_argument("right")

    p = add("equal", cmd_equal, "equality and inclusion of two descriptors")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--expect", type=_bool_arg)

    p = add("catalog", cmd_catalog, "the lattice L(I) truncated at an index")
    p.add_argument("--max-index", type=int, default=5)
    p.add_argument("--emit-dot", metavar="FILE")

    p = add("sublattice", cmd_sublattice, "sublattice of Com generated by seeds")
    p.add_argument("--seed", action="append", required=True)
    p.add_argument("--emit-dot", metavar="FILE")

    p = add("lattice-check", cmd_lattice_check, "special elements of an explicit lattice")
    p.add_argument("file", help="order matrix, one row per line")
    p.add_argument("--element", type=int, action="append")
    p.add_argument("--kind", action="append", choices=[k.value for k in LC.ElementKind])
    p.add_argument("--emit-dot", metavar="FILE")
    p.add_argument("--expect", type=_bool_arg)

    p = add("table-check", cmd_table_check, "identity check in a Cayley table")
    p.add_argument("file", help="Cayley table, one row per line")
    p.add_argument("identity")
    p.add_argument("--expect", type=_bool_arg)
    return parser


def _caps_json(caps: Caps) -> dict:
    return {"max_letters": caps.max_letters, "max_p": caps.max_p,
            "max_carrier": caps.max_carrier, "lattice_cap": caps.lattice_cap}


def run(argv=None) -> tuple[dict, int]:
    """Parse ``argv`` and execute; returns the report and the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    caps = _caps(args)
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "verbose")}
    report = {"command": args.command, "input": echo, "caps": _caps_json(caps)}
    try:
        result, code, lines = args.func(args, caps)
    except CapExceeded as exc:
        report.update(status="cap-exceeded", error=str(exc))
        return report, EXIT_CAP
    except (VarlatError, _InputError, ValueError, OSError) as exc:
        report.update(status="input-error", error=f"{type(exc).__name__}: {exc}")
        return report, EXIT_INPUT
    report.update(status="ok" if code == EXIT_OK else "negative", result=result)
    if args.verbose:
        print("\n".join(lines), file=sys.stderr)
    return report, code


def main(argv=None) -> int:
    try:
        report, code = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_INPUT if exc.code not in (0, None) else 0
    print(json.dumps(report, indent=2, sort_keys=True))
    if code in (EXIT_INPUT, EXIT_CAP):
        print(report.get("error", ""), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
