"""Command-line front end.

Exit codes: 0 ok (or verdict matches --expect), 1 verdict mismatch,
2 input error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .exact_poly import (
    SparsePoly,
    as_rational,
    format_poly_text,
    format_rational,
    normalize,
    parse_poly_text,
    poly_from_json,
    poly_to_json,
)
from .flow_poly import (
    FlowInstance,
    af_check,
    ehrhart_volume_oracle,
    lattice_point_count,
    lidskii_volume,
    mixed_volume,
)
from .hw_characters import (
    LimitExceeded,
    ModuleSpec,
    PipelineMismatch,
    dlc_scan,
    parabolic_char_polynomial,
)
from .lie_structure import (
    Root,
    SemisimpleSpec,
    Weight,
    as_node,
    graph_GJ,
    is_antidominant,
    j_lambda,
    jantzen_simple,
)
from .lorentz_cert import (
    CertificationReport,
    continuous_lc_spot_check,
    is_denormalized_lorentzian,
    is_discretely_log_concave,
    is_lorentzian,
)
from .partition_fn import G2_ROOTS, DirectedMultigraph, kpf_count, kpf_enumerate
from .symfun2 import coeff_log_concavity, family_polynomial, okounkov_difference

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_LIMIT = 200_000


class InputError(ValueError):
    """Malformed or inconsistent command-line input."""


# -- parsing helpers -------------------------------------------------------------


def parse_rational(text: str) -> Fraction:
    try:
        return as_rational(text.strip())
    except (TypeError, ValueError):
        raise InputError(f"malformed rational {text!r}") from None


def parse_vector(text: str, rational: bool = False) -> tuple:
    parts = [p for p in re.split(r"[,\s]+", text.strip().strip("()[]")) if p]
    if rational:
        return tuple(parse_rational(p) for p in parts)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"malformed integer vector {text!r}") from None


def parse_nodes(text: str | None) -> list:
    """'1,3' (block 1) or '1:1,2:1' (block:node)."""
    if not text:
        return []
    out = []
    for p in re.split(r"[,\s]+", text.strip()):
        if not p:
            continue
        try:
            out.append(tuple(int(x) for x in p.split(":")) if ":" in p else (1, int(p)))
        except ValueError:
            raise InputError(f"malformed node {p!r}") from None
    return out


def parse_dirs(text: str | None, spec: SemisimpleSpec | None = None):
    """Directions 'i-j' (polynomial variables) or 't:i-j' (roots of block t)."""
    if not text:
        return None
    out = []
    for p in re.split(r"[,\s]+", text.strip()):
        m = re.fullmatch(r"(?:(\d+):)?(\d+)-(\d+)", p)
        if not m:
            raise InputError(f"malformed direction {p!r}")
        t, i, j = m.group(1), int(m.group(2)), int(m.group(3))
        out.append(Root(int(t or 1), i, j) if spec is not None else (i, j))
    return out


def load_json_arg(text: str):
    """Inline JSON or a path to a JSON file ('-' for stdin)."""
    try:
        if text == "-":
            return json.load(sys.stdin)
        if text.lstrip().startswith(("{", "[")):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {text!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {text!r}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_poly(text: str) -> SparsePoly:
    try:
        raw = sys.stdin.read() if text == "-" else (Path(text).read_text() if Path(text).exists() else text)
    except OSError as exc:
        raise InputError(f"cannot read {text!r}: {exc}") from None
    try:
        if raw.lstrip().startswith("{"):
            return poly_from_json(json.loads(raw))
        return parse_poly_text(raw)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"malformed polynomial: {exc}") from None


def parse_params(text: str | None) -> dict:
    out = {}
    if not text:
        return out
    for p in re.split(r"[,\s]+", text.strip()):
        if not p:
            continue
        if "=" not in p:
            raise InputError(f"parameter {p!r} must look like name=value")
        k, v = p.split("=", 1)
        out[k.strip()] = parse_rational(v)
    return out


# -- output ------------------------------------------------------------------------


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    if isinstance(obj, CertificationReport):
        return obj.to_json()
    return obj


def emit(args, payload: dict, text: str | None = None) -> None:
    if args.json:
        print(json.dumps(_jsonable(payload), sort_keys=True))
    else:
        print(text if text is not None else json.dumps(_jsonable(payload), sort_keys=True, indent=2))


def _float_note(args, value) -> str:
    if getattr(args, "float", False) and isinstance(value, (int, Fraction)):
        return f"  (~{float(value):.6g}, display only)"
    return ""


def verdict_exit(args, verdict: bool) -> int:
    return EXIT_OK if verdict == args.expect else EXIT_MISMATCH


def _report(args, report: CertificationReport, extra: dict | None = None) -> int:
    payload = report.to_json()
    if extra:
        payload.update(_jsonable(extra))
    text = f"verdict: {str(report.verdict).lower()}"
    if report.witness:
        text += "\nwitness: " + json.dumps(_jsonable(report.witness), sort_keys=True)
    emit(args, payload, text)
    return verdict_exit(args, report.verdict)


# -- subcommands --------------------------------------------------------------------


def cmd_kpf(args) -> int:
    target = parse_vector(args.target)
    if args.g2:
        roots = list(G2_ROOTS)
    elif args.graph:
        try:
            roots = DirectedMultigraph.from_json(load_json_arg(args.graph))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    elif args.roots:
        roots = [parse_vector(r) for r in args.roots.split(";")]
    else:
        raise InputError("one of --graph, --g2 or --roots is required")
    count = kpf_count(roots, target)
    payload = {"value": count}
    if args.enumerate:
        if count > args.limit:
            raise LimitExceeded(f"{count} decompositions exceed --limit {args.limit}")
        payload["decompositions"] = [list(x) for x in kpf_enumerate(roots, target)]
    text = str(count)
    if args.enumerate:
        text += "\n" + "\n".join(" ".join(map(str, x)) for x in payload["decompositions"])
    emit(args, payload, text)
    return EXIT_OK


def _module(args) -> ModuleSpec:
    try:
        return ModuleSpec.from_json(load_json_arg(args.module))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_char(args) -> int:
    module = _module(args)
    spec = module.algebra
    if args.action == "mult":
        if args.coords:
            c = parse_vector(args.coords)
            if len(c) != spec.rank:
                raise InputError(f"--coords needs {spec.rank} entries")
            value = module.mult_coords(c) if min(c) >= 0 else 0
        elif args.mu:
            try:
                mu = Weight.from_json(load_json_arg(args.mu)).check_spec(spec)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            value = module.mult(mu)
        else:
            raise InputError("char mult needs --mu or --coords")
        emit(args, {"value": value}, str(value))
        return EXIT_OK
    if args.action == "poly":
        if module.kind not in ("verma", "parabolic", "findim"):
            raise InputError("polynomials are available for verma, parabolic and findim modules")
        J = module.J if module.kind == "parabolic" else (frozenset(spec.nodes()) if module.kind == "findim" else frozenset())
        if not args.delta:
            raise InputError("char poly needs --delta")
        try:
            p = parabolic_char_polynomial(spec, module.lam, J, parse_vector(args.delta))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if len(p) > args.limit:
            raise LimitExceeded(f"polynomial has {len(p)} terms, limit is {args.limit}")
        payload = {"polynomial": poly_to_json(p)}
        if args.certify:
            rep = is_lorentzian(normalize(p))
            payload["lorentzian"] = rep.to_json()
            emit(args, payload, format_poly_text(p) + f"\nnormalized Lorentzian: {str(rep.verdict).lower()}")
            return verdict_exit(args, rep.verdict)
        emit(args, payload, format_poly_text(p))
        return EXIT_OK
    box = args.box
    if args.lower or args.upper:
        if not (args.lower and args.upper):
            raise InputError("--lower and --upper go together")
        box = (parse_vector(args.lower), parse_vector(args.upper))
    dirs = parse_dirs(args.dirs, spec)
    return _report(args, dlc_scan(module, box, dirs, limit=args.limit))


def cmd_cert(args) -> int:
    p = load_poly(args.poly)
    if args.action == "lorentzian":
        return _report(args, is_lorentzian(p))
    if args.action == "denorm":
        return _report(args, is_denormalized_lorentzian(p))
    if args.action == "dlc":
        return _report(args, is_discretely_log_concave(p, parse_dirs(args.dirs)))
    if not args.point:
        raise InputError("clc-point needs --point")
    return _report(args, continuous_lc_spot_check(p, parse_vector(args.point, rational=True)))


def cmd_flow(args) -> int:
    try:
        G = DirectedMultigraph.from_json(load_json_arg(args.graph))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.action in ("points", "oracle"):
        if not args.netflow:
            raise InputError(f"flow {args.action} needs --netflow")
        inst = FlowInstance(G, parse_vector(args.netflow, rational=True))
        if args.action == "points":
            value = lattice_point_count(inst)
        else:
            value = ehrhart_volume_oracle(inst, args.dilations)
        emit(args, {"value": value}, format_rational(Fraction(value)) + _float_note(args, value))
        return EXIT_OK
    if args.action == "lidskii":
        vol = lidskii_volume(G)
        payload = {"polynomial": poly_to_json(vol)}
        text = format_poly_text(vol)
        if args.netflow:
            value = vol.evaluate(parse_vector(args.netflow, rational=True))
            payload["value"] = value
            text += f"\nvalue: {format_rational(value)}" + _float_note(args, value)
        emit(args, payload, text)
        return EXIT_OK
    if not args.r:
        raise InputError(f"flow {args.action} needs --r")
    r = parse_vector(args.r)
    if args.action == "mixed":
        value = mixed_volume(G, r)
        emit(args, {"value": value}, str(value))
        return EXIT_OK
    if args.i is None or args.j is None:
        raise InputError("flow af needs --i and --j")
    return _report(args, af_check(G, r, args.i, args.j))


def _shape(text: str) -> tuple[int, int]:
    v = parse_vector(text)
    if len(v) == 1:
        v = (v[0], 0)
    if len(v) != 2:
        raise InputError("--shape must be 'a,b'")
    return v


def cmd_sym(args) -> int:
    params = parse_params(args.params)
    for name in ("t", "q", "tau"):
        if getattr(args, name, None) is not None:
            params[name] = parse_rational(getattr(args, name))
    family = {"hl": "hl", "jack": "jack", "mac": "mac"}.get(args.action, args.family)
    try:
        if args.action == "okounkov":
            if not args.triple:
                raise InputError("okounkov needs --triple")
            shapes = [tuple(int(x) for x in m.split(",")) for m in re.findall(r"\(([^)]*)\)", args.triple)]
            if len(shapes) != 3:
                raise InputError("--triple must list three shapes '(a,b),(c,d),(e,f)'")
            points = [parse_vector(p, rational=True) for p in args.point] if args.point else []
            diff, rep = okounkov_difference(family, params, shapes, points)
            return _report(args, rep, {"difference": poly_to_json(diff), "difference_text": format_poly_text(diff)})
        p = family_polynomial(family, *_shape(args.shape), params)
    except KeyError as exc:
        raise InputError(f"missing parameter {exc}") from None
    if args.lc:
        return _report(args, coeff_log_concavity(p), {"polynomial": poly_to_json(p)})
    emit(args, {"polynomial": poly_to_json(p)}, format_poly_text(p))
    return EXIT_OK


def _weight(args, spec=None) -> Weight:
    try:
        lam = Weight.from_json(load_json_arg(args.weight))
        if spec is not None:
            lam.check_spec(spec)
        return lam
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_lie(args) -> int:
    if args.action == "gj":
        if args.n is None:
            raise InputError("lie gj needs --n")
        G = graph_GJ(args.n, [i for _, i in parse_nodes(args.J)])
        emit(args, G.to_json(), json.dumps(G.to_json()))
        return EXIT_OK
    if not args.weight:
        raise InputError(f"lie {args.action} needs --weight")
    lam = _weight(args)
    spec = SemisimpleSpec([len(b) for b in lam.h])
    if args.action == "jlambda":
        nodes = sorted(j_lambda(spec, lam))
        emit(args, {"J_lambda": [list(n) for n in nodes]}, " ".join(f"{t}:{i}" for t, i in nodes) or "(empty)")
        return EXIT_OK
    if args.action == "antidominant":
        v = is_antidominant(spec, lam)
        emit(args, {"verdict": v}, f"antidominant: {str(v).lower()}")
        return verdict_exit(args, v)
    J = [as_node(x) for x in parse_nodes(args.J)]
    v = jantzen_simple(spec, lam, J)
    # simplicity only; no log-concavity conclusion is drawn from it
    emit(args, {"verdict": v, "question": "simplicity of M(lambda, J)"}, f"M(lambda, J) simple: {str(v).lower()}")
    return verdict_exit(args, v)


def cmd_repro(args) -> int:
    from .repro import CASES, load_fixtures, run_repro

    ids = list(CASES) if args.all or not args.ids else args.ids
    unknown = [i for i in ids if i not in CASES]
    if unknown:
        raise InputError(f"unknown repro case(s): {', '.join(unknown)}")
    fixtures = load_fixtures()
    results = [run_repro(i, fixtures) for i in ids]
    ok = all(r["ok"] for r in results)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r['ok'] else 'FAIL'} {r['id']}")
        for m in r["mismatches"]:
            lines.append(f"    {m['key']}: expected {m['expected']!r}, got {m['actual']!r}")
    emit(args, {"ok": ok, "cases": results}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------------


def _bool(text: str) -> bool:
    t = text.lower()
    if t in ("true", "1", "yes"):
        return True
    if t in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError("expected true or false")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS, help="size budget for enumerations and scans")
    common.add_argument("--expect", type=_bool, default=argparse.SUPPRESS, help="expected verdict (default true)")
    common.add_argument("--float", action="store_true", default=argparse.SUPPRESS, help="also show approximate decimals")

    parser = argparse.ArgumentParser(prog="verma-lc", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kpf", parents=[common], help="Kostant partition functions")
    p.add_argument("--graph", help="graph JSON (file or inline)")
    p.add_argument("--g2", action="store_true", help="use the positive roots of G2")
    p.add_argument("--roots", help="explicit roots, e.g. '1,0;0,1;1,1'")
    p.add_argument("--target", required=True)
    p.add_argument("--enumerate", action="store_true", help="list all decompositions")
    p.set_defaults(func=cmd_kpf)

    p = sub.add_parser("char", parents=[common], help="module characters")
    p.add_argument("action", choices=["mult", "poly", "dlc-scan"])
    p.add_argument("--module", required=True, help="module JSON (file or inline)")
    p.add_argument("--mu", help="weight JSON")
    p.add_argument("--coords", help="mu as coordinates c with lambda - mu = sum c_i alpha_i")
    p.add_argument("--delta")
    p.add_argument("--certify", action="store_true", help="certify the normalized polynomial as Lorentzian")
    p.add_argument("--box", type=int, default=6, help="scan radius")
    p.add_argument("--lower")
    p.add_argument("--upper")
    p.add_argument("--dirs", help="roots 't:i-j' separated by commas")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("cert", parents=[common], help="polynomial certification")
    p.add_argument("action", choices=["lorentzian", "denorm", "dlc", "clc-point"])
    p.add_argument("--poly", required=True, help="polynomial file, inline text, or '-'")
    p.add_argument("--dirs", help="variable pairs 'i-j'")
    p.add_argument("--point")
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("flow", parents=[common], help="flow polytopes")
    p.add_argument("action", choices=["points", "lidskii", "mixed", "af", "oracle"])
    p.add_argument("--graph", required=True)
    p.add_argument("--netflow")
    p.add_argument("--r")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--dilations", type=int)
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("sym", parents=[common], help="two-variable symmetric functions")
    p.add_argument("action", choices=["hl", "jack", "mac", "okounkov"])
    p.add_argument("--shape", default="2,0")
    p.add_argument("--params")
    p.add_argument("--t")
    p.add_argument("--q")
    p.add_argument("--tau")
    p.add_argument("--family", default="jack", choices=["schur", "hl", "jack", "mac"])
    p.add_argument("--triple")
    p.add_argument("--point", action="append")
    p.add_argument("--lc", action="store_true", help="check coefficient log-concavity")
    p.set_defaults(func=cmd_sym)

    p = sub.add_parser("lie", parents=[common], help="weights and simplicity")
    p.add_argument("action", choices=["jantzen", "antidominant", "jlambda", "gj"])
    p.add_argument("--weight")
    p.add_argument("--J", help="nodes '1,2' or 't:i,...'")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_lie)

    p = sub.add_parser("repro", parents=[common], help="recompute the worked examples")
    p.add_argument("ids", nargs="*")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    for name, default in (("json", False), ("limit", DEFAULT_LIMIT), ("expect", True), ("float", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (PipelineMismatch, AssertionError, ArithmeticError) as exc:
        if isinstance(exc, ZeroDivisionError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, LimitExceeded, ValueError, TypeError, KeyError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
