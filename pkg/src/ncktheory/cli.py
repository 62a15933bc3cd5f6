"""Command-line front end.

Exit codes: 0 ok, 1 selftest failure, 2 schema error, 3 budget exceeded,
4 example mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .charring import SuperChar, exponent_budget, get_exponent_budget, schur_super
from .errors import BudgetExceededError, SchemaError
from .freealg import DEFAULT_BUDGET, GradedGenSet, nc_filtration_dims, poisson_envelope_dims
from .freelie import lie_bracket_span_oracle, lie_char_table
from .ncdgq import NcdgData, build_q, check_q_squared, h0_ideal_generators
from .ncvirt import ObstructionTheory, ncvir_class, s_l_plus_truncated
from .partition import Partition
from .presets import PRESETS, load_preset, run_preset
from .quiver import GradedAlgebraPresentation, Rep, build_quiver, presentation_report
from .selftest import run_selftest

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_SCHEMA = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


def _read_json(path: str | None) -> Any:
    if path is None:
        raise SchemaError("this subcommand needs --input FILE (use - for stdin)", "--input")
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}", "--input") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} at line {exc.lineno}", path) from exc


def _preset_or_input(args, key: str) -> Any:
    if getattr(args, "preset", None):
        return load_preset(args.preset)[key]
    return _read_json(args.input)


# subcommands ----------------------------------------------------------------------


def cmd_ncvir(args) -> tuple[dict, int]:
    ot = ObstructionTheory.from_json(_read_json(args.input))
    d = 1 if args.d is None else args.d
    if d < 0:
        raise SchemaError("--d must be >= 0", "--d")
    result = ncvir_class(ot, d)
    bracket = s_l_plus_truncated(ot.e, d)
    return {
        "d": d,
        "ncvir": result.to_json(),
        "factored": {"ovir": str(ot.ovir), "bracket": str(bracket)},
    }, EXIT_OK


def _superchar_field(data: dict, key: str) -> SuperChar:
    if key not in data:
        raise SchemaError(f"missing key '{key}'", "$")
    return SuperChar.from_json(data[key], f"$.{key}")


def cmd_schur(args) -> tuple[dict, int]:
    data = _read_json(args.input)
    if not isinstance(data, dict):
        raise SchemaError("expected {'lambda': [...], 'g': SuperChar}", "$")
    try:
        lam = Partition(data.get("lambda", []))
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad partition: {exc}", "$.lambda") from exc
    g = _superchar_field(data, "g")
    s = schur_super(lam, g)
    return {"lambda": lam.to_json(), "superchar": s.to_json(), "k_class": s.k_class().to_json(),
            "text": {"even": str(s.even), "odd": str(s.odd)}}, EXIT_OK


def cmd_lie(args) -> tuple[dict, int]:
    data = _read_json(args.input)
    g = _superchar_field(data, "g") if isinstance(data, dict) and "g" in data else SuperChar.from_json(data, "$")
    n_max = args.max_n or args.n or 6
    if n_max < 1:
        raise SchemaError("--max-n must be >= 1", "--max-n")
    table = lie_char_table(g, n_max)
    rows = []
    for n in range(1, n_max + 1):
        row = {"n": n, "superchar": table[n].to_json(), "dimension": table[n].dimension()}
        if args.oracle:
            if g.nvars:
                raise SchemaError("--oracle needs a rank-only SuperChar (nvars = 0)", "$")
            row["oracle"] = lie_bracket_span_oracle(n, g.even.rank(), g.odd.rank(),
                                                    args.budget or DEFAULT_BUDGET)
        rows.append(row)
    return {"lie": rows}, EXIT_OK


def cmd_grfilt(args) -> tuple[dict, int]:
    gens = GradedGenSet.from_json(_read_json(args.input), "$")
    n = args.n if args.n is not None else 3
    d = args.d if args.d is not None else n
    if n < 0 or d < 0:
        raise SchemaError("--n and --d must be >= 0", "--n")
    budget = args.budget or DEFAULT_BUDGET
    filt = nc_filtration_dims(gens, n, d, budget=budget)
    env = poisson_envelope_dims(gens, n, d)
    return {"filtration": filt.to_json(), "envelope": env.to_json(),
            "match": filt.dims == env.dims}, EXIT_OK


def cmd_qsq(args) -> tuple[dict, int]:
    data = NcdgData.from_json(_preset_or_input(args, "ncdg"))
    budget = args.budget or DEFAULT_BUDGET
    verdict = check_q_squared(data, budget)
    out = verdict.to_json()
    out["generators"] = len(data.generators())
    if args.show_q:
        out["differential"] = build_q(data, budget).to_json()
        out["h0_relations"] = [r.to_json() for r in h0_ideal_generators(data)]
    return out, EXIT_OK


def cmd_quiver(args) -> tuple[dict, int]:
    data = _preset_or_input(args, "presentation")
    if isinstance(data, dict) and "presentation" in data:
        pres = GradedAlgebraPresentation.from_json(data["presentation"], "$.presentation")
        rep_data = data.get("rep")
    else:
        pres = GradedAlgebraPresentation.from_json(data, "$")
        rep_data = None
    rep = Rep.from_json(build_quiver(pres), rep_data) if rep_data is not None else None
    return presentation_report(pres, rep), EXIT_OK


def cmd_example(args) -> tuple[dict, int]:
    report = run_preset(args.name, d=args.d, n=args.n)
    return report, EXIT_OK if report["match"] else EXIT_MISMATCH


def cmd_selftest(args) -> tuple[dict, int]:
    seed = 0 if args.seed is None else args.seed
    results = run_selftest(seed)
    ok = all(r[1] for r in results)
    return {"seed": seed, "ok": ok,
            "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in results]}, \
        EXIT_OK if ok else EXIT_SELFTEST


COMMANDS = {
    "ncvir": cmd_ncvir,
    "schur": cmd_schur,
    "lie": cmd_lie,
    "grfilt": cmd_grfilt,
    "qsq": cmd_qsq,
    "quiver": cmd_quiver,
    "example": cmd_example,
    "selftest": cmd_selftest,
}


# output -----------------------------------------------------------------------------


def render(obj: Any, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True, indent=2)
    lines: list[str] = []

    def walk(prefix: str, value: Any):
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else str(k), value[k])
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            for i, v in enumerate(value):
                walk(f"{prefix}[{i}]", v)
        else:
            text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
            lines.append(f"{prefix:<40} {text}")

    walk("", obj)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="JSON input file, or - for stdin")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--d", type=int, help="truncation degree")
    common.add_argument("--n", type=int, help="tensor degree or example parameter")
    common.add_argument("--max-n", type=int, dest="max_n", help="largest tensor degree")
    common.add_argument("--seed", type=int, help="seed for randomized suites")
    common.add_argument("--budget", type=int, help="word or generator budget")
    common.add_argument("--exp-budget", type=int, dest="exp_budget",
                        help=f"exponent budget per variable (default {get_exponent_budget()})")

    parser = argparse.ArgumentParser(prog="ncktheory",
                                     description="NC virtual structure sheaf classes and friends.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ncvir", parents=[common], help="ObstructionTheory + d -> RationalCharacter")
    sub.add_parser("schur", parents=[common], help="partition + SuperChar -> Schur functor")
    p = sub.add_parser("lie", parents=[common], help="SuperChar -> free Lie characters")
    p.add_argument("--oracle", action="store_true", help="also run the bracket-span oracle")
    sub.add_parser("grfilt", parents=[common], help="NC filtration vs Poisson envelope")
    p = sub.add_parser("qsq", parents=[common], help="NcdgData -> Q^2 verdict")
    p.add_argument("--preset", choices=("p2",), help="use a bundled instance")
    p.add_argument("--show-q", action="store_true", dest="show_q", help="print Q and H0 relations")
    p = sub.add_parser("quiver", parents=[common], help="presentation (+ rep) -> quiver report")
    p.add_argument("--preset", choices=("p2",), help="use a bundled presentation")
    p = sub.add_parser("example", parents=[common], help="run a bundled worked example")
    p.add_argument("name", choices=PRESETS)
    sub.add_parser("selftest", parents=[common], help="seeded property suite")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.exp_budget is not None:
            with exponent_budget(args.exp_budget):
                out, code = COMMANDS[args.command](args)
        else:
            out, code = COMMANDS[args.command](args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    print(render(out, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
