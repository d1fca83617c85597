"""Command-line front end.

Usage:
    fengrao analyze --gens 3,5
    fengrao apery --inductive a=2,2,2 b=1,2,6 --x 2 --closed
    fengrao e2 --inductive a=2,2,2 b=1,2,6 --method both
    fengrao tower --q 9 --n 2 --table --format csv
    fengrao frd --small 0,3 --m 5 --r 2
    fengrao pattern --gens 3,5 --coeffs=1,1,-1

Exit status: 0 on success, 1 when a self-check (``--method both``,
``tower --e2``) finds a disagreement, 2 on invalid input, 3 when the
conductor limit is exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Any, Sequence

from . import __version__
from .codes import bounds_table, e2_of
from .errors import ConductorLimitExceeded, SemigroupError
from .inductive import (
    InductiveDescriptor,
    apery_closed,
    build,
    e2_closed,
    is_inductive,
)
from .patterns import Pattern, admits_pattern, is_arf, is_saturated
from .semigroup import (
    NumericalSemigroup,
    apery_cardinalities,
    apery_set,
    feng_rao_distance,
    feng_rao_number_2_bruteforce,
    from_generators,
    from_small_elements,
    generalized_feng_rao_distance,
)
from .tower import (
    TowerParams,
    reduction_candidates,
    tower_apery_cards,
    tower_descriptor,
    tower_e2_closed,
)

DEFAULT_MAX_CONDUCTOR = 10**6

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class Mismatch(Exception):
    """A cross-check between two computation routes failed."""


# -- argument parsing -------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


_DESCRIPTOR_RE = re.compile(r"\s*a=([-\d,\s]*?)[\s,;]*b=([-\d,\s]*)\s*")


def parse_descriptor(tokens: Sequence[str]) -> InductiveDescriptor:
    """Parse ``a=2,2,2 b=1,2,6`` (or ``a=2,2,2,b=1,2,6``)."""
    match = _DESCRIPTOR_RE.fullmatch(" ".join(tokens))
    if match is None:
        raise SemigroupError(f"cannot parse descriptor {' '.join(tokens)!r}; expected a=L b=L")
    a = [int(t) for t in re.split(r"[,\s]+", match.group(1)) if t]
    b = [int(t) for t in re.split(r"[,\s]+", match.group(2)) if t]
    return InductiveDescriptor(tuple(a), tuple(b))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument(
        "--max-conductor",
        type=int,
        default=DEFAULT_MAX_CONDUCTOR,
        help="refuse semigroups with a larger conductor (default: %(default)s)",
    )


def _add_semigroup(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--gens", type=_int_list, metavar="L", help="generators, e.g. 3,5")
    group.add_argument("--small", type=_int_list, metavar="L", help="small elements, e.g. 0,8,10,12")
    group.add_argument(
        "--inductive",
        nargs="+",
        metavar="a=L b=L",
        help="inductive descriptor, e.g. a=2,2,2 b=1,2,6",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fengrao",
        description="Numerical semigroups, second Feng-Rao numbers and order-bound tables.",
        epilog="Lists are comma-separated integers. Use --coeffs=-1,2 when a list starts with '-'.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="canonical form, invariants and property flags")
    _add_semigroup(p)
    _add_common(p)

    p = sub.add_parser("apery", help="Apéry set with respect to x")
    _add_semigroup(p)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--closed", action="store_true", help="use the inductive recursion (x in [1, A_1])")
    _add_common(p)

    p = sub.add_parser("e2", help="second Feng-Rao number")
    _add_semigroup(p)
    p.add_argument("--method", choices=("closed", "brute", "both"), default="closed")
    _add_common(p)

    p = sub.add_parser("tower", help="Garcia-Stichtenoth tower semigroups")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="store_true", help="second-weight bound table")
    p.add_argument("--from", dest="m_from", type=int, help="first m (default 2g-1)")
    p.add_argument("--to", dest="m_to", type=int, help="last m (default 2c-2)")
    p.add_argument("--e2", action="store_true", help="E_2 by every route, cross-checked")
    p.add_argument("--apery-cards", action="store_true", help="#Ap(q^i), closed vs counted")
    p.add_argument(
        "--verify-limit",
        type=int,
        default=DEFAULT_MAX_CONDUCTOR,
        help="skip brute-force checks above this conductor (default: %(default)s)",
    )
    _add_common(p)

    p = sub.add_parser("frd", help="(generalized) Feng-Rao distance")
    _add_semigroup(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--window", type=int, help="search window for r >= 2 (default 2c + r)")
    _add_common(p)

    p = sub.add_parser("pattern", help="pattern admission")
    _add_semigroup(p)
    p.add_argument("--coeffs", type=_int_list, required=True, metavar="L")
    _add_common(p)
    return parser


def _semigroup(args) -> tuple[NumericalSemigroup, InductiveDescriptor | None]:
    limit = args.max_conductor
    if args.gens is not None:
        return from_generators(args.gens, max_conductor=limit), None
    if args.small is not None:
        if args.small and max(args.small) > limit:
            raise ConductorLimitExceeded(max(args.small), limit)
        return from_small_elements(args.small), None
    d = parse_descriptor(args.inductive)
    return build(d, max_conductor=limit), d


def _source(args) -> dict[str, Any]:
    if args.gens is not None:
        return {"gens": args.gens}
    if args.small is not None:
        return {"small": args.small}
    d = parse_descriptor(args.inductive)
    return {"a": list(d.a), "b": list(d.b)}


def _descriptor_dict(d: InductiveDescriptor | None) -> dict | None:
    return None if d is None else {"a": list(d.a), "b": list(d.b)}


# -- commands ----------------------------------------------------------------------------


def cmd_analyze(args):
    S, _ = _semigroup(args)
    d = is_inductive(S)
    record = {
        "semigroup": str(S),
        "small_elements": list(S.small_elements),
        "genus": S.genus,
        "conductor": S.conductor,
        "multiplicity": S.multiplicity,
        "frobenius_number": S.frobenius_number,
        "arf": is_arf(S),
        "saturated": is_saturated(S),
        "inductive": d is not None,
        "descriptor": _descriptor_dict(d),
    }
    return _source(args), record, None


def cmd_apery(args):
    S, d = _semigroup(args)
    if args.closed:
        d = d if d is not None else is_inductive(S)
        if d is None or d.n == 0:
            raise SemigroupError("--closed needs an inductive semigroup other than N")
        ap = apery_closed(d, args.x)
        method = "closed"
    else:
        ap = apery_set(S, args.x)
        method = "definition"
    record = {
        "semigroup": str(S),
        "x": args.x,
        "x_is_member": args.x in S,
        "method": method,
        "cardinality": ap.cardinality,
        "elements": list(ap.elements),
    }
    return dict(_source(args), x=args.x, closed=args.closed), record, None


def cmd_e2(args):
    S, d = _semigroup(args)
    record: dict[str, Any] = {"semigroup": str(S), "method": args.method}
    if args.method in ("closed", "both"):
        d = d if d is not None else is_inductive(S)
        if d is None:
            raise SemigroupError("semigroup is not inductive; use --method brute")
        record["closed"] = e2_closed(d)
    if args.method in ("brute", "both"):
        record["brute"] = feng_rao_number_2_bruteforce(S)
    if args.method == "both":
        record["agree"] = record["closed"] == record["brute"]
        if not record["agree"]:
            raise Mismatch(record)
    return dict(_source(args), method=args.method), record, None


def cmd_tower(args):
    p = TowerParams(args.q, args.n)
    if p.conductor > args.max_conductor:
        raise ConductorLimitExceeded(p.conductor, args.max_conductor)
    if not p.q_is_square:
        print(
            f"warning: q = {p.q} is not a square; the function-field tower needs a square q",
            file=sys.stderr,
        )
    sections = [name for name in ("table", "e2", "apery_cards") if getattr(args, name)]
    if args.format == "csv" and len(sections) > 1:
        raise SemigroupError("csv output takes only one of --table, --e2, --apery-cards")
    d = tower_descriptor(p)
    S = build(d)
    verify = p.conductor <= args.verify_limit
    record: dict[str, Any] = {
        "q": p.q,
        "n": p.n,
        "conductor": S.conductor,
        "genus": S.genus,
        "multiplicity": S.multiplicity,
        "descriptor": _descriptor_dict(d),
        "e2": tower_e2_closed(p),
    }
    table = None
    mismatch = False
    if args.e2:
        routes = {"e2_tower_formula": tower_e2_closed(p), "e2_descriptor": e2_closed(d)}
        if p.n >= 2:
            routes["e2_reduction"] = min(reduction_candidates(p))
        routes["e2_brute"] = feng_rao_number_2_bruteforce(S) if verify else "not verified"
        values = {v for v in routes.values() if isinstance(v, int)}
        record.update(routes)
        record["agree"] = len(values) == 1
        mismatch |= not record["agree"]
        if args.format == "csv":
            table = (["key", "value"], [[k, v] for k, v in routes.items()] + [["agree", record["agree"]]])
    if args.apery_cards:
        if p.n < 2:
            raise SemigroupError("--apery-cards needs n >= 2")
        cards = tower_apery_cards(p)
        counted = (
            apery_cardinalities(S, [p.q**i for i, _ in cards]).tolist() if verify else [None] * len(cards)
        )
        rows = [
            [i, p.q**i, card, "not verified" if seen is None else seen]
            for (i, card), seen in zip(cards, counted)
        ]
        mismatch |= any(r[3] != r[2] for r in rows if isinstance(r[3], int))
        record["apery_cards"] = [dict(zip(("power", "x", "closed", "counted"), r)) for r in rows]
        table = (["power", "x", "closed", "counted"], rows)
    if args.table:
        t = bounds_table(p, args.m_from, args.m_to)
        rows = [[r.m, r.d2_goppa_like, r.gob, r.winner] for r in t.rows]
        record["rows"] = [r.as_dict() for r in t.rows]
        table = (["m", "d2_goppa_like", "gob", "winner"], rows)
    inputs = {"q": p.q, "n": p.n, "sections": sections}
    if args.table:
        inputs.update(m_from=args.m_from, m_to=args.m_to)
    if mismatch:
        raise Mismatch(record)
    return inputs, record, table


def cmd_frd(args):
    S, _ = _semigroup(args)
    if args.r == 1 and args.window is None:
        value = feng_rao_distance(S, args.m)
        window = None
    else:
        window = args.window if args.window is not None else 2 * S.conductor + args.r
        value = generalized_feng_rao_distance(S, args.r, args.m, window)
    record = {
        "semigroup": str(S),
        "m": args.m,
        "r": args.r,
        "window": window,
        "value": value,
        "goppa": args.m + 1 - 2 * S.genus,
    }
    return dict(_source(args), m=args.m, r=args.r, window=args.window), record, None


def cmd_pattern(args):
    S, _ = _semigroup(args)
    p = Pattern(tuple(args.coeffs))
    result = admits_pattern(S, p)
    record = {
        "semigroup": str(S),
        "pattern": str(p),
        "admits": result.admitted,
        "counterexample": None if result.counterexample is None else list(result.counterexample),
    }
    return dict(_source(args), coeffs=args.coeffs), record, None


COMMANDS = {
    "analyze": cmd_analyze,
    "apery": cmd_apery,
    "e2": cmd_e2,
    "tower": cmd_tower,
    "frd": cmd_frd,
    "pattern": cmd_pattern,
}


# -- output -------------------------------------------------------------------------------


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render(command: str, inputs: dict, record: dict, table, fmt: str) -> str:
    provenance = {"tool": "fengrao", "version": __version__, "command": command, "inputs": inputs}
    if fmt == "json":
        return json.dumps(dict(record, provenance=provenance), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if table is not None:
            header, rows = table
            writer.writerow(header)
            writer.writerows([[_cell(v) for v in row] for row in rows])
        else:
            writer.writerow(["key", "value"])
            writer.writerows([[k, _cell(v)] for k, v in record.items()])
        return buf.getvalue()
    lines = [f"# fengrao {__version__} {command} {json.dumps(inputs, separators=(',', ':'))}"]
    for key, value in record.items():
        if key in ("rows", "apery_cards"):
            continue
        lines.append(f"{key}: {_cell(value)}")
    if table is not None:
        header, rows = table
        cells = [header] + [[_cell(v) for v in row] for row in rows]
        widths = [max(len(str(r[i])) for r in cells) for i in range(len(header))]
        for row in cells:
            lines.append("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        inputs, record, table = COMMANDS[args.command](args)
    except ConductorLimitExceeded as exc:
        print(f"fengrao: error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except Mismatch as exc:
        print(f"fengrao: error: cross-check failed: {exc.args[0]}", file=sys.stderr)
        return EXIT_MISMATCH
    except SemigroupError as exc:
        print(f"fengrao: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(render(args.command, inputs, record, table, args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
