"""Command-line front end.

Subcommands: ``analyze`` (all invariants of one datum), ``screen``
(verdict with hypothesis trace), ``enumerate`` (stream canonical data),
``orbits`` (character orbits under the units), ``table`` (batch screen).

Data come either from inline flags (--n/--s/--u) or from a JSON-lines
file (one ``{"n":..,"s":..,"u":[..]}`` object per line).  Output is
deterministic: same invocation, same bytes; rationals are rendered as
exact "a/b" strings, never floats.  Exit codes: 0 success, 2 bad input
or usage, 1 internal invariant failure.
"""

import argparse
import csv
import json
import sys

from torelli_screen.cover import fiber_genus, validate
from torelli_screen.errors import (
    DatumParseError,
    InternalInvariantError,
    TorelliScreenError,
)
from torelli_screen.higgs import flat_rank_lower_bounds
from torelli_screen.hodge import eigen_fiber_degree, galois_orbits, hodge_table
from torelli_screen.screen import (
    NOT_COVERED,
    NOT_COVERED_DISCLAIMER,
    ScreenConfig,
    batch_screen,
    enumerate_data,
    screen,
)


def parse_datum_file(path):
    """Read a JSON-lines file of data; any error names its line."""
    data = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DatumParseError(
                    f"{path}:{lineno}: invalid JSON: {exc}"
                ) from None
            if not isinstance(obj, dict):
                raise DatumParseError(f"{path}:{lineno}: expected a JSON object")
            for key in ("n", "s", "u"):
                if key not in obj:
                    raise DatumParseError(f"{path}:{lineno}: missing key {key!r}")
            n, s, u = obj["n"], obj["s"], obj["u"]
            if not isinstance(n, int) or not isinstance(s, int):
                raise DatumParseError(
                    f"{path}:{lineno}: 'n' and 's' must be integers"
                )
            if not isinstance(u, list) or not all(isinstance(v, int) for v in u):
                raise DatumParseError(
                    f"{path}:{lineno}: 'u' must be a list of integers"
                )
            try:
                data.append(validate(n, s, u))
            except TorelliScreenError as exc:
                raise DatumParseError(f"{path}:{lineno}: {exc}") from None
    return data


def _parse_multiplicities(text):
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise TorelliScreenError(
            f"--u expects comma-separated integers, got {text!r}"
        ) from None


def _parse_range(text, flag):
    """Range grammar: '7', '5..14' (inclusive), or '5,7,9'."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise TorelliScreenError(
            f"{flag} expects an integer, 'a..b', or a comma list, got {text!r}"
        ) from None


def _parse_bounds(pairs):
    bounds = {}
    for pair in pairs or ():
        try:
            s_text, b_text = pair.split("=", 1)
            bounds[int(s_text)] = int(b_text)
        except ValueError:
            raise TorelliScreenError(
                f"--bound expects S=B with integers, got {pair!r}"
            ) from None
    return bounds


def _config_from(args):
    return ScreenConfig(
        genus_threshold=args.genus_threshold,
        general_base_bound=_parse_bounds(getattr(args, "bound", None)),
    )


def _input_data(args):
    inline = args.n is not None or args.s is not None or args.u is not None
    if args.file and inline:
        raise TorelliScreenError("give either --file or inline --n/--s/--u, not both")
    if args.file:
        return parse_datum_file(args.file)
    if args.n is None or args.s is None:
        raise TorelliScreenError("inline input needs both --n and --s")
    return [validate(args.n, args.s, _parse_multiplicities(args.u or ""))]


def _fraction_str(value):
    return str(value)


def _analysis_doc(d):
    table = hodge_table(d)
    bounds = flat_rank_lower_bounds(d)
    return {
        "datum": d.to_json_dict(),
        "genus": fiber_genus(d),
        "hodge": list(table.h),
        "degrees": [_fraction_str(eigen_fiber_degree(d, i)) for i in range(d.n)],
        "flat_bounds": bounds.to_json_dict(),
        "orbits": galois_orbits(d.n).to_json_list(),
    }


def _print_analysis_text(doc, out):
    datum = doc["datum"]
    u_text = ",".join(str(v) for v in datum["u"])
    print(f"datum: n={datum['n']} s={datum['s']} u=[{u_text}]", file=out)
    print(f"genus: {doc['genus']}", file=out)
    print(f"hodge: {doc['hodge']}", file=out)
    print(f"degrees: [{', '.join(doc['degrees'])}]", file=out)
    fb = doc["flat_bounds"]
    refinement = "yes" if fb["prime_refinement"] else "no"
    print(
        f"flat bounds: per_char={fb['per_char']} total={fb['total']} "
        f"prime_refinement={refinement}",
        file=out,
    )
    print(f"orbits: {_orbits_text(doc['orbits'])}", file=out)


def _orbits_text(orbits):
    return " ".join("{" + ",".join(str(i) for i in orbit) + "}" for orbit in orbits)


def _print_verdict_text(d, verdict, out):
    u_text = ",".join(str(v) for v in d.u)
    print(f"datum: n={d.n} s={d.s} u=[{u_text}]", file=out)
    print(f"verdict: {verdict.status} [{verdict.theorem}]", file=out)
    for entry in verdict.trace:
        mark = "pass" if entry.passed else "FAIL"
        print(f"  {entry.hypothesis}: {entry.value} [{mark}]", file=out)
    params = " ".join(f"{k}={v}" for k, v in verdict.parameters.items())
    print(f"parameters: {params}", file=out)
    if verdict.status == NOT_COVERED:
        print(f"note: {NOT_COVERED_DISCLAIMER}", file=out)


def _cmd_analyze(args):
    out = sys.stdout
    for d in _input_data(args):
        doc = _analysis_doc(d)
        if args.format == "json":
            print(json.dumps(doc), file=out)
        else:
            _print_analysis_text(doc, out)
    return 0


def _cmd_screen(args):
    out = sys.stdout
    cfg = _config_from(args)
    for d in _input_data(args):
        verdict = screen(d, cfg)
        if args.format == "json":
            doc = {"datum": d.to_json_dict(), "verdict": verdict.to_json_dict()}
            if verdict.status == NOT_COVERED:
                doc["disclaimer"] = NOT_COVERED_DISCLAIMER
            print(json.dumps(doc), file=out)
        else:
            _print_verdict_text(d, verdict, out)
    return 0


def _cmd_orbits(args):
    part = galois_orbits(args.n)
    if args.format == "json":
        print(json.dumps(part.to_json_list()), file=sys.stdout)
    else:
        print(_orbits_text(part.to_json_list()), file=sys.stdout)
    return 0


def _cmd_enumerate(args):
    out = sys.stdout
    data = enumerate_data(args.n, args.s, args.r, args.g_max)
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "s", "u"])
        for d in data:
            writer.writerow([d.n, d.s, " ".join(str(v) for v in d.u)])
    elif args.format == "json":
        for d in data:
            print(json.dumps(d.to_json_dict()), file=out)
    else:
        for d in data:
            u_text = ",".join(str(v) for v in d.u)
            print(f"n={d.n} s={d.s} u=[{u_text}]", file=out)
    return 0


def _cmd_table(args):
    out = sys.stdout
    cfg = _config_from(args)
    rows = batch_screen(args.n, args.s, args.r, args.g_max, cfg)
    if args.format == "json":
        for row in rows:
            print(json.dumps(row.to_json_dict()), file=out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["n", "s", "u", "genus", "flat_total", "status", "theorem"]
        )
        for row in rows:
            writer.writerow(
                [
                    row.datum.n,
                    row.datum.s,
                    " ".join(str(v) for v in row.datum.u),
                    row.genus,
                    row.flat_bounds.total,
                    row.verdict.status,
                    row.verdict.theorem,
                ]
            )
    else:
        _print_table_text(rows, out)
    return 0


def _print_table_text(rows, out):
    header = ["n", "s", "u", "genus", "flat_total", "status", "theorem"]
    cells = [header]
    for row in rows:
        cells.append(
            [
                str(row.datum.n),
                str(row.datum.s),
                ",".join(str(v) for v in row.datum.u),
                str(row.genus),
                str(row.flat_bounds.total),
                row.verdict.status,
                row.verdict.theorem,
            ]
        )
    widths = [max(len(line[col]) for line in cells) for col in range(len(header))]
    for line in cells:
        print(
            "  ".join(text.ljust(width) for text, width in zip(line, widths)).rstrip(),
            file=out,
        )
    print(f"note: {NOT_COVERED_DISCLAIMER}", file=out)


def _add_datum_flags(sub):
    sub.add_argument("--n", type=int, default=None, help="cover degree")
    sub.add_argument("--s", type=int, default=None, help="base curve genus")
    sub.add_argument(
        "--u", default=None, help="comma-separated branch multiplicities"
    )
    sub.add_argument("--file", default=None, help="JSON-lines file of data")


def _add_config_flags(sub):
    sub.add_argument(
        "--genus-threshold",
        type=int,
        default=8,
        help="minimum fiber genus required by the theorems (default 8)",
    )
    sub.add_argument(
        "--bound",
        action="append",
        metavar="S=B",
        help="assert a prime bound B for base genus S >= 2 (repeatable)",
    )


def _add_range_flags(sub):
    sub.add_argument("--n", required=True, help="degree range: 7, 5..14, or 5,7")
    sub.add_argument("--s", type=int, required=True, help="base curve genus")
    sub.add_argument("--r", required=True, help="branch count range: 3, 0..6, or 2,3")
    sub.add_argument(
        "--g-max", type=int, required=True, help="largest fiber genus to keep"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="torelli-screen",
        description="Exact invariants and Shimura-curve screening for "
        "families of cyclic covers of curves.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("analyze", help="genus, eigenspace table, degrees, bounds")
    _add_datum_flags(sub)
    sub.add_argument("--format", choices=["text", "json"], default="text")
    sub.set_defaults(func=_cmd_analyze)

    sub = subs.add_parser("screen", help="apply the exclusion theorems")
    _add_datum_flags(sub)
    _add_config_flags(sub)
    sub.add_argument("--format", choices=["text", "json"], default="text")
    sub.set_defaults(func=_cmd_screen)

    sub = subs.add_parser("enumerate", help="stream canonical data in ranges")
    _add_range_flags(sub)
    sub.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sub.set_defaults(func=_cmd_enumerate)

    sub = subs.add_parser("orbits", help="character orbits under the units mod n")
    sub.add_argument("--n", type=int, required=True, help="cover degree")
    sub.add_argument("--format", choices=["text", "json"], default="text")
    sub.set_defaults(func=_cmd_orbits)

    sub = subs.add_parser("table", help="batch screen a range, render a report")
    _add_range_flags(sub)
    _add_config_flags(sub)
    sub.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sub.set_defaults(func=_cmd_table)

    return parser


def run(argv=None):
    """Parse argv and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if getattr(args, "command", None) in ("enumerate", "table"):
            args.n = _parse_range(args.n, "--n")
            args.r = _parse_range(args.r, "--r")
        return args.func(args)
    except TorelliScreenError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (InternalInvariantError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(run())
