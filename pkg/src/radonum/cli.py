"""Command line front end.

Subcommands:
  formula   print C(m, a), optionally with the base-a breakdown
  construct emit the lower-bound coloring (or a hand-built small case)
  check     test a coloring file for monochromatic solutions
  exact     exhaustive search for the Rado number, with certificate output
  sweep     exact search across a range of m, compared against known values
  selftest  built-in consistency run (known values + oracle agreement)

Exit codes: 0 success / VALID, 1 failure / witness found / cutoff,
2 usage or input errors. JSON output is byte-stable: keys sorted, red
elements ascending, one trailing newline.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .checker import find_mono_solution, is_valid_coloring, naive_find_mono_solution, verify_witness
from .construction import lower_bound_coloring, small_case_coloring
from .core import Coloring, RadoEquation, Witness
from .formula import ceiling_formula, closed_form, decompose, known_rado_number
from .search import exact_rado_number, sweep


def dumps(obj) -> str:
    """Canonical JSON encoding used for every file and stdout document."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class CertificateFile:
    """Self-contained claim about one coloring of one equation.

    claim "valid": the coloring has no monochromatic solution. claim
    "witness": it has one, and the embedded witness proves it.
    """

    equation: RadoEquation
    coloring: Coloring
    claim: str
    witness: Witness | None = None
    tool_version: str = __version__

    def __post_init__(self) -> None:
        if self.claim not in ("valid", "witness"):
            raise ValueError(f"claim must be 'valid' or 'witness', got {self.claim!r}")
        if (self.witness is None) == (self.claim == "witness"):
            raise ValueError("claim 'witness' needs a witness; claim 'valid' forbids one")

    def to_dict(self) -> dict:
        data = {
            "equation": {"m": self.equation.m, "a": self.equation.a},
            "coloring": self.coloring.to_dict(),
            "claim": self.claim,
            "tool_version": self.tool_version,
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data

    @classmethod
    def from_dict(cls, data: dict) -> CertificateFile:
        witness = Witness.from_dict(data["witness"]) if "witness" in data else None
        return cls(
            RadoEquation(int(data["equation"]["m"]), int(data["equation"]["a"])),
            Coloring.from_dict(data["coloring"]),
            data["claim"],
            witness,
            data.get("tool_version", __version__),
        )

    def verify(self) -> bool:
        """Re-run the checker; does not trust any field beyond the raw data."""
        if self.claim == "valid":
            return is_valid_coloring(self.coloring, self.equation)
        return verify_witness(self.witness, self.coloring, self.equation)


def write_certificate(path: str | Path, cert: CertificateFile) -> None:
    Path(path).write_text(dumps(cert.to_dict()), encoding="utf-8")


def load_certificate(path: str | Path) -> CertificateFile:
    return CertificateFile.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def _load_coloring_file(path: str | Path) -> tuple[Coloring, RadoEquation | None]:
    """Read either a bare coloring document or a certificate wrapping one."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if "coloring" in data:
        eq = None
        if "equation" in data:
            eq = RadoEquation(int(data["equation"]["m"]), int(data["equation"]["a"]))
        return Coloring.from_dict(data["coloring"]), eq
    return Coloring.from_dict(data), None


def _resolve_threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("RADO_THREADS", "1"))


def _cmd_formula(args) -> int:
    eq = RadoEquation(args.m, args.a)
    print(ceiling_formula(eq))
    if args.breakdown:
        bd = decompose(eq)
        case = "c=1" if bd.c == 1 else ("c=0" if bd.c == 0 else "2<=c<=a-1")
        print(f"breakdown: u={bd.u} v={bd.v} c={bd.c} t={bd.t}")
        print(f"case: {case}")
        print(f"closed_form: {closed_form(eq)}")
    return 0


def _cmd_construct(args) -> int:
    if args.small_case is not None:
        eq = RadoEquation(args.small_case, 3)
        col = small_case_coloring(args.small_case)
    elif args.m is not None and args.a is not None:
        eq = RadoEquation(args.m, args.a)
        col = lower_bound_coloring(eq)
    else:
        print("error: need either --m and --a, or --small-case", file=sys.stderr)
        return 2
    payload = dumps(col.to_dict())
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
        print(f"wrote {args.out} (n={col.n}, red={list(col.red_elements())})")
    else:
        sys.stdout.write(payload)
    if args.verify:
        witness = find_mono_solution(col, eq)
        if witness is not None:
            sys.stdout.write(dumps(witness.to_dict()))
            return 1
        print("VALID")
    return 0


def _cmd_check(args) -> int:
    col, embedded_eq = _load_coloring_file(args.file)
    if args.m is not None and args.a is not None:
        eq = RadoEquation(args.m, args.a)
    elif embedded_eq is not None:
        eq = embedded_eq
    else:
        print("error: the file carries no equation; pass --m and --a", file=sys.stderr)
        return 2
    witness = find_mono_solution(col, eq)
    if witness is None:
        print("VALID")
        return 0
    sys.stdout.write(dumps(witness.to_dict()))
    return 1


def _cmd_exact(args) -> int:
    eq = RadoEquation(args.m, args.a)
    outcome = exact_rado_number(eq, n_max=args.n_max, threads=_resolve_threads(args))
    print(
        f"# deepest_valid={outcome.deepest_valid} nodes={outcome.stats.nodes} "
        f"checks={outcome.stats.checks} millis={outcome.stats.millis:.1f}",
        file=sys.stderr,
    )
    if args.cert:
        write_certificate(
            args.cert, CertificateFile(eq, outcome.certificate, "valid")
        )
    if outcome.exact:
        print(outcome.rado_number)
        return 0
    print(f"cutoff deepest_valid={outcome.deepest_valid}")
    return 1


def _format_entry(row: dict) -> str:
    def show(key):
        value = row[key]
        if value is None:
            return "-"
        if key == "agree":
            return "yes" if value else "no"
        return str(value)

    return (
        f"m={row['m']} a={row['a']} exact={show('exact')} formula={show('formula')} "
        f"agree={show('agree')} nodes={row['nodes']} millis={row['millis']}"
    )


def _cmd_sweep(args) -> int:
    entries = sweep(
        args.a, args.m_from, args.m_to,
        n_max=args.n_max, threads=_resolve_threads(args), timeout=args.timeout,
    )
    rows = [entry.to_report_dict() for entry in entries]
    for row in rows:
        print(_format_entry(row))
    if args.report:
        Path(args.report).write_text(dumps(rows), encoding="utf-8")
    return 1 if any(row["agree"] is False for row in rows) else 0


def _cmd_selftest(args) -> int:
    failures = 0

    for entry in sweep(3, 3, 10, n_max=12):
        got = entry.outcome.rado_number
        want = None if entry.known is None else entry.known.value
        ok = entry.agree is True
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} exact L({entry.m},3) = {got} (known {want})")

    oracle_eqs = [(3, 1), (3, 3), (4, 3), (5, 3), (5, 2)]
    for m, a in oracle_eqs:
        eq = RadoEquation(m, a)
        mismatches = 0
        total = 0
        for n in range(0, 7):
            for red in range(1 << n):
                col = Coloring(n, red << 1)
                total += 1
                fast = find_mono_solution(col, eq)
                slow = naive_find_mono_solution(col, eq)
                if (fast is None) != (slow is None):
                    mismatches += 1
        ok = mismatches == 0
        failures += not ok
        print(
            f"{'PASS' if ok else 'FAIL'} oracle agreement L({m},{a}) "
            f"on {total} colorings of [0..6]"
        )

    print(f"{'OK' if failures == 0 else 'FAILED'}: {failures} failing items")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radonum",
        description="2-color Rado numbers of x1 + ... + x_{m-1} = a*x_m",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="print C(m, a)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--breakdown", action="store_true", help="also print u, v, c, t and the closed form")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("construct", help="emit a solution-free coloring")
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--small-case", type=int, dest="small_case", metavar="M",
                   help="hand-built a=3 extremal coloring, M in {5, 6}")
    p.add_argument("--verify", action="store_true", help="re-check the coloring before exiting")
    p.add_argument("--out", help="write the coloring JSON here instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="search a coloring file for monochromatic solutions")
    p.add_argument("--file", required=True, help="coloring JSON or certificate JSON")
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("exact", help="exhaustive Rado number search")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n-max", type=int, default=24, dest="n_max")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: RADO_THREADS or 1)")
    p.add_argument("--cert", help="write a validity certificate for the deepest coloring")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("sweep", help="exact search across a range of m")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--m-from", type=int, required=True, dest="m_from")
    p.add_argument("--m-to", type=int, required=True, dest="m_to")
    p.add_argument("--n-max", type=int, default=24, dest="n_max")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--timeout", type=float, default=None, help="per-entry timeout in seconds")
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("selftest", help="consistency run: known values and oracle agreement")
    p.set_defaults(func=_cmd_selftest)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and execute one subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        # bad parameters, bad files, malformed JSON documents
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
