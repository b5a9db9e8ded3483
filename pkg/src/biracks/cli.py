"""Command-line front end.

Subcommands:

  verify PATH                 check a birack matrix file axiom by axiom
  make tsr|ca|tsrho ...       build a family birack and emit its matrix
  rank PATH                   print the birack rank (kink map order)
  classify PATH               biquandle/rack/quandle/semiquandle/simple flags
  subbiracks PATH             list every non-empty subbirack
  poly PATH [--subbirack S]   birack polynomial (or one subbirack's)
  invariant ...               counting invariants of Gauss codes
  enumerate --n N             list all biracks on N elements (N <= 3)

Exit codes: 0 success, 1 domain error (axiom violation, parse failure),
2 usage error.  All output is deterministic: two runs on the same inputs
are byte-identical, and --json payloads are schema-stable.

File formats are documented in the README: matrix files carry the
element count on line 1 and then the n x 2n block [B1 | B2] (1-indexed);
batch link files carry one "name<TAB>gauss-code" pair per line; '#'
lines are comments in both.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .core import (
    all_subbiracks,
    classify,
    cycle_string,
    enumerate_biracks,
    format_matrix,
    parse_cycles,
    read_matrix_file,
    to_matrix,
    verify_axioms,
    parse_matrix_text,
)
from .diagram import parse_gauss
from .errors import BirackError
from .families import CayleyGroup, constant_action, tau_sigma_rho_birack, tsr_birack
from .invariants import KINDS, compute_invariant, normalize, subbirack_polynomial, birack_polynomial


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _write_matrix(b, out: str | None) -> None:
    text = format_matrix(b)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_candidate(path: str):
    with open(path, encoding="utf-8") as fh:
        n, block = parse_matrix_text(fh.read())
    for row in block:
        for v in row:
            if not 1 <= v <= n:
                raise BirackError(f"entry {v} out of range 1..{n}")
    b1 = [[block[y][x] - 1 for y in range(n)] for x in range(n)]
    b2 = [[block[x][n + y] - 1 for y in range(n)] for x in range(n)]
    return n, b1, b2


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    n, b1, b2 = _load_candidate(args.path)
    report = verify_axioms(b1, b2)
    if args.json:
        payload = {
            "n": report.n,
            "ok": report.ok,
            "checks": [
                {
                    "axiom": c.name,
                    "status": c.status,
                    "witness": list(c.witness) if isinstance(c.witness, tuple) else c.witness,
                    "detail": c.detail,
                }
                for c in report.checks
            ],
        }
        _emit(json.dumps(payload, sort_keys=True))
    else:
        _emit(report.describe())
    return 0 if report.ok else 1


def _cmd_make(args) -> int:
    if args.family == "tsr":
        b = tsr_birack(args.n, args.t, args.s, args.r, args.m)
    elif args.family == "ca":
        tau = parse_cycles(args.tau, args.size)
        rho = parse_cycles(args.rho, args.size)
        b = constant_action(tau, rho)
    else:  # tsrho
        group = CayleyGroup(_read_cayley(args.cayley))
        tau = _read_map(args.tau_file, group.n)
        sigma = _read_map(args.sigma_file, group.n)
        rho = _read_map(args.rho_file, group.n)
        b = tau_sigma_rho_birack(group, tau, sigma, rho)
    _write_matrix(b, args.out)
    return 0


def _read_cayley(path: str) -> list[list[int]]:
    with open(path, encoding="utf-8") as fh:
        lines = [
            ln.strip() for ln in fh
            if ln.strip() and not ln.lstrip().startswith("#")
        ]
    if not lines:
        raise BirackError("empty Cayley table file")
    n = int(lines[0])
    if len(lines) != n + 1:
        raise BirackError(f"expected {n} Cayley rows, found {len(lines) - 1}")
    table = []
    for ln in lines[1:]:
        row = [int(tok) - 1 for tok in ln.split()]
        if len(row) != n:
            raise BirackError(f"expected {n} entries per Cayley row")
        table.append(row)
    return table


def _read_map(path: str, n: int) -> list[int]:
    with open(path, encoding="utf-8") as fh:
        tokens = [
            tok for ln in fh if not ln.lstrip().startswith("#")
            for tok in ln.split()
        ]
    if len(tokens) != n:
        raise BirackError(f"map file {path} must list {n} images")
    return [int(tok) - 1 for tok in tokens]


def _cmd_rank(args) -> int:
    b = read_matrix_file(args.path)
    _emit(str(b.rank))
    return 0


def _cmd_classify(args) -> int:
    b = read_matrix_file(args.path)
    flags = classify(b).flags()
    if args.json:
        payload = dict(flags)
        payload["n"] = b.n
        payload["rank"] = b.rank
        payload["kink_map"] = cycle_string(b.pi)
        _emit(json.dumps(payload, sort_keys=True))
    else:
        _emit(f"n: {b.n}")
        _emit(f"rank: {b.rank}")
        _emit(f"kink map: {cycle_string(b.pi)}")
        for name, value in flags.items():
            _emit(f"{name}: {'yes' if value else 'no'}")
    return 0


def _cmd_subbiracks(args) -> int:
    b = read_matrix_file(args.path)
    subs = all_subbiracks(b)
    if args.json:
        _emit(json.dumps([sorted(x + 1 for x in s) for s in subs]))
    else:
        for s in subs:
            _emit("{" + ", ".join(str(x + 1) for x in sorted(s)) + "}")
    return 0


def _cmd_poly(args) -> int:
    b = read_matrix_file(args.path)
    if args.subbirack:
        subset = {int(tok) - 1 for tok in args.subbirack.replace(",", " ").split()}
        value = subbirack_polynomial(b, subset)
    else:
        value = birack_polynomial(b)
    if args.json:
        _emit(json.dumps({"polynomial": value.canonical_string()}))
    else:
        _emit(value.canonical_string())
    return 0


def _invariant_payload(name, kind, birack_file, code, value, labelings=None) -> dict:
    payload = {
        "invariant": kind + ("-normalized" if value.normalized else ""),
        "birack_file": birack_file,
        "gauss_code": code,
        "link": name,
        "value_canonical_string": value.value_string(),
        "multiset": [[_sig_json(sig), mult] for sig, mult in value.multiset],
        "per_framing_counts": (
            [[list(w), m] for w, m in value.per_framing]
            if value.per_framing is not None
            else None
        ),
    }
    if labelings is not None:
        payload["labelings"] = [
            [list(w), [[v + 1 for v in lab.assignment] for lab in labs]]
            for w, labs in labelings
        ]
    return payload


def _sig_json(sig):
    return list(sig) if isinstance(sig, tuple) else sig


def _cmd_invariant(args) -> int:
    from .invariants import labelings_by_framing

    b = read_matrix_file(args.birack)
    if (args.gauss is None) == (args.batch is None):
        raise UsageError("provide exactly one of --gauss or --batch")
    jobs: list[tuple[str, str]] = []
    if args.gauss is not None:
        jobs.append(("-", args.gauss))
    else:
        with open(args.batch, encoding="utf-8") as fh:
            for ln in fh:
                if not ln.strip() or ln.lstrip().startswith("#"):
                    continue
                name, _, code = ln.rstrip("\n").partition("\t")
                jobs.append((name.strip(), code.strip()))
    results = []
    for name, code in jobs:
        d = parse_gauss(code)
        value = compute_invariant(d, b, args.type)
        labelings = labelings_by_framing(d, b) if args.labelings else None
        if args.normalize:
            value = normalize(value, d, b)
        results.append((name, code, value, labelings))
    if args.json:
        payload = [
            _invariant_payload(name, args.type, args.birack, code, value, labelings)
            for name, code, value, labelings in results
        ]
        _emit(json.dumps(payload[0] if args.gauss is not None else payload, sort_keys=True))
    else:
        for name, code, value, labelings in results:
            if args.gauss is not None:
                _emit(value.value_string())
            else:
                _emit(f"{name}\t{args.type}\t{value.value_string()}")
            if labelings is not None:
                for w, labs in labelings:
                    framing = ",".join(str(v) for v in w)
                    for lab in labs:
                        row = " ".join(str(v + 1) for v in lab.assignment)
                        _emit(f"  w=({framing}): {row}")
    return 0


def _cmd_enumerate(args) -> int:
    biracks = enumerate_biracks(args.n)
    if args.json:
        payload = [
            {
                "matrix": to_matrix(b),
                "rank": b.rank,
                "flags": classify(b).flags(),
            }
            for b in biracks
        ]
        _emit(json.dumps(payload, sort_keys=True))
    else:
        _emit(f"{len(biracks)} birack(s) on {args.n} element(s)")
        for i, b in enumerate(biracks, start=1):
            flags = classify(b).flags()
            names = [k.removeprefix("is_") for k, v in flags.items() if v]
            _emit(f"# {i}: rank {b.rank}" + (f" ({', '.join(names)})" if names else ""))
            for row in to_matrix(b):
                _emit(" ".join(str(v) for v in row))
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biracks",
        description="Finite biracks and birack counting invariants of links.",
    )
    parser.add_argument("--version", action="version", version=f"biracks {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a birack matrix file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("make", help="construct a family birack")
    fam = p.add_subparsers(dest="family", required=True)
    ptsr = fam.add_parser("tsr", help="linear birack B(x,y) = (ty+sx, rx) on (Z_n)^m")
    ptsr.add_argument("--n", type=int, required=True)
    ptsr.add_argument("--t", type=int, required=True)
    ptsr.add_argument("--s", type=int, required=True)
    ptsr.add_argument("--r", type=int, required=True)
    ptsr.add_argument("--m", type=int, default=1)
    ptsr.add_argument("--out")
    ptsr.set_defaults(func=_cmd_make)
    pca = fam.add_parser("ca", help="constant action birack from two commuting cycles")
    pca.add_argument("--tau", required=True, help='cycle notation, e.g. "(1 2)"')
    pca.add_argument("--rho", required=True, help='cycle notation, e.g. "(3 4)"')
    pca.add_argument("--size", type=int, required=True)
    pca.add_argument("--out")
    pca.set_defaults(func=_cmd_make)
    pg = fam.add_parser("tsrho", help="group birack B(x,y) = (tau(y)sigma(x), rho(x))")
    pg.add_argument("--cayley", required=True, help="Cayley table file (1-indexed)")
    pg.add_argument("--tau", dest="tau_file", required=True, help="map file for tau")
    pg.add_argument("--sigma", dest="sigma_file", required=True, help="map file for sigma")
    pg.add_argument("--rho", dest="rho_file", required=True, help="map file for rho")
    pg.add_argument("--out")
    pg.set_defaults(func=_cmd_make)

    p = sub.add_parser("rank", help="print the birack rank")
    p.add_argument("path")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("classify", help="special-case flags of a birack")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("subbiracks", help="list all non-empty subbiracks")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_subbiracks)

    p = sub.add_parser("poly", help="birack polynomial (or a subbirack's)")
    p.add_argument("path")
    p.add_argument("--subbirack", help='1-indexed elements, e.g. "1,2"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("invariant", help="counting invariant of a Gauss code")
    p.add_argument("--birack", required=True, help="birack matrix file")
    p.add_argument("--gauss", help="signed Gauss code")
    p.add_argument("--batch", help="file of name<TAB>gauss-code lines")
    p.add_argument("--type", required=True, choices=KINDS)
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--labelings", action="store_true",
                   help="also dump every labeling per framing vector")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("enumerate", help="list all biracks on n elements (n <= 3)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (BirackError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
