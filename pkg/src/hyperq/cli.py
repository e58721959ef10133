"""Command line interface.

Every subcommand prints a plain text result by default, or a stable
JSON object with ``--json``.  ``--out PATH`` writes the payload to a
file instead of stdout.  Exit codes: 0 success, 1 a verification sweep
reported failures, 2 usage or malformed input, 3 input outside a
command's supported domain (for example ``qrat --via graph`` on a
rational that is not greater than one).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hyperbinary as hb
from . import matrices as mx
from . import qrational as qr
from . import stern
from .fence import fence, fence_dot, ideal_members, ideals, ideals_dot, rgf
from .verify import REGISTRY, run_verify


def _parse_rational(text: str) -> tuple[int, int]:
    """Parse 'r/s' (or a bare integer 'r' meaning r/1)."""
    parts = text.split("/")
    try:
        if len(parts) == 1:
            return int(parts[0]), 1
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected a rational like 7/3, got {text!r}")


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return n


def _pos(text: str) -> int:
    n = _nonneg(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperq",
        description="Hyperbinary expansions, q-deformed rationals, and their identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--out", metavar="PATH", help="write the output to a file")
        return p

    p = add("fusc", "diatomic sequence value fusc(n)")
    p.add_argument("n", type=_nonneg)

    p = add("fuscq", "q-analogue fusc_q(n) as a polynomial in q")
    p.add_argument("n", type=_nonneg)

    p = add("cw", "n-th term of the enumeration of the positive rationals")
    p.add_argument("n", type=_nonneg)

    p = add("cwq", "q-deformed n-th term, a ratio of polynomials")
    p.add_argument("n", type=_nonneg)

    p = add("cwindex", "position of r/s in the rational enumeration")
    p.add_argument("rational", type=_parse_rational, metavar="R/S")

    p = add("qrat", "q-deformation of a nonnegative rational r/s")
    p.add_argument("rational", type=_parse_rational, metavar="R/S")
    p.add_argument(
        "--via",
        choices=("cf", "graph"),
        default="cf",
        help="compute via continued fractions (default) or via closure sets "
        "of an oriented path (requires r/s > 1)",
    )

    p = add("hyper", "hyperbinary expansions of n")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true", help="list expansions, largest first")
    g.add_argument("--count", action="store_true", help="number of expansions (default)")
    g.add_argument("--genfunc", action="store_true", help="generating polynomial h_q(n)")
    g.add_argument("--stats", action="store_true",
                   help="per expansion statistics (ones, twos, trailing zeros, weight)")
    g.add_argument("--dot", action="store_true",
                   help="DOT source for the lattice of expansions")
    p.add_argument("n", type=_nonneg)

    p = add("fence", "fence poset of n and its order ideals")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--ideals", action="store_true", help="list order ideals by size")
    g.add_argument("--rgf", action="store_true", help="rank generating function")
    g.add_argument("--dot", action="store_true", help="DOT source for the fence")
    g.add_argument("--dot-ideals", action="store_true",
                   help="DOT source for the lattice of order ideals")
    p.add_argument("n", type=_pos)

    p = add("matrix", "2x2 L/R product M(n) over Laurent polynomials")
    p.add_argument("--prime", action="store_true",
                   help="use the two-variable L'/R' matrices instead")
    p.add_argument("n", type=_pos)

    p = add("verify", "sweep one identity family (or all) over a range")
    p.add_argument("name", choices=sorted(REGISTRY) + ["all"])
    p.add_argument("--max", type=_pos, default=None, dest="max_n",
                   help="override the sweep's upper bound")

    return parser


def _cmd_fusc(args) -> tuple[str, dict]:
    v = stern.fusc(args.n)
    return str(v), {"n": args.n, "fusc": v}


def _cmd_fuscq(args) -> tuple[str, dict]:
    p = stern.fusc_q(args.n)
    return p.text(), {"n": args.n, "fusc_q": p.text()}


def _cmd_cw(args) -> tuple[str, dict]:
    f = stern.cw(args.n)
    return (f"{f.numerator}/{f.denominator}",
            {"n": args.n, "num": f.numerator, "den": f.denominator})


def _cmd_cwq(args) -> tuple[str, dict]:
    v = stern.cw_q(args.n).canonical()
    return v.text(), {"n": args.n, "num": v.num.text(), "den": v.den.text()}


def _cmd_cwindex(args) -> tuple[str, dict]:
    r, s = args.rational
    n = qr.cw_index(r, s)
    return str(n), {"r": r, "s": s, "n": n}


def _cmd_qrat(args) -> tuple[str, dict]:
    r, s = args.rational
    if args.via == "graph":
        v = qr.qdeform_via_graph(r, s).canonical()
    else:
        v = qr.qdeform(r, s).canonical()
    return (v.text(),
            {"r": r, "s": s, "via": args.via, "num": v.num.text(), "den": v.den.text()})


def _cmd_hyper(args) -> tuple[str, dict]:
    n = args.n
    if args.list:
        elems = hb.expansions(n)
        texts = [hb.digits_text(d) for d in elems]
        return ("\n".join(t if t else "ε" for t in texts),
                {"n": n, "expansions": texts})
    if args.genfunc:
        p = hb.h_q(n)
        return p.text(), {"n": n, "h_q": p.text()}
    if args.stats:
        rows = hb.stats_rows(n)
        header = "digits ell p1 p2 t z s_vector"
        lines = [header]
        for row in rows:
            sv = ",".join(str(x) for x in row["s_vector"])
            digits = row["digits"] if row["digits"] else "ε"
            lines.append(
                f"{digits} {row['ell']} {row['p1']} {row['p2']} {row['t']} {row['z']} {sv}"
            )
        return "\n".join(lines), {"n": n, "expansions": rows}
    if args.dot:
        src = hb.lattice_dot(n)
        return src, {"n": n, "dot": src}
    c = hb.h_count(n)
    return str(c), {"n": n, "count": c}


def _cmd_fence(args) -> tuple[str, dict]:
    n = args.n
    f = fence(n)
    if args.ideals:
        masks = ideals(f)
        members = [ideal_members(m, f.size) for m in masks]
        lines = ["{" + ", ".join(f"x{i}" for i in mem) + "}" if mem else "{}"
                 for mem in members]
        return "\n".join(lines), {"n": n, "size": f.size, "ideals": members}
    if args.rgf:
        p = rgf(f)
        return p.text(), {"n": n, "rgf": p.text()}
    if args.dot:
        src = fence_dot(n)
        return src, {"n": n, "dot": src}
    if args.dot_ideals:
        src = ideals_dot(n)
        return src, {"n": n, "dot": src}
    covers = f.cover_pairs()
    lines = [f"elements: {f.size}"]
    lines += [f"x{lo} < x{hi}" for lo, hi in covers]
    return ("\n".join(lines),
            {"n": n, "size": f.size, "covers": [list(c) for c in covers]})


def _cmd_matrix(args) -> tuple[str, dict]:
    n = args.n
    if args.prime:
        m = mx.m_prime_of(n)
        texts = [e.text() for e in m.entries()]
    else:
        m = mx.m_of(n)
        texts = [e.text() for e in m.entries()]
    text = f"{texts[0]} | {texts[1]}\n{texts[2]} | {texts[3]}"
    return (text,
            {"n": n, "prime": bool(args.prime),
             "entries": [[texts[0], texts[1]], [texts[2], texts[3]]]})


def _cmd_verify(args) -> tuple[str, dict, bool]:
    reports = run_verify(args.name, args.max_n)
    lines: list[str] = []
    for rep in reports:
        lines.extend(rep.lines())
    ok = all(rep.passed for rep in reports)
    payload = {"reports": [rep.to_dict() for rep in reports], "passed": ok}
    return "\n".join(lines), payload, ok


_HANDLERS = {
    "fusc": _cmd_fusc,
    "fuscq": _cmd_fuscq,
    "cw": _cmd_cw,
    "cwq": _cmd_cwq,
    "cwindex": _cmd_cwindex,
    "qrat": _cmd_qrat,
    "hyper": _cmd_hyper,
    "fence": _cmd_fence,
    "matrix": _cmd_matrix,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            text, payload, ok = _cmd_verify(args)
            exit_code = 0 if ok else 1
        else:
            text, payload = _HANDLERS[args.command](args)
            exit_code = 0
    except qr.UnsupportedDomain as exc:
        print(f"hyperq: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"hyperq: {exc}", file=sys.stderr)
        return 2

    out = json.dumps(payload, indent=2) if args.json else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
