"""flagq command-line interface.

Subcommands: product, k-product, qk-conjecture, table, verify, reduce,
explore.  Output is deterministic: terms sorted by q-degree lexicographically,
then by the one-line form of the permutation.  Exit status 0 on success, 1
when a verification sweep finds a counterexample, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import ktheory, qhring, rootsys, seidel, table, weyl
from .reporting import VerifyReport

SCHEMA = 1


class UsageError(Exception):
    pass


# --- rendering -------------------------------------------------------------

def term_symbol(w, letter: str) -> str:
    word = weyl.canonical_word(w)
    return f"{letter}[{','.join(str(i) for i in word)}]"


def render_class(cls, letter: str = "s") -> str:
    if not cls:
        return "0"
    parts = []
    for (lam, w), c in sorted(cls.items()):
        mag = []
        if abs(c) != 1:
            mag.append(str(abs(c)))
        q = rootsys.q_monomial_string(lam)
        if q != "1":
            mag.append(q)
        mag.append(term_symbol(w, letter))
        text = "*".join(mag)
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(parts)


def class_to_json(cls) -> list[dict]:
    return [
        {
            "q": list(lam),
            "w": weyl.perm_to_string(w),
            "word": list(weyl.canonical_word(w)),
            "coeff": int(c),
        }
        for (lam, w), c in sorted(cls.items())
    ]


def emit(payload: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


# --- argument handling -----------------------------------------------------

def parse_perm(args, n: int, flag: str):
    one_line = getattr(args, flag.replace("-", "_"), None)
    word = getattr(args, f"{flag}_word".replace("-", "_"), None)
    if one_line is not None and word is not None:
        raise UsageError(f"--{flag} and --{flag}-word are mutually exclusive")
    if one_line is not None:
        u = weyl.perm_from_string(one_line)
        if len(u) != n:
            raise UsageError(f"--{flag} has {len(u)} entries, expected {n}")
        return u
    if word is not None:
        return weyl.from_word(weyl.word_from_string(word), n)
    raise UsageError(f"one of --{flag} or --{flag}-word is required")


def add_perm_args(sub, *flags):
    for flag in flags:
        sub.add_argument(f"--{flag}")
        sub.add_argument(f"--{flag}-word")


def cache_dir(args) -> Path | None:
    env = os.environ.get("FLAGQ_CACHE")
    if env:
        return Path(env)
    if args.cache_dir:
        return Path(args.cache_dir)
    return None


# --- subcommands -----------------------------------------------------------

def cmd_product(args) -> int:
    n = args.n
    u = parse_perm(args, n, "u")
    v = parse_perm(args, n, "v")
    cdir = cache_dir(args)
    cls = None
    if cdir:
        path = cdir / f"table_n{n}.txt"
        if path.exists():
            cls = table.StructureTable.load(path).get(u, v)
    if cls is None:
        cls = qhring.quantum_product(u, v)
    emit({"n": n, "terms": class_to_json(cls)}, render_class(cls), args.format)
    return 0


def cmd_k_product(args) -> int:
    cls = ktheory.k_cup_special(args.hook, parse_perm(args, args.n, "v"))
    emit(
        {"n": args.n, "terms": class_to_json(cls)},
        render_class(cls, "O"),
        args.format,
    )
    return 0


def cmd_qk_conjecture(args) -> int:
    n = args.n
    u = parse_perm(args, n, "u")
    cls = ktheory.qk_conjecture_product(args.hook, u)
    if args.project:
        dp = sorted(int(p) for p in args.project.replace(",", " ").split())
        proj = ktheory.pi_star(dp, cls)
        k = next(i for i in range(1, n) if i not in dp)
        rows = ktheory.partition_labels(proj, k)
        lines = []
        jrows = []
        for mu, lam, c in rows:
            q = rootsys.q_monomial_string(lam)
            mag = ("" if abs(c) == 1 else f"{abs(c)}*") + (
                f"{q}*" if q != "1" else ""
            ) + f"O{tuple(mu)}"
            lines.append(("- " if c < 0 else "+ ") + mag)
            jrows.append({"partition": list(mu), "q": list(lam), "coeff": int(c)})
        emit(
            {"n": n, "projected": jrows, "terms": class_to_json(cls)},
            render_class(cls, "O") + "\nprojected:\n" + "\n".join(lines),
            args.format,
        )
    else:
        emit({"n": n, "terms": class_to_json(cls)}, render_class(cls, "O"), args.format)
    return 0


def cmd_table(args) -> int:
    cdir = cache_dir(args)
    if cdir is None:
        raise UsageError("table requires --cache-dir (or FLAGQ_CACHE)")
    t = table.build_table(args.n, args.degree_cap)
    path = cdir / f"table_n{args.n}.txt"
    t.save(path)
    n_entries = len(t.entries)
    emit(
        {"n": args.n, "path": str(path), "entries": n_entries},
        f"wrote {n_entries} entries to {path}",
        args.format,
    )
    return 0


def _verify_reports(which: str, n: int, engine_check: bool) -> list[VerifyReport]:
    reports = []
    if which in ("seidel", "all"):
        reports.append(seidel.verify_seidel(n))
    if which in ("pieri", "all"):
        reports.append(seidel.verify_pieri(n, engine_check=engine_check))
    if which in ("support", "all"):
        reports.append(seidel.verify_support(n))
    if which in ("filtration", "all"):
        for i in range(1, n):
            reports.append(qhring.verify_filtration(n, i, n * (n - 1)))
    if which in ("ktheory", "all"):
        reports.append(ktheory.k_verify(n))
    if not reports:
        raise UsageError(f"unknown verification target {which!r}")
    return reports


def cmd_verify(args) -> int:
    # engine comparison of the Pieri sweep is implied at small rank,
    # opt-in beyond (full products dominate the runtime there)
    engine_check = args.engine_check or args.n <= 4
    reports = _verify_reports(args.what, args.n, engine_check)
    if args.format == "json":
        print(
            json.dumps(
                {"schema": SCHEMA, "reports": [r.to_json() for r in reports]},
                sort_keys=True,
            )
        )
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.ok for r in reports) else 1


def cmd_reduce(args) -> int:
    n = args.n
    u = parse_perm(args, n, "u")
    v = parse_perm(args, n, "v")
    w = parse_perm(args, n, "w")
    lam = rootsys.degree_from_string(getattr(args, "lambda"), n)
    trace = qhring.reduce_trace(u, v, w, lam)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "terminal": trace.terminal,
                    "value": trace.value,
                    "steps": [
                        {
                            "u": weyl.perm_to_string(st.u),
                            "v": weyl.perm_to_string(st.v),
                            "w": weyl.perm_to_string(st.w),
                            "lambda": list(st.lam),
                        }
                        for st in trace.states
                    ],
                    "rules": trace.rules,
                },
                sort_keys=True,
            )
        )
    else:
        print("\n".join(trace.summary_lines()))
    return 0


def cmd_explore(args) -> int:
    rows = seidel.explore_classical_equality(args.n, args.i, args.j)
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "n": args.n, "rows": rows}, sort_keys=True))
    else:
        for r in rows:
            print(
                f"{r['one_line']} descents={','.join(map(str, r['descents'])) or '-'} "
                f"u(n)={r['u_n']} equal={r['equal']}"
            )
    return 0


# --- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagq",
        description="Exact quantum Schubert calculus on complete flag varieties",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def common(sub):
        sub.add_argument("--n", type=int, required=True)
        sub.add_argument("--format", choices=("text", "json"), default="text")
        sub.add_argument("--cache-dir", default=None)

    p = subs.add_parser("product", help="quantum product of two Schubert classes")
    common(p)
    add_perm_args(p, "u", "v")
    p.set_defaults(func=cmd_product)

    p = subs.add_parser("k-product", help="K-theory hook product")
    common(p)
    p.add_argument("--hook", type=int, required=True)
    add_perm_args(p, "v")
    p.set_defaults(func=cmd_k_product)

    p = subs.add_parser("qk-conjecture", help="conjectural QK hook product")
    common(p)
    p.add_argument("--hook", type=int, required=True)
    p.add_argument("--project", default=None, help="Delta_P indices, e.g. '1,2,4,5'")
    add_perm_args(p, "u")
    p.set_defaults(func=cmd_qk_conjecture)

    p = subs.add_parser("table", help="generate and cache a product table")
    common(p)
    p.add_argument("--degree-cap", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = subs.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "what",
        choices=("seidel", "pieri", "support", "filtration", "ktheory", "all"),
    )
    common(p)
    p.add_argument("--engine-check", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("reduce", help="quantum-to-classical reduction trace")
    common(p)
    add_perm_args(p, "u", "v", "w")
    p.add_argument("--lambda", required=True, help="degree vector, e.g. '1,1,0'")
    p.set_defaults(func=cmd_reduce)

    p = subs.add_parser("explore", help="quantum = classical equality dataset")
    common(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_explore)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 2:
        parser.exit(2, "flagq: --n must be at least 2\n")
    degree_cap = getattr(args, "degree_cap", None)
    if degree_cap is not None and degree_cap > args.n * (args.n - 1):
        parser.exit(2, "flagq: --degree-cap exceeds the top degree\n")
    try:
        return args.func(args)
    except UsageError as e:
        parser.exit(2, f"flagq: {e}\n")
    except ValueError as e:
        parser.exit(2, f"flagq: {e}\n")


if __name__ == "__main__":
    sys.exit(main())
