"""
Command line interface.

Exit codes: 0 success, 1 a property violation or method disagreement,
2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from ..bracket import bracket_skew, certify, rewrite_search
from ..perm import Perm, all_perms, bruhat_leq, format_perm, parse_perm
from ..poly import parse_poly
from ..schubert import expansion_to_json, key_poly, schubert_poly, skew_key_poly
from ..schur import lr_numbers, parse_partition, skew_schur_jt, skew_schur_tableaux
from ..skewop import skew_apply, skew_schubert
from .identities import run_identities
from .methods import METHODS, compare_methods, constants
from .scan import ScanError, max_rank, run_scan

OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _perm(text: str, n: int) -> Perm:
    w = parse_perm(text, n)
    if w.n != n:
        raise UsageError(f"{text} is not in S_{n}")
    return w


def _rank(n: int) -> int:
    if n < 1 or n > max_rank():
        raise UsageError(f"rank {n} outside 1..{max_rank()} (SCHUBERT_MAX_N)")
    return n


def format_expansion(coeffs: dict[Perm, int]) -> str:
    items = sorted(coeffs.items(), key=lambda kv: kv[0].images)
    return "{" + ", ".join(f"{format_perm(w)}:{c}" for w, c in items) + "}"


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def cmd_schubert(args) -> int:
    w = _perm(args.perm, _rank(args.n))
    s = schubert_poly(w)
    _emit(args, str(s), {"perm": list(w.images), "poly": s.to_json()})
    return OK


def cmd_skew_apply(args) -> int:
    n = _rank(args.n)
    w, v = _perm(args.w, n), _perm(args.v, n)
    if not bruhat_leq(v, w):
        raise UsageError(f"{format_perm(v)} is not below {format_perm(w)} in Bruhat order")
    g = skew_apply(w, v, parse_poly(args.poly))
    _emit(args, str(g), {"w": list(w.images), "v": list(v.images), "poly": g.to_json()})
    return OK


def _constants_pair(args, u: Perm, v: Perm, n: int) -> tuple[list[str], dict, bool]:
    if args.method == "all":
        results, bad = compare_methods(u, v, n)
        lines = [f"{m}: {format_expansion(results[m])}" for m in METHODS]
        lines.append("agree" if not bad else "DISAGREE at " + ", ".join(map(format_perm, bad)))
        data = {m: expansion_to_json(results[m], n) for m in METHODS}
        data["disagreements"] = [list(w.images) for w in bad]
        return lines, data, not bad
    result = constants(u, v, n, args.method)
    return [format_expansion(result)], expansion_to_json(result, n), True


def cmd_constants(args) -> int:
    n = _rank(args.n)
    if (args.u is None) != (args.v is None):
        raise UsageError("give both --u and --v, or neither to sweep all pairs")
    if args.u is not None:
        u, v = _perm(args.u, n), _perm(args.v, n)
        lines, data, ok = _constants_pair(args, u, v, n)
        data = {"u": list(u.images), "v": list(v.images), "result": data}
        _emit(args, "\n".join(lines), data)
        return OK if ok else VIOLATION
    bad_pairs = []
    count = 0
    for u in all_perms(n):
        for v in all_perms(n):
            _, _, ok = _constants_pair(args, u, v, n)
            count += 1
            if not ok:
                bad_pairs.append((u, v))
    text = f"{count} pairs, {len(bad_pairs)} with disagreements"
    text += "".join(f"\n  u={format_perm(u)} v={format_perm(v)}" for u, v in bad_pairs)
    _emit(args, text, {"pairs": count,
                       "disagreements": [[list(u.images), list(v.images)] for u, v in bad_pairs]})
    return OK if not bad_pairs else VIOLATION


def cmd_skew_schubert(args) -> int:
    n = _rank(args.n)
    w, v = _perm(args.w, n), _perm(args.v, n)
    if not bruhat_leq(v, w):
        raise UsageError(f"{format_perm(v)} is not below {format_perm(w)} in Bruhat order")
    s = skew_schubert(w, v)
    _emit(args, str(s), {"w": list(w.images), "v": list(v.images), "poly": s.to_json()})
    return OK


def cmd_key(args) -> int:
    alpha = tuple(int(t) for t in args.alpha.split(","))
    if any(a < 0 for a in alpha):
        raise UsageError("composition entries must be nonnegative")
    if args.v is None:
        k = key_poly(alpha)
    else:
        k = skew_key_poly(alpha, _perm(args.v, len(alpha)))
    _emit(args, str(k), {"alpha": list(alpha), "poly": k.to_json()})
    return OK


def cmd_bracket(args) -> int:
    n = _rank(args.n)
    w, v = _perm(args.w, n), _perm(args.v, n)
    if not bruhat_leq(v, w):
        raise UsageError(f"{format_perm(v)} is not below {format_perm(w)} in Bruhat order")
    e = bracket_skew(w, v)
    data = {"w": list(w.images), "v": list(v.images), "bracket": str(e)}
    lines = [str(e)]
    if args.search is not None:
        found = rewrite_search(e, max_steps=args.search)
        data["rewritten"] = None if found is None else str(found)
        if found is None:
            lines.append(f"no nonnegative form within {args.search} states")
        else:
            data["certified"] = certify(e, found, n)
            lines.append(f"= {found}")
    _emit(args, "\n".join(lines), data)
    return OK


def cmd_schur(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu or "")
    if args.nu is not None:
        c = lr_numbers(lam, mu, parse_partition(args.nu))
        _emit(args, str(c), {"lambda": list(lam), "mu": list(mu), "nu": list(parse_partition(args.nu)), "c": c})
        return OK
    jt = skew_schur_jt(lam, mu, args.n)
    tab = skew_schur_tableaux(lam, mu, args.n)
    if jt != tab:
        print(f"determinant {jt} differs from tableaux sum {tab}", file=sys.stderr)
        return VIOLATION
    _emit(args, str(jt), {"lambda": list(lam), "mu": list(mu), "n": args.n, "poly": jt.to_json()})
    return OK


def cmd_scan(args) -> int:
    try:
        summary = run_scan(args.n, args.mode, args.out, resume=args.resume, jobs=args.jobs)
    except ScanError as exc:
        raise UsageError(str(exc)) from exc
    text = (f"n={summary['n']} mode={summary['mode']} tasks={summary['tasks']} new={summary['new']} "
            f"skipped={summary['skipped']} positive={summary['positive']} negative={summary['negative']}")
    for r in summary["negatives"]:
        text += f"\nNEGATIVE w={r['w']} v={r['v']} u={r['u']} witness={r['witness']}"
    _emit(args, text, summary)
    return OK if summary["negative"] == 0 else VIOLATION


def cmd_verify(args) -> int:
    results = run_identities(_rank(args.n), args.seed, args.only)
    failed = [r for r in results if not r.passed]
    text = "\n".join(r.line() for r in results) + f"\n{len(results) - len(failed)}/{len(results)} passed"
    _emit(args, text, {"n": args.n, "seed": args.seed, "results": [r.to_json() for r in results]})
    return OK if not failed else VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewschubert", description=__doc__.strip().splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("schubert", help="Schubert polynomial S_w")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--perm", required=True, help="one-line (2,1,4,3) or word form (s:1,3)")
    s.set_defaults(func=cmd_schubert)

    s = sub.add_parser("skew-apply", help="apply ∂_{w/v} to a polynomial")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--w", required=True)
    s.add_argument("--v", required=True)
    s.add_argument("--poly", required=True)
    s.set_defaults(func=cmd_skew_apply)

    s = sub.add_parser("constants", help="structure constants c^w_{uv}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--u")
    s.add_argument("--v")
    s.add_argument("--method", choices=METHODS + ("all",), default="product")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("skew-schubert", help="skew Schubert polynomial S_{w/v}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--w", required=True)
    s.add_argument("--v", required=True)
    s.set_defaults(func=cmd_skew_schubert)

    s = sub.add_parser("key", help="key polynomial, or its skew version with --v")
    s.add_argument("--alpha", required=True, help="composition, e.g. 0,1,2")
    s.add_argument("--v")
    s.set_defaults(func=cmd_key)

    s = sub.add_parser("bracket", help="bracket element [w/v] and optional rewriting search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--w", required=True)
    s.add_argument("--v", required=True)
    s.add_argument("--search", type=int, metavar="BUDGET")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("schur", help="skew Schur polynomial or LR number")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu")
    s.add_argument("--nu")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_schur)

    s = sub.add_parser("scan", help="positivity scan of ∂_{w/v} S_u")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=("edges", "full"), required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--resume", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("verify", help="run the identity suites")
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--only", action="append", help="run suites whose name starts with this prefix")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
