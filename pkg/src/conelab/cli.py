"""``conelab`` command line: JSON cone documents in, sorted-key JSON out.

Exit status is 0 on success, 2 on malformed input or violated preconditions,
and 1 when ``verify-theorems`` finds a property that does not hold.  A short
human-readable summary goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .catalog import CatalogSpec, Kind
from .cone import Cone, from_document, to_document
from .decompose import decompose, recognize_orthant_form
from .errors import ConeError, DocumentError
from .exact import rat_str, to_rat
from .jordan import verify_prop5, verify_prop5_exact
from .lyapunov import complementary_pairs, ll_basis, lyapunov_rank
from .symmetry import contains_ones_axis, is_permutation_invariant
from .theorems import run_suite


class UsageError(Exception):
    pass


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from exc


def _load_cone(args) -> Cone:
    if not args.input:
        raise UsageError("--input FILE (or - for stdin) is required")
    return from_document(_read_json(args.input))


def _rays_json(rays) -> list[list[str]]:
    return [[rat_str(x) for x in r] for r in rays]


def _rat_arg(text: str):
    try:
        return to_rat(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _n_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from exc


def cmd_dual(args) -> dict:
    K = _load_cone(args)
    return to_document(K.dual(), complete=True)


def cmd_extreme(args) -> dict:
    K = _load_cone(args)
    rays = K.extreme_rays()
    return {"n": K.dim, "count": len(rays), "rays": _rays_json(rays)}


def cmd_rank(args) -> dict:
    K = _load_cone(args)
    return {"beta": lyapunov_rank(K), "pairs": len(complementary_pairs(K)), "n": K.dim}


def cmd_ll_basis(args) -> dict:
    K = _load_cone(args)
    basis = ll_basis(K)
    mats = [[[rat_str(x) for x in M.row(i)] for i in range(M.rows)] for M in basis]
    return {"n": K.dim, "beta": len(mats), "basis": mats}


def cmd_decompose(args) -> dict:
    K = _load_cone(args)
    d = decompose(K)
    form = None
    if K.is_proper() and is_permutation_invariant(K):
        f = recognize_orthant_form(K)
        if f is not None:
            form = {"a": rat_str(f.a), "b": rat_str(f.b)}
    return {
        "n": K.dim,
        "components": [_rays_json(r) for r in d.rays],
        "irreducible": len(d) == 1,
        "orthant_form": form,
    }


def cmd_check_perm(args) -> dict:
    K = _load_cone(args)
    return {
        "n": K.dim,
        "permutation_invariant": is_permutation_invariant(K),
        "ones_axis": contains_ones_axis(K).value,
    }


def cmd_catalog(args) -> dict:
    kind = Kind(args.kind)
    spec = CatalogSpec(kind=kind, n=args.n, p=args.p, a=args.a, b=args.b, rng_seed=args.seed)
    if kind is Kind.Orbit:
        if not args.seeds:
            raise UsageError("orbit needs --seeds FILE (a JSON list of vectors)")
        seeds = _read_json(args.seeds)
        if not isinstance(seeds, list) or not seeds or not all(isinstance(s, list) for s in seeds):
            raise UsageError("--seeds must hold a nonempty JSON list of vectors")
        spec.seeds = [[_json_rat(x) for x in s] for s in seeds]
    if kind is Kind.DirectSum:
        if not args.input:
            raise UsageError("direct-sum needs --input FILE holding a JSON list of two cone documents")
        docs = _read_json(args.input)
        if not isinstance(docs, list) or len(docs) != 2:
            raise UsageError("direct-sum input must be a JSON list of two cone documents")
        spec.parts = [from_document(d) for d in docs]
    K = spec.build()
    meta = {"name": spec.name(), "provenance": "conelab catalog"}
    return to_document(K, metadata=meta)


def _json_rat(x):
    if isinstance(x, (float, bool)):
        raise UsageError(f"rationals must be strings or integers, got {x!r}")
    try:
        return to_rat(x)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_spectral_verify(args) -> dict:
    if args.m is None or args.a is None or args.b is None:
        raise UsageError("spectral-verify needs --m, --a and --b")
    if args.exact:
        report = verify_prop5_exact(args.m, args.a, args.b, args.samples, args.seed)
    else:
        report = verify_prop5(args.m, args.a, args.b, args.samples, args.seed, args.tol)
    out = report.to_dict()
    out.update({"m": args.m, "a": rat_str(args.a), "b": rat_str(args.b), "algebra": "Rn" if args.exact else "Sym"})
    return out


def cmd_verify_theorems(args) -> dict:
    lo, hi = args.n_range
    if lo < 2 or hi < lo:
        raise UsageError("--n-range must satisfy 2 <= LO <= HI")
    return run_suite(lo, hi, seed=args.seed, orbit_seeds=args.orbit_seeds, spectral_samples=args.samples)


COMMANDS = {
    "dual": (cmd_dual, "dual cone, both descriptions"),
    "extreme": (cmd_extreme, "extreme rays of a pointed cone"),
    "rank": (cmd_rank, "Lyapunov rank of a proper cone"),
    "ll-basis": (cmd_ll_basis, "basis of the Lyapunov-like transformations"),
    "decompose": (cmd_decompose, "direct-sum decomposition and (a, b) form"),
    "check-perm": (cmd_check_perm, "permutation invariance and ones-axis membership"),
    "catalog": (cmd_catalog, "emit a named cone as a JSON document"),
    "spectral-verify": (cmd_spectral_verify, "sample lambda^-1(Q) = L_(a,b)(V+)"),
    "verify-theorems": (cmd_verify_theorems, "run the classification checks over the catalog"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conelab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"conelab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", metavar="FILE|-")
        if name == "catalog":
            p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
            p.add_argument("--n", type=int)
            p.add_argument("--p", type=int)
            p.add_argument("--a", type=_rat_arg)
            p.add_argument("--b", type=_rat_arg)
            p.add_argument("--seeds", metavar="FILE")
            p.add_argument("--seed", type=int, default=0)
        elif name == "spectral-verify":
            p.add_argument("--m", type=int)
            p.add_argument("--a", type=_rat_arg)
            p.add_argument("--b", type=_rat_arg)
            p.add_argument("--samples", type=int, default=1000)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--tol", type=float, default=1e-9)
            p.add_argument("--exact", action="store_true", help="use the R^n algebra in rational arithmetic")
        elif name == "verify-theorems":
            p.add_argument("--n-range", type=_n_range, default=(2, 5), metavar="LO..HI")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--samples", type=int, default=200, help="spectral samples per reducible cone")
            p.add_argument("--orbit-seeds", type=int, default=6)
    return parser


def _summary(command: str, out: dict) -> str:
    if command == "verify-theorems":
        return f"verify-theorems: {out['checks']} checks, {out['failures']} failures"
    if command == "rank":
        return f"beta = {out['beta']} (n = {out['n']}, {out['pairs']} complementary pairs)"
    if command == "spectral-verify":
        return (f"spectral-verify: forward {out['forward_pass']}/{out['samples']}, "
                f"backward {out['backward_pass']}/{out['samples']}")
    return f"{command}: ok"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.command][0]
    try:
        out = handler(args)
    except (UsageError, DocumentError, ConeError) as exc:
        print(f"conelab {args.command}: {exc}", file=sys.stderr)
        return 2
    json.dump(out, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    print(_summary(args.command, out), file=sys.stderr)
    if args.command == "verify-theorems" and not out["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
