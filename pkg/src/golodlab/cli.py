"""Command line interface: ``golodlab {mnf,taylor,zk,verify,kn}``.

Input is a JSON record read from a file path or standard input.  Exit codes:
0 success, 1 a verification inconsistency, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .complex_core import (NonFaceSequence, NotMinimalTaylor, SimplicialComplex, build_KN, from_facets,
                           from_minimal_nonfaces, full_mask, mask, minimal_nonfaces, vertices)
from .golod import enumerate_instances, verify_KN_homotopy, verify_theorem
from .homology import characteristic
from .taylor import betti_from_taylor, is_minimal_taylor
from .zk_algebra import (FIELD_RINGS, hochster_table, products_trivial, real_hochster_dims,
                         real_zk_reduced_homology, zk_cohomology)

FORMAT_VERSION = 1


class InputError(ValueError):
    pass


# -- records -----------------------------------------------------------------

def _vertex_list(x, m: int, what: str) -> list:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise InputError(f"{what}: expected a list of integers, got {x!r}")
    if any(v < 1 or v > m for v in x):
        raise InputError(f"{what}: vertices must lie in 1..{m}, got {x}")
    if x != sorted(set(x)):
        raise InputError(f"{what}: list must be sorted ascending without repeats, got {x}")
    return x


def _check_version(rec) -> None:
    if not isinstance(rec, dict):
        raise InputError("record must be a JSON object")
    if rec.get("version") != FORMAT_VERSION:
        raise InputError(f"unsupported or missing version (expected {FORMAT_VERSION})")


def parse_complex(rec) -> SimplicialComplex:
    """A ``ComplexRecord``: ``{version, m, facets | minimal_non_faces, name?}``."""
    _check_version(rec)
    m = rec.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or not 0 <= m <= 64:
        raise InputError("m must be an integer in 0..64")
    has_f, has_n = "facets" in rec, "minimal_non_faces" in rec
    if has_f == has_n:
        raise InputError("give exactly one of 'facets' and 'minimal_non_faces'")
    key = "facets" if has_f else "minimal_non_faces"
    lists = rec[key]
    if not isinstance(lists, list):
        raise InputError(f"{key} must be a list of lists")
    masks = [mask(_vertex_list(x, m, key)) for x in lists]
    try:
        if has_f:
            return from_facets(m, masks)
        return from_minimal_nonfaces(m, masks)
    except ValueError as e:
        raise InputError(str(e)) from None


def complex_record(K: SimplicialComplex, name: str | None = None) -> dict:
    rec = {"version": FORMAT_VERSION, "m": K.m,
           "minimal_non_faces": [vertices(N) for N in minimal_nonfaces(K)]}
    if name is not None:
        rec["name"] = name
    return rec


def parse_sequence(rec) -> NonFaceSequence:
    """A ``SequenceRecord``: ``{version, W, entries}`` with ``W`` the size of the ground set ``1..W``."""
    _check_version(rec)
    W = rec.get("W")
    if not isinstance(W, int) or isinstance(W, bool) or not 0 <= W <= 64:
        raise InputError("W must be an integer in 0..64")
    entries = rec.get("entries")
    if not isinstance(entries, list):
        raise InputError("entries must be a list of lists")
    if W + len(entries) > 64:
        raise InputError(f"|W| + r = {W + len(entries)} exceeds 64 vertices")
    return NonFaceSequence(full_mask(W), tuple(mask(_vertex_list(x, W, "entries")) for x in entries))


def _read(path: str | None):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as f:
                text = f.read()
    except OSError as e:
        raise InputError(str(e)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e}") from None


def _emit(obj, compact: bool = False) -> None:
    if compact:
        sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _ring(tag: str) -> str:
    try:
        characteristic(tag)
    except ValueError as e:
        raise InputError(str(e)) from None
    return tag


# -- commands ----------------------------------------------------------------

def cmd_mnf(args) -> int:
    K = parse_complex(_read(args.input))
    _emit([vertices(N) for N in minimal_nonfaces(K)])
    return 0


def cmd_taylor(args) -> int:
    K = parse_complex(_read(args.input))
    ring = _ring(args.ring)
    if characteristic(ring) is None:
        raise InputError("taylor Betti numbers need a field: Q or F<p>")
    mnfs = minimal_nonfaces(K)
    try:
        v = is_minimal_taylor(mnfs)
    except AssertionError as e:
        print(f"golodlab: {e}", file=sys.stderr)
        return 1
    out = {"minimal": v.minimal, "witness": v.witness,
           "private_vertices": list(v.private) if v.minimal else None}
    if args.check_minimal:
        out["checks"] = {"criterion": v.by_criterion, "unit_scan": v.by_unit_scan, "agree": v.agree}
    out["betti"] = betti_from_taylor(mnfs, ring).records()
    _emit(out)
    return 0


def cmd_zk(args) -> int:
    K = parse_complex(_read(args.input))
    ring = _ring(args.ring)
    H = zk_cohomology(K, ring)
    out = {"ring": ring, "dims": {str(n): b for n, b in H.dims().items()}}
    if ring == "Z":
        out["torsion"] = {str(n): list(t) for n, t in H.torsion().items()}
        verdicts = {r: products_trivial(K, r) for r in FIELD_RINGS}
        trivial = all(v.trivial for v in verdicts.values())
        out["products_trivial"] = trivial
        out["products_by_ring"] = {r: v.trivial for r, v in verdicts.items()}
        bad = next((v for v in verdicts.values() if not v.trivial), None)
    else:
        bad = products_trivial(K, ring)
        trivial = bad.trivial
        out["products_trivial"] = trivial
        bad = None if trivial else bad
    out["product_witness"] = None if bad is None else {"ring": bad.ring, **bad.witness.as_dict()}
    hoch = hochster_table(K, ring)
    out["hochster_dims"] = {str(n): b for n, b in hoch.dims().items()}
    status = 0
    if hoch.dims() != H.dims():
        status = 1
    if args.with_real_oracle:
        oring = "Q" if ring == "Z" else ring
        real = real_zk_reduced_homology(K, oring).dims()
        pred = real_hochster_dims(K, oring)
        out["real_oracle"] = {"ring": oring,
                              "reduced_dims": {str(n): b for n, b in real.items()},
                              "predicted": {str(n): b for n, b in pred.items()},
                              "agree": real == pred}
        if real != pred:
            status = 1
    _emit(out)
    return status


def _verify_one(mnfs_and_m):
    m, mnfs = mnfs_and_m
    K = from_minimal_nonfaces(m, mnfs)
    return verify_theorem(K, strict=False).as_dict()


def _workers() -> int:
    raw = os.environ.get("GOLODLAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"GOLODLAB_THREADS must be an integer, got {raw!r}") from None
    return max(1, min(n, os.cpu_count() or 1))


def cmd_verify(args) -> int:
    if args.exhaustive is not None:
        if not 0 <= args.exhaustive <= 5:
            raise InputError("--exhaustive supports m ≤ 5")
        jobs = [(args.exhaustive, tuple(minimal_nonfaces(K)))
                for K in enumerate_instances(args.exhaustive, "exhaustive", args.filter)]
    elif args.random is not None:
        if args.max_m is None or not 1 <= args.max_m <= 12:
            raise InputError("--random needs --max-m in 1..12")
        jobs = [(K.m, tuple(minimal_nonfaces(K)))
                for K in enumerate_instances(args.max_m, "random", args.filter, seed=args.seed,
                                             count=args.random)]
    else:
        data = _read(args.input)
        recs = data if isinstance(data, list) else [data]
        jobs = []
        for rec in recs:
            K = parse_complex(rec)
            jobs.append((K.m, tuple(minimal_nonfaces(K))))
    n = _workers()
    if n > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(n) as pool:
            reports = list(pool.map(_verify_one, jobs, chunksize=8))
    else:
        reports = [_verify_one(j) for j in jobs]
    summary = {"instances": len(reports), "minimal_taylor": 0, "golod": 0, "non_golod": 0, "inconsistent": 0}
    for k, rep in enumerate(reports):
        summary["minimal_taylor"] += rep["minimal_taylor"]
        if rep["definitive"]:
            summary["golod" if rep["cond2_pairwise"] else "non_golod"] += 1
        summary["inconsistent"] += not rep["consistent"]
        _emit({"instance": k, **rep}, compact=True)
    _emit({"summary": summary}, compact=True)
    return 1 if summary["inconsistent"] else 0


def cmd_kn(args) -> int:
    seq = parse_sequence(_read(args.input))
    kn = build_KN(seq)
    out = {"complex": complex_record(kn.complex), "apex": list(kn.apex)}
    status = 0
    if args.verify_homotopy:
        rep = verify_KN_homotopy(seq)
        out["homotopy"] = rep.as_dict()
        status = 0 if rep.ok else 1
    _emit(out)
    return status


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="golodlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mnf", help="minimal non-faces of a complex")
    s.add_argument("input", nargs="?")
    s.set_defaults(func=cmd_mnf)

    s = sub.add_parser("taylor", help="Taylor resolution minimality and Betti table")
    s.add_argument("input", nargs="?")
    s.add_argument("--check-minimal", action="store_true",
                   help="report both minimality tests; exit 1 if they disagree")
    s.add_argument("--ring", default="Q")
    s.set_defaults(func=cmd_taylor)

    s = sub.add_parser("zk", help="cohomology of the moment-angle complex")
    s.add_argument("input", nargs="?")
    s.add_argument("--ring", default="Q", help="Z, Q, F2, F3, F5 or another F<prime>")
    s.add_argument("--with-real-oracle", action="store_true",
                   help="also compare the real moment-angle complex with its full-subcomplex sum")
    s.set_defaults(func=cmd_zk)

    s = sub.add_parser("verify", help="check the Golod equivalences")
    s.add_argument("input", nargs="?")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", type=int, metavar="M")
    g.add_argument("--random", type=int, metavar="N")
    s.add_argument("--max-m", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--filter", choices=("all", "minimal-taylor"), default="all")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("kn", help="build K(N) from a sequence of subsets")
    s.add_argument("input", nargs="?")
    s.add_argument("--verify-homotopy", action="store_true")
    s.set_defaults(func=cmd_kn)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (InputError, NotMinimalTaylor) as e:
        print(f"golodlab: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"golodlab: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
