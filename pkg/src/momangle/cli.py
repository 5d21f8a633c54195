"""Command-line interface. Each subcommand loads its inputs, calls one
library function and prints the result.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .complement import (
    complement_join,
    complement_minus,
    equivalent,
    missing_faces,
    reduce,
    restrict,
)
from .complex import (
    Complex,
    ComplexError,
    as_simplex,
    format_simplex,
    is_full_subcomplex,
    link,
    simplex_key,
    star,
)
from .corpus import LISTED_MOORE_ORDER, builtin_names, get_builtin
from .hochster import cubical_oracle_rz, hochster
from .homology import reduced_cohomology, reduced_homology
from .repro import moore_torsion
from .subdivision import construct_full_embedding, next_label, stellar_subdivide
from .verify import iso_search, non_isomorphism_certificate, verify_sphere

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input helpers ---------------------------------------------------------------


def _load(src: str) -> formats.ComplexFile | Complex:
    p = Path(src)
    if p.is_file():
        return formats.read(p)
    name = src[len("builtin:"):] if src.startswith("builtin:") else src
    try:
        return get_builtin(name).complex
    except KeyError:
        raise UsageError(
            f"{src!r} is neither a file nor a builtin ({', '.join(builtin_names())})"
        ) from None


def load_complex(src: str) -> Complex:
    obj = _load(src)
    return obj if isinstance(obj, Complex) else obj.to_complex()


def load_complement(src: str):
    obj = _load(src)
    return missing_faces(obj) if isinstance(obj, Complex) else obj.to_complement()


def parse_simplex(text: str) -> frozenset:
    text = text.strip()
    if text in ("", "{}", "empty"):
        return frozenset()
    try:
        return as_simplex(int(t) for t in text.replace(" ", ",").split(",") if t)
    except (ValueError, ComplexError) as exc:
        raise UsageError(f"bad simplex {text!r}: {exc}") from None


def _source(args) -> str:
    src = args.builtin or args.source
    if not src:
        raise UsageError("give a complex file or --builtin NAME")
    return src


def _emit(args, text: str, payload: dict | None = None) -> None:
    if args.json and payload is not None:
        sys.stdout.write(formats.dump_report(payload))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _simplices(ss) -> list[list[int]]:
    return [sorted(s) for s in sorted(ss, key=simplex_key)]


def _fmt_list(ss) -> str:
    return "{" + ", ".join(format_simplex(s) if s else "∅" for s in ss) + "}"


# -- commands ----------------------------------------------------------------------


def cmd_faces(args):
    K = load_complex(_source(args))
    if args.dim is None:
        fs = sorted(K.faces(), key=lambda s: (len(s), sorted(s)))
    else:
        fs = sorted(K.faces(args.dim), key=simplex_key)
    _emit(args, "\n".join(format_simplex(f) if f else "{}" for f in fs), {"faces": _simplices(fs)})
    return OK


def cmd_fvector(args):
    K = load_complex(_source(args))
    f = K.f_vector()
    _emit(args, " ".join(map(str, f)), {"f_vector": list(f)})
    return OK


def cmd_link(args, op=link):
    K = load_complex(_source(args))
    sigma = parse_simplex(args.at)
    R = op(K, sigma)
    sys.stdout.write(formats.write_complex(R, name=f"{args.cmd}-{'-'.join(map(str, sorted(sigma))) or 'empty'}"))
    return OK


def cmd_missing_faces(args):
    K = load_complex(_source(args))
    sys.stdout.write(formats.write_complement(missing_faces(K), kind="missing-faces"))
    return OK


def cmd_reduce(args):
    P = load_complement(_source(args))
    sys.stdout.write(formats.write_complement(reduce(P), kind="missing-faces"))
    return OK


def cmd_equivalent(args):
    P, Q = load_complement(args.a), load_complement(args.b)
    same = equivalent(P, Q)
    _emit(args, "equivalent" if same else "not equivalent", {"equivalent": same})
    return OK if same else FAILED


def cmd_minus(args):
    P = load_complement(_source(args))
    R = complement_minus(P, parse_simplex(args.at))
    if args.full_vertex_set:
        R = R.on(P.vertices)
    sys.stdout.write(formats.write_complement(R))
    return OK


def cmd_cjoin(args):
    R = complement_join(load_complement(args.a), load_complement(args.b))
    sys.stdout.write(formats.write_complement(R))
    return OK


def cmd_restrict(args):
    P = load_complement(_source(args))
    sys.stdout.write(formats.write_complement(restrict(P, parse_simplex(args.to))))
    return OK


def cmd_stellar(args):
    K = load_complex(_source(args))
    v = args.vertex if args.vertex is not None else next_label(K)
    sys.stdout.write(formats.write_complex(stellar_subdivide(K, parse_simplex(args.at), v)))
    return OK


def _read_order(choice: str):
    if choice == "lex":
        return None
    if choice == "paper-moore":
        return LISTED_MOORE_ORDER
    p = Path(choice)
    if not p.is_file():
        raise UsageError(f"--order must be lex, paper-moore or a file, got {choice!r}")
    return formats.parse_subsets(p.read_text(encoding="utf-8"), str(p))


def cmd_construct(args):
    K = load_complex(args.sub)
    L0 = load_complex(args.ambient)
    trace = construct_full_embedding(K, L0, _read_order(args.order), skip_nonfaces=not args.ghosts)
    L = trace.final
    lines = [f"steps {len(trace.steps)}"]
    lines += [f"  {n}. {s}" for n, s in enumerate(trace.steps, 1)]
    lines.append(f"skipped {_fmt_list(trace.skipped)}")
    lines.append(f"vertices {len(L.vertices)}")
    lines.append(f"dimension {L.dim}")
    lines.append(f"facets {len(L.facets)}")
    lines.append(f"missing-faces {len(trace.final_complement)}")
    lines.append(f"full {is_full_subcomplex(K, L, K.vertices)}")
    payload = {
        "steps": [
            {"target": sorted(s.target), "new_vertex": s.new_vertex, "was_ghost": s.was_ghost}
            for s in trace.steps
        ],
        "skipped": _simplices(trace.skipped),
        "vertices": len(L.vertices),
        "dimension": L.dim,
        "f_vector": list(L.f_vector()),
        "final_missing_faces": _simplices(trace.final_complement.members),
        "full": is_full_subcomplex(K, L, K.vertices),
    }
    if args.output:
        Path(args.output).write_text(formats.write_complex(L, name="construction"), encoding="utf-8")
    _emit(args, "\n".join(lines), payload)
    return OK


def _profile_cmd(args, fn, label, key):
    K = load_complex(_source(args))
    h = fn(K)
    lines = [f"{label}{d} = {g}" for d, g in h.groups.items()] or [f"{label}* = 0"]
    _emit(args, "\n".join(lines), {key: h.to_dict()})
    return OK


def cmd_homology(args):
    return _profile_cmd(args, reduced_homology, "H~_", "reduced_homology")


def cmd_cohomology(args):
    return _profile_cmd(args, reduced_cohomology, "H~^", "reduced_cohomology")


def _parse_scope(scope: str):
    if scope == "full":
        return None, None
    kind, _, arg = scope.partition(":")
    if kind == "subsets":
        p = Path(arg)
        if not p.is_file():
            raise UsageError(f"subset file {arg!r} not found")
        return formats.parse_subsets(p.read_text(encoding="utf-8"), str(p)), None
    if kind == "degrees":
        lo, sep, hi = arg.partition("..")
        try:
            return None, (int(lo), int(hi if sep else lo))
        except ValueError:
            raise UsageError(f"bad degree window {arg!r}; use degrees:a..b") from None
    raise UsageError(f"bad scope {scope!r}; use full, subsets:FILE or degrees:a..b")


def cmd_hochster(args):
    L = load_complex(_source(args))
    scope = args.scope
    if args.subsets:
        scope = f"subsets:{args.subsets}"
    if args.degrees:
        scope = f"degrees:{args.degrees}"
    subsets, window = _parse_scope(scope)
    rep = hochster(L, args.flavor, subsets=subsets, degrees=window, jobs=args.jobs, memoize=args.memoize)
    lines = [f"flavor {rep.flavor}", f"mode {rep.mode}", f"subsets-evaluated {rep.subsets_evaluated}"]
    for (I, d), g in rep.per_subset.items():
        lines.append(f"  I={format_simplex(I) if I else '∅'} H^{d} += {g}")
    for d, g in rep.totals.groups.items():
        lines.append(f"H^{d} = {g}")
    payload = {
        "flavor": rep.flavor,
        "mode": rep.mode,
        "subsets_evaluated": rep.subsets_evaluated,
        "per_subset": [
            {"subset": list(I), "degree": d, "rank": g.rank, "torsion": list(g.torsion)}
            for (I, d), g in rep.per_subset.items()
        ],
        "totals": rep.totals.to_dict(),
    }
    _emit(args, "\n".join(lines), payload)
    return OK


def cmd_oracle(args):
    return _profile_cmd(args, cubical_oracle_rz, "H_", "homology")


def cmd_verify_sphere(args):
    K = load_complex(_source(args))
    cert = verify_sphere(K, args.link_depth)
    _emit(args, "\n".join(cert.lines()), {
        "dimension": cert.dimension, "checks": cert.checks,
        "witnesses": cert.witnesses, "verdict": cert.verdict,
    })
    return OK if cert.passed else FAILED


def cmd_verify_full(args):
    K, L = load_complex(args.sub), load_complex(args.ambient)
    I = parse_simplex(args.on) if args.on is not None else K.vertices
    ok = is_full_subcomplex(K, L, I)
    if ok:
        msg = f"full: K = L|_{format_simplex(I)}"
    else:
        msg = f"not full on {format_simplex(I)}"
    _emit(args, msg, {"full": ok})
    return OK if ok else FAILED


def cmd_iso(args):
    K1, K2 = load_complex(args.a), load_complex(args.b)
    phi = iso_search(K1, K2)
    if phi is None:
        cert = non_isomorphism_certificate(K1, K2)
        msg = f"not isomorphic: {cert}" if cert else "not isomorphic: exhaustive search"
        _emit(args, msg, {"isomorphic": False, "certificate": cert})
        return FAILED
    text = "isomorphic: " + " ".join(f"{a}->{b}" for a, b in phi.items())
    _emit(args, text, {"isomorphic": True, "mapping": {str(a): b for a, b in phi.items()}})
    return OK


def cmd_repro(args):
    checks = moore_torsion()
    _emit(args, "\n".join(c.line() for c in checks), {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
    })
    return OK if all(c.passed for c in checks) else FAILED


def cmd_show(args):
    obj = _load(_source(args))
    if isinstance(obj, Complex):
        sys.stdout.write(formats.write_complex(obj, name=args.builtin or args.source))
    else:
        sys.stdout.write(formats.dumps(obj))
    return OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON output")

    one = argparse.ArgumentParser(add_help=False, parents=[common])
    one.add_argument("source", nargs="?", help="complex file or builtin name")
    one.add_argument("--builtin", help="builtin complex, e.g. moore-mod3, l0, polygon:5")

    parser = argparse.ArgumentParser(
        prog="momangle",
        description="Simplicial complements, stellar subdivision and moment-angle (co)homology.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("show", parents=[one], help="print a complex in file format")
    p.set_defaults(func=cmd_show)
    p = sub.add_parser("faces", parents=[one], help="list faces")
    p.add_argument("--dim", type=int)
    p.set_defaults(func=cmd_faces)
    p = sub.add_parser("fvector", parents=[one], help="face counts by dimension")
    p.set_defaults(func=cmd_fvector)
    for name, op in (("link", link), ("star", star)):
        p = sub.add_parser(name, parents=[one], help=f"{name} of a face")
        p.add_argument("--at", required=True, help="face, e.g. 1,2")
        p.set_defaults(func=lambda a, op=op: cmd_link(a, op))

    p = sub.add_parser("missing-faces", parents=[one], help="minimal non-faces")
    p.set_defaults(func=cmd_missing_faces)
    p = sub.add_parser("reduce", parents=[one], help="reduce a complement to missing faces")
    p.set_defaults(func=cmd_reduce)
    p = sub.add_parser("equivalent", parents=[common], help="do two complements recover the same complex")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equivalent)
    p = sub.add_parser("minus", parents=[one], help="member-wise difference P - sigma")
    p.add_argument("--at", required=True)
    p.add_argument("--full-vertex-set", action="store_true",
                   help="keep the original vertex set (complement of the star)")
    p.set_defaults(func=cmd_minus)
    p = sub.add_parser("cjoin", parents=[common], help="join of two complements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_cjoin)
    p = sub.add_parser("restrict", parents=[one], help="restrict a complement to a vertex subset")
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("stellar", parents=[one], help="one stellar subdivision")
    p.add_argument("--at", required=True)
    p.add_argument("--vertex", type=int, help="label of the new vertex (default max+1)")
    p.set_defaults(func=cmd_stellar)
    p = sub.add_parser("construct", parents=[common], help="subdivide until the subcomplex is full")
    p.add_argument("--sub", required=True)
    p.add_argument("--ambient", required=True)
    p.add_argument("--order", default="lex", help="lex, paper-moore or a file of simplices")
    p.add_argument("--ghosts", action="store_true",
                   help="add ghost vertices for non-faces instead of skipping them")
    p.add_argument("--output", help="write the final complex to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("homology", parents=[one], help="reduced integral homology")
    p.set_defaults(func=cmd_homology)
    p = sub.add_parser("cohomology", parents=[one], help="reduced integral cohomology")
    p.set_defaults(func=cmd_cohomology)
    p = sub.add_parser("hochster", parents=[one], help="Hochster decomposition")
    p.add_argument("--flavor", choices=("real", "complex"), default="real")
    p.add_argument("--scope", default="full", help="full, subsets:FILE or degrees:a..b")
    p.add_argument("--subsets", help="file of subsets (same as --scope subsets:FILE)")
    p.add_argument("--degrees", help="degree window a..b (same as --scope degrees:a..b)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--memoize", action="store_true", help="reuse results for relabel-equal restrictions")
    p.set_defaults(func=cmd_hochster)
    p = sub.add_parser("oracle-rz", parents=[one], help="homology of the real moment-angle complex from cells")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="certificates")
    vsub = p.add_subparsers(dest="what", required=True)
    q = vsub.add_parser("sphere", parents=[one])
    q.add_argument("--link-depth", type=int, default=2)
    q.set_defaults(func=cmd_verify_sphere)
    q = vsub.add_parser("full", parents=[common])
    q.add_argument("--sub", required=True)
    q.add_argument("--ambient", required=True)
    q.add_argument("--on", help="vertex subset (default: vertices of --sub)")
    q.set_defaults(func=cmd_verify_full)
    p = sub.add_parser("iso", parents=[common], help="combinatorial isomorphism search")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("repro", help="reproduce a worked example")
    p.add_argument("example", choices=("moore-torsion",))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, formats.ParseError) as exc:
        print(f"momangle: error: {exc}", file=sys.stderr)
        return USAGE
    except ComplexError as exc:
        print(f"momangle: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
