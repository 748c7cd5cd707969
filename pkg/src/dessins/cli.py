"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 parse/usage error,
3 negative decision, 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import sys

from . import dessin as ds
from . import dynamics as dyn
from . import hubbard as hb
from .enumeration import enumerate_clean, enumerate_normalized
from .formats import ParseError, parse, parse_many, serialize, serialize_many, to_dot
from .permcore import group_order

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_NO, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Mismatch(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def format_order(k: int) -> str:
    """Exact value, plus ``2^e`` for large powers of two."""
    if k >= 2**16 and k & (k - 1) == 0:
        return f"{k} (2^{k.bit_length() - 1})"
    return str(k)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _docs(path: str):
    return parse_many(_read(path))


def _one(path: str):
    return parse(_read(path))


def _need(value, kind, what):
    if not isinstance(value, kind):
        raise _UsageError(f"expected {what}")
    return value


def _cmd_validate(args, out):
    bad = False
    for doc in _docs(args.file):
        if isinstance(doc, hb.HubbardTree):
            report = hb.validate_hubbard(doc)
            print(str(report), file=out)
            print("ok" if report.ok else "invalid", file=out)
        else:
            report = ds.validate(doc)
            print(str(report), file=out)
        bad |= not report.ok
    return EXIT_INVALID if bad else EXIT_OK


def _canon(doc):
    if isinstance(doc, hb.HubbardTree):
        return hb.canonical_form_hubbard(doc) + "\n"
    if isinstance(doc, ds.NormalizedDessin):
        return serialize(ds.canonical_normalized(doc))
    return serialize(ds.canonical_form(doc).dessin)


def _cmd_canon(args, out):
    out.write("---\n".join(_canon(doc) for doc in _docs(args.file)))
    return EXIT_OK


def _cmd_iso(args, out):
    a, b = _one(args.a), _one(args.b)
    if type(a) is not type(b):
        raise _UsageError("both files must hold the same kind of object")
    same = _canon(a) == _canon(b)
    print("isomorphic" if same else "not isomorphic", file=out)
    return EXIT_OK if same else EXIT_NO


def _cmd_invariants(args, out):
    if args.tower < 1:
        raise _UsageError("--tower must be >= 1")
    for i, doc in enumerate(_docs(args.file)):
        if i:
            print("---", file=out)
        if isinstance(doc, ds.NormalizedDessin):
            fp = dyn.fingerprint(doc, args.tower)
        elif isinstance(doc, ds.TreeDessin):
            if args.tower > 1:
                raise _UsageError("towers beyond depth 1 need a normalized dessin")
            report = ds.validate(doc)
            if not report.ok:
                raise ds.DessinError(str(report))
            vs = ds.vertices(doc)
            fp = dyn.Fingerprint(
                doc.n_edges,
                tuple(sorted(v for vid, v in vs if vid.color == ds.BLACK)),
                tuple(sorted(v for vid, v in vs if vid.color == ds.WHITE)),
                (group_order(dyn.monodromy(doc)),),
            )
        else:
            raise _UsageError("invariants need a dessin")
        print(f"degree: {fp.degree}", file=out)
        print("black valencies: " + " ".join(map(str, fp.black_valencies)), file=out)
        print("white valencies: " + " ".join(map(str, fp.white_valencies)), file=out)
        for k, order in enumerate(fp.mon_orders, start=1):
            print(f"|Mon(f^{k})| degree {fp.degree ** k}: {format_order(order)}", file=out)
    return EXIT_OK


def _cmd_iterate(args, out):
    if args.n < 1:
        raise _UsageError("iteration count must be >= 1")
    results = []
    for doc in _docs(args.file):
        nd = _need(doc, ds.NormalizedDessin, "a normalized dessin")
        if args.method == "both":
            a = dyn.iterate_recursion(nd, args.n)
            b = dyn.iterate_substitution(nd, args.n)
            if ds.canonical_form_normalized(a) != ds.canonical_form_normalized(b):
                raise _Mismatch("recursion and substitution iterates are not isomorphic")
            results.append(a)
        else:
            results.append(dyn.iterate(nd, args.n, args.method))
    out.write(serialize_many(results))
    return EXIT_OK


def _cmd_compose(args, out):
    outer = _need(_one(args.outer), ds.NormalizedDessin, "a normalized dessin")
    inner = _need(_one(args.inner), ds.NormalizedDessin, "a normalized dessin")
    out.write(serialize(dyn.compose(outer, inner)))
    return EXIT_OK


def _plain(doc):
    if isinstance(doc, ds.NormalizedDessin):
        return doc.dessin
    return _need(doc, ds.TreeDessin, "a dessin")


def _cmd_refine(args, out):
    out.write(serialize_many(ds.refine(_plain(doc)) for doc in _docs(args.file)))
    return EXIT_OK


def _cmd_smooth(args, out):
    try:
        anchor = ds.VertexId.parse(args.anchor)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    out.write(serialize_many(ds.smooth(_plain(doc), anchor) for doc in _docs(args.file)))
    return EXIT_OK


def _cmd_hubbard(args, out):
    trees = [
        hb.dessin_to_hubbard(_need(doc, ds.NormalizedDessin, "a normalized dessin"))
        for doc in _docs(args.file)
    ]
    out.write(serialize_many(trees))
    return EXIT_OK


def _cmd_dessin(args, out):
    nds = [
        hb.hubbard_to_dessin(_need(doc, hb.HubbardTree, "a hubbard tree"))
        for doc in _docs(args.file)
    ]
    out.write(serialize_many(nds))
    return EXIT_OK


def _cmd_enumerate(args, out):
    try:
        if args.normalized or args.extra_clean:
            values = enumerate_normalized(args.degree, args.extra_clean)
        else:
            values = enumerate_clean(args.degree)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    out.write(serialize_many(values))
    return EXIT_OK


def _cmd_dot(args, out):
    out.write("".join(to_dot(doc) for doc in _docs(args.file)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dessins", description="Clean tree dessins, iterates and Hubbard trees.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check structural invariants")
    s.add_argument("file")
    s.set_defaults(func=_cmd_validate)

    s = sub.add_parser("canon", help="canonical serialization")
    s.add_argument("file")
    s.set_defaults(func=_cmd_canon)

    s = sub.add_parser("iso", help="decide isomorphism")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=_cmd_iso)

    s = sub.add_parser("invariants", help="degree, valencies and monodromy tower")
    s.add_argument("file")
    s.add_argument("--tower", type=int, default=1)
    s.set_defaults(func=_cmd_invariants)

    s = sub.add_parser("iterate", help="n-th iterate of an extra-clean dessin")
    s.add_argument("file")
    s.add_argument("n", type=int)
    s.add_argument("--method", choices=("recursion", "substitution", "both"), default="recursion")
    s.set_defaults(func=_cmd_iterate)

    s = sub.add_parser("compose", help="composite OUTER o INNER")
    s.add_argument("outer")
    s.add_argument("inner")
    s.set_defaults(func=_cmd_compose)

    s = sub.add_parser("refine", help="bisect edges into a clean dessin")
    s.add_argument("file")
    s.set_defaults(func=_cmd_refine)

    s = sub.add_parser("smooth", help="merge edge pairs of a clean dessin")
    s.add_argument("file")
    s.add_argument("--anchor", required=True, help="black vertex, e.g. B:1")
    s.set_defaults(func=_cmd_smooth)

    s = sub.add_parser("hubbard", help="Hubbard tree of a normalized dessin")
    s.add_argument("file")
    s.set_defaults(func=_cmd_hubbard)

    s = sub.add_parser("dessin", help="normalized dessin of a Belyi-type Hubbard tree")
    s.add_argument("file")
    s.set_defaults(func=_cmd_dessin)

    s = sub.add_parser("enumerate", help="list dessins up to isomorphism")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--normalized", action="store_true")
    s.add_argument("--extra-clean", action="store_true")
    s.set_defaults(func=_cmd_enumerate)

    s = sub.add_parser("dot", help="DOT graph source")
    s.add_argument("file")
    s.set_defaults(func=_cmd_dot)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_USAGE
    except (ds.DessinError, hb.HubbardError) as exc:
        print(f"invalid: {exc}", file=err)
        return EXIT_INVALID
    except _Mismatch as exc:
        print(f"cross-check failed: {exc}", file=err)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
