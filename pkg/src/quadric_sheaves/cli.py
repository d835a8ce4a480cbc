"""Command-line interface: one verb per operation, JSON on standard output.

Exit codes: 0 success, 1 a check failed, 2 usage error or malformed input.
"""

import argparse
import ast
import json
import sys

from .cox import BiForm, h_line
from .linalg import field_from_name
from .points import (LineDivisor, PointSet, cayley_bacharach, gg_ideal_report,
                     ideal_cohomology, length7_search, residual_sequence_check)
from .sheaf import (Presentation, chern, dual, gg_bm, gg_castelnuovo_mumford, handle,
                    hom_cohomology, index_search, locally_free_certificate)
from . import classifier


class UsageError(Exception):
    pass


def _pair(text):
    try:
        v = ast.literal_eval(text)
        a, b = (int(v[0]), int(v[1]))
    except (ValueError, SyntaxError, TypeError, IndexError):
        raise argparse.ArgumentTypeError(f"expected a pair like (a,b), got {text!r}")
    return (a, b)


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}")


def _presentation(path):
    return Presentation.from_json(_load(path))


def _points(path):
    return PointSet.from_json(_load(path))


def _divisor(path):
    obj = _load(path)
    if "components" in obj:
        return LineDivisor(components=[(k, tuple(r)) for k, r in obj["components"]])
    if "form" in obj:
        return LineDivisor(form=BiForm.from_json(obj["form"]))
    raise UsageError("divisor JSON needs 'components' or 'form'")


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


# verbs: each returns (json object, exit code)

def cmd_cohomology(args):
    field = field_from_name(args.field)
    s, t = args.twist
    if args.bundle is not None:
        d = (args.bundle[0] + s, args.bundle[1] + t)
        h = [h_line(i, d) for i in range(3)]
    elif args.presentation:
        h = list(handle(_presentation(args.presentation), field).cohomology(s, t))
    else:
        raise UsageError("give --bundle or --presentation")
    if args.i is not None:
        if args.i not in (0, 1, 2):
            raise UsageError("--i must be 0, 1 or 2")
        return {"h": h[args.i]}, 0
    return {"h": h}, 0


def cmd_chern(args):
    return chern(_presentation(args.presentation)).to_json(), 0


def cmd_dual(args):
    P = _presentation(args.presentation)
    D = dual(P, True)
    s, t = args.twist
    return {"chern": chern(D).to_json(),
            "h": list(handle(D, field_from_name(args.field)).cohomology(s, t))}, 0


def cmd_gg_check(args):
    P = _presentation(args.presentation)
    out = {"bm": gg_bm(P), "castelnuovo_mumford": gg_castelnuovo_mumford(P),
           "target_globally_generated": all(min(d) >= 0 for d in P.target)}
    out["globally_generated"] = any(out.values())
    if args.locally_free:
        out["locally_free"] = locally_free_certificate(P) is True
    return out, 0 if out["globally_generated"] else 1


def cmd_index(args):
    P = _presentation(args.presentation)
    return {"index": [list(p) for p in index_search(P, args.bound)]}, 0


def cmd_hom(args):
    Pf, Pg = _presentation(args.source), _presentation(args.target)
    s, t = args.twist
    return {"h": list(hom_cohomology(Pf, Pg, s, t, field_from_name(args.field)))}, 0


def cmd_ideal(args):
    Z = _points(args.points)
    out = {"h": list(ideal_cohomology(Z, args.degree))}
    if args.gg:
        verdict, reason = gg_ideal_report(Z, args.degree)
        out["gg"] = {"verdict": verdict, "reason": reason}
    return out, 0


def cmd_cb(args):
    ok = cayley_bacharach(_points(args.points), args.degree)
    return {"cayley_bacharach": ok}, 0 if ok else 1


def cmd_residual(args):
    ok = residual_sequence_check(_points(args.points), _divisor(args.divisor), *args.degree)
    return {"residual_sequence": ok}, 0 if ok else 1


def cmd_length7(args):
    primes = tuple(int(p) for p in args.primes.split(","))
    res = length7_search(args.trials, seed=args.seed, primes=primes,
                         structured=args.structured, jobs=args.jobs)
    out = {"summary": res["summary"], "counterexamples": res["counterexamples"]}
    if args.records:
        out["records"] = res["records"]
    return out, 1 if res["counterexamples"] else 0


def cmd_classify(args):
    rep = classifier.verify_classification(seed=args.seed, jobs=args.jobs)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(json.dumps(rep, sort_keys=True, indent=1) + "\n")
        rep = {k: v for k, v in rep.items() if k != "records"}
    return rep, 0 if rep["ok"] else 1


def cmd_witness(args):
    if args.all:
        return {"manifest": classifier.write_corpus(args.out, seed=args.seed)}, 0
    if args.c1 is None or args.c2 is None or args.rank is None:
        raise UsageError("give --all or --c1, --c2 and --rank")
    index = args.index if args.index else "-"
    spec, obj = classifier.witness(args.c1, args.c2, args.rank, index, seed=args.seed)
    return {"name": spec.name, "kind": spec.kind, "data": obj.to_json()}, 0


def build_parser():
    p = argparse.ArgumentParser(prog="quadric-sheaves",
                                description="Sheaf cohomology and bundle classification on P1 x P1.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--field", default="Q", help="Q or Fp:<p>")
    common.add_argument("--jobs", type=int, default=1)
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("cohomology", parents=[common], help="h^i of a line bundle or a cokernel")
    c.add_argument("--bundle", type=_pair)
    c.add_argument("--presentation")
    c.add_argument("--twist", type=_pair, default=(0, 0))
    c.add_argument("--i", type=int)
    c.set_defaults(func=cmd_cohomology)

    c = sub.add_parser("chern", parents=[common])
    c.add_argument("--presentation", required=True)
    c.set_defaults(func=cmd_chern)

    c = sub.add_parser("dual", parents=[common], help="Chern data and cohomology of the dual")
    c.add_argument("--presentation", required=True)
    c.add_argument("--twist", type=_pair, default=(0, 0))
    c.set_defaults(func=cmd_dual)

    c = sub.add_parser("gg-check", parents=[common])
    c.add_argument("--presentation", required=True)
    c.add_argument("--locally-free", action="store_true", help="also certify local freeness")
    c.set_defaults(func=cmd_gg_check)

    c = sub.add_parser("index", parents=[common])
    c.add_argument("--presentation", required=True)
    c.add_argument("--bound", type=_pair, default=(2, 2))
    c.set_defaults(func=cmd_index)

    c = sub.add_parser("hom-cohomology", parents=[common], help="h^i(F^dual (x) G)")
    c.add_argument("--source", required=True, help="presentation of F")
    c.add_argument("--target", required=True, help="presentation of G")
    c.add_argument("--twist", type=_pair, default=(0, 0))
    c.set_defaults(func=cmd_hom)

    c = sub.add_parser("ideal", parents=[common], help="h^i(I_Z(a,b))")
    c.add_argument("--points", required=True)
    c.add_argument("--degree", type=_pair, required=True)
    c.add_argument("--gg", action="store_true")
    c.set_defaults(func=cmd_ideal)

    c = sub.add_parser("cb-check", parents=[common])
    c.add_argument("--points", required=True)
    c.add_argument("--degree", type=_pair, required=True)
    c.set_defaults(func=cmd_cb)

    c = sub.add_parser("residual", parents=[common])
    c.add_argument("--points", required=True)
    c.add_argument("--divisor", required=True)
    c.add_argument("--degree", type=_pair, required=True)
    c.set_defaults(func=cmd_residual)

    c = sub.add_parser("length7-search", parents=[common])
    c.add_argument("--trials", type=int, default=1000)
    c.add_argument("--primes", default="10007,31337")
    c.add_argument("--structured", type=int, default=50)
    c.add_argument("--records", action="store_true")
    c.set_defaults(func=cmd_length7)

    c = sub.add_parser("classify", parents=[common])
    c.add_argument("--report", help="write the full report here")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("witness", parents=[common])
    c.add_argument("--c1", type=_pair)
    c.add_argument("--c2", type=int)
    c.add_argument("--rank", type=int)
    c.add_argument("--index")
    c.add_argument("--all", action="store_true")
    c.add_argument("--out", default="witnesses")
    c.set_defaults(func=cmd_witness)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        field_from_name(args.field)
        obj, code = args.func(args)
    except (UsageError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(obj)
    return code


if __name__ == "__main__":
    sys.exit(main())
