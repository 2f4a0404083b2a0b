"""``lrbhopf`` command line.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error,
3 family-data defect (corrupt descriptor, well-definedness or closure failure).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import axioms
from .hopf import ALGEBRA_TAGS, MAIN_TAGS, MAP_NAMES, HopfDiagram, dims, structure_constants
from .linalg import (
    DEFAULT_SEED,
    ExprError,
    check_bialgebra_laws,
    check_morphism,
    is_injective_on_basis,
    is_surjective_on_basis,
)
from .lrb import Family, FamilyDataError, FamilyError, is_lrb
from .setcomp import SetCompFamily
from .table import DescriptorError, dumps_descriptor, family_to_descriptor, load_descriptor

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_family(selector: str) -> Family:
    if selector == "setcomp":
        return SetCompFamily()
    if not Path(selector).exists():
        raise UsageError(f"no such descriptor file: {selector}")
    return load_descriptor(selector)


def _cap(family: Family, requested: int | None, default: int) -> int:
    if requested is None:
        return min(default, family.max_n)
    n = requested
    if n < 0 or n > family.max_n:
        raise UsageError(f"grade cap {n} outside the family's range 0..{family.max_n}")
    return n


# -- output -------------------------------------------------------------------------


class Output:
    def __init__(self, args):
        self.json = args.format == "json"
        self.path = args.output
        self.lines: list[str] = []
        self.doc: dict = {}

    def emit(self) -> None:
        text = json.dumps(self.doc, indent=2, ensure_ascii=False) + "\n" if self.json else "\n".join(self.lines) + "\n"
        if self.path:
            Path(self.path).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)


# -- verify ----------------------------------------------------------------------------


def cmd_verify(args, out: Output) -> int:
    family = load_family(args.family)
    if args.kind == "lrb":
        top = _cap(family, args.max_n, 6)
        reports = [is_lrb(family, n) for n in range(top + 1)]
        out.doc = {"check": "lrb", "reports": [r.__dict__ for r in reports]}
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  lrb grade {r.n}: {r.pairs_checked} pairs"
            if r.counterexample:
                line += "\n      counterexample: " + ", ".join(f"{k}={v}" for k, v in r.counterexample.items())
            out.lines.append(line)
        ok = all(r.passed for r in reports)
    elif args.kind == "axioms":
        top = _cap(family, args.max_n, 4)
        reports = axioms.run_axiom_suite(family, top, require_unique_g=not args.allow_ambiguous_g)
        out.doc = {"check": "axioms", "max_n": top, "reports": [r.to_dict() for r in reports]}
        out.lines = [r.to_text() for r in reports]
        ok = all(r.passed for r in reports)
    elif args.kind == "bialgebra":
        diagram = HopfDiagram(family)
        tags = ALGEBRA_TAGS if args.algebra in (None, "all") else (args.algebra,)
        reports = []
        for tag in tags:
            sample = args.sample_degree if tag in MAIN_TAGS else None
            reports.append(check_bialgebra_laws(diagram.algebra(tag), args.max_degree,
                                                sample_degree=sample, samples=args.samples, seed=args.seed))
        out.doc = {"check": "bialgebra", "seed": args.seed, "reports": [r.to_dict() for r in reports]}
        out.lines = [r.to_text() for r in reports]
        ok = all(r.passed for r in reports)
    else:
        diagram = HopfDiagram(family)
        names = MAP_NAMES if args.map in (None, "all") else (args.map,)
        docs, ok = [], True
        for name in names:
            f = diagram.map(name)
            rep = check_morphism(f, args.max_degree)
            doc = rep.to_dict()
            if name in ("supp*", "lune*", "supp_star", "lune_star"):
                doc["injective"] = all(is_injective_on_basis(f, n) for n in range(args.max_degree + 1))
                ok &= doc["injective"]
            else:
                doc["surjective"] = all(is_surjective_on_basis(f, n) for n in range(args.max_degree + 1))
                ok &= doc["surjective"]
            ok &= rep.passed
            docs.append(doc)
            extra = {k: doc[k] for k in ("injective", "surjective") if k in doc}
            out.lines.append(rep.to_text() + "".join(f"\n      {k}: {v}" for k, v in extra.items()))
        out.doc = {"check": "morphisms", "reports": docs}
    return EXIT_OK if ok else EXIT_FAIL


# -- compute -----------------------------------------------------------------------------


def cmd_compute(args, out: Output) -> int:
    diagram = HopfDiagram(load_family(args.family))
    if args.op == "map":
        if not args.map:
            raise UsageError("compute map needs --map")
        f = diagram.map(args.map)
        _arity(args, 1)
        result, alg = f(f.source.parse(args.exprs[0])), f.target
    else:
        if not args.algebra:
            raise UsageError(f"compute {args.op} needs --algebra")
        alg = diagram.algebra(args.algebra)
        if args.op == "product":
            _arity(args, 2)
            result = alg.multiply(alg.parse(args.exprs[0]), alg.parse(args.exprs[1]))
        else:
            _arity(args, 1)
            x = alg.parse(args.exprs[0])
            if args.op == "coproduct":
                result = alg.coproduct(x)
            elif args.op == "antipode":
                result = alg.antipode(x)
            else:
                value = alg.counit(x)
                out.doc = {"op": "counit", "algebra": alg.tag, "result": str(value)}
                out.lines = [str(value)]
                return EXIT_OK
    text = alg.render(result)
    out.doc = {"op": args.op, "algebra": alg.tag, "result": text,
               "terms": [[_key_doc(alg, k, result.arity), str(c)] for k, c in result]}
    out.lines = [text]
    return EXIT_OK


def _arity(args, k: int) -> None:
    if len(args.exprs) != k:
        raise UsageError(f"compute {args.op} takes {k} expression(s), got {len(args.exprs)}")


def _key_doc(alg, key, arity):
    return alg.key_text(key) if arity == 1 else [alg.key_text(key[0]), alg.key_text(key[1])]


# -- export ------------------------------------------------------------------------------


def cmd_export(args, out: Output) -> int:
    family = load_family(args.family)
    if args.what == "family":
        top = _cap(family, args.max_n, 3)
        text = dumps_descriptor(family_to_descriptor(family, top))
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return EXIT_OK
    diagram = HopfDiagram(family)
    tag = args.algebra or "P"
    if args.what == "dims":
        top = _cap(family, args.max_n, 5)
        values = dims(diagram, tag, top)
        out.doc = {"algebra": tag, "dims": values}
        out.lines = [",".join(map(str, values))]
    else:
        if args.degree is None:
            raise UsageError("export structure-constants needs --degree")
        out.doc = structure_constants(diagram.algebra(tag), args.degree)
        out.lines = [f"# {tag} degree {args.degree}: product a * b -> coefficient c"]
        out.lines += [f"{a} * {b} -> {v} {c}" for a, b, c, v in out.doc["product"]]
        out.lines += ["# coproduct a -> coefficient b1 ⊗ b2"]
        out.lines += [f"{a} -> {v} {b1} ⊗ {b2}" for a, b1, b2, v in out.doc["coproduct"]]
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", default="setcomp", help="'setcomp' (built-in) or a descriptor path")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for sampled checks (default {DEFAULT_SEED})")

    parser = argparse.ArgumentParser(prog="lrbhopf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run checks").add_subparsers(dest="kind", required=True)
    for kind in ("lrb", "axioms", "bialgebra", "morphisms"):
        p = verify.add_parser(kind, parents=[common])
        p.add_argument("--max-n", type=int)
        p.add_argument("--max-degree", type=int, default=4)
        p.add_argument("--algebra", choices=ALGEBRA_TAGS + ("all",))
        p.add_argument("--map", choices=MAP_NAMES + ("supp_star", "lune_star", "all"))
        p.add_argument("--sample-degree", type=int)
        p.add_argument("--samples", type=int, default=1000)
        p.add_argument("--allow-ambiguous-g", action="store_true",
                       help="accept several B1 candidates when a bijection among them exists")
        p.set_defaults(func=cmd_verify)

    compute = sub.add_parser("compute", help="element arithmetic").add_subparsers(dest="op", required=True)
    for op in ("product", "coproduct", "antipode", "counit", "map"):
        p = compute.add_parser(op, parents=[common])
        p.add_argument("--algebra", choices=ALGEBRA_TAGS)
        p.add_argument("--map", choices=MAP_NAMES + ("supp_star", "lune_star"))
        p.add_argument("exprs", nargs="+", metavar="EXPR")
        p.set_defaults(func=cmd_compute)

    export = sub.add_parser("export", help="write data files").add_subparsers(dest="what", required=True)
    for what in ("structure-constants", "family", "dims"):
        p = export.add_parser(what, parents=[common])
        p.add_argument("--algebra", choices=ALGEBRA_TAGS)
        p.add_argument("--max-n", type=int)
        p.add_argument("--degree", type=int)
        p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args)
    try:
        code = args.func(args, out)
    except (DescriptorError, FamilyDataError) as exc:
        print(f"lrbhopf: family data defect: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (UsageError, ExprError, FamilyError, ValueError) as exc:
        print(f"lrbhopf: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if out.lines or out.doc:
        out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
