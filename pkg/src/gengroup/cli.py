"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure or falsified claim, 2 usage,
I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import harness
from .core import direct_product, from_cayley_doc, group_component, idempotents, parse_cayley_doc, to_cayley_doc, verify_axioms
from .errors import AxiomError, GenGroupError, NotSurjective
from .hom import HomTable, check_preservation, enumerate_homs, first_violation
from .rees import random_rees, rees_build, spec_from_doc, spec_to_doc
from .seqgg import evaluate
from .slender import SnfResult, classify, is_slender_fg, matrix_from_doc, matrix_to_doc, named_verdict, smith_normal_form, snf_problems

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _emit(doc) -> None:
    print(json.dumps(doc))


def cmd_verify(args) -> int:
    names, table = parse_cayley_doc(_load(args.path))
    report = verify_axioms(table)
    for line in report.lines(names):
        print(line)
    return OK if report.verdict else FAIL


def cmd_decompose(args) -> int:
    G = from_cayley_doc(_load(args.path))
    for z in sorted(idempotents(G)):
        _emit({"idempotent": G.names[z], "component": to_cayley_doc(group_component(G, z))})
    return OK


def cmd_rees(args) -> int:
    if args.seed is not None:
        spec = random_rees(args.seed, tuple(args.caps))
        if args.spec_only:
            _emit(spec_to_doc(spec))
            return OK
    elif args.path:
        spec = spec_from_doc(_load(args.path))
    else:
        raise UsageError("rees needs a spec file or --seed")
    _emit(to_cayley_doc(rees_build(spec)))
    return OK


def cmd_product(args) -> int:
    G, H = from_cayley_doc(_load(args.left)), from_cayley_doc(_load(args.right))
    _emit(to_cayley_doc(direct_product(G, H)))
    return OK


def _hom_from(args) -> HomTable:
    G, H = from_cayley_doc(_load(args.source)), from_cayley_doc(_load(args.target))
    doc = _load(args.map)
    if not isinstance(doc, dict) or not isinstance(doc.get("images"), list):
        raise UsageError(f"{args.map}: expected {{\"images\": [...]}}")
    return HomTable(G, H, tuple(doc["images"]))


def cmd_hom(args) -> int:
    h = _hom_from(args)
    w = first_violation(h)
    if w is not None:
        a, b = w
        print(f"homomorphism: no witness=({h.source.names[a]},{h.source.names[b]})")
        return FAIL
    check_preservation(h)
    print("homomorphism: yes")
    print("preserves e: yes")
    print("preserves inverses: yes")
    return OK


def cmd_enumerate_homs(args) -> int:
    G, H = from_cayley_doc(_load(args.source)), from_cayley_doc(_load(args.target))
    result = enumerate_homs(G, H, cap=args.cap)
    for h in result:
        _emit(h.to_doc())
    print(f"# {len(result)} homomorphisms{' (truncated)' if result.truncated else ''}")
    return OK


def cmd_snf(args) -> int:
    A = matrix_from_doc(_load(args.path))
    if args.check:
        cert = _load(args.check)
        try:
            res = SnfResult(*(matrix_from_doc(cert[k]) for k in ("U", "D", "V")))
        except (KeyError, TypeError):
            raise UsageError(f"{args.check}: expected an object with U, D, V matrices") from None
        problems = snf_problems(A, res)
        if problems:
            print(f"certificate: invalid witness={problems[0]}")
            return FAIL
        print("certificate: valid")
        return OK
    res = smith_normal_form(A)
    _emit({"U": matrix_to_doc(res.U), "D": matrix_to_doc(res.D), "V": matrix_to_doc(res.V)})
    return OK


def _verdict(slender: bool) -> str:
    return "slender" if slender else "not slender"


def _classify_file(path: str, generators: int | None) -> int:
    R = matrix_from_doc(_load(path))
    g = classify(R, R.cols if generators is None else generators)
    print(f"{g} — {_verdict(is_slender_fg(g))}")
    return OK


def cmd_classify(args) -> int:
    return _classify_file(args.path, args.generators)


def cmd_slender(args) -> int:
    if Path(args.target).is_file():
        return _classify_file(args.target, None)
    v = named_verdict(args.target)
    print(f"{v.name} — {v.verdict} ({v.citation})")
    return OK


def cmd_star_eval(args) -> int:
    print(evaluate(args.expr))
    return OK


def cmd_paper_checks(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get("GENGROUP_SEED")
        try:
            seed = int(env) if env else harness.DEFAULT_SEED
        except ValueError:
            raise UsageError(f"GENGROUP_SEED must be an integer, got {env!r}") from None
    try:
        reports = harness.run_all(seed, args.bounds, inject=args.inject)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if args.bounds <= 0:
        print("warning: bounds is 0, every claim skipped", file=sys.stderr)
    for r in reports:
        print(r.line())
    if args.json:
        doc = json.dumps(harness.report_document(reports, seed, args.bounds, args.inject), indent=2)
        if args.json == "-":
            print(doc)
        else:
            Path(args.json).write_text(doc + "\n")
    return FAIL if any(r.status == harness.FALSIFIED for r in reports) else OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gengroup", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("verify", help="check the generalized-group axioms of a Cayley table")
    s.add_argument("path")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decompose", help="list idempotents and their group components")
    s.add_argument("path")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("rees", help="build a Rees matrix semigroup from a spec file or a seed")
    s.add_argument("path", nargs="?")
    s.add_argument("--seed", type=int)
    s.add_argument("--caps", type=int, nargs=2, default=(3, 3), metavar=("I", "LAMBDA"))
    s.add_argument("--spec-only", action="store_true", help="with --seed, print the spec instead of the table")
    s.set_defaults(func=cmd_rees)

    s = sub.add_parser("product", help="direct product of two Cayley tables")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("hom", help="check that a map is a homomorphism")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("map")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("enumerate-homs", help="list all homomorphisms between two tables")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--cap", type=int)
    s.set_defaults(func=cmd_enumerate_homs)

    s = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    s.add_argument("path")
    s.add_argument("--check", metavar="CERT", help="validate a U/D/V certificate instead of computing one")
    s.set_defaults(func=cmd_snf)

    s = sub.add_parser("classify", help="invariant factors of Z^n modulo relation rows")
    s.add_argument("path")
    s.add_argument("--generators", type=int)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("slender", help="slenderness verdict for a relation matrix file or a named group")
    s.add_argument("target", metavar="path|name")
    s.set_defaults(func=cmd_slender)

    s = sub.add_parser("star-eval", help="evaluate an expression over finitely supported sequences")
    s.add_argument("expr")
    s.set_defaults(func=cmd_star_eval)

    s = sub.add_parser("paper-checks", help="run every claim check over the fixture corpus")
    s.add_argument("--seed", type=int)
    s.add_argument("--bounds", type=int, default=harness.DEFAULT_BOUND)
    s.add_argument("--json", metavar="PATH", help="write the full JSON report ('-' for stdout)")
    s.add_argument("--inject", action="append", default=[], choices=sorted(harness.MUTATIONS),
                   help="add a corrupted fixture (repeatable)")
    s.set_defaults(func=cmd_paper_checks)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except AxiomError as exc:
        print(f"error: not a generalized group: {exc}", file=sys.stderr)
        return FAIL
    except NotSurjective as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    except GenGroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
