"""Command-line front end. Every subcommand prints one JSON document on stdout.

Exit status: 0 on success, 1 if any verification item failed, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog, dihedral, presentation, selfcheck
from .abelian import linking
from .braid import BraidWord, is_pure, project_to_permutation
from .catalog import Interval
from .garside import normal_form
from .report import VerificationReport, check_equal

FAMILIES = ("relations", "phi", "generation", "witnesses", "classical", "oracle", "linking")


class UsageError(Exception):
    pass


def _ambient(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("--n must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purebraid",
        description="Pure braid presentations via squares of longest elements.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list generators and relations of the interval presentation")
    p.add_argument("--n", type=_ambient, required=True, help="rank of A_n (braids on n+1 strands)")
    p.add_argument("--kind", choices=("all", "commutator", "box"), default="all")

    p = sub.add_parser("verify", help="check a family of identities or relations")
    p.add_argument("--n", type=_ambient, required=True)
    p.add_argument("--family", required=True,
                   help=f"one of {', '.join(FAMILIES)} or lemma:<id> with id in "
                        f"{', '.join(sorted(catalog.FAMILIES))}")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for relation sweeps")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized families")
    p.add_argument("--trials", type=int, default=1000, help="trials for the randomized families")
    p.add_argument("--show", choices=("failed", "all"), default="failed",
                   help="which report items to list in the output")

    p = sub.add_parser("normalize", help="Garside left normal form of a braid word")
    p.add_argument("--n", type=_ambient, required=True)
    p.add_argument("--word", required=True, help='signed generator indices, e.g. "1 2 -1"')

    p = sub.add_parser("rewrite", help="apply phi to a classical word, or build a surjectivity witness")
    p.add_argument("--n", type=_ambient, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help='classical word, e.g. "A1,3 A2,4^-1"')
    group.add_argument("--witness", help="interval i,j; prints a classical preimage of I_{i,j}")

    p = sub.add_parser("abelianize", help="linking numbers of a pure braid word")
    p.add_argument("--n", type=_ambient, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("dihedral", help="pure dihedral Artin group computations")
    p.add_argument("--n", type=int, required=True, help="edge label of I_n (n >= 2)")
    p.add_argument("--presentation", action="store_true")
    p.add_argument("--ab-rank", action="store_true")
    p.add_argument("--k-rank", action="store_true")
    return parser


def _cmd_enumerate(args) -> tuple[dict, int]:
    n = args.n
    gens = presentation.enumerate_generators(n)
    rels = presentation.enumerate_relations(n, args.kind)
    counts = {"generators": len(gens)}
    if args.kind in ("all", "commutator"):
        counts["commutator"] = sum(1 for r in rels if r.kind != "box")
    if args.kind in ("all", "box"):
        counts["box"] = sum(1 for r in rels if r.kind == "box")
    return {
        "command": "enumerate",
        "ambient": n,
        "kind": args.kind,
        "counts": counts,
        "generators": [{"interval": [v.lo, v.hi], "pair": list(v.pair)} for v in gens],
        "relations": [r.to_json() for r in rels],
    }, 0


def _run_family(family: str, n: int, args) -> VerificationReport:
    if family.startswith("lemma:"):
        return catalog.sweep_identity(family[len("lemma:"):], n)
    if family == "relations":
        return presentation.verify_relations(n, jobs=args.jobs)
    if family == "phi":
        return presentation.verify_phi_well_defined(n, jobs=args.jobs)
    if family == "generation":
        return presentation.verify_generation(n, jobs=args.jobs)
    if family == "witnesses":
        return presentation.verify_witnesses(n, jobs=args.jobs)
    if family == "classical":
        return presentation.verify_classical(n, jobs=args.jobs)
    if family == "oracle":
        return selfcheck.oracle_checks(args.trials, args.seed, max_strands=n + 1)
    if family == "linking":
        return selfcheck.linking_checks(args.trials, args.seed, max_strands=n + 1)
    raise UsageError(f"unknown family {family!r}")


def _cmd_verify(args) -> tuple[dict, int]:
    try:
        report = _run_family(args.family, args.n, args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = report.to_json()
    if args.show == "failed":
        out["items"] = [it for it in out["items"] if it["verdict"] == "fail"]
    out["family"] = args.family
    return out, 0 if report.ok else 1


def _cmd_normalize(args) -> tuple[dict, int]:
    w = BraidWord.parse(args.word, args.n + 1)
    nf = normal_form(w)
    return {
        "command": "normalize",
        "ambient": args.n,
        "word": str(w),
        "normal_form": nf.to_json(),
        "serialized": nf.serialize(),
        "permutation": list(project_to_permutation(w).images),
        "pure": is_pure(w),
    }, 0


def _parse_interval(text: str, n: int) -> Interval:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected an interval 'i,j', got {text!r}") from exc
    return Interval(i, j, n)


def _cmd_rewrite(args) -> tuple[dict, int]:
    n = args.n
    if args.witness is not None:
        v = _parse_interval(args.witness, n)
        g = presentation.surjectivity_witness(v)
        item = presentation.certify_witness(v)
        return {
            "command": "rewrite",
            "ambient": n,
            "witness_for": [v.lo, v.hi],
            "word": str(g),
            "phi": str(presentation.phi(g)),
            "phi_reduced": str(presentation.phi(g).free_reduce()),
            "certified": item.verdict,
        }, 0 if item.verdict else 1
    w = presentation.PresentationWord.parse(args.word, n)
    image = presentation.phi(w)
    item = check_equal("phi", "generation",
                         presentation.realize(image), presentation.realize(w))
    return {
        "command": "rewrite",
        "ambient": n,
        "word": str(w),
        "phi": str(image),
        "braid": str(presentation.realize(image)),
        "certified": item.verdict,
    }, 0 if item.verdict else 1


def _cmd_abelianize(args) -> tuple[dict, int]:
    w = BraidWord.parse(args.word, args.n + 1)
    return {
        "command": "abelianize",
        "ambient": args.n,
        "word": str(w),
        "linking": linking(w).as_dict(),
    }, 0


def _cmd_dihedral(args) -> tuple[dict, int]:
    n = args.n
    show_all = not (args.presentation or args.ab_rank or args.k_rank)
    pres = dihedral.reidemeister_schreier(n)
    out: dict = {"command": "dihedral", "n": n, "index": pres.index,
                 "generator_count": pres.generator_count,
                 "transversal": [str(t) for t in pres.transversal]}
    if show_all or args.presentation:
        out["presentation"] = pres.to_json()
    if show_all or args.ab_rank:
        ab = dihedral.abelianization_rank(pres)
        out["abelianization"] = {"rank": ab.rank, "torsion": ab.torsion, "snf_diagonal": ab.diagonal}
    if show_all or args.k_rank:
        k = dihedral.k_subgroup_rank(n)
        out["k_subgroup"] = {"rank": k.rank, "pure_rank": k.pure_rank, "proper": k.proper,
                             "verdict": "proper" if k.proper else "not-proper"}
    return out, 0


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "normalize": _cmd_normalize,
    "rewrite": _cmd_rewrite,
    "abelianize": _cmd_abelianize,
    "dihedral": _cmd_dihedral,
}


def _summary(doc: dict) -> str:
    if "total" in doc:
        return (f"{doc['command']} (n={doc['ambient']}): "
                f"{doc['passed']}/{doc['total']} passed, {doc['failed']} failed")
    return f"{doc['command']}: ok"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc, status = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"purebraid {args.command}: error: {exc}", file=stderr)
        return 2
    json.dump(doc, stdout, indent=2)
    stdout.write("\n")
    if stderr.isatty():
        print(_summary(doc), file=stderr)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
