"""Command-line interface: ``idclass {analyze,ideals,hasse,verify,factorize}``.

Reports are JSON on stdout with a fixed key order.  Exit codes: 0 success,
1 verification failures, 2 bad input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from idclass.errors import IdealClassError, IdentityHasNone
from idclass.ideals import ideal_from_generators
from idclass.monoid import (
    class_monoid,
    minimal_factorizations,
    to_dot,
    verify_bounds,
)
from idclass.semigroup import (
    classify_symmetry,
    from_generators,
    pseudo_frobenius,
    special_gaps,
)
from idclass.verify import default_jobs, verify

EXIT_OK, EXIT_FAILURES, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


class InputError(Exception):
    pass


def parse_ints(text: str) -> list[int]:
    try:
        vals = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise InputError("empty integer list")
    return vals


def _semigroup(text: str):
    gens = parse_ints(text)
    if any(g <= 0 for g in gens):
        raise InputError("generators must be positive")
    return from_generators(gens)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_analyze(args) -> tuple[dict, int]:
    S = _semigroup(args.generators)
    proper = not S.is_N
    doc = {
        "generators": list(S.min_generators),
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "genus": S.genus,
        "type": S.type,
        "gaps": list(S.gaps),
        "pseudo_frobenius": pseudo_frobenius(S) if proper else [],
        "special_gaps": special_gaps(S) if proper else [],
        "apery": list(S.apery),
        "kunz": list(S.kunz),
        "symmetry": classify_symmetry(S).value if proper else None,
    }
    return doc, EXIT_OK


def cmd_ideals(args) -> tuple[dict, int]:
    S = _semigroup(args.generators)
    M = class_monoid(S)
    rows = []
    for i, E in enumerate(M.ideals):
        row = {"index": i, **E.to_json()}
        if args.classify:
            c = M.classification[i]
            row.update(
                irreducible=c.irreducible, atom=c.atom, quark=c.quark, prime=c.prime,
                idempotent=c.idempotent, reduction_number=c.reduction_number, nu=c.nu,
            )
        rows.append(row)
    doc = {"generators": list(S.min_generators), "count": len(M), "ideals": rows}
    if args.classify:
        doc["counts"] = {
            flag: sum(getattr(c, flag) for c in M.classification)
            for flag in ("irreducible", "atom", "quark", "prime", "idempotent")
        }
        doc["bounds"] = verify_bounds(S, M)
    if args.table:
        doc["table"] = M.add_table.tolist()
    return doc, EXIT_OK


def cmd_hasse(args) -> tuple[str, int]:
    S = _semigroup(args.generators)
    text = to_dot(class_monoid(S), args.order)
    if args.dot:
        try:
            with open(args.dot, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.dot}: {exc}", file=sys.stderr)
            return "", EXIT_IO
        return "", EXIT_OK
    return text, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    if args.max_genus < 0:
        raise InputError("--max-genus must be non-negative")
    report = verify(args.max_genus, jobs=args.jobs)
    return report, EXIT_FAILURES if report["failures"] else EXIT_OK


def cmd_factorize(args) -> tuple[dict, int]:
    S = _semigroup(args.generators)
    xs = parse_ints(args.ideal)
    M = class_monoid(S)
    I = M.find(xs)
    E = M.ideals[I]
    try:
        facts, lengths = minimal_factorizations(M, I)
    except IdentityHasNone:
        facts, lengths = [()], [0]
    doc = {
        "generators": list(S.min_generators),
        "ideal": E.to_json(),
        "identity": I == 0,
        "factorizations": [[M.ideals[j].label for j in f] for f in facts],
        "lengths": lengths,
    }
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="idclass", description="Ideal class monoids of numerical semigroups")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classical invariants of a semigroup")
    a.add_argument("generators", help="comma-separated generators, e.g. 3,5,7")
    a.set_defaults(func=cmd_analyze)

    i = sub.add_parser("ideals", help="list I_0(S)")
    i.add_argument("generators")
    i.add_argument("--classify", action="store_true", help="add irreducible/atom/quark/prime/idempotent columns")
    i.add_argument("--table", action="store_true", help="include the addition table (ideal indices)")
    i.set_defaults(func=cmd_ideals)

    h = sub.add_parser("hasse", help="Hasse diagram as Graphviz DOT")
    h.add_argument("generators")
    h.add_argument("--order", choices=("inclusion", "preceq"), default="inclusion")
    h.add_argument("--dot", metavar="PATH", help="write DOT here instead of stdout")
    h.set_defaults(func=cmd_hasse)

    v = sub.add_parser("verify", help="check every property over the genus tree")
    v.add_argument("--max-genus", type=int, required=True)
    v.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default $IDCLASS_JOBS or 1)")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("factorize", help="minimal factorizations into irreducibles")
    f.add_argument("generators")
    f.add_argument("--ideal", required=True, help="comma-separated generators of the ideal")
    f.set_defaults(func=cmd_factorize)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except (InputError, IdealClassError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(out, dict):
        sys.stdout.write(dumps(out))
    elif out:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
