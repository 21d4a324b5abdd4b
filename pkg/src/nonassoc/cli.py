"""Batch command-line front end.

Commands: check, dualize, convolve, sigma3, bialgebra, gen.  All output is
deterministic: fixed predicate order, fixed orbit order, canonical file
serialization.  Exit codes: 0 all selected checks pass, 1 a predicate
failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import algebra as alg
from . import coalgebra as coalg
from .algebra import is_gi_associative
from .bialgebra import (
    BialgebraCandidate,
    check_lie_admissible_bialgebra,
    check_prelie_bialgebra_compat,
)
from .coalgebra import is_gi_coalgebra
from .convolution import convolution_algebra
from .duality import dual_algebra, dual_coalgebra
from .fileformat import StructureFormatError, load_structure, serialize_structure
from .linalg import format_rational, in_span
from .randomgen import random_algebra, random_coalgebra
from .sigma3 import (
    Tensor3,
    V,
    format_group_vector,
    invariant_subspace,
    isotypic_dimensions,
    parse_group_vector,
    right_orbit,
)
from .witness import Witness


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _fmt_vector(v) -> str:
    return "(" + ",".join(format_rational(x) for x in v) + ")"


def _fmt_defect(defect) -> str:
    if isinstance(defect, Tensor3):
        return ",".join(
            f"[{a+1},{b+1},{c+1}]={format_rational(x)}" for (a, b, c), x in defect.entries()
        )
    if defect and isinstance(defect[0], tuple):  # matrix
        parts = []
        for i, row in enumerate(defect):
            for j, x in enumerate(row):
                if x != 0:
                    parts.append(f"[{i+1},{j+1}]={format_rational(x)}")
        return ",".join(parts)
    return _fmt_vector(defect)


def _predicate_line(name: str, ok: bool, wit: Witness | None) -> str:
    line = f"{name}: {_fmt_bool(ok)}"
    if not ok and wit is not None:
        line += f" witness=({','.join(str(i) for i in wit.indices)})"
        line += f" defect={_fmt_defect(wit.defect)}"
        if wit.note:
            line += f" note={wit.note}"
    return line


_ALGEBRA_RELATIONS = [f"g{i}" for i in range(1, 7)] + ["lie-admissible", "power3"] + [
    f"g{i}!" for i in range(2, 7)
] + ["commutator-lie"]
_COALGEBRA_RELATIONS = [f"g{i}" for i in range(1, 7)] + ["lie-admissible"] + [
    f"g{i}!" for i in range(1, 7)
] + ["lie"]


def cmd_check(args, out, err) -> int:
    structure = load_structure(args.path)
    if isinstance(structure, alg.Algebra):
        rows = alg.predicate_report(structure)
        available = _ALGEBRA_RELATIONS
    else:
        rows = coalg.predicate_report(structure, strict_shriek=args.strict_shriek)
        available = _COALGEBRA_RELATIONS
    selection = args.relation.lower()
    if selection != "all":
        if selection not in available:
            raise StructureFormatError(
                f"relation {selection!r} not defined for this {('algebra' if isinstance(structure, alg.Algebra) else 'coalgebra')}"
            )
        rows = [r for r in rows if r[0].lower() == selection]
    all_ok = True
    for name, ok, wit in rows:
        print(_predicate_line(name, ok, wit), file=out)
        all_ok = all_ok and ok
    return 0 if all_ok else 1


def _emit(text: str, out_path: str | None, out) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_dualize(args, out, err) -> int:
    structure = load_structure(args.path)
    if isinstance(structure, alg.Algebra):
        dual = dual_coalgebra(structure)
    else:
        dual = dual_algebra(structure)
    _emit(serialize_structure(dual), args.out, out)
    return 0


def cmd_convolve(args, out, err) -> int:
    a = load_structure(args.algebra)
    c = load_structure(args.coalgebra)
    if not isinstance(a, alg.Algebra):
        raise StructureFormatError(f"{args.algebra}: expected an algebra file")
    if not isinstance(c, coalg.Coalgebra):
        raise StructureFormatError(f"{args.coalgebra}: expected a coalgebra file")
    _emit(serialize_structure(convolution_algebra(c, a)), args.out, out)
    return 0


def cmd_sigma3(args, out, err) -> int:
    v = parse_group_vector(args.vector)
    orbit = right_orbit(v)
    basis = invariant_subspace(v)
    dims = isotypic_dimensions(basis)
    member = in_span(V.coeffs, [b.coeffs for b in basis])
    print("orbit:", file=out)
    for w in orbit:
        print(f"  {format_group_vector(w)}", file=out)
    print("basis:", file=out)
    for b in basis:
        print(f"  {format_group_vector(b)}", file=out)
    print(f"dim F_v: {len(basis)}", file=out)
    print(f"isotypic: ({dims[0]},{dims[1]},{dims[2]})", file=out)
    print(f"V in F_v: {'yes' if member else 'no'}", file=out)
    return 0


def cmd_bialgebra(args, out, err) -> int:
    a = load_structure(args.algebra)
    c = load_structure(args.coalgebra)
    if not isinstance(a, alg.Algebra):
        raise StructureFormatError(f"{args.algebra}: expected an algebra file")
    if not isinstance(c, coalg.Coalgebra):
        raise StructureFormatError(f"{args.coalgebra}: expected a coalgebra file")
    try:
        cand = BialgebraCandidate(a, c)
    except ValueError as e:
        raise StructureFormatError(str(e))
    all_ok = True
    if args.compat in ("lie-admissible", "all"):
        ok, wit = check_lie_admissible_bialgebra(cand)
        print(_predicate_line("lie-admissible-bialgebra", ok, wit), file=out)
        all_ok = all_ok and ok
    if args.compat in ("pre-lie", "all"):
        ok_a, wit_a = is_gi_associative(a, 3)
        ok_c, wit_c = is_gi_coalgebra(c, 3)
        print(_predicate_line("algebra-G3", ok_a, wit_a), file=out)
        print(_predicate_line("coalgebra-G3", ok_c, wit_c), file=out)
        ok, wit = check_prelie_bialgebra_compat(cand)
        print(_predicate_line("pre-lie-compatibility", ok, wit), file=out)
        all_ok = all_ok and ok
    return 0 if all_ok else 1


def cmd_gen(args, out, err) -> int:
    rng = random.Random(args.seed)
    if args.kind == "algebra":
        structure = random_algebra(rng, args.dim, -args.max, args.max)
    else:
        structure = random_coalgebra(rng, args.dim, -args.max, args.max)
    _emit(serialize_structure(structure), args.out, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonassoc",
        description="Exact identity checks for structure-constant algebras and coalgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the predicate table on a structure file")
    p.add_argument("path")
    p.add_argument("--relation", default="all",
                   help="g1..g6, lie-admissible, power3, g1!..g6!, commutator-lie, lie or all")
    p.add_argument("--strict-shriek", action="store_true",
                   help="use the literal unnormalized iterated-coproduct condition")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dualize", help="write the dual structure")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("convolve", help="write the convolution algebra of (algebra, coalgebra)")
    p.add_argument("algebra")
    p.add_argument("coalgebra")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("sigma3", help="orbit/invariant-subspace report for a group-algebra vector")
    p.add_argument("vector", help="six comma-separated rationals (id,t12,t13,t23,c1,c2)")
    p.set_defaults(func=cmd_sigma3)

    p = sub.add_parser("bialgebra", help="compatibility checks for an (algebra, coalgebra) pair")
    p.add_argument("algebra")
    p.add_argument("coalgebra")
    p.add_argument("--compat", choices=["lie-admissible", "pre-lie", "all"], default="all")
    p.set_defaults(func=cmd_bialgebra)

    p = sub.add_parser("gen", help="write a seeded random structure file")
    p.add_argument("--kind", choices=["algebra", "coalgebra"], required=True)
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max", type=int, default=3, help="largest absolute integer constant")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out, err)
    except (StructureFormatError, ValueError) as e:
        print(f"error: {e}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
