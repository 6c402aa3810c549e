"""Command-line entry point: ``invsemi <command> ...``.

Decision commands print ``yes`` or ``no`` first and exit 0 or 1. Any error
exits 2 with a one-line reason on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import abstract, closure, conj_symmetric, constructions
from .orbits import cycle_chain_type, format_type
from .pbij import empty, format_elements, parse_elements


class CliError(Exception):
    pass


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise CliError(f"no such file: {path}")
    return p.read_text()


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _gens(path: str):
    return [g for _, g in parse_elements(_read(path))]


def _single(path: str):
    named = parse_elements(_read(path))
    if not named:
        raise CliError(f"{path}: no elements")
    return named[0][1]


def _verdict(ok: bool) -> int:
    print("yes" if ok else "no")
    return 0 if ok else 1


# -- commands -----------------------------------------------------------------

def cmd_type(args) -> int:
    sys.stdout.write(format_type(cycle_chain_type(_single(args.elem))))
    return 0


def cmd_conj(args) -> int:
    if args.witness and args.rel in ("pstar", "tr"):
        raise CliError(f"no witness construction for --rel {args.rel}")
    a, b = _single(args.a), _single(args.b)
    ok = conj_symmetric.RELATIONS[args.rel](a, b)
    print("yes" if ok else "no")
    if ok and args.witness:
        if args.rel in ("i", "u"):
            g = conj_symmetric.conj_i_witness(a, b)
            sys.stdout.write(format_elements([("g", g)]))
        elif args.rel == "p":
            w = conj_symmetric.conj_p_witness(a, b)
            sys.stdout.write(format_elements([("u", w.u), ("v", w.v)]))
        elif args.rel == "o":
            # the empty map is the zero of I_n: a0 = 0b
            sys.stdout.write(format_elements([("g", empty(a.degree))]))
    return 0 if ok else 1


def cmd_check(args) -> int:
    gens = _gens(args.gens)
    return _verdict(closure.check_property(gens, args.prop, args.inverse, args.max_elements))


def cmd_member(args) -> int:
    S = closure.generate(_gens(args.gens), True, args.max_elements)
    return _verdict(_single(args.h) in S)


def cmd_green(args) -> int:
    gens = _gens(args.gens)
    if len(gens) < 2:
        raise CliError("green needs at least two generators")
    S = closure.generate(gens, True, args.max_elements)
    return _verdict(closure.green(S, gens[0], gens[1], args.rel))


def cmd_idrel(args) -> int:
    gens = _gens(args.gens)
    return _verdict(closure.sim_is_identity(gens, args.rel, args.inverse, args.max_elements))


def cmd_closure(args) -> int:
    S = closure.generate(_gens(args.gens), args.inverse, args.max_elements)
    print(f"size {len(S)}")
    if args.emit_cayley:
        _write(args.emit_cayley, abstract.format_table(closure.to_cayley(S)))
    return 0


def cmd_table_conj(args) -> int:
    T = abstract.parse_table(_read(args.table))
    if args.classes:
        cls = abstract.conj_classes(T, args.rel)
        for c in cls.classes:
            print(" ".join(str(x + 1) for x in c))
        if not cls.transitive:
            print("# relation is not transitive; classes of its transitive closure")
        return 0
    if args.a is None or args.b is None:
        raise CliError("give two element indices or --classes")
    for x in (args.a, args.b):
        if not 1 <= x <= T.order:
            raise CliError(f"element index {x} outside 1..{T.order}")
    return _verdict(abstract.conj(T, args.a - 1, args.b - 1, args.rel))


def cmd_reduce_graph(args) -> int:
    G = constructions.parse_graph(_read(args.graph))
    gens = constructions.graph_to_semigroup(G)
    if not gens:
        raise CliError("graph has no edges; nothing to write")
    named = [(f"e{u}_{v}", g) for (u, v), g in zip(G.edges, gens)]
    _write(args.output, format_elements(named))
    return 0


def cmd_reduce_iconj(args) -> int:
    inst = constructions.iconj_reduction(_gens(args.gens), _single(args.h))
    named = [(f"s{i}", g) for i, g in enumerate(inst.lifted, 1)]
    named += [("a", inst.a), ("b", inst.b)]
    _write(args.output, format_elements(named))
    return 0


def cmd_gen_hanoi(args) -> int:
    inst = constructions.hanoi_instance(args.disks)
    _write(args.output, format_elements(list(inst.named) + [("e", inst.target)]))
    return 0


def cmd_cover(args) -> int:
    P = constructions.Partition.parse(args.partition)
    T = constructions.cover_table(P, args.rel)
    text = abstract.format_table(T)
    code = 0
    if args.verify:
        code = _verdict(constructions.verify_partition_cover(P, args.rel))
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return code


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="invsemi", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def capped(sp):
        sp.add_argument("--max-elements", type=int, default=closure.DEFAULT_CAP)

    sp = sub.add_parser("type", help="cycle and chain counts of an element")
    sp.add_argument("elem")
    sp.set_defaults(func=cmd_type)

    sp = sub.add_parser("conj", help="conjugacy of two elements of I_n")
    sp.add_argument("--rel", required=True, choices=sorted(conj_symmetric.RELATIONS))
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_conj)

    sp = sub.add_parser("check", help="structural property of a generated semigroup")
    sp.add_argument("--prop", required=True, choices=closure.PROPERTIES)
    sp.add_argument("--inverse", action="store_true", help="close under inverses too")
    sp.add_argument("gens")
    capped(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("member", help="membership in the generated inverse semigroup")
    sp.add_argument("gens")
    sp.add_argument("h")
    capped(sp)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("green", help="Green's relation between the first two generators")
    sp.add_argument("--rel", required=True, choices=("R", "L", "H"))
    sp.add_argument("gens")
    capped(sp)
    sp.set_defaults(func=cmd_green)

    sp = sub.add_parser("idrel", help="is the conjugacy the identity relation")
    sp.add_argument("--rel", required=True, choices=closure.IDENTITY_RELATIONS)
    sp.add_argument("--inverse", action="store_true")
    sp.add_argument("gens")
    capped(sp)
    sp.set_defaults(func=cmd_idrel)

    sp = sub.add_parser("closure", help="enumerate the generated semigroup")
    sp.add_argument("--inverse", action="store_true")
    sp.add_argument("--emit-cayley", metavar="FILE")
    sp.add_argument("gens")
    capped(sp)
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("table", help="commands on Cayley tables")
    tsub = sp.add_subparsers(dest="table_command", required=True)
    tp = tsub.add_parser("conj")
    tp.add_argument("--rel", required=True, choices=abstract.RELATIONS)
    tp.add_argument("--classes", action="store_true")
    tp.add_argument("table")
    tp.add_argument("a", nargs="?", type=int)
    tp.add_argument("b", nargs="?", type=int)
    tp.set_defaults(func=cmd_table_conj)

    sp = sub.add_parser("reduce", help="reductions between problems")
    rsub = sp.add_subparsers(dest="reduce_command", required=True)
    rp = rsub.add_parser("graph")
    rp.add_argument("graph")
    rp.add_argument("-o", "--output", required=True)
    rp.set_defaults(func=cmd_reduce_graph)
    rp = rsub.add_parser("iconj")
    rp.add_argument("gens")
    rp.add_argument("h")
    rp.add_argument("-o", "--output", required=True)
    rp.set_defaults(func=cmd_reduce_iconj)

    sp = sub.add_parser("gen", help="instance generators")
    gsub = sp.add_subparsers(dest="gen_command", required=True)
    gp = gsub.add_parser("hanoi")
    gp.add_argument("disks", type=int)
    gp.add_argument("-o", "--output", required=True)
    gp.set_defaults(func=cmd_gen_hanoi)

    sp = sub.add_parser("cover", help="semigroup realising a partition as classes")
    sp.add_argument("--rel", required=True, choices=constructions.COVER_RELATIONS)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("-o", "--output")
    sp.add_argument("partition")
    sp.set_defaults(func=cmd_cover)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed its message
        return 2 if e.code else 0
    try:
        return args.func(args)
    except (CliError, ValueError, closure.CapExceeded, abstract.PreconditionError) as e:
        msg = str(e).splitlines()[0] if str(e) else type(e).__name__
        print(f"invsemi: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
