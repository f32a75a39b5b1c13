"""Command line front end: ledlab <command>.

Exit codes: 0 success, 2 a checked property came out false, 3 an enumeration
cap or size bound was exceeded, 4 malformed input or invalid parameters.
"""

import argparse
import os
import sys

from . import families
from .docio import document, emit, le_word, legraph_dot, read_document, read_graph, write_document
from .errors import (
    CapExceeded,
    ClassViolation,
    CycleDetected,
    InconsistentConstraints,
    MalformedDocument,
    NotIntervalOrder,
    SizeExceeded,
    WidthExceeded,
)
from .gadget import build_gadget, preprocess, verify_reduction_micro
from .linext import (
    DEFAULT_CAP,
    brute_force_led,
    conjecture1_holds,
    is_diametrally_reversing,
    le_graph,
    le_graph_diameter,
)
from .poset import critical_pairs, is_graded, width
from .verify import b4star_report, pstar_report
from .width3 import dp_led_width3

GEN_FAMILIES = (
    "chain",
    "antichain",
    "n",
    "m",
    "boolean",
    "b4star",
    "pstar",
    "redcore",
    "interval",
    "unitinterval",
    "threelayer",
    "height2",
    "twodim",
    "gadget",
)

CHECK_PROPERTIES = ("diam-reversing", "conjecture1", "critical-pairs", "interval", "graded")


class _Parser(argparse.ArgumentParser):
    # reserve exit code 2 for property verdicts; bad usage is code 4
    def error(self, message):
        self.exit(4, f"{self.prog}: error: {message}\n")


def _bool(v):
    return "true" if v else "false"


def _cap_of(args):
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("LEDLAB_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise MalformedDocument(f"LEDLAB_CAP must be an integer, got {env!r}")
    return DEFAULT_CAP


def _need(args, family, name):
    value = getattr(args, name)
    if value is None:
        raise MalformedDocument(f"family {family!r} needs --{name}")
    return value


def cmd_gen(args):
    family = args.family
    seed = args.seed
    notes = []
    weights = None
    if family == "chain":
        p = families.chain(_need(args, family, "n"))
    elif family == "antichain":
        p = families.antichain(_need(args, family, "n"))
    elif family == "n":
        p = families.n_poset()
    elif family == "m":
        p = families.m_poset()
    elif family == "boolean":
        p = families.boolean_lattice(_need(args, family, "n"))
    elif family == "b4star":
        p, _ = families.b4_star(args.w)
    elif family == "pstar":
        p, _ = families.p_star(args.w)
    elif family == "redcore":
        p = families.red_core()
    elif family == "interval":
        p = families.random_interval_order(_need(args, family, "n"), seed)
        notes.append(f"gen interval n={args.n} seed={seed}")
    elif family == "unitinterval":
        p = families.random_unit_interval_order(_need(args, family, "n"), seed, args.length)
        notes.append(f"gen unitinterval n={args.n} seed={seed} length={args.length}")
    elif family == "threelayer":
        p = families.random_3layer(_need(args, family, "n"), seed)
        notes.append(f"gen threelayer n={args.n} seed={seed}")
    elif family == "height2":
        p = families.random_height2(_need(args, family, "n"), seed)
        notes.append(f"gen height2 n={args.n} seed={seed}")
    elif family == "twodim":
        p = families.random_two_dim(_need(args, family, "n"), seed)
        notes.append(f"gen twodim n={args.n} seed={seed}")
    else:
        if args.graph is None:
            raise MalformedDocument("family 'gadget' needs --graph")
        g = read_graph(args.graph)
        gi = build_gadget(preprocess(g), args.k)
        p = gi.wp.poset
        weights = gi.wp.weight
        notes.append(f"gen gadget k={args.k} r={gi.r} s={gi.s}")
    doc = document(p, weights, notes)
    if args.out:
        write_document(args.out, doc)
        print(f"out={args.out}")
        print(f"n={p.n}")
    else:
        sys.stdout.write(emit(doc))
    return 0


def cmd_led(args):
    doc = read_document(args.file)
    p = doc.poset
    wp = doc.weighted()
    weighted = doc.weights is not None and any(w != 1 for w in doc.weights)
    cap = _cap_of(args)
    w = width(p)
    method = args.method
    if method == "auto":
        method = "dp3" if w <= 3 and not weighted else "brute"
    if method == "dp3" and weighted:
        raise MalformedDocument("dp3 handles unit weights only; use --method brute")
    print(f"n={p.n}")
    print(f"width={w}")
    print(f"method={method}")
    if method == "dp3":
        value = dp_led_width3(p)
        print(f"value={value}")
    else:
        value, (l1, l2) = brute_force_led(wp, cap=cap, threads=args.threads)
        print(f"value={value}")
        print(f"witness1={le_word(p.labels, l1)}")
        print(f"witness2={le_word(p.labels, l2)}")
    return 0


def cmd_check(args):
    doc = read_document(args.file)
    p = doc.poset
    cap = _cap_of(args)
    prop = args.property
    print(f"property={prop}")
    if prop == "diam-reversing":
        holds = is_diametrally_reversing(p, cap=cap, threads=args.threads)
    elif prop == "conjecture1":
        report = conjecture1_holds(p, cap=cap, threads=args.threads)
        holds = report.holds
        print(f"is_chain={_bool(report.is_chain)}")
        if report.witness:
            print(f"witness1={le_word(p.labels, report.witness[0])}")
            print(f"witness2={le_word(p.labels, report.witness[1])}")
    elif prop == "critical-pairs":
        pairs = critical_pairs(p)
        for u, v in pairs:
            print(f"critical={p.labels[u]},{p.labels[v]}")
        print(f"count={len(pairs)}")
        holds = bool(pairs)
    elif prop == "interval":
        try:
            rep = families.canonical_interval_representation(p)
            for x in range(p.n):
                l, r = rep.intervals[x]
                print(f"interval={p.labels[x]}:{l},{r}")
            holds = True
        except NotIntervalOrder as exc:
            print(f"reason={exc}")
            holds = False
    else:
        holds = is_graded(p)
    print(f"holds={_bool(holds)}")
    return 0 if holds else 2


def cmd_legraph(args):
    doc = read_document(args.file)
    p = doc.poset
    cap = _cap_of(args)
    dot = legraph_dot(p, cap)
    if not args.dot:
        sys.stdout.write(dot)
        return 0
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(dot)
    g = le_graph(p, cap)
    print(f"out={args.dot}")
    print(f"vertices={len(g.vertices)}")
    print(f"edges={len(g.edges)}")
    print(f"diameter={le_graph_diameter(g)}")
    return 0


def cmd_verify_counterexample(args):
    if args.target == "b4star":
        rep = b4star_report(threads=args.threads)
        print("target=b4star")
        print(f"crit_ok={_bool(rep.crit_ok)}")
        print(f"pair_distance={rep.pair_distance}")
        print(f"exhibited={rep.exhibited}")
        print(f"constrained_max={rep.constrained_max}")
        print(f"bound={rep.bound}")
        print(f"gap={rep.exhibited}>{rep.bound}")
        print(f"ok={_bool(rep.all_ok)}")
        return 0 if rep.all_ok else 2
    rep = pstar_report(threads=args.threads)
    print("target=pstar")
    print(f"crit_ok={_bool(rep.crit_ok)}")
    print(f"red_led={rep.red_led}")
    print(f"constrained_max={rep.constrained_max}")
    print(f"lhs={rep.lhs}")
    print(f"rhs={rep.rhs}")
    print(f"gap={rep.lhs}>{rep.rhs}")
    print(f"ok={_bool(rep.all_ok)}")
    return 0 if rep.all_ok else 2


def cmd_verify_reduction(args):
    g = read_graph(args.graph_file)
    cap = args.cap if args.cap is not None else 20_000
    rep = verify_reduction_micro(g, args.k, cap=cap, threads=args.threads)
    print(f"r={rep.r}")
    print(f"s={rep.s}")
    print(f"k={rep.k}")
    print(f"d={rep.d}")
    print(f"threshold={rep.threshold}")
    print(f"led={rep.led}")
    print(f"method={rep.method}")
    print(f"has_bis={_bool(rep.has_bis)}")
    print(f"base_pair_ok={_bool(rep.base_pair_ok)}")
    print(f"bis_transfer_ok={_bool(rep.bis_transfer_ok)}")
    print(f"biconditional={_bool(rep.threshold_matches)}")
    print(f"consistent={_bool(rep.consistent)}")
    return 0 if rep.consistent else 2


def build_parser():
    parser = _Parser(prog="ledlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[], help="write a poset document")
    gen.add_argument("family", choices=GEN_FAMILIES)
    gen.add_argument("--n", type=int)
    gen.add_argument("--w", type=int, default=3)
    gen.add_argument("--k", type=int, default=1)
    gen.add_argument("--length", type=int, default=2)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--graph")
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    led = sub.add_parser("led", help="linear extension diameter of a document")
    led.add_argument("file")
    led.add_argument("--method", choices=("auto", "brute", "dp3"), default="auto")
    led.add_argument("--cap", type=int)
    led.add_argument("--threads", type=int)
    led.set_defaults(func=cmd_led)

    check = sub.add_parser("check", help="check a property of a document")
    check.add_argument("file")
    check.add_argument("--property", required=True, choices=CHECK_PROPERTIES)
    check.add_argument("--cap", type=int)
    check.add_argument("--threads", type=int)
    check.set_defaults(func=cmd_check)

    legraph = sub.add_parser("legraph", help="export the extension graph as DOT")
    legraph.add_argument("file")
    legraph.add_argument("--dot", help="output path; default prints to stdout")
    legraph.add_argument("--cap", type=int)
    legraph.set_defaults(func=cmd_legraph)

    vc = sub.add_parser("verify-counterexample", help="decomposed checks for the two constructions")
    vc.add_argument("--target", required=True, choices=("b4star", "pstar"))
    vc.add_argument("--threads", type=int)
    vc.set_defaults(func=cmd_verify_counterexample)

    vr = sub.add_parser("verify-reduction", help="micro check of the hardness gadget")
    vr.add_argument("graph_file")
    vr.add_argument("k", type=int)
    vr.add_argument("--cap", type=int)
    vr.add_argument("--threads", type=int)
    vr.set_defaults(func=cmd_verify_reduction)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits directly on usage errors; surface the code instead
        return exc.code if exc.code is not None else 0
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"ledlab: {exc}; raise --cap or LEDLAB_CAP to proceed", file=sys.stderr)
        return 3
    except (SizeExceeded, WidthExceeded) as exc:
        print(f"ledlab: {exc}", file=sys.stderr)
        return 3
    except (MalformedDocument, CycleDetected, ClassViolation, InconsistentConstraints) as exc:
        print(f"ledlab: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"ledlab: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
