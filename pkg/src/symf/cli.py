"""Command line front end.

Every subcommand prints deterministic text: term order is fixed by the
library, rationals print exactly, and nothing emits timings or machine
specific paths.  Exit codes separate the failure families so scripts can
tell a typo (2) from a degree mismatch (3) from a size cap (4).
"""

import argparse
import json
import sys
from fractions import Fraction

from .characters import character_table
from .enumeration import (DealSpec, RegularGraphSpec, card_deals,
                          deals_cycle_index, regular_graphs,
                          regular_graphs_cycle_index)
from .errors import DegreeError, ExprError, ResourceLimitError, TruncationError
from .expr import evaluate_text
from .invariants import (GLnAdjoint, PolyFunctor, SLnDefining, SnPermutation,
                         Sp2nDefining, hilbert_dim, inv_char,
                         inv_char_polyfunc)
from .partitions import Partition, partitions_of
from .symfunc import SymFn, to_basis, to_json_dict


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exceptions, not exits."""

    def error(self, message):
        raise _UsageError(message)


def _family(args):
    if args.family == "sl":
        return SLnDefining(args.n)
    if args.family == "sp":
        return Sp2nDefining(args.n)
    if args.family == "perm":
        return SnPermutation(args.n)
    return GLnAdjoint(args.n, stable=False)


def _print_symfn(f, basis):
    print(str(to_basis(f, basis)))


def _json_value(value):
    if isinstance(value, SymFn):
        return to_json_dict(value)
    if isinstance(value, Partition):
        return {"partition": list(value)}
    return {"rational": str(Fraction(value))}


def _cmd_eval(args):
    value = evaluate_text(args.expr)
    if args.json:
        if isinstance(value, SymFn):
            value = to_basis(value, args.basis)
        print(json.dumps(_json_value(value)))
        return 0
    if isinstance(value, SymFn):
        _print_symfn(value, args.basis)
    else:
        print(str(value))
    return 0


def _functor_from(args):
    value = evaluate_text(args.functor)
    if not isinstance(value, SymFn):
        raise ExprError("--functor must evaluate to a symmetric function")
    return PolyFunctor(value)


def _cmd_inv(args):
    family = _family(args)
    if args.functor is None:
        out = inv_char(family, args.r)
    else:
        out = inv_char_polyfunc(family, _functor_from(args), args.r)
    _print_symfn(out, args.basis)
    return 0


def _cmd_hilbert(args):
    value = hilbert_dim(_family(args), _functor_from(args), args.r)
    print(str(value))
    return 0


def _cmd_deals(args):
    spec = DealSpec(args.m, args.n)
    if args.cycle_index:
        _print_symfn(deals_cycle_index(spec), "p")
    else:
        print(str(card_deals(spec)))
    return 0


def _cmd_regular(args):
    spec = RegularGraphSpec(args.n, args.k)
    if args.cycle_index:
        _print_symfn(regular_graphs_cycle_index(spec), "p")
    else:
        print(str(regular_graphs(spec)))
    return 0


def _cmd_table(args):
    table = character_table(args.r)
    shapes = list(partitions_of(args.r))
    rows = [["chi \\ class"] + [str(mu) for mu in shapes]]
    for lam in shapes:
        rows.append([str(lam)] + [str(table.value(lam, mu)) for mu in shapes])
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        cells = [row[0].ljust(widths[0])]
        cells += [row[i].rjust(widths[i]) for i in range(1, len(row))]
        print("  ".join(cells).rstrip())
    return 0


def _cmd_selftest(args):
    from .selftest import run_selftest

    ok = run_selftest(args.max_degree)
    return 0 if ok else 5


def build_parser():
    parser = _Parser(prog="symf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    q = sub.add_parser("eval", help="evaluate an expression")
    q.add_argument("expr", help="expression such as 'scalar(h2[h2], h2*h2)'")
    q.add_argument("--basis", choices=("p", "h", "e", "m", "s"), default="s",
                   help="output basis for symmetric function results")
    q.add_argument("--json", action="store_true", help="print a JSON object")
    q.set_defaults(handler=_cmd_eval)

    q = sub.add_parser("inv", help="invariant character of a classical family")
    q.add_argument("--family", required=True,
                   choices=("sl", "sp", "perm", "gl-adjoint"))
    q.add_argument("--n", type=int, required=True,
                   help="group parameter; sp acts through Sp(2n)")
    q.add_argument("--r", type=int, required=True, help="degree")
    q.add_argument("--functor", default=None,
                   help="apply the family to this functor character first")
    q.add_argument("--basis", choices=("p", "h", "e", "m", "s"), default="s")
    q.set_defaults(handler=_cmd_inv)

    q = sub.add_parser("hilbert",
                       help="dimension of the degree r invariants of a functor")
    q.add_argument("--family", required=True,
                   choices=("sl", "sp", "perm", "gl-adjoint"))
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--functor", required=True)
    q.add_argument("--r", type=int, required=True)
    q.set_defaults(handler=_cmd_hilbert)

    q = sub.add_parser("deals", help="count m-card deals to n players")
    q.add_argument("--m", type=int, required=True, help="cards per player")
    q.add_argument("--n", type=int, required=True, help="players")
    q.add_argument("--cycle-index", action="store_true",
                   help="print the deal cycle index instead of the count")
    q.set_defaults(handler=_cmd_deals)

    q = sub.add_parser("regular", help="count k-regular multigraphs on n nodes")
    q.add_argument("--n", type=int, required=True, help="nodes")
    q.add_argument("--k", type=int, required=True, help="degree of every node")
    q.add_argument("--cycle-index", action="store_true",
                   help="print the configuration cycle index instead")
    q.set_defaults(handler=_cmd_regular)

    q = sub.add_parser("table", help="symmetric group character table")
    q.add_argument("--r", type=int, required=True, help="degree of the group")
    q.set_defaults(handler=_cmd_table)

    q = sub.add_parser("selftest", help="run the internal consistency suites")
    q.add_argument("--max-degree", type=int, default=8,
                   help="scale the suite bounds down to this total degree")
    q.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("symf: %s" % exc, file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except ValueError as exc:
        # out of range argument values (m=0 players, n=0 groups, ...)
        print("symf: %s" % exc, file=sys.stderr)
        return 1
    except ExprError as exc:
        print("symf: %s" % exc, file=sys.stderr)
        return 2
    except (DegreeError, TruncationError) as exc:
        print("symf: %s" % exc, file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print("symf: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
