"""Command-line front end: ``semiconj <command> ...`` or ``python -m semiconj``."""
from __future__ import annotations

import argparse
import json
import sys

from . import conjugacy as conj
from . import constructors as cons
from .core import Semigroup, basic_predicates, load_table, parse_table, serialize
from .enumeration import DEDUPE_MODES, EnumConstraints, enumerate_semigroups, table1
from .epigroup import monogenic_all, variety_membership
from .errors import SemigroupError
from .green import green, idempotents, regularity
from .pinj import c_oracle, cc_type, decompose, parse_injection, permutation_witness
from . import symbolic as sym


class _Usage(Exception):
    pass


def _load(args) -> Semigroup:
    if args.file and args.fixture:
        raise _Usage("give either --file or --fixture, not both")
    if args.fixture:
        try:
            return cons.fixture(args.fixture)
        except KeyError as exc:
            raise _Usage(exc.args[0]) from None
    if args.file == "-":
        return parse_table(sys.stdin.read())
    if args.file:
        return load_table(args.file)
    raise _Usage("an input is required: --file PATH or --fixture ID")


def _source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", help="table file (text or JSON); '-' reads stdin")
    p.add_argument("--fixture", help=f"named table: {', '.join(cons.FIXTURE_IDS)}")


def _opt(x) -> str:
    return "-" if x is None else str(x)


# Commands ---------------------------------------------------------------------

def cmd_validate(args):
    S = _load(args)
    pred = basic_predicates(S)
    data = {"n": S.n, "zero": S.zero, "identity": S.identity, **vars(pred)}
    text = [f"ok n={S.n} zero={_opt(S.zero)} identity={_opt(S.identity)}"]
    text += [f"{k}: {str(v).lower()}" for k, v in vars(pred).items()]
    return data, text


def cmd_green(args):
    S = _load(args)
    g = green(S)
    reg = regularity(S)
    names = ("L", "R", "H", "D", "J")
    data = {k: getattr(g, k).to_json() for k in names}
    data["idempotents"] = idempotents(S)
    data["regular"] = reg.is_regular
    text = [f"{k}: {getattr(g, k)}" for k in names]
    text.append("idempotents: " + " ".join(map(str, data["idempotents"])))
    text.append(f"regular: {str(reg.is_regular).lower()}")
    return data, text


def cmd_conjugacy(args):
    S = _load(args)
    rep = conj.conjugacy_report(S)
    full = rep.to_json()
    if args.relation == "all":
        order = ("p", "p_star", "o", "c", "tr", "so", "sc")
        text = [f"{k}: {getattr(rep, k)}" for k in order]
        text.append(f"p_transitive: {str(rep.p.is_transitive).lower()}")
        text.append(f"inclusion_diagram_ok: {str(rep.inclusion_diagram_ok).lower()}")
        return full, text
    if args.relation == "tr" and args.method == "definitional":
        part = conj.tr_conjugacy(S, "definitional")
        return {"tr": part.to_json()}, [str(part)]
    val = getattr(rep, args.relation)
    return {args.relation: val.to_json()}, [str(val)]


def cmd_epigroup(args):
    S = _load(args)
    prof = monogenic_all(S)
    var = variety_membership(S)
    rows = [vars(m) for m in prof]
    data = {"elements": rows, "max_index": var.max_index, "in_E2": var.in_E_2,
            "in_W": var.in_W, "in_V": var.in_V}
    text = ["a index period omega pinv double_pinv"]
    text += [f"{a} {m.index} {m.period} {m.omega} {m.pinv} {m.double_pinv}" for a, m in enumerate(prof)]
    text.append(f"max_index: {var.max_index}")
    text.append(f"in_W: {str(var.in_W).lower()} in_V: {str(var.in_V).lower()}")
    return data, text


def _parse_sandwich(text: str):
    rows = []
    for r in text.split(";"):
        rows.append(tuple(cons.ZERO if tok in ("z", "-") else int(tok) for tok in r.split()))
    return tuple(rows)


def cmd_construct(args):
    k = args.kind
    if k in ("rees", "rees0"):
        if args.sandwich is None:
            raise _Usage("rees constructions need --sandwich 'row; row; ...'")
        P = _parse_sandwich(args.sandwich)
        spec = cons.ReesSpec(cons.cyclic_group(args.group), len(P[0]), len(P), P)
        S = cons.rees(spec) if k == "rees" else cons.rees_zero(spec)
    elif k == "rectangular":
        S = cons.rectangular_band(args.size, args.size2 or args.size)
    else:
        builders = {
            "null": cons.null_semigroup, "left-zero": cons.left_zero, "cyclic": cons.cyclic_group,
            "chain": cons.chain_semilattice, "antichain": cons.antichain_with_0_1,
            "symmetric": cons.symmetric_group,
        }
        S = builders[k](args.size)
    return {"n": S.n, "table": [list(r) for r in S.rows]}, serialize(S).splitlines()


def cmd_variant(args):
    S = _load(args)
    if not 0 <= args.at < S.n:
        raise SemigroupError(f"sandwich element {args.at} outside 0..{S.n - 1}")
    V = cons.variant(S, args.at)
    return {"n": V.n, "table": [list(r) for r in V.rows]}, serialize(V).splitlines()


def _constraints(args, order: int) -> EnumConstraints:
    return EnumConstraints(order, require_monoid=args.monoid, require_zero=args.zero or args.zero_divisors,
                           require_zero_divisors=args.zero_divisors, dedupe=args.dedupe)


def cmd_enumerate(args):
    res = enumerate_semigroups(_constraints(args, args.order), allow_long=args.long)
    data = {"order": args.order, "dedupe": args.dedupe, "count": res.count}
    text = [f"count: {res.count}"]
    if not args.count_only:
        data["tables"] = [[list(r) for r in S.rows] for S in res.semigroups()]
        for S in res.semigroups():
            text.append("")
            text.extend(serialize(S).splitlines())
    return data, text


def cmd_table1(args):
    modes = DEDUPE_MODES[1:] if args.dedupe == "both" else (args.dedupe,)
    data, text = [], ["n count c_identity c_universal dedupe"]
    for mode in modes:
        for row in table1(args.max, dedupe=mode, allow_long=args.long):
            data.append({"n": row.n, "count": row.count, "c_identity": row.c_identity,
                         "c_universal": row.c_universal_nonzero, "dedupe": mode})
            text.append(f"{row.n} {row.count} {row.c_identity} {row.c_universal_nonzero} {mode}")
    return {"rows": data}, text


def cmd_suite(args):
    S = _load(args)
    rep = conj.theorem_suite(S)
    text = [f"{c.status:4} {c.name}" + (f"  {c.detail}" if c.detail else "") for c in rep.checks]
    text.append(f"failures: {len(rep.failures)}")
    return rep.to_json(), text, (0 if rep.ok else 1)


def cmd_pinj(args):
    fs = [parse_injection(s) for s in args.maps]
    if args.action == "decompose":
        if len(fs) != 1:
            raise _Usage("decompose takes one map")
        f = fs[0]
        pieces = [str(p) for p in decompose(f)]
        return ({"pieces": pieces, "type": str(cc_type(f))},
                [" ".join(pieces) if pieces else "0", str(cc_type(f))])
    if len(fs) != 2:
        raise _Usage(f"{args.action} takes two maps")
    a, b = fs
    same_type = cc_type(a) == cc_type(b)
    wit = permutation_witness(a, b)
    data = {"c": c_oracle(a, b), "same_cc_type": same_type,
            "witness": None if wit is None else str(wit)}
    text = [f"c: {str(data['c']).lower()}", f"same_cc_type: {str(same_type).lower()}",
            f"witness: {_opt(data['witness'])}"]
    return data, text


def cmd_symbolic(args):
    ts = [sym.parse_type(s) for s in args.types]
    if args.action in ("kappa", "epi", "dom"):
        if len(ts) != 1:
            raise _Usage(f"{args.action} takes one type")
        t = ts[0]
        if args.action == "kappa":
            data = {"kappa": str(sym.kappa(t)), "mu": sym.mu(t)}
        elif args.action == "epi":
            data = {"epi": sym.is_epi_element(t)}
        else:
            data = {"dom": str(sym.dom_cardinality(t))}
        return data, [f"{k}: {str(v).lower()}" for k, v in data.items()]
    if len(ts) != 2:
        raise _Usage(f"{args.action} takes two types")
    t1, t2 = ts
    if args.action == "c":
        data = {"c": sym.c_conjugate(t1, t2)}
    elif args.action == "gamma":
        data = vars(sym.gamma_relations(t1, t2))
    elif args.action == "tr":
        data = {"tr": sym.tr_conjugate(t1, t2)}
    else:
        data = {"j": sym.i_j_related(t1, t2)}
    return data, [f"{k}: {str(v).lower()}" for k, v in data.items()]


# Parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semiconj", description="Conjugacy relations on finite semigroups.")
    ap.add_argument("--json", action="store_true", help="structured output")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, hlp in (
        ("validate", cmd_validate, "check associativity and basic predicates"),
        ("green", cmd_green, "Green's relations"),
        ("epigroup", cmd_epigroup, "index, period and pseudo-inverses"),
        ("suite", cmd_suite, "run every structural check"),
    ):
        p = sub.add_parser(name, help=hlp)
        _source(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("conjugacy", help="conjugacy partitions")
    _source(p)
    p.add_argument("--relation", default="all", choices=("all", "p", "p_star", "o", "c", "tr", "so", "sc"))
    p.add_argument("--method", default="via_pp", choices=("via_pp", "definitional"))
    p.set_defaults(func=cmd_conjugacy)

    p = sub.add_parser("construct", help="build a standard semigroup")
    p.add_argument("kind", choices=("null", "left-zero", "rectangular", "cyclic", "chain", "antichain",
                                    "symmetric", "rees", "rees0"))
    p.add_argument("--size", type=int, default=2)
    p.add_argument("--size2", type=int)
    p.add_argument("--group", type=int, default=1, help="order of the cyclic sandwich group")
    p.add_argument("--sandwich", help="rows separated by ';', 'z' for a zero entry")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("variant", help="the variant x.y = x a y")
    _source(p)
    p.add_argument("--at", type=int, required=True)
    p.set_defaults(func=cmd_variant)

    for name, fn, hlp in (("enumerate", cmd_enumerate, "all semigroups of one order"),
                          ("table1", cmd_table1, "c-conjugacy census of monoids with zero divisors")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--long", action="store_true", help="allow order 6")
        p.set_defaults(func=fn)
        if name == "enumerate":
            p.add_argument("--order", type=int, required=True)
            p.add_argument("--monoid", action="store_true")
            p.add_argument("--zero", action="store_true")
            p.add_argument("--zero-divisors", action="store_true")
            p.add_argument("--dedupe", default="equivalence", choices=DEDUPE_MODES)
            p.add_argument("--count-only", action="store_true")
        else:
            p.add_argument("--max", type=int, default=5)
            p.add_argument("--dedupe", default="both", choices=("both", "iso", "equivalence"))

    p = sub.add_parser("pinj", help="partial injections 'n; x0 x1 ...' with '-' for undefined")
    p.add_argument("action", choices=("decompose", "compare"))
    p.add_argument("maps", nargs="+")
    p.set_defaults(func=cmd_pinj)

    p = sub.add_parser("symbolic", help="cycle-chain-ray types")
    p.add_argument("action", choices=("c", "gamma", "tr", "j", "kappa", "epi", "dom"))
    p.add_argument("types", nargs="+")
    p.set_defaults(func=cmd_symbolic)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        res = args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except (SemigroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    data, text, code = res if len(res) == 3 else (*res, 0)
    if args.json:
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print("\n".join(text), file=out)
    return code


def main() -> None:
    sys.exit(run())
