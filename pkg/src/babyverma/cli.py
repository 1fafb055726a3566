"""Command line front end.

Subcommands: check (one weight), campaign (family sweeps), dump
(inspection of structure constants, monomial orders, operator
matrices), selftest.  Exit codes: 0 for irreducible or a passing
campaign, 1 for reducible or a failing campaign, 2 for invalid input
or an undecidable case.

Any subcommand accepts --config FILE with key=value lines; the file
expands in place, so flags given after it still win.  --save-config
FILE writes the resolved options back in the same format.
"""

import argparse
import json
import sys
import time

from . import campaigns
from .chevalley import ChevalleyAlgebra, PChar, make_pchar
from .modules import (
    CapExceeded,
    build_baby_verma,
    build_parabolic_baby_verma,
    is_irreducible,
    verify_commutators,
    verify_frobenius,
)
from .pbw import fix_order
from .roots import RootSystem, root_label


def _parse_int_list(text):
    if text is None or text.strip() == "":
        return ()
    return tuple(int(x) for x in text.split(","))


def _parse_chi(text):
    if text is None or text.strip() == "":
        return None
    out = {}
    for part in text.split(","):
        k, _, v = part.partition("=")
        out[int(k)] = int(v)
    return out


def _parse_root(label, rank):
    """Inverse of root_label: a1+2a2 -> (1, 2, 0, ...)."""
    c = [0] * rank
    for term in label.split("+"):
        term = term.strip()
        head, _, idx = term.partition("a")
        if not idx:
            raise ValueError("bad root label %r" % label)
        c[int(idx) - 1] = int(head) if head else 1
    return tuple(c)


def _resolve_lambda(args, rank):
    lam = getattr(args, "lam", None)
    lam_rho = getattr(args, "lam_rho", None)
    if (lam is None) == (lam_rho is None):
        raise ValueError("give exactly one of --lambda and --lambda-rho")
    if lam is not None:
        out = _parse_int_list(lam)
    else:
        out = tuple(x - 1 for x in _parse_int_list(lam_rho))
    if len(out) != rank:
        raise ValueError("weight needs %d coordinates" % rank)
    return out


def _expand_config(argv):
    """Replace --config FILE with the option tokens stored in FILE."""
    while "--config" in argv:
        i = argv.index("--config")
        if i + 1 >= len(argv):
            raise ValueError("--config needs a file argument")
        tokens = []
        with open(argv[i + 1]) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("=")
                key = key.strip()
                value = value.strip()
                opt = "--" + key
                if value.lower() == "true":
                    tokens.append(opt)
                elif value.lower() == "false":
                    pass
                else:
                    tokens.extend([opt, value])
        argv = argv[:i] + tokens + argv[i + 2 :]
    return argv


def _save_config(args):
    path = args.save_config
    if not path:
        return
    skip = {"save_config", "config", "help", "func", "parser", "cmd", "sub"}
    lines = []
    for action in args.parser._actions:
        if not action.option_strings or action.dest in skip:
            continue
        value = getattr(args, action.dest, None)
        if value is None or value is False:
            continue
        key = action.option_strings[-1].lstrip("-")
        lines.append("%s=%s" % (key, "true" if value is True else value))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _algebra_from_args(args):
    rs = RootSystem(args.type, args.rank)
    return ChevalleyAlgebra(rs, sign_flip=getattr(args, "sign_flip", False))


def cmd_check(args):
    if not campaigns.is_prime(args.p):
        raise ValueError("p = %d is not prime" % args.p)
    alg = _algebra_from_args(args)
    rs = alg.rs
    I = _parse_int_list(args.I)
    lam = _resolve_lambda(args, rs.n)
    if args.type == "A" and (rs.n + 1) % args.p == 0:
        print(
            "warning: p divides rank+1, the trace form is degenerate here",
            file=sys.stderr,
        )
    t0 = time.monotonic()
    if I:
        chi = make_pchar(alg, args.p, I, _parse_chi(args.chi))
        mod = build_parabolic_baby_verma(alg, chi, lam, cap=args.cap)
    else:
        if args.chi:
            raise ValueError("--chi needs a nonempty --I")
        mod = build_baby_verma(alg, PChar(args.p, ()), lam, cap=args.cap)
    rep = is_irreducible(mod, cap=args.lines_cap)
    millis = int((time.monotonic() - t0) * 1000)
    print(
        "%s%d p=%d I=%s lambda=%s"
        % (
            args.type,
            args.rank,
            args.p,
            ",".join(str(i) for i in I) if I else "-",
            ",".join(str(x) for x in lam),
        )
    )
    print("dim %d" % mod.dim)
    for (wt, kap), count in sorted(rep.profile.items()):
        print(
            "block weight=%s component=%s kernel=%d"
            % (",".join(str(x) for x in wt), ",".join(str(x) for x in kap), count)
        )
    print("verdict %s" % ("irreducible" if rep.irreducible else "reducible"))
    print("millis %d" % millis)
    if args.json:
        out = rep.to_dict()
        out["type"] = args.type
        out["rank"] = args.rank
        out["I"] = list(I)
        out["millis"] = millis
        campaigns.write_json(out, args.json)
    return 0 if rep.irreducible else 1


def cmd_campaign(args):
    if args.sub == "main-theorem":
        report = campaigns.verify_main_theorem(
            args.type,
            args.rank,
            args.p,
            _parse_int_list(args.I),
            cap=args.cap,
            lines_cap=args.lines_cap,
            workers=args.workers,
        )
        for row in report["rows"]:
            print(
                "lambda=%s dim=%s %s (%d ms)"
                % (row["lambda"], row["dim"], row["verdict"], row["millis"])
            )
        if report["vacuous"]:
            print("sweep empty: no p-regular weights in the first alcove (vacuous pass)")
        print(
            "main-theorem %s%d p=%d I=%s: %s"
            % (
                args.type,
                args.rank,
                args.p,
                args.I,
                "PASS" if report["passed"] else "FAIL",
            )
        )
        if args.csv:
            campaigns.write_csv(report["rows"], args.csv)
    elif args.sub in ("subregular-A", "subregular-B"):
        fn = (
            campaigns.subregular_block_a
            if args.sub == "subregular-A"
            else campaigns.subregular_block_b
        )
        report = fn(
            args.p,
            _parse_int_list(args.r),
            cap=args.cap,
            irr_cap=args.irr_cap,
            lines_cap=args.lines_cap,
            build=not args.no_build,
        )
        for row in report["rows"]:
            if row.get("skipped"):
                print("i=%d lambda+rho=%s skipped" % (row["i"], row["lambda_plus_rho"]))
            else:
                print(
                    "i=%d dim=%s expected=%d %s"
                    % (row["i"], row["dim"], row["expected_dim"], row["verdict"])
                )
        print("%s p=%d r=%s: %s" % (args.sub, args.p, args.r, "PASS" if report["passed"] else "FAIL"))
    else:
        report = campaigns.negative_controls()
        for row in report["rows"]:
            print(
                "%s expected=%s got=%s %s"
                % (row["case"], row["expected"], row["got"], "ok" if row["ok"] else "MISMATCH")
            )
        print("negative-controls: %s" % ("PASS" if report["passed"] else "FAIL"))
    if args.json:
        campaigns.write_json(report, args.json)
    return 0 if report["passed"] else 1


def cmd_dump(args):
    alg = _algebra_from_args(args)
    rs = alg.rs
    if args.sub == "brackets":
        for line in alg.bracket_lines():
            print(line)
        return 0
    I = _parse_int_list(args.I)
    if args.sub == "order":
        for g in fix_order(rs, I):
            print(root_label(g))
        return 0
    if not campaigns.is_prime(args.p):
        raise ValueError("p = %d is not prime" % args.p)
    lam = _resolve_lambda(args, rs.n)
    if I:
        chi = make_pchar(alg, args.p, I, _parse_chi(args.chi))
        mod = build_parabolic_baby_verma(alg, chi, lam, cap=args.cap)
    else:
        mod = build_baby_verma(alg, PChar(args.p, ()), lam, cap=args.cap)
    gen = args.gen
    if gen.startswith("h"):
        key = ("h", int(gen[1:]))
    elif ":" in gen:
        kind, _, label = gen.partition(":")
        key = (kind, _parse_root(label, rs.n))
    else:
        kind, idx = gen[0], int(gen[1:])
        key = (kind, rs.simple(idx))
    if key[0] not in ("x", "y", "h"):
        raise ValueError("generator must be one of x/y/h")
    mat = mod.op_matrix(key)
    triples = []
    for col, column in mat.items():
        for row, value in column.items():
            triples.append((row, col, value))
    for row, col, value in sorted(triples):
        print("%d %d %d" % (row, col, value))
    return 0


def cmd_selftest(args):
    t0 = time.monotonic()
    checks = []

    def step(name, fn):
        ok = bool(fn())
        checks.append((name, ok))
        print("%-40s %s" % (name, "ok" if ok else "FAIL"))

    a1 = ChevalleyAlgebra(RootSystem("A", 1))
    a2 = ChevalleyAlgebra(RootSystem("A", 2))
    b2 = ChevalleyAlgebra(RootSystem("B", 2))
    step("jacobi A2", a2.verify_jacobi)
    step("jacobi B2", b2.verify_jacobi)
    step("restricted identities B2 p=5", lambda: b2.verify_restricted(5))

    def rank_one():
        for lam in range(5):
            mod = build_baby_verma(a1, PChar(5, [1]), (lam,))
            if not is_irreducible(mod).irreducible:
                return False
            mod = build_baby_verma(a1, PChar(5, []), (lam,))
            if is_irreducible(mod).irreducible != (lam == 4):
                return False
        return True

    step("rank-one verdicts p=5", rank_one)

    def parabolic():
        chi = make_pchar(a2, 5, [1])
        mod = build_parabolic_baby_verma(a2, chi, (0, 1))
        return (
            mod.dim == 50
            and is_irreducible(mod).irreducible
            and verify_commutators(mod)
            and verify_frobenius(mod)
        )

    step("parabolic module A2 p=5", parabolic)

    def orders():
        fix_order(RootSystem("B", 3), (2, 3))
        fix_order(RootSystem("C", 3), (1,))
        fix_order(RootSystem("D", 4), (2, 3, 4))
        fix_order(RootSystem("D", 4), (1, 2, 3))
        return True

    step("monomial orders B3/C3/D4", orders)
    passed = all(ok for _, ok in checks)
    print("selftest: %s (%.1fs)" % ("PASS" if passed else "FAIL", time.monotonic() - t0))
    return 0 if passed else 1


def _add_common(sp):
    sp.add_argument("--config", help="key=value option file, expanded in place")
    sp.add_argument("--save-config", help="write resolved options to this file")


def _add_module_params(sp, need_p=True):
    sp.add_argument("--type", required=True, choices=["A", "B", "C", "D"])
    sp.add_argument("--rank", required=True, type=int)
    if need_p:
        sp.add_argument("--p", required=True, type=int)
    sp.add_argument("--I", default=None, help="comma separated simple indices, empty for none")
    sp.add_argument("--sign-flip", action="store_true", help="alternate structure constant signs")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="babyverma",
        description="exact induced modules for restricted Lie algebras in types A-D",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("check", help="build one induced module and decide irreducibility")
    _add_module_params(sp)
    sp.add_argument("--lambda", dest="lam", help="weight coordinates, comma separated")
    sp.add_argument("--lambda-rho", dest="lam_rho", help="weight plus rho coordinates")
    sp.add_argument("--chi", help="values on the Levi part, like 1=2,3=1")
    sp.add_argument("--cap", type=int, default=50000)
    sp.add_argument("--lines-cap", type=int, default=10000)
    sp.add_argument("--json", help="write the full report here")
    _add_common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("campaign", help="verify a whole family at once")
    csub = sp.add_subparsers(dest="sub", required=True)

    c = csub.add_parser("main-theorem", help="sweep all alcove-regular weights")
    _add_module_params(c)
    c.add_argument("--cap", type=int, default=50000)
    c.add_argument("--lines-cap", type=int, default=10000)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--csv", help="write rows as CSV")
    c.add_argument("--json", help="write the report as JSON")
    _add_common(c)
    c.set_defaults(func=cmd_campaign)

    for name in ("subregular-A", "subregular-B"):
        c = csub.add_parser(name, help="walk one subregular orbit block")
        c.add_argument("--p", required=True, type=int)
        c.add_argument("--r", required=True, help="alcove pairings of the base weight")
        c.add_argument("--cap", type=int, default=50000)
        c.add_argument("--irr-cap", type=int, default=4000)
        c.add_argument("--lines-cap", type=int, default=10000)
        c.add_argument("--no-build", action="store_true", help="check orbit closed forms only")
        c.add_argument("--json", help="write the report as JSON")
        _add_common(c)
        c.set_defaults(func=cmd_campaign)

    c = csub.add_parser("negative-controls", help="known reducible and irreducible cases")
    c.add_argument("--json", help="write the report as JSON")
    _add_common(c)
    c.set_defaults(func=cmd_campaign)

    sp = sub.add_parser("dump", help="inspect brackets, orders and operator matrices")
    dsub = sp.add_subparsers(dest="sub", required=True)

    d = dsub.add_parser("brackets", help="all structure constants, one bracket per line")
    _add_module_params(d, need_p=False)
    _add_common(d)
    d.set_defaults(func=cmd_dump)

    d = dsub.add_parser("order", help="the fixed monomial order for a shape")
    _add_module_params(d, need_p=False)
    _add_common(d)
    d.set_defaults(func=cmd_dump)

    d = dsub.add_parser("matrix", help="sparse matrix of one generator on a module")
    _add_module_params(d)
    d.add_argument("--lambda", dest="lam", help="weight coordinates, comma separated")
    d.add_argument("--lambda-rho", dest="lam_rho", help="weight plus rho coordinates")
    d.add_argument("--chi", help="values on the Levi part, like 1=2,3=1")
    d.add_argument("--cap", type=int, default=50000)
    d.add_argument("--gen", required=True, help="x1, y2, h1 or x:a1+a2")
    _add_common(d)
    d.set_defaults(func=cmd_dump)

    sp = sub.add_parser("selftest", help="run the built-in consistency battery")
    _add_common(sp)
    sp.set_defaults(func=cmd_selftest)

    return parser, sub


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        argv = _expand_config(list(argv))
    except (OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    parser, _ = build_parser()
    args = parser.parse_args(argv)
    # remember which subparser produced the namespace for --save-config
    args.parser = _find_subparser(parser, args)
    try:
        if getattr(args, "save_config", None):
            _save_config(args)
        return args.func(args)
    except (ValueError, CapExceeded) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def _find_subparser(parser, args):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            child = action.choices[args.cmd]
            for a2 in child._actions:
                if isinstance(a2, argparse._SubParsersAction):
                    return a2.choices[getattr(args, "sub")]
            return child
    return parser


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
