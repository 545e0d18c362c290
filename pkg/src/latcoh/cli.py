"""Command line: latcoh {cohomology,build,dimvec,catalog-list,verify}.

Exit codes: 0 clean, 1 formula/oracle mismatch, 2 usage or label error,
3 construction failure.
"""

import argparse
import json
import os
import sys

from . import catalog as cat
from . import formulas as fm
from . import glattice as gl
from . import globalize as glb
from . import graphrep as gr
from . import suites

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUILD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text):
    """"-2..3" -> (-2, 3)."""
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            n = int(text)
            return n, n
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError("bad range %r, expected a..b" % text) from None
    if lo > hi:
        raise UsageError("empty range %r" % text)
    return lo, hi


def seed_from(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("LATCOH_SEED")
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise UsageError("LATCOH_SEED must be an integer") from None


def show_group(invs, split=False):
    if not split:
        return str(list(invs))
    parts = [gl.primary_part(invs, p) for p in (2, 3)]
    return "·".join(str(p) for p in parts)


def cmd_cohomology(args, out):
    lo, hi = parse_range(args.range)
    label = cat.parse_label(args.label)
    seed = seed_from(args)
    L = cat.build(label, seed) if args.engine != "formula" else None
    rows = []
    mismatch = False
    for n in range(lo, hi + 1):
        row = {"degree": n}
        if L is not None:
            row["oracle"] = gl.tate(L, n)
        if args.engine != "oracle":
            fv = fm.formula_tate(label, n, args.convention)
            row["formula"] = fv.invariants
            if fv.ambiguous:
                row["ambiguous"] = True
        if args.engine == "both":
            ok = row["oracle"] == row["formula"]
            row["status"] = "match" if ok else "mismatch"
            mismatch = mismatch or not ok
        rows.append(row)
    if args.format == "json":
        out.write(json.dumps({"label": str(label), "rows": rows}) + "\n")
    else:
        for row in rows:
            cells = ["n=%d" % row["degree"]]
            for key in ("oracle", "formula"):
                if key in row:
                    cells.append("%s %s" % (key, show_group(row[key], args.split_primary)))
            if "status" in row:
                cells.append(row["status"])
            if row.get("ambiguous"):
                cells.append("(ambiguous cell)")
            out.write("  ".join(cells) + "\n")
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_build(args, out):
    L = cat.build(args.label, seed_from(args))
    obj = L.to_json()
    obj["rational_type"] = list(gl.rational_type(L))
    out.write(json.dumps(obj) + "\n")
    return EXIT_OK


def cmd_dimvec(args, out):
    L = cat.build(args.label, seed_from(args))
    out.write(str(gr.recover_dimvector(L)) + "\n")
    return EXIT_OK


def cmd_catalog_list(args, out):
    for label in cat.catalog_labels(args.max_shift):
        out.write(label + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    seed = seed_from(args)
    if args.max_shift < 0 or args.max_tube < 1:
        raise UsageError("--max-shift must be >= 0 and --max-tube >= 1")
    checks = {
        "check_principal": lambda: suites.check_principal(
            shifts=range(-min(2, args.max_shift), args.max_shift + 1)),
        "check_tubes": lambda: suites.check_tubes(max_tube=args.max_tube, seed=seed),
        "check_global": lambda: suites.check_global(seed=seed),
        "check_duality": lambda: suites.check_duality(max_shift=min(2, args.max_shift)),
        "check_oracle_consistency": lambda: suites.check_oracle_consistency(
            max_shift=min(2, args.max_shift)),
    }
    results = []
    for fn in suites.SUITES[args.suite]:
        try:
            res = checks.get(fn.__name__, fn)()
        except Exception as exc:  # a broken case is reported, the suite goes on
            res = suites.CheckResult(fn.__name__, False, "error: %s" % exc)
        out.write(res.line() + "\n")
        out.flush()
        results.append(res)
    if args.out:
        with open(args.out, "w") as fh:
            for res in results:
                for r in res.records:
                    obj = r.to_json()
                    obj["check"] = res.name
                    fh.write(json.dumps(obj) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def make_parser():
    p = argparse.ArgumentParser(prog="latcoh", description="Tate cohomology of A4-lattices")
    sub = p.add_subparsers(dest="command", required=True)

    def seeded(sp):
        sp.add_argument("--seed", type=int, default=None,
                        help="search seed (default: LATCOH_SEED or 0)")
        return sp

    c = seeded(sub.add_parser("cohomology", help="Tate groups of a labelled lattice"))
    c.add_argument("label")
    c.add_argument("--range", default="-4..4")
    c.add_argument("--engine", choices=("oracle", "formula", "both"), default="oracle")
    c.add_argument("--format", choices=("json", "table"), default="table")
    c.add_argument("--convention", choices=fm.CONVENTIONS, default="printed",
                   help="table indexing: printed |n+r| or signed r-n")
    c.add_argument("--split-primary", action="store_true",
                   help="print the 2- and 3-parts separately")
    c.set_defaults(func=cmd_cohomology)

    b = seeded(sub.add_parser("build", help="emit a lattice as JSON"))
    b.add_argument("label")
    b.set_defaults(func=cmd_build)

    d = seeded(sub.add_parser("dimvec", help="dimension vector of an A+-lattice"))
    d.add_argument("label")
    d.set_defaults(func=cmd_dimvec)

    cl = sub.add_parser("catalog-list", help="list buildable labels")
    cl.add_argument("--max-shift", type=int, default=2)
    cl.set_defaults(func=cmd_catalog_list)

    v = seeded(sub.add_parser("verify", help="run an acceptance suite"))
    v.add_argument("--suite", choices=tuple(suites.SUITES), default="all")
    v.add_argument("--max-shift", type=int, default=3)
    v.add_argument("--max-tube", type=int, default=3)
    v.add_argument("--out", default=None, help="write the conformance records (JSON lines)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = make_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "--range -2..2" would otherwise read -2..2 as an option
    for i in range(len(argv) - 1):
        if argv[i] == "--range":
            argv[i:i + 2] = ["--range=" + argv[i + 1], ""]
    argv = [a for a in argv if a != ""]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, cat.LabelError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    except (cat.BuildError, glb.GluingError, gl.LatticeError, LookupError) as exc:
        sys.stderr.write("build failed: %s\n" % exc)
        return EXIT_BUILD


if __name__ == "__main__":
    sys.exit(main())
