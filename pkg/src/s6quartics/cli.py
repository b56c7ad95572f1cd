import argparse
import sys

from . import exactmath as em
from . import pipeline


def main(argv=None):
    ap = argparse.ArgumentParser(prog="verify", description="Run the exact verification checks.")
    ap.add_argument("--checks", help="comma separated check names (default: all)")
    ap.add_argument("--field", type=int, default=em.DEFAULT_ORDER, help="cyclotomic order N of Q(zeta_N)")
    ap.add_argument("--rng-seed", type=int, default=0)
    ap.add_argument("--report", help="write the JSON report here")
    ap.add_argument("--list", action="store_true", help="list the registered checks and exit")
    ap.add_argument("--timings", action="store_true", help="record wall time per check")
    args = ap.parse_args(argv)

    if args.list:
        for name in pipeline.order_checks():
            spec = pipeline.REGISTRY[name]
            print("%-24s %s" % (name, spec.claim))
        return 0
    selection = None
    if args.checks:
        selection = [s.strip() for s in args.checks.split(",") if s.strip()]
    try:
        pipeline.order_checks(selection)
    except pipeline.UnknownCheck as e:
        print("unknown check: %s" % e.args[0], file=sys.stderr)
        return 2

    log = lambda r: print("%-8s %s" % (r.status.upper(), r.name), file=sys.stderr, flush=True)
    reports = pipeline.run(selection, args.field, args.rng_seed, args.timings, log=log)
    text = pipeline.dumps(reports, args.field, args.rng_seed)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.status == "pass" for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
