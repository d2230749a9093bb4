"""Command line entry point: `qvirasoro verify --suite ...`."""

import argparse
import sys

from .config import SUITE_NAMES, ConfigError, SuiteConfig
from .runner import run


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qvirasoro",
        description="Exact verification of vertex operator and deformed Virasoro identities "
                    "on level-1 Fock modules.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run verification suites and print an NDJSON report")
    v.add_argument("--suite", default="all", choices=SUITE_NAMES)
    v.add_argument("--degree", type=int, default=4,
                   help="Heisenberg degree cap for Virasoro relation sources")
    v.add_argument("--sectors", type=int, default=2, help="sector window J")
    v.add_argument("--modes", type=int, default=3, help="mode and coefficient window M")
    v.add_argument("--order", type=int, default=16, help="structure series order N")
    v.add_argument("--guard", type=int, default=4, help="guard band G")
    v.add_argument("--product-degree", type=int, default=2,
                   help="source degree cap for two-variable relations")
    v.add_argument("--twisted-degree2", type=int, default=6,
                   help="doubled principal degree cap for twisted sources")
    v.add_argument("--pi-degree", type=int, default=2,
                   help="degree through which the involution is built")
    v.add_argument("--param-mode", default="symbolic", choices=("symbolic", "sampled"))
    v.add_argument("--seed", type=int, default=None, help="sample seed (sampled mode)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--output", default=None, help="report path (default: stdout)")
    v.add_argument("--timings", action="store_true",
                   help="include wall_time per check (breaks byte-identical reports)")
    return parser


def run_cli(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        cfg = SuiteConfig(
            suite=args.suite, degree=args.degree, sectors=args.sectors, modes=args.modes,
            order=args.order, guard=args.guard, product_degree=args.product_degree,
            twisted_degree2=args.twisted_degree2, pi_degree=args.pi_degree,
            param_mode=args.param_mode, seed=args.seed, jobs=args.jobs, output=args.output,
            timings=args.timings)
    except ConfigError as e:
        print(f"qvirasoro: error: {e}", file=sys.stderr)
        return 2
    code, _ = run(cfg)
    return code


def main():
    sys.exit(run_cli())
