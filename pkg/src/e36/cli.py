"""Command-line entry point: run verification suites and print reports.

Each subcommand names a suite (or "all"), runs it with the knobs given
on the command line, prints the report to stdout and a timing line to
stderr, and exits 0 exactly when no check failed.  The cache directory
comes from --cache-dir when given, else from E36_CACHE_DIR.
"""

import argparse
import os
import sys

from .suites import (SUITE_NAMES, InvalidConfig, SuiteConfig, emit_report,
                     run_suite)


def _add_suite_flags(parser):
    parser.add_argument("--trunc", type=int, default=8, metavar="T",
                        help="degree truncation for graded slices"
                             " (default 8)")
    parser.add_argument("--pbw-deg", type=int, default=6, metavar="D",
                        help="PBW degree bound for per-key checks and"
                             " singular-vector scans (default 6)")
    parser.add_argument("--range", type=int, default=None, metavar="R",
                        dest="label_range",
                        help="override the per-suite window for labels,"
                             " bidegrees, and block indices")
    parser.add_argument("--format", choices=("json", "md"), default="json",
                        help="report rendering (default json)")
    parser.add_argument("--cache-dir", default=None, metavar="DIR",
                        help="cache unit results under DIR; falls back to"
                             " the E36_CACHE_DIR environment variable")
    parser.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for independent units"
                             " (default 1; results do not depend on it)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="e36",
        description="Exact verification suites for E(3,6) module theory.")
    sub = parser.add_subparsers(dest="suite", required=True, metavar="SUITE")
    for name in SUITE_NAMES + ("all",):
        blurb = ("run every suite in order" if name == "all"
                 else "run the %s suite" % name)
        _add_suite_flags(sub.add_parser(name, help=blurb))
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    cache_dir = args.cache_dir
    if cache_dir is None:
        cache_dir = os.environ.get("E36_CACHE_DIR") or None
    try:
        config = SuiteConfig(trunc=args.trunc, pbw_deg=args.pbw_deg,
                             label_range=args.label_range, fmt=args.format,
                             cache_dir=cache_dir, jobs=args.jobs)
    except InvalidConfig as exc:
        sys.stderr.write("e36: %s\n" % exc)
        return 2
    report = run_suite(args.suite, config)
    sys.stdout.write(emit_report(report))
    summary = report.summary()
    sys.stderr.write("%s: %d checks, %d fail, %d window-limited in %.1fs\n"
                     % (report.suite, summary["checks"], summary["fail"],
                        summary["window-limited"], report.seconds))
    return 1 if report.failed else 0
