"""Classifier verdicts against exact radius decisions, with a family-tag census."""

import argparse

from hermspec.enumeration import EnumerationScope, OrientationMode
from hermspec.verify import check_classifier_sample, run_cross_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--all-orientations", action="store_true", help="every orientation instead of one per sign vector")
    ap.add_argument("--sample", type=int, default=0, help="also check this many random C4-free graphs on 8-9 vertices")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", help="write the report here")
    args = ap.parse_args()

    mode = OrientationMode.ALL if args.all_orientations else OrientationMode.ONE_PER_SIGN_VECTOR
    report = run_cross_check(EnumerationScope(max_n=args.max_n, orientation_mode=mode), workers=args.workers)
    if args.sample:
        report.merge(check_classifier_sample(args.sample))
    for key, count in sorted(report.census.items(), key=lambda kv: -kv[1]):
        print(f"{count:8d}  {key}")
    print(report.summary, f"{report.elapsed_seconds:.1f}s")
    for r in report.failures[:20]:
        print("FAIL", r.instance, r.expected, r.observed)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json(indent=1))
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
