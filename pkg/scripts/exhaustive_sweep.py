"""Every orientation of every connected graph up to --max-n vertices: exact identities via the
compiled sweep, and optionally the floating-point trace and Frobenius checks."""

import argparse

from hermspec.verify import check_exhaustive, check_numeric_spectra


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--numeric", action="store_true", help="also diagonalise every orientation")
    ap.add_argument("--json", help="write the report here")
    args = ap.parse_args()

    report = check_exhaustive(args.max_n, min_n=args.min_n)
    print(f"exact: {report.census['orientations']} orientations, {report.summary}, {report.elapsed_seconds:.1f}s")
    if args.numeric:
        numeric = check_numeric_spectra(args.max_n, min_n=args.min_n)
        print(f"numeric: {numeric.summary}, {numeric.elapsed_seconds:.1f}s")
        report.merge(numeric)
    for check, row in sorted(report.by_check().items()):
        print(f"  {check}: {row['total'] - row['failed']}/{row['total']}")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json(indent=1))
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
