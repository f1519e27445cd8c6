"""Scan diagonal offsets of the signed series against facet counts.

Prints the offset table, the pinned offset, and the end-to-end chain of
equal quantities at every n: series diagonal, signed homology-facet count,
alternating cube sum, its closed form, the direct product coefficient, and
minus the reduced Euler characteristic.
"""

import argparse

from gammashell import alignment_check


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--deltas", type=int, nargs="+", default=[0, 1, 2, 3])
    args = ap.parse_args()

    report = alignment_check(n_max=args.n_max, deltas=tuple(args.deltas))

    ns = sorted(report.alternating_counts)
    scan_ns = [n for n in ns if n >= 2]
    print("offset scan (series diagonal at (n+d, n+d, n+d)):")
    print("  n:        " + "  ".join(f"{n:>8}" for n in scan_ns))
    print("  counts:   " + "  ".join(
        f"{report.alternating_counts[n]:>8}" for n in scan_ns
    ))
    for d in report.deltas:
        row = "  ".join(f"{report.diagonal_by_delta[d][n]:>8}" for n in scan_ns)
        mark = "<- match" if report.matches[d] else ""
        print(f"  d={d}:      {row}  {mark}")
    print(f"pinned offset: {report.pinned_delta}")

    if report.end_to_end:
        print("end-to-end chain:")
        for n in sorted(report.end_to_end):
            vals = report.end_to_end[n]
            agree = len(set(vals.values())) == 1
            value = next(iter(vals.values()))
            print(f"  n={n}: value {value}  {'ok' if agree else f'MISMATCH {vals}'}")
    print(f"end-to-end: {'ok' if report.end_to_end_ok else 'FAILED'}")


if __name__ == "__main__":
    main()
