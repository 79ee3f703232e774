"""Sweep the exact-support recovery rate of simultaneous OMP.

Two sweep axes over the matrix pinned by --preset (default recover_mwc,
a 40 x 195 random sign matrix):

  --axis k_rows   rate vs number of jointly active rows (noiseless)
  --axis snr      rate vs per-sample SNR in dB at fixed --k-rows

Writes a CSV (axis value, rate, early-stop fraction) to --out or stdout.

Usage:
  python3 scripts/recovery_curve.py --axis k_rows --values 1,4,8,12,16,20,24
  python3 scripts/recovery_curve.py --axis snr --values 30,20,10,5,0,-5 --k-rows 12
"""

import argparse
import contextlib
import sys

from mwclab.distributions import NonzeroDistribution
from mwclab.mmv import recovery_experiment
from mwclab.presets import load_preset
from mwclab.reports import write_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--preset", default="recover_mwc", help="preset naming the sign matrix")
    ap.add_argument("--axis", choices=("k_rows", "snr"), default="k_rows")
    ap.add_argument(
        "--values",
        default="1,2,4,8,12,16,20,24",
        help="comma-separated sweep values (ints for k_rows, floats for snr)",
    )
    ap.add_argument("--k-rows", type=int, default=12, help="active rows for the snr axis")
    ap.add_argument("--r", type=int, default=None, help="snapshots (default: preset value)")
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--dist", default="complex_normal")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="CSV path (default stdout)")
    args = ap.parse_args()

    preset = load_preset(args.preset)
    family = preset.family_spec()
    r = args.r if args.r is not None else preset.get_int("r")
    dist = NonzeroDistribution(args.dist.replace("-", "_"))

    rows = []
    for token in args.values.split(","):
        if args.axis == "k_rows":
            k_rows, snr_db = int(token), None
        else:
            k_rows, snr_db = args.k_rows, float(token)
        rep = recovery_experiment(
            family,
            k_rows=k_rows,
            r=r,
            trials=args.trials,
            dist=dist,
            snr_db=snr_db,
            seed=args.seed,
        )
        rows.append(
            {
                args.axis: k_rows if args.axis == "k_rows" else snr_db,
                "rate": rep.success_rate,
                "early_stop_fraction": rep.early_stops / rep.trials,
            }
        )
        print(f"  {args.axis}={token:>6s}  rate={rep.success_rate:.3f}", file=sys.stderr)

    fields = (args.axis, "rate", "early_stop_fraction")
    with contextlib.ExitStack() as stack:
        out = stack.enter_context(open(args.out, "w")) if args.out else sys.stdout
        write_csv(out, fields, rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
