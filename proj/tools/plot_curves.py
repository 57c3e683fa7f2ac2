#!/usr/bin/env python3
"""Plot FER / average-step curves from polar-sim CSV output.

Usage: plot_curves.py curves.csv [--steps] [--out plot.png]
"""
import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv_path")
    ap.add_argument("--steps", action="store_true", help="plot avg steps instead of FER")
    ap.add_argument("--out", default="curves.png")
    args = ap.parse_args()

    series = defaultdict(list)
    with open(args.csv_path) as fh:
        for row in csv.DictReader(fh):
            y = float(row["avg_steps" if args.steps else "fer"])
            series[row["decoder"]].append((float(row["ebn0_db"]), y))

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for name, pts in sorted(series.items()):
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=name)
    ax.set_xlabel("Eb/N0 [dB]")
    if args.steps:
        ax.set_ylabel("average decoding steps")
    else:
        ax.set_ylabel("FER")
        ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
