#!/usr/bin/env python3
"""Plot the |X(s)| = 1 curve from `dhcli curve` CSV output.

Usage:
    dhcli curve --window -6,7,-4,4 --step 0.01 --out curve.csv
    dhcli curve --window -5.05,-4.95,-0.05,0.05 --step 0.0005 --out zero.csv
    dhcli curve --window 5.95,6.05,-0.05,0.05 --step 0.0005 --out pole.csv
    python3 tools/plot_unit_curve.py curve.csv --zero-csv zero.csv --pole-csv pole.csv -o unit_curve.png

Panel (a) is the full window, (b) and (c) zoom on the zero s = -5 and the
pole s = 6. Background shading shows |X| > 1 (blue) and |X| < 1 (red).
"""

import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy.optimize import brentq
from scipy.special import loggamma


def log_abs_x(sigma, t):
    s = sigma + 1j * t
    return ((0.5 - s) * np.log(5 / np.pi) + loggamma(1 - s / 2) - loggamma((1 + s) / 2)).real


def read_components(path):
    comps = defaultdict(list)
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            comps[int(row["component_id"])].append((float(row["sigma"]), float(row["t"])))
    out = {}
    for k, v in comps.items():
        pts = np.array(v)
        if len(pts) > 2:
            seg = np.median(np.hypot(*np.diff(pts, axis=0).T))
            if np.hypot(*(pts[0] - pts[-1])) < 2 * seg:
                pts = np.vstack([pts, pts[:1]])
        out[k] = pts
    return out


def real_axis_points(lo, hi):
    """Real sigma with |X(sigma)| = 1, found between sign changes of log|X|."""
    grid = np.linspace(lo, hi, 4001)
    with np.errstate(all="ignore"):
        vals = log_abs_x(grid, 0.0)
    roots = []
    for a, b, fa, fb in zip(grid[:-1], grid[1:], vals[:-1], vals[1:]):
        if np.isfinite(fa) and np.isfinite(fb) and fa * fb < 0 and abs(fa - fb) < 5:
            roots.append(brentq(lambda x: log_abs_x(x, 0.0), a, b))
    return roots


def panel(ax, comps, window, title):
    s0, s1, t0, t1 = window
    ss, tt = np.meshgrid(np.linspace(s0, s1, 400), np.linspace(t0, t1, 400))
    with np.errstate(all="ignore"):
        field = np.sign(log_abs_x(ss, tt))
    ax.contourf(ss, tt, field, levels=[-2, 0, 2], colors=["#f4a6a6", "#a6c8f4"])
    for pts in comps.values():
        ax.plot(pts[:, 0], pts[:, 1], "k-", lw=0.8)
    if s0 <= 0.5 <= s1:
        ax.axvline(0.5, color="k", lw=0.8)
    roots = real_axis_points(s0, s1)
    ax.plot(roots, np.zeros(len(roots)), "o", color="gold", mec="k", ms=5, zorder=5)
    ax.set_xlim(s0, s1)
    ax.set_ylim(t0, t1)
    ax.set_xlabel(r"$\sigma$")
    ax.set_ylabel(r"$t$")
    ax.set_title(title)


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("csv", help="curve CSV with columns component_id,sigma,t")
    p.add_argument("--zero-csv", help="finer trace for panel (b); defaults to the main CSV")
    p.add_argument("--pole-csv", help="finer trace for panel (c); defaults to the main CSV")
    p.add_argument("-o", "--output", default="unit_curve.png")
    args = p.parse_args()

    comps = read_components(args.csv)
    fig, axes = plt.subplots(1, 3, figsize=(15, 5))
    panel(axes[0], comps, (-6, 7, -4, 4), "(a)")
    zero = read_components(args.zero_csv) if args.zero_csv else comps
    pole = read_components(args.pole_csv) if args.pole_csv else comps
    panel(axes[1], zero, (-5.05, -4.95, -0.05, 0.05), "(b) near s = -5")
    panel(axes[2], pole, (5.95, 6.05, -0.05, 0.05), "(c) near s = 6")
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)


if __name__ == "__main__":
    main()
