"""Render the CSVs written by figure1/figure2 (or by `pisurf`) as 3D plots.

    build/demos/figure1 out && build/demos/figure2 out
    python3 demos/plot_figures.py out
"""

import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def load(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    return {k: np.array([float(r[k]) for r in rows]) for k in ("t", "u", "v", "x", "y", "z")}


def surface(ax, data, n=50, color="tab:orange"):
    shape = (n, len(data["x"]) // n)
    ax.plot_surface(*(data[k].reshape(shape) for k in "xyz"), color=color, alpha=0.35,
                    linewidth=0)


def curve(ax, data, color, label):
    ax.plot(data["x"], data["y"], data["z"], color=color, linewidth=2, label=label)


def main(directory):
    d = Path(directory)

    fig = plt.figure(figsize=(6, 5))
    ax = fig.add_subplot(projection="3d")
    surface(ax, load(d / "figure1_surface.csv"))
    curve(ax, load(d / "figure1_loxodrome.csv"), "tab:green", "loxodrome")
    curve(ax, load(d / "figure1_meridian.csv"), "tab:blue", "meridian")
    ax.legend()
    fig.savefig(d / "figure1.png", dpi=150, bbox_inches="tight")

    fig = plt.figure(figsize=(6, 5))
    ax = fig.add_subplot(projection="3d")
    surface(ax, load(d / "figure2_surface.csv"), color="tab:gray")
    curve(ax, load(d / "figure2_geodesic.csv"), "tab:red", "geodesic")
    curve(ax, load(d / "figure2_meridian.csv"), "tab:blue", "meridian")
    curve(ax, load(d / "figure2_parallel.csv"), "tab:purple", "parallel")
    ax.legend()
    fig.savefig(d / "figure2.png", dpi=150, bbox_inches="tight")
    print(f"wrote {d / 'figure1.png'} and {d / 'figure2.png'}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
