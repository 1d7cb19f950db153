"""Plot the u(x) tables written by `fracbessel eval`.

    python docs/plot_solution.py out/            # every u_root*_branch*.csv
    python docs/plot_solution.py out/u_root2_branch1.csv -o u.png
"""

import argparse
import csv
import pathlib

import matplotlib.pyplot as plt


def read(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    return [float(r["x"]) for r in rows], [float(r["u"]) for r in rows]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("inputs", nargs="+", type=pathlib.Path)
    ap.add_argument("-o", "--output", type=pathlib.Path)
    args = ap.parse_args()

    files = []
    for p in args.inputs:
        files.extend(sorted(p.glob("u_root*_branch*.csv")) if p.is_dir() else [p])
    if not files:
        ap.error("no u_root*_branch*.csv files found")

    fig, ax = plt.subplots()
    for f in files:
        x, u = read(f)
        ax.plot(x, u, label=f.stem.removeprefix("u_"))
    ax.set_xlabel("x")
    ax.set_ylabel("u(x)")
    ax.axhline(0.0, color="0.8", lw=0.8)
    ax.legend()
    if args.output:
        fig.savefig(args.output, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
