#!/usr/bin/env python3
"""Regenerate all six figure CSVs into ./figures (or a given directory).

Plot with any tool, e.g.:
    python3 -c "import pandas, matplotlib.pyplot as plt; \
        d = pandas.read_csv('figures/figure3.csv'); \
        plt.semilogx(d.x, d.x_psi2_2); plt.show()"
"""

import pathlib
import sys

from polydgamma.cli import main

outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
outdir.mkdir(parents=True, exist_ok=True)
for fid in range(1, 7):
    code = main(["figure", "--id", str(fid), "--out", str(outdir / f"figure{fid}.csv")])
    if code != 0:
        sys.exit(code)
