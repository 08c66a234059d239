# Copyright 2026 The bayesphase Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Plots `bayesphase sweep` and `bayesphase bounds` CSV output with matplotlib.

    python3 tools/plot_bounds.py --sweep sweep.csv --bounds bounds.csv --out bounds.png
"""

import argparse
import csv
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sweep", help="CSV from `bayesphase sweep`")
    parser.add_argument("--bounds", help="CSV from `bayesphase bounds`")
    parser.add_argument("--out", default="bounds.png")
    args = parser.parse_args()

    panels = [p for p in (args.sweep, args.bounds) if p]
    if not panels:
        parser.error("give --sweep and/or --bounds")
    fig, axes = plt.subplots(1, len(panels), figsize=(6 * len(panels), 4.5), squeeze=False)
    axes = list(axes[0])

    if args.sweep:
        rows = read_rows(args.sweep)
        n = [int(r["N"]) for r in rows]
        ax = axes.pop(0)
        ax.plot(n, [float(r["information_nats"]) for r in rows], "o-", label="optimal I(N)")
        ax.plot(n, [math.log(k + 1) for k in n], "k--", label="ln(N+1)")
        ax.set_xlabel("photon cutoff N")
        ax.set_ylabel("information (nats)")
        ax.legend()

    if args.bounds:
        rows = read_rows(args.bounds)
        m = [int(r["M"]) for r in rows]
        mc = [float(r["mc_information"]) for r in rows]
        err = [3 * float(r["mc_stderr"]) for r in rows]
        ax = axes.pop(0)
        ax.errorbar(m, mc, yerr=err, fmt="o-", capsize=3, label="Monte Carlo (3 sigma)")
        ax.plot(m, [float(r["chain_bound"]) for r in rows], "k:", label="M I_1")
        asym = [(k, float(r["asymptote"])) for k, r in zip(m, rows) if r["asymptote"]]
        if asym:
            ax.plot(*zip(*asym), "r--", label="asymptote")
        ax.axhline(math.log(2 * math.pi), color="grey", lw=0.8, label="ln 2pi")
        ax.set_xscale("log", base=2)
        ax.set_ylim(bottom=0.0, top=max(mc) * 1.3)
        ax.set_xlabel("outcomes M")
        ax.set_ylabel("information (nats)")
        ax.legend()

    fig.tight_layout()
    fig.savefig(args.out, dpi=120)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
