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

"""Checks that a `bayesphase simulate` record is uniform on [0, 2pi).

Intended for Fock states, whose canonical phase density is flat. Runs a
Kolmogorov-Smirnov test and a chi-square test on a binned histogram and exits
nonzero if either rejects uniformity at the given significance level.

    bayesphase simulate --state fock.json --true-phase 0 --shots 100000 \
        --seed 1 --out record.json
    python3 tools/check_histogram.py record.json
"""

import argparse
import json
import math
import sys

import numpy as np
from scipy import stats


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("record", help="JSON written by `bayesphase simulate`")
    parser.add_argument("--bins", type=int, default=64)
    parser.add_argument("--alpha", type=float, default=1e-3, help="significance level")
    args = parser.parse_args()

    with open(args.record, encoding="utf-8") as fh:
        outcomes = np.asarray(json.load(fh)["outcomes"], dtype=float)
    if outcomes.size == 0:
        print("record has no outcomes", file=sys.stderr)
        return 2
    if outcomes.min() < 0.0 or outcomes.max() >= 2.0 * math.pi:
        print("outcomes outside [0, 2pi)", file=sys.stderr)
        return 1

    ks = stats.kstest(outcomes, stats.uniform(loc=0.0, scale=2.0 * math.pi).cdf)
    counts, _ = np.histogram(outcomes, bins=args.bins, range=(0.0, 2.0 * math.pi))
    chi2 = stats.chisquare(counts)
    spread = (counts.max() - counts.min()) / counts.mean()

    print(f"shots            {outcomes.size}")
    print(f"KS statistic     {ks.statistic:.5f}  p = {ks.pvalue:.4f}")
    print(f"chi-square       {chi2.statistic:.2f} on {args.bins - 1} dof  p = {chi2.pvalue:.4f}")
    print(f"bin spread       {spread:.4f} (max - min) / mean")
    flat = ks.pvalue > args.alpha and chi2.pvalue > args.alpha
    print("FLAT" if flat else "NOT FLAT")
    return 0 if flat else 1


if __name__ == "__main__":
    sys.exit(main())
