"""Stable mixed Hodge numbers from the superdiagonal strand.

For n >= i + 1 the numbers h^{w1,w2;i}(Conf_n) no longer depend on n; the
z^i coefficient of the superdiagonal series lists them.  Also reports which
stable degrees carry more than one weight.

    python scripts/stable_hodge.py --genus 2 --punctures 2 --i-max 8
"""

import argparse
from collections import defaultdict

from confhodge.genfun import I_EQ_N_MINUS_1, expand_strand


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--genus", type=int, default=1)
    ap.add_argument("--punctures", type=int, default=1)
    ap.add_argument("--i-max", type=int, default=8)
    args = ap.parse_args()

    s = expand_strand(I_EQ_N_MINUS_1, args.genus, args.punctures, args.i_max)
    by_degree = defaultdict(dict)
    for (w1, w2, i), c in s.items():
        by_degree[i][(w1, w2)] = (-1) ** i * c
    for i in range(args.i_max + 1):
        entries = by_degree.get(i, {})
        weights = sorted({w1 + w2 for w1, w2 in entries})
        b = sum(entries.values())
        flag = "" if len(weights) <= 1 else "  impure"
        print(f"i={i:>2}  b={b:>6}  weights={weights}{flag}")
        for (w1, w2), h in sorted(entries.items()):
            print(f"        h^({w1},{w2})={h}")


if __name__ == "__main__":
    main()
