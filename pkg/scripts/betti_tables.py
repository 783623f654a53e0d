"""Betti and mixed Hodge tables of Conf_n(Sigma_{g,r}).

    python scripts/betti_tables.py --genus 2 --punctures 1 --n-max 8
"""

import argparse

from confhodge.genfun import hodge_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--genus", type=int, default=1)
    ap.add_argument("--punctures", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--hodge", action="store_true", help="print h^{w1,w2;i} instead of b_i")
    args = ap.parse_args()

    tab = hodge_table(args.genus, args.punctures, args.n_max)
    top = args.n_max
    print(f"g={args.genus} r={args.punctures}")
    print("n \\ i " + " ".join(f"{i:>6}" for i in range(top + 1)))
    for n in range(top + 1):
        print(f"{n:>5} " + " ".join(f"{tab.betti(i, n):>6}" for i in range(top + 1)))
    if args.hodge:
        for n, i, w1, w2, h in tab.sorted_entries():
            print(f"n={n} i={i} (w1,w2)=({w1},{w2}) h={h}")


if __name__ == "__main__":
    main()
