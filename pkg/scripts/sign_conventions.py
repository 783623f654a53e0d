"""Compare the two sign exponents for the diagonal differential.

For each block (g, sigma, tau) prints the rank-derived dimensions under the
Koszul sign |S_{>a}| + |T_{<a}| and under |S| + |T_{<a}|, next to the
hard-Lefschetz closed form, and whether the |S| matrix is conjugate to
omega ^ - by diagonal +-1 matrices.

    python scripts/sign_conventions.py --max-genus 5
"""

import argparse

from confhodge import dgcomplex as dg


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-genus", type=int, default=5)
    args = ap.parse_args()

    bad = 0
    for g in range(args.max_genus + 1):
        for s in range(g + 1):
            for t in range(g + 1):
                want = dg.closed_form_block_dims(g, s, t)
                k = dg.block_cohomology_dims(g, s, t, "koszul")
                lit = dg.block_cohomology_dims(g, s, t, "literal")
                conj = dg.sign_conjugacy(dg.differential_block(g, s, t, "literal"), dg.iota_block(g, s, t))
                if lit != want:
                    bad += 1
                mark = "ok" if lit == want else "RANK"
                print(f"g={g} sigma={s} tau={t}  closed={want} koszul={k} literal={lit} "
                      f"conjugate={conj is not None}  {mark}")
    print(f"{bad} blocks where the |S| exponent disagrees with the closed form")


if __name__ == "__main__":
    main()
