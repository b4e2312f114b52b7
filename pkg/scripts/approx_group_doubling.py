#!/usr/bin/env python3
"""Compare the doubling of the symmetric approximate-group construction with closed forms.

Prints, per (kbar1, kbar2, b): the counted T, the /4 closed form, the excess
and the span against L_m. The excess turns out to be kbar2 (kbar2 - 1).
"""
import argparse

from addvol import ApproxGroupParams, L_m_formula, approx_compose_T, gen_approx_group


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kbar1-max", type=int, default=9)
    ap.add_argument("--kbar2-max", type=int, default=4)
    args = ap.parse_args()
    print("kbar1\tkbar2\tb\tk\tc\tT\tT_formula\texcess\tkbar2(kbar2-1)\tspan\tL_m")
    for kbar1 in range(3, args.kbar1_max + 1, 2):
        for kbar2 in range(0, args.kbar2_max + 1):
            for b in range(0, kbar1 - 2, 2):
                P = ApproxGroupParams(kbar1, kbar2, b)
                A = gen_approx_group(P)
                Tf = approx_compose_T(P.k, P.c, P.b)
                print(f"{kbar1}\t{kbar2}\t{b}\t{P.k}\t{P.c}\t{A.T}\t{Tf}\t{A.T - Tf}\t"
                      f"{kbar2 * (kbar2 - 1)}\t{A.max - A.min + 1}\t{L_m_formula(P.k, P.c, P.b)}")


if __name__ == "__main__":
    main()
