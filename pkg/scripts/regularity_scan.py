#!/usr/bin/env python3
"""Regularity of R modulo the edge ideal for small complete graphs and paths,
via the generic engine.

Complete graphs give 1 throughout.  Paths give m - 1: the edge ideal of the
m-path is a complete intersection of m - 1 quadrics, so the Koszul resolution
pins reg(R/I) = m - 1.  (A fixed constant 3 is correct only at m = 4.)
"""

from beilc import complete_graph, decompose, path_graph, report


def main():
    print(f"{'m':>3} {'reg K_m':>8} {'reg P_m':>8} {'m-1':>4}")
    for m in range(2, 8):
        reg_k = report(decompose(complete_graph(m))).regularity
        reg_p = report(decompose(path_graph(m))).regularity
        print(f"{m:>3} {reg_k:>8} {reg_p:>8} {m - 1:>4}")


if __name__ == "__main__":
    main()
