#!/usr/bin/env python3
"""Sweep the three-variable generator matrices with row degrees and entry
sizes within bounds, and realize every one that passes the necessary
conditions.  In three variables the greedy realizer never fails on an
admissible matrix, and this sweep demonstrates it."""

import argparse
import time
from itertools import product

import stablebetti as sb
from stablebetti.ideals import GeneratorMatrix


def candidate_rows(j, cap):
    rows = []
    for m2 in range(0, min(j, cap) + 1):
        bound = min(sb.macaulay_shift(m2, 1, 1) if m2 else 0, cap)
        for m3 in range(0, bound + 1):
            rows.append((1, m2, m3))
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--entry-cap", type=int, default=6)
    args = parser.parse_args()
    t0 = time.monotonic()
    seen = set()
    admissible = realized = 0
    for jmin in range(1, args.max_degree + 1):
        for jmax in range(jmin, args.max_degree + 1):
            windows = [candidate_rows(j, args.entry_cap) for j in range(jmin, jmax + 1)]
            for stack in product(*windows):
                M = GeneratorMatrix(3, jmin, stack)
                if not sb.check_matrix_necessary(M).ok:
                    continue
                M = M.canonical()
                if M in seen:
                    continue
                seen.add(M)
                admissible += 1
                result = sb.realize_matrix_greedy(M)
                if result.ok and sb.generator_matrix(result.ideal) == M:
                    realized += 1
                else:
                    print(f"NOT REALIZED: jmin={M.jmin} rows={M.rows}")
    print(
        f"{admissible} admissible matrices, {realized} realized "
        f"({time.monotonic() - t0:.2f}s)"
    )


if __name__ == "__main__":
    main()
