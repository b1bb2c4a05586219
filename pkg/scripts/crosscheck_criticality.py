"""Compare the divisibility criterion for criticality with the brute-force oracle.

    python3 scripts/crosscheck_criticality.py [--max-entry 6] [--max-len 3] [--carrier 64]
"""

import argparse
import itertools
import math
import time

from mvq.algebra import ProductAlgebra
from mvq.criticality import critical_oracle, is_critical


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-entry", type=int, default=6)
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--carrier", type=int, default=64)
    args = ap.parse_args()

    start = time.perf_counter()
    checked = critical = 0
    disagreements = []
    for k in range(1, args.max_len + 1):
        for sig in itertools.combinations_with_replacement(range(1, args.max_entry + 1), k):
            if math.prod(n + 1 for n in sig) > args.carrier:
                continue
            A = ProductAlgebra(sig)
            verdict = is_critical(A)
            oracle = critical_oracle(A, budget=args.carrier)
            checked += 1
            critical += verdict
            if verdict != oracle:
                disagreements.append(sig)
    took = time.perf_counter() - start
    print(f"{checked} signatures, {critical} critical, {len(disagreements)} disagreements ({took:.2f}s)")
    for sig in disagreements:
        print("  disagree:", sig)
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
