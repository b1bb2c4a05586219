"""Run both axiomatization checks over a range of parameters.

    python3 scripts/verify_examples.py
"""

import itertools

from mvq.schemas import verify_prime_power, verify_two_primes

PRIMES = [2, 3, 5, 7]


def main():
    failures = 0
    for p, q in itertools.permutations(PRIMES, 2):
        reports = verify_two_primes(p, q)
        ok = sum(rep.passed for _, rep in reports)
        failures += len(reports) - ok
        print(f"two primes p={p} q={q}: {ok}/{len(reports)} items pass")
    for p in PRIMES[:2]:
        for r in range(5):
            checks = verify_prime_power(p, r)
            ok = sum(len(c.templates) == 1 and c.report.passed for c in checks)
            failures += len(checks) - ok
            print(f"prime power {p}^{r}: {ok}/{len(checks)} nodes classified and verified")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
