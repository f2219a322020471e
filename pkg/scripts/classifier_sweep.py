"""Compare the congruence classifier with the brute-force oracle on a coefficient box.

    python scripts/classifier_sweep.py [--degrees 2,3] [--bound 3] [--N 4]
"""

import argparse
import itertools
import time
from collections import Counter

from cfsym.classifier import UNKNOWN, YES, classify_fourteen, oracle_specializable
from cfsym.exact import Polynomial


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", default="2,3")
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--N", type=int, default=4)
    args = ap.parse_args()

    b = args.bound
    tally = Counter()
    mismatches = []
    t0 = time.perf_counter()
    for d in (int(t) for t in args.degrees.split(",")):
        for cs in itertools.product(range(-b, b + 1), repeat=d + 1):
            if not cs[-1]:
                continue
            f = Polynomial(list(cs))
            case = classify_fourteen(f).id
            verdict = oracle_specializable(f, args.N)
            tally[case is not None, verdict] += 1
            if verdict != UNKNOWN and (case is not None) != (verdict == YES):
                mismatches.append((f, case, verdict))
    dt = time.perf_counter() - t0

    total = sum(tally.values())
    print(f"{total} polynomials in {dt:.2f}s")
    for (matched, verdict), n in sorted(tally.items()):
        print(f"  congruence={'yes' if matched else 'no':<3}  oracle={verdict:<7}  {n}")
    print(f"mismatches: {len(mismatches)}")
    for f, case, verdict in mismatches[:20]:
        print(f"  {f}: case={case} oracle={verdict}")


if __name__ == "__main__":
    main()
