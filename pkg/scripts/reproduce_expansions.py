"""Print the standard expansions: iterated Chebyshev series, 2^(2^n), Liouville-type sums.

    python scripts/reproduce_expansions.py [--terms N]
"""

import argparse

from cfsym.cf import expand_rational, normalize_to_simple
from cfsym.exact import X
from cfsym.generators import (
    ExponentSpec,
    IterationSpec,
    chebyshev,
    folded_series_word,
    folded_sum_word,
    sum_reciprocal_powers,
)


def show(label, word, width=24):
    body = ", ".join(str(c) for c in list(word)[:width])
    more = ", ..." if len(word) > width else ""
    print(f"{label:<28}[{body}{more}]")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=6)
    args = ap.parse_args()
    N = args.terms - 1

    show("sum 1/2^(2^n)", expand_rational(sum_reciprocal_powers(2, ExponentSpec("geometric", (2,)), N)))
    for l in (3, 4):
        spec = IterationSpec(chebyshev(l), N, at=2)
        show(f"sum 1/T{l}^n(2), simple", normalize_to_simple(folded_sum_word(spec)))
    liouville, _ = folded_series_word([10 ** e for e in ExponentSpec("factorial").exponents(N)])
    show("sum 1/10^(n!), folded", liouville)
    sym = folded_sum_word(IterationSpec(X ** 2, min(N, 4)))
    show("sum 1/x^(2^n), symbolic", [str(q) for q in sym], width=10)


if __name__ == "__main__":
    main()
