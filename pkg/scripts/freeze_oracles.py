"""Recompute the derived reference values in tests/oracles.py by an independent route.

Uses sympy (continued fraction iterator, polynomial division) and mpmath only;
nothing from cfsym is imported.  Run it and compare with the frozen file:

    python scripts/freeze_oracles.py
"""

import mpmath
import sympy
from sympy import Rational, symbols
from sympy.ntheory.continued_fraction import continued_fraction_iterator


def simple_cf(r):
    return [int(a) for a in continued_fraction_iterator(Rational(r))]


def partial_2_2n(N):
    return sum(Rational(1, 2 ** 2 ** n) for n in range(N + 1))


def chebyshev_iter_at(l, N, m):
    x = symbols("x")
    T = sympy.chebyshevt(l, x)
    vals = [sympy.Integer(m)]
    for _ in range(N):
        vals.append(T.subs(x, vals[-1]))
    return vals


def poly_cf(num, den, x):
    out = []
    while den != 0:
        q, r = sympy.div(num, den, x)
        out.append(sympy.expand(q))
        num, den = den, r
    return out


def main():
    print("partial sums of 1/2^(2^n):")
    for N in (3, 4):
        print(" ", N, simple_cf(partial_2_2n(N)))
    vals = chebyshev_iter_at(3, 2, 2)
    print("T_3 partial N=2:", simple_cf(sum(Rational(1, v) for v in vals)))

    print("two-sum large quotients:", [2 ** 2 ** (3 * n + 1) + 2 ** 2 ** (3 * n) for n in (1, 2)])

    mpmath.mp.dps = 200
    P = mpmath.mpf(1)
    v = mpmath.mpf(3)
    errs = []
    for _ in range(6):
        P *= 1 + 1 / v
        errs.append(mpmath.nstr(abs(P - mpmath.sqrt(2)), 4))
        v = 2 * v * v - 1
    print("product errors:", errs)

    x = symbols("x")
    f = x ** 2 + x - 1
    num, den = sympy.fraction(sympy.together(1 / x + 1 / f))
    print("S_1 for x^2+x-1:", poly_cf(sympy.expand(num), sympy.expand(den), x))


if __name__ == "__main__":
    main()
