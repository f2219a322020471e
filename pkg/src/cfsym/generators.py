"""Iterated polynomials, Chebyshev polynomials, and the series/products built from them.

Symbolic objects live in Q(x); specialized ones are computed by value at an
integer point, never by building the iterated polynomial.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational

from .cf import (
    CFWord,
    StablePrefix,
    convergents,
    evaluate_pair,
    expand_rational,
    iter_expand_pair,
    stable_prefix,
)
from .errors import BudgetExceededError, PreconditionError, ZeroTermError
from .exact import (
    Polynomial,
    RationalFunction,
    X,
    divides_in_integer_ring,
    exact_quotient,
    parse_polynomial,
    poly_compose,
)
from .folding import FoldSpec, duplicate_build, fold_once, k_fold_build

MAX_SYMBOLIC_DEGREE = 4096

ONE = Polynomial([1])


@dataclass(frozen=True)
class IterationSpec:
    """``f`` iterated ``count`` times, optionally specialized at ``x = at``."""

    f: Polynomial
    count: int
    at: object = None

    def __post_init__(self):
        check_iterable(self.f)
        if self.count < 0:
            raise ValueError("count must be nonnegative")
        if self.at is not None and Fraction(self.at).denominator != 1:
            raise ValueError("specialization point must be an integer")


def check_iterable(f):
    if not isinstance(f, Polynomial) or not f.is_integral() or f.degree < 2:
        raise PreconditionError("f must have integer coefficients and degree > 1")


@dataclass(frozen=True)
class ExponentSpec:
    """Exponent sequences ``l^n``, ``n!`` and ``c * l^n`` for ``n = 0, 1, ...``."""

    kind: str
    params: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        arity = {"geometric": 1, "factorial": 0, "scaled": 2}
        if self.kind not in arity:
            raise ValueError(f"unknown exponent kind {self.kind!r}")
        if len(self.params) != arity[self.kind]:
            raise ValueError(f"{self.kind} takes {arity[self.kind]} parameter(s)")
        if self.kind != "factorial" and (self.params[-1] < 2 or self.params[0] < 1):
            raise ValueError("exponents must grow: need l >= 2 and c >= 1")

    def exponent(self, n):
        if self.kind == "geometric":
            return self.params[0] ** n
        if self.kind == "factorial":
            return factorial(n)
        c, l = self.params
        return c * l ** n

    def exponents(self, N):
        return [self.exponent(n) for n in range(N + 1)]

    @classmethod
    def parse(cls, text):
        kind, _, rest = text.partition(":")
        params = tuple(int(t) for t in rest.split(",")) if rest else ()
        return cls(kind.strip(), params)


def parse_f(text):
    """Coefficient list, or ``chebyshev:l`` for T_l."""
    text = text.strip()
    if text.startswith("chebyshev:"):
        return chebyshev(int(text.split(":", 1)[1]))
    return parse_polynomial(text)


# iteration

def iterate_poly(f, n):
    result = X
    for _ in range(n):
        result = poly_compose(f, result)
    return result


def iterates(f, N):
    """[f^0, f^1, ..., f^N] as polynomials, capped at degree 4096."""
    if f.degree ** N > MAX_SYMBOLIC_DEGREE:
        raise BudgetExceededError(f"deg f^{N} = {f.degree ** N} exceeds {MAX_SYMBOLIC_DEGREE}")
    out = [X]
    for _ in range(N):
        out.append(poly_compose(f, out[-1]))
    return out


def iterate_at(f, n, m):
    v = m
    for _ in range(n):
        v = f(v)
    return v


def iterates_at(f, N, m):
    out = [m]
    for _ in range(N):
        out.append(f(out[-1]))
    return out


_CHEB = [ONE, X]


def chebyshev(l):
    if l < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    while len(_CHEB) <= l:
        _CHEB.append(2 * X * _CHEB[-1] - _CHEB[-2])
    return _CHEB[l]


# partial sums and products

def _terms(spec):
    if spec.at is None:
        return iterates(spec.f, spec.count)
    vals = iterates_at(spec.f, spec.count, int(spec.at))
    for n, v in enumerate(vals):
        if not v:
            raise ZeroTermError(n)
    return vals


def sum_pair(f, N):
    """Unreduced ``(num, den)`` of ``sum_{n<=N} 1/f^n(x)``; den is the product of iterates."""
    num, den = ONE, X
    for t in iterates(f, N)[1:]:
        num, den = num * t + den, den * t
    return num, den


def product_pair(f, N):
    num, den = ONE, ONE
    for t in iterates(f, N):
        num, den = num * (t + 1), den * t
    return num, den


def sum_partial(spec):
    if spec.at is None:
        return RationalFunction(*sum_pair(spec.f, spec.count))
    return sum(Fraction(1, v) for v in _terms(spec))


def product_partial(spec):
    if spec.at is None:
        return RationalFunction(*product_pair(spec.f, spec.count))
    out = Fraction(1)
    for v in _terms(spec):
        out *= 1 + Fraction(1, v)
    return out


def sum_reciprocal_powers(base, exps, N):
    """``sum_{n<=N} base^(-e_n)`` for one ExponentSpec (or an explicit exponent list)."""
    es = exps.exponents(N) if isinstance(exps, ExponentSpec) else list(exps)
    return reciprocal_power_sum(base, es)


def reciprocal_power_sum(base, exponents):
    if isinstance(base, Polynomial):
        if base.degree < 1:
            raise PreconditionError("polynomial base must be non-constant")
        top = max(exponents)
        num = sum((base ** (top - e) for e in exponents), Polynomial())
        return RationalFunction(num, base ** top)
    base = Fraction(base)
    if base in (0, 1, -1):
        raise PreconditionError("base must not be 0 or +-1")
    return sum(Fraction(1) / base ** e for e in exponents)


def merged_exponents(specs, count):
    """The ``count`` smallest exponents of several sequences, as a sorted multiset."""
    out = []
    for s in specs:
        n = 0
        while n < count:
            out.append(s.exponent(n))
            n += 1
    out.sort()
    return out[:count]


# iterated folding

def _ring_quotient(a, b):
    """``a/b`` when it is an integral ring element, else None."""
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        a = a if isinstance(a, Polynomial) else Polynomial(a)
        b = b if isinstance(b, Polynomial) else Polynomial(b)
        qt = exact_quotient(a, b)
        return qt if qt is not None and qt and qt.is_integral() else None
    v = Fraction(a) / b
    return v.numerator if v.denominator == 1 and v else None


def extend_by_fold(word, d):
    """A word for ``word + 1/d``: 2-fold if possible, else 3-fold with a unit separator.

    Returns ``(new_word, kind)`` with kind 2, 3, or 0 when neither fits and the
    sum was re-expanded canonically.
    """
    p, q = convergents(word)
    p, q = p[-1], q[-1]
    eps = (-1) ** (len(word) - 1)
    q2 = q * q
    x = _ring_quotient(eps * d, q2)
    if x is not None:
        return fold_once(word[0], word[1:], x), 2
    for r in (1, -1):
        x1 = _ring_quotient(eps * (d - r), q2)
        if x1 is not None:
            one = r if word.ring == "rational" else Polynomial(r)
            return k_fold_build(FoldSpec(word[0], word[1:], (x1, one))), 3
    num, den = p * d + q, q * d
    if word.ring == "rational":
        return expand_rational(Fraction(num) / den), 0
    return CFWord(iter_expand_pair(num, den)), 0


def folded_series_word(denominators):
    """Raw word for ``sum 1/d_n`` grown term by term with the folding constructions."""
    ds = list(denominators)
    for n, d in enumerate(ds):
        if not d:
            raise ZeroTermError(n)
    d0 = ds[0]
    if isinstance(d0, Polynomial):
        word = CFWord(iter_expand_pair(ONE, d0))
    else:
        word = expand_rational(Fraction(1) / d0)
    kinds = []
    for d in ds[1:]:
        word, kind = extend_by_fold(word, d)
        kinds.append(kind)
    return word, kinds


def folded_sum_word(spec):
    word, _ = folded_series_word(_terms(spec))
    return word


def product_word(spec):
    """Iterated duplicating construction for ``prod (1 + 1/f^i)``, from ``P_0 = [1, x-1, 1]``."""
    terms = _terms(spec)
    x0 = terms[0]
    word = CFWord([1, x0 - 1, 1]) if not isinstance(x0, Polynomial) else CFWord([ONE, x0 - 1, ONE])
    for t in terms[1:]:
        p, q = convergents(word)
        p, q = p[-1], q[-1]
        sign = (-1) ** (len(word) - 1)
        top = sign * (t + 1) - 2 * q * q
        sep = _ring_quotient(top, q * p) if top else 0 * q
        if sep is None:
            raise PreconditionError("product does not continue by duplication at this step")
        word, _ = duplicate_build(word, sep)
    return word


# explicit specializable constructions

def _exact(a, b):
    qt = exact_quotient(a, b)
    if qt is None:
        raise PreconditionError("expected an exact polynomial division")
    return qt


def construction_case_negx(g, l):
    """``[0, x, A_1, ..., A_l]`` for ``f = g x^2 - x``; evaluates to S_l."""
    f = g * X * X - X
    check_iterable(f)
    F = iterates(f, max(l - 1, 0))
    word = [Polynomial(), X]
    for m in range(1, l + 1):
        if m % 2:
            P = ONE
            for i in range(0, m - 2, 2):
                P = P * _exact(F[i + 1], F[i])
        else:
            P = X
            for i in range(1, m - 2, 2):
                P = P * _exact(F[i + 1], F[i])
        A = poly_compose(g, F[m - 1]) * P * P
        word.append(-A if m % 2 else A)
    return CFWord(word)


def construction_case_x2x1(g, l):
    """``[0, x, A_1 - 1, B_1, ..., A_l, B_l]`` for ``f = x^2 - x + 1 + x^2 (x-1)^2 g``."""
    f = X * X - X + 1 + X * X * (X - 1) ** 2 * g
    check_iterable(f)
    F = iterates(f, max(l - 1, 0))
    word = [Polynomial(), X]
    prod = ONE  # x f ... f^(m-2)
    sq = X * X  # x^2 f^2 ... f^(m-1)^2
    for m in range(1, l + 1):
        if m >= 2:
            prod = prod * F[m - 2]
            sq = sq * F[m - 1] * F[m - 1]
        r = _exact(F[m - 1] - 1, prod)
        A = -poly_compose(g, F[m - 1]) * r * r
        word.append(A - 1 if m == 1 else A)
        word.append(-sq)
    return CFWord(word)


def threefold_sum_word(f, N):
    """Iterated 3-fold word for ``f = +-1 mod x^2 (x -+ 1)``; raises if a step is not 3-fold."""
    word, kinds = folded_series_word(iterates(f, N))
    if any(k != 3 for k in kinds):
        raise PreconditionError("partial sums do not grow by 3-fold steps for this f")
    return word


# congruence facts

def verify_threefold_congruence(f, n):
    """``f^n - 1`` divisible in Z[x] by ``(f^0 f^1 ... f^(n-1))^2``."""
    check_iterable(f)
    if not divides_in_integer_ring(X * X * (X - 1), f - 1):
        raise PreconditionError("f is not 1 mod x^2 (x-1)")
    F = iterates(f, n)
    Q = ONE
    for t in F[:n]:
        Q = Q * t
    qt = exact_quotient(F[n] - 1, Q * Q)
    return qt is not None and qt.is_integral()


def verify_product_divisibility(f, n):
    """``prod_{i<=n} (f^i + 1) | f^n^2 - 1`` and ``f^n | f^(n+1) + 1`` in Z[x]."""
    check_iterable(f)
    if not divides_in_integer_ring(X * (X * X - 1), f - (2 * X * X - 1)):
        raise PreconditionError("f is not 2x^2 - 1 mod x (x^2 - 1)")
    F = iterates(f, n + 1)
    P = ONE
    for t in F[:n + 1]:
        P = P * (t + 1)
    a = exact_quotient(F[n] * F[n] - 1, P)
    b = exact_quotient(F[n + 1] + 1, F[n])
    return a is not None and a.is_integral() and b is not None and b.is_integral()


# limits

def series_prefix(partial, start=0, min_length=1, max_steps=64):
    """Certified prefix of a limit from expansions of consecutive partial objects.

    ``partial(N)`` returns the N-th partial object as a CFWord.  N grows until
    the common prefix of steps N and N+1 has ``min_length`` quotients and stops
    short of the final quotient of either expansion.
    """
    prev = partial(start)
    for N in range(start + 1, start + 1 + max_steps):
        cur = partial(N)
        pre = stable_prefix([prev, cur]).word
        n = min(len(pre), len(prev) - 1, len(cur) - 1)
        if n >= min_length:
            return StablePrefix(pre[:n], True)
        prev = cur
    raise BudgetExceededError("series prefix did not stabilize")


def is_value(word, value):
    """Exact comparison of a word against a Fraction or RationalFunction."""
    n, d = evaluate_pair(word)
    if isinstance(value, RationalFunction):
        return n * value.den == d * value.num
    if isinstance(value, Rational):
        return Fraction(n) / d == value if not isinstance(n, Polynomial) else n == d * value
    raise TypeError(f"cannot compare with {value!r}")
