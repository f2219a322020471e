"""Finite continued fractions over Q and Q[x].

A word ``[a0, a1, ..., an]`` stands for ``a0 + 1/(a1 + 1/(... + 1/an))``.
Quotients are either all exact rationals or all :class:`Polynomial`.
"""

import math
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple

from .errors import (
    BudgetExceededError,
    NormalizationError,
    NotAdjustableError,
    PreconditionError,
    SingularError,
)
from .exact import (
    Polynomial,
    RationalFunction,
    _norm,
    format_polynomial,
    format_rational,
    parse_polynomial,
    parse_rational,
    poly_divmod,
)

RATIONAL = "rational"
POLYNOMIAL = "polynomial"


class CFWord:
    """Immutable, homogeneous sequence of partial quotients."""

    __slots__ = ("quotients", "ring")

    def __init__(self, quotients):
        qs = list(quotients)
        if not qs:
            raise ValueError("a continued fraction needs at least one quotient")
        if any(isinstance(a, Polynomial) for a in qs):
            self.ring = POLYNOMIAL
            self.quotients = tuple(a if isinstance(a, Polynomial) else Polynomial(a) for a in qs)
        else:
            if not all(isinstance(a, Rational) for a in qs):
                raise TypeError("partial quotients must be rationals or polynomials")
            self.ring = RATIONAL
            self.quotients = tuple(_norm(a) for a in qs)

    def __len__(self):
        return len(self.quotients)

    def __iter__(self):
        return iter(self.quotients)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return CFWord(self.quotients[i])
        return self.quotients[i]

    def __add__(self, other):
        other = other.quotients if isinstance(other, CFWord) else tuple(other)
        return CFWord(self.quotients + other)

    def __eq__(self, other):
        if isinstance(other, CFWord):
            return self.quotients == other.quotients
        if isinstance(other, (list, tuple)):
            try:
                return self == CFWord(other)
            except (TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.quotients)

    def __repr__(self):
        return f"CFWord({format_cfword(self)})"

    def __str__(self):
        return format_cfword(self)

    @property
    def is_polynomial(self):
        return self.ring == POLYNOMIAL

    def pretty(self):
        """Human form, e.g. ``[0, x - 1, x + 1]``."""
        if self.ring == RATIONAL:
            return format_cfword(self)
        return "[" + ", ".join(a.pretty() for a in self.quotients) + "]"


class Convergents(NamedTuple):
    p: tuple
    q: tuple


class KFold(NamedTuple):
    a0: object
    w: tuple
    xs: tuple


class StablePrefix(NamedTuple):
    word: CFWord
    certified: bool


def format_cfword(cf):
    if cf.ring == POLYNOMIAL:
        items = (f"({format_polynomial(a)})" for a in cf.quotients)
    else:
        items = (format_rational(a) for a in cf.quotients)
    return "[" + ", ".join(items) + "]"


def parse_cfword(text):
    """Parse ``[1, 2, 3]`` or ``[(0), (-1,1), (1,1)]`` (polynomials as coefficient lists)."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    items, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append(cur)
            cur = ""
        else:
            cur += ch
    items.append(cur)
    items = [t.strip() for t in items]
    if any(not t for t in items):
        raise ValueError(f"malformed continued fraction: {text!r}")
    if any(t.startswith("(") for t in items):
        return CFWord([parse_polynomial(t) for t in items])
    return CFWord([parse_rational(t) for t in items])


# expansion

def expand_rational(r):
    """Simple continued fraction of a rational, floor convention for a0."""
    r = Fraction(r)
    p, q = r.numerator, r.denominator
    out = []
    while True:
        a, rem = divmod(p, q)
        out.append(a)
        if not rem:
            return CFWord(out)
        p, q = q, rem


def iter_expand_pair(num, den):
    """Lazily yield the canonical Euclidean quotients of ``num/den`` over Q[x].

    The pair need not be reduced; a common factor only rides along.
    """
    if not den:
        raise ZeroDivisionError("zero denominator")
    while True:
        a, r = poly_divmod(num, den)
        yield a
        if not r:
            return
        num, den = den, r


def expand_ratfunc(R):
    """Canonical expansion: every quotient after the first has degree >= 1."""
    if isinstance(R, Polynomial):
        return CFWord([R])
    if isinstance(R, Rational):
        return CFWord([Polynomial(R)])
    return CFWord(iter_expand_pair(R.num, R.den))


def expand(value):
    if isinstance(value, (Polynomial, RationalFunction)):
        return expand_ratfunc(value)
    return expand_rational(value)


# evaluation

def evaluate_pair(cf):
    """Unreduced ``(num, den)`` with ``num/den == cf``; raises on a singular tail."""
    qs = cf.quotients
    num, den = qs[-1], (Polynomial([1]) if cf.ring == POLYNOMIAL else 1)
    for i in range(len(qs) - 2, -1, -1):
        if not num:
            raise SingularError(f"singular: tail starting at index {i + 1} evaluates to 0")
        num, den = qs[i] * num + den, num
    return num, den


def evaluate(cf):
    num, den = evaluate_pair(cf)
    if cf.ring == POLYNOMIAL:
        return RationalFunction(num, den)
    return _norm(Fraction(num) / den)


def same_value(cf, num, den):
    """Exact test ``evaluate(cf) == num/den`` by cross multiplication (no gcd)."""
    n, d = evaluate_pair(cf)
    return n * den == d * num


def convergents(cf):
    qs = cf.quotients
    one = Polynomial([1]) if cf.ring == POLYNOMIAL else 1
    zero = one * 0
    p_prev, q_prev = one, zero
    p, q = qs[0], one
    ps, qs_out = [p], [q]
    for a in qs[1:]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        ps.append(p)
        qs_out.append(q)
    return Convergents(tuple(ps), tuple(qs_out))


def determinant_holds(conv):
    """``p_n q_{n-1} - q_n p_{n-1} == (-1)^(n-1)`` for every n >= 1."""
    p, q = conv
    for n in range(1, len(p)):
        if p[n] * q[n - 1] - q[n] * p[n - 1] != (-1) ** (n - 1):
            return False
    return True


# rewriting

def negate(cf):
    return CFWord(-a for a in cf.quotients)


def reverse(cf):
    return CFWord(reversed(cf.quotients))


def collapse_zeros(cf):
    """Apply ``[..., a, 0, b, ...] = [..., a+b, ...]`` to interior zero quotients."""
    out = []
    qs = list(cf.quotients)
    i = 0
    while i < len(qs):
        a = qs[i]
        if out and not a and i + 1 < len(qs):
            out[-1] = out[-1] + qs[i + 1]
            i += 2
            continue
        out.append(a)
        i += 1
    return CFWord(out)


def is_simple(cf):
    if cf.ring != RATIONAL or any(type(a) is not int for a in cf):
        return False
    if any(a < 1 for a in cf.quotients[1:]):
        return False
    return len(cf) == 1 or cf.quotients[-1] != 1


def normalize_to_simple(cf):
    """Rewrite an integer word of any signs into the simple continued fraction.

    Uses zero collapse ``[.., a, 0, b, ..] -> [.., a+b, ..]`` and negative removal
    ``[.., a, -t] -> [.., a-1, 1, t-1]``; the negation of the tail is carried as a
    running sign instead of being written out.
    """
    if cf.ring != RATIONAL or any(type(a) is not int for a in cf):
        raise PreconditionError("normalize_to_simple needs integer partial quotients")
    before = evaluate(cf)
    budget = 10 * len(cf)
    steps = 0
    raw = iter(cf.quotients)
    front = []
    sign = 1
    out = []
    while True:
        if front:
            v = front.pop()
        else:
            try:
                v = sign * next(raw)
            except StopIteration:
                break
        if not out:
            out.append(v)
            continue
        if len(out) >= 2 and out[-1] == 0:
            out.pop()
            front.append(out.pop() + v)
            steps += 1
        elif v < 0:
            out[-1] -= 1
            sign = -sign
            front = [-t for t in front]
            front.extend((-v - 1, 1))
            steps += 1
        else:
            out.append(v)
        if steps > budget:
            raise BudgetExceededError("normalize_to_simple exceeded its rewrite budget")
    if len(out) >= 2 and out[-1] == 0:
        # [.., b, c, 0]: the tail c + 1/0 is infinite, so the pair vanishes
        if len(out) == 2:
            raise SingularError("singular: word evaluates to infinity")
        del out[-2:]
    if len(out) >= 2 and out[-1] == 1:
        out.pop()
        out[-1] += 1
    result = CFWord(out)
    if evaluate(result) != before or not is_simple(result):
        raise NormalizationError(f"normalization changed the value of {cf}")
    return result


# specializability

def _coefficients(cf):
    for a in cf.quotients:
        if isinstance(a, Polynomial):
            yield from a.coeffs
        else:
            yield a


def is_specializable(cf):
    return all(type(c) is int for c in _coefficients(cf))


def is_semi_specializable(cf):
    if is_specializable(cf):
        return False
    return all(2 % Fraction(c).denominator == 0 for c in _coefficients(cf))


def coefficient_denominators(cf):
    return {Fraction(c).denominator for c in _coefficients(cf)}


def split_constant(c):
    """Write a rational ``c`` as ``k + 1/b`` with integers k, b, else None."""
    c = Fraction(c)
    d = c.denominator
    if d == 1:
        return None
    if d == 2:
        k = int(c)  # truncate toward zero: -1/2 -> 0 + 1/(-2)
    else:
        k = round(c)
    frac = c - k
    if frac.numerator not in (1, -1):
        return None
    return k, frac.denominator * frac.numerator


def constant_splits(c):
    """All ways of writing a rational ``c`` as ``k + 1/b`` with integers k, b."""
    c = Fraction(c)
    out = []
    for k in (math.floor(c), math.ceil(c)):
        frac = c - k
        if frac and frac.numerator in (1, -1) and (k, frac.denominator * frac.numerator) not in out:
            out.append((k, frac.denominator * frac.numerator))
    return out


def adjust_constant_term(cf, position, split=None):
    """Apply ``[a + 1/b, c] = [a, b, -(c + b)/b^2]`` at ``position``.

    ``c`` is the whole tail after the position; it is rescaled in place using
    ``t*[d0, d1, d2, ...] = [t*d0, d1/t, t*d2, ...]`` with ``t = -1/b^2``.
    """
    if cf.ring != POLYNOMIAL:
        raise NotAdjustableError("not adjustable here: word is not over Q[x]")
    if not 0 <= position < len(cf) - 1:
        raise NotAdjustableError("not adjustable here: no successor quotient")
    q = cf[position]
    if not Polynomial(q.coeffs[1:]).is_integral():
        raise NotAdjustableError("not adjustable here: non-constant part is not integral")
    if split is None:
        split = split_constant(q.constant())
    elif split not in constant_splits(q.constant()):
        raise NotAdjustableError("not adjustable here: constant term is not k + 1/b for this split")
    if split is None:
        raise NotAdjustableError("not adjustable here: constant term is not k + 1/b")
    k, b = split
    head = q - q.constant() + k
    t = Fraction(-1, b * b)
    tail = list(cf.quotients[position + 1:])
    tail[0] = tail[0] + b
    scaled = [a * t if i % 2 == 0 else a * (-b * b) for i, a in enumerate(tail)]
    return CFWord(list(cf.quotients[:position]) + [head, Polynomial(b)] + scaled)


# symmetry

def detect_k_fold(cf, half_length, k):
    """Match ``[a0, w, x1, -rev(w), x2, w, ...]`` with ``|w| == half_length`` and k blocks."""
    h = half_length
    if k < 2 or h < 0 or len(cf) != 1 + k * h + (k - 1):
        return None
    qs = cf.quotients
    w = qs[1:1 + h]
    back = tuple(-a for a in reversed(w))
    xs = []
    pos = 1 + h
    for i in range(1, k):
        xs.append(qs[pos])
        pos += 1
        if qs[pos:pos + h] != (back if i % 2 else w):
            return None
        pos += h
    return KFold(qs[0], w, tuple(xs))


def stable_prefix(expansions):
    """Longest common prefix of the last two expansions.

    A single expansion comes back unchanged with ``certified=False``.
    """
    expansions = list(expansions)
    if not expansions:
        raise ValueError("stable_prefix needs at least one expansion")
    if len(expansions) == 1:
        return StablePrefix(expansions[0], False)
    a, b = expansions[-2], expansions[-1]
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    if n == 0:
        raise ValueError("expansions share no common prefix")
    return StablePrefix(a[:n], True)
