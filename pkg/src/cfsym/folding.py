"""Folding constructions and their closed forms.

Throughout, ``p/q`` are the last convergent of ``[a0, w]``, ``n = |w|`` and the
sign inside modified continuants is bound to ``eps = (-1)^n``.
"""

from dataclasses import dataclass

from .cf import CFWord, convergents, evaluate_pair
from .continuants import eval_epsilon_cf, modified_continuant
from .errors import NotPalindromicError, PreconditionError, SingularError
from .exact import Polynomial, RationalFunction, as_field


@dataclass(frozen=True)
class FoldSpec:
    a0: object
    w: tuple
    xs: tuple

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(self.w))
        object.__setattr__(self, "xs", tuple(self.xs))
        if not self.xs:
            raise ValueError("a fold needs at least one separator (k >= 2)")

    @property
    def k(self):
        return len(self.xs) + 1

    @property
    def n(self):
        return len(self.w)


def _div(a, b):
    if not b:
        raise SingularError("singular: zero denominator in closed form")
    return as_field(a) / as_field(b)


def lower(v):
    """Return a ring element when a field element happens to be one."""
    if isinstance(v, RationalFunction) and v.is_polynomial():
        return v.num
    return v


def _head(a0, w):
    word = CFWord([a0, *w])
    p, q = convergents(word)
    return word, p, q


def fold_once(a0, w, x):
    """``[a0, w, x, -rev(w)]``; its value is ``p/q + (-1)^n / (x q^2)``."""
    return k_fold_build(FoldSpec(a0, w, (x,)))


def k_fold_build(spec):
    parts = [spec.a0, *spec.w]
    back = [-a for a in reversed(spec.w)]
    for i, x in enumerate(spec.xs, start=1):
        parts.append(x)
        parts.extend(back if i % 2 else spec.w)
    word = CFWord(parts)
    evaluate_pair(word)
    return word


def k_fold_value(spec):
    _, p, q = _head(spec.a0, spec.w)
    p, q = p[-1], q[-1]
    eps = (-1) ** spec.n
    xq = [x * q for x in spec.xs]
    if not q:
        raise SingularError("singular: q_n = 0")
    return _div(p, q) + _div(eps * modified_continuant(xq[1:], eps), q * modified_continuant(xq, eps))


def corfrac_value(spec):
    _, p, q = _head(spec.a0, spec.w)
    p, q = p[-1], q[-1]
    eps = (-1) ** spec.n
    tail = eval_epsilon_cf([x * q for x in spec.xs], eps)
    return _div(p, q) + _div(1, q) * _div(eps, tail)


def parsums_x3(x1, x2, q, n, j):
    """Third separator making the j-th geometric partial sum 4-fold symmetric."""
    if j < 1:
        raise ValueError("j must be at least 1")
    if not x1:
        raise PreconditionError("x1 must be nonzero")
    X3 = _div((-1) ** n, x2 * q * q)
    ratio = _div(-x1, 1) / X3
    if ratio == 1:
        raise SingularError("singular: geometric ratio -x1/X3 equals 1")
    return lower(-as_field(x1) * (1 - ratio ** j) / (1 - ratio))


def parsums_sides(p, q, n, x1, x2, j):
    """Both sides of the partial-sum identity, each including the leading ``p/q``.

    Left: ``p/q + (-1)^n/(x1 q^2) * sum_{i<=j} (-X3/x1)^i``.
    Right: the 4-fold value with separators ``x1, x2, x3``.
    """
    eps = (-1) ** n
    X3 = _div(eps, x2 * q * q)
    r = -X3 / as_field(x1)
    geometric = sum((r ** i for i in range(j + 1)), as_field(0) * r)
    left = _div(p, q) + _div(eps, x1 * q * q) * geometric
    x3 = parsums_x3(x1, x2, q, n, j)
    right = _div(p, q) + _div(eps * modified_continuant([x2 * q, x3 * q], eps),
                              q * modified_continuant([x1 * q, x2 * q, x3 * q], eps))
    return left, right


def help_build(a0, w, X):
    """``[a0, w, X, rev(w), 1, -w]`` and its value ``p/q + 1/(q (X q + 2 q') (-1)^n + 1)``."""
    w = list(w)
    head, p, q = _head(a0, w)
    one = 1 if head.ring == "rational" else Polynomial([1])
    word = CFWord([a0, *w, X, *reversed(w), one, *(-a for a in w)])
    evaluate_pair(word)
    n = len(w)
    pn, qn = p[-1], q[-1]
    q_prev = q[-2] if n else 0 * one
    value = _div(pn, qn) + _div(1, qn * (X * qn + 2 * q_prev) * (-1) ** n + 1)
    return word, value


def is_palindromic(word):
    return tuple(word) == tuple(reversed(tuple(word)))


def duplicate_build(word, x):
    """``[a0..an, x, an..a0]`` for a palindromic word, with its closed value.

    A zero separator is collapsed, keeping the word palindromic.
    """
    word = word if isinstance(word, CFWord) else CFWord(word)
    p, q = convergents(word)
    n = len(word) - 1
    one = 1 if word.ring == "rational" else Polynomial([1])
    p_prev = p[-2] if n else one
    if p_prev != q[-1]:
        raise NotPalindromicError("not palindromic: p_(n-1) != q_n")
    qs = tuple(word)
    out = CFWord([*qs, x, *reversed(qs)])
    evaluate_pair(out)
    if not x:
        # [.., an, 0, an, ..] = [.., 2an, ..]
        out = CFWord([*qs[:-1], qs[-1] + qs[-1], *reversed(qs[:-1])])
    pn, qn = p[-1], q[-1]
    sign = (-1) ** n
    value = _div(pn, qn) * (1 + _div(sign, qn * (x * pn + 2 * qn) - sign))
    return out, value
