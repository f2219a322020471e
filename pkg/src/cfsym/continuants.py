"""Modified continuants K' with sign parameter eps.

    K'() = 1,  K'(x1) = x1,  K'(x1..xk) = K'(x1..x(k-1)) * xk + eps * K'(x1..x(k-2))

eps = +1 gives the classical continuants.
"""

from .errors import SingularError
from .exact import as_field


def _check_eps(eps):
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps!r}")


def modified_continuant(values, eps):
    _check_eps(eps)
    values = list(values)
    prev, cur = 0, 1  # K' of the length -1 and empty prefixes; prev only feeds k >= 2
    for i, x in enumerate(values):
        if i == 0:
            prev, cur = cur, x
        else:
            prev, cur = cur, cur * x + eps * prev
    return cur


def leading_recurrence_check(values, eps):
    """K'(x1..xk) == x1 K'(x2..xk) + eps K'(x3..xk)."""
    values = list(values)
    if len(values) < 2:
        raise ValueError("needs at least two values")
    lhs = modified_continuant(values, eps)
    rhs = values[0] * modified_continuant(values[1:], eps) + eps * modified_continuant(values[2:], eps)
    return lhs == rhs


def eval_epsilon_cf(values, eps):
    """x1 + eps/(x2 + eps/(... + eps/xm)), evaluated in the fraction field."""
    _check_eps(eps)
    values = list(values)
    if not values:
        raise ValueError("needs at least one value")
    acc = as_field(values[-1])
    for x in reversed(values[:-1]):
        if not acc:
            raise SingularError("singular: zero denominator in eps-continued fraction")
        acc = as_field(x) + eps / acc
    return acc


def matching_sum(values, eps):
    """K' as the sum over sets of disjoint adjacent pairs, each pair replaced by eps.

    Exponential; used as an independent check of the recurrence for short inputs.
    """
    values = list(values)
    total = 0

    def walk(i, prod):
        nonlocal total
        if i >= len(values):
            total = total + prod
            return
        walk(i + 1, prod * values[i])
        if i + 1 < len(values):
            walk(i + 2, prod * eps)

    walk(0, 1)
    return total
