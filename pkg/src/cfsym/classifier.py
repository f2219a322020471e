"""Specializability of sum 1/f^n(x): the fourteen congruences and a brute-force oracle."""

from dataclasses import dataclass

from .cf import CFWord, adjust_constant_term, constant_splits, coefficient_denominators, iter_expand_pair
from .errors import PreconditionError
from .exact import Polynomial, X, divides_in_integer_ring
from .generators import check_iterable, sum_pair

YES, NO, UNKNOWN = "yes", "no", "unknown"

_XM = X - 1
_XP = X + 1
_X2 = X * X

# (modulus, residue) in the order of the classification theorem
FOURTEEN = (
    (_X2, Polynomial([0])),
    (_X2, -X),
    (_X2 * _XM, Polynomial([1])),
    (_X2 * _XP, Polynomial([-1])),
    (_X2 * _XM ** 2, Polynomial([1, -1, -1, 1])),
    (_X2 * _XM ** 2, Polynomial([1, -1, 2, -1])),
    (_X2 * _XM ** 2, Polynomial([1, -2, 3, -1])),
    (_X2 * _XP ** 2, Polynomial([-1, -1, 1, 1])),
    (_X2 * _XP ** 2, Polynomial([-1, -1, -2, -1])),
    (_X2 * _XP ** 2, Polynomial([-1, -2, -3, -1])),
    (_X2 * _XM ** 2, Polynomial([1, -1, 1])),
    (_X2 * _XM ** 2, Polynomial([1, -2, 1])),
    (_X2 * _XP ** 2, Polynomial([-1, -1, -1])),
    (_X2 * _XP ** 2, Polynomial([-1, -2, -1])),
)

TWO_TERM_RESIDUES = frozenset(
    Polynomial(c) for c in ([0], [-1], [1], [0, -1], [-1, -1], [1, -1], [0, -2], [-1, -2], [1, -2])
)

REPORT_MODULI = (
    ("x^2", _X2),
    ("x^2(x-1)", _X2 * _XM),
    ("x^2(x+1)", _X2 * _XP),
    ("x^2(x-1)^2", _X2 * _XM ** 2),
    ("x^2(x+1)^2", _X2 * _XP ** 2),
    ("x(x^2-1)", X * (_X2 - 1)),
)


@dataclass(frozen=True)
class CongruenceCase:
    id: object  # 1..14, or None
    modulus: Polynomial = None
    residue: Polynomial = None

    def describe(self):
        if self.id is None:
            return "none: no congruence matches"
        return f"case {self.id}: f ≡ {self.residue.pretty()} (mod {_modulus_name(self.modulus)})"


def _modulus_name(m):
    for name, mod in REPORT_MODULI:
        if mod == m:
            return name
    return m.pretty()


def classify_fourteen(f):
    check_iterable(f)
    for i, (mod, res) in enumerate(FOURTEEN, start=1):
        if divides_in_integer_ring(mod, f - res):
            return CongruenceCase(i, mod, res)
    return CongruenceCase(None)


def classify_quadratic(f):
    """Family tag for a quadratic f, or "none"."""
    if not isinstance(f, Polynomial) or f.degree != 2 or not f.is_integral():
        raise PreconditionError("f must be an integer quadratic")
    c0, c1, k = f.coeffs
    if c1 == 0 and c0 == 0:
        return "kx^2"
    if c1 == -1 and c0 == 0:
        return "kx^2-x"
    named = {
        (1, -1, 1): "x^2-x+1",
        (1, -2, 1): "x^2-2x+1",
        (-1, -1, -1): "-x^2-x-1",
        (-1, -2, -1): "-x^2-2x-1",
    }
    return named.get(f.coeffs, "none")


def check_two_term_lemma(f):
    if not f:
        raise PreconditionError("f must be nonzero")
    return f % _X2 in TWO_TERM_RESIDUES


def residue_report(f):
    return {name: f % mod for name, mod in REPORT_MODULI}


# oracle

def _first_bad(quotients):
    for i, a in enumerate(quotients):
        if not a.is_integral():
            return i
    return None


def _integral_tail(q):
    return Polynomial(q.coeffs[1:]).is_integral()


def _adjust(word, pos, split):
    if pos == len(word) - 1:
        # [.., a + 1/b] = [.., a, b]
        q = word[pos]
        k, b = split
        return CFWord(list(word.quotients[:-1]) + [q - q.constant() + k, Polynomial(b)])
    return adjust_constant_term(word, pos, split)


def _search(word, start, budget):
    """Verdict for ``word`` whose quotients before ``start`` are already integral.

    The tail from ``start`` is a canonical expansion (possibly rescaled), so the
    rule for the first non-integral quotient applies to it.  A half-integer
    constant has two splits; both are tried.
    """
    bad = _first_bad(word.quotients[start:])
    if bad is None:
        return YES
    pos = start + bad
    q = word[pos]
    if not _integral_tail(q):
        return NO
    if budget <= 0:
        return UNKNOWN
    splits = constant_splits(q.constant())
    if not splits:
        return UNKNOWN
    verdicts = set()
    for split in splits:
        verdicts.add(_search(_adjust(word, pos, split), pos + 2, budget - 1))
        if YES in verdicts:
            return YES
    return NO if verdicts == {NO} else UNKNOWN


def _verdict_one(num, den):
    """Verdict for one partial sum, expanding lazily up to the first bad quotient."""
    seen = []
    for a in iter_expand_pair(num, den):
        seen.append(a)
        if not a.is_integral():
            break
    else:
        return YES
    if not _integral_tail(seen[-1]):
        return NO
    word = CFWord(list(iter_expand_pair(num, den)))
    return _search(word, 0, 2 * len(word))


def oracle_specializable(f, N=4):
    """Tri-state verdict from the canonical expansions of S_0..S_N."""
    check_iterable(f)
    # S_0 = 1/x is always [0, x]
    for n in range(1, N + 1):
        v = _verdict_one(*sum_pair(f, n))
        if v != YES:
            return v
    return YES


def canonical_word(f, n):
    return CFWord(list(iter_expand_pair(*sum_pair(f, n))))


def denominator_report(f, N, stable=True):
    """Coefficient denominators (other than 1) of the canonical words of S_0..S_N.

    With ``stable`` only the quotients S_n shares with S_(n+1) are counted,
    i.e. the part that belongs to the expansion of the whole series.
    """
    check_iterable(f)
    words = [canonical_word(f, n) for n in range(N + 2 if stable else N + 1)]
    out = []
    for n in range(N + 1):
        word = words[n]
        if stable:
            nxt = words[n + 1]
            k = 0
            while k < min(len(word), len(nxt)) and word[k] == nxt[k]:
                k += 1
            word = word[:k]
        out.append(sorted(d for d in coefficient_denominators(word) if d != 1))
    return out
