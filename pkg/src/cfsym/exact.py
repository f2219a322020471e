"""Exact rationals, dense univariate polynomials over Q, and reduced rational functions.

Rationals are plain :class:`fractions.Fraction` (or ``int``).  Polynomial
coefficients are stored constant term first; integral coefficients are kept
as ``int`` so that integer-coefficient work never touches ``Fraction``.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational

__all__ = [
    "Polynomial",
    "RationalFunction",
    "X",
    "poly_divmod",
    "poly_gcd",
    "poly_compose",
    "exact_quotient",
    "divides_in_integer_ring",
    "parse_rational",
    "format_rational",
    "parse_polynomial",
    "format_polynomial",
    "as_field",
    "is_integral",
]

# below this length schoolbook multiplication beats packing into one big int
_KRONECKER_MIN = 24


def _norm(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact rational: {c!r}")


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


try:
    # GMP multiplies million-digit integers far faster than CPython's Karatsuba
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = None

_GMP_BITS = 1 << 13


def _bigmul(u, v):
    if _mpz is not None and min(u.bit_length(), v.bit_length()) > _GMP_BITS:
        return int(_mpz(u) * _mpz(v))
    return u * v


def _pack(cs, nbytes):
    """sum c_i 2^(8 nbytes i) for signed c_i, built from two unsigned byte strings."""
    zero = bytes(nbytes)
    pos = b"".join(c.to_bytes(nbytes, "little") if c > 0 else zero for c in cs)
    neg = b"".join((-c).to_bytes(nbytes, "little") if c < 0 else zero for c in cs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(v, n, nbytes):
    """Inverse of _pack for n signed slots, each known to fit in half a slot."""
    sign = 1
    if v < 0:
        v, sign = -v, -1
    raw = v.to_bytes(n * nbytes + 1, "little")
    half = 1 << (8 * nbytes - 1)
    full = 1 << (8 * nbytes)
    out = []
    carry = 0
    for i in range(n):
        c = int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") + carry
        carry = 0
        if c >= half:
            c -= full
            carry = 1
        out.append(sign * c)
    return out


def _mul_int_kronecker(a, b):
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 2
    nbytes = (bits + 7) // 8
    return _unpack(_bigmul(_pack(a, nbytes), _pack(b, nbytes)), len(a) + len(b) - 1, nbytes)


def _mul_coeffs(a, b):
    if not a or not b:
        return []
    if min(len(a), len(b)) >= _KRONECKER_MIN:
        if all(type(c) is int for c in a) and all(type(c) is int for c in b):
            return _mul_int_kronecker(a, b)
        da = reduce(lcm, (Fraction(c).denominator for c in a), 1)
        db = reduce(lcm, (Fraction(c).denominator for c in b), 1)
        ia = [int(c * da) for c in a]
        ib = [int(c * db) for c in b]
        d = da * db
        return [_norm(Fraction(c, d)) for c in _mul_int_kronecker(ia, ib)]
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return [_norm(c) for c in res]


class Polynomial:
    """Immutable dense polynomial with exact rational coefficients.

    ``Polynomial([1, 0, -8, 0, 8])`` is ``8x^4 - 8x^2 + 1``.  The zero
    polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Polynomial):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, Rational):
            coeffs = (coeffs,)
        self.coeffs = tuple(_strip([_norm(c) for c in coeffs]))
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        p = cls.__new__(cls)
        p.coeffs = tuple(_strip(coeffs))
        p._hash = None
        return p

    @classmethod
    def monomial(cls, n, c=1):
        return cls._raw([0] * n + [_norm(c)])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_integral(self):
        return all(type(c) is int for c in self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    def denominators(self):
        return {Fraction(c).denominator for c in self.coeffs}

    def monic(self):
        lc = self.leading
        if lc == 1 or not self.coeffs:
            return self
        return Polynomial._raw([_norm(Fraction(c) / lc) for c in self.coeffs])

    def content(self):
        """Positive rational c with self / c primitive integral."""
        if not self.coeffs:
            return 0
        fr = [Fraction(c) for c in self.coeffs]
        den = reduce(lcm, (c.denominator for c in fr), 1)
        num = reduce(gcd, (int(c * den) for c in fr), 0)
        return _norm(Fraction(num, den))

    def primitive(self):
        c = self.content()
        if c in (0, 1):
            return self
        return Polynomial._raw([_norm(Fraction(a) / c) for a in self.coeffs])

    # ring operations

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, Rational):
            return Polynomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] = _norm(res[i] + c)
        return Polynomial._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            c = _norm(other)
            if not c:
                return Polynomial._raw([])
            return Polynomial._raw([_norm(a * c) for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(_mul_coeffs(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power needs a nonnegative integer exponent")
        result = Polynomial._raw([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return Polynomial._raw([_norm(Fraction(c) / other) for c in self.coeffs])
        if isinstance(other, Polynomial):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return RationalFunction(Polynomial(other), self)
        return NotImplemented

    def __call__(self, t):
        """Horner evaluation; ``t`` may be a number, Polynomial or RationalFunction."""
        if isinstance(t, Polynomial):
            return poly_compose(self, t)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return _norm(acc) if isinstance(acc, Rational) else acc

    def derivative(self):
        return Polynomial._raw([_norm(i * c) for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == Polynomial(other).coeffs
        if isinstance(other, RationalFunction):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


X = Polynomial([0, 1])


def poly_divmod(a, b):
    """Euclidean division over Q: ``a == b*q + r`` with ``deg r < deg b``."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.degree
    if a.degree < db:
        return Polynomial._raw([]), a
    rem = list(a.coeffs)
    lc = b.coeffs[-1]
    bc = b.coeffs
    unit = lc == 1 or lc == -1
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        if unit:
            c = c * lc
        else:
            c = _norm(Fraction(c) / lc)
        quot[k - db] = c
        off = k - db
        for j in range(db + 1):
            if bc[j]:
                rem[off + j] = rem[off + j] - c * bc[j]
    return Polynomial._raw([_norm(c) for c in quot]), Polynomial._raw([_norm(c) for c in rem[:db]])


def exact_quotient(a, b):
    """``a / b`` as a Polynomial when the division is exact, else ``None``."""
    q, r = poly_divmod(a, b)
    return None if r else q


def poly_gcd(a, b):
    """Monic gcd over Q."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = a.primitive(), b.primitive()
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r.primitive()
    return a.monic()


def poly_compose(outer, inner):
    """Return ``outer(inner(t))``."""
    if not isinstance(inner, Polynomial):
        inner = Polynomial(inner)
    acc = Polynomial._raw([])
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc


def divides_in_integer_ring(divisor, dividend):
    """True iff ``dividend = divisor * c`` with ``c`` in Z[x]; divisor must be monic over Z."""
    if not divisor.is_integral() or not divisor.is_monic():
        raise ValueError("divisor must be a monic polynomial with integer coefficients")
    if not dividend.is_integral():
        raise ValueError("dividend must have integer coefficients")
    return not poly_divmod(dividend, divisor)[1]


class RationalFunction:
    """Reduced quotient ``num/den`` with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced=False):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = Polynomial([1]) if den is None else den
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = Polynomial([1])
            elif not den.is_constant():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = poly_divmod(num, g)[0], poly_divmod(den, g)[0]
            lc = den.leading
            if lc != 1:
                num, den = num / lc, den / lc
        self.num = num
        self.den = den

    @classmethod
    def from_pair(cls, num, den):
        return cls(num, den)

    def is_polynomial(self):
        return self.den.is_constant()

    def as_polynomial(self):
        if not self.is_polynomial():
            raise ValueError("rational function is not a polynomial")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other, _reduced=True)
        if isinstance(other, Rational):
            return RationalFunction(Polynomial(other), _reduced=True)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("rational function division by zero")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if n < 0:
            return RationalFunction(1) / (self ** -n)
        return RationalFunction(self.num ** n, self.den ** n, _reduced=True)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (Polynomial, Rational)):
            other = self._coerce(other)
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash(("RationalFunction", self.num, self.den))

    def __call__(self, t):
        d = self.den(t)
        if not d:
            raise ZeroDivisionError("rational function pole at evaluation point")
        n = self.num(t)
        if isinstance(n, Rational) and isinstance(d, Rational):
            return _norm(Fraction(n) / d)
        return n / d

    def __repr__(self):
        return f"RationalFunction({self.num.pretty()!r}, {self.den.pretty()!r})"

    def __str__(self):
        if self.is_polynomial():
            return self.num.pretty()
        return f"({self.num.pretty()})/({self.den.pretty()})"


def as_field(v):
    """Lift a ring element (int, Fraction, Polynomial) to its fraction field."""
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Polynomial):
        return RationalFunction(v, _reduced=True)
    if isinstance(v, Rational):
        return Fraction(v)
    raise TypeError(f"not a ring element: {v!r}")


def is_integral(v):
    if isinstance(v, Polynomial):
        return v.is_integral()
    if isinstance(v, RationalFunction):
        return v.is_polynomial() and v.num.is_integral()
    return Fraction(v).denominator == 1


def parse_rational(text):
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return _norm(Fraction(text))


def format_rational(c):
    c = _norm(c)
    if type(c) is int:
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def parse_polynomial(text):
    """Parse the coefficient-list text form, constant term first: ``"1,0,-8,0,8"``."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text.strip():
        return Polynomial()
    return Polynomial([parse_rational(t) for t in text.split(",")])


def format_polynomial(p):
    if not p.coeffs:
        return "0"
    return ",".join(format_rational(c) for c in p.coeffs)
