"""Exact arithmetic in the real field generated by square roots of positive integers.

A Scalar is a finite sum  sum_s q_s * sqrt(s)  with rational coefficients q_s
and square-free positive integer radicands s (s = 1 is the rational part).
Square roots of distinct square-free integers are linearly independent over
the rationals, so the term map in canonical form (square-free radicands, no
zero coefficients) is a normal form: a Scalar is zero iff the map is empty.
The set of such sums is closed under multiplication and division, hence a
field, and every operation here is exact.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class ScalarError(ValueError):
    pass


def _squarefree_split(n: int) -> tuple[int, int]:
    """Write n = g*g*s with s square-free; return (g, s). Requires n >= 1."""
    g, s = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            g *= d ** (e // 2)
            if e % 2:
                s *= d
        d += 1 if d == 2 else 2
    return g, s * n


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


_SQRT_BOUND_CACHE: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}


def _sqrt_bounds(s: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure lo <= sqrt(s) <= hi with hi - lo = 2**-bits."""
    key = (s, bits)
    cached = _SQRT_BOUND_CACHE.get(key)
    if cached is None:
        k = math.isqrt(s << (2 * bits))
        lo = Fraction(k, 1 << bits)
        hi = Fraction(k + 1, 1 << bits)
        cached = _SQRT_BOUND_CACHE[key] = (lo, hi)
    return cached


class Scalar:
    """Element of the square-root field, kept in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, Fraction] | None = None):
        # terms must already be canonical; use the constructors below.
        self._terms = terms or {}
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def _make(cls, terms: dict[int, Fraction]) -> Scalar:
        return cls({s: q for s, q in terms.items() if q != 0})

    @classmethod
    def from_fraction(cls, q) -> Scalar:
        q = Fraction(q)
        return cls({1: q}) if q else cls({})

    @classmethod
    def from_int(cls, n: int) -> Scalar:
        return cls.from_fraction(Fraction(n))

    @classmethod
    def sqrt_int(cls, n: int) -> Scalar:
        """sqrt(n) for a positive integer n, reduced to square-free form."""
        if n <= 0:
            raise ScalarError(f"radicand must be positive, got {n}")
        g, s = _squarefree_split(n)
        return cls({s: Fraction(g)})

    @classmethod
    def sqrt_fraction(cls, q) -> Scalar:
        """sqrt(q) for a positive rational q: sqrt(p/r) = sqrt(p*r)/r."""
        q = Fraction(q)
        if q <= 0:
            raise ScalarError(f"radicand must be positive, got {q}")
        return cls.sqrt_int(q.numerator * q.denominator) / cls.from_int(q.denominator)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(s == 1 for s in self._terms)

    def to_fraction(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if not self.is_rational():
            raise ScalarError(f"not a rational number: {self}")
        return self._terms[1]

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar.from_fraction(Fraction(x))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for s, q in other._terms.items():
            r = terms.get(s, 0) + q
            if r:
                terms[s] = r
            else:
                terms.pop(s, None)
        return Scalar(terms)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({s: -q for s, q in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return Scalar({})
        terms: dict[int, Fraction] = {}
        for s1, q1 in a.items():
            for s2, q2 in b.items():
                if s1 == 1:
                    s, q = s2, q1 * q2
                elif s2 == 1:
                    s, q = s1, q1 * q2
                else:
                    g = math.gcd(s1, s2)
                    s = (s1 // g) * (s2 // g)
                    q = q1 * q2 * g
                r = terms.get(s, 0) + q
                if r:
                    terms[s] = r
                else:
                    terms.pop(s, None)
        return Scalar(terms)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        """Exact multiplicative inverse, by peeling one prime at a time."""
        if not self._terms:
            raise ZeroDivisionError("scalar division by zero")
        if self.is_rational():
            return Scalar({1: 1 / self._terms[1]})
        # pick a prime p present in some radicand and split self = u + v*sqrt(p)
        rad = next(s for s in self._terms if s != 1)
        p = _smallest_prime_factor(rad)
        u_terms: dict[int, Fraction] = {}
        v_terms: dict[int, Fraction] = {}
        for s, q in self._terms.items():
            if s % p == 0:
                v_terms[s // p] = q
            else:
                u_terms[s] = q
        u, v = Scalar(u_terms), Scalar(v_terms)
        # (u + v sqrt(p)) * (u - v sqrt(p)) = u^2 - p v^2 lives in the subfield
        # without p and is nonzero (sqrt(p) is irrational over that subfield).
        denom = u * u - Scalar({1: Fraction(p)}) * v * v
        sp = Scalar({p: Fraction(1)})
        return (u - v * sp) * denom.inverse()

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar({1: Fraction(1)})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}.

        Zero is syntactic (empty canonical form).  A nonzero value is
        provably nonzero, so a rational interval enclosure of each sqrt(s),
        refined until the enclosing interval of the sum excludes zero,
        terminates.  No floating point is involved.
        """
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            q = next(iter(self._terms.values()))
            return 1 if q > 0 else -1
        bits = 8
        while True:
            lo = hi = Fraction(0)
            for s, q in self._terms.items():
                if s == 1:
                    lo += q
                    hi += q
                else:
                    a, b = _sqrt_bounds(s, bits)
                    if q > 0:
                        lo += q * a
                        hi += q * b
                    else:
                        lo += q * b
                        hi += q * a
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() >= 0

    # -- printing ----------------------------------------------------------

    @staticmethod
    def _format_term(s: int, q: Fraction, leading: bool) -> str:
        sign = "-" if q < 0 else ("" if leading else "+")
        mag = abs(q)
        coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if s == 1:
            body = coeff
        elif mag == 1:
            body = f"sqrt({s})"
        else:
            body = f"{coeff}*sqrt({s})"
        if leading:
            return sign + body
        return f" {sign} {body}"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, s in enumerate(sorted(self._terms)):
            parts.append(self._format_term(s, self._terms[s], i == 0))
        return "".join(parts)

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar({})
ONE = Scalar({1: Fraction(1)})


def sc(x) -> Scalar:
    """Coerce an int, Fraction, literal string, or Scalar to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Scalar.from_fraction(Fraction(x))


def sqrt(n: int) -> Scalar:
    return Scalar.sqrt_int(n)


_TERM_RE = re.compile(
    r"""^(?:
        (?P<num>\d+)(?:/(?P<den>\d+))?(?:\*sqrt\((?P<rad>\d+)\))?
      | sqrt\((?P<rad2>\d+)\)
      )$""",
    re.VERBOSE,
)


def _parse_term(text: str) -> Scalar:
    m = _TERM_RE.match(text)
    if not m:
        raise ScalarError(f"malformed scalar literal: {text!r}")
    if m.group("rad2") is not None:
        return Scalar.sqrt_int(int(m.group("rad2")))
    num = int(m.group("num"))
    den = int(m.group("den")) if m.group("den") else 1
    if den == 0:
        raise ScalarError(f"zero denominator in scalar literal: {text!r}")
    value = Scalar.from_fraction(Fraction(num, den))
    if m.group("rad") is not None:
        value = value * Scalar.sqrt_int(int(m.group("rad")))
    return value


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal: signed terms like '-1/2 + 3*sqrt(2)'.

    Each term matches SIGN? (INT | INT/INT) ('*sqrt(' POSINT ')')?, with a
    bare 'sqrt(r)' also allowed.  The canonical printer emits exactly this
    grammar, so parse and print are mutually inverse on canonical values.
    """
    s = text.replace(" ", "")
    if not s:
        raise ScalarError("empty scalar literal")
    # split on top-level + and - (no parentheses occur inside pure literals)
    terms = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    total = Scalar({})
    for t in terms:
        neg = t.startswith("-")
        if t and t[0] in "+-":
            t = t[1:]
        if not t:
            raise ScalarError(f"malformed scalar literal: {text!r}")
        v = _parse_term(t)
        total = total - v if neg else total + v
    return total
