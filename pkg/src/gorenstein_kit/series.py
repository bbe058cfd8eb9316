"""Exact arithmetic for Laurent polynomials and rational functions in one
formal variable t.

Everything in this module is computed over the rationals with no rounding
anywhere.  A :class:`HilbertSeries` is a rational function kept in the shape

    numerator / prod_{d in D} (1 - t^d)

with the numerator a Laurent polynomial (negative exponents allowed, since
duals and local cohomology live in negative degrees) and D a multiset of
positive integers.  The shape is canonical in the sense that no denominator
factor divides the numerator exactly; a reduction pass enforces this on
construction.  Two series with different denominator multisets may still be
equal as rational functions, so equality is tested by cross multiplication.

All values are immutable after construction and all operations are pure, so
objects can be shared freely between threads or tasks.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class NotMonomialRatio(ArithmeticError):
    """Raised when one series is not a signed power of t times another."""


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class LaurentPolynomial:
    """A finite sum of terms c * t^e with exact rational c and integer e."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for exponent, coeff in items:
            c = acc.get(exponent, Fraction(0)) + _as_fraction(coeff)
            if c:
                acc[int(exponent)] = c
            else:
                acc.pop(exponent, None)
        self._terms = acc

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPolynomial":
        return cls({0: value})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def one_minus(cls, degree: int) -> "LaurentPolynomial":
        """The factor 1 - t^degree."""
        if degree == 0:
            return cls.zero()
        return cls({0: 1, degree: -1})

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Terms as (exponent, coefficient) pairs, ascending in exponent."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    @property
    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no support")
        return min(self._terms)

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no support")
        return max(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, Fraction(0)) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        out = LaurentPolynomial()
        out._terms = acc
        return out

    def __neg__(self) -> "LaurentPolynomial":
        out = LaurentPolynomial()
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | Scalar") -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                v = acc.get(e, Fraction(0)) + c1 * c2
                if v:
                    acc[e] = v
                else:
                    acc.pop(e, None)
        out = LaurentPolynomial()
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPolynomial":
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = LaurentPolynomial.one()
        base = self
        k = power
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, value: Scalar) -> "LaurentPolynomial":
        v = _as_fraction(value)
        if not v:
            return LaurentPolynomial.zero()
        out = LaurentPolynomial()
        out._terms = {e: c * v for e, c in self._terms.items()}
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        out = LaurentPolynomial()
        out._terms = {e + k: c for e, c in self._terms.items()}
        return out

    def substitute_inverse(self) -> "LaurentPolynomial":
        """Substitute t -> 1/t, negating every exponent."""
        out = LaurentPolynomial()
        out._terms = {-e: c for e, c in self._terms.items()}
        return out

    def substitute_negative(self) -> "LaurentPolynomial":
        """Substitute t -> -t."""
        out = LaurentPolynomial()
        out._terms = {e: (c if e % 2 == 0 else -c) for e, c in self._terms.items()}
        return out

    def divide_exact(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial | None":
        """Return self/divisor when the division is exact, else None.

        Exactness is in the Laurent-polynomial ring, so powers of t are
        units: both operands are anchored at exponent zero before ordinary
        long division is attempted.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPolynomial.zero()
        shift_back = self.min_exponent - divisor.min_exponent
        rem = {e - self.min_exponent: c for e, c in self._terms.items()}
        div = {e - divisor.min_exponent: c for e, c in divisor._terms.items()}
        ddeg = max(div)
        dlead = div[ddeg]
        quo: dict[int, Fraction] = {}
        while rem:
            rdeg = max(rem)
            if rdeg < ddeg:
                return None
            c = rem[rdeg] / dlead
            quo[rdeg - ddeg] = c
            for e, dc in div.items():
                k = rdeg - ddeg + e
                v = rem.get(k, Fraction(0)) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        out = LaurentPolynomial()
        out._terms = quo
        return out.shift(shift_back)

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(sorted(self._terms.items()))!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                body = str(c) if c.denominator == 1 else f"({c})"
                body = body.lstrip("-")
            else:
                var = "t" if e == 1 else f"t^{e}"
                if abs(c) == 1:
                    body = var
                elif c.denominator == 1:
                    body = f"{abs(c)}*{var}"
                else:
                    body = f"({abs(c)})*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def prod_one_minus(degrees: Iterable[int]) -> LaurentPolynomial:
    """The product of the factors (1 - t^d) over the given degrees."""
    result = LaurentPolynomial.one()
    for d in degrees:
        result = result * LaurentPolynomial.one_minus(d)
    return result


class HilbertSeries:
    """A rational function numerator / prod (1 - t^d), held canonically.

    This is the Poincare series of a graded module: ``expand`` reads off
    graded ranks, and the denominator multiset records the degrees of a
    polynomial generating set.
    """

    __slots__ = ("_numerator", "_denominator_degrees")

    def __init__(
        self,
        numerator: LaurentPolynomial | Scalar = 1,
        denominator_degrees: Iterable[int] = (),
    ):
        if isinstance(numerator, (int, Fraction)):
            numerator = LaurentPolynomial.constant(numerator)
        degrees = sorted(int(d) for d in denominator_degrees)
        if any(d < 1 for d in degrees):
            raise ValueError("denominator degrees must be >= 1")
        if numerator.is_zero:
            degrees = []
        else:
            # Reduction pass: strip any denominator factor dividing the
            # numerator exactly, until none does.
            reduced = True
            while reduced:
                reduced = False
                for i, d in enumerate(degrees):
                    q = numerator.divide_exact(LaurentPolynomial.one_minus(d))
                    if q is not None:
                        numerator = q
                        degrees.pop(i)
                        reduced = True
                        break
        self._numerator = numerator
        self._denominator_degrees = tuple(degrees)

    @classmethod
    def zero(cls) -> "HilbertSeries":
        return cls(0)

    @classmethod
    def one(cls) -> "HilbertSeries":
        return cls(1)

    @classmethod
    def inverse_product(cls, degrees: Iterable[int]) -> "HilbertSeries":
        """The series 1 / prod (1 - t^d)."""
        return cls(1, degrees)

    @property
    def numerator(self) -> LaurentPolynomial:
        return self._numerator

    @property
    def denominator_degrees(self) -> tuple[int, ...]:
        return self._denominator_degrees

    @property
    def is_zero(self) -> bool:
        return self._numerator.is_zero

    def is_one(self) -> bool:
        return not self._denominator_degrees and self._numerator == LaurentPolynomial.one()

    # -- expansion ----------------------------------------------------------

    def expand(self, lo: int, hi: int) -> list[Fraction]:
        """Coefficients of the Laurent expansion for degrees lo..hi inclusive.

        Each denominator factor is expanded as the geometric series
        1 + t^d + t^{2d} + ..., so the result is bounded below by the least
        numerator exponent.
        """
        if lo > hi:
            raise ValueError("empty expansion window: lo > hi")
        width = hi - lo + 1
        if self._numerator.is_zero:
            return [Fraction(0)] * width
        base = self._numerator.min_exponent
        if hi < base:
            return [Fraction(0)] * width
        coeffs = [Fraction(0)] * (hi - base + 1)
        for e, c in self._numerator.terms():
            if e <= hi:
                coeffs[e - base] += c
        for d in self._denominator_degrees:
            for k in range(d, len(coeffs)):
                coeffs[k] += coeffs[k - d]
        out = []
        for degree in range(lo, hi + 1):
            out.append(coeffs[degree - base] if degree >= base else Fraction(0))
        return out

    def coefficient(self, degree: int) -> Fraction:
        return self.expand(degree, degree)[0]

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(value: "HilbertSeries | Scalar") -> "HilbertSeries":
        if isinstance(value, HilbertSeries):
            return value
        return HilbertSeries(value)

    def __add__(self, other: "HilbertSeries | Scalar") -> "HilbertSeries":
        if not isinstance(other, (HilbertSeries, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        mine = Counter(self._denominator_degrees)
        theirs = Counter(other._denominator_degrees)
        common = mine | theirs
        num = self._numerator * prod_one_minus((common - mine).elements())
        num = num + other._numerator * prod_one_minus((common - theirs).elements())
        return HilbertSeries(num, common.elements())

    __radd__ = __add__

    def __neg__(self) -> "HilbertSeries":
        return HilbertSeries(-self._numerator, self._denominator_degrees)

    def __sub__(self, other: "HilbertSeries | Scalar") -> "HilbertSeries":
        if not isinstance(other, (HilbertSeries, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __mul__(self, other: "HilbertSeries | Scalar") -> "HilbertSeries":
        if isinstance(other, (int, Fraction)):
            return HilbertSeries(self._numerator.scale(other), self._denominator_degrees)
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return HilbertSeries(
            self._numerator * other._numerator,
            self._denominator_degrees + other._denominator_degrees,
        )

    __rmul__ = __mul__

    def shifted(self, k: int) -> "HilbertSeries":
        """Multiply by t^k (the series of a k-fold suspension)."""
        return HilbertSeries(self._numerator.shift(k), self._denominator_degrees)

    def substitute_inverse(self) -> "HilbertSeries":
        """The exact rational function obtained by substituting t -> 1/t.

        Each factor 1 - t^{-d} is rewritten as -t^{-d}(1 - t^d), and the
        resulting sign and monomial are absorbed into the numerator, so the
        result is again in canonical shape.
        """
        num = self._numerator.substitute_inverse()
        sign = -1 if len(self._denominator_degrees) % 2 else 1
        total = sum(self._denominator_degrees)
        num = num.shift(total).scale(sign)
        return HilbertSeries(num, self._denominator_degrees)

    def substitute_negative(self) -> "HilbertSeries":
        """The exact rational function obtained by substituting t -> -t.

        Useful for parity checks: a series is supported in even degrees
        exactly when it is fixed by this substitution.
        """
        num = self._numerator.substitute_negative()
        degrees: list[int] = []
        for d in self._denominator_degrees:
            if d % 2 == 0:
                degrees.append(d)
            else:
                # 1/(1 + t^d) = (1 - t^d)/(1 - t^{2d})
                num = num * LaurentPolynomial.one_minus(d)
                degrees.append(2 * d)
        return HilbertSeries(num, degrees)

    # -- comparison and display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = HilbertSeries(other)
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        mine = Counter(self._denominator_degrees)
        theirs = Counter(other._denominator_degrees)
        shared = mine & theirs
        left = self._numerator * prod_one_minus((theirs - shared).elements())
        right = other._numerator * prod_one_minus((mine - shared).elements())
        return left == right

    __hash__ = None  # semantically equal series may have distinct shapes

    def __repr__(self) -> str:
        return f"HilbertSeries({self._numerator!r}, {self._denominator_degrees!r})"

    def __str__(self) -> str:
        num = str(self._numerator)
        if not self._denominator_degrees:
            return num
        den = "".join(f"(1 - t^{d})" for d in self._denominator_degrees)
        if len(self._numerator) > 1:
            num = f"({num})"
        return f"{num}/{den}"


def ratio_as_signed_monomial(a: HilbertSeries, b: HilbertSeries) -> tuple[int, int]:
    """Return (s, k) with a = s * t^k * b as rational functions, s = +-1.

    Raises :class:`NotMonomialRatio` when no such pair exists; for Hilbert
    series of graded rings this signals the failure of Gorenstein symmetry.
    """
    if b.is_zero:
        raise ValueError("ratio against the zero series")
    if a.is_zero:
        raise NotMonomialRatio("zero is not a signed monomial multiple")
    left = a.numerator * prod_one_minus(b.denominator_degrees)
    right = b.numerator * prod_one_minus(a.denominator_degrees)
    if len(left) != len(right):
        raise NotMonomialRatio(f"{a} / {b} is not a signed power of t")
    k = left.min_exponent - right.min_exponent
    s = left.coefficient(left.min_exponent) / right.coefficient(right.min_exponent)
    if s != 1 and s != -1:
        raise NotMonomialRatio(f"{a} / {b} is not a signed power of t")
    if left != right.shift(k).scale(s):
        raise NotMonomialRatio(f"{a} / {b} is not a signed power of t")
    return (1 if s == 1 else -1, k)
