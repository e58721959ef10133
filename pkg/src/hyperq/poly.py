"""Exact sparse polynomial arithmetic over the integers.

Three small value types used everywhere else in the package:

* ``LaurentPoly`` -- univariate Laurent polynomials in q (integer
  exponents of either sign, integer coefficients).
* ``BiPoly``      -- ordinary polynomials in two commuting variables
  with nonnegative exponents.
* ``RatFunc``     -- formal quotients of two Laurent polynomials,
  compared by cross multiplication and never reduced.

All arithmetic is exact integer arithmetic on sparse dicts; there is no
floating point anywhere.  Instances are immutable by convention: every
operation returns a fresh object and nothing mutates ``_terms``.
"""

from __future__ import annotations

from typing import Mapping


def _clean(terms: Mapping[int, int]) -> dict[int, int]:
    """Drop zero coefficients so equality is plain dict equality."""
    return {e: c for e, c in terms.items() if c != 0}


class LaurentPoly:
    """A Laurent polynomial in one variable q, stored as {exponent: coeff}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = _clean(terms or {})

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[int, int]]:
        """Sorted (exponent, coefficient) pairs."""
        return sorted(self._terms.items())

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no minimum exponent")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no maximum exponent")
        return max(self._terms)

    @property
    def eval_at_one(self) -> int:
        """The integer shadow q = 1."""
        return sum(self._terms.values())

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def reverse_var(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- text ------------------------------------------------------------
    # Fixed wire format: terms in increasing exponent order joined by
    # " + " (" - " and the absolute value for negative coefficients), a
    # coefficient of 1 elided except on the exponent-0 term, exponent 0 as
    # the bare coefficient, exponent 1 as "q", anything else as "q^e".

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if a == 1 else f"{a}{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"


#: the variable q itself
Q = LaurentPoly({1: 1})
ONE = LaurentPoly({0: 1})
ZERO = LaurentPoly()


def qint(a: int) -> LaurentPoly:
    """The q-integer [a]_q = 1 + q + ... + q^(a-1); [0]_q = 0."""
    if a < 0:
        raise ValueError("q-integer needs a >= 0")
    return LaurentPoly({e: 1 for e in range(a)})


def qpow(e: int) -> LaurentPoly:
    """The monomial q^e (e may be negative)."""
    return LaurentPoly({e: 1})


class BiPoly:
    """A polynomial in two commuting variables, stored as {(e1, e2): coeff}.

    Exponents are nonnegative.  The variable names only matter for
    rendering and default to "r", "s".
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = {p: c for p, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, e1: int = 0, e2: int = 0) -> "BiPoly":
        return cls({(e1, e2): coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items())

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, 0) + c
        return BiPoly(out)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a1, a2), c1 in self._terms.items():
            for (b1, b2), c2 in other._terms.items():
                p = (a1 + b1, a2 + b2)
                out[p] = out.get(p, 0) + c1 * c2
        return BiPoly(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def specialize(self, w1: int, w2: int) -> LaurentPoly:
        """Map each variable to a power of q: (e1, e2) -> q^(e1*w1 + e2*w2)."""
        out: dict[int, int] = {}
        for (e1, e2), c in self._terms.items():
            e = e1 * w1 + e2 * w2
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    @property
    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def text(self, names: tuple[str, str] = ("r", "s")) -> str:
        """Terms in lexicographic (e1, e2) order, e.g. "s + r" or "1 + r s^2"."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (e1, e2), c in self.terms():
            a = abs(c)
            factors = []
            for name, e in zip(names, (e1, e2)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            varstr = " ".join(factors)
            if not varstr:
                body = str(a)
            else:
                body = varstr if a == 1 else f"{a}{varstr}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"BiPoly({self._terms!r})"


class RatFunc:
    """A formal quotient num/den of Laurent polynomials, never reduced.

    Equality (``==``) means equality as rational functions, decided by
    cross multiplication; the stored representation is whatever the
    arithmetic produced.  ``canonical()`` clears negative exponents for
    display only.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = ONE):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RatFunc":
        return cls(p, ONE)

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(ZERO, ONE)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @staticmethod
    def _coerce(x: "RatFunc | LaurentPoly | int") -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return RatFunc(x, ONE)
        if isinstance(x, int):
            return RatFunc(LaurentPoly({0: x}), ONE)
        raise TypeError(f"cannot treat {x!r} as a rational function")

    def __add__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __mul__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def recip(self) -> "RatFunc":
        if self.num.is_zero:
            raise ZeroDivisionError("reciprocal of the zero function")
        return RatFunc(self.den, self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (LaurentPoly, int)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def canonical(self) -> "RatFunc":
        """Shift num and den by q^-e, e the least exponent present in either.

        After the shift both parts are ordinary polynomials and at least
        one of them has a nonzero constant term.  Display form only; the
        value is unchanged.
        """
        exps = []
        if not self.num.is_zero:
            exps.append(self.num.min_exp)
        exps.append(self.den.min_exp)
        e = min(exps)
        return RatFunc(self.num.shift(-e), self.den.shift(-e))

    def text(self) -> str:
        c = self.canonical()
        return f"({c.num.text()}) / ({c.den.text()})"

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"
