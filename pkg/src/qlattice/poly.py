"""Dense univariate polynomials in q with exact integer coefficients.

Every polynomial-valued quantity in this package (q-integers, Gaussian
binomials, tiling generating functions, identity sides) is a value of
this type.  The representation is a normalized tuple of arbitrary
precision ints indexed by exponent: the highest entry is nonzero, the
zero polynomial is the empty tuple, and degree of zero is None rather
than a sentinel integer.  Coefficients may be negative (the alternating
sum in guoyang2 needs them), but exponents may not: there are no
Laurent polynomials here.

Two renderings are bit-exact contracts shared with the CLI and the
golden tests:

* text, descending: ``q^4 + q^3 + 2q^2 + q + 1`` (unit coefficients
  suppressed, exponent 1 written ``q``, exponent 0 as the bare integer);
* JSON, ascending coefficient list of decimal strings:
  ``["1","1","2","1","1"]``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import DivisionByZero, DomainError, InexactDivision

__all__ = [
    "Polynomial",
    "ZERO",
    "ONE",
    "Q",
    "zero",
    "one",
    "monomial",
    "add",
    "sub",
    "mul",
    "scale",
    "shift",
    "exact_div",
    "substitute_power",
    "eval_int",
    "equals",
    "degree",
    "coefficient",
]


class Polynomial:
    """Immutable dense polynomial over the integers, indexed by exponent."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        staged = list(coeffs)
        for c in staged:
            if not isinstance(c, int):
                raise DomainError(f"coefficient {c!r} is not an integer")
        while staged and staged[-1] == 0:
            staged.pop()
        self._coeffs = tuple(staged)

    # structure ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> Optional[int]:
        """The degree, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def coefficient(self, e: int) -> int:
        """Coefficient of q^e; 0 beyond the degree."""
        if e < 0:
            raise DomainError(f"exponent must be >= 0, got {e}")
        return self._coeffs[e] if e < len(self._coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    # arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value: "Polynomial | int") -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return Polynomial((value,))
        raise DomainError(f"cannot treat {value!r} as a polynomial")

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        b = self._coerce(other)._coeffs
        a = self._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Polynomial | int") -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        b = self._coerce(other)._coeffs
        a = self._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Polynomial":
        """The product c * self for an integer c."""
        if c == 0:
            return ZERO
        if c == 1:
            return self
        return Polynomial(tuple(c * x for x in self._coeffs))

    def shift(self, e: int) -> "Polynomial":
        """The product q^e * self; realizes q^i prefactors in the identities."""
        if e < 0:
            raise DomainError(f"shift exponent must be >= 0, got {e}")
        if not self._coeffs or e == 0:
            return self
        return Polynomial((0,) * e + self._coeffs)

    def substitute_power(self, m: int) -> "Polynomial":
        """The composition self(q^m), for m >= 1.

        Moves the coefficient of q^e to q^(e*m); used for the q^2 and
        q^4 brackets in the guoyang identities.
        """
        if m < 1:
            raise DomainError(f"substitute_power needs m >= 1, got {m}")
        if m == 1 or not self._coeffs:
            return self
        out = [0] * ((len(self._coeffs) - 1) * m + 1)
        for e, c in enumerate(self._coeffs):
            out[e * m] = c
        return Polynomial(out)

    def eval_int(self, x: int) -> int:
        """Exact evaluation at an integer point, by Horner's rule."""
        if not isinstance(x, int):
            raise DomainError(f"evaluation point {x!r} is not an integer")
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Long division that must come out exact.

        Returns c with self = divisor * c.  Raises DivisionByZero for a
        zero divisor and InexactDivision the moment a division step
        leaves a remainder (either a non-dividing leading coefficient
        or a nonzero final remainder), so inexactness is a detectable
        error rather than silent truncation.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise DivisionByZero("exact division by the zero polynomial")
        if self.is_zero():
            return ZERO
        dc = divisor._coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        rem = list(self._coeffs)
        if len(rem) - 1 < dd:
            raise InexactDivision(
                f"degree {len(rem) - 1} dividend not divisible by degree {dd} divisor"
            )
        quot = [0] * (len(rem) - dd)
        for pos in range(len(quot) - 1, -1, -1):
            top = rem[pos + dd]
            if top == 0:
                continue
            qc, leftover = divmod(top, lead)
            if leftover:
                raise InexactDivision(
                    f"leading coefficient {top} not divisible by {lead}"
                )
            quot[pos] = qc
            for i, c in enumerate(dc):
                rem[pos + i] -= qc * c
        if any(rem):
            raise InexactDivision(f"nonzero remainder {Polynomial(rem)!r}")
        return Polynomial(quot)

    # renderings --------------------------------------------------------

    def text(self) -> str:
        """Canonical descending text form, e.g. ``q^4 + q^3 + 2q^2 + q + 1``."""
        return self._render(power=lambda e: "q" if e == 1 else f"q^{e}")

    def latex(self) -> str:
        """Like text() but with braced exponents, e.g. ``q^{10}``."""
        return self._render(power=lambda e: "q" if e == 1 else f"q^{{{e}}}")

    def _render(self, power) -> str:
        if not self._coeffs:
            return "0"
        pieces: list[str] = []
        for e in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = power(e)
            else:
                body = f"{mag}{power(e)}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def json_coeffs(self) -> list[str]:
        """Ascending coefficients as decimal strings (the JSON contract)."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_json_coeffs(cls, items: Iterable[str]) -> "Polynomial":
        return cls(int(s) for s in items)


ZERO = Polynomial()
ONE = Polynomial((1,))
Q = Polynomial((0, 1))


# Operation-style aliases.  The methods above carry the implementation;
# these exist so call sites can stay close to the abstract signatures.

def zero() -> Polynomial:
    return ZERO


def one() -> Polynomial:
    return ONE


def monomial(c: int, e: int) -> Polynomial:
    """The monomial c * q^e; e must be >= 0."""
    if e < 0:
        raise DomainError(f"monomial exponent must be >= 0, got {e}")
    if c == 0:
        return ZERO
    return Polynomial((0,) * e + (c,))


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def scale(a: Polynomial, c: int) -> Polynomial:
    return a.scale(c)


def shift(a: Polynomial, e: int) -> Polynomial:
    return a.shift(e)


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    return a.exact_div(b)


def substitute_power(a: Polynomial, m: int) -> Polynomial:
    return a.substitute_power(m)


def eval_int(a: Polynomial, x: int) -> int:
    return a.eval_int(x)


def equals(a: Polynomial, b: Polynomial) -> bool:
    return a == b


def degree(a: Polynomial) -> Optional[int]:
    return a.degree


def coefficient(a: Polynomial, e: int) -> int:
    return a.coefficient(e)
