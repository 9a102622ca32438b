"""Exact arithmetic in Q(j, sqrt2, sqrt3).

Elements live in the 8-dimensional Q-vector space with fixed basis

    [1, j, sqrt2, j*sqrt2, sqrt3, j*sqrt3, sqrt6, j*sqrt6]

where j is the primitive cube root of unity (j^2 = -1 - j) and the
radicals multiply by sqrt2*sqrt3 = sqrt6, sqrt2^2 = 2, sqrt3^2 = 3,
sqrt6^2 = 6.  This is the smallest field containing every scalar the
library needs: cube-root phases and the radical entries 1/sqrt2,
1/sqrt6, sqrt(2/3) of the diagonal operators.

Internally an element is stored as 8 integer numerators over a single
shared positive denominator, reduced so gcd(n0..n7, den) = 1.  That
form is canonical (it is uniquely determined by the 8 rational
coordinates), so structural equality is field equality; the `coeffs`
property exposes the coordinates as lowest-terms `Fraction`s.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "FieldElem",
    "ZERO",
    "ONE",
    "J",
    "J2",
    "SQRT2",
    "SQRT3",
    "SQRT6",
    "j_pow",
    "rational",
    "parse_rational",
]

BASIS_NAMES = ("1", "j", "√2", "j√2", "√3", "j√3", "√6", "j√6")

# Radical multiplication: _RAD[r1][r2] = (integer factor, radical index)
# with radical indices 0:1, 1:sqrt2, 2:sqrt3, 3:sqrt6.
_RAD = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (2, 0), (1, 3), (2, 2)),
    ((1, 2), (1, 3), (3, 0), (3, 1)),
    ((1, 3), (2, 2), (3, 1), (6, 0)),
)


def _build_mul_table():
    # _MUL[i][k] = tuple of (basis index, integer coefficient) for b_i * b_k.
    table = []
    for i in range(8):
        r1, e1 = divmod(i, 2)
        row = []
        for k in range(8):
            r2, e2 = divmod(k, 2)
            m, r = _RAD[r1][r2]
            e = e1 + e2
            if e < 2:
                row.append(((2 * r + e, m),))
            else:
                # j^2 = -1 - j
                row.append(((2 * r, -m), (2 * r + 1, -m)))
        table.append(tuple(row))
    return tuple(table)


_MUL = _build_mul_table()
_gcd = math.gcd


class FieldElem:
    """An exact element of Q(j, sqrt2, sqrt3).

    Immutable and hashable; arithmetic never leaves the field and is
    exact.  Use the module constants (ONE, J, SQRT2, ...) and
    :func:`rational` to build values.
    """

    __slots__ = ("nums", "den")

    def __init__(self, nums: Sequence[int], den: int = 1, _reduced: bool = False):
        if not _reduced:
            if den == 0:
                raise ZeroDivisionError("denominator must be nonzero")
            if den < 0:
                nums = [-n for n in nums]
                den = -den
            g = _gcd(den, *nums)
            if g > 1:
                nums = [n // g for n in nums]
                den //= g
        object.__setattr__(self, "nums", tuple(nums))
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("FieldElem is immutable")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_int(cls, n: int) -> "FieldElem":
        return cls((n, 0, 0, 0, 0, 0, 0, 0), 1, _reduced=True)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "FieldElem":
        return cls((f.numerator, 0, 0, 0, 0, 0, 0, 0), f.denominator, _reduced=True)

    @classmethod
    def from_coeffs(cls, coords: Iterable[Fraction | int | str]) -> "FieldElem":
        """Build from 8 rational coordinates in the fixed basis order."""
        fr = [Fraction(c) for c in coords]
        if len(fr) != 8:
            raise ValueError(f"expected 8 coordinates, got {len(fr)}")
        den = math.lcm(*(f.denominator for f in fr))
        return cls([f.numerator * (den // f.denominator) for f in fr], den)

    @classmethod
    def from_json(cls, data) -> "FieldElem":
        if not isinstance(data, (list, tuple)) or len(data) != 8:
            raise ValueError("FieldElem JSON must be a list of 8 'p/q' strings")
        return cls.from_coeffs([parse_rational(s) for s in data])

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """The 8 rational coordinates, each in lowest terms."""
        return tuple(Fraction(n, self.den) for n in self.nums)

    def to_json(self) -> list[str]:
        """Encode as 8 'p/q' strings ('0/1' for zero coordinates)."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def has_zero_j_part(self) -> bool:
        """True when the element lies in the real subfield Q(sqrt2, sqrt3)."""
        return not (self.nums[1] or self.nums[3] or self.nums[5] or self.nums[7])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------
    def __add__(self, other: "FieldElem") -> "FieldElem":
        if not isinstance(other, FieldElem):
            return NotImplemented
        da, db = self.den, other.den
        if da == db:
            return FieldElem([a + b for a, b in zip(self.nums, other.nums)], da)
        return FieldElem(
            [a * db + b * da for a, b in zip(self.nums, other.nums)], da * db
        )

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        if not isinstance(other, FieldElem):
            return NotImplemented
        da, db = self.den, other.den
        if da == db:
            return FieldElem([a - b for a, b in zip(self.nums, other.nums)], da)
        return FieldElem(
            [a * db - b * da for a, b in zip(self.nums, other.nums)], da * db
        )

    def __neg__(self) -> "FieldElem":
        return FieldElem(tuple(-n for n in self.nums), self.den, _reduced=True)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        if not isinstance(other, FieldElem):
            return NotImplemented
        out = [0, 0, 0, 0, 0, 0, 0, 0]
        bnums = other.nums
        for i, a in enumerate(self.nums):
            if not a:
                continue
            row = _MUL[i]
            for k, b in enumerate(bnums):
                if not b:
                    continue
                ab = a * b
                for idx, c in row[k]:
                    out[idx] += ab * c
        return FieldElem(out, self.den * other.den)

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.invert() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self * other.invert()

    # ------------------------------------------------------------------
    # conjugations and inversion
    # ------------------------------------------------------------------
    def conjugate_j(self) -> "FieldElem":
        """Field automorphism j -> j^2; fixes the real subfield."""
        n = self.nums
        return FieldElem(
            (n[0] - n[1], -n[1], n[2] - n[3], -n[3], n[4] - n[5], -n[5], n[6] - n[7], -n[7]),
            self.den,
        )

    def _conj_sqrt3(self) -> "FieldElem":
        # sqrt3 -> -sqrt3 (hence sqrt6 -> -sqrt6)
        n = self.nums
        return FieldElem(
            (n[0], n[1], n[2], n[3], -n[4], -n[5], -n[6], -n[7]), self.den, _reduced=True
        )

    def _conj_sqrt2(self) -> "FieldElem":
        # sqrt2 -> -sqrt2 (hence sqrt6 -> -sqrt6)
        n = self.nums
        return FieldElem(
            (n[0], n[1], -n[2], -n[3], n[4], n[5], -n[6], -n[7]), self.den, _reduced=True
        )

    def invert(self) -> "FieldElem":
        """Multiplicative inverse via conjugation down the field tower.

        Multiplying by the j-conjugate lands in Q(sqrt2, sqrt3); the
        sqrt3- and sqrt2-conjugates then reduce the norm to a rational,
        which is inverted directly.
        """
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        b = self.conjugate_j()
        n1 = self * b
        c = n1._conj_sqrt3()
        n2 = n1 * c
        d = n2._conj_sqrt2()
        n3 = n2 * d
        if not n3.is_rational():  # pragma: no cover - norm is rational by construction
            raise ArithmeticError("field norm failed to reduce to a rational")
        scale = Fraction(n3.den, n3.nums[0])
        return b * c * d * FieldElem.from_fraction(scale)

    # ------------------------------------------------------------------
    # numeric embedding (display only; never used in verification logic)
    # ------------------------------------------------------------------
    def approx_complex(self) -> tuple[float, float]:
        """Approximate as a complex number with j = -1/2 + i*sqrt3/2."""
        n = self.nums
        rad = (1.0, math.sqrt(2), math.sqrt(3), math.sqrt(6))
        re = sum((n[2 * r] - n[2 * r + 1] / 2) * rad[r] for r in range(4))
        im = math.sqrt(3) / 2 * sum(n[2 * r + 1] * rad[r] for r in range(4))
        return (re / self.den, im / self.den)

    # ------------------------------------------------------------------
    # comparisons / hashing / display
    # ------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElem)
            and self.den == other.den
            and self.nums == other.nums
        )

    def __hash__(self) -> int:
        return hash((self.nums, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for c, name in zip(self.coeffs, BASIS_NAMES):
            if not c:
                continue
            mag = c if not parts else abs(c)
            if name == "1":
                term = str(mag)
            elif abs(mag) == 1:
                term = name
            else:
                term = f"{mag}{name}"
            if not parts:
                parts.append(term if c > 0 or name == "1" else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FieldElem({self})"


def rational(p: int, q: int = 1) -> FieldElem:
    """The rational number p/q as a field element."""
    return FieldElem.from_fraction(Fraction(p, q))


def parse_rational(text: str) -> Fraction:
    """Parse exact rational text 'p/q' (or a bare integer 'p')."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


ZERO = FieldElem.from_int(0)
ONE = FieldElem.from_int(1)
J = FieldElem((0, 1, 0, 0, 0, 0, 0, 0), 1, _reduced=True)
J2 = FieldElem((-1, -1, 0, 0, 0, 0, 0, 0), 1, _reduced=True)
SQRT2 = FieldElem((0, 0, 1, 0, 0, 0, 0, 0), 1, _reduced=True)
SQRT3 = FieldElem((0, 0, 0, 0, 1, 0, 0, 0), 1, _reduced=True)
SQRT6 = FieldElem((0, 0, 0, 0, 0, 0, 1, 0), 1, _reduced=True)

_J_POWERS = (ONE, J, J2)


def j_pow(k: int) -> FieldElem:
    """j**k for any integer k (period 3)."""
    return _J_POWERS[k % 3]
