"""Exact dense 3x3 matrices over the scalar field.

Carries the unit bases, the diagonal/step operators and the rotation
matrices; provides the determinant, the Hermitian (Hilbert-Schmidt)
pairing and orthogonal-projection decomposition used to extract
structure constants.

The dagger uses only the j-conjugation: the radicals sqrt2, sqrt3,
sqrt6 are real numbers and are left untouched.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import ZERO, ONE, FieldElem

__all__ = [
    "Mat3",
    "NotInSpanError",
    "SingularGramError",
    "hs_inner",
    "decompose_in_basis",
]


class NotInSpanError(Exception):
    """Projection coefficients failed to reconstruct the matrix."""


class SingularGramError(Exception):
    """A basis element has vanishing self inner product."""


class Mat3:
    """Immutable 3x3 matrix of FieldElem, row-major."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[FieldElem]):
        if len(entries) != 9:
            raise ValueError("Mat3 needs 9 entries")
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Mat3 is immutable")

    # ------------------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[FieldElem]]) -> "Mat3":
        return cls([e for row in rows for e in row])

    @classmethod
    def zero(cls) -> "Mat3":
        return _ZERO3

    @classmethod
    def identity(cls) -> "Mat3":
        return _ID3

    @classmethod
    def diag(cls, a: FieldElem, b: FieldElem, c: FieldElem) -> "Mat3":
        return cls([a, ZERO, ZERO, ZERO, b, ZERO, ZERO, ZERO, c])

    @classmethod
    def scalar(cls, c: FieldElem) -> "Mat3":
        return cls.diag(c, c, c)

    def __getitem__(self, ij: tuple[int, int]) -> FieldElem:
        i, j = ij
        return self.entries[3 * i + j]

    # ------------------------------------------------------------------
    def __add__(self, other: "Mat3") -> "Mat3":
        return Mat3([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Mat3") -> "Mat3":
        return Mat3([a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Mat3":
        return Mat3([-a for a in self.entries])

    def scale(self, c: FieldElem) -> "Mat3":
        return Mat3([c * a for a in self.entries])

    def __mul__(self, other: "Mat3") -> "Mat3":
        if not isinstance(other, Mat3):
            return NotImplemented
        a, b = self.entries, other.entries
        out = []
        for i in (0, 3, 6):
            for j in (0, 1, 2):
                out.append(a[i] * b[j] + a[i + 1] * b[3 + j] + a[i + 2] * b[6 + j])
        return Mat3(out)

    def __pow__(self, n: int) -> "Mat3":
        result = _ID3
        for _ in range(n):
            result = result * self
        return result

    # ------------------------------------------------------------------
    def transpose(self) -> "Mat3":
        e = self.entries
        return Mat3([e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]])

    def conjugate_j(self) -> "Mat3":
        return Mat3([a.conjugate_j() for a in self.entries])

    def dagger(self) -> "Mat3":
        """Conjugate transpose, conjugating only j (radicals are real)."""
        return self.transpose().conjugate_j()

    def trace(self) -> FieldElem:
        e = self.entries
        return e[0] + e[4] + e[8]

    def det(self) -> FieldElem:
        """Exact determinant by cofactor expansion along the first row."""
        e = self.entries
        return (
            e[0] * (e[4] * e[8] - e[5] * e[7])
            - e[1] * (e[3] * e[8] - e[5] * e[6])
            + e[2] * (e[3] * e[7] - e[4] * e[6])
        )

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def commutes_with(self, other: "Mat3") -> bool:
        return self * other == other * self

    # ------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, Mat3) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        rows = []
        for i in range(3):
            rows.append("[" + ", ".join(str(self[i, j]) for j in range(3)) + "]")
        return "[" + "; ".join(rows) + "]"

    def __repr__(self) -> str:
        return f"Mat3({self})"

    def to_json(self) -> list[list[list[str]]]:
        return [[self[i, j].to_json() for j in range(3)] for i in range(3)]

    @classmethod
    def from_json(cls, data) -> "Mat3":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise ValueError("Mat3 JSON must be a 3x3 nested array")
        return cls([FieldElem.from_json(c) for row in data for c in row])


_ZERO3 = Mat3([ZERO] * 9)
_ID3 = Mat3([ONE, ZERO, ZERO, ZERO, ONE, ZERO, ZERO, ZERO, ONE])


def hs_inner(a: Mat3, b: Mat3) -> FieldElem:
    """Hilbert-Schmidt pairing tr(a^dagger * b), exact."""
    total = ZERO
    for x, y in zip(a.entries, b.entries):
        if x.is_zero() or y.is_zero():
            continue
        total = total + x.conjugate_j() * y
    return total


def decompose_in_basis(
    m: Mat3, basis: Sequence[Mat3], gram: Sequence[FieldElem]
) -> tuple[FieldElem, ...]:
    """Coefficients of m in an hs-orthogonal basis, by projection.

    Raises SingularGramError on a zero gram entry and NotInSpanError if
    the projected coefficients fail to rebuild m exactly (which cannot
    happen for a true basis; it guards fixture and construction typos).
    """
    if any(g.is_zero() for g in gram):
        raise SingularGramError("basis has a zero-norm element")
    coeffs = tuple(hs_inner(b, m) / g for b, g in zip(basis, gram))
    rebuilt = Mat3.zero()
    for c, b in zip(coeffs, basis):
        if not c.is_zero():
            rebuilt = rebuilt + b.scale(c)
    if rebuilt != m:
        raise NotInSpanError("matrix is not in the span of the given basis")
    return coeffs
