"""The two concrete operator families and the conjugation maps.

* The nonion basis: nine 3x3 unit matrices q0..q8 (clock/shift family)
  that pairwise commute up to a power of j and cube to the identity.
  q1 is the cyclic shift, q7 = diag(j, j^2, 1), q8 = diag(j^2, j, 1).
* The real step/diagonal basis ("TU3"): six elementary step matrices
  Q1..Q6 plus the radical-normalised diagonals Q7, Q8 and
  Q0 = identity/sqrt3, orthonormal under the Hilbert-Schmidt pairing.
* The index-cycling conjugation (a homomorphism) and the phase twist
  used to build the twisted copies of a coordinate element.

Several printed phase conventions for the prefactored units disagree;
this module fixes the pure-matrix convention above and exposes a
claimed-phase table so the deviations can be reported instead of
silently reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .field import J, J2, ONE, SQRT2, SQRT3, ZERO, FieldElem, j_pow, rational
from .matrix import Mat3, decompose_in_basis, hs_inner

__all__ = [
    "NonionBasis",
    "TU3Basis",
    "PhaseTwist",
    "nonion_basis",
    "tu3_basis",
    "cyclic_relabel",
    "pair_phase_matrix",
    "phase_twist",
    "tilde_composite",
    "tilde_fixture_check",
]

# Phase twist exponents: 1 at index 0; j at 7,1,2,3; j^2 at 8,4,5,6.
TWIST_EXPONENTS = (0, 1, 1, 1, 2, 2, 2, 1, 2)

# Claimed tilde phase per basis element (index -> j-exponent), as printed
# alongside the twisted displays.  The composite relabel+twist operation
# reproduces only some of these on the pure matrices; see
# tilde_fixture_check.
CLAIMED_TILDE_EXPONENTS = (0, 1, 1, 1, 2, 2, 2, 1, 2)


@dataclass(frozen=True)
class NonionBasis:
    """The nine unit matrices with their grading and product table."""

    elements: tuple[Mat3, ...]
    grade: tuple[int, ...]  # index -> 0|1|2
    # product_table[a][b] = (s, c) with q_a*q_b = j^s * q_c
    product_table: tuple[tuple[tuple[int, int], ...], ...]
    grams: tuple[FieldElem, ...] = field(default=(), repr=False)
    name: str = "nonion"


@dataclass(frozen=True)
class TU3Basis:
    """Step operators Q1..Q6 and diagonals Q7, Q8, Q0 (orthonormal)."""

    elements: tuple[Mat3, ...]
    grams: tuple[FieldElem, ...] = field(default=(), repr=False)
    name: str = "tu3"


@dataclass(frozen=True)
class PhaseTwist:
    """Per-index phases defining the twisted copies of a coordinate element.

    Applying the twist three times is the identity; it is a data table,
    not an algebra automorphism (the phases fail multiplicativity, e.g.
    on the pair (7, 1)).
    """

    exponents: tuple[int, ...] = TWIST_EXPONENTS

    @property
    def phases(self) -> tuple[FieldElem, ...]:
        return tuple(j_pow(e) for e in self.exponents)

    def power(self, k: int) -> tuple[int, ...]:
        return tuple((e * k) % 3 for e in self.exponents)


def _m(rows) -> Mat3:
    return Mat3.from_rows([[_scal(x) for x in row] for row in rows])


def _scal(x) -> FieldElem:
    if isinstance(x, FieldElem):
        return x
    return {0: ZERO, 1: ONE, "j": J, "j2": J2}[x]


@lru_cache(maxsize=1)
def nonion_basis() -> NonionBasis:
    """Construct and validate the nine unit matrices."""
    q = (
        Mat3.identity(),
        _m([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        _m([[0, 1, 0], [0, 0, "j"], ["j2", 0, 0]]),
        _m([[0, 1, 0], [0, 0, "j2"], ["j", 0, 0]]),
        _m([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        _m([[0, 0, "j"], [1, 0, 0], [0, "j2", 0]]),
        _m([[0, 0, "j2"], [1, 0, 0], [0, "j", 0]]),
        Mat3.diag(J, J2, ONE),
        Mat3.diag(J2, J, ONE),
    )
    grade = (0, 1, 1, 1, 2, 2, 2, 0, 0)
    three = rational(3)

    # Hilbert-Schmidt orthogonality with norm 3, cube law, unit determinant.
    for a in range(9):
        for b in range(9):
            expect = three if a == b else ZERO
            if hs_inner(q[a], q[b]) != expect:
                raise AssertionError(f"nonion orthogonality fails at ({a},{b})")
        if q[a] ** 3 != Mat3.identity():
            raise AssertionError(f"nonion cube law fails at {a}")
        if q[a].det() != ONE:
            raise AssertionError(f"nonion determinant fails at {a}")

    # Closure: q_a*q_b = j^s * q_c with the grading adding mod 3.
    table = []
    for a in range(9):
        row = []
        for b in range(9):
            prod = q[a] * q[b]
            hit = None
            for c in range(9):
                coeff = hs_inner(q[c], prod) / three
                if coeff.is_zero():
                    continue
                for s in range(3):
                    if coeff == j_pow(s):
                        hit = (s, c)
                        break
                break
            if hit is None or q[hit[1]].scale(j_pow(hit[0])) != prod:
                raise AssertionError(f"nonion closure fails at ({a},{b})")
            if (grade[a] + grade[b]) % 3 != grade[hit[1]]:
                raise AssertionError(f"nonion grading fails at ({a},{b})")
            row.append(hit)
        table.append(tuple(row))

    return NonionBasis(q, grade, tuple(table), grams=(three,) * 9)


@lru_cache(maxsize=1)
def tu3_basis() -> TU3Basis:
    """Construct and validate the orthonormal step/diagonal basis."""
    inv_sqrt2 = SQRT2 / rational(2)
    inv_sqrt3 = SQRT3 / rational(3)
    inv_sqrt6 = SQRT2 * SQRT3 / rational(6)
    sqrt_2_3 = SQRT2 * SQRT3 / rational(3)  # sqrt(2/3) = sqrt6/3

    def step(i: int, j: int) -> Mat3:
        ent = [ZERO] * 9
        ent[3 * i + j] = ONE
        return Mat3(ent)

    elements = (
        Mat3.scalar(inv_sqrt3),
        step(0, 1),
        step(1, 2),
        step(2, 0),
        step(1, 0),
        step(2, 1),
        step(0, 2),
        Mat3.diag(inv_sqrt6, inv_sqrt6, -sqrt_2_3),
        Mat3.diag(inv_sqrt2, -inv_sqrt2, ZERO),
    )
    for a in range(9):
        for b in range(9):
            expect = ONE if a == b else ZERO
            if hs_inner(elements[a], elements[b]) != expect:
                raise AssertionError(f"tu3 orthonormality fails at ({a},{b})")
    return TU3Basis(elements, grams=(ONE,) * 9)


def cyclic_relabel(m: Mat3) -> Mat3:
    """Index cycling {1->2, 2->3, 3->1}: out[i][j] = in[i-1][j-1] (mod 3)."""
    return Mat3.from_rows(
        [[m[(i - 1) % 3, (j - 1) % 3] for j in range(3)] for i in range(3)]
    )


def pair_phase_matrix(basis: NonionBasis) -> tuple[tuple[int, ...], ...]:
    """omega(a, b) in {0,1,2} with q_a*q_b = j^omega * q_b*q_a, validated."""
    q = basis.elements
    out = []
    for a in range(9):
        row = []
        for b in range(9):
            ab, ba = q[a] * q[b], q[b] * q[a]
            for s in range(3):
                if ab == ba.scale(j_pow(s)):
                    row.append(s)
                    break
            else:  # pragma: no cover - closure guarantees a phase
                raise AssertionError(f"pair ({a},{b}) is not j-commuting")
        out.append(tuple(row))
    return tuple(out)


def phase_twist() -> PhaseTwist:
    return PhaseTwist()


def tilde_composite(m: Mat3) -> Mat3:
    """Index-cycling followed by the per-component phase twist."""
    basis = nonion_basis()
    coeffs = decompose_in_basis(cyclic_relabel(m), basis.elements, basis.grams)
    out = Mat3.zero()
    for c, e, k in zip(coeffs, basis.elements, TWIST_EXPONENTS):
        if not c.is_zero():
            out = out + e.scale(c * j_pow(k))
    return out


def tilde_fixture_check() -> list[dict]:
    """Compare the composite conjugation against the claimed phases.

    Returns one record per basis index with the claimed j-exponent and
    whether the composite reproduces it on the pure matrices.
    """
    basis = nonion_basis()
    out = []
    for a, claimed in enumerate(CLAIMED_TILDE_EXPONENTS):
        got = tilde_composite(basis.elements[a])
        matches = got == basis.elements[a].scale(j_pow(claimed))
        out.append({"index": a, "claimed_exponent": claimed, "matches": matches})
    return out
