"""Eulerian numbers, Worpitzky sums, and n-dimensional slice decompositions.

The m-dimensional scaled simplex splits into m kinds of slice pieces; the
k-th piece occurs (n+m-k choose m) times in the side-n shape and the unit
cube splits into the pieces with multiplicities given by the Eulerian
numbers.  That is all the combinatorics the higher-dimensional ring needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .ring import OrthElement


@lru_cache(maxsize=None)
def eulerian_row(m: int) -> tuple:
    """Row m of the Eulerian triangle, entries A(m, 0) .. A(m, m-1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return (1,)
    prev = eulerian_row(m - 1)

    def at(k):
        return prev[k] if 0 <= k < m - 1 else 0

    return tuple((m - k) * at(k - 1) + (k + 1) * at(k) for k in range(m))


def eulerian(m: int, k: int, method: str = "recurrence") -> int:
    """A(m, k) by the recurrence or by the explicit alternating sum.

    Out-of-range k gives 0.  Both methods agree everywhere; keeping the
    second one callable is what lets tests pit them against each other.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if k < 0 or k >= m:
        return 0
    if method == "recurrence":
        return eulerian_row(m)[k]
    if method == "explicit":
        return sum((-1) ** i * comb(m + 1, i) * (k + 1 - i) ** m for i in range(k + 1))
    raise ValueError(f"unknown method {method!r}")


def falling_factorial(x, m: int):
    """x(x-1)...(x-m+1); m = 0 gives 1.  Works for ints and Fractions."""
    if m < 0:
        raise ValueError("m must be >= 0")
    result = x ** 0  # 1 in x's own type
    for i in range(m):
        result *= x - i
    return result


def binomial(a: int, m: int) -> int:
    """(a choose m) via the falling factorial; a may be any integer."""
    num = falling_factorial(a, m)
    den = factorial(m)
    assert num % den == 0
    return num // den


def worpitzky(n: int, m: int) -> int:
    """n^m as an Eulerian-weighted binomial sum, computed both ways.

    Form one sums A(m,k) * C(n+k, m) over k = 0..m-1; form two re-indexes
    through the row symmetry as sum of A(m,k-1) * (n+m-k)_falling(m) / m!.
    Both must agree (asserted) and the common value is returned.
    """
    row = eulerian_row(m)
    first = sum(row[k] * binomial(n + k, m) for k in range(m))
    fact = factorial(m)
    second = 0
    for k in range(1, m + 1):
        num = falling_factorial(n + m - k, m)
        assert num % fact == 0
        second += row[k - 1] * (num // fact)
    assert first == second, f"the two summation forms disagree at n={n}, m={m}"
    return first


def slice_volumes(m: int) -> tuple:
    """Volumes V(m, k) = A(m, k)/m! of the m cube slices; they sum to 1."""
    fact = factorial(m)
    return tuple(Fraction(a, fact) for a in eulerian_row(m))


@dataclass(frozen=True)
class SliceBasisVector:
    """Multiplicities of the m slice pieces inside a scaled m-simplex."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if len(self.coeffs) != self.dim:
            raise ValueError(
                f"need {self.dim} slice coefficients, got {len(self.coeffs)}"
            )

    def volume(self):
        """Total volume, normalising the k-th unit piece to A(m, k-1).

        With that normalisation the side-n simplex has volume exactly n^m.
        """
        row = eulerian_row(self.dim)
        return sum(c * a for c, a in zip(self.coeffs, row))


def slice_decomposition(n: int, m: int) -> SliceBasisVector:
    """Side-n simplex over the slice pieces: piece k occurs C(n+m-k, m) times."""
    if m < 1:
        raise ValueError("m must be >= 1")
    fact = factorial(m)
    coeffs = tuple(Fraction(falling_factorial(n + m - k, m), fact) for k in range(1, m + 1))
    return SliceBasisVector(m, coeffs)


def _poly_mul_linear(coeffs: list, a: int) -> list:
    """Multiply a little-endian polynomial by (x + a)."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i] += c * a
        out[i + 1] += c
    return out


def orthogonal_basis_matrix(m: int) -> tuple:
    """Change of basis from slice pieces to the orthogonal idempotents.

    Row j (ordered A_m down to A_1) holds the slice-piece coefficients of
    A_j, read off by expanding each piece multiplicity C(n+m-k, m) as a
    polynomial in n.  Applying the matrix to slice_decomposition(n, m)
    yields the power vector (n^m, ..., n).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    fact = factorial(m)
    # columns[k][i] = coefficient of n^i in C(n+m-k-? ...): expand the product
    columns = []
    for k in range(1, m + 1):
        poly = [Fraction(1)]
        for j in range(m):
            poly = _poly_mul_linear(poly, m - k - j)
        columns.append([c / fact for c in poly])
    return tuple(
        tuple(columns[k][j] for k in range(m))
        for j in range(m, 0, -1)
    )


def apply_basis_matrix(matrix, element: OrthElement) -> SliceBasisVector:
    """Decompose an orthogonal-basis element into unit slice pieces.

    Row j of the matrix is the slice combination whose orthogonal
    coordinates are the j-th unit vector, so the slice coefficients of
    `element` are the transpose of the matrix applied to its coordinates.
    """
    if element.has_a0:
        raise ValueError("slice decomposition needs a boundary-free element")
    m = element.dim
    coeffs = tuple(
        sum(matrix[j][k] * element.coeffs[j] for j in range(m))
        for k in range(m)
    )
    return SliceBasisVector(m, coeffs)


def embed_nd(n: int, m: int) -> OrthElement:
    """Side-n m-simplex in the orthogonal basis: (n^m, ..., n)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return OrthElement(m, False, tuple(n ** i for i in range(m, 0, -1)))
