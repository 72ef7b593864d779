"""Exact ring arithmetic for scaled simplex numbers.

A triangle scaled by an integer factor n splits into n(n+1)/2 upward and
n(n-1)/2 downward unit triangles; a scaled tetrahedron splits into three
kinds of slab pieces.  Treating the two (three) unit shapes as basis
vectors gives small commutative rings in which the scaled shapes multiply
like the integers they came from.  Every ring here also has an orthogonal
idempotent basis (A_m, ..., A_1, optionally A_0) that diagonalises the
product into a componentwise one.

All coefficients are exact rationals (`fractions.Fraction`).  Floats are
rejected at the boundary; nothing in this package computes with them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


class RepresentationError(ValueError):
    """Operands live in different representations (basis, dim, or A_0 flag)."""


def _frac(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(value)


def _int_scale(n) -> int:
    """Enforce an integer scale at API boundaries (denominator-one check)."""
    if isinstance(n, bool):
        raise TypeError("scale must be an integer, not bool")
    if isinstance(n, int):
        return n
    if isinstance(n, Fraction) and n.denominator == 1:
        return n.numerator
    raise TypeError(f"scale must be an integer, got {n!r}")


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


@dataclass(frozen=True)
class GeomElement2:
    """x copies of the unit up-triangle plus y copies of the unit down-triangle.

    The scaled triangle of side n is (n(n+1)/2, n(n-1)/2); negative sides
    give the reflected shape.  Multiplication is the closed law
    (x1, y1) * (x2, y2) = (x1*x2 + y1*y2, x1*y2 + x2*y1), under which the
    side-n embedding is multiplicative: embed2(n) * embed2(m) = embed2(n*m).
    """

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))

    def __add__(self, other):
        self._check(other)
        return GeomElement2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        self._check(other)
        return GeomElement2(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return GeomElement2(-self.x, -self.y)

    def __mul__(self, other):
        if _is_scalar(other):
            return GeomElement2(self.x * other, self.y * other)
        self._check(other)
        return mul2(self, other)

    __rmul__ = __mul__

    def _check(self, other):
        if isinstance(other, float):
            raise TypeError("floating point operands are not allowed")
        if not isinstance(other, GeomElement2):
            raise RepresentationError(
                f"expected a 2-d geometric element, got {type(other).__name__}"
            )

    def is_zero(self) -> bool:
        return not self.x and not self.y


@dataclass(frozen=True)
class GeomElement3:
    """Tetrahedron-ring element over the basis (<1>, <D1>, <e1>).

    <1> is the unit tetrahedron, <D1> the middle slab piece, <e1> the
    reflected unit.  The product table is <1> neutral, <e1>^2 = <1>,
    <e1><D1> = <D1>, <D1>^2 = 4<1> + 2<D1> + 4<e1>.
    """

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))
        object.__setattr__(self, "z", _frac(self.z))

    def __add__(self, other):
        self._check(other)
        return GeomElement3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        self._check(other)
        return GeomElement3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return GeomElement3(-self.x, -self.y, -self.z)

    def __mul__(self, other):
        if _is_scalar(other):
            return GeomElement3(self.x * other, self.y * other, self.z * other)
        self._check(other)
        return mul3(self, other)

    __rmul__ = __mul__

    def _check(self, other):
        if isinstance(other, float):
            raise TypeError("floating point operands are not allowed")
        if not isinstance(other, GeomElement3):
            raise RepresentationError(
                f"expected a 3-d geometric element, got {type(other).__name__}"
            )

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)


@dataclass(frozen=True)
class OrthElement:
    """Element in the orthogonal idempotent basis A_dim, ..., A_1 (, A_0).

    coeffs are ordered from A_dim down to A_1, with the A_0 coefficient
    appended when has_a0 is set.  Addition and multiplication are both
    componentwise; the side-n shape has coefficients (n^dim, ..., n (, 1)).
    """

    dim: int
    has_a0: bool
    coeffs: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        coeffs = tuple(_frac(c) for c in self.coeffs)
        if len(coeffs) != self.dim + (1 if self.has_a0 else 0):
            raise ValueError(
                f"expected {self.dim + (1 if self.has_a0 else 0)} coefficients, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def _check(self, other):
        if isinstance(other, float):
            raise TypeError("floating point operands are not allowed")
        if not isinstance(other, OrthElement):
            raise RepresentationError(
                f"expected an orthogonal element, got {type(other).__name__}"
            )
        if other.dim != self.dim or other.has_a0 != self.has_a0:
            raise RepresentationError(
                f"orthogonal elements disagree: dim {self.dim} vs {other.dim}, "
                f"A_0 {self.has_a0} vs {other.has_a0}"
            )

    def __add__(self, other):
        self._check(other)
        return OrthElement(
            self.dim, self.has_a0,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other):
        self._check(other)
        return OrthElement(
            self.dim, self.has_a0,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        return OrthElement(self.dim, self.has_a0, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if _is_scalar(other):
            return OrthElement(
                self.dim, self.has_a0, tuple(c * other for c in self.coeffs)
            )
        self._check(other)
        return orth_mul(self, other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @staticmethod
    def zero(dim: int, has_a0: bool = False) -> "OrthElement":
        return OrthElement(dim, has_a0, (0,) * (dim + (1 if has_a0 else 0)))


def mul2(a: GeomElement2, b: GeomElement2) -> GeomElement2:
    """Closed product on 2-d geometric pairs."""
    return GeomElement2(a.x * b.x + a.y * b.y, a.x * b.y + b.x * a.y)


def mul3(a: GeomElement3, b: GeomElement3) -> GeomElement3:
    """Bilinear extension of the tetrahedron product table."""
    yy = a.y * b.y
    return GeomElement3(
        a.x * b.x + 4 * yy + a.z * b.z,
        a.x * b.y + b.x * a.y + a.y * b.z + b.y * a.z + 2 * yy,
        a.x * b.z + b.x * a.z + 4 * yy,
    )


def orth_mul(a: OrthElement, b: OrthElement) -> OrthElement:
    """Componentwise product; dim and A_0 flag must agree."""
    a._check(b)
    return OrthElement(
        a.dim, a.has_a0, tuple(p * q for p, q in zip(a.coeffs, b.coeffs))
    )


def embed2(n) -> GeomElement2:
    """Side-n triangle as a geometric pair (n(n+1)/2, n(n-1)/2)."""
    n = _int_scale(n)
    return GeomElement2(n * (n + 1) // 2, n * (n - 1) // 2)


def embed20(n) -> OrthElement:
    """Side-n triangle carrying its boundary: (n^2, n, 1) over A_2, A_1, A_0."""
    n = _int_scale(n)
    return OrthElement(2, True, (n * n, n, 1))


def embed3(n) -> GeomElement3:
    """Side-n tetrahedron over (<1>, <D1>, <e1>).

    The reflected shapes come out automatically: embed3(-n) is the negated
    coefficient-reversal of embed3(n), e.g. embed3(-1) = (0, 0, -1).
    """
    n = _int_scale(n)
    return GeomElement3(
        n * (n + 1) * (n + 2) // 6,
        (n - 1) * n * (n + 1) // 6,
        (n - 2) * (n - 1) * n // 6,
    )


def to_orth(elem) -> OrthElement:
    """Change of basis from a geometric element to the orthogonal one.

    2-d: A_2 = (<1> + <-1>)/2, A_1 = (<1> - <-1>)/2, so (x, y) -> (x+y, x-y).
    3-d: <1> -> (1,1,1), <D1> -> (4,0,-2), <e1> -> (1,-1,1).
    """
    if isinstance(elem, GeomElement2):
        return OrthElement(2, False, (elem.x + elem.y, elem.x - elem.y))
    if isinstance(elem, GeomElement3):
        x, y, z = elem.x, elem.y, elem.z
        return OrthElement(3, False, (x + 4 * y + z, x - z, x - 2 * y + z))
    raise RepresentationError(f"cannot convert {type(elem).__name__} to the orthogonal basis")


def from_orth(elem: OrthElement):
    """Inverse of to_orth for plain 2-d and 3-d orthogonal elements."""
    if not isinstance(elem, OrthElement):
        raise RepresentationError(f"expected an orthogonal element, got {type(elem).__name__}")
    if elem.has_a0:
        raise RepresentationError("elements with an A_0 component have no plain geometric form")
    if elem.dim == 2:
        a2, a1 = elem.coeffs
        return GeomElement2((a2 + a1) / 2, (a2 - a1) / 2)
    if elem.dim == 3:
        a3, a2, a1 = elem.coeffs
        return GeomElement3(
            a3 / 6 + a2 / 2 + a1 / 3,
            a3 / 6 - a1 / 6,
            a3 / 6 - a2 / 2 + a1 / 3,
        )
    raise RepresentationError(f"no geometric basis in dimension {elem.dim}")


# Named basis elements.
ONE2 = GeomElement2(1, 0)            # <1>, the neutral element
DOWN_UNIT = GeomElement2(0, 1)       # <-1>, the reflected unit; squares to <1>
ONE3 = GeomElement3(1, 0, 0)         # <1>
D_UNIT = GeomElement3(0, 1, 0)       # <D1>
E_UNIT = GeomElement3(0, 0, 1)       # <e1> = -embed3(-1)
# The other two sign patterns over the 3-d idempotents; together with E_UNIT
# they satisfy e*f*g = -<1> and give the alternative presentation of the ring.
F_UNIT = from_orth(OrthElement(3, False, (-1, 1, 1)))
G_UNIT = from_orth(OrthElement(3, False, (1, 1, -1)))


@dataclass(frozen=True)
class SimplexLiteral:
    """A single written symbol <n>, <n>_0 or <n>_10, possibly negated.

    dim is the simplex dimension (1 for segments), scale the integer inside
    the brackets, sign +1/-1 for a leading minus written outside the
    brackets, and extended marks the boundary-carrying family (the _0 and
    _10 forms).
    """

    dim: int
    scale: int
    sign: int = 1
    extended: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("literal dimension must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("literal sign must be +1 or -1")
        object.__setattr__(self, "scale", _int_scale(self.scale))


def embed_literal(lit: SimplexLiteral):
    """Ring value of a literal in its natural representation.

    Plain 2-d and 3-d literals land in the geometric bases; everything else
    (extended families, segments, higher dimensions) lands in the
    orthogonal basis with coefficients (n^m, ..., n (, 1)).
    """
    n = lit.scale
    if lit.dim == 2 and not lit.extended:
        value = embed2(n)
    elif lit.dim == 3 and not lit.extended:
        value = embed3(n)
    elif lit.dim == 2 and lit.extended:
        value = embed20(n)
    else:
        value = literal_orth(lit, signed=False)
    return -value if lit.sign < 0 else value


def literal_orth(lit: SimplexLiteral, signed: bool = True) -> OrthElement:
    """Orthogonal-basis value of a literal: powers of the scale."""
    powers = [lit.scale ** i for i in range(lit.dim, 0, -1)]
    if lit.extended:
        powers.append(1)
    value = OrthElement(lit.dim, lit.extended, tuple(powers))
    return -value if signed and lit.sign < 0 else value


def series_partial_sum(terms: int) -> OrthElement:
    """Partial sum of the shrinking-triangle series <-1/2> + 3<-1/4> + 9<-1/8> + ...

    Term j contributes 3^(j-1) copies of the triangle scaled by -1/2^j,
    i.e. 3^(j-1) * ((1/4^j) A_2 - (1/2^j) A_1).  The A_2 coefficient of the
    N-term sum is exactly 1 - (3/4)^N; the A_1 coefficient is 1 - (3/2)^N,
    whose magnitude grows without bound, so only partial sums exist here.
    """
    if not isinstance(terms, int) or terms < 1:
        raise ValueError("terms must be a positive integer")
    a2 = Fraction(0)
    a1 = Fraction(0)
    for j in range(1, terms + 1):
        weight = 3 ** (j - 1)
        a2 += Fraction(weight, 4 ** j)
        a1 -= Fraction(weight, 2 ** j)
    return OrthElement(2, False, (a2, a1))


def _frac_str(value: Fraction) -> str:
    return str(value)


def element_to_json(elem) -> dict:
    """JSON-ready dict for any ring element; fractions become "p/q" strings."""
    if isinstance(elem, GeomElement2):
        return {
            "basis": "geom2",
            "dim": 2,
            "a0": False,
            "coeffs": [_frac_str(elem.x), _frac_str(elem.y)],
        }
    if isinstance(elem, GeomElement3):
        return {
            "basis": "geom3",
            "dim": 3,
            "a0": False,
            "coeffs": [_frac_str(elem.x), _frac_str(elem.y), _frac_str(elem.z)],
        }
    if isinstance(elem, OrthElement):
        return {
            "basis": "orth",
            "dim": elem.dim,
            "a0": elem.has_a0,
            "coeffs": [_frac_str(c) for c in elem.coeffs],
        }
    raise TypeError(f"not a ring element: {type(elem).__name__}")


def element_from_json(data: dict):
    """Inverse of element_to_json."""
    basis = data["basis"]
    coeffs = [Fraction(c) for c in data["coeffs"]]
    if basis == "geom2":
        return GeomElement2(*coeffs)
    if basis == "geom3":
        return GeomElement3(*coeffs)
    if basis == "orth":
        return OrthElement(data["dim"], bool(data.get("a0", False)), tuple(coeffs))
    raise ValueError(f"unknown basis {basis!r}")
