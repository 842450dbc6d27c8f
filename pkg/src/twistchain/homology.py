"""Homology actions of chain twist words and first homology of their mapping tori.

The symplectic basis of H_1 of the closed genus-g surface is ordered
x1, y1, ..., xg, yg with <x_i, y_i> = 1.  Chain curves carry the classes

    [a1] = x1,   [a_{2i}] = y_i,   [a_{2i+1}] = x_i + x_{i+1},   [a_{2g+1}] = x_g,

so consecutive classes pair to +-1 and all other pairs to 0.  A right-handed
twist along c acts by the transvection v -> v + <v, [c]>[c].  A puncture is
ignored throughout: H_1 of the once-punctured surface is identified with H_1
of the closed one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

from .abelian import AbelianGroupInvariant, presentation_cokernel
from .intmat import identity, matmul, matvec, mat_sub, zero_matrix
from .words import TwistWord, curve_name

__all__ = [
    "SymplecticBasis",
    "symplectic_pairing",
    "chain_class",
    "transvection_matrix",
    "twist_power_matrix",
    "word_action",
    "char_poly",
    "cyclotomic_polynomial",
    "CBVerdict",
    "casson_bleiler_check",
    "mapping_torus_h1",
    "surgered_h1",
    "FramingConvention",
    "FRAMING_CONVENTIONS",
    "ensure_rational",
]

RationalLike = Union[Fraction, int, tuple]


@dataclass(frozen=True)
class SymplecticBasis:
    """The ordered basis x1, y1, ..., xg, yg of H_1(Sigma_g; Z)."""

    genus: int

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError(f"genus must be an integer >= 1, got {self.genus!r}")

    @property
    def dimension(self) -> int:
        return 2 * self.genus

    def labels(self) -> list[str]:
        out = []
        for i in range(1, self.genus + 1):
            out += [f"x{i}", f"y{i}"]
        return out

    def form(self) -> list[list[int]]:
        """The intersection form as a matrix J with <u, v> = u^T J v."""
        j = zero_matrix(self.dimension, self.dimension)
        for i in range(self.genus):
            j[2 * i][2 * i + 1] = 1
            j[2 * i + 1][2 * i] = -1
        return j


def symplectic_pairing(u: Sequence[int], v: Sequence[int]) -> int:
    """Algebraic intersection number of two homology classes."""
    if len(u) != len(v) or len(u) % 2 != 0:
        raise ValueError("pairing needs two vectors of equal even length")
    total = 0
    for i in range(0, len(u), 2):
        total += u[i] * v[i + 1] - u[i + 1] * v[i]
    return total


def chain_class(basis: SymplecticBasis, index: int) -> list[int]:
    """Homology class of the chain curve a_index."""
    g = basis.genus
    if not 1 <= index <= 2 * g + 1:
        raise ValueError(f"curve index {index} outside 1..{2 * g + 1} for genus {g}")
    v = [0] * basis.dimension
    if index == 1:
        v[0] = 1
    elif index == 2 * g + 1:
        v[2 * (g - 1)] = 1
    elif index % 2 == 0:
        k = index // 2
        v[2 * (k - 1) + 1] = 1
    else:
        k = (index - 1) // 2
        v[2 * (k - 1)] = 1
        v[2 * k] = 1
    return v


def _transvection_nilpotent(basis: SymplecticBasis, index: int) -> list[list[int]]:
    # N with T = I + N and N^2 = 0; N[i][j] = c[i] * (J c)[j].
    c = chain_class(basis, index)
    jc = matvec(basis.form(), c)
    # <v, c> = v . (J c), so T(v) = v + (v . Jc) c.
    return [[ci * jcj for jcj in jc] for ci in c]


def transvection_matrix(basis: SymplecticBasis, index: int) -> list[list[int]]:
    """Matrix of the twist t_{a_index} acting on column vectors."""
    return twist_power_matrix(basis, index, 1)


def twist_power_matrix(basis: SymplecticBasis, index: int, exponent: int) -> list[list[int]]:
    """Matrix of t_{a_index}^exponent; transvections satisfy T^e = I + eN."""
    n = _transvection_nilpotent(basis, index)
    m = identity(basis.dimension)
    for i in range(basis.dimension):
        for j in range(basis.dimension):
            m[i][j] += exponent * n[i][j]
    return m


def word_action(word: TwistWord) -> list[list[int]]:
    """Symplectic matrix of a twist word; the rightmost letter acts first."""
    basis = SymplecticBasis(word.surface.genus)
    m = identity(basis.dimension)
    for letter in word.letters:
        m = matmul(m, twist_power_matrix(basis, letter.curve, letter.exponent))
    return m


def char_poly(matrix: list[list[int]]) -> list[int]:
    """Characteristic polynomial det(tI - M), little-endian coefficients.

    Faddeev-LeVerrier recursion; every division is exact for an integer
    matrix.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("characteristic polynomial needs a square matrix")
    coeffs_big = [1]
    a = [row[:] for row in matrix]
    for k in range(1, n + 1):
        if k > 1:
            prev = coeffs_big[-1]
            shifted = [row[:] for row in a]
            for i in range(n):
                shifted[i][i] += prev
            a = matmul(matrix, shifted)
        trace = sum(a[i][i] for i in range(n))
        if trace % k != 0:
            raise AssertionError("Faddeev-LeVerrier division was not exact")
        coeffs_big.append(-(trace // k))
    return list(reversed(coeffs_big))


def _poly_degree(p: Sequence[int]) -> int:
    d = len(p) - 1
    while d > 0 and p[d] == 0:
        d -= 1
    return d


def _poly_divmod_monic(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # Division by a monic divisor stays in integer coefficients.
    dn, dd = _poly_degree(num), _poly_degree(den)
    if den[dd] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num[: dn + 1])
    if dn < dd:
        return [0], rem
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        coeff = rem[k + dd]
        quot[k] = coeff
        if coeff:
            for i in range(dd + 1):
                rem[k + i] -= coeff * den[i]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _poly_is_zero(p: Sequence[int]) -> bool:
    return all(c == 0 for c in p)


def _euler_phi(n: int) -> int:
    result = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, little-endian.

    Computed as (x^n - 1) divided by the cyclotomic polynomials of the
    proper divisors of n; all divisions are exact.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            quot, rem = _poly_divmod_monic(num, list(cyclotomic_polynomial(d)))
            if not _poly_is_zero(rem):
                raise AssertionError(f"cyclotomic division by phi_{d} left a remainder")
            num = quot
    return tuple(num)


def _cyclotomics_up_to_degree(dmax: int):
    # phi(n) >= sqrt(n/2), so phi(n) <= dmax forces n <= 2 dmax^2.
    for n in range(1, 2 * dmax * dmax + 1):
        if _euler_phi(n) <= dmax:
            yield n, cyclotomic_polynomial(n)


def _is_polynomial_in_power(p: Sequence[int], k: int) -> bool:
    return all(c == 0 for i, c in enumerate(p) if i % k != 0)


def _is_irreducible_over_q(p: Sequence[int]) -> bool:
    # Exact factorisation; degrees here never exceed 2g.
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(list(p))), x, domain="QQ")
    return bool(poly.is_irreducible)


def _certifies_root_outside_unit_circle(
    p: Sequence[int], *, irreducible: bool, noncyclotomic: bool
) -> bool:
    """Exact certificate that some root of a monic integer polynomial has |z| > 1.

    Either a coefficient exceeds the bound binom(n, i) forced by roots in the
    closed unit disk, or |p(0)| >= 2 (the root product is off the circle), or
    the Kronecker argument applies: an irreducible monic integer polynomial
    with |p(0)| = 1 whose roots all sit in the closed unit disk would be
    cyclotomic or x itself.
    """
    n = _poly_degree(p)
    if n == 0:
        return False
    for i, c in enumerate(p[: n + 1]):
        if abs(c) > math.comb(n, n - i):
            return True
    constant = abs(p[0])
    if constant >= 2:
        return True
    return constant == 1 and irreducible and noncyclotomic


class CBVerdict(str, enum.Enum):
    """Outcome of the homological pseudo-Anosov test; never claims the negation."""

    CERTIFIED_PA = "CertifiedPA"
    INCONCLUSIVE = "Inconclusive"


def casson_bleiler_check(word: TwistWord) -> CBVerdict:
    """Sufficient homological test that a twist word is pseudo-Anosov.

    Certifies when the characteristic polynomial of the symplectic action is
    irreducible over Q, is not a polynomial in t^k for any k >= 2, is not
    divisible by any cyclotomic polynomial of degree <= 2g, and provably has
    a root off the unit circle.  Anything short of that is Inconclusive.
    """
    p = char_poly(word_action(word))
    degree = _poly_degree(p)
    if not _is_irreducible_over_q(p):
        return CBVerdict.INCONCLUSIVE
    for k in range(2, degree + 1):
        if _is_polynomial_in_power(p, k):
            return CBVerdict.INCONCLUSIVE
    for _, phi in _cyclotomics_up_to_degree(degree):
        _, rem = _poly_divmod_monic(p, list(phi))
        if _poly_is_zero(rem):
            return CBVerdict.INCONCLUSIVE
    if not _certifies_root_outside_unit_circle(p, irreducible=True, noncyclotomic=True):
        return CBVerdict.INCONCLUSIVE
    return CBVerdict.CERTIFIED_PA


def mapping_torus_h1(word: TwistWord) -> AbelianGroupInvariant:
    """H_1 of the mapping torus: coker(action - I) plus the base circle class."""
    basis = SymplecticBasis(word.surface.genus)
    a = mat_sub(word_action(word), identity(basis.dimension))
    fiber = presentation_cokernel(a, generators=basis.dimension)
    return AbelianGroupInvariant(fiber.free_rank + 1, fiber.torsion)


def ensure_rational(r: RationalLike) -> Fraction:
    """Validate a surgery slope given as Fraction, int, or (p, q) in lowest terms."""
    if isinstance(r, bool):
        raise ValueError(f"slope must be rational, got {r!r}")
    if isinstance(r, Fraction):
        return r
    if isinstance(r, int):
        return Fraction(r)
    if isinstance(r, tuple) and len(r) == 2:
        p, q = r
        if not isinstance(p, int) or not isinstance(q, int):
            raise ValueError(f"slope pair must be integers, got {r!r}")
        if q < 1:
            raise ValueError(f"slope denominator must be >= 1, got {q}")
        if math.gcd(abs(p), q) != 1:
            raise ValueError(f"slope {p}/{q} is not in lowest terms")
        return Fraction(p, q)
    raise ValueError(f"cannot interpret {r!r} as a surgery slope")


@dataclass(frozen=True)
class FramingConvention:
    """How a slope p/q selects the filling relation on the drilled section.

    The relation column is p * longitude_class + q * meridian_class in the
    generator basis (fiber classes, then the section class s).  Swapping
    conventions means swapping these two class assignments, not editing the
    presentation code.
    """

    name: str
    description: str
    meridian_class: Callable[[int], list[int]]
    longitude_class: Callable[[int], list[int]]


def _page_meridian(g: int) -> list[int]:
    # Boundary of the punctured fiber: a product of commutators, so zero.
    return [0] * (2 * g + 1)


def _page_longitude(g: int) -> list[int]:
    # The page-framed longitude carries the section class s.
    v = [0] * (2 * g + 1)
    v[2 * g] = 1
    return v


FRAMING_CONVENTIONS: dict[str, FramingConvention] = {
    "page": FramingConvention(
        name="page",
        description=(
            "slope p/q weights the page-framed longitude of the section by p and its "
            "meridian by q; the meridian is nullhomologous in the drilled mapping torus "
            "and the longitude carries the section class"
        ),
        meridian_class=_page_meridian,
        longitude_class=_page_longitude,
    )
}


def surgered_h1(word: TwistWord, r: RationalLike, framing: str = "page") -> AbelianGroupInvariant:
    """H_1 after r-surgery on a section of the mapping torus.

    Builds the full presentation: the (action - I) block on the 2g fiber
    generators, the section class s as an extra generator, and the one
    surgery relation determined by the framing convention.  Under the "page"
    convention the relation kills p*s, so the result is coker(action - I)
    plus Z/p (plus Z when p = 0).
    """
    slope = ensure_rational(r)
    try:
        convention = FRAMING_CONVENTIONS[framing]
    except KeyError:
        known = ", ".join(sorted(FRAMING_CONVENTIONS))
        raise ValueError(f"unknown framing convention {framing!r}; known: {known}") from None
    basis = SymplecticBasis(word.surface.genus)
    g = basis.genus
    fiber_block = mat_sub(word_action(word), identity(basis.dimension))
    generators = 2 * g + 1
    p, q = slope.numerator, slope.denominator
    mu = convention.meridian_class(g)
    lam = convention.longitude_class(g)
    relation = [p * lam[i] + q * mu[i] for i in range(generators)]
    presentation = zero_matrix(generators, 2 * g + 1)
    for i in range(2 * g):
        for j in range(2 * g):
            presentation[i][j] = fiber_block[i][j]
    for i in range(generators):
        presentation[i][2 * g] = relation[i]
    return presentation_cokernel(presentation, generators=generators)
