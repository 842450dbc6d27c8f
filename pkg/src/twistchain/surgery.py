"""Compilation of rational contact surgeries on the binding into (-1)-chains.

The once-punctured fiber of the (g, m, n) twist family is an open book page;
its binding B admits a Legendrian realization L0 with tb = g - 1 and, after
sliding over page handles, a realization L with tb = 2g - 1.  A smooth
surgery slope r on B becomes the contact surgery coefficient

    r' = r - (2g - 1)

on L.  Negative r' expands uniquely into a negative continued fraction
[a0, a1, ..., ak] (a0 <= -1, the rest <= -2) and compiles to a chain of
contact (-1)-surgeries on successively stabilized push-offs of L, which
preserves Stein fillability.  Positive r' exceeds 2g(B) - 1 smoothly, which
keeps the contact invariant nonvanishing.  The slope r = 2g - 1 itself
(r' = 0) is excluded: this construction says nothing there.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence

from .abelian import AbelianGroupInvariant, presentation_cokernel
from .homology import RationalLike, ensure_rational, word_action
from .intmat import block_diag, identity, mat_sub
from .words import FamilyParams, TwistWord, build_monodromy, curve_name

__all__ = [
    "SurgerySpec",
    "LegendrianData",
    "binding_realizations",
    "contact_coefficient",
    "CFExpansion",
    "negative_cf_expansion",
    "evaluate_expansion",
    "tridiagonal_linking_matrix",
    "tridiagonal_determinant",
    "chain_linking_h1",
    "TightnessKind",
    "TightnessVerdict",
    "tightness_verdict",
    "ChainComponent",
    "BackgroundDescriptor",
    "background_descriptor",
    "ContactDiagram",
    "compile_contact_diagram",
    "surgered_h1_via_chain",
]


@dataclass(frozen=True)
class SurgerySpec:
    """A surgery problem: family parameters plus a rational slope on the binding."""

    params: FamilyParams
    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", ensure_rational(self.r))


@dataclass(frozen=True)
class LegendrianData:
    """A Legendrian (or transverse) realization used by the compilation."""

    name: str
    tb: int | None
    role: str


def binding_realizations(g: int) -> tuple[LegendrianData, ...]:
    """The three curves the compilation talks about, with their tb values."""
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    return (
        LegendrianData("B", None, "binding of the open book (transverse)"),
        LegendrianData("L0", g - 1, "Legendrian realization of the binding on the page"),
        LegendrianData("L", 2 * g - 1, "realization after g slides; surgery curve"),
    )


def contact_coefficient(g: int, r: RationalLike) -> tuple[int, Fraction]:
    """(tb of L, contact coefficient r' = r - tb) for the slope r on the binding."""
    if not isinstance(g, int) or g < 1:
        raise ValueError(f"genus must be an integer >= 1, got {g!r}")
    slope = ensure_rational(r)
    tb = 2 * g - 1
    return tb, slope - tb


def evaluate_expansion(entries: tuple[int, ...] | list[int]) -> Fraction:
    """Value of [a0, ..., ak] = a0 - 1/(a1 - 1/(... - 1/ak))."""
    if not entries:
        raise ValueError("empty continued fraction")
    value = Fraction(entries[-1])
    for a in reversed(entries[:-1]):
        if value == 0:
            raise ValueError(f"continued fraction {list(entries)} hits a zero tail")
        value = a - Fraction(1) / value
    return value


@dataclass(frozen=True)
class CFExpansion:
    """Negative continued fraction [a0, ..., ak]: a0 <= -1, the rest <= -2."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("expansion needs at least one entry")
        if self.entries[0] > -1:
            raise ValueError(f"leading entry must be <= -1, got {self.entries[0]}")
        for a in self.entries[1:]:
            if a > -2:
                raise ValueError(f"tail entries must be <= -2, got {a}")

    @property
    def value(self) -> Fraction:
        return evaluate_expansion(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def to_json_list(self) -> list[int]:
        return list(self.entries)


def negative_cf_expansion(r_prime: RationalLike) -> CFExpansion:
    """The unique negative continued fraction expansion of a negative rational.

    Descends by a0 = floor(x): an integer terminates immediately, otherwise
    the fractional part f lies in (0, 1) and the tail continues on -1/f,
    which is < -1, so every later entry is <= -2.
    """
    x = ensure_rational(r_prime)
    if x >= 0:
        raise ValueError(f"negative continued fractions need a negative input, got {x}")
    entries = []
    while True:
        a = floor(x)
        entries.append(a)
        frac = x - a
        if frac == 0:
            break
        x = -1 / frac
    expansion = CFExpansion(tuple(entries))
    if expansion.value != ensure_rational(r_prime):
        raise AssertionError("continued fraction round trip failed")
    return expansion


def tridiagonal_linking_matrix(entries: tuple[int, ...] | list[int]) -> list[list[int]]:
    """Linking matrix of the surgery chain: entries on the diagonal, 1 off it."""
    k = len(entries)
    m = [[0] * k for _ in range(k)]
    for i, a in enumerate(entries):
        m[i][i] = a
        if i + 1 < k:
            m[i][i + 1] = 1
            m[i + 1][i] = 1
    return m


def tridiagonal_determinant(entries: tuple[int, ...] | list[int]) -> int:
    """Determinant by the continuant recursion d_i = a_i d_{i-1} - d_{i-2}."""
    prev2, prev1 = 1, 1
    for i, a in enumerate(entries):
        prev2, prev1 = prev1, a * prev1 - (prev2 if i > 0 else 0)
    return prev1 if entries else 1


def chain_linking_h1(expansion: CFExpansion | Sequence[int]) -> AbelianGroupInvariant:
    """Cokernel of the chain linking matrix (H_1 contribution of the chain)."""
    entries = expansion.entries if isinstance(expansion, CFExpansion) else tuple(expansion)
    return presentation_cokernel(tridiagonal_linking_matrix(entries), generators=len(entries))


class TightnessKind(str, enum.Enum):
    STEIN_FILLABLE = "SteinFillable"
    NONVANISHING = "NonvanishingContactInvariant"
    EXCLUDED_SLOPE = "ExcludedSlope"
    OUT_OF_RANGE = "OutOfTheoremRange"


_CITATIONS = {
    TightnessKind.STEIN_FILLABLE: (
        "negative contact surgery converts to a chain of Legendrian (-1)-surgeries "
        "(Ding-Geiges-Stipsicz); Legendrian surgery on a Stein fillable structure "
        "stays Stein fillable (Eliashberg, Weinstein), hence tight (Gromov, Eliashberg)"
    ),
    TightnessKind.NONVANISHING: (
        "rational surgery with slope above 2g - 1 on a fibered transverse knot whose "
        "open book supports the contact structure keeps the Heegaard Floer contact "
        "invariant nonzero (Conway), hence tight (Ozsvath-Szabo)"
    ),
    TightnessKind.EXCLUDED_SLOPE: (
        "slope equal to 2g - 1 gives contact coefficient 0, which neither conversion "
        "covers; no conclusion from this construction"
    ),
    TightnessKind.OUT_OF_RANGE: (
        "the tightness statement assumes g >= 1 and positive twist exponents m, n"
    ),
}


@dataclass(frozen=True)
class TightnessVerdict:
    kind: TightnessKind
    citation: str

    def to_json_dict(self) -> dict:
        return {"verdict": self.kind.value, "citation": self.citation}


def tightness_verdict(g: int, r: RationalLike, m: int, n: int) -> TightnessVerdict:
    """Total classification of (g, m, n, r) into exactly one tightness outcome."""
    slope = ensure_rational(r)
    if g < 1 or m <= 0 or n <= 0:
        kind = TightnessKind.OUT_OF_RANGE
    elif slope == 2 * g - 1:
        kind = TightnessKind.EXCLUDED_SLOPE
    elif slope < 2 * g - 1:
        kind = TightnessKind.STEIN_FILLABLE
    else:
        kind = TightnessKind.NONVANISHING
    return TightnessVerdict(kind, _CITATIONS[kind])


@dataclass(frozen=True)
class ChainComponent:
    """One Legendrian component of the compiled surgery chain.

    Every component of a negative chain carries contact coefficient -1; its
    smooth coefficient is tb - 1 for the tb after stabilizations.
    """

    index: int
    pushoff_of: str
    stabilizations: int
    contact_coefficient: Fraction
    tb: int
    smooth_coefficient: Fraction

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "pushoff_of": self.pushoff_of,
            "stabilizations": self.stabilizations,
            "contact_coefficient": str(self.contact_coefficient),
            "tb": self.tb,
            "smooth_coefficient": str(self.smooth_coefficient),
        }


@dataclass(frozen=True)
class BackgroundDescriptor:
    """Count bookkeeping for the page monodromy's (-1)-framed curves.

    The (g, m, n) word starts with m + n + 2g - 1 two-handle curves; handle
    slides and cancellations against the 2g one-handles remove 2g of them.
    The survivors are reported by curve name and count only; no diagram
    geometry is tracked.  For g = 1 the same counts are extrapolated from
    the closed formulas and flagged.
    """

    two_handles_initial: int
    two_handles_cancelled: int
    surviving: tuple[tuple[str, int], ...]
    extrapolated: bool

    @property
    def two_handles_surviving(self) -> int:
        return sum(count for _, count in self.surviving)

    def to_json_dict(self) -> dict:
        return {
            "two_handles_initial": self.two_handles_initial,
            "two_handles_cancelled": self.two_handles_cancelled,
            "surviving": [[name, count] for name, count in self.surviving],
            "two_handles_surviving": self.two_handles_surviving,
            "extrapolated": self.extrapolated,
        }


def background_descriptor(g: int, m: int, n: int) -> BackgroundDescriptor:
    """Two-handle counts before and after the slide/cancel bookkeeping."""
    if g < 1 or m < 1 or n < 1:
        raise ValueError("background counts need g >= 1 and m, n >= 1")
    initial = m + n + 2 * g - 1
    cancelled = 2 * g
    slid_survivor = curve_name(3) if g >= 2 else curve_name(2)
    surviving = (
        (curve_name(1), m - 1),
        (slid_survivor, 1),
        (curve_name(2 * g + 1), n - 1),
    )
    descriptor = BackgroundDescriptor(initial, cancelled, surviving, extrapolated=(g == 1))
    if descriptor.two_handles_surviving != m + n - 1:
        raise AssertionError("background count bookkeeping drifted")
    return descriptor


@dataclass(frozen=True)
class ContactDiagram:
    """Compiled contact surgery presentation for one (g, m, n, r)."""

    g: int
    m: int
    n: int
    r: Fraction
    tb_L: int
    r_prime: Fraction
    expansion: CFExpansion | None
    chain: tuple[ChainComponent, ...]
    background: BackgroundDescriptor | None
    verdict: TightnessVerdict
    framing: str = "page"

    @property
    def smooth_coefficient_L(self) -> int:
        # Contact coefficient -1 on an L push-off is smooth tb - 1 = 2g - 2.
        return self.tb_L - 1

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "m": self.m,
            "n": self.n,
            "r": str(self.r),
            "tb_L": self.tb_L,
            "r_prime": str(self.r_prime),
            "expansion": self.expansion.to_json_list() if self.expansion else None,
            "chain": [c.to_json_dict() for c in self.chain],
            "background": self.background.to_json_dict() if self.background else None,
            "verdict": self.verdict.kind.value,
            "citations": [self.verdict.citation],
            "smooth_coefficient_L": self.smooth_coefficient_L,
            "framing": self.framing,
        }


def _negative_chain(g: int, expansion: CFExpansion) -> tuple[ChainComponent, ...]:
    components = []
    tb = 2 * g - 1
    for i, a in enumerate(expansion.entries):
        stabilizations = abs(a + 1) if i == 0 else abs(a + 2)
        parent = "L" if i == 0 else f"component {i - 1}"
        tb -= stabilizations
        components.append(
            ChainComponent(
                index=i,
                pushoff_of=parent,
                stabilizations=stabilizations,
                contact_coefficient=Fraction(-1),
                tb=tb,
                smooth_coefficient=Fraction(tb - 1),
            )
        )
    return tuple(components)


def compile_contact_diagram(spec: SurgerySpec) -> ContactDiagram:
    """Compile the rational slope r on the binding into explicit surgeries.

    Negative contact coefficient: a chain of (-1)-surgeries with
    stabilization counts |a0 + 1|, |a1 + 2|, ..., |ak + 2|.  Zero: the
    excluded slope, nothing to compile.  Positive: a single rational
    component kept as is.  Nonpositive m or n is out of the theorem's range
    and compiles to an empty diagram with that verdict.
    """
    g, m, n = spec.params.g, spec.params.m, spec.params.n
    tb, r_prime = contact_coefficient(g, spec.r)
    verdict = tightness_verdict(g, spec.r, m, n)
    expansion: CFExpansion | None = None
    chain: tuple[ChainComponent, ...] = ()
    background: BackgroundDescriptor | None = None
    if verdict.kind is not TightnessKind.OUT_OF_RANGE:
        background = background_descriptor(g, m, n)
        if r_prime < 0:
            expansion = negative_cf_expansion(r_prime)
            chain = _negative_chain(g, expansion)
        elif r_prime > 0:
            chain = (
                ChainComponent(
                    index=0,
                    pushoff_of="L",
                    stabilizations=0,
                    contact_coefficient=r_prime,
                    tb=tb,
                    smooth_coefficient=r_prime + tb,
                ),
            )
    return ContactDiagram(
        g=g,
        m=m,
        n=n,
        r=spec.r,
        tb_L=tb,
        r_prime=r_prime,
        expansion=expansion,
        chain=chain,
        background=background,
        verdict=verdict,
    )


def surgered_h1_via_chain(word: TwistWord, r: RationalLike) -> AbelianGroupInvariant:
    """H_1 of the surgered manifold via the continued fraction chain.

    Cross-check route: instead of the single relation killing p*s, adjoin
    the tridiagonal linking block of the expansion of -|p|/q, acting on the
    section class and one meridian per extra chain component.  Must agree
    with the direct presentation for every slope.
    """
    slope = ensure_rational(r)
    g = word.surface.genus
    fiber_block = mat_sub(word_action(word), identity(2 * g))
    p, q = slope.numerator, slope.denominator
    if p == 0:
        chain_block = [[0]]
    else:
        expansion = negative_cf_expansion(Fraction(-abs(p), q))
        chain_block = tridiagonal_linking_matrix(expansion.entries)
    presentation = block_diag(fiber_block, chain_block)
    return presentation_cokernel(presentation, generators=len(presentation))


def diagram_h1(spec: SurgerySpec) -> AbelianGroupInvariant:
    """Convenience: H_1 of the surgered manifold for a surgery spec."""
    return surgered_h1_via_chain(build_monodromy(spec.params), spec.r)
