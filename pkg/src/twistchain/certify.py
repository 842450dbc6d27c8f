"""Pseudo-Anosov certificates from symbolic twist orbits of chain curves.

The engine tracks how a twist word moves individual chain curves, using only
four exact rewrite rules:

    R0:  t_c(c) = c
    R1:  t_c(s) = s                when c and s are disjoint
    R2:  t_c(d) = T(c, d)          when c and d meet once
    R3:  t_c(T(d, c)) = d          when c and d meet once

where T(c, d) denotes the unnamed curve t_c(d).  R1 also lets t_c fix
T(d, e) when c is disjoint from both d and e.  Any state the rules cannot
handle stops the orbit; the engine reports the stuck expression instead of
guessing.

Running the orbit word f = t_{a1} t_{a2} ... t_{a_{2g}} t_{a_{2g+1}}^n on
gamma = a1 yields a2, a3, ..., a_{2g} in 2g - 1 iterates; together with
gamma these curves fill the surface with one complementary disk.  Filling
orbits certify that composing t_gamma^m with f is pseudo-Anosov for every
integer m outside a single window of at most 7 consecutive values, whose
location is not determined here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .curves import build_chain_system, check_filling
from .homology import CBVerdict, casson_bleiler_check
from .words import (
    FamilyParams,
    SurfaceSpec,
    TwistWord,
    build_monodromy,
    chain_distance,
    curve_name,
    free_reduce,
)

__all__ = [
    "ChainCurve",
    "DeferredTwist",
    "SymbolicCurve",
    "OrbitResult",
    "symbolic_orbit",
    "family_orbit_word",
    "PaCertificate",
    "fathi_certificate",
    "PaBasis",
    "BundleHyperbolic",
    "HyperbolicityReport",
    "hyperbolicity_report",
    "WINDOW_LENGTH_MAX",
]

# A filling orbit pins down pseudo-Anosov behaviour for all twist powers m
# outside one run of consecutive values of at most this length.
WINDOW_LENGTH_MAX = 7


@dataclass(frozen=True)
class ChainCurve:
    """A named chain curve a_index."""

    index: int

    def __str__(self) -> str:
        return curve_name(self.index)


@dataclass(frozen=True)
class DeferredTwist:
    """The unnamed curve T(twist, base) = t_{a_twist}(a_base) for adjacent curves."""

    twist: int
    base: int

    def __post_init__(self) -> None:
        if chain_distance(self.twist, self.base) != 1:
            raise ValueError(
                f"deferred twist needs adjacent curves, got a{self.twist}, a{self.base}"
            )

    def __str__(self) -> str:
        return f"T({curve_name(self.twist)},{curve_name(self.base)})"


SymbolicCurve = Union[ChainCurve, DeferredTwist]


class _Stuck(Exception):
    """No rewrite rule applies; carries a printable description."""


def _apply_single_twist(state: SymbolicCurve, c: int, positive: bool) -> SymbolicCurve:
    if isinstance(state, ChainCurve):
        d = chain_distance(c, state.index)
        if d == 0 or d >= 2:
            return state  # R0 / R1
        if positive:
            return DeferredTwist(c, state.index)  # R2
        raise _Stuck(f"t_{curve_name(c)}^-1({state}) has no rewrite rule")
    # state is a deferred twist T(d, e)
    if c == state.base and positive:
        return ChainCurve(state.twist)  # R3: t_c(T(d, c)) = d
    if chain_distance(c, state.twist) >= 2 and chain_distance(c, state.base) >= 2:
        return state  # R1 extended to unnamed curves
    sign = "" if positive else "^-1"
    raise _Stuck(f"t_{curve_name(c)}{sign}({state}) has no rewrite rule")


def _apply_letter(state: SymbolicCurve, curve: int, exponent: int) -> SymbolicCurve:
    positive = exponent > 0
    for _ in range(abs(exponent)):
        new_state = _apply_single_twist(state, curve, positive)
        if new_state == state:
            # R0/R1 fixed the state; higher powers change nothing.
            return state
        state = new_state
    return state


def _apply_word(word: TwistWord, state: SymbolicCurve) -> SymbolicCurve:
    for letter in reversed(word.letters):
        state = _apply_letter(state, letter.curve, letter.exponent)
    return state


@dataclass(frozen=True)
class OrbitResult:
    """Iterates of a curve under a twist word, while they stay resolvable."""

    start: int
    steps: tuple[SymbolicCurve, ...]
    resolved: bool
    stuck: str | None = None

    @property
    def named(self) -> tuple[int, ...]:
        out = []
        for s in self.steps:
            if isinstance(s, ChainCurve):
                out.append(s.index)
            else:
                break
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {
            "gamma": curve_name(self.start),
            "orbit": [curve_name(i) for i in self.named],
            "resolved": self.resolved,
            "stuck": self.stuck,
        }


def symbolic_orbit(f: TwistWord, gamma: int, max_iters: int) -> OrbitResult:
    """Iterate f on the chain curve a_gamma, recording named results.

    Stops at max_iters, on a repeated named curve (the orbit has closed up),
    on an iterate that stays unnamed after all letters, or on a state no
    rule resolves.  The last two cases are reported, not raised.
    """
    f.surface.validate_curve(gamma)
    if max_iters < 0:
        raise ValueError(f"max_iters must be >= 0, got {max_iters}")
    state: SymbolicCurve = ChainCurve(gamma)
    seen = {gamma}
    steps: list[SymbolicCurve] = []
    for _ in range(max_iters):
        try:
            state = _apply_word(f, state)
        except _Stuck as stuck:
            return OrbitResult(gamma, tuple(steps), False, str(stuck))
        if isinstance(state, DeferredTwist):
            steps.append(state)
            return OrbitResult(
                gamma, tuple(steps), False, f"iterate stayed unnamed: {state}"
            )
        steps.append(state)
        if state.index in seen:
            break
        seen.add(state.index)
    return OrbitResult(gamma, tuple(steps), True)


def family_orbit_word(g: int, n: int) -> TwistWord:
    """The orbit word f = t_{a1} t_{a2} ... t_{a_{2g}} t_{a_{2g+1}}^n.

    This is the family word with first exponent 1: composing t_{a1}^m with f
    gives the family word with first exponent m + 1.
    """
    surface = SurfaceSpec(g)
    letters = [(i, 1) for i in range(1, 2 * g + 1)] + [(2 * g + 1, n)]
    return free_reduce(surface, letters)


_EXPONENT_NOTE = (
    "composing t_a1^m with the orbit word gives the family word with first "
    "exponent m + 1"
)


@dataclass(frozen=True)
class PaCertificate:
    """A filling-orbit certificate for the twist family over one (g, n).

    When certified, t_a1^m composed with the orbit word is pseudo-Anosov for
    every integer m outside a single window of at most window_length_max
    consecutive values; the window location is never claimed, so the
    certificate says nothing about any specific m.
    """

    g: int
    n: int
    gamma: int
    orbit: tuple[int, ...]
    fills_after: int | None
    disk_count: int | None
    certified: bool
    statement: str
    failure: str | None = None
    window_length_max: int = WINDOW_LENGTH_MAX
    window_known: bool = False
    exponent_note: str = _EXPONENT_NOTE

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "gamma": curve_name(self.gamma),
            "orbit": [curve_name(i) for i in self.orbit],
            "fills_after": self.fills_after,
            "disk_count": self.disk_count,
            "window_length_max": self.window_length_max,
            "window_known": self.window_known,
            "certified": self.certified,
            "statement": self.statement,
            "failure": self.failure,
            "exponent_note": self.exponent_note,
        }


def fathi_certificate(g: int, n: int) -> PaCertificate:
    """Certify the family over (g, n) by a filling symbolic orbit.

    Runs the orbit word on gamma = a1 for up to 2g - 1 iterates and checks
    when the named curves so far, together with gamma, fill the surface.
    Certification is restricted to g >= 2; a failed or non-filling orbit
    gives an inconclusive certificate rather than an error.
    """
    if not isinstance(g, int) or g < 2:
        raise ValueError(f"filling-orbit certificates need genus >= 2, got {g!r}")
    if not isinstance(n, int):
        raise ValueError(f"n must be an integer, got {n!r}")
    f = family_orbit_word(g, n)
    gamma = 1
    result = symbolic_orbit(f, gamma, max_iters=2 * g - 1)
    fills_after = None
    disk_count = None
    reached: list[int] = []
    for i, index in enumerate(result.named, start=1):
        reached.append(index)
        filling = check_filling(build_chain_system(g, [gamma] + reached))
        if filling.fills:
            fills_after = i
            disk_count = filling.disk_count
            break
    certified = fills_after is not None
    if certified:
        statement = (
            f"t_a1^m composed with the orbit word of (g={g}, n={n}) is pseudo-Anosov "
            f"for every integer m outside one window of at most {WINDOW_LENGTH_MAX} "
            "consecutive values; the window location is not determined"
        )
        failure = None
    else:
        statement = "inconclusive: the orbit did not fill the surface"
        failure = result.stuck or (
            f"orbit {[curve_name(i) for i in result.named]} does not fill within "
            f"{2 * g - 1} iterates"
        )
    return PaCertificate(
        g=g,
        n=n,
        gamma=gamma,
        orbit=tuple(reached if certified else result.named),
        fills_after=fills_after,
        disk_count=disk_count,
        certified=certified,
        statement=statement,
        failure=failure,
    )


class PaBasis(str, enum.Enum):
    FATHI = "FathiCertificate"
    CASSON_BLEILER = "CassonBleiler"


class BundleHyperbolic(str, enum.Enum):
    YES = "Yes"
    YES_BUT_WINDOW = "YesForAllButWindow"
    UNKNOWN = "Unknown"


_SURGERY_STATEMENT = (
    "all but finitely many surgery slopes on a section of a hyperbolic mapping "
    "torus yield hyperbolic manifolds; no exceptional slope set is computed"
)


@dataclass(frozen=True)
class HyperbolicityReport:
    """Combined family-level and specific-word hyperbolicity evidence."""

    params: FamilyParams
    r: Fraction
    pa_basis: PaBasis | None
    bundle_hyperbolic: BundleHyperbolic
    cb_verdict: CBVerdict
    fathi: PaCertificate
    surgery_statement: str = _SURGERY_STATEMENT

    def to_json_dict(self) -> dict:
        return {
            "g": self.params.g,
            "m": self.params.m,
            "n": self.params.n,
            "r": str(self.r),
            "pa_basis": self.pa_basis.value if self.pa_basis else None,
            "bundle_hyperbolic": self.bundle_hyperbolic.value,
            "cb_verdict": self.cb_verdict.value,
            "fathi_certificate": self.fathi.to_json_dict(),
            "surgery_statement": self.surgery_statement,
        }


def hyperbolicity_report(params: FamilyParams, r: Fraction) -> HyperbolicityReport:
    """Assess the mapping torus of the (g, m, n) word and its r-surgeries.

    "Yes" needs a specific-word certificate (the homological check on the
    actual word); a family-level filling-orbit certificate only ever gives
    "YesForAllButWindow", since the window containing bad twist powers is
    not located.
    """
    if params.g < 2:
        raise ValueError(f"hyperbolicity reports need genus >= 2, got {params.g}")
    slope = Fraction(r)
    cb = casson_bleiler_check(build_monodromy(params))
    fathi = fathi_certificate(params.g, params.n)
    if cb is CBVerdict.CERTIFIED_PA:
        basis: PaBasis | None = PaBasis.CASSON_BLEILER
        bundle = BundleHyperbolic.YES
    elif fathi.certified:
        basis = PaBasis.FATHI
        bundle = BundleHyperbolic.YES_BUT_WINDOW
    else:
        basis = None
        bundle = BundleHyperbolic.UNKNOWN
    return HyperbolicityReport(
        params=params,
        r=slope,
        pa_basis=basis,
        bundle_hyperbolic=bundle,
        cb_verdict=cb,
        fathi=fathi,
    )
