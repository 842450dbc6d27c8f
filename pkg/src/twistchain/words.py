"""Words in Dehn twists along the curve chain of a genus-g surface.

The chain consists of the simple closed curves a1, ..., a(2g+1); consecutive
curves intersect once and all other pairs are disjoint.  A word composes like
a product of maps: the rightmost letter acts first on a curve or homology
class.  Words are kept freely reduced at all times: adjacent letters on the
same curve merge, and zero exponents drop.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "SurfaceSpec",
    "TwistLetter",
    "TwistWord",
    "FamilyParams",
    "curve_name",
    "parse_curve_name",
    "chain_distance",
    "twists_commute",
    "free_reduce",
    "compose",
    "invert",
    "build_monodromy",
    "conjugation_normal_form",
    "commutation_normal_form",
    "words_equivalent",
    "parse_word",
    "word_to_text",
]

LetterLike = Union["TwistLetter", Sequence[int]]


@dataclass(frozen=True)
class SurfaceSpec:
    """Closed orientable surface of genus >= 1, optionally with one puncture.

    The puncture count only matters for bookkeeping (open book pages are
    once-punctured); the chain curves and the word algebra are identical in
    both cases.
    """

    genus: int
    punctures: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError(f"genus must be an integer >= 1, got {self.genus!r}")
        if self.punctures not in (0, 1):
            raise ValueError(f"punctures must be 0 or 1, got {self.punctures!r}")

    @property
    def chain_length(self) -> int:
        """Number of chain curves, 2g + 1."""
        return 2 * self.genus + 1

    def curve_indices(self) -> range:
        return range(1, self.chain_length + 1)

    def validate_curve(self, index: int) -> None:
        if not isinstance(index, int) or isinstance(index, bool):
            raise ValueError(f"curve index must be an integer, got {index!r}")
        if not 1 <= index <= self.chain_length:
            raise ValueError(
                f"curve index {index} outside 1..{self.chain_length} for genus {self.genus}"
            )


def curve_name(index: int) -> str:
    """Display name of a chain curve, e.g. 3 -> 'a3'."""
    return f"a{index}"


_CURVE_NAME_RE = re.compile(r"^a([1-9]\d*)$")


def parse_curve_name(name: str) -> int:
    m = _CURVE_NAME_RE.match(name)
    if m is None:
        raise ValueError(f"malformed curve name {name!r}; expected e.g. 'a3'")
    return int(m.group(1))


def chain_distance(i: int, j: int) -> int:
    """Distance of two chain curves along the chain; 1 means they intersect once."""
    return abs(i - j)


def twists_commute(i: int, j: int) -> bool:
    """Twists along chain curves commute exactly when the curves are disjoint."""
    return chain_distance(i, j) >= 2


@dataclass(frozen=True)
class TwistLetter:
    """A power of a single right-handed Dehn twist, t_{a_curve}^exponent."""

    curve: int
    exponent: int

    def __post_init__(self) -> None:
        if not isinstance(self.curve, int) or self.curve < 1:
            raise ValueError(f"curve index must be a positive integer, got {self.curve!r}")
        if not isinstance(self.exponent, int) or self.exponent == 0:
            raise ValueError(f"letter exponent must be a nonzero integer, got {self.exponent!r}")

    def inverse(self) -> "TwistLetter":
        return TwistLetter(self.curve, -self.exponent)


@dataclass(frozen=True)
class TwistWord:
    """A freely reduced word in chain twists over a fixed surface.

    The constructor insists on reducedness; use :func:`free_reduce` to build
    a word from arbitrary letter data.
    """

    surface: SurfaceSpec
    letters: tuple[TwistLetter, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for letter in self.letters:
            if not isinstance(letter, TwistLetter):
                raise ValueError(f"expected TwistLetter, got {letter!r}")
            self.surface.validate_curve(letter.curve)
            if prev is not None and prev.curve == letter.curve:
                raise ValueError(
                    f"word is not freely reduced: adjacent letters on {curve_name(letter.curve)}"
                )
            prev = letter

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def syllables(self) -> list[tuple[int, int]]:
        """Letters as (curve index, exponent) pairs."""
        return [(l.curve, l.exponent) for l in self.letters]

    def to_json_dict(self) -> dict:
        return {
            "g": self.surface.genus,
            "punctures": self.surface.punctures,
            "letters": [[l.curve, l.exponent] for l in self.letters],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TwistWord":
        try:
            surface = SurfaceSpec(data["g"], data.get("punctures", 0))
            letters = [(int(c), int(e)) for c, e in data["letters"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed twist word document: {exc}") from exc
        return free_reduce(surface, letters)


def _as_pairs(letters: Iterable[LetterLike]) -> list[tuple[int, int]]:
    pairs = []
    for item in letters:
        if isinstance(item, TwistLetter):
            pairs.append((item.curve, item.exponent))
        else:
            curve, exponent = item
            pairs.append((int(curve), int(exponent)))
    return pairs


def free_reduce(surface: SurfaceSpec, letters: Iterable[LetterLike]) -> TwistWord:
    """Build a freely reduced word: merge same-curve neighbours, drop zeros."""
    stack: list[tuple[int, int]] = []
    for curve, exponent in _as_pairs(letters):
        surface.validate_curve(curve)
        if exponent == 0:
            continue
        if stack and stack[-1][0] == curve:
            merged = stack[-1][1] + exponent
            stack.pop()
            if merged != 0:
                stack.append((curve, merged))
        else:
            stack.append((curve, exponent))
    return TwistWord(surface, tuple(TwistLetter(c, e) for c, e in stack))


def compose(first: TwistWord, second: TwistWord) -> TwistWord:
    """Concatenate two words; the result applies ``second`` first."""
    if first.surface != second.surface:
        raise ValueError("cannot compose words over different surfaces")
    return free_reduce(first.surface, list(first.letters) + list(second.letters))


def invert(word: TwistWord) -> TwistWord:
    return TwistWord(word.surface, tuple(l.inverse() for l in reversed(word.letters)))


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (g, m, n) of the monodromy family t_{a1}^m t_{a2} ... t_{a_2g} t_{a_{2g+1}}^n."""

    g: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.g, int) or self.g < 1:
            raise ValueError(f"g must be an integer >= 1, got {self.g!r}")
        for label, value in (("m", self.m), ("n", self.n)):
            if not isinstance(value, int):
                raise ValueError(f"{label} must be an integer, got {value!r}")

    @property
    def surface(self) -> SurfaceSpec:
        return SurfaceSpec(self.g)


def build_monodromy(params: FamilyParams) -> TwistWord:
    """The family word t_{a1}^m t_{a2} ... t_{a_{2g}} t_{a_{2g+1}}^n.

    Zero exponents drop during reduction, so m = 0 or n = 0 simply omits the
    corresponding end twist.
    """
    g = params.g
    letters = [(1, params.m)]
    letters += [(i, 1) for i in range(2, 2 * g + 1)]
    letters.append((2 * g + 1, params.n))
    return free_reduce(params.surface, letters)


def conjugation_normal_form(params: FamilyParams) -> tuple[TwistWord, TwistWord]:
    """Parity-dependent conjugate of the family word, with its conjugator.

    Returns (word, conjugator) where word = conjugator^-1 * family * conjugator
    in the mapping class group.  For odd g the identity already holds freely;
    for even g it needs the commutation of the two disjoint end twists, see
    :func:`words_equivalent`.
    """
    g, m, n = params.g, params.m, params.n
    surface = params.surface
    middle = [(i, 1) for i in range(2, 2 * g + 1)]
    if g % 2 == 1:
        word = free_reduce(surface, middle + [(2 * g + 1, n), (1, m)])
        conjugator = free_reduce(surface, [(1, m)])
    else:
        word = free_reduce(surface, [(2 * g + 1, n)] + middle + [(1, m)])
        conjugator = free_reduce(surface, [(2 * g + 1, -n), (1, m)])
    return word, conjugator


def commutation_normal_form(word: TwistWord) -> TwistWord:
    """Canonical form of a word modulo commuting disjoint twists.

    Uses only the relation t_i t_j = t_j t_i for chain curves at distance
    >= 2.  Letters are inserted one at a time: a letter merges with an
    earlier one on the same curve when every letter in between commutes with
    it, and otherwise settles into ascending curve order within its run of
    mutually commuting neighbours.
    """
    out: list[tuple[int, int]] = []

    def push(curve: int, exponent: int) -> None:
        if exponent == 0:
            return
        j = len(out) - 1
        mergeable = None
        while j >= 0:
            other = out[j][0]
            if other == curve:
                mergeable = j
                break
            if not twists_commute(other, curve):
                break
            j -= 1
        if mergeable is not None:
            merged = out[mergeable][1] + exponent
            if merged == 0:
                suffix = out[mergeable + 1 :]
                del out[mergeable:]
                for c, e in suffix:
                    push(c, e)
            else:
                out[mergeable] = (curve, merged)
            return
        pos = j + 1
        while pos < len(out) and out[pos][0] < curve:
            pos += 1
        out.insert(pos, (curve, exponent))

    for letter in word.letters:
        push(letter.curve, letter.exponent)
    return TwistWord(word.surface, tuple(TwistLetter(c, e) for c, e in out))


def words_equivalent(first: TwistWord, second: TwistWord) -> bool:
    """Equality modulo free reduction and commutation of disjoint twists."""
    if first.surface != second.surface:
        return False
    return commutation_normal_form(first) == commutation_normal_form(second)


_TOKEN_RE = re.compile(r"^a([1-9]\d*)(?:\^(-?[1-9]\d*))?$")


def parse_word(text: str, surface: SurfaceSpec) -> TwistWord:
    """Parse the textual form, e.g. 'a1^2 a2 a3 a5^-1'.

    An empty or whitespace-only string is the identity word.
    """
    letters: list[tuple[int, int]] = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if m is None:
            raise ValueError(f"malformed twist token {token!r}; expected e.g. 'a3' or 'a3^-2'")
        exponent = int(m.group(2)) if m.group(2) else 1
        letters.append((int(m.group(1)), exponent))
    return free_reduce(surface, letters)


def word_to_text(word: TwistWord) -> str:
    tokens = []
    for letter in word.letters:
        if letter.exponent == 1:
            tokens.append(curve_name(letter.curve))
        else:
            tokens.append(f"{curve_name(letter.curve)}^{letter.exponent}")
    return " ".join(tokens)
