"""Finitely generated abelian groups from integer matrix presentations.

A presentation matrix has one row per generator and one column per relation.
Its Smith normal form determines the cokernel: diagonal entries >= 2 give
cyclic torsion factors, and generators beyond the rank stay free.

>>> presentation_cokernel([[2, 0], [0, 0]], generators=2)
AbelianGroupInvariant(free_rank=1, torsion=(2,))
>>> smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
[2, 2, 156]
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import copy_matrix

__all__ = ["AbelianGroupInvariant", "smith_normal_form", "presentation_cokernel"]


@dataclass(frozen=True)
class AbelianGroupInvariant:
    """Isomorphism type Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise ValueError(f"free rank must be a nonnegative integer, got {self.free_rank!r}")
        previous = None
        for d in self.torsion:
            if not isinstance(d, int) or d < 2:
                raise ValueError(f"torsion orders must be integers >= 2, got {d!r}")
            if previous is not None and d % previous != 0:
                raise ValueError(f"torsion orders must form a divisibility chain, got {self.torsion}")
            previous = d

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "AbelianGroupInvariant":
        return cls(int(data["free_rank"]), tuple(int(d) for d in data["torsion"]))


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form, nonnegative with d1 | d2 | ...

    Trailing zeros (rank deficiency) are included, so the result always has
    min(rows, cols) entries.  The empty matrix gives [].
    """
    if not matrix or not matrix[0]:
        return []
    m = copy_matrix(matrix)
    rows, cols = len(m), len(m[0])
    if any(len(row) != cols for row in m):
        raise ValueError("ragged matrix")

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        for j in range(cols):
            m[dst][j] += factor * m[src][j]

    def add_col(src, dst, factor):
        for row in m:
            row[dst] += factor * row[src]

    def smallest_nonzero(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        pivot = smallest_nonzero(t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # Clear the pivot column, restarting with a smaller pivot on
            # nonzero remainders.
            restart = False
            for i in range(t + 1, rows):
                if m[i][t] == 0:
                    continue
                q = m[i][t] // m[t][t]
                add_row(t, i, -q)
                if m[i][t] != 0:
                    swap_rows(t, i)
                    restart = True
            if restart:
                continue
            for j in range(t + 1, cols):
                if m[t][j] == 0:
                    continue
                q = m[t][j] // m[t][t]
                add_col(t, j, -q)
                if m[t][j] != 0:
                    swap_cols(t, j)
                    restart = True
            if restart:
                continue
            # Enforce divisibility of every remaining entry by the pivot.
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % m[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        t += 1

    diag = [abs(m[i][i]) for i in range(min(rows, cols))]
    # Divisibility holds by construction; assert it rather than trust it.
    for a, b in zip(diag, diag[1:]):
        if a != 0 and b % a != 0:
            raise AssertionError(f"smith normal form broke divisibility: {diag}")
        if a == 0 and b != 0:
            raise AssertionError(f"smith normal form left a zero before {b}: {diag}")
    return diag


def presentation_cokernel(matrix: list[list[int]], generators: int) -> AbelianGroupInvariant:
    """Cokernel of a presentation matrix (rows = generators, columns = relations)."""
    if len(matrix) != generators:
        raise ValueError(f"expected {generators} generator rows, got {len(matrix)}")
    if generators == 0:
        return AbelianGroupInvariant(0, ())
    if not matrix[0]:
        return AbelianGroupInvariant(generators, ())
    diag = smith_normal_form(matrix)
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d >= 2)
    return AbelianGroupInvariant(generators - rank, torsion)
