"""Exact integer matrix helpers on plain lists of lists."""

from __future__ import annotations

__all__ = [
    "identity",
    "zero_matrix",
    "copy_matrix",
    "transpose",
    "matmul",
    "matvec",
    "mat_sub",
    "mat_add",
    "scalar_mul",
    "block_diag",
    "determinant",
]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def copy_matrix(a: list[list[int]]) -> list[list[int]]:
    return [row[:] for row in a]


def transpose(a: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if a and len(a[0]) != len(b):
        raise ValueError("matrix dimension mismatch")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: list[list[int]], v: list[int]) -> list[int]:
    if a and len(a[0]) != len(v):
        raise ValueError("matrix/vector dimension mismatch")
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_sub(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_mul(k: int, a: list[list[int]]) -> list[list[int]]:
    return [[k * x for x in row] for row in a]


def block_diag(*blocks: list[list[int]]) -> list[list[int]]:
    rows = sum(len(b) for b in blocks)
    cols = sum(len(b[0]) if b else 0 for b in blocks)
    out = zero_matrix(rows, cols)
    r = c = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[r + i][c + j] = x
        r += len(b)
        c += len(b[0]) if b else 0
    return out


def determinant(a: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
