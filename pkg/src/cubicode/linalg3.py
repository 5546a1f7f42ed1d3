"""Small dense linear algebra over F_3 (numpy int8 matrices, 2^-1 = 2)."""

from __future__ import annotations

import numpy as np


def row_reduce(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod 3 and the pivot column list."""
    a = np.array(mat, dtype=np.int64) % 3
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = None
        for i in range(r, rows):
            if a[i, c] % 3:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            a[[r, sel]] = a[[sel, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, 3)) % 3
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % 3
        pivots.append(c)
        r += 1
    return a.astype(np.int8), pivots


def rank(mat: np.ndarray) -> int:
    return len(row_reduce(mat)[1])


def solve(mat: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    """One solution of mat @ x = rhs over F_3, or None if inconsistent."""
    a = np.asarray(mat, dtype=np.int64) % 3
    b = np.asarray(rhs, dtype=np.int64) % 3
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    red, pivots = row_reduce(aug)
    cols = a.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int8)
    for r, c in enumerate(pivots):
        x[c] = red[r, -1]
    return x
