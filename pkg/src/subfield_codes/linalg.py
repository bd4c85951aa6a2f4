"""Gaussian elimination over a tabulated finite field (codes as int64 arrays)."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .gf import FieldSpec, build_field


@lru_cache(maxsize=None)
def prime_field(p: int) -> FieldSpec:
    return build_field(p, 1, 1)


def vsum(spec: FieldSpec, arr, axis: int = 0) -> np.ndarray:
    """Field sum of ``arr`` along ``axis``."""
    arr = np.asarray(arr, dtype=np.int64)
    if spec.p == 2:
        return np.bitwise_xor.reduce(arr, axis=axis)
    out = np.zeros(np.delete(arr.shape, axis), dtype=np.int64)
    pw = 1
    for _ in range(spec.degree):
        out += ((arr // pw % spec.p).sum(axis=axis) % spec.p) * pw
        pw *= spec.p
    return out


def matmul(spec: FieldSpec, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    prod = spec.vmul(a[:, :, None], b[None, :, :])
    return vsum(spec, prod, axis=1)


def rref(spec: FieldSpec, mat) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    a = np.array(mat, dtype=np.int64, ndmin=2).copy()
    rows, cols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = spec.vmul(a[r], spec.inv(int(a[r, c])))
        factors = a[:, c].copy()
        factors[r] = 0
        if factors.any():
            a = spec.vsub(a, spec.vmul(factors[:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(spec: FieldSpec, mat) -> int:
    mat = np.asarray(mat, dtype=np.int64)
    if mat.size == 0:
        return 0
    return len(rref(spec, mat)[1])


def nullspace(spec: FieldSpec, mat, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : mat @ x = 0}."""
    mat = np.asarray(mat, dtype=np.int64)
    if mat.size == 0:
        n = ncols if ncols is not None else mat.shape[-1]
        return np.eye(n, dtype=np.int64)
    r, pivots = rref(spec, mat)
    n = mat.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for i, pc in enumerate(pivots):
            basis[j, pc] = spec.neg(int(r[i, f]))
    return basis
