# Hot loops over whole product tables. Each kernel has a numba version and a
# vectorised numpy version with identical results; set LRBHOPF_DISABLE_NUMBA=1
# to force the numpy path (also used automatically when numba is missing).
from __future__ import annotations

import os

import numpy as np

NO_VIOLATION = -1
IDEMPOTENCY = 0
LEFT_REGULARITY = 1


def _numba_wanted() -> bool:
    flag = os.environ.get("LRBHOPF_DISABLE_NUMBA", "").strip().lower()
    return flag in ("", "0", "false", "no")


try:
    if not _numba_wanted():
        raise ImportError("numba disabled by LRBHOPF_DISABLE_NUMBA")
    from numba import njit
except ImportError:
    njit = None

BACKEND = "numba" if njit is not None else "numpy"


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def setcomp_product_table_numpy(codes: np.ndarray, lookup: np.ndarray, n: int) -> np.ndarray:
    """Product table of all set compositions given by ``codes``.

    ``codes[i, e]`` is the index of the block of face ``i`` containing element
    ``e + 1``; ``lookup`` maps the base-``n`` key of a code row to its face index.
    """
    count = codes.shape[0]
    table = np.empty((count, count), dtype=np.int32)
    if n == 0 or count == 0:
        table[...] = 0
        return table
    powers = np.asarray([n**e for e in range(n)], dtype=np.int64)
    codes64 = codes.astype(np.int64)
    rows = np.arange(count)[:, None]
    for x in range(count):
        pairs = codes64[x][None, :] * n + codes64
        present = np.zeros((count, n * n), dtype=bool)
        present[rows, pairs] = True
        ranks = np.cumsum(present, axis=1) - 1
        merged = np.take_along_axis(ranks, pairs, axis=1)
        table[x] = lookup[merged @ powers]
    return table


def lrb_violation_numpy(table: np.ndarray) -> tuple[int, int, int]:
    """First ``(kind, x, y)`` where ``xx = x`` or ``xyx = xy`` fails, else ``(-1, -1, -1)``."""
    count = table.shape[0]
    diag = table[np.arange(count), np.arange(count)]
    bad = np.nonzero(diag != np.arange(count))[0]
    if bad.size:
        x = int(bad[0])
        return IDEMPOTENCY, x, x
    chunk = max(1, 2_000_000 // max(count, 1))
    for start in range(0, count, chunk):
        stop = min(count, start + chunk)
        xy = table[start:stop]
        xs = np.arange(start, stop)[:, None]
        xyx = table[xy, xs]
        hits = np.argwhere(xyx != xy)
        if hits.size:
            x, y = hits[0]
            return LEFT_REGULARITY, int(x) + start, int(y)
    return NO_VIOLATION, -1, -1


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if njit is not None:

    @njit(cache=True)
    def _setcomp_product_table_nb(codes, lookup, n):
        count = codes.shape[0]
        table = np.zeros((count, count), dtype=np.int32)
        if n == 0:
            return table
        present = np.zeros(n * n, dtype=np.int8)
        rank = np.zeros(n * n, dtype=np.int64)
        for x in range(count):
            for y in range(count):
                for e in range(n):
                    present[codes[x, e] * n + codes[y, e]] = 1
                r = 0
                for p in range(n * n):
                    if present[p]:
                        rank[p] = r
                        r += 1
                key = 0
                power = 1
                for e in range(n):
                    p = codes[x, e] * n + codes[y, e]
                    key += rank[p] * power
                    power *= n
                for e in range(n):
                    present[codes[x, e] * n + codes[y, e]] = 0
                table[x, y] = lookup[key]
        return table

    @njit(cache=True)
    def _lrb_violation_nb(table):
        count = table.shape[0]
        for x in range(count):
            if table[x, x] != x:
                return IDEMPOTENCY, x, x
        for x in range(count):
            for y in range(count):
                xy = table[x, y]
                if table[xy, x] != xy:
                    return LEFT_REGULARITY, x, y
        return NO_VIOLATION, -1, -1


def setcomp_product_table(codes: np.ndarray, lookup: np.ndarray, n: int) -> np.ndarray:
    if njit is None:
        return setcomp_product_table_numpy(codes, lookup, n)
    return _setcomp_product_table_nb(codes.astype(np.int64), lookup.astype(np.int32), n)


def lrb_violation(table: np.ndarray) -> tuple[int, int, int]:
    if njit is None:
        return lrb_violation_numpy(table)
    kind, x, y = _lrb_violation_nb(np.ascontiguousarray(table, dtype=np.int32))
    return int(kind), int(x), int(y)
