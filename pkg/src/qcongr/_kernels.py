"""Compiled inner loops for sparse eta passes over ZZ/M (int64 residues).

When ``(terms + 2) * M`` fits comfortably in an integer type, sums are
accumulated unreduced and reduced once, which keeps the inner loops
branch-free; int32 is used when it suffices since the passes are
memory-bound. The
division pass is blocked: lags reaching back before the current block read
finished values and run as contiguous loops; only short lags stay sequential.
"""

import numba
import numpy as np

LAZY_LIMIT = 1 << 62
BLOCK = 2048


def lazy_dtype(nterms: int, m: int):
    """Narrowest integer type holding unreduced sums, or None if int64 is too small."""
    bound = (nterms + 2) * m
    if bound < 1 << 31:
        return np.int32
    if bound < LAZY_LIMIT:
        return np.int64
    return None


@numba.njit(cache=True, nogil=True)
def sparse_mul_mod(s, exps, signs, m):
    # out = s * (1 + sum signs[j] q^exps[j])
    n = s.shape[0]
    out = s.copy()
    for j in range(exps.shape[0]):
        g = exps[j]
        if g >= n:
            break
        if signs[j] > 0:
            for i in range(g, n):
                v = out[i] + s[i - g]
                if v >= m:
                    v -= m
                out[i] = v
        else:
            for i in range(g, n):
                v = out[i] - s[i - g]
                if v < 0:
                    v += m
                out[i] = v
    return out


@numba.njit(cache=True, nogil=True)
def sparse_mul_lazy(s, exps, signs, m):
    # output is swept in cache-sized chunks, every lag applied per chunk
    n = s.shape[0]
    out = s.copy()
    chunk = 1 << 15
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        for j in range(exps.shape[0]):
            g = exps[j]
            if g >= stop:
                break
            lo = max(start, g)
            # zero-based views let the loops vectorize (no negative-index checks)
            dst = out[lo:stop]
            src = s[lo - g : stop - g]
            if signs[j] > 0:
                for t in range(dst.shape[0]):
                    dst[t] += src[t]
            else:
                for t in range(dst.shape[0]):
                    dst[t] -= src[t]
        for i in range(start, stop):
            out[i] %= m
    return out


@numba.njit(cache=True, nogil=True)
def sparse_div_mod(s, exps, signs, m):
    # solve b * (1 + sum signs[j] q^exps[j]) = s
    n = s.shape[0]
    b = np.empty_like(s)
    for i in range(n):
        acc = s[i]
        for j in range(exps.shape[0]):
            g = exps[j]
            if g > i:
                break
            if signs[j] > 0:
                acc -= b[i - g]
                if acc < 0:
                    acc += m
            else:
                acc += b[i - g]
                if acc >= m:
                    acc -= m
        b[i] = acc
    return b


@numba.njit(cache=True, nogil=True)
def sparse_div_lazy(s, exps, signs, m, block):
    n = s.shape[0]
    b = np.zeros_like(s)
    acc = np.empty(block, dtype=s.dtype)
    nterms = exps.shape[0]
    for start in range(0, n, block):
        stop = min(start + block, n)
        width = stop - start
        for i in range(width):
            acc[i] = s[start + i]
        # lags landing before the block: finished values, contiguous loop
        for j in range(nterms):
            g = exps[j]
            if g >= stop:
                break
            lo = max(start, g)
            hi = min(stop, start + g)
            dst = acc[lo - start : hi - start]
            src = b[lo - g : hi - g]
            if signs[j] > 0:
                for t in range(dst.shape[0]):
                    dst[t] -= src[t]
            else:
                for t in range(dst.shape[0]):
                    dst[t] += src[t]
        # lags landing inside the block: sequential
        for i in range(start, stop):
            v = acc[i - start]
            for j in range(nterms):
                g = exps[j]
                if g > i - start:
                    break
                v -= signs[j] * b[i - g]
            v %= m
            b[i] = v
    return b
