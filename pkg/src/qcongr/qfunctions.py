"""Standard q-series: eta products f_k, eta quotients and the theta series phi, a.

``f_k = prod_{j>=1} (1 - q^{kj})`` is expanded sparsely through the pentagonal
number theorem, and multiplying or dividing by ``f_k`` costs one sparse pass.
The theta series are built by direct lattice enumeration so that agreement
with their eta-quotient forms is an honest check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Mapping

import numpy as np

from . import _kernels
from .series import EXACT, Ring, Series, SeriesError, mul, power


@lru_cache(maxsize=256)
def pentagonal_terms(k: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nonconstant exponents (sorted) and signs of ``f_k`` below ``order``."""
    if k < 1:
        raise SeriesError(f"eta step must be positive, got {k}")
    pairs = []
    j = 1
    while True:
        g1 = k * j * (3 * j - 1) // 2
        if g1 >= order:
            break
        sign = -1 if j % 2 else 1
        pairs.append((g1, sign))
        g2 = k * j * (3 * j + 1) // 2
        if g2 < order:
            pairs.append((g2, sign))
        j += 1
    exps = np.array([g for g, _ in pairs], dtype=np.int64)
    signs = np.array([s for _, s in pairs], dtype=np.int64)
    exps.flags.writeable = False
    signs.flags.writeable = False
    return exps, signs


def eta_series(k: int, order: int, ring: Ring = EXACT) -> Series:
    """``f_k`` to the given order."""
    return eta_mul(Series.one(order, ring), k, 1)


def eta_mul(s: Series, k: int, e: int) -> Series:
    """``s * f_k`` (e = 1) or ``s / f_k`` (e = -1) in one sparse pass."""
    if e not in (1, -1):
        raise ValueError("eta_mul applies a single factor; use e = +1 or -1")
    exps, signs = pentagonal_terms(k, s.order)
    m = s.ring.modulus
    if m is not None:
        mod = np.int64(m)
        work = _kernels.lazy_dtype(len(exps), m)
        if work is not None:
            src = s.coeffs.astype(work)
            if e == 1:
                out = _kernels.sparse_mul_lazy(src, exps, signs, mod)
            else:
                out = _kernels.sparse_div_lazy(src, exps, signs, mod, _kernels.BLOCK)
            out = out.astype(np.int64)
        else:
            kernel = _kernels.sparse_mul_mod if e == 1 else _kernels.sparse_div_mod
            out = kernel(s.coeffs, exps, signs, mod)
        return Series(s.ring, out, _trusted=True)
    n = s.order
    if e == 1:
        out = s.coeffs.copy()
        for g, sign in zip(exps.tolist(), signs.tolist()):
            if sign > 0:
                out[g:] += s.coeffs[: n - g]
            else:
                out[g:] -= s.coeffs[: n - g]
        return Series(s.ring, out, _trusted=True)
    terms = list(zip(exps.tolist(), signs.tolist()))
    src = s.coeffs.tolist()
    b = [0] * n
    for i in range(n):
        acc = src[i]
        for g, sign in terms:
            if g > i:
                break
            if sign > 0:
                acc -= b[i - g]
            else:
                acc += b[i - g]
        b[i] = acc
    out = np.empty(n, dtype=object)
    out[:] = b
    return Series(s.ring, out, _trusted=True)


def _exponent_items(value) -> tuple[tuple[int, int], ...]:
    items = value.items() if isinstance(value, Mapping) else value
    merged: dict[int, int] = {}
    for k, e in items:
        k, e = int(k), int(e)
        if k < 1:
            raise ValueError(f"step must be positive, got {k}")
        merged[k] = merged.get(k, 0) + e
    return tuple(sorted((k, e) for k, e in merged.items() if e))


@dataclass(frozen=True)
class EtaMonomial:
    """``scalar / 2^denom_log2 * q^qpow * prod f_k^e * prod a(q^k)^d * prod phi(q^k)^d``.

    Exponent maps are stored as sorted ``(step, exponent)`` tuples so that
    monomials hash; pass plain dicts to the constructor.
    """

    scalar: int = 1
    denom_log2: int = 0
    qpow: int = 0
    eta: tuple[tuple[int, int], ...] = field(default=())
    theta_a: tuple[tuple[int, int], ...] = field(default=())
    theta_phi: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.qpow < 0:
            raise ValueError(f"negative q-valuation {self.qpow}")
        if self.denom_log2 < 0:
            raise ValueError("denominator exponent must be nonnegative")
        object.__setattr__(self, "scalar", int(self.scalar))
        for name in ("eta", "theta_a", "theta_phi"):
            object.__setattr__(self, name, _exponent_items(getattr(self, name)))

    def __mul__(self, other: "EtaMonomial") -> "EtaMonomial":
        return EtaMonomial(
            self.scalar * other.scalar,
            self.denom_log2 + other.denom_log2,
            self.qpow + other.qpow,
            self.eta + other.eta,
            self.theta_a + other.theta_a,
            self.theta_phi + other.theta_phi,
        )

    @property
    def numerator(self) -> "EtaMonomial":
        return EtaMonomial(self.scalar, 0, self.qpow, self.eta, self.theta_a, self.theta_phi)

    @property
    def is_scalar(self) -> bool:
        return not (self.qpow or self.eta or self.theta_a or self.theta_phi)

    def __str__(self) -> str:
        parts = []
        if self.scalar != 1 or self.is_scalar:
            parts.append(str(self.scalar))
        if self.qpow:
            parts.append("q" if self.qpow == 1 else f"q^{self.qpow}")
        for k, e in self.theta_a:
            base = "a(q)" if k == 1 else f"a(q^{k})"
            parts.append(base if e == 1 else f"{base}^{e}")
        for k, e in self.theta_phi:
            base = "phi(q)" if k == 1 else f"phi(q^{k})"
            parts.append(base if e == 1 else f"{base}^{e}")
        for k, e in self.eta:
            parts.append(f"f{k}" if e == 1 else f"f{k}^{e}")
        text = " ".join(parts)
        if self.denom_log2:
            text += f" / {1 << self.denom_log2}"
        return text


def apply_monomial(s: Series, mono: EtaMonomial) -> Series:
    """Multiply ``s`` by the numerator of ``mono`` (the 2-power denominator is ignored).

    Positive eta exponents are applied before negative ones, one sparse pass
    per unit of exponent; theta factors are multiplied densely at the end.
    """
    n = s.order
    ring = s.ring
    out = s
    if mono.qpow:
        coeffs = ring.zeros(n)
        if mono.qpow < n:
            coeffs[mono.qpow :] = s.coeffs[: n - mono.qpow]
        out = Series(ring, coeffs, _trusted=True)
    if mono.scalar != 1:
        out = mono.scalar * out
    for k, e in sorted(mono.eta, key=lambda ke: ke[1] < 0):
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            out = eta_mul(out, k, step)
    for k, d in mono.theta_a:
        out = mul(out, power(theta_a(k, n, ring), d))
    for k, d in mono.theta_phi:
        out = mul(out, power(theta_phi(n, ring, k), d))
    return out


def eta_quotient(mono: EtaMonomial, order: int, ring: Ring = EXACT) -> Series:
    """Series of the numerator of ``mono``; callers apply ``halve_exact`` for the denominator."""
    return apply_monomial(Series.one(order, ring), mono)


def theta_phi(order: int, ring: Ring = EXACT, k: int = 1) -> Series:
    """``phi(q^k) = sum_{n in ZZ} q^{k n^2}``."""
    coeffs = [0] * order
    n = 0
    while k * n * n < order:
        coeffs[k * n * n] += 1 if n == 0 else 2
        n += 1
    return Series.from_coeffs(coeffs, ring)


def theta_a(k: int, order: int, ring: Ring = EXACT) -> Series:
    """Cubic theta ``a(q^k) = sum_{m,n} q^{k (m^2 + m n + n^2)}`` by lattice enumeration."""
    if k < 1:
        raise SeriesError(f"theta step must be positive, got {k}")
    bound = -(-order // k)  # forms below this value contribute
    # m^2 + mn + n^2 >= 3 max(|m|,|n|)^2 / 4
    r = isqrt(4 * bound // 3 + 1) + 1
    m = np.arange(-r, r + 1, dtype=np.int64)
    forms = (m[:, None] ** 2 + m[:, None] * m[None, :] + m[None, :] ** 2).ravel()
    counts = np.bincount(forms[forms < bound], minlength=bound)
    coeffs = [0] * order
    for t in np.flatnonzero(counts):
        coeffs[k * int(t)] = int(counts[t])
    return Series.from_coeffs(coeffs, ring)


def elementary_congruences(order: int = 1000) -> dict[str, bool]:
    """The five mod-2^j facts about ``a(q)`` and ``f_1`` used throughout the derivations."""
    a = theta_a(1, order)
    f1, f2 = eta_series(1, order), eta_series(2, order)
    one = Series.one(order)

    def agree(x: Series, y: Series, m: int) -> bool:
        ring = Ring.mod(m)
        return x.reduce(ring) == y.reduce(ring)

    return {
        "a(q) = 1 mod 2": agree(a, one, 2),
        "a(q)^2 = 1 mod 4": agree(mul(a, a), one, 4),
        "f1^2 = f2 mod 2": agree(power(f1, 2), f2, 2),
        "f1^4 = f2^2 mod 4": agree(power(f1, 4), power(f2, 2), 4),
        "f1^8 = f2^4 mod 8": agree(power(f1, 8), power(f2, 4), 8),
    }

