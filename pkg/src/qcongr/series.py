"""Truncated formal power series over ZZ or ZZ/MZZ.

A :class:`Series` holds the coefficients of ``q^0 .. q^(order-1)``.  Every
operation truncates eagerly, so the order of a result is never larger than
the order of its inputs.  Exact coefficients live in numpy ``object`` arrays
(Python ints); residues live in ``int64`` arrays normalized to ``[0, M)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_MODULUS = 1 << 62
# int64 products of residues are safe below this modulus
_NATIVE_PRODUCT_LIMIT = 3_037_000_499


class SeriesError(ValueError):
    """Base class for series arithmetic failures."""


class RingMismatch(SeriesError):
    pass


class NotInvertible(SeriesError):
    pass


class NotDivisible(SeriesError):
    def __init__(self, index: int, value: int, divisor: int):
        super().__init__(f"coefficient {value} at index {index} is not divisible by {divisor}")
        self.index = index
        self.value = value
        self.divisor = divisor


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: exact integers when ``modulus`` is None, else ZZ/modulus."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        m = self.modulus
        if m is not None and not (1 <= m <= MAX_MODULUS):
            raise ValueError(f"modulus must lie in [1, 2^62], got {m}")

    @classmethod
    def mod(cls, m: int) -> "Ring":
        return cls(int(m))

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    @property
    def dtype(self):
        return object if self.modulus is None else np.int64

    def normalize(self, values) -> np.ndarray:
        """Convert ``values`` to this ring's canonical array form."""
        if self.modulus is None:
            arr = np.empty(len(values), dtype=object)
            arr[:] = [int(v) for v in values]
            return arr
        m = self.modulus
        if isinstance(values, np.ndarray) and values.dtype == np.int64:
            return np.mod(values, m)
        return np.array([int(v) % m for v in values], dtype=np.int64)

    def zeros(self, n: int) -> np.ndarray:
        if self.modulus is None:
            arr = np.empty(n, dtype=object)
            arr.fill(0)
            return arr
        return np.zeros(n, dtype=np.int64)

    def __str__(self) -> str:
        return "ZZ" if self.modulus is None else f"ZZ/{self.modulus}"


EXACT = Ring()


class Series:
    """Immutable truncated power series ``sum coeffs[n] q^n`` for ``n < order``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs, *, _trusted: bool = False):
        if not _trusted:
            coeffs = ring.normalize(coeffs)
        if len(coeffs) < 1:
            raise SeriesError("series order must be positive")
        coeffs.flags.writeable = False
        self.ring = ring
        self.coeffs = coeffs

    # construction -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, values: Iterable[int], ring: Ring = EXACT, order: int | None = None) -> "Series":
        values = list(values)
        if order is not None:
            values = (values + [0] * order)[:order]
        return cls(ring, values)

    @classmethod
    def monomial(cls, order: int, ring: Ring = EXACT, coeff: int = 1, power: int = 0) -> "Series":
        arr = ring.zeros(order)
        if power < order:
            arr[power] = coeff if ring.modulus is None else coeff % ring.modulus
        return cls(ring, arr, _trusted=True)

    @classmethod
    def one(cls, order: int, ring: Ring = EXACT) -> "Series":
        return cls.monomial(order, ring)

    @classmethod
    def zero(cls, order: int, ring: Ring = EXACT) -> "Series":
        return cls(ring, ring.zeros(order), _trusted=True)

    # basic protocol -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return int(self.coeffs[n])

    def to_list(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.to_list()[:8])
        more = ", ..." if self.order > 8 else ""
        return f"Series({self.ring}, order={self.order}, [{head}{more}])"

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return Series(self.ring, self.coeffs[:order].copy(), _trusted=True)

    def reduce(self, ring: Ring) -> "Series":
        """Map into ``ring``; allowed from ZZ to any ZZ/M and from ZZ/M to ZZ/d with d | M."""
        if ring == self.ring:
            return self
        if ring.is_exact:
            raise RingMismatch("cannot lift residues back to ZZ")
        if self.ring.modulus is not None and self.ring.modulus % ring.modulus:
            raise RingMismatch(f"{ring} is not a quotient of {self.ring}")
        if self.ring.is_exact:
            m = ring.modulus
            return Series(ring, np.array([int(c) % m for c in self.coeffs], dtype=np.int64), _trusted=True)
        return Series(ring, np.mod(self.coeffs, ring.modulus), _trusted=True)

    # operator sugar -----------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other: "Series") -> "Series":
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self) -> "Series":
        return linear_combine([(-1, self)])

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return linear_combine([(int(other), self)])

    __rmul__ = __mul__


def _check_rings(series: Sequence[Series]) -> Ring:
    ring = series[0].ring
    for s in series[1:]:
        if s.ring != ring:
            raise RingMismatch(f"ring mismatch: {ring} vs {s.ring}")
    return ring


def _scale(arr: np.ndarray, c: int, ring: Ring) -> np.ndarray:
    m = ring.modulus
    if m is None:
        return arr * c
    c %= m
    if c == 0:
        return np.zeros_like(arr)
    if c == 1:
        return arr.copy()
    if m <= _NATIVE_PRODUCT_LIMIT:
        return (arr * c) % m
    return np.array([(int(v) * c) % m for v in arr], dtype=np.int64)


def linear_combine(terms: Sequence[tuple[int, Series]]) -> Series:
    """Coefficientwise ``sum scalar * s`` truncated to the smallest input order."""
    if not terms:
        raise SeriesError("linear_combine needs at least one term")
    ring = _check_rings([s for _, s in terms])
    n = min(s.order for _, s in terms)
    m = ring.modulus
    out = ring.zeros(n)
    for c, s in terms:
        out = out + _scale(s.coeffs[:n], int(c), ring)
        if m is not None:
            out %= m
    return Series(ring, out, _trusted=True)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to ``min(order(a), order(b))`` (schoolbook)."""
    ring = _check_rings([a, b])
    n = min(a.order, b.order)
    x, y = a.coeffs[:n], b.coeffs[:n]
    m = ring.modulus
    if m is not None and (m - 1) ** 2 * n < (1 << 63):
        return Series(ring, np.convolve(x, y)[:n] % m, _trusted=True)
    if m is not None:
        x, y = x.astype(object), y.astype(object)
    if np.count_nonzero(x) > np.count_nonzero(y):
        x, y = y, x
    out = np.empty(n, dtype=object)
    out.fill(0)
    for i in np.flatnonzero(x):
        out[i:] += x[i] * y[: n - i]
    if m is not None:
        out = np.array([int(v) % m for v in out], dtype=np.int64)
    return Series(ring, out, _trusted=True)


def _unit_inverse(c: int, ring: Ring) -> int:
    if ring.modulus is None:
        if c in (1, -1):
            return c
        raise NotInvertible(f"non-invertible series: constant term {c} is not a unit in ZZ")
    m = ring.modulus
    if m == 1:
        return 0
    try:
        return pow(c, -1, m)
    except ValueError:
        raise NotInvertible(f"non-invertible series: constant term {c} is not a unit mod {m}") from None


def invert(a: Series) -> Series:
    """Multiplicative inverse by Newton iteration ``b <- b (2 - a b)``."""
    ring = a.ring
    u = _unit_inverse(int(a.coeffs[0]), ring)
    b = Series.monomial(1, ring, u)
    prec = 1
    while prec < a.order:
        prec = min(2 * prec, a.order)
        a_t = a.truncate(prec)
        b_t = Series(ring, np.concatenate([b.coeffs, ring.zeros(prec - b.order)]), _trusted=True)
        err = linear_combine([(-1, mul(a_t, b_t)), (1, Series.one(prec, ring))])
        b = linear_combine([(1, b_t), (1, mul(b_t, err))])
    return b


def power(a: Series, e: int) -> Series:
    """``a**e`` by repeated squaring; negative exponents invert first."""
    if e < 0:
        a, e = invert(a), -e
    result = Series.one(a.order, a.ring)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def dissect(a: Series, m: int, r: int) -> Series:
    """Reindexed arithmetic-progression extraction: ``b[n] = a[m n + r]``."""
    if m < 1 or not (0 <= r < m):
        raise SeriesError(f"bad dissection parameters m={m}, r={r}")
    if r >= a.order:
        raise SeriesError(f"order {a.order} leaves nothing at residue {r} mod {m}")
    return Series(a.ring, a.coeffs[r::m].copy(), _trusted=True)


def substitute(a: Series, k: int, order: int | None = None) -> Series:
    """``q -> q^k``; the result keeps ``order(a)`` unless ``order`` is given."""
    if k < 1:
        raise SeriesError(f"substitution step must be positive, got {k}")
    n = a.order if order is None else order
    out = a.ring.zeros(n)
    src = a.coeffs[: -(-n // k)]
    out[: len(src) * k : k] = src
    return Series(a.ring, out, _trusted=True)


def shift(a: Series, e: int, order: int | None = None) -> Series:
    """Multiply by ``q^e``; the result keeps ``order(a)`` unless ``order`` is given."""
    if e < 0:
        raise SeriesError("negative shifts would leave the power series ring")
    n = a.order if order is None else order
    out = a.ring.zeros(n)
    if e < n:
        src = a.coeffs[: n - e]
        out[e : e + len(src)] = src
    return Series(a.ring, out, _trusted=True)


def negate_q(a: Series) -> Series:
    """``q -> -q``."""
    out = a.coeffs.copy()
    out[1::2] = -out[1::2]
    if a.ring.modulus is not None:
        out %= a.ring.modulus
    return Series(a.ring, out, _trusted=True)


def halve_exact(a: Series, d: int) -> Series:
    """Divide every coefficient by ``2^d``.

    Over ZZ/M the ring must have been lifted beforehand: with ``M = 2^d M'``
    a residue divisible by ``2^d`` determines its quotient modulo ``M'``, so
    the result lives in ``ZZ/M'``.
    """
    if d < 0:
        raise SeriesError("halving exponent must be nonnegative")
    if d == 0:
        return a
    div = 1 << d
    ring = a.ring
    if ring.modulus is not None and ring.modulus % div:
        raise SeriesError(f"cannot divide by {div} in {ring}; lift the modulus first")
    if ring.is_exact:
        rem = np.array([int(c) & (div - 1) for c in a.coeffs])
    else:
        rem = a.coeffs & (div - 1)
    bad = np.flatnonzero(rem)
    if len(bad):
        i = int(bad[0])
        raise NotDivisible(i, int(a.coeffs[i]), div)
    if ring.is_exact:
        out = np.empty(a.order, dtype=object)
        out[:] = [int(c) >> d for c in a.coeffs]
        return Series(ring, out, _trusted=True)
    return Series(Ring(ring.modulus >> d), a.coeffs >> d, _trusted=True)
