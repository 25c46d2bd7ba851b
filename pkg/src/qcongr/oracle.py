"""Ground-truth PD, PDO, PD_t, PDO_t by counting, independent of the series engine.

A partition with distinct part sizes of multiplicities ``m_1, ..., m_r`` has
``prod m_i`` designated versions, each carrying ``r`` tagged parts.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterator

import numpy as np

ENUMERATION_LIMIT = 45
DP_LIMIT = 5000


class OracleLimitError(ValueError):
    pass


def _partitions(n: int, largest: int, step: int = 1) -> Iterator[list[int]]:
    """Partitions of ``n`` into parts ``<= largest`` as lists of multiplicities per size."""
    # parts restricted to sizes congruent to 1 mod step when step == 2
    if n == 0:
        yield []
        return
    for size in range(min(n, largest), 0, -1):
        if step == 2 and size % 2 == 0:
            continue
        for mult in range(n // size, 0, -1):
            for rest in _partitions(n - mult * size, size - 1, step):
                yield [mult] + rest


def enumerate_counts(n: int) -> tuple[int, int, int, int]:
    """``(PD(n), PDO(n), PD_t(n), PDO_t(n))`` by listing every partition of ``n``."""
    if n < 0 or n > ENUMERATION_LIMIT:
        raise OracleLimitError(f"enumeration supports 0 <= n <= {ENUMERATION_LIMIT}, got {n}")
    totals = []
    for step in (1, 2):
        count = tagged = 0
        for mults in _partitions(n, n, step):
            ways = 1
            for m in mults:
                ways *= m
            count += ways
            tagged += len(mults) * ways
        totals.append((count, tagged))
    (pd, pd_t), (pdo, pdo_t) = totals
    return pd, pdo, pd_t, pdo_t


@dataclass(frozen=True)
class OracleTable:
    max_n: int
    pd: tuple[int, ...]
    pdo: tuple[int, ...]
    pd_t: tuple[int, ...]
    pdo_t: tuple[int, ...]
    method: str

    def sequence(self, name: str) -> tuple[int, ...]:
        return {"PD": self.pd, "PDO": self.pdo, "PDt": self.pd_t, "PDOt": self.pdo_t}[name]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "PD", "PDO", "PDt", "PDOt"])
        for n in range(self.max_n + 1):
            writer.writerow([n, self.pd[n], self.pdo[n], self.pd_t[n], self.pdo_t[n]])
        return buf.getvalue()


def enumeration_table(max_n: int) -> OracleTable:
    rows = [enumerate_counts(n) for n in range(max_n + 1)]
    cols = list(zip(*rows))
    return OracleTable(max_n, *(tuple(c) for c in cols), method="enumeration")


def _over_square(x: np.ndarray, s: int) -> np.ndarray:
    """Multiply by ``1/(1 - q^s)^2`` via two strided prefix sums."""
    n = len(x)
    rows = -(-n // s)
    padded = np.empty(rows * s, dtype=object)
    padded.fill(0)
    padded[:n] = x
    grid = padded.reshape(rows, s)
    grid = np.cumsum(np.cumsum(grid, axis=0), axis=0)
    return grid.reshape(-1)[:n]


def _shifted(x: np.ndarray, e: int) -> np.ndarray:
    out = np.empty(len(x), dtype=object)
    out.fill(0)
    if e < len(x):
        out[e:] = x[: len(x) - e]
    return out


def _sweep(max_n: int, sizes) -> tuple[list[int], list[int]]:
    # (A, T) -> (A B_s, T B_s + A C_s) with C_s = sum_{m>=1} m q^{ms} = q^s/(1-q^s)^2
    # and B_s = 1 + C_s = (1 - q^s + q^{2s})/(1-q^s)^2
    n = max_n + 1
    count = np.empty(n, dtype=object)
    count.fill(0)
    count[0] = 1
    tagged = count.copy()
    tagged[0] = 0
    for s in sizes:
        u = _over_square(count, s)
        w = _over_square(tagged, s)
        u_s = _shifted(u, s)
        count = u - u_s + _shifted(u, 2 * s)
        tagged = w - _shifted(w, s) + _shifted(w, 2 * s) + u_s
    return [int(v) for v in count], [int(v) for v in tagged]


def weighted_dp(max_n: int) -> OracleTable:
    """All four sequences up to ``max_n`` by the tag-weighted product sweep over part sizes."""
    if max_n < 0 or max_n > DP_LIMIT:
        raise OracleLimitError(f"weighted DP supports 0 <= max_n <= {DP_LIMIT}, got {max_n}")
    pd, pd_t = _sweep(max_n, range(1, max_n + 1))
    pdo, pdo_t = _sweep(max_n, range(1, max_n + 1, 2))
    return OracleTable(max_n, tuple(pd), tuple(pdo), tuple(pd_t), tuple(pdo_t), method="weighted-dp")
