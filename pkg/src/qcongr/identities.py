"""Identity registry: evaluate both sides of a displayed q-series identity and compare.

Congruences modulo ``m`` are evaluated directly in ZZ/m.  A halving node (or a
monomial with a 2-power denominator) evaluates its child in ZZ/(m 2^d) and
divides exactly, so "dividing by 2" never happens in a ring where 2 is a zero
divisor.
"""

from __future__ import annotations

import json
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Iterable

from . import oracle
from .qexpr import (
    Dissect,
    ExprError,
    HalveBy,
    Leaf,
    NegateQ,
    Oracle,
    Product,
    QExpr,
    Shift,
    Substitute,
    Sum,
    from_json,
    parse_expr,
    to_json,
)
from .qfunctions import apply_monomial, eta_quotient
from .series import (
    EXACT,
    Ring,
    Series,
    SeriesError,
    dissect,
    halve_exact,
    linear_combine,
    mul,
    negate_q,
    shift,
    substitute,
)

# Generating functions of the four counting sequences.  PD and PDO follow from
# the product prod_s (1 + q^s/(1-q^s)^2) over all (resp. odd) part sizes.
GENERATING_FUNCTIONS = {
    "PDt": "(f3^5/(f1^3 f6^2) - f6/(f1 f2 f3))/2",
    "PDOt": "q f2 f3^2 f12^2/(f1^2 f6)",
    "PD": "f6/(f1 f2 f3)",
    "PDO": "f4 f6^2/(f1 f3 f12)",
}
MACROS: dict[str, QExpr] = {
    "PDT": parse_expr(GENERATING_FUNCTIONS["PDt"]),
    "PDOT": parse_expr(GENERATING_FUNCTIONS["PDOt"]),
    "PDGF": parse_expr(GENERATING_FUNCTIONS["PD"]),
    "PDOGF": parse_expr(GENERATING_FUNCTIONS["PDO"]),
}


class EvaluationError(Exception):
    def __init__(self, path: str, cause: Exception):
        super().__init__(f"{path}: {cause}")
        self.path = path
        self.cause = cause


class RegistryError(ValueError):
    pass


def _oracle_series(name: str, order: int) -> Series:
    table = _oracle_table(order - 1)
    return Series.from_coeffs(table.sequence(name)[:order])


_ORACLE_CACHE: dict[int, oracle.OracleTable] = {}
_ORACLE_LOCK = threading.Lock()


def _oracle_table(max_n: int) -> oracle.OracleTable:
    with _ORACLE_LOCK:
        for size, table in _ORACLE_CACHE.items():
            if size >= max_n:
                return table
        table = oracle.weighted_dp(max_n)
        _ORACLE_CACHE.clear()
        _ORACLE_CACHE[max_n] = table
        return table


class Evaluator:
    """Bottom-up evaluation with a cache of the largest order computed per (node, ring)."""

    def __init__(self, oracle_source: Callable[[str, int], Series] | None = None):
        self.oracle_source = oracle_source or _oracle_series
        self._cache: dict[QExpr, dict[Ring, Series]] = {}
        self._lock = threading.Lock()
        self._node_locks: dict[tuple[QExpr, Ring], threading.Lock] = {}

    def __call__(self, expr: QExpr, order: int, ring: Ring = EXACT) -> Series:
        return self.evaluate(expr, order, ring)

    def _lookup(self, expr: QExpr, order: int, ring: Ring) -> Series | None:
        # any cached ring that maps onto ``ring`` will do: ZZ, or ZZ/M with ring.modulus | M
        with self._lock:
            entries = list(self._cache.get(expr, {}).items())
        for cached_ring, value in entries:
            if value.order < order:
                continue
            if cached_ring == ring:
                return value.truncate(order)
            if not ring.is_exact and (cached_ring.is_exact or cached_ring.modulus % ring.modulus == 0):
                return value.truncate(order).reduce(ring)
        return None

    def evaluate(self, expr: QExpr, order: int, ring: Ring = EXACT, path: str = "expr") -> Series:
        if order < 1:
            raise EvaluationError(path, SeriesError("order must be positive"))
        if not isinstance(expr, (Leaf, Sum, Product, HalveBy, Oracle)):
            return self._evaluate_uncached(expr, order, ring, path)
        with self._lock:
            node_lock = self._node_locks.setdefault((expr, ring), threading.Lock())
        # threads asking for the same node wait for one computation; locks are taken
        # parent before child, so the acquisition order follows the tree and cannot cycle
        with node_lock:
            hit = self._lookup(expr, order, ring)
            if hit is not None:
                return hit
            value = self._evaluate_uncached(expr, order, ring, path)
            with self._lock:
                slot = self._cache.setdefault(expr, {})
                old = slot.get(ring)
                if old is None or old.order < value.order:
                    slot[ring] = value
        return value

    def _evaluate_uncached(self, expr: QExpr, order: int, ring: Ring, path: str) -> Series:
        try:
            return self._evaluate(expr, order, ring, path)
        except EvaluationError:
            raise
        except (SeriesError, ExprError, ValueError, oracle.OracleLimitError) as exc:
            raise EvaluationError(path, exc) from exc

    def _lifted(self, child_eval, d: int, ring: Ring) -> Series:
        lifted = EXACT if ring.is_exact else Ring.mod(ring.modulus << d)
        return halve_exact(child_eval(lifted), d)

    def _evaluate(self, expr: QExpr, n: int, ring: Ring, path: str) -> Series:
        ev = self.evaluate
        if isinstance(expr, Leaf):
            mono = expr.mono
            if mono.denom_log2:
                return self._lifted(lambda r: eta_quotient(mono.numerator, n, r), mono.denom_log2, ring)
            return eta_quotient(mono, n, ring)
        if isinstance(expr, Oracle):
            return self.oracle_source(expr.name, n).reduce(ring)
        if isinstance(expr, Sum):
            parts = [ev(c, n, ring, f"{path}.sum[{i}]") for i, c in enumerate(expr.children)]
            return linear_combine([(1, p) for p in parts])
        if isinstance(expr, Product):
            return self._product(expr, n, ring, path)
        if isinstance(expr, Dissect):
            child = ev(expr.child, expr.m * n, ring, f"{path}.dissect")
            return dissect(child, expr.m, expr.r)
        if isinstance(expr, Substitute):
            child = ev(expr.child, -(-n // expr.k), ring, f"{path}.sub")
            return substitute(child, expr.k, order=n)
        if isinstance(expr, Shift):
            if expr.e >= n:
                return Series.zero(n, ring)
            child = ev(expr.child, n - expr.e, ring, f"{path}.shift")
            return shift(child, expr.e, order=n)
        if isinstance(expr, HalveBy):
            return self._lifted(lambda r: ev(expr.child, n, r, f"{path}.halve"), expr.d, ring)
        if isinstance(expr, NegateQ):
            return negate_q(ev(expr.child, n, ring, f"{path}.negq"))
        raise EvaluationError(path, ExprError(f"unknown node {expr!r}"))

    def _product(self, expr: Product, n: int, ring: Ring, path: str) -> Series:
        # dense factors are multiplied out first; plain eta monomials are then
        # applied with sparse passes
        sparse = [c.mono for c in expr.children if isinstance(c, Leaf) and not c.mono.denom_log2]
        dense = [
            (i, c) for i, c in enumerate(expr.children) if not (isinstance(c, Leaf) and not c.mono.denom_log2)
        ]
        if not dense:
            acc = Series.one(n, ring)
        else:
            acc = None
            for i, c in dense:
                value = self.evaluate(c, n, ring, f"{path}.product[{i}]")
                acc = value if acc is None else mul(acc, value)
        for mono in sparse:
            acc = apply_monomial(acc, mono)
        return acc


_DEFAULT_EVALUATOR = Evaluator()


def evaluate(expr: QExpr, order: int, ring: Ring = EXACT) -> Series:
    """Series of ``expr`` to ``order`` over ``ring`` (shared cache)."""
    return _DEFAULT_EVALUATOR.evaluate(expr, order, ring)


# --- claims -----------------------------------------------------------------


@dataclass(frozen=True)
class IdentityClaim:
    id: str
    lhs: QExpr
    rhs: QExpr
    modulus: int | None  # None: exact equality
    anchor: str
    order: int = 500
    probe: bool = False
    note: str = ""

    @property
    def relation(self) -> str:
        return "exact" if self.modulus is None else f"mod:{self.modulus}"

    @property
    def ring(self) -> Ring:
        return EXACT if self.modulus is None else Ring.mod(self.modulus)


@dataclass
class IdentityReport:
    id: str
    relation: str
    order: int
    passed: bool
    anchor: str = ""
    probe: bool = False
    first_mismatch: int | None = None
    lhs_coeff: int | None = None
    rhs_coeff: int | None = None
    error: str | None = None
    elapsed: float = 0.0
    note: str = ""

    @property
    def status(self) -> str:
        word = "passed" if self.passed else ("error" if self.error else "failed")
        return f"probe-{word}" if self.probe else word

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "status": self.status,
            "relation": self.relation,
            "order": self.order,
            "anchor": self.anchor,
            "first_mismatch": self.first_mismatch,
            "lhs_coeff": self.lhs_coeff,
            "rhs_coeff": self.rhs_coeff,
            "error": self.error,
            "elapsed": round(self.elapsed, 4),
            "note": self.note,
        }

    def line(self) -> str:
        text = f"{self.status.upper():<13} {self.id:<22} {self.relation:<6} N={self.order:<5}"
        if self.error:
            text += f" error: {self.error}"
        elif not self.passed:
            text += f" first mismatch at q^{self.first_mismatch}: lhs={self.lhs_coeff} rhs={self.rhs_coeff}"
        text = f"{text}  [{self.anchor}]"
        if self.probe and self.note:
            text += f"  note: {self.note}"
        return text


def verify(claim: IdentityClaim, order: int | None = None, evaluator: Evaluator | None = None) -> IdentityReport:
    """Compare both sides coefficientwise for ``q^0 .. q^(order-1)``."""
    n = claim.order if order is None else order
    if n < 2:
        raise ValueError("verification order must be at least 2")
    ev = evaluator or _DEFAULT_EVALUATOR
    report = IdentityReport(claim.id, claim.relation, n, False, claim.anchor, claim.probe, note=claim.note)
    start = time.perf_counter()
    try:
        lhs = ev.evaluate(claim.lhs, n, claim.ring, "lhs")
        rhs = ev.evaluate(claim.rhs, n, claim.ring, "rhs")
    except EvaluationError as exc:
        report.error = str(exc)
    else:
        diff = [i for i in range(n) if lhs.coeffs[i] != rhs.coeffs[i]][:1]
        if diff:
            i = diff[0]
            report.first_mismatch, report.lhs_coeff, report.rhs_coeff = i, lhs[i], rhs[i]
        else:
            report.passed = True
    report.elapsed = time.perf_counter() - start
    return report


def verify_all(
    claims: Iterable[IdentityClaim],
    order: int | None = None,
    threads: int = 1,
    evaluator: Evaluator | None = None,
) -> list[IdentityReport]:
    claims = list(claims)
    ev = evaluator or Evaluator()
    # largest coefficient demand first, so later claims find their inputs cached
    schedule = sorted(
        range(len(claims)),
        key=lambda i: (_demand(claims[i], order), claims[i].modulus or 0),
        reverse=True,
    )
    reports: list[IdentityReport | None] = [None] * len(claims)

    def run(i: int) -> None:
        reports[i] = verify(claims[i], order, ev)

    if threads <= 1:
        for i in schedule:
            run(i)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run, schedule))
    return reports


def _expr_demand(expr: QExpr, n: int) -> int:
    """Largest truncation order any subexpression needs when ``expr`` is wanted to ``n``."""
    if isinstance(expr, Dissect):
        return _expr_demand(expr.child, expr.m * n)
    if isinstance(expr, Substitute):
        return _expr_demand(expr.child, -(-n // expr.k))
    if isinstance(expr, (Shift, HalveBy, NegateQ)):
        return _expr_demand(expr.child, n)
    if isinstance(expr, (Sum, Product)):
        return max(_expr_demand(c, n) for c in expr.children)
    return n


def _demand(claim: IdentityClaim, order: int | None) -> int:
    n = claim.order if order is None else order
    return max(_expr_demand(claim.lhs, n), _expr_demand(claim.rhs, n))


# --- registry file ------------------------------------------------------------


def default_registry_path() -> Path:
    return Path(str(resources.files("qcongr") / "data" / "identities.json"))


def claim_to_json(claim: IdentityClaim) -> dict[str, Any]:
    out = {
        "id": claim.id,
        "anchor": claim.anchor,
        "relation": claim.relation,
        "order": claim.order,
        "lhs": to_json(claim.lhs),
        "rhs": to_json(claim.rhs),
    }
    if claim.probe:
        out["probe"] = True
    if claim.note:
        out["note"] = claim.note
    return out


def claim_from_json(obj: Any, where: str) -> IdentityClaim:
    if not isinstance(obj, dict):
        raise RegistryError(f"{where}: claim must be an object")
    for key in ("id", "anchor", "relation", "lhs", "rhs"):
        if key not in obj:
            raise RegistryError(f"{where}: missing field {key!r}")
    where = f"{where} ({obj['id']})"
    relation = obj["relation"]
    if relation == "exact":
        modulus = None
    elif isinstance(relation, str) and relation.startswith("mod:") and relation[4:].isdigit() and int(relation[4:]) >= 1:
        modulus = int(relation[4:])
    else:
        raise RegistryError(f"{where}.relation: expected 'exact' or 'mod:<m>', got {relation!r}")
    order = obj.get("order", 500)
    if not isinstance(order, int) or isinstance(order, bool) or order < 2:
        raise RegistryError(f"{where}.order: must be an integer >= 2")
    try:
        lhs = from_json(obj["lhs"], f"{where}.lhs")
        rhs = from_json(obj["rhs"], f"{where}.rhs")
    except ExprError as exc:
        raise RegistryError(str(exc)) from None
    return IdentityClaim(
        id=str(obj["id"]),
        lhs=lhs,
        rhs=rhs,
        modulus=modulus,
        anchor=str(obj["anchor"]),
        order=order,
        probe=bool(obj.get("probe", False)),
        note=str(obj.get("note", "")),
    )


def load_registry(path: str | Path | None = None) -> list[IdentityClaim]:
    path = Path(path) if path is not None else default_registry_path()
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RegistryError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    items = data.get("claims") if isinstance(data, dict) else data
    if not isinstance(items, list):
        raise RegistryError(f"{path}: expected a list of claims")
    claims = [claim_from_json(obj, f"{path.name}: claims[{i}]") for i, obj in enumerate(items)]
    seen: set[str] = set()
    for c in claims:
        if c.id in seen:
            raise RegistryError(f"{path.name}: duplicate id {c.id!r}")
        seen.add(c.id)
    return claims


def filter_claims(claims: Iterable[IdentityClaim], pattern: str | None) -> list[IdentityClaim]:
    if not pattern:
        return list(claims)
    return [c for c in claims if fnmatchcase(c.id, pattern)]
