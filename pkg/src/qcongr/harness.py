"""Congruence claims over index forms, checked against long coefficient tables.

An index form is ``coef * prod p^(scale*v + offset) * (a*n + b)`` where each
``v`` is a named tower variable with a lower bound. Tower boxes are not fixed
in advance: every assignment whose smallest index lies below the scan order is
tested.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .identities import MACROS, Evaluator
from .oracle import DP_LIMIT, weighted_dp
from .qexpr import parse_expr
from .series import NotDivisible, Ring

SEQUENCES = ("PDt", "PDOt")
GENERATING = {"PDt": "PDT", "PDOt": "PDOT"}
ORACLE_CHECK_LIMIT = 2000
MIN_ORDER = 16


class HarnessError(ValueError):
    pass


@dataclass(frozen=True)
class Tower:
    p: int
    var: str | None = None
    scale: int = 1
    offset: int = 0

    def exponent(self, values: dict[str, int]) -> int:
        if self.var is None:
            return self.offset
        return self.scale * values[self.var] + self.offset


@dataclass(frozen=True)
class IndexForm:
    a: int
    b: int
    coef: int = 1
    towers: tuple[Tower, ...] = ()
    var_min: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0 or self.coef < 1:
            raise HarnessError(f"index form needs a, b >= 0 and coef >= 1: {self}")
        for t in self.towers:
            if t.p < 2:
                raise HarnessError(f"tower base must be at least 2, got {t.p}")
            if t.var is not None and t.scale < 1:
                raise HarnessError(f"tower variable {t.var} needs a positive scale")
            if t.var is not None and t.var not in dict(self.var_min):
                raise HarnessError(f"tower variable {t.var} has no lower bound")

    @property
    def variables(self) -> dict[str, int]:
        return dict(self.var_min)

    def multiplier(self, values: dict[str, int]) -> int:
        m = self.coef
        for t in self.towers:
            e = t.exponent(values)
            if e < 0:
                raise HarnessError(f"negative tower exponent at {values}")
            m *= t.p**e
        return m

    def index(self, n: int, values: dict[str, int] | None = None) -> int:
        return self.multiplier(values or {}) * (self.a * n + self.b)

    def __str__(self) -> str:
        parts = [] if self.coef == 1 else [str(self.coef)]
        for t in self.towers:
            if t.var is None:
                parts.append(f"{t.p}^{t.offset}")
                continue
            e = t.var if t.scale == 1 else f"{t.scale}{t.var}"
            if t.offset:
                e += f"+{t.offset}"
            parts.append(f"{t.p}^{e}" if len(e) == 1 else f"{t.p}^({e})")
        inner = f"{self.a}n+{self.b}" if self.b else f"{self.a}n"
        return "*".join(parts + [f"({inner})"]) if parts else inner


@dataclass(frozen=True)
class CongruenceClaim:
    id: str
    anchor: str
    seq: str
    lhs: IndexForm
    relation: str
    mod: int
    rhs: IndexForm | None = None
    probe: bool = False

    def __post_init__(self) -> None:
        if self.seq not in SEQUENCES:
            raise HarnessError(f"{self.id}: unknown sequence {self.seq!r}")
        if self.relation not in ("zero", "equal"):
            raise HarnessError(f"{self.id}: relation must be 'zero' or 'equal'")
        if (self.relation == "equal") != (self.rhs is not None):
            raise HarnessError(f"{self.id}: rhs is required exactly for 'equal' claims")
        if self.mod < 1:
            raise HarnessError(f"{self.id}: modulus must be positive")

    @property
    def variables(self) -> dict[str, int]:
        out = self.lhs.variables
        if self.rhs is not None:
            for v, lo in self.rhs.variables.items():
                out[v] = max(lo, out.get(v, lo))
        return out

    def __str__(self) -> str:
        head = f"{self.seq}({self.lhs})"
        if self.relation == "zero":
            return f"{head} = 0 (mod {self.mod})"
        return f"{head} = {self.seq}({self.rhs}) (mod {self.mod})"


# --- JSON -----------------------------------------------------------------------------


def _form_from_json(d: dict, where: str) -> IndexForm:
    try:
        towers = tuple(
            Tower(int(t["p"]), t.get("var"), int(t.get("scale", 1)), int(t.get("offset", 0)))
            for t in d.get("towers", ())
        )
        var_min = tuple(sorted((str(k), int(v)) for k, v in d.get("vars", {}).items()))
        return IndexForm(int(d["a"]), int(d["b"]), int(d.get("coef", 1)), towers, var_min)
    except (KeyError, TypeError, ValueError) as exc:
        raise HarnessError(f"{where}: bad index form ({exc})") from exc


def _form_to_json(f: IndexForm) -> dict:
    out: dict = {"a": str(f.a), "b": str(f.b)}
    if f.coef != 1:
        out["coef"] = str(f.coef)
    if f.towers:
        out["towers"] = [{"p": t.p, "var": t.var, "scale": t.scale, "offset": t.offset} for t in f.towers]
    if f.var_min:
        out["vars"] = dict(f.var_min)
    return out


def claim_from_json(d: dict) -> CongruenceClaim:
    cid = d.get("id", "?")
    try:
        rhs = _form_from_json(d["rhs"], f"{cid}.rhs") if "rhs" in d else None
        return CongruenceClaim(
            str(d["id"]),
            str(d.get("anchor", "")),
            d["seq"],
            _form_from_json(d["lhs"], f"{cid}.lhs"),
            d["relation"],
            int(d["mod"]),
            rhs,
            bool(d.get("probe", False)),
        )
    except KeyError as exc:
        raise HarnessError(f"{cid}: missing field {exc}") from exc


def claim_to_json(c: CongruenceClaim) -> dict:
    out = {"id": c.id, "anchor": c.anchor, "seq": c.seq, "lhs": _form_to_json(c.lhs), "relation": c.relation, "mod": c.mod}
    if c.rhs is not None:
        out["rhs"] = _form_to_json(c.rhs)
    if c.probe:
        out["probe"] = True
    return out


def default_claims_path() -> Path:
    return Path(str(resources.files("qcongr") / "data" / "claims.json"))


def load_claims(path: str | Path | None = None) -> list[CongruenceClaim]:
    path = Path(path) if path is not None else default_claims_path()
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise HarnessError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    claims = [claim_from_json(d) for d in doc["claims"]]
    seen: set[str] = set()
    for c in claims:
        if c.id in seen:
            raise HarnessError(f"duplicate claim id {c.id}")
        seen.add(c.id)
    return claims


# --- tables ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tables:
    """Coefficient residues of each sequence below ``order``, one modulus per sequence."""

    order: int
    moduli: dict[str, int]
    values: dict[str, np.ndarray] = field(repr=False)

    def lookup(self, seq: str, idx: np.ndarray, m: int) -> np.ndarray:
        if self.moduli[seq] % m:
            raise HarnessError(f"table for {seq} is mod {self.moduli[seq]}, which {m} does not divide")
        return self.values[seq][idx] % m


def needed_moduli(claims: list[CongruenceClaim]) -> dict[str, int]:
    out = {s: 1 for s in SEQUENCES}
    for c in claims:
        out[c.seq] = math.lcm(out[c.seq], c.mod)
    return out


def build_tables(order: int, moduli: dict[str, int], evaluator: Evaluator | None = None, oracle_check: int = ORACLE_CHECK_LIMIT) -> Tables:
    """Expand the generating functions to ``order`` mod the given moduli, checked against the oracle."""
    if order < MIN_ORDER:
        raise HarnessError(f"order must be at least {MIN_ORDER}, got {order}")
    ev = evaluator or Evaluator()
    values: dict[str, np.ndarray] = {}
    check_n = min(order, oracle_check + 1, DP_LIMIT + 1)
    oracle = weighted_dp(check_n - 1) if check_n > 0 else None
    for seq, m in moduli.items():
        if m == 1:
            arr = np.zeros(order, dtype=np.int64)
        else:
            try:
                s = ev.evaluate(parse_expr(GENERATING[seq], MACROS), order, Ring.mod(m))
            except NotDivisible as exc:
                raise HarnessError(f"halving failed while building {seq}: {exc}") from exc
            arr = np.asarray(s.coeffs, dtype=np.int64)
        if oracle is not None:
            expect = np.array([v % m for v in oracle.sequence(seq)[:check_n]], dtype=np.int64)
            bad = np.flatnonzero(arr[:check_n] != expect)
            if bad.size:
                n = int(bad[0])
                raise HarnessError(f"{seq} table disagrees with oracle at n={n}: {arr[n]} vs {expect[n]} (mod {m})")
        arr.flags.writeable = False
        values[seq] = arr
    return Tables(order, dict(moduli), values)


# --- checking -------------------------------------------------------------------------


@dataclass
class ClaimReport:
    claim: CongruenceClaim
    order: int
    status: str  # passed | failed | untested, "probe-" prefixed for probes
    assignments: int
    tower_assignments: int
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status.endswith("passed")

    @property
    def failed(self) -> bool:
        return self.status == "failed"

    def to_dict(self) -> dict:
        return {
            "id": self.claim.id,
            "anchor": self.claim.anchor,
            "claim": str(self.claim),
            "status": self.status,
            "order": self.order,
            "assignments": self.assignments,
            "tower_assignments": self.tower_assignments,
            "counterexample": self.counterexample,
        }

    def line(self) -> str:
        tail = ""
        if self.counterexample:
            ce = self.counterexample
            tail = f"  first failure n={ce['n']} {ce['towers']} index={ce['index']} value={ce['value']}"
        return (
            f"{self.status.upper():<14}{self.claim.id:<22}{self.assignments:>8} assignments"
            f"  [{self.claim.anchor}]{tail}"
        )


def tower_assignments(claim: CongruenceClaim, order: int):
    """Every tower assignment for which some positive index of the claim lies below ``order``."""
    bounds = claim.variables
    names = sorted(bounds)
    forms = [claim.lhs] + ([claim.rhs] if claim.rhs is not None else [])

    def fits(values: dict[str, int]) -> bool:
        # smallest positive index; at b = 0 the index n = 0 is 0 for every tower
        return all(f.index(0 if f.b else 1, values) < order for f in forms)

    ranges = []
    for v in names:
        lo = bounds[v]
        hi = lo
        probe = dict(bounds)
        # every tower multiplier grows strictly with each variable
        while True:
            probe[v] = hi
            if not fits(probe):
                break
            hi += 1
        ranges.append(range(lo, hi))
    for combo in itertools.product(*ranges):
        values = dict(zip(names, combo))
        if fits(values):
            yield values


def _last_n(form: IndexForm, mult: int, order: int) -> int:
    """Largest n with ``mult * (a n + b) < order``; -1 if none, capped when a = 0."""
    top = (order - 1) // mult
    if top < form.b:
        return -1
    return (top - form.b) // form.a if form.a else 0


def check(claim: CongruenceClaim, tables: Tables, order: int | None = None) -> ClaimReport:
    order = min(order or tables.order, tables.order)
    m = claim.mod
    total = boxes = 0
    failure = None
    for values in tower_assignments(claim, order):
        lhs_mult = claim.lhs.multiplier(values)
        n_max = _last_n(claim.lhs, lhs_mult, order)
        if claim.rhs is not None:
            rhs_mult = claim.rhs.multiplier(values)
            n_max = min(n_max, _last_n(claim.rhs, rhs_mult, order))
        if n_max < 0:
            continue
        n = np.arange(n_max + 1, dtype=np.int64)
        idx = lhs_mult * (claim.lhs.a * n + claim.lhs.b)
        if m == 1:
            bad = np.array([], dtype=np.int64)
        else:
            left = tables.lookup(claim.seq, idx, m)
            if claim.rhs is None:
                bad = np.flatnonzero(left)
            else:
                ridx = rhs_mult * (claim.rhs.a * n + claim.rhs.b)
                bad = np.flatnonzero(left != tables.lookup(claim.seq, ridx, m))
        boxes += 1
        total += len(n)
        if bad.size and failure is None:
            i = int(bad[0])
            failure = {
                "n": i,
                "towers": values,
                "index": int(idx[i]),
                "value": int(tables.lookup(claim.seq, idx[i : i + 1], m)[0]),
            }
            if claim.rhs is not None:
                failure["rhs_index"] = int(ridx[i])
                failure["rhs_value"] = int(tables.lookup(claim.seq, ridx[i : i + 1], m)[0])
    if total == 0:
        status = "untested"
    elif failure:
        status = "failed"
    else:
        status = "passed"
    if claim.probe:
        status = "probe-" + status
    return ClaimReport(claim, order, status, total, boxes, failure)


@dataclass
class Summary:
    order: int
    reports: list[ClaimReport]
    implications: list["ImplicationReport"] = field(default_factory=list)

    @property
    def failures(self) -> list[ClaimReport]:
        return [r for r in self.reports if r.failed]

    @property
    def untested(self) -> list[ClaimReport]:
        return [r for r in self.reports if r.status.endswith("untested")]

    @property
    def ok(self) -> bool:
        return not self.failures and all(i.ok for i in self.implications)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.reports:
            out[r.status] = out.get(r.status, 0) + 1
        return out

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "ok": self.ok,
            "counts": self.counts(),
            "claims": [r.to_dict() for r in self.reports],
            "implications": [i.to_dict() for i in self.implications],
        }


def run_all(
    order: int = 50000,
    claims: list[CongruenceClaim] | None = None,
    tables: Tables | None = None,
    threads: int = 4,
    evaluator: Evaluator | None = None,
) -> Summary:
    if order < MIN_ORDER:
        raise HarnessError(f"order must be at least {MIN_ORDER}, got {order}")
    claims = load_claims() if claims is None else claims
    if tables is None:
        tables = build_tables(order, needed_moduli(claims), evaluator)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        reports = list(pool.map(lambda c: check(c, tables, order), claims))
    by_id = {c.id: c for c in claims}
    implications = [check_implication(imp, by_id, tables, order) for imp in TOWER_IMPLICATIONS if imp.family in by_id]
    return Summary(order, reports, implications)


# --- tower families as consequences of the two-tower equality ----------------------------


@dataclass(frozen=True)
class Implication:
    """``family`` at (k, l, n) is ``equality`` at (k-1, l-1, n') whose base index is ``zero`` at n'.

    ``n' = reindex_a * n + reindex_b``.
    """

    family: str
    equality: str
    zero: str
    reindex_a: int
    reindex_b: int


TOWER_IMPLICATIONS = (
    Implication("C13-1", "T12-3L4K-24N12", "T12-96N60", 4, 2),
    Implication("C13-2", "T12-3L4K-24N12", "T12-96N84", 4, 3),
    Implication("C13-3", "T12-3L4K-24N12", "T12-144N84", 6, 3),
    Implication("C13-4", "T12-3L4K-24N12", "T12-144N132", 6, 5),
)


@dataclass
class ImplicationReport:
    implication: Implication
    status: str
    assignments: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in ("passed", "untested")

    def to_dict(self) -> dict:
        imp = self.implication
        return {
            "family": imp.family,
            "via": [imp.equality, imp.zero],
            "status": self.status,
            "assignments": self.assignments,
            "detail": self.detail,
        }

    def line(self) -> str:
        imp = self.implication
        return f"{self.status.upper():<14}{imp.family} via {imp.equality} + {imp.zero}  {self.assignments} assignments {self.detail}".rstrip()


def check_implication(imp: Implication, claims: dict[str, CongruenceClaim], tables: Tables, order: int) -> ImplicationReport:
    """Confirm the index arithmetic of the reduction and that both cited claims hold where it lands."""
    fam, eq, zero = claims[imp.family], claims[imp.equality], claims[imp.zero]
    m = fam.mod
    count = 0
    for values in tower_assignments(fam, order):
        shifted = {v: x - 1 for v, x in values.items()}
        n = 0
        while True:
            idx = fam.lhs.index(n, values)
            if idx >= order:
                break
            n2 = imp.reindex_a * n + imp.reindex_b
            via = eq.lhs.index(n2, shifted)
            base = eq.rhs.index(n2, shifted)
            if via != idx or base != zero.lhs.index(n):
                return ImplicationReport(imp, "failed", count, f"index mismatch at n={n} {values}: {idx} vs {via}, {base}")
            vals = tables.lookup(fam.seq, np.array([idx, base]), m)
            if vals[0] != vals[1] or vals[1] != 0:
                return ImplicationReport(imp, "failed", count, f"value mismatch at n={n} {values}")
            count += 1
            n += 1
    return ImplicationReport(imp, "passed" if count else "untested", count)
