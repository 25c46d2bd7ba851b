"""Expression trees over eta quotients and theta series, their JSON form, and a text notation.

Text notation (used to author registry files)::

    (f3^5/(f1^3 f6^2) - f6/(f1 f2 f3))/2
    dissect(PDT, 24, 12)
    2 f12 a(q^12) - 6 q^4 f36^3 - 2 q f12^3
    negq(a(q))            # a(-q); also written a(-q)
    oracle(PDt)           # sequence values from the combinatorial oracle

Juxtaposition multiplies.  Dividing by an eta monomial negates its exponents;
dividing by a power of two is recorded and applied by exact halving.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Mapping, Union

from .qfunctions import EtaMonomial

ORACLE_SEQUENCES = ("PD", "PDO", "PDt", "PDOt")


class ExprError(ValueError):
    """Malformed expression text or JSON; ``path`` locates the offending field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class Leaf:
    mono: EtaMonomial


@dataclass(frozen=True)
class Oracle:
    name: str


@dataclass(frozen=True)
class Sum:
    children: tuple["QExpr", ...]


@dataclass(frozen=True)
class Product:
    children: tuple["QExpr", ...]


@dataclass(frozen=True)
class Dissect:
    child: "QExpr"
    m: int
    r: int


@dataclass(frozen=True)
class Substitute:
    child: "QExpr"
    k: int


@dataclass(frozen=True)
class Shift:
    child: "QExpr"
    e: int


@dataclass(frozen=True)
class HalveBy:
    child: "QExpr"
    d: int


@dataclass(frozen=True)
class NegateQ:
    child: "QExpr"


QExpr = Union[Leaf, Oracle, Sum, Product, Dissect, Substitute, Shift, HalveBy, NegateQ]


def validate(expr: QExpr, path: str = "expr") -> None:
    """Check node parameters against the series-core preconditions."""
    if isinstance(expr, Leaf):
        return
    if isinstance(expr, Oracle):
        if expr.name not in ORACLE_SEQUENCES:
            raise ExprError(f"unknown sequence {expr.name!r}", path)
        return
    if isinstance(expr, (Sum, Product)):
        if not expr.children:
            raise ExprError("empty children", path)
        for i, c in enumerate(expr.children):
            validate(c, f"{path}.children[{i}]")
        return
    if isinstance(expr, Dissect):
        if expr.m < 1 or not 0 <= expr.r < expr.m:
            raise ExprError(f"bad dissection m={expr.m} r={expr.r}", path)
    elif isinstance(expr, Substitute):
        if expr.k < 1:
            raise ExprError(f"substitution step must be positive, got {expr.k}", path)
    elif isinstance(expr, Shift):
        if expr.e < 0:
            raise ExprError(f"negative shift {expr.e}", path)
    elif isinstance(expr, HalveBy):
        if expr.d < 0:
            raise ExprError(f"negative halving exponent {expr.d}", path)
    elif not isinstance(expr, NegateQ):
        raise ExprError(f"not an expression node: {expr!r}", path)
    validate(expr.child, f"{path}.child")


def has_halving(expr: QExpr) -> bool:
    if isinstance(expr, Leaf):
        return expr.mono.denom_log2 > 0
    if isinstance(expr, Oracle):
        return False
    if isinstance(expr, HalveBy):
        return True
    if isinstance(expr, (Sum, Product)):
        return any(has_halving(c) for c in expr.children)
    return has_halving(expr.child)


# --- JSON -----------------------------------------------------------------


def _exps_json(items) -> dict[str, int]:
    return {str(k): e for k, e in items}


def to_json(expr: QExpr) -> dict[str, Any]:
    if isinstance(expr, Leaf):
        m = expr.mono
        return {
            "kind": "eta",
            "scalar": str(m.scalar),
            "denom_log2": m.denom_log2,
            "qpow": m.qpow,
            "eta": _exps_json(m.eta),
            "a": _exps_json(m.theta_a),
            "phi": _exps_json(m.theta_phi),
        }
    if isinstance(expr, Oracle):
        return {"kind": "oracle", "seq": expr.name}
    if isinstance(expr, Sum):
        return {"kind": "sum", "children": [to_json(c) for c in expr.children]}
    if isinstance(expr, Product):
        return {"kind": "product", "children": [to_json(c) for c in expr.children]}
    if isinstance(expr, Dissect):
        return {"kind": "dissect", "m": expr.m, "r": expr.r, "child": to_json(expr.child)}
    if isinstance(expr, Substitute):
        return {"kind": "substitute", "k": expr.k, "child": to_json(expr.child)}
    if isinstance(expr, Shift):
        return {"kind": "shift", "e": expr.e, "child": to_json(expr.child)}
    if isinstance(expr, HalveBy):
        return {"kind": "halve", "d": expr.d, "child": to_json(expr.child)}
    if isinstance(expr, NegateQ):
        return {"kind": "negate_q", "child": to_json(expr.child)}
    raise ExprError(f"not an expression node: {expr!r}")


def _int(obj: Mapping, key: str, path: str, default: int | None = None) -> int:
    if key not in obj:
        if default is None:
            raise ExprError(f"missing field {key!r}", path)
        return default
    value = obj[key]
    if isinstance(value, bool):
        raise ExprError(f"field {key!r} must be an integer", path)
    if isinstance(value, int):
        return value
    if isinstance(value, str) and re.fullmatch(r"[+-]?\d+", value.strip()):
        return int(value)
    raise ExprError(f"field {key!r} must be an integer or decimal string, got {value!r}", path)


def _exps_from_json(obj: Mapping, key: str, path: str) -> dict[int, int]:
    raw = obj.get(key, {})
    if not isinstance(raw, Mapping):
        raise ExprError(f"field {key!r} must be an object", path)
    out = {}
    for k, e in raw.items():
        if not re.fullmatch(r"\d+", str(k)) or int(k) < 1:
            raise ExprError(f"step {k!r} must be a positive integer", f"{path}.{key}")
        out[int(k)] = _int(raw, k, f"{path}.{key}")
        if out[int(k)] == 0:
            raise ExprError(f"zero exponent for step {k}", f"{path}.{key}")
    return out


def from_json(obj: Any, path: str = "expr") -> QExpr:
    if not isinstance(obj, Mapping):
        raise ExprError("expression must be an object", path)
    kind = obj.get("kind")
    if kind == "eta":
        try:
            mono = EtaMonomial(
                scalar=_int(obj, "scalar", path),
                denom_log2=_int(obj, "denom_log2", path, 0),
                qpow=_int(obj, "qpow", path, 0),
                eta=_exps_from_json(obj, "eta", path),
                theta_a=_exps_from_json(obj, "a", path),
                theta_phi=_exps_from_json(obj, "phi", path),
            )
        except ValueError as exc:
            if isinstance(exc, ExprError):
                raise
            raise ExprError(str(exc), path) from None
        return Leaf(mono)
    if kind == "oracle":
        node: QExpr = Oracle(str(obj.get("seq")))
    elif kind in ("sum", "product"):
        children = obj.get("children")
        if not isinstance(children, list) or not children:
            raise ExprError("'children' must be a nonempty list", path)
        parsed = tuple(from_json(c, f"{path}.children[{i}]") for i, c in enumerate(children))
        node = Sum(parsed) if kind == "sum" else Product(parsed)
    elif kind in ("dissect", "substitute", "shift", "halve", "negate_q"):
        if "child" not in obj:
            raise ExprError("missing field 'child'", path)
        child = from_json(obj["child"], f"{path}.child")
        if kind == "dissect":
            node = Dissect(child, _int(obj, "m", path), _int(obj, "r", path))
        elif kind == "substitute":
            node = Substitute(child, _int(obj, "k", path))
        elif kind == "shift":
            node = Shift(child, _int(obj, "e", path))
        elif kind == "halve":
            node = HalveBy(child, _int(obj, "d", path))
        else:
            node = NegateQ(child)
    else:
        raise ExprError(f"unknown node kind {kind!r}", path)
    validate(node, path)
    return node


# --- text notation ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_ETA = re.compile(r"f(\d+)$")


class _Parser:
    def __init__(self, text: str, macros: Mapping[str, QExpr]):
        self.tokens = []
        for num, name, sym in _TOKEN.findall(text):
            if num:
                self.tokens.append(("num", int(num)))
            elif name:
                self.tokens.append(("name", name))
            elif sym.strip():
                self.tokens.append(("sym", sym))
        self.pos = 0
        self.text = text
        self.macros = macros

    def error(self, message: str) -> ExprError:
        return ExprError(f"{message} at token {self.pos} in {self.text!r}")

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise self.error(f"expected {value or kind}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def accept(self, value) -> bool:
        if self.peek() == ("sym", value):
            self.pos += 1
            return True
        return False

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        if self.accept("-"):
            terms = [_scale(self.term(), -1)]
        else:
            self.accept("+")
            terms = [self.term()]
        while True:
            if self.accept("+"):
                terms.append(self.term())
            elif self.accept("-"):
                terms.append(_scale(self.term(), -1))
            else:
                break
        return terms[0] if len(terms) == 1 else _sum(terms)

    def starts_atom(self) -> bool:
        kind, value = self.peek()
        return kind in ("num", "name") or (kind, value) == ("sym", "(")

    def term(self):
        value = self.power()
        while True:
            if self.accept("*"):
                value = _mul(value, self.power())
            elif self.accept("/"):
                value = _div(value, self.power(), self)
            elif self.starts_atom():
                value = _mul(value, self.power())
            else:
                return value

    def power(self):
        base = self.atom()
        if self.accept("^"):
            sign = -1 if self.accept("-") else 1
            return _pow(base, sign * self.take("num")[1], self)
        return base

    def qarg(self) -> tuple[int, bool]:
        """Parse ``q``, ``q^k`` or ``-q`` inside a theta call; returns (k, negated)."""
        negated = self.accept("-")
        self.take("name", "q")
        k = self.take("num")[1] if self.accept("^") else 1
        self.take("sym", ")")
        return k, negated

    def atom(self):
        kind, value = self.peek()
        if kind == "num":
            self.pos += 1
            return EtaMonomial(value)
        if (kind, value) == ("sym", "("):
            self.pos += 1
            inner = self.expr()
            self.take("sym", ")")
            return inner
        if kind != "name":
            raise self.error(f"unexpected {value!r}")
        self.pos += 1
        if value == "q":
            return EtaMonomial(qpow=1)
        eta = _ETA.match(value)
        if eta:
            return EtaMonomial(eta={int(eta.group(1)): 1})
        if value in self.macros:
            return self.macros[value]
        if value in ("a", "phi"):
            self.take("sym", "(")
            k, negated = self.qarg()
            mono = EtaMonomial(theta_a={k: 1}) if value == "a" else EtaMonomial(theta_phi={k: 1})
            return NegateQ(Leaf(mono)) if negated else mono
        if value == "oracle":
            self.take("sym", "(")
            name = self.take("name")[1]
            self.take("sym", ")")
            return Oracle(name)
        if value in ("dissect", "sub", "shift", "halve", "negq"):
            self.take("sym", "(")
            child = _node(self.expr())
            args = []
            while self.accept(","):
                args.append(self.take("num")[1])
            self.take("sym", ")")
            arity = {"dissect": 2, "sub": 1, "shift": 1, "halve": 1, "negq": 0}[value]
            if len(args) != arity:
                raise self.error(f"{value} takes {arity} integer arguments")
            if value == "dissect":
                return Dissect(child, *args)
            if value == "sub":
                return Substitute(child, *args)
            if value == "shift":
                return Shift(child, *args)
            if value == "halve":
                return HalveBy(child, *args)
            return NegateQ(child)
        raise self.error(f"unknown name {value!r}")


def _node(value) -> QExpr:
    return Leaf(value) if isinstance(value, EtaMonomial) else value


def _scale(value, c: int):
    if c == 1:
        return value
    if isinstance(value, EtaMonomial):
        return EtaMonomial(c) * value
    if isinstance(value, Sum):
        return Sum(tuple(_node(_scale(_unnode(ch), c)) for ch in value.children))
    return _mul(EtaMonomial(c), value)


def _unnode(expr: QExpr):
    return expr.mono if isinstance(expr, Leaf) else expr


def _sum(terms) -> Sum:
    children = []
    for t in terms:
        if isinstance(t, Sum):
            children.extend(t.children)
        else:
            children.append(_node(t))
    return Sum(tuple(children))


def _mul(x, y):
    if isinstance(x, EtaMonomial) and isinstance(y, EtaMonomial):
        return x * y
    children = []
    for v in (x, y):
        if isinstance(v, Product):
            children.extend(v.children)
        else:
            children.append(_node(v))
    # fold all monomial factors of a product into one leaf
    monos = [c.mono for c in children if isinstance(c, Leaf)]
    rest = [c for c in children if not isinstance(c, Leaf)]
    if monos:
        merged = monos[0]
        for m in monos[1:]:
            merged = merged * m
        if merged == EtaMonomial(1) and rest:
            return rest[0] if len(rest) == 1 else Product(tuple(rest))
        rest = [Leaf(merged)] + rest
    return rest[0] if len(rest) == 1 else Product(tuple(rest))


def _invert_mono(m: EtaMonomial, parser: _Parser) -> tuple[EtaMonomial, int]:
    """Reciprocal of ``m`` split into an eta part and a power-of-two halving count."""
    if m.qpow or m.theta_phi:
        raise parser.error("cannot divide by q-powers or phi")
    scalar = abs(m.scalar)
    if scalar == 0 or scalar & (scalar - 1):
        raise parser.error(f"scalar divisor {m.scalar} is not a power of two")
    d = scalar.bit_length() - 1
    inv = EtaMonomial(
        1 if m.scalar > 0 else -1,
        0,
        0,
        {k: -e for k, e in m.eta},
        {k: -e for k, e in m.theta_a},
    )
    return inv, d


def _div(x, y, parser: _Parser):
    if not isinstance(y, EtaMonomial):
        raise parser.error("divisor must be a monomial")
    if y.denom_log2:
        raise parser.error("cannot divide by a fraction")
    inv, d = _invert_mono(y, parser)
    value = _mul(x, inv) if inv != EtaMonomial(1) else x
    if not d:
        return value
    if isinstance(value, EtaMonomial):
        return EtaMonomial(value.scalar, value.denom_log2 + d, value.qpow, value.eta, value.theta_a, value.theta_phi)
    return HalveBy(_node(value), d)


def _pow(base, e: int, parser: _Parser):
    if isinstance(base, EtaMonomial):
        if e < 0 and (abs(base.scalar) != 1 or base.qpow or base.denom_log2):
            raise parser.error("negative powers need a unit monomial")
        if e < 0:
            inv, _ = _invert_mono(base, parser)
            base, e = inv, -e
        return EtaMonomial(
            base.scalar**e,
            base.denom_log2 * e,
            base.qpow * e,
            {k: x * e for k, x in base.eta},
            {k: x * e for k, x in base.theta_a},
            {k: x * e for k, x in base.theta_phi},
        )
    if e < 0:
        raise parser.error("negative powers of sums are not supported")
    if e == 0:
        return EtaMonomial(1)
    return Product(tuple(_node(base) for _ in range(e)))


def parse_expr(text: str, macros: Mapping[str, QExpr] | None = None) -> QExpr:
    """Parse the text notation into a :data:`QExpr`."""
    value = _Parser(text, macros or {}).parse()
    expr = _node(value)
    validate(expr)
    return expr


def format_expr(expr: QExpr) -> str:
    """Readable one-line rendering (round-trips through :func:`parse_expr`)."""
    if isinstance(expr, Leaf):
        return _format_mono(expr.mono)
    if isinstance(expr, Oracle):
        return f"oracle({expr.name})"
    if isinstance(expr, Sum):
        out = format_expr(expr.children[0])
        for c in expr.children[1:]:
            text = format_expr(c)
            out += f" - {text[1:].lstrip()}" if text.startswith("-") else f" + {text}"
        return out
    if isinstance(expr, Product):
        return " ".join(f"({format_expr(c)})" if isinstance(c, Sum) else format_expr(c) for c in expr.children)
    if isinstance(expr, Dissect):
        return f"dissect({format_expr(expr.child)}, {expr.m}, {expr.r})"
    if isinstance(expr, Substitute):
        return f"sub({format_expr(expr.child)}, {expr.k})"
    if isinstance(expr, Shift):
        return f"shift({format_expr(expr.child)}, {expr.e})"
    if isinstance(expr, HalveBy):
        return f"halve({format_expr(expr.child)}, {expr.d})"
    return f"negq({format_expr(expr.child)})"


def _format_mono(m: EtaMonomial) -> str:
    num, den = [], []
    if m.qpow:
        num.append("q" if m.qpow == 1 else f"q^{m.qpow}")
    for label, items in (("a", m.theta_a), ("phi", m.theta_phi)):
        for k, e in items:
            base = f"{label}(q)" if k == 1 else f"{label}(q^{k})"
            (num if e > 0 else den).append(base if abs(e) == 1 else f"{base}^{abs(e)}")
    for k, e in m.eta:
        (num if e > 0 else den).append(f"f{k}" if abs(e) == 1 else f"f{k}^{abs(e)}")
    text = " ".join(num)
    scalar = m.scalar
    if scalar == -1 and text:
        text = "-" + text
    elif scalar != 1 or not text:
        text = f"{scalar} {text}".strip()
    if den:
        text += f"/({' '.join(den)})" if len(den) > 1 else f"/{den[0]}"
    if m.denom_log2:
        text += f"/{1 << m.denom_log2}"
    return text
