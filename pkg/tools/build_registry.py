"""Regenerate the shipped registries (src/qcongr/data/*.json) from the text notation below.

    python tools/build_registry.py
"""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path

from qcongr.identities import MACROS, IdentityClaim, claim_to_json
from qcongr.qexpr import parse_expr

DATA = Path(__file__).resolve().parents[1] / "src" / "qcongr" / "data"

# right-hand sides reused along the derivation chains
E21 = "(f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8))"
E23 = "(f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10)"
E25 = "(f2 f8^2 f12^4/(f4^2 f6 f24^2) - q f4^4 f6 f24^2/(f2 f8^2 f12^2))"
E26 = "(f8^2 f12^5/(f2^2 f4 f6^4 f24^2) + q f4^5 f24^2/(f2^4 f6^2 f8^2 f12))"
E27 = "(f4^3/f12 - 3q f2^2 f12^3/(f4 f6^2))"
E28 = "(f4^6 f6^3/(f2^9 f12^2) + 3q f4^2 f6 f12^2/f2^7)"
E29 = "(f4^3 f6^2/(f2^2 f12) + q f12^3/f4)"
E210 = "(f2 f4^2 f12^4/(f6^5 f8 f24) - 2q f2^2 f8 f12 f24/(f4 f6^4))"
E211 = "(f4^4 f6 f12^2/(f2^5 f8 f24) + 2q f4 f6^2 f8 f24/(f2^4 f12))"
E213 = "(f9^2/f18 - 2q f3 f18^2/(f6 f9))"
E214 = "(f6^4 f9^6/(f3^8 f18^3) + 2q f6^3 f9^3/f3^7 + 4q^2 f6^2 f18^3/f3^6)"
E215 = "(f3 a(q^3) - 3q f9^3)"
E216 = "(a(q^3)^2 f9^3/f3^10 + 3q a(q^3) f9^6/f3^11 + 9q^2 f9^9/f3^12)"
E217 = "(a(q^6) f9^3/(f3^4 f6^3) + q a(q^3) f18^3/(f3^3 f6^4) + 3q^2 f9^3 f18^3/(f3^4 f6^4))"
E218 = "(a(q^4) + 6q f4^2 f12^2/(f2 f6))"
F3_4 = "(f12^10/(f6^2 f24^4) - 4q^3 f6^2 f24^4/f12^2)"  # f3^4 from the f1^4 dissection at q^3
INV_F3_4 = "(f12^14/(f6^14 f24^4) + 4q^3 f12^2 f24^4/f6^10)"  # 1/f3^4 likewise

identities: list[IdentityClaim] = []


def ident(id_, lhs, rhs, anchor, mod=None, order=200, probe=False, note=""):
    identities.append(
        IdentityClaim(id_, parse_expr(lhs, MACROS), parse_expr(rhs, MACROS), mod, anchor, order, probe, note)
    )


def chain(prefix, lhs, lines, anchor, mod=None, order=200):
    """One entry per displayed line; ``lines`` items are text or (text, line_mod)."""
    for i, line in enumerate(lines, 1):
        text, line_mod = line if isinstance(line, tuple) else (line, mod)
        ident(f"{prefix}-L{i}", lhs, text, anchor, line_mod, order)


# --- generating functions and the main exact identities ----------------------------

ident("GEN-PDT", "oracle(PDt)", "PDT", "sum PD_t(n)q^n = 1/2(f_3^5/(f_1^3f_6^2) - f_6/(f_1f_2f_3))", order=500)
ident("GEN-PDOT", "oracle(PDOt)", "PDOT", "sum PDO_t(n)q^n = qf_2f_3^2f_{12}^2/(f_1^2f_6)", order=500)
ident("GEN-PD", "oracle(PD)", "PDGF", "sum PD(n)q^n = f_6/(f_1f_2f_3)", order=500)
ident("GEN-PDO", "oracle(PDO)", "PDOGF", "sum PDO(n)q^n = f_4f_6^2/(f_1f_3f_{12})", order=500)
ident(
    "THM11-A",
    "dissect(PDOT, 8, 6)",
    "8(2 f2^16 f6^10/(f1^17 f3^3 f12^4) - q f2^28 f3 f12^4/(f1^21 f6^2 f4^8) - 16q^2 f2^4 f3 f4^8 f12^4/(f1^13 f6^2))",
    "sum PDO_t(8n+6)q^n = 8(2f_2^{16}f_6^{10}/(f_1^{17}f_3^3f_{12}^4) - ...)",
)
ident(
    "THM11-B",
    "dissect(PDOT, 8, 7)",
    "8(f2^14 f3 f6^4 f8^2/(f1^14 f4^3 f12^2) + 2 f2^9 f3^2 f4^5 f6/(f1^13 f8^2) + 4q f2^8 f3^3 f4 f8^2 f12^2/(f1^12 f6^2))",
    "sum PDO_t(8n+7)q^n = 8(f_2^{14}f_3f_6^4f_8^2/(f_1^{14}f_4^3f_{12}^2) + ...)",
)

# --- 2- and 3-dissections ----------------------------------------------------------

ident("EQ-2.1", "1/f1^2", E21, "1/f_1^2=f_8^5/(f_2^5f_{16}^2)+2qf_4^2f_{16}^2/(f_2^5f_8)", order=500)
ident("EQ-2.2", "f1^2", "f2 f8^5/(f4^2 f16^2) - 2q f2 f16^2/f8", "f_1^2=f_2f_8^5/(f_4^2f_{16}^2)-2qf_2f_{16}^2/f_8", order=500)
ident("EQ-2.3", "1/f1^4", E23, "1/f_1^4=f_4^{14}/(f_2^{14}f_8^4)+4qf_4^2f_8^4/f_2^{10}", order=500)
ident("EQ-2.4", "f1^4", "f4^10/(f2^2 f8^4) - 4q f2^2 f8^4/f4^2", "f_1^4=f_4^{10}/(f_2^2f_8^4)-4qf_2^2f_8^4/f_4^2", order=500)
ident("EQ-2.5", "f1 f3", E25, "f_1f_3=f_2f_8^2f_{12}^4/(f_4^2f_6f_{24}^2)-qf_4^4f_6f_{24}^2/(f_2f_8^2f_{12}^2)", order=500)
ident("EQ-2.6", "1/(f1 f3)", E26, "1/(f_1f_3)=f_8^2f_{12}^5/(f_2^2f_4f_6^4f_{24}^2)+qf_4^5f_{24}^2/(f_2^4f_6^2f_8^2f_{12})", order=500)
ident("EQ-2.7", "f1^3/f3", E27, "f_1^3/f_3=f_4^3/f_{12}-3qf_2^2f_{12}^3/(f_4f_6^2)", order=500)
ident("EQ-2.8", "f3/f1^3", E28, "f_3/f_1^3=f_4^6f_6^3/(f_2^9f_{12}^2)+3qf_4^2f_6f_{12}^2/f_2^7", order=500)
ident("EQ-2.9", "f3^3/f1", E29, "f_3^3/f_1=f_4^3f_6^2/(f_2^2f_{12})+qf_{12}^3/f_4", order=500)
ident("EQ-2.10", "f1^2/f3^2", E210, "f_1^2/f_3^2=f_2f_4^2f_{12}^4/(f_6^5f_8f_{24})-2qf_2^2f_8f_{12}f_{24}/(f_4f_6^4)", order=500)
ident("EQ-2.11", "f3^2/f1^2", E211, "f_3^2/f_1^2=f_4^4f_6f_{12}^2/(f_2^5f_8f_{24})+2qf_4f_6^2f_8f_{24}/(f_2^4f_{12})", order=500)
ident(
    "EQ-2.12",
    "negq(f1)",
    "f2^2/(f1 f4)",
    "(-q;-q)_inf=f_2^2/(f_1f_4)",
    order=500,
    probe=True,
    note="as printed; (-q;-q)_inf = f2^3/(f1 f4), see EQ-2.12-CORR",
)
ident("EQ-2.12-CORR", "negq(f1)", "f2^3/(f1 f4)", "(-q;-q)_inf=f_2^3/(f_1f_4)", order=500)
ident("PHI-ETA", "phi(q)", "f2^5/(f1^2 f4^2)", "phi(q)=f_2^5/(f_1^2f_4^2)", order=500)
ident("PHI-NEG", "negq(phi(q))", "f1^2/f2", "phi(-q)=f_1^2/f_2", order=500)
ident("EQ-2.13", "f1^2/f2", E213, "f_1^2/f_2=f_9^2/f_{18}-2qf_3f_{18}^2/(f_6f_9)", order=500)
ident("EQ-2.14", "f2/f1^2", E214, "f_2/f_1^2=f_6^4f_9^6/(f_3^8f_{18}^3)+2qf_6^3f_9^3/f_3^7+4q^2f_6^2f_{18}^3/f_3^6", order=500)
ident("EQ-2.15", "f1^3", E215, "f_1^3=f_3a(q^3)-3qf_9^3", order=500)
ident("EQ-2.16", "1/f1^3", E216, "1/f_1^3=a^2(q^3)f_9^3/f_3^{10}+3qa(q^3)f_9^6/f_3^{11}+9q^2f_9^9/f_3^{12}", order=500)
ident("EQ-2.17", "1/(f1 f2)", E217, "1/(f_1f_2)=a(q^6)f_9^3/(f_3^4f_6^3)+qa(q^3)f_{18}^3/(f_3^3f_6^4)+3q^2f_9^3f_{18}^3/(f_3^4f_6^4)", order=500)
ident("EQ-2.18", "a(q)", E218, "a(q)=a(q^4)+6qf_4^2f_{12}^2/(f_2f_6)", order=500)
ident("EQ-2.19", "a(q) + 2a(q^2)", "3 f2 f3^6/(f1^2 f6^3)", "a(q)+2a(q^2)=3f_2f_3^6/(f_1^2f_6^3)", order=500)
ident("EQ-2.20", "a(q) + a(q^2)", "2 f2^6 f3/(f1^3 f6^2)", "a(q)+a(q^2)=2f_2^6f_3/(f_1^3f_6^2)", order=500)
ident("EQ-2-CONG-1", "a(q)", "1", "a(q)=1 (mod 2)", mod=2, order=1000)
ident("EQ-2-CONG-2", "a(q)^2", "1", "a^2(q)=1 (mod 4)", mod=4, order=1000)
ident("EQ-2-CONG-3", "f1^2", "f2", "f_1^2=f_2 (mod 2)", mod=2, order=1000)
ident("EQ-2-CONG-4", "f1^4", "f2^2", "f_1^4=f_2^2 (mod 4)", mod=4, order=1000)
ident("EQ-2-CONG-5", "f1^8", "f2^4", "f_1^8=f_2^4 (mod 8)", mod=8, order=1000)

# --- PDO_t(8n+6), PDO_t(8n+7) --------------------------------------------------------

chain(
    "S3-PDOT",
    "PDOT",
    ["q f2 f12^2/f6 f3^2/f1^2", f"q f2 f12^2/f6 {E211}"],
    "sum PDO_t(n)q^n = qf_2f_{12}^2/f_6 * f_3^2/f_1^2",
)
chain(
    "S3-PDOT-2N",
    "dissect(PDOT, 2, 0)",
    ["2q f2 f4 f6 f12 f3/f1^3", f"2q f2 f4 f6 f12 {E28}"],
    "sum PDO_t(2n)q^n = 2qf_2f_4f_6f_{12} f_3/f_1^3",
)
chain(
    "S3-PDOT-4N2",
    "dissect(PDOT, 4, 2)",
    [
        "2 f2^7/f6 1/f1^8 f3^4",
        f"2 f2^7/f6 {E23}^2 {F3_4}",
        "2 f4^28 f12^10/(f2^21 f6^3 f8^8 f24^4) + 16q f4^16 f12^10/(f2^17 f6^3 f24^4)"
        " + 32q^2 f4^4 f8^8 f12^10/(f2^13 f6^3 f24^4) - 8q^3 f4^28 f6 f24^4/(f2^21 f8^8 f12^2)"
        " - 64q^4 f4^16 f6 f24^4/(f2^17 f12^2) - 128q^5 f4^4 f6 f8^8 f24^4/(f2^13 f12^2)",
    ],
    "sum PDO_t(4n+2)q^n = 2f_2^7/f_6 * 1/f_1^8 * f_3^4",
)
ident(
    "S3-PDOT-8N6",
    "dissect(PDOT, 8, 6)",
    "16 f2^16 f6^10/(f1^17 f3^3 f12^4) - 8q f2^28 f3 f12^4/(f1^21 f4^8 f6^2) - 128q^2 f2^4 f3 f4^8 f12^4/(f1^13 f6^2)",
    "sum PDO_t(8n+6)q^n = 16f_2^{16}f_6^{10}/(f_1^{17}f_3^3f_{12}^4) - ...",
)
chain(
    "S3-PDOT-2N1",
    "dissect(PDOT, 2, 1)",
    ["f2^4 f6^4/(f4 f12) 1/f1^4", f"f2^4 f6^4/(f4 f12) {E23}"],
    "sum PDO_t(2n+1)q^n = f_2^4f_6^4/(f_4f_{12}) * 1/f_1^4",
)
chain(
    "S3-PDOT-4N3",
    "dissect(PDOT, 4, 3)",
    [
        "4 f2 f4^4/f6 1/f1^2 f3^4/f1^4",
        f"4 f2 f4^4/f6 {E21} {E211}^2",
        "4 f4^12 f6 f8^3 f12^4/(f2^14 f16^2 f24^2) + 16q f4^9 f6^2 f8^5 f12/(f2^13 f16^2)"
        " + 8q f4^14 f6 f12^4 f16^2/(f2^14 f8^3 f24^2) + 16q^2 f4^6 f6^3 f8^7 f24^2/(f2^12 f12^2 f16^2)"
        " + 32q^2 f4^11 f6^2 f12 f16^2/(f2^13 f8) + 32q^3 f4^8 f6^3 f8 f16^2 f24^2/(f2^12 f12^2)",
    ],
    "sum PDO_t(4n+3)q^n = 4f_2f_4^4/f_6 * 1/f_1^2 * f_3^4/f_1^4",
)
ident(
    "S3-PDOT-8N7",
    "dissect(PDOT, 8, 7)",
    "8 f2^14 f3 f6^4 f8^2/(f1^14 f4^3 f12^2) + 16 f2^9 f3^2 f4^5 f6/(f1^13 f8^2) + 32q f2^8 f3^3 f4 f8^2 f12^2/(f1^12 f6^2)",
    "sum PDO_t(8n+7)q^n = 8f_2^{14}f_3f_6^4f_8^2/(f_1^{14}f_4^3f_{12}^2) + ...",
)

# --- PD_t(48n+28), PD_t(48n+46) mod 8 ------------------------------------------------

chain(
    "S4-PDT",
    "2 PDT",
    ["f3^5/f6^2 1/f1^3 - f6/f3 1/(f1 f2)", f"f3^5/f6^2 {E216} - f6/f3 {E217}"],
    "2 sum PD_t(n)q^n = f_3^5/f_6^2 * 1/f_1^3 - f_6/f_3 * 1/(f_1f_2)",
)
X = "4 f4^6 f6/(f2^3 f12^2)"
chain(
    "S4-PDT-3N1",
    "dissect(2 PDT, 3, 1)",
    [
        "3 a(q) f3^6/(f1^6 f2^2) - a(q) f6^3/(f1^4 f2^3)",
        "(3 f3^6/(f1^6 f2^2) - f6^3/(f1^4 f2^3)) a(q)",
        "f6^3/(f1^4 f2^3) (3 f2 f3^6/(f1^2 f6^3) - 1) a(q)",
        "f6^3/(f1^4 f2^3) (a(q) + 2a(q^2) - 1) a(q)",
        "f6^3/(f1^4 f2^3) (a(q) + a(-q) + 2a(q^2) - 1 - a(-q)) a(q)",
        "f6^3/(f1^4 f2^3) (2a(q^4) + 2a(q^2) - 1 - a(-q)) a(q)",
        f"f6^3/(f1^4 f2^3) ({X} - 1 - a(-q)) a(q)",
        f"f6^3/(f1^4 f2^3) (({X} - 1) {E218} - a(-q) a(q))",
        f"f6^3/(f1^4 f2^3) (({X} - 1) {E218} - (a(q^4)^2 - 36q^2 f4^4 f12^4/(f2^2 f6^2)))",
        f"f6^3/f2^3 (({X} a(q^4) - a(q^4) - a(q^4)^2 + 36q^2 f4^4 f12^4/(f2^2 f6^2))"
        f" + q (24 f4^8/f2^4 - 6 f4^2 f12^2/(f2 f6))) {E23}",
    ],
    "2 sum PD_t(3n+1)q^n = 3a(q)f_3^6/(f_1^6f_2^2) - a(q)f_6^3/(f_1^4f_2^3)",
)
ident(
    "S4-PDT-6N4",
    "dissect(PDT, 6, 4)",
    "f3^3/f1^3 (2 f2^2 f4^4/f1^10 (4 f2^6 f3/(f1^3 f6^2) a(q^2) - a(q^2) - a(q^2)^2 + 36q f2^4 f6^4/(f1^2 f3^2))"
    " + f2^14/(f1^14 f4^4) (12 f2^8/f1^4 - 3 f2^2 f6^2/(f1 f3)))",
    "sum PD_t(6n+4)q^n = f_3^3/f_1^3(2f_2^2f_4^4/f_1^{10}(...) + f_2^{14}/(f_1^{14}f_4^4)(...))",
)
chain(
    "S4-PDT-6N4-M8",
    "dissect(PDT, 6, 4)",
    [
        "f3^3/f1^3 (6 f2^2 f4^4/f1^10 (a(q^2) + a(q^2)^2) + 4 f2^22/(f1^18 f4^4) + 5 f2^16 f6^2/(f1^15 f3 f4^4))",
        "f3^3/f1^3 (6 f2^2 f4^4/f1^10 a(q^2) + 6 f2^2 f4^4/f1^10 + 4 f2^22/(f1^18 f4^4) + 5 f2^16 f6^2/(f1^15 f3 f4^4))",
        "(6 f4^2 f6^2 a(q^2) + 10 f4^2 f6^2) 1/(f1 f3) + 5 f6^2 f3^2/f1^2",
        f"(6 f4^2 f6^2 a(q^2) + 10 f4^2 f6^2) {E26} + 5 f6^2 {E211}",
    ],
    "sum PD_t(6n+4)q^n (mod 8)",
    mod=8,
)
chain(
    "S4-PDT-12N4",
    "dissect(PDT, 12, 4)",
    [
        "(6 f2^2 f3^2 a(q) + 10 f2^2 f3^2) f4^2 f6^5/(f1^2 f2 f3^4 f12^2) + 5 f2^4 f3^3 f6^2/(f1^5 f4 f12)",
        "6 f2 f4^2/f6 a(q) f3^2/f1^2 + 10 f4^2 + 5 f6^2/(f4 f12) f1^3 f3^3",
        f"6 f2 f4^2/f6 {E218} {E211} + 10 f4^2 + 5 f6^2/(f4 f12) {E25}^3",
        "6 (a(q^4) f4^6 f12^2/(f2^4 f8 f24) + 12q^2 f4^5 f8 f12 f24/f2^4"
        " + q (2 a(q^4) f4^3 f6 f8 f24/(f2^3 f12) + 6 f4^8 f12^4/(f2^5 f6 f8 f24)))"
        " + 10 f4^2 + 5 (f2^3 f8^6 f12^11/(f4^7 f6 f24^6) - 3q f2 f6 f8^2 f12^5/(f4 f24^2)"
        " + 3q^2 f4^5 f6^3 f24^2/(f2 f8^2 f12) - q^3 f4^11 f6^5 f24^6/(f2^3 f8^6 f12^7))",
    ],
    "sum PD_t(12n+4)q^n (mod 8)",
    mod=8,
)
chain(
    "S4-PDT-24N4",
    "dissect(PDT, 24, 4)",
    [
        "6 a(q^2) f2^6 f6^2/(f1^4 f4 f12) + 10 f2^2 + 5 (f1^3 f4^6 f6^11/(f2^7 f3 f12^6) + 3q f2^5 f3^3 f12^2/(f1 f4^2 f6))",
        "6 a(q^2) f4 f6^2/f12 + 10 f2^2 + 5 (f2 f4^2 f6^3/f12^3 f1^3/f3 + 3q f2^5 f12^2/(f4^2 f6) f3^3/f1)",
        f"6 a(q^2) f4 f6^2/f12 + 10 f2^2 + 5 (f2 f4^2 f6^3/f12^2 {E27} + 3q f2^5 f12^2/(f4^2 f6) {E29})",
        "6 a(q^2) f4 f6^2/f12 + 10 f2^2 + 5 (f2 f4^5 f6^3/f12^3 + 3q^2 f2^5 f12^5/(f4^3 f6))",
    ],
    "sum PD_t(24n+4)q^n (mod 8)",
    mod=8,
)
ident("S4-PDT-48N28", "dissect(PDT, 48, 28)", "0", "PD_t(48n+28)=0 (mod 8)", mod=8)
chain(
    "S4-PDT-12N10",
    "dissect(PDT, 12, 10)",
    [
        "(6 f2^2 f3^2 a(q) + 10 f2^2 f3^2) f2^5 f12^2/(f1^4 f3^2 f4^2 f6) + 10 f2 f3^4 f4 f12/(f1^4 f6)",
        "6 f2 f12^2/f6 a(q) + 10 f2 f12^2/f6 + 10 f2 f6 f12/f2",
        f"6 f2 f12^2/f6 {E218} + 10 f2 f12^2/f6 + 10 f2 f6 f12/f2",
    ],
    "sum PD_t(12n+10)q^n (mod 8)",
    mod=8,
)
chain(
    "S4-PDT-24N22",
    "dissect(PDT, 24, 22)",
    ["36 f2^2 f6^4/f3^2", "36 f2^2 f6^3"],
    "sum PD_t(24n+22)q^n = 36f_2^2f_6^3 (mod 8)",
    mod=8,
)
ident("S4-PDT-48N46", "dissect(PDT, 48, 46)", "0", "PD_t(48n+46)=0 (mod 8)", mod=8)

# --- mod 2 and mod 4 chain -----------------------------------------------------------

chain(
    "S5-PDT-3N",
    "dissect(2 PDT, 3, 0)",
    [
        ("f3^3/(f1^5 f2^2) a(q)^2 - f3^3/(f1^5 f2^2) a(q^2)", None),
        "1/f4^2 f3^3/f1 - a(q^2)/f4^2 f3^3/f1",
        f"(1/f4^2 - a(q^2)/f4^2) {E29}",
    ],
    "2 sum PD_t(3n)q^n (mod 4)",
    mod=4,
)
chain(
    "S5-PDT-6N-M4",
    "dissect(2 PDT, 6, 0)",
    [
        "(1/f2^2 - a(q)/f2^2) f2^3 f3^2/(f1^2 f6)",
        "f2/f6 f3^2/f1^2 - f2/f6 f3^2/f1^2 a(q)",
        f"f2/f6 {E211} - f2/f6 {E211} {E218}",
    ],
    "2 sum PD_t(6n)q^n (mod 4)",
    mod=4,
)
chain(
    "S5-PDT-12N-M4",
    "dissect(2 PDT, 12, 0)",
    [
        "f2^4 f6^2/(f1^4 f4 f12) - f1/f3 f2^4 f3 f6^2/(f1^5 f4 f12) a(q^2)",
        "f2^2 f6^2/(f4 f12) - f2^2 f6^2/(f4 f12) a(q^2)",
    ],
    "2 sum PD_t(12n)q^n (mod 4)",
    mod=4,
)
ident("S5-PDT-24N12-M2", "dissect(PDT, 24, 12)", "0", "PD_t(24n+12)=0 (mod 2)", mod=2)
chain(
    "S5-PDT-12N6-M2",
    "dissect(PDT, 12, 6)",
    [
        "f2 f3 f4 f12/(f1^3 f6) - a(q^2) f2 f3 f4 f12/(f1^3 f6) - 3 f2^6 f6^4/(f1^5 f3 f4 f12)",
        "f2 f4 f12/f6 f3/f1^3",
        f"f2 f4 f12/f6 {E28}",
    ],
    "sum PD_t(12n+6)q^n (mod 2)",
    mod=2,
)
chain(
    "S5-PDT-24N6",
    "dissect(PDT, 24, 6)",
    ["f1 f2 f6/f3 f2^6 f3^3/(f1^9 f6^2)", "f2^3"],
    "sum PD_t(24n+6)q^n = f_2^3 (mod 2)",
    mod=2,
)
ident("S5-PDT-48N30", "dissect(PDT, 48, 30)", "0", "PD_t(48n+30)=0 (mod 2)", mod=2)
chain("S5-PDT-48N6", "dissect(PDT, 48, 6)", ["f1^3", E215], "sum PD_t(48n+6)q^n = f_1^3 (mod 2)", mod=2)
ident("S5-PDT-144N102", "dissect(PDT, 144, 102)", "0", "PD_t(144n+102)=0 (mod 2)", mod=2)
chain(
    "S5-PDT-6N3-M4",
    "dissect(2 PDT, 6, 3)",
    ["(1/f2^2 - a(q)/f2^2) f6^3/f2", f"f6^3/f2^3 - f6^3/f2^3 {E218}"],
    "2 sum PD_t(6n+3)q^n (mod 4)",
    mod=4,
)
chain(
    "S5-PDT-12N9-M2",
    "dissect(PDT, 12, 9)",
    ["f2^2 f3^2 f6^2/f1^4", "f6^3"],
    "sum PD_t(12n+9)q^n = f_6^3 (mod 2)",
    mod=2,
)
ident("S5-PDT-24N21", "dissect(PDT, 24, 21)", "0", "PD_t(24n+21)=0 (mod 2)", mod=2)
ident("S5-PDT-36N21-M2", "dissect(PDT, 36, 21)", "0", "PD_t(36n+21)=0 (mod 2)", mod=2)
ident("S5-PDT-36N33-M2", "dissect(PDT, 36, 33)", "0", "PD_t(36n+33)=0 (mod 2)", mod=2)
chain("S5-PDT-72N9", "dissect(PDT, 72, 9)", ["f1^3", E215], "sum PD_t(72n+9)q^n = f_1^3 (mod 2)", mod=2)
ident("S5-PDT-216N153", "dissect(PDT, 216, 153)", "0", "PD_t(216n+153)=0 (mod 2)", mod=2)
A1 = "4 f2^6 f3/(f1^3 f6^2)"
A2 = "3 f2 f3^6/(f1^2 f6^3)"
chain(
    "S5-PDT-3N-EXACT",
    "dissect(2 PDT, 3, 0)",
    [
        "f3^3/(f1^5 f2^2) (2(a(q) + a(q^2)) - (a(q) + 2a(q^2)))^2 - f3^3/(f1^5 f2^2) ((a(q) + 2a(q^2)) - (a(q) + a(q^2)))",
        f"f3^3/(f1^5 f2^2) ({A1} - {A2})^2 - f3^3/(f1^5 f2^2) ({A2} - 2 f2^6 f3/(f1^3 f6^2))",
    ],
    "2 sum PD_t(3n)q^n = f_3^3/(f_1^5f_2^2)a^2(q) - f_3^3/(f_1^5f_2^2)a(q^2)",
)
chain(
    "S5-PDT-3N-M8",
    "dissect(2 PDT, 3, 0)",
    ["f6^2/f2^4 1/(f1 f3) + 5 f6/f2^5 f1 f3 + 2", f"f6^2/f2^4 {E26} + 5 f6/f2^5 {E25} + 2"],
    "2 sum PD_t(3n)q^n (mod 8)",
    mod=8,
)
chain(
    "S5-PDT-6N3-M8",
    "dissect(2 PDT, 6, 3)",
    [
        "f2^5 f12^2/(f1^8 f4^2 f6) + 3 f2^4 f3^2 f12^2/(f1^6 f4^2 f6^2)",
        "f2 f12^2/(f4^2 f6) + 3 f12^2/(f4^2 f6^2) f1^2 f3^2",
        f"f2 f12^2/(f4^2 f6) + 3 f12^2/(f4^2 f6^2) {E25}^2",
        "f2 f12^2/(f4^2 f6) + 3 f12^2/(f4^2 f6^2) (f2^2 f8^4 f12^8/(f4^4 f6^2 f24^4) - 2q f4^2 f12^2"
        " + q^2 f4^8 f6^2 f24^4/(f2^2 f8^4 f12^4))",
    ],
    "2 sum PD_t(6n+3)q^n (mod 8)",
    mod=8,
)
ident("S5-PDT-12N9-M4", "dissect(PDT, 12, 9)", "f6^4/f3^2", "sum PD_t(12n+9)q^n = f_6^4/f_3^2 (mod 4)", mod=4)
ident("S5-PDT-36N21-M4", "dissect(PDT, 36, 21)", "0", "PD_t(36n+21)=0 (mod 4)", mod=4)
ident(
    "S5-PDT-36N22-M4",
    "dissect(PDT, 36, 22)",
    "0",
    "PD_t(36n+22)=0 (mod 4)",
    mod=4,
    probe=True,
    note="printed index 36n+22; the q^{3n+2} terms of sum PD_t(12n+9)q^n give 36n+33",
)
ident("S5-PDT-36N33-M4", "dissect(PDT, 36, 33)", "0", "PD_t(36n+33)=0 (mod 4)", mod=4)
chain(
    "S5-PDT-6N-M8",
    "dissect(2 PDT, 6, 0)",
    [
        "f4^2 f6^5/(f1^6 f2 f3^2 f12^2) + 5 f4^2 f6^4/(f1^4 f2^2 f12^2) + 2",
        "f4^2 f6^5/(f2^5 f12^2) f1^2/f3^2 - f4^2 f6^4/(f2^2 f12^2) 1/f1^4 + 2",
        f"f4^2 f6^5/(f2^5 f12^2) {E210} - f4^2 f6^4/(f2^2 f12^2) {E23} + 2",
    ],
    "2 sum PD_t(6n)q^n (mod 8)",
    mod=8,
)
chain(
    "S5-PDT-12N-M8",
    "dissect(2 PDT, 12, 0)",
    [
        "f2^4 f6^2/(f4 f12) 1/f1^4 - f6^2 1/f3^4 + 2",
        f"f2^4 f6^2/(f4 f12) {E23} - f6^2 {INV_F3_4} + 2",
    ],
    "2 sum PD_t(12n)q^n (mod 8)",
    mod=8,
)
chain(
    "S5-PDT-24N-M8",
    "dissect(2 PDT, 24, 0)",
    [
        "f2/f6 f3^2/f1^2 - f6^2 1/f3^4 + 2",
        f"f2/f6 {E211} - f6^2 {INV_F3_4} + 2",
        "f3^2/f6 f2/f1^2 - f6^2/f3^4 + 2",
        f"f3^2/f6 {E214} - f6^2/f3^4 + 2",
    ],
    "2 sum PD_t(24n)q^n (mod 8)",
    mod=8,
)
ident(
    "S5-PDT-48N-M8",
    "dissect(2 PDT, 48, 0)",
    "f2^4 f6^2/(f4 f12) 1/f1^4 - f6^2/f3^4 + 2",
    "2 sum PD_t(48n)q^n (mod 8)",
    mod=8,
)
ident("S5-PDT-12N-48N", "dissect(PDT, 12, 0)", "dissect(PDT, 48, 0)", "PD_t(12n)=PD_t(48n) (mod 4)", mod=4)
chain(
    "S5-PDT-24N12",
    "dissect(PDT, 24, 12)",
    ["2 f4^3 - 2q f12^3", "2 f12 a(q^12) - 6q^4 f36^3 - 2q f12^3"],
    "sum PD_t(24n+12)q^n = 2f_4^3-2qf_{12}^3 (mod 4)",
    mod=4,
)
ident("S5-PDT-72N36", "dissect(PDT, 72, 36)", "2 f4^3 - 2q f12^3", "sum PD_t(24(3n+1)+12)q^n (mod 4)", mod=4)
ident("S5-PDT-72N36-EQ", "dissect(PDT, 72, 36)", "dissect(PDT, 24, 12)", "PD_t(3(24n+12))=PD_t(24n+12) (mod 4)", mod=4)
chain(
    "S5-PDT-72N48",
    "dissect(PDT, 72, 48)",
    ["2 f2 f6^3/f1^4", "2 f6^3/f2"],
    "sum PD_t(72n+48)q^n = 2f_6^3/f_2 (mod 4)",
    mod=4,
)
ident("S5-PDT-144N120", "dissect(PDT, 144, 120)", "0", "PD_t(144n+120)=0 (mod 4)", mod=4)
ident("S5-PDT-48N12", "dissect(PDT, 48, 12)", "2 f2^3", "sum PD_t(48n+12)q^n = 2f_2^3 (mod 4)", mod=4)
ident("S5-PDT-48N36", "dissect(PDT, 48, 36)", "2 f6^3", "sum PD_t(48n+36)q^n = 2f_6^3 (mod 4)", mod=4)
for idx, anchor in (("96N60", (96, 60)), ("96N84", (96, 84)), ("144N84", (144, 84)), ("144N132", (144, 132))):
    ident(f"S5-PDT-{idx}", f"dissect(PDT, {anchor[0]}, {anchor[1]})", "0", f"PD_t({anchor[0]}n+{anchor[1]})=0 (mod 4)", mod=4)
chain("S5-PDT-96N12", "dissect(PDT, 96, 12)", ["2 f1^3", f"2 {E215}"], "sum PD_t(96n+12)q^n = 2f_1^3 (mod 4)", mod=4)
chain("S5-PDT-288N36", "dissect(PDT, 288, 36)", ["2 f1^3", f"2 {E215}"], "sum PD_t(288n+36)q^n = 2f_1^3 (mod 4)", mod=4)
ident("S5-PDT-288N204", "dissect(PDT, 288, 204)", "0", "PD_t(288n+204)=0 (mod 4)", mod=4)
ident("S5-PDT-864N612", "dissect(PDT, 864, 612)", "0", "PD_t(3(288n+204))=0 (mod 4)", mod=4)
chain(
    "S5-PDT-48N24",
    "dissect(PDT, 48, 24)",
    [
        "f2 f3 f4 f12/(f1^3 f6) - 2q f6^2 f12^4/f3^8",
        "f2 f4 f12/f6 f3/f1^3 - 2q f12^3",
        f"f2 f4 f12/f6 {E28} - 2q f12^3",
    ],
    "sum PD_t(48n+24)q^n (mod 4)",
    mod=4,
)
chain(
    "S5-PDT-96N24",
    "dissect(PDT, 96, 24)",
    ["f2^7 f3^2/(f1^8 f6)", "f3^2/f6 f2^3", "f3^2/f6 (f6 a(q^6) - 3q^2 f18^3)"],
    "sum PD_t(96n+24)q^n = f_3^2/f_6 f_2^3 (mod 4)",
    mod=4,
)
chain(
    "S5-PDT-96N72",
    "dissect(PDT, 96, 72)",
    ["3 f2^3 f6^3/f1^6 - 2 f6^3", "2 f6^3 + 3 f2 f6^3 1/f1^2", f"2 f6^3 + 3 f2 f6^3 {E21}"],
    "sum PD_t(96n+72)q^n (mod 4)",
    mod=4,
)
chain(
    "S5-PDT-288N216",
    "dissect(PDT, 288, 216)",
    ["f6^3 f1^2/f2", f"f6^3 {E213}"],
    "sum PD_t(288n+216)q^n = f_6^3 f_1^2/f_2 (mod 4)",
    mod=4,
)
ident("S5-PDT-864N792", "dissect(PDT, 864, 792)", "0", "PD_t(864n+792)=0 (mod 4)", mod=4)
chain(
    "S5-PDT-864N216",
    "dissect(PDT, 864, 216)",
    ["f3^2/f6 f2^3", "f3^2/f6 (f6 a(q^6) - 3q^2 f18^3)"],
    "sum PD_t(864n+216)q^n = f_3^2/f_6 f_2^3 (mod 4)",
    mod=4,
)
ident("S5-PDT-2592N1080", "dissect(PDT, 2592, 1080)", "0", "PD_t(2592n+1080)=0 (mod 4)", mod=4)
chain(
    "S5-PDT-192N72",
    "dissect(PDT, 192, 72)",
    [
        "2 f3^3 + 3 f3^3 f4^5/(f1^4 f8^2)",
        "2 f3^3 + 3 f3^3 f4/f2^2",
        "2 f3^3 + 3 f3^3 (f12^4 f18^6/(f6^8 f36^3) + 2q^2 f12^3 f18^3/f6^7 + 4q^4 f12^2 f36^3/f6^6)",
    ],
    "sum PD_t(192n+72)q^n (mod 4)",
    mod=4,
)
chain(
    "S5-PDT-576N72",
    "dissect(PDT, 576, 72)",
    [
        "2 f1^3 + 3 f1^3 f4^4 f6^6/(f2^8 f12^3)",
        "(2 + 3 f6^2/f12) f1^3",
        f"(2 + 3 f6^2/f12) {E215}",
    ],
    "sum PD_t(576n+72)q^n = (2+3f_6^2/f_{12})f_1^3 (mod 4)",
    mod=4,
)
ident("S5-PDT-1728N1224", "dissect(PDT, 1728, 1224)", "0", "PD_t(1728n+1224)=0 (mod 4)", mod=4)
chain(
    "S5-PDT-12N6-M4",
    "dissect(PDT, 12, 6)",
    [
        "-f2 f3 f4 f12/(f1^3 f6) - 2 f2^4 f3^4 f4^4/(f1^12 f6^2)",
        "2 f4^3 + 3 f2 f4 f12/f6 f3/f1^3",
        f"2 f4^3 + 3 f2 f4 f12/f6 {E28}",
        "(2 + 3 f6^2/f12) f4^3 + q f12^3 f2^2/f4",
        "(2 + 3 f6^2/f12) (f12 a(q^12) - 3q^4 f36^3) + q f12^3 (f18^2/f36 - 2q^2 f6 f36^2/(f12 f18))",
    ],
    "sum PD_t(12n+6)q^n (mod 4)",
    mod=4,
)
ident("S5-PDT-36N30", "dissect(PDT, 36, 30)", "0", "PD_t(36n+30)=0 (mod 4)", mod=4)
chain(
    "S5-PDT-36N18",
    "dissect(PDT, 36, 18)",
    [
        "2q f12^3 + 3q f12^3 f2^2/f4 + f6^2/f12 f4^3",
        "2q f12^3 + 3q f12^3 (f18^2/f36 - 2q^2 f6 f36^2/(f12 f18)) + f6^2/f12 (f12 a(q^12) - 3q^4 f36^3)",
    ],
    "sum PD_t(36n+18)q^n (mod 4)",
    mod=4,
)
ident("S5-PDT-108N90", "dissect(PDT, 108, 90)", "0", "PD_t(108n+90)=0 (mod 4)", mod=4)
ident(
    "S5-PDT-108N54",
    "dissect(PDT, 108, 54)",
    "(2 + 3 f6^2/f12) f4^3 + q f12^3 f2^2/f4",
    "sum PD_t(108n+54)q^n = (2+3f_6^2/f_{12})f_4^3+qf_{12}^3f_2^2/f_4 (mod 4)",
    mod=4,
)
ident("S5-PDT-108N54-EQ", "dissect(PDT, 108, 54)", "dissect(PDT, 12, 6)", "PD_t(9(12n+6))=PD_t(12n+6) (mod 4)", mod=4)


# --- displayed lines that do not hold, with corrected companions ---------------------


def misprint(ids, note):
    for i, claim in enumerate(identities):
        if claim.id in ids:
            identities[i] = replace(claim, probe=True, note=note)


misprint(
    {"S4-PDT-12N4-L2", "S4-PDT-12N4-L3", "S4-PDT-12N4-L4", "S4-PDT-24N4-L1", "S4-PDT-24N4-L2", "S4-PDT-24N4-L3", "S4-PDT-24N4-L4"},
    "10 f4^2 should read 10 f2 f4^2/f6 * f3^2/f1^2 (10 f4 f6^2/f12 after extraction);"
    " the f12^3 in the next 24n+4 line should read f12^2; see -CORR",
)
misprint({"S4-PDT-12N10-L2", "S4-PDT-12N10-L3"}, "10 f2 f6 f12/f2 should read 10 f4 f6 f12/f2; see -CORR")
misprint(
    {
        "S5-PDT-6N-M8-L2", "S5-PDT-6N-M8-L3", "S5-PDT-12N-M8-L1", "S5-PDT-12N-M8-L2",
        "S5-PDT-24N-M8-L1", "S5-PDT-24N-M8-L2", "S5-PDT-24N-M8-L3", "S5-PDT-24N-M8-L4", "S5-PDT-48N-M8",
    },
    "coefficient -1 of the second term should read +5 (5 is not -1 mod 8); see -CORR",
)

chain(
    "S4-PDT-12N4-CORR",
    "dissect(PDT, 12, 4)",
    [
        "6 f2 f4^2/f6 a(q) f3^2/f1^2 + 10 f2 f4^2/f6 f3^2/f1^2 + 5 f6^2/(f4 f12) f1^3 f3^3",
        f"6 f2 f4^2/f6 {E218} {E211} + 10 f2 f4^2/f6 {E211} + 5 f6^2/(f4 f12) {E25}^3",
        "6 (a(q^4) f4^6 f12^2/(f2^4 f8 f24) + 12q^2 f4^5 f8 f12 f24/f2^4"
        " + q (2 a(q^4) f4^3 f6 f8 f24/(f2^3 f12) + 6 f4^8 f12^4/(f2^5 f6 f8 f24)))"
        " + 10 (f4^6 f12^2/(f2^4 f8 f24) + 2q f4^3 f6 f8 f24/(f2^3 f12))"
        " + 5 (f2^3 f8^6 f12^11/(f4^7 f6 f24^6) - 3q f2 f6 f8^2 f12^5/(f4 f24^2)"
        " + 3q^2 f4^5 f6^3 f24^2/(f2 f8^2 f12) - q^3 f4^11 f6^5 f24^6/(f2^3 f8^6 f12^7))",
    ],
    "sum PD_t(12n+4)q^n (mod 8), corrected",
    mod=8,
)
chain(
    "S4-PDT-24N4-CORR",
    "dissect(PDT, 24, 4)",
    [
        "6 a(q^2) f2^6 f6^2/(f1^4 f4 f12) + 10 f2^6 f6^2/(f1^4 f4 f12)"
        " + 5 (f1^3 f4^6 f6^11/(f2^7 f3 f12^6) + 3q f2^5 f3^3 f12^2/(f1 f4^2 f6))",
        "6 a(q^2) f4 f6^2/f12 + 10 f4 f6^2/f12 + 5 (f2 f4^2 f6^3/f12^2 f1^3/f3 + 3q f2^5 f12^2/(f4^2 f6) f3^3/f1)",
        f"6 a(q^2) f4 f6^2/f12 + 10 f4 f6^2/f12 + 5 (f2 f4^2 f6^3/f12^2 {E27} + 3q f2^5 f12^2/(f4^2 f6) {E29})",
        "6 a(q^2) f4 f6^2/f12 + 10 f4 f6^2/f12 + 5 (f2 f4^5 f6^3/f12^3 + 3q^2 f2^5 f12^5/(f4^3 f6))",
    ],
    "sum PD_t(24n+4)q^n (mod 8), corrected",
    mod=8,
)
chain(
    "S4-PDT-12N10-CORR",
    "dissect(PDT, 12, 10)",
    [
        "6 f2 f12^2/f6 a(q) + 10 f2 f12^2/f6 + 10 f4 f6 f12/f2",
        f"6 f2 f12^2/f6 {E218} + 10 f2 f12^2/f6 + 10 f4 f6 f12/f2",
    ],
    "sum PD_t(12n+10)q^n (mod 8), corrected",
    mod=8,
)
chain(
    "S5-PDT-6N-M8-CORR",
    "dissect(2 PDT, 6, 0)",
    [
        "f4^2 f6^5/(f2^5 f12^2) f1^2/f3^2 + 5 f4^2 f6^4/(f2^2 f12^2) 1/f1^4 + 2",
        f"f4^2 f6^5/(f2^5 f12^2) {E210} + 5 f4^2 f6^4/(f2^2 f12^2) {E23} + 2",
    ],
    "2 sum PD_t(6n)q^n (mod 8), corrected",
    mod=8,
)
chain(
    "S5-PDT-12N-M8-CORR",
    "dissect(2 PDT, 12, 0)",
    ["f2^4 f6^2/(f4 f12) 1/f1^4 + 5 f6^2 1/f3^4 + 2", f"f2^4 f6^2/(f4 f12) {E23} + 5 f6^2 {INV_F3_4} + 2"],
    "2 sum PD_t(12n)q^n (mod 8), corrected",
    mod=8,
)
chain(
    "S5-PDT-24N-M8-CORR",
    "dissect(2 PDT, 24, 0)",
    [
        "f2/f6 f3^2/f1^2 + 5 f6^2 1/f3^4 + 2",
        f"f2/f6 {E211} + 5 f6^2 {INV_F3_4} + 2",
        "f3^2/f6 f2/f1^2 + 5 f6^2/f3^4 + 2",
        f"f3^2/f6 {E214} + 5 f6^2/f3^4 + 2",
    ],
    "2 sum PD_t(24n)q^n (mod 8), corrected",
    mod=8,
)
ident(
    "S5-PDT-48N-M8-CORR",
    "dissect(2 PDT, 48, 0)",
    "f2^4 f6^2/(f4 f12) 1/f1^4 + 5 f6^2/f3^4 + 2",
    "2 sum PD_t(48n)q^n (mod 8), corrected",
    mod=8,
)


# --- congruence claims --------------------------------------------------------------


def form(a, b, coef=1, towers=(), vars_=None):
    out = {"a": str(a), "b": str(b)}
    if coef != 1:
        out["coef"] = str(coef)
    if towers:
        out["towers"] = [dict(zip(("p", "var", "scale", "offset"), t)) for t in towers]
    if vars_:
        out["vars"] = vars_
    return out


claims: list[dict] = []


def zero(id_, seq, lhs, mod, anchor, probe=False):
    entry = {"id": id_, "anchor": anchor, "seq": seq, "lhs": lhs, "relation": "zero", "mod": mod}
    if probe:
        entry["probe"] = True
    claims.append(entry)


def equal(id_, seq, lhs, rhs, mod, anchor):
    claims.append({"id": id_, "anchor": anchor, "seq": seq, "lhs": lhs, "relation": "equal", "mod": mod, "rhs": rhs})


# mod 3, 9, 27
zero("LIN-3N", "PDt", form(3, 0), 3, "PD_t(3n)=0 (mod 3)")
zero("LIN-3N2", "PDt", form(3, 2), 3, "PD_t(3n+2)=0 (mod 3)")
for a, b in ((36, 21), (36, 33), (48, 20), (48, 36), (72, 42), (72, 66)):
    zero(f"LIN-{a}N{b}", "PDt", form(a, b), 9, f"PD_t({a}n+{b})=0 (mod 9)")
zero("LIN-PDOT-8N", "PDOt", form(8, 0), 9, "PDO_t(8n)=0 (mod 9)")
for a, b in ((24, 0), (36, 0), (36, 24)):
    zero(f"LIN-PDOT-{a}N{b}", "PDOt", form(a, b), 27, f"PDO_t({a}n+{b})=0 (mod 27)")
for a in (1, 2, 3, 4):
    zero(
        f"LIN-PDOT-5TOWER-A{a}",
        "PDOt",
        form(30, 6 * a + 5, coef=8, towers=[(5, "k", 2, 1)], vars_={"k": 0}),
        27,
        f"PDO_t(8*5^(2k+1)(30n+{6 * a + 5}))=0 (mod 27)",
    )
zero("ACX-9N2", "PDt", form(9, 2, towers=[(3, "k", 2, 1)], vars_={"k": 0}), 9, "PD_t(3^(2k+1)(9n+2))=0 (mod 9)")
zero("ACX-9N7", "PDt", form(9, 7, towers=[(3, "k", 2, 1)], vars_={"k": 0}), 9, "PD_t(3^(2k+1)(9n+7))=0 (mod 9)")

# mod 8
zero("CONJ-48N28", "PDt", form(48, 28), 8, "PD_t(48n+28)=0 (mod 8)")
zero("CONJ-48N46", "PDt", form(48, 46), 8, "PD_t(48n+46)=0 (mod 8)")
zero("CONJ-PDOT-8N6", "PDOt", form(8, 6), 8, "PDO_t(8n+6)=0 (mod 8)")
zero("CONJ-PDOT-8N7", "PDOt", form(8, 7), 8, "PDO_t(8n+7)=0 (mod 8)")

# mod 2 and 4
for a, b, m in ((24, 12, 2), (24, 21, 2), (48, 30, 2), (144, 102, 2), (216, 153, 2), (36, 21, 4), (36, 33, 4)):
    zero(f"T12-{a}N{b}", "PDt", form(a, b), m, f"PD_t({a}n+{b})=0 (mod {m})")
equal(
    "T12-4K-12N",
    "PDt",
    form(12, 0, towers=[(2, "k", 2, 0)], vars_={"k": 0}),
    form(12, 0),
    4,
    "PD_t(2^(2k)*12n)=PD_t(12n) (mod 4)",
)
equal(
    "T12-3L4K-24N12",
    "PDt",
    form(24, 12, towers=[(3, "l", 1, 0), (2, "k", 2, 0)], vars_={"k": 0, "l": 0}),
    form(24, 12),
    4,
    "PD_t(3^l*2^(2k)(24n+12))=PD_t(24n+12) (mod 4)",
)
for a, b in ((96, 60), (96, 84), (144, 84), (144, 120), (144, 132)):
    zero(f"T12-{a}N{b}", "PDt", form(a, b), 4, f"PD_t({a}n+{b})=0 (mod 4)")
equal(
    "T12-3K-288N204-EQ",
    "PDt",
    form(288, 204, towers=[(3, "k", 1, 0)], vars_={"k": 0}),
    form(288, 204),
    4,
    "PD_t(3^k(288n+204))=PD_t(288n+204) (mod 4)",
)
zero(
    "T12-3K-288N204",
    "PDt",
    form(288, 204, towers=[(3, "k", 1, 0)], vars_={"k": 0}),
    4,
    "PD_t(3^k(288n+204))=0 (mod 4)",
)
for a, b in ((864, 792), (1728, 1224), (2592, 1080), (36, 30), (108, 90)):
    zero(f"T12-{a}N{b}", "PDt", form(a, b), 4, f"PD_t({a}n+{b})=0 (mod 4)")
equal(
    "T12-9K-12N6",
    "PDt",
    form(12, 6, towers=[(3, "k", 2, 0)], vars_={"k": 0}),
    form(12, 6),
    4,
    "PD_t(3^(2k)(12n+6))=PD_t(12n+6) (mod 4)",
)
zero("PROBE-36N22", "PDt", form(36, 22), 4, "PD_t(36n+22)=0 (mod 4)", probe=True)

# two-tower families, k, l >= 1
KL = {"k": 1, "l": 1}
cor = [
    (form(8, 5, towers=[(3, "l", 1, 0), (2, "k", 2, 0)], vars_=KL), "3^l*2^(2k)(8n+5)"),
    (form(8, 7, towers=[(3, "l", 1, 0), (2, "k", 2, 0)], vars_=KL), "3^l*2^(2k)(8n+7)"),
    (form(12, 7, towers=[(3, "l", 1, 0), (2, "k", 2, 0)], vars_=KL), "3^l*2^(2k)(12n+7)"),
    (form(12, 11, towers=[(3, "l", 1, 0), (2, "k", 2, 0)], vars_=KL), "3^l*2^(2k)(12n+11)"),
    (form(6, 5, coef=3, towers=[(2, "k", 2, 1)], vars_={"k": 1}), "3*2^(2k+1)(6n+5)"),
    (form(24, 17, towers=[(3, "l", 1, 1), (2, "k", 2, 0)], vars_=KL), "3^(l+1)*2^(2k)(24n+17)"),
    (form(12, 11, coef=9, towers=[(2, "k", 2, 1)], vars_={"k": 1}), "3^2*2^(2k+1)(12n+11)"),
    (form(24, 17, coef=9, towers=[(2, "k", 2, 1)], vars_={"k": 1}), "3^2*2^(2k+1)(24n+17)"),
    (form(12, 5, coef=27, towers=[(2, "k", 2, 1)], vars_={"k": 1}), "3^3*2^(2k+1)(12n+5)"),
    (form(6, 5, coef=2, towers=[(3, "k", 1, 0)], vars_={"k": 1}), "2*3^k(6n+5)"),
]
for i, (lhs, text) in enumerate(cor, 1):
    zero(f"C13-{i}", "PDt", lhs, 4, f"PD_t({text})=0 (mod 4)")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    ident_doc = {"claims": [claim_to_json(c) for c in identities]}
    (DATA / "identities.json").write_text(json.dumps(ident_doc, indent=1) + "\n", encoding="utf-8")
    (DATA / "claims.json").write_text(json.dumps({"claims": claims}, indent=1) + "\n", encoding="utf-8")
    print(f"{len(identities)} identities, {len(claims)} congruence claims")


if __name__ == "__main__":
    main()
