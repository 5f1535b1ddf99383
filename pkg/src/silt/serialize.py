"""Wire formats: JSON documents and DOT graphs.

All documents carry SCHEMA, rationals travel as exact "p/q" strings, and
every writer sorts its keys and rows so identical inputs produce identical
bytes.  Round-trips are exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence

from .derived import DerivedCategory, StalkSum, degree
from .endo import EndoAlgebra
from .quiver import Quiver
from .report import Report
from .reps import Rep

SCHEMA = "silt/v1"

_fmt = StalkSum.format_entry


def frac_str(x) -> str:
    return str(Fraction(x))


def parse_frac(s) -> Fraction:
    return Fraction(str(s))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# representations

def rep_to_json(rep: Rep) -> dict:
    arrows = []
    for aidx, (u, w) in enumerate(rep.quiver.arrows):
        mat = rep.maps[aidx]
        arrows.append({
            "src": u,
            "tgt": w,
            "matrix": [[frac_str(c) for c in row] for row in mat.rows],
        })
    return {"dims": list(rep.dims), "arrows": arrows}


def rep_from_json(quiver: Quiver, doc: dict) -> Rep:
    from . import linalg as la
    dims = [int(x) for x in doc["dims"]]
    by_pair = {(a["src"], a["tgt"]): a["matrix"] for a in doc["arrows"]}
    if len(by_pair) != len(doc["arrows"]):
        raise ValueError("duplicate arrow entries")
    maps = []
    for u, w in quiver.arrows:
        if (u, w) not in by_pair:
            raise ValueError(f"missing arrow ({u}, {w})")
        rows = [[parse_frac(c) for c in row] for row in by_pair[(u, w)]]
        maps.append(la.QM(dims[w], dims[u], rows))
    return Rep(quiver, dims, maps)


# ---------------------------------------------------------------------------
# silting objects and the exchange quiver

def silting_list_json(quiver: Quiver, m: int, objects: Sequence) -> dict:
    return {
        "schema": SCHEMA,
        "quiver": quiver.label,
        "m": m,
        "count": len(objects),
        "objects": [obj.to_json() for obj in objects],
    }


def silting_quiver_json(quiver: Quiver, m: int, objects: Sequence,
                        arrows: Sequence) -> dict:
    return {
        "schema": SCHEMA,
        "quiver": quiver.label,
        "m": m,
        "vertices": [{"index": i, "summands": [_fmt(p) for p in obj]}
                     for i, obj in enumerate(objects)],
        "arrows": [{"src": a["src"], "dst": a["dst"],
                    "removed": _fmt(a["removed"]), "added": _fmt(a["added"])}
                   for a in arrows],
    }


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def silting_quiver_dot(quiver: Quiver, m: int, objects: Sequence,
                       arrows: Sequence) -> str:
    lines = [f'digraph "{_dot_escape(quiver.label)} m={m}" {{']
    lines.append("  rankdir=LR;")
    lines.append("  node [shape=box];")
    for i, obj in enumerate(objects):
        label = "{" + ", ".join(f"({p[0]},{p[1]})" for p in obj) + "}"
        lines.append(f'  v{i} [label="{_dot_escape(label)}"];')
    for a in sorted(arrows, key=lambda a: (a["src"], a["dst"])):
        label = _fmt(a["removed"])
        lines.append(f'  v{a["src"]} -> v{a["dst"]} '
                     f'[label="{_dot_escape(label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# endomorphism algebras

def algebra_json(alg: EndoAlgebra) -> dict:
    rd = alg.radical_data()
    return {
        "schema": SCHEMA,
        "summands": [_fmt(p) for p in alg.summands],
        "dim": alg.dim,
        "cartan": alg.cartan(),
        "arrows": rd.arrow_counts,
        "radical_dim": len(rd.basis),
        "nilpotency_index": rd.nilpotency_index,
    }


def algebra_quiver_dot(alg: EndoAlgebra, title: str = "endo") -> str:
    """Quiver of the algebra: one vertex per summand, rad/rad^2 arrows."""
    arr = alg.radical_data().arrow_counts
    lines = [f'digraph "{_dot_escape(title)}" {{']
    for a, p in enumerate(alg.summands):
        lines.append(f'  v{a} [label="{_dot_escape(_fmt(p))}"];')
    for a in range(alg.k):
        for b in range(alg.k):
            for _ in range(arr[a][b]):
                lines.append(f"  v{a} -> v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cartan_dot(alg: EndoAlgebra, title: str = "cartan") -> str:
    """Cartan matrix rendered as a DOT table node plus the algebra quiver."""
    c = alg.cartan()
    header = " | ".join(_fmt(p) for p in alg.summands)
    rows = "\\n".join(" ".join(str(x) for x in row) for row in c)
    lines = [f'digraph "{_dot_escape(title)}" {{',
             f'  cartan [shape=box, label="{_dot_escape(header)}\\n{rows}"];',
             "}"]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reports

def report_json(rep: Report) -> dict:
    doc = rep.to_json()
    doc["schema"] = SCHEMA
    return doc


def report_table(rep: Report) -> str:
    """Fixed-order plain text table of report entries."""
    lines = [rep.summary()]
    for e in rep.entries:
        mark = "PASS" if e.passed else ("FAIL" if e.severity == "check" else "FLAG")
        lines.append(f"[{mark}] {e.check:<32} {e.instance}  "
                     f"expected={e.expected!r} got={e.got!r}")
    return "\n".join(lines) + "\n"


def chain_report_json(crep) -> dict:
    doc = crep.to_json()
    doc["schema"] = SCHEMA
    return doc


# ---------------------------------------------------------------------------
# mutation triangles

def triangle_json(tri) -> dict:
    return {
        "direction": tri.direction,
        "left": _fmt(tri.left),
        "mid": [_fmt(p) for p in tri.mid],
        "right": _fmt(tri.right),
        "removed": _fmt(tri.removed),
        "added": _fmt(tri.added),
    }


def triangle_text(tri) -> str:
    mid = "(" + " + ".join(_fmt(p) for p in tri.mid) + ")" if len(tri.mid) \
        else "0"
    shifted = (tri.left[0], tri.left[1] + 1)
    return (f"{_fmt(tri.left)} -> {mid} -> {_fmt(tri.right)} "
            f"-> {_fmt(shifted)}")
