"""JSON documents and plain-text renderings for the CLI.

Facet and angle indices are 1-based here, matching the F1..F(n+3) node names
in DOT output; the library API is 0-based.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

from .angles import Angle, AngleList
from .census import TableReport
from .cone_manifold import Classification
from .orthoscheme import (CoxeterDiagram, classify_type, coxeter_check, facet_relations,
                          is_compact)


def _num(x):
    if x is None:
        return None
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, Angle):
        return x.text()
    if isinstance(x, (np.integer, int)) and not isinstance(x, bool):
        return int(x)
    if isinstance(x, (np.floating, float)):
        x = float(x)
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    return x


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return _num(obj)


def dumps(obj) -> str:
    """Deterministic JSON; floats use the shortest round-trip repr (<= 17 digits)."""
    return json.dumps(_clean(obj), indent=2, allow_nan=False) + "\n"


def _one_based(idx):
    return [i + 1 for i in idx]


def orthoscheme_document(a: AngleList) -> tuple[dict, CoxeterDiagram | None]:
    t = classify_type(a)
    rel = facet_relations(a)
    diagram = coxeter_check(rel)
    comp = is_compact(a)
    relations = []
    for (i, j), r in sorted(rel.pairs.items()):
        relations.append({"facets": [i + 1, j + 1], "kind": r.kind,
                          "value": r.value, "ratio": r.ratio,
                          "coxeter_k": r.coxeter_order()})
    doc = {
        "angles": a.text(),
        "n": a.n,
        "type": t.type,
        "characters": list(t.characters),
        "facets": _one_based(t.positive),
        "relations": relations,
        "coxeter": diagram is not None,
        "diagram": None if diagram is None else {
            "shape": diagram.shape,
            "edges": [[i + 1, j + 1, lab] for i, j, lab in diagram.edges],
        },
        "compact": comp.compact,
        "finite_volume": comp.finite_volume,
        "witness_noncompact": None if comp.witness is None else _one_based(comp.witness),
    }
    return doc, diagram


def orthoscheme_text(doc: dict) -> str:
    lines = [f"angles (units of pi or radians): {doc['angles']}",
             f"dimension n = {doc['n']}, type {doc['type']}",
             "characters: " + " ".join(c[0].upper() for c in doc["characters"])
             + "  (S space-like, L light-like, T time-like)"]
    for r in doc["relations"]:
        if r["kind"] == "orthogonal":
            continue
        i, j = r["facets"]
        if r["kind"] == "angle":
            extra = f"angle {r['value']:.12g} rad = pi/{math.pi / r['value']:.9g}"
        elif r["kind"] == "ultraparallel":
            extra = f"ultraparallel, distance {r['value']:.12g} (cosh d = {math.sqrt(r['ratio']):.12g})"
        else:
            extra = "parallel (meet at infinity)"
        lines.append(f"  F{i}-F{j}: {extra}")
    lines.append("other facet pairs: orthogonal")
    if doc["coxeter"]:
        edges = ", ".join(f"F{i}-F{j}:{lab}" for i, j, lab in doc["diagram"]["edges"])
        lines.append(f"Coxeter: yes ({doc['diagram']['shape']}) {edges}")
    else:
        lines.append("Coxeter: no")
    if doc["compact"]:
        lines.append("compact: yes")
    else:
        i, j = doc["witness_noncompact"]
        lines.append(f"compact: no (angles {i}..{j} sum to pi); finite volume")
    return "\n".join(lines) + "\n"


def classification_document(c: Classification) -> dict:
    return {
        "angles": c.angles.text(),
        "n": c.angles.n,
        "verdict": c.verdict,
        "compact": c.compact,
        "double_cover_components": c.double_cover_components,
        "strata": [{"triple": _one_based(s.triple), "values": [v.text() for v in s.values],
                    "theta": s.theta, "k": s.k} for s in c.strata],
        "ideal_triples": [_one_based(t) for t in c.ideal_triples],
        "regular_pair_strata": c.regular_pair_strata,
        "witness_noncompact": None if c.witness_noncompact is None
        else _one_based(c.witness_noncompact),
        "witness_disconnected": None if c.witness_disconnected is None
        else _one_based(c.witness_disconnected),
    }


def classification_text(c: Classification) -> str:
    lines = [f"R{c.angles}: {c.verdict}",
             f"compact: {'yes' if c.compact else 'no'}",
             f"double cover components: {c.double_cover_components}",
             f"singular strata (index triples): {len(c.strata)}; "
             f"ideal triples: {len(c.ideal_triples)}; regular pair strata: {c.regular_pair_strata}"]
    for s in c.distinct_strata():
        vals = ", ".join(str(v) for v in s.values)
        k = f"2pi/{s.k}" if s.k else "not 2pi/k"
        lines.append(f"  ({vals}): theta = {s.theta:.15g} ({k})")
    return "\n".join(lines) + "\n"


def table_document(rep: TableReport) -> list:
    return [{"T": r.row.thurston_id, "n": r.row.n, "angles": r.row.angles.text(),
             "computed": r.computed, "expected": r.row.expected, "match": r.ok}
            for r in rep.rows]


def table_text(rep: TableReport) -> str:
    rows = [(str(r.row.thurston_id), ", ".join(str(x) for x in r.row.angles),
             r.computed, r.row.expected) for r in rep.rows]
    head = ("T", "Angles", "S(computed)", "S(expected)")
    w = [max(len(x[i]) for x in rows + [head]) for i in range(4)]
    fmt = "  ".join(f"{{:<{k}}}" for k in w)
    lines = [fmt.format(*head), fmt.format(*("-" * k for k in w))]
    lines += [fmt.format(*r) for r in rows]
    lines.append(f"{rep.matches}/{len(rep.rows)} rows match")
    return "\n".join(lines) + "\n"


def search_document(hits) -> list:
    return [{"triple": [_num(q) for q in h.triple], "k": h.k, "cos_half": h.cos_half}
            for h in hits]


def search_text(hits) -> str:
    if not hits:
        return "no hits\n"
    return "".join(f"({', '.join(str(x) for x in h.angles)}) -> theta = 2pi/{h.k}"
                   f"  cos(theta/2) = {h.cos_half:.3g}\n" for h in hits)
