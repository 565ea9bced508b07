"""JSON and text reports (schema ``spunlink.report/v1``)."""

from __future__ import annotations

import json

from .diagram import Diagram, linking_matrix, validate
from .invariants import SurfaceLinkDescriptor, descriptor, semi_boundary

SCHEMA = "spunlink.report/v1"


def matrix_rows(rows, m):
    return [[None if i == j else int(rows[i][j]) for j in range(m)] for i in range(m)]


def descriptor_doc(desc: SurfaceLinkDescriptor) -> dict:
    return {
        "labels": list(desc.labels),
        "genera": list(desc.genera),
        "branch_index": desc.branch_index,
        "alinking_matrix": matrix_rows(desc.alk, len(desc)),
        "semi_boundary": semi_boundary(desc),
    }


def invariants_doc(diagram: Diagram) -> dict:
    table = validate(diagram)
    desc = descriptor(diagram)
    off = 1 if desc.branch_index is not None else 0
    comps = []
    for c in table.components:
        comps.append({
            "id": c.id,
            "label": c.label,
            "kind": c.kind,
            "genus": desc.genera[c.id + off],
            "winding": c.winding if diagram.is_annular else None,
        })
    lk = linking_matrix(diagram)
    doc = {
        "schema": SCHEMA,
        "report": "invariants",
        "form": "annular" if diagram.is_annular else "strip",
    }
    if diagram.is_annular:
        doc["seam_width"] = diagram.seam_width
        doc["branch_present"] = diagram.branch_present
    doc["components"] = comps
    doc["linking_matrix"] = matrix_rows(lk.tolist(), len(comps))
    doc["descriptor"] = descriptor_doc(desc)
    doc["semi_boundary"] = semi_boundary(desc)
    return doc


def provenance_doc(prov) -> dict:
    return {
        "schema": SCHEMA,
        "report": "cover",
        "p": prov.p,
        "lifts": [
            {
                "id": lift.component,
                "label": lift.label,
                "base_component": lift.base_component,
                "base_label": lift.base_label,
                "deck_index": lift.deck_index,
                "cover_degree": lift.cover_degree,
            }
            for lift in prov.lifts
        ],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def format_matrix(labels, rows) -> str:
    cells = [[("." if v is None else str(v)) for v in row] for row in rows]
    width = max([len(x) for x in labels] + [len(c) for row in cells for c in row] + [1])
    lines = [" " * width + " " + " ".join(lab.rjust(width) for lab in labels)]
    for lab, row in zip(labels, cells):
        lines.append(lab.rjust(width) + " " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines)


def invariants_text(doc: dict) -> str:
    out = []
    head = f"form {doc['form']}"
    if doc["form"] == "annular":
        head += f", seam {doc['seam_width']}, branch {'present' if doc['branch_present'] else 'absent'}"
    out.append(head)
    out.append("")
    out.append(f"{'id':>3}  {'label':<10} {'kind':<7} {'genus':>5} {'winding':>7}")
    for c in doc["components"]:
        w = "-" if c["winding"] is None else str(c["winding"])
        out.append(f"{c['id']:>3}  {c['label']:<10} {c['kind']:<7} {c['genus']:>5} {w:>7}")
    labels = [c["label"] for c in doc["components"]]
    out += ["", "linking matrix (signed)", format_matrix(labels, doc["linking_matrix"])]
    d = doc["descriptor"]
    out += ["", "alinking matrix (row around column)", format_matrix(d["labels"], d["alinking_matrix"])]
    out += ["", f"semi-boundary: {'yes' if doc['semi_boundary'] else 'no'}"]
    return "\n".join(out) + "\n"


def provenance_text(doc: dict) -> str:
    out = [f"p = {doc['p']}", f"{'id':>3}  {'label':<10} {'base':<10} {'deck':>4} {'degree':>6}"]
    for lift in doc["lifts"]:
        out.append(
            f"{lift['id']:>3}  {lift['label']:<10} {lift['base_label']:<10} "
            f"{lift['deck_index']:>4} {lift['cover_degree']:>6}"
        )
    return "\n".join(out) + "\n"
