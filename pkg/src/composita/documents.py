"""JSON context/system documents and deterministic report serialization.

The context document format:

    {
      "label": "c2_complex",
      "degree": 2,
      "ambient_generators": [[1, 0]],
      "fields": {"C": []},
      "composita": [{"source": "C", "target": "C", "phi": [1, 0],
                     "label": "A"}],
      "realization": {"kind": "cyclotomic", "n": 4}
    }

Permutations are one-line image arrays on output; input also accepts cycle
notation strings like "(0 1)(2 3)".  The optional realization is either a
built-in reference or an inline realization document; its ambient group
must coincide with the document's ambient group.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .closure import BaseFieldResult, CompositumSystem, TriangleRecord
from .errors import DocumentError
from .galois import Compositum, GaloisContext, make_compositum
from .perm import Permutation, Subgroup, subgroup_closure
from .realize import RealizedContext, load_realization, realize_context

DEFAULT_GROUP_CAP = 10_000


def parse_permutation(data, degree: int) -> Permutation:
    """One-line image array, or a cycle-notation string."""
    if isinstance(data, str):
        return _parse_cycles(data, degree)
    if isinstance(data, (list, tuple)):
        try:
            images = tuple(int(x) for x in data)
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"bad permutation entry {data!r}") from exc
        if len(images) != degree:
            raise DocumentError(
                f"permutation {data!r} has length {len(images)}, expected {degree}")
        try:
            return Permutation(images)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
    raise DocumentError(f"bad permutation entry {data!r}")


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(text: str, degree: int) -> Permutation:
    stripped = text.replace(" ", "")
    if stripped in ("", "()", "id", "e"):
        return Permutation.identity(degree)
    body = "".join(_CYCLE_RE.findall(text))
    if _CYCLE_RE.sub("", text).strip():
        raise DocumentError(f"bad cycle notation {text!r}")
    cycles = []
    for part in _CYCLE_RE.findall(text):
        points = [p for p in re.split(r"[,\s]+", part.strip()) if p]
        if not points:
            continue
        try:
            cycles.append([int(p) for p in points])
        except ValueError as exc:
            raise DocumentError(f"bad cycle notation {text!r}") from exc
    try:
        return Permutation.from_cycles(cycles, degree)
    except ValueError as exc:
        raise DocumentError(f"bad cycle notation {text!r}: {exc}") from exc


@dataclass(frozen=True)
class ParsedSystem:
    system: CompositumSystem
    labels: dict                     # Compositum -> document label
    realization: RealizedContext | None
    label: str


def parse_context_document(doc: dict,
                           max_group_order: int = DEFAULT_GROUP_CAP
                           ) -> ParsedSystem:
    if not isinstance(doc, dict):
        raise DocumentError("context document must be a JSON object")
    try:
        degree = int(doc["degree"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError("context document needs an integer 'degree'") from exc
    if degree < 1:
        raise DocumentError("degree must be positive")

    gens = [parse_permutation(p, degree)
            for p in doc.get("ambient_generators", [])]
    ambient = subgroup_closure(gens, degree=degree, max_order=max_group_order)

    realization = None
    rdoc = doc.get("realization")
    if rdoc is not None:
        realization = _parse_realization(rdoc)
        if realization.ambient.elements != ambient.elements:
            raise DocumentError(
                "realization ambient group does not match the document's "
                "ambient group")
        ctx = realization.ctx
    else:
        ctx = GaloisContext(ambient, label=str(doc.get("label", "")))

    fields = doc.get("fields")
    if not isinstance(fields, dict) or not fields:
        raise DocumentError("context document needs a nonempty 'fields' map")
    nodes = {}
    for label, gen_list in sorted(fields.items()):
        node_gens = [parse_permutation(p, degree) for p in gen_list]
        group = subgroup_closure(node_gens, degree=degree,
                                 max_order=max_group_order)
        if not group.is_subgroup_of(ambient):
            raise DocumentError(
                f"field {label!r} subgroup is not inside the ambient group")
        nodes[label] = ctx.node(label, group)

    composita = []
    labels = {}
    for entry in doc.get("composita", []):
        if not isinstance(entry, dict):
            raise DocumentError(f"bad compositum entry {entry!r}")
        try:
            src = nodes[entry["source"]]
            tgt = nodes[entry["target"]]
        except KeyError as exc:
            raise DocumentError(f"compositum references unknown field {exc}") from exc
        phi = parse_permutation(entry.get("phi", list(range(degree))), degree)
        if phi not in ambient:
            raise DocumentError(
                f"connecting element {list(phi.images)} is outside the "
                "ambient group")
        comp = make_compositum(ctx, src, tgt, phi)
        composita.append(comp)
        if "label" in entry:
            labels[comp] = str(entry["label"])
    system = CompositumSystem.build(ctx, nodes.values(), composita)
    return ParsedSystem(system=system, labels=labels,
                        realization=realization,
                        label=str(doc.get("label", "")))


def _parse_realization(rdoc) -> RealizedContext:
    if not isinstance(rdoc, dict):
        raise DocumentError("realization must be a JSON object")
    kind = rdoc.get("kind", "document")
    if kind == "cyclotomic":
        try:
            n = int(rdoc["n"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError("cyclotomic realization needs 'n'") from exc
        return realize_context("cyclotomic", n)
    if kind == "s3_x3m2":
        return realize_context("s3_x3m2")
    if kind == "document":
        return load_realization(rdoc)
    raise DocumentError(f"unknown realization kind {kind!r}")


def load_system(path_or_doc,
                max_group_order: int = DEFAULT_GROUP_CAP) -> ParsedSystem:
    if isinstance(path_or_doc, dict):
        return parse_context_document(path_or_doc, max_group_order)
    try:
        with open(path_or_doc, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path_or_doc}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON in {path_or_doc}: {exc}") from exc
    return parse_context_document(doc, max_group_order)


# --- serialization --------------------------------------------------------------


def permutation_to_json(p: Permutation) -> list[int]:
    return list(p.images)


def subgroup_to_json(h: Subgroup) -> list[list[int]]:
    return [permutation_to_json(p) for p in h.elements]


def compositum_to_json(v: Compositum) -> dict:
    return {
        "source": v.source.label,
        "target": v.target.label,
        "rep": permutation_to_json(v.rep),
        "group_order": v.group.order,
        "deg_left": v.deg_left,
        "deg_right": v.deg_right,
    }


def system_to_document(system: CompositumSystem, labels=None) -> dict:
    labels = labels or {}
    return {
        "degree": system.ctx.degree,
        "ambient_generators": [permutation_to_json(p)
                               for p in system.ctx.ambient.elements],
        "fields": {n.label: [permutation_to_json(p) for p in n.group.generators]
                   or [permutation_to_json(p) for p in n.group.elements]
                   for n in system.nodes},
        "composita": [
            {**{"source": v.source.label, "target": v.target.label,
                "phi": permutation_to_json(v.rep)},
             **({"label": labels[v]} if v in labels else {})}
            for v in system.composita],
    }


def triangle_to_json(rec: TriangleRecord) -> dict:
    return {
        "compositum": compositum_to_json(rec.compositum),
        "group_inside_source": rec.group_inside_source,
        "source_inside_h": rec.source_inside_h,
        "conjugacy_matches": rec.conjugacy_matches,
        "ok": rec.ok,
    }


def derivation_to_json(comp: Compositum, how: tuple) -> dict:
    return {"compositum": compositum_to_json(comp),
            "by": [list(x) if isinstance(x, tuple) else x for x in how]}


def base_field_to_json(result: BaseFieldResult) -> dict:
    return {
        "base_label": result.base_label,
        "base_group": subgroup_to_json(result.base_group),
        "H": {label: subgroup_to_json(h) for label, h in sorted(result.h.items())},
        "indices": dict(sorted(result.indices.items())),
        "triangles": [triangle_to_json(r) for r in result.witnesses],
        "all_triangles_ok": result.all_triangles_ok,
    }


def canonical_json(payload) -> str:
    """Byte-stable JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
