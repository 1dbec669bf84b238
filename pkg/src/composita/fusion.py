"""Decategorified bimodule layer: simple 1-morphisms and fusion rules.

A simple from A to B is a compositum; fusing V: A -> B with W: B -> C
positions V's subgroup inside G_B as U = rep_V^-1 G_V rep_V and produces
one tensor summand per (U, G_W)-double coset g of G_B, with output class
rep_V g rep_W.  The summand for coset g is a field of degree
[G : U cap g G_W g^-1]; as a bimodule it is [k_i : k_X] copies of the
simple with class X, so each coset contributes multiplicity

    |G_X| / |U cap g G_W g^-1|

and contributions to the same canonical class accumulate.  (Counting one
per coset instead would break associativity on multi-object systems: a
summand field can properly contain the compositum of the two end fields,
and the plain count forgets that ratio.)  Both the per-class coset count
and the weighted multiplicity are validated against the concrete tensor
decomposition by the oracle module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .closure import BaseFieldResult, CompositumSystem
from .errors import ModelInvariantError, NotClosedError
from .galois import Compositum, FieldNode, dual, identity_compositum
from .perm import (ElementSet, Permutation, Subgroup, compose, conjugate,
                   decompose_into_double_cosets, double_coset, index,
                   intersect)


@dataclass(frozen=True, order=True)
class SimpleOneMorphism:
    compositum: Compositum
    label: str = field(default="", compare=False)

    @property
    def source(self) -> FieldNode:
        return self.compositum.source

    @property
    def target(self) -> FieldNode:
        return self.compositum.target

    def is_identity(self) -> bool:
        return self.compositum.is_identity()

    def __repr__(self):
        name = self.label or "simple"
        return (f"{name}[{self.source.label}->{self.target.label}, "
                f"rep={list(self.compositum.rep.images)}]")


def identity_simple(node: FieldNode) -> SimpleOneMorphism:
    return SimpleOneMorphism(identity_compositum(node), label=f"I({node.label})")


def dual_simple(v: SimpleOneMorphism) -> SimpleOneMorphism:
    return SimpleOneMorphism(dual(v.compositum))


@dataclass(frozen=True)
class OneMorphism:
    """A semisimple 1-morphism: simples with positive multiplicities."""

    source: FieldNode
    target: FieldNode
    summands: tuple[tuple[SimpleOneMorphism, int], ...]

    def multiplicity(self, simple: SimpleOneMorphism) -> int:
        for s, m in self.summands:
            if s.compositum == simple.compositum:
                return m
        return 0

    def __len__(self):
        return len(self.summands)


@dataclass(frozen=True)
class FuseRecord:
    """One double coset of the middle group and what it contributes."""

    coset_rep: Permutation
    output: Compositum
    stabilizer: Subgroup      # U intersect g G_W g^-1 inside G_B


def fuse_cosets(v: Compositum, w: Compositum) -> list[FuseRecord]:
    """Per-coset fusion data for a composable pair."""
    if v.target != w.source:
        raise ValueError(
            f"not composable: {v.target.label} != {w.source.label}")
    b = v.target.group
    u = conjugate(v.group, v.rep.inverse())
    if not u.is_subgroup_of(b) or not w.group.is_subgroup_of(b):
        raise ModelInvariantError("positioned subgroups escape the middle group")
    reps = decompose_into_double_cosets(
        ElementSet(b.degree, b.elements), u, w.group)
    records = []
    a, c = v.source, w.target
    for g in reps:
        out_rep = compose(compose(v.rep, g), w.rep)
        canon = min(double_coset(a.group, out_rep, c.group).elements)
        out = Compositum(a, c, canon, intersect(a.group, conjugate(c.group, canon)))
        records.append(FuseRecord(coset_rep=g, output=out,
                                  stabilizer=intersect(u, conjugate(w.group, g))))
    return records


def coset_multiplicity(record: FuseRecord) -> int:
    """[summand field : class compositum] for one coset: |G_X| / |stab|."""
    return record.output.group.order // record.stabilizer.order


def fuse(v: SimpleOneMorphism, w: SimpleOneMorphism) -> OneMorphism:
    """Tensor of simples with bimodule multiplicities."""
    records = fuse_cosets(v.compositum, w.compositum)
    counts: dict[Compositum, int] = {}
    for r in records:
        counts[r.output] = counts.get(r.output, 0) + coset_multiplicity(r)
    summands = tuple((SimpleOneMorphism(x), m)
                     for x, m in sorted(counts.items()))
    return OneMorphism(v.source, w.target, summands)


def fuse_morphisms(m1: OneMorphism, m2: OneMorphism) -> OneMorphism:
    """Bilinear extension of fuse to semisimple 1-morphisms."""
    if m1.target != m2.source:
        raise ValueError("not composable")
    counts: dict[Compositum, int] = {}
    for s1, k1 in m1.summands:
        for s2, k2 in m2.summands:
            for x, m in fuse(s1, s2).summands:
                counts[x.compositum] = counts.get(x.compositum, 0) + k1 * k2 * m
    return OneMorphism(m1.source, m2.target,
                       tuple((SimpleOneMorphism(x), m)
                             for x, m in sorted(counts.items())))


def end_field(v: SimpleOneMorphism) -> Compositum:
    """The endomorphism field of a simple, as its compositum (the bifinite
    degrees are deg_left / deg_right)."""
    return v.compositum


def inv_dim(m: OneMorphism) -> int:
    """Multiplicity of the identity simple in an endo-1-morphism."""
    if m.source != m.target:
        raise ValueError("invariants need source == target")
    return m.multiplicity(identity_simple(m.source))


def invariant_space_dim(v: SimpleOneMorphism) -> int:
    """Dimension over k_A of Inv(V (x) V*): identity-class cosets weighted
    by the degree of their summand field over k_A.  With bimodule
    multiplicities this coincides with inv_dim(fuse(V, V*)); it is
    property-tested equal to [k_V : k_A]."""
    records = fuse_cosets(v.compositum, dual(v.compositum))
    ident = identity_compositum(v.source)
    total = 0
    for r in records:
        if r.output == ident:
            total += v.source.group.order // r.stabilizer.order
    return total


def weak_rigidity_check(v: SimpleOneMorphism) -> bool:
    """True iff Inv(V (x) V*) is nonzero.  Always true in this model; a
    computed False is surfaced as an error because it means a bug."""
    value = inv_dim(fuse(v, dual_simple(v)))
    if value < 1:
        raise ModelInvariantError(
            f"weak rigidity failed for {v!r}: Inv(V (x) V*) = 0")
    return True


def split_count(v: SimpleOneMorphism, result: BaseFieldResult) -> int:
    """Number of simple summands of the base-changed simple: [k_V : k],
    the index of G_V in the base group positioned at the source node."""
    label = v.source.label
    if label not in result.h:
        raise KeyError(f"node {label!r} not covered by the base-field result")
    return index(result.h[label], v.compositum.group)


# --- fusion tables and fold/unfold ------------------------------------------


@dataclass(frozen=True)
class FusionTable:
    """All simples of a closed system with their pairwise fusion."""

    simples: tuple[SimpleOneMorphism, ...]
    table: dict  # (label, label) -> tuple of (label, multiplicity)
    identity_labels: dict  # node label -> simple label

    def simple(self, label: str) -> SimpleOneMorphism:
        for s in self.simples:
            if s.label == label:
                return s
        raise KeyError(label)

    def product(self, vlabel: str, wlabel: str):
        return self.table.get((vlabel, wlabel))


def build_fusion_table(system: CompositumSystem,
                       preferred_labels=None) -> FusionTable:
    """Label the simples of a closed system and tabulate their fusion.

    ``preferred_labels`` (Compositum -> str) overrides the automatic S#
    naming, e.g. with labels carried by an input document.
    """
    if not system.closed:
        raise NotClosedError("fusion tables need a closed system")
    preferred_labels = preferred_labels or {}
    by_comp: dict[Compositum, str] = {}
    simples = []
    counter = 1
    for comp in sorted(system.composita):
        if comp.is_identity():
            label = f"I({comp.source.label})"
        elif comp in preferred_labels:
            label = preferred_labels[comp]
        else:
            label = f"S{counter}"
            counter += 1
        by_comp[comp] = label
        simples.append(SimpleOneMorphism(comp, label=label))
    if len(set(by_comp.values())) != len(by_comp):
        raise ValueError("duplicate simple labels")
    table = {}
    for v in simples:
        for w in simples:
            if v.target != w.source:
                continue
            out = fuse(v, w)
            cells = []
            for x, m in out.summands:
                if x.compositum not in by_comp:
                    raise ModelInvariantError(
                        "fusion output escaped a closed system")
                cells.append((by_comp[x.compositum], m))
            table[(v.label, w.label)] = tuple(cells)
    identity_labels = {n.label: f"I({n.label})" for n in system.nodes}
    return FusionTable(tuple(simples), table, identity_labels)


@dataclass(frozen=True)
class FoldedFusion:
    """A fusion table viewed as a single object whose identity decomposes
    into the chosen identity summands."""

    identity_summands: tuple[str, ...]
    simple_labels: tuple[str, ...]
    table: dict
    source_table: FusionTable

    def __eq__(self, other):
        return (isinstance(other, FoldedFusion)
                and self.identity_summands == other.identity_summands
                and self.simple_labels == other.simple_labels
                and self.table == other.table)


def fold(table: FusionTable, objects=None) -> FoldedFusion:
    """Combine the chosen objects into one; identity becomes the direct sum
    of their identity simples."""
    if objects is None:
        objects = sorted(table.identity_labels)
    objects = list(objects)
    if not objects:
        raise ValueError("fold needs a nonempty object subset")
    for label in objects:
        if label not in table.identity_labels:
            raise KeyError(f"unknown object {label!r}")
    keep = tuple(s.label for s in table.simples
                 if s.source.label in objects and s.target.label in objects)
    sub = {key: val for key, val in table.table.items()
           if key[0] in keep and key[1] in keep}
    identities = tuple(table.identity_labels[o] for o in sorted(objects))
    return FoldedFusion(identity_summands=identities, simple_labels=keep,
                        table=sub, source_table=table)


@dataclass(frozen=True)
class UnfoldedCategory:
    objects: tuple[str, ...]                  # via their identity simples
    homs: dict                                # (ident_a, ident_b) -> labels


def unfold(folded: FoldedFusion) -> UnfoldedCategory:
    """Recover the object set from the identity decomposition and carve out
    each hom space by the I_A (x) V (x) I_B condition, reading only the
    fusion table."""
    idents = folded.identity_summands
    if len(set(idents)) != len(idents):
        raise ValueError("identity decomposition has a repeated summand")
    homs: dict[tuple[str, str], tuple[str, ...]] = {
        (a, b): () for a in idents for b in idents}
    for v in folded.simple_labels:
        hits = []
        for a in idents:
            for b in idents:
                left = folded.table.get((a, v))
                right = folded.table.get((v, b))
                if left == ((v, 1),) and right == ((v, 1),):
                    hits.append((a, b))
        if len(hits) != 1:
            raise ModelInvariantError(
                f"simple {v!r} is absorbed by {len(hits)} identity pairs")
        a, b = hits[0]
        homs[(a, b)] = homs[(a, b)] + (v,)
    return UnfoldedCategory(objects=idents, homs=homs)


def fusion_table_to_json(table: FusionTable) -> dict:
    simples = [{
        "label": s.label,
        "source": s.source.label,
        "target": s.target.label,
        "rep": list(s.compositum.rep.images),
        "deg_left": s.compositum.deg_left,
        "deg_right": s.compositum.deg_right,
    } for s in table.simples]
    cells = {f"{v},{w}": [{"X": x, "mult": m} for x, m in out]
             for (v, w), out in sorted(table.table.items())}
    return {"simples": simples, "table": cells}


def fusion_table_to_text(table: FusionTable) -> str:
    lines = []
    for s in table.simples:
        lines.append(f"{s.label}: {s.source.label} -> {s.target.label}  "
                     f"rep={list(s.compositum.rep.images)}  "
                     f"degrees=({s.compositum.deg_left},{s.compositum.deg_right})")
    lines.append("")
    labels = [s.label for s in table.simples]
    width = max(len(l) for l in labels) + 1
    header = " " * width + " ".join(f"{l:>{width}}" for l in labels)
    lines.append(header)
    for v in labels:
        row = [f"{v:>{width}}"]
        for w in labels:
            out = table.table.get((v, w))
            if out is None:
                cell = "."
            else:
                cell = "+".join(x if m == 1 else f"{m}{x}" for x, m in out)
            row.append(f"{cell:>{width}}")
        lines.append(" ".join(row))
    return "\n".join(lines)
