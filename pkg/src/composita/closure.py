"""Closure of compositum systems and base-field extraction.

A system is a finite set of field nodes K plus a set E of composita between
them.  ``close`` saturates E under identities, duals and amalgamation;
termination is guaranteed because E is bounded by the finite set of all
double cosets over all node pairs.  On a closed, connected system the union

    H_A = union over V in E_{A,A} of  G_A rep_V G_A

is a group of finite index over G_A, the conjugates phi_V H_B phi_V^-1 all
equal H_A, and the fixed field of H_A is the common base field.  Those
facts are re-verified exhaustively at runtime; a failure raises
ModelInvariantError because it can only mean a bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from .errors import (CapExceededError, ModelInvariantError, NotClosedError,
                     NotConnectedError)
from .galois import (Compositum, FieldNode, GaloisContext, amalgamate, dual,
                     identity_compositum, make_compositum)
from .perm import Subgroup, conjugate, double_coset, index

DEFAULT_CLOSURE_CAP = 4096

# Derivation witnesses: how each element of E entered the closure.
#   ("input",)                      supplied by the caller
#   ("identity", label)             identity compositum of a node
#   ("dual", parent_key)            dual of an earlier element
#   ("amalgam", left_key, right_key)  summand of an earlier amalgamation
Derivation = tuple


@dataclass(frozen=True)
class CompositumSystem:
    ctx: GaloisContext
    nodes: tuple[FieldNode, ...]
    composita: tuple[Compositum, ...]
    closed: bool = False
    derivations: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def build(cls, ctx: GaloisContext, nodes: Iterable[FieldNode],
              composita: Iterable[Compositum] = ()) -> "CompositumSystem":
        nodes = tuple(sorted(set(nodes)))
        labels = [n.label for n in nodes]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate node labels: {labels}")
        node_set = set(nodes)
        for n in nodes:
            if not n.group.is_subgroup_of(ctx.ambient):
                raise ValueError(f"node {n.label!r} subgroup escapes the ambient group")
        comps = tuple(sorted(set(composita)))
        for v in comps:
            if v.source not in node_set or v.target not in node_set:
                raise ValueError(f"compositum {v!r} references an unknown node")
            if v.rep not in ctx.ambient:
                raise ValueError(f"compositum {v!r} has a representative outside the ambient group")
        return cls(ctx, nodes, comps)

    def node(self, label: str) -> FieldNode:
        for n in self.nodes:
            if n.label == label:
                return n
        raise KeyError(label)

    def between(self, a: FieldNode, b: FieldNode) -> list[Compositum]:
        return [v for v in self.composita if v.source == a and v.target == b]

    def __len__(self) -> int:
        return len(self.composita)


def close(system: CompositumSystem,
          max_size: int = DEFAULT_CLOSURE_CAP) -> CompositumSystem:
    """Least superset of E containing identities, closed under dual and
    amalgamation.  Deterministic: candidates are processed in canonical
    sort order, breadth first, so identical inputs give identical
    derivation logs.  Raises CapExceededError past ``max_size``.
    """
    e: dict[Compositum, Derivation] = {}

    def add(v: Compositum, how: Derivation) -> bool:
        if v in e:
            return False
        if len(e) >= max_size:
            raise CapExceededError(
                f"closure exceeded the cap of {max_size} composita")
        e[v] = how
        return True

    for n in system.nodes:
        add(identity_compositum(n), ("identity", n.label))
    for v in sorted(system.composita):
        add(v, ("input",))

    dualized: set[Compositum] = set()
    amalgamated: set[tuple[Compositum, Compositum]] = set()
    changed = True
    while changed:
        changed = False
        for v in sorted(e):
            if v not in dualized:
                dualized.add(v)
                if add(dual(v), ("dual", v.key())):
                    changed = True
        current = sorted(e)
        for v in current:
            for w in current:
                if v.target != w.source or (v, w) in amalgamated:
                    continue
                amalgamated.add((v, w))
                for x in amalgamate(v, w):
                    if add(x, ("amalgam", v.key(), w.key())):
                        changed = True
    return CompositumSystem(system.ctx, system.nodes, tuple(sorted(e)),
                            closed=True, derivations=dict(e))


def replay_derivations(system: CompositumSystem) -> bool:
    """Re-derive every element of a closed system from its witness.

    Witnesses are checked in canonical order; each one must reproduce its
    compositum from already-verified material.
    """
    if not system.closed:
        raise NotClosedError("derivation replay needs a closed system")
    by_key = {v.key(): v for v in system.composita}
    verified: set[tuple] = set()
    inputs = {v.key() for v, how in system.derivations.items() if how == ("input",)}
    pending = sorted(system.derivations.items(), key=lambda kv: kv[0])
    # Iterate until stable: an amalgam witness may cite a later-sorted parent.
    progress = True
    while pending and progress:
        progress = False
        remaining = []
        for v, how in pending:
            kind = how[0]
            ok = False
            if kind == "input":
                ok = True
            elif kind == "identity":
                ok = identity_compositum(system.node(how[1])) == v
            elif kind == "dual":
                parent = by_key.get(how[1])
                if parent is not None and (parent.key() in verified or parent.key() in inputs):
                    ok = dual(parent) == v
                else:
                    remaining.append((v, how))
                    continue
            elif kind == "amalgam":
                left, right = by_key.get(how[1]), by_key.get(how[2])
                if left is None or right is None:
                    return False
                if not ((left.key() in verified or left.key() in inputs)
                        and (right.key() in verified or right.key() in inputs)):
                    remaining.append((v, how))
                    continue
                ok = v in amalgamate(left, right)
            if not ok:
                return False
            verified.add(v.key())
            progress = True
        pending = remaining
    return not pending


def is_connected(system: CompositumSystem) -> bool:
    """True iff the node graph with an edge per compositum is connected."""
    if len(system.nodes) <= 1:
        return True
    adj: dict[str, set[str]] = {n.label: set() for n in system.nodes}
    for v in system.composita:
        adj[v.source.label].add(v.target.label)
        adj[v.target.label].add(v.source.label)
    start = system.nodes[0].label
    seen = {start}
    stack = [start]
    while stack:
        for nxt in adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(system.nodes)


def h_group(system: CompositumSystem, a: FieldNode) -> Subgroup:
    """The union of the self-cosets G_A rep_V G_A over V in E_{A,A}.

    On a closed system this union is a group (closed under multiplication
    and inversion, contains G_A); the exhaustive check is the executable
    content of the closure guarantee and raising here means a bug.
    """
    if not system.closed:
        raise NotClosedError("h_group needs a closed system")
    if a not in system.nodes:
        raise KeyError(a.label)
    elems: set = set()
    for v in system.between(a, a):
        elems.update(double_coset(a.group, v.rep, a.group).elements)
    try:
        h = Subgroup.from_elements(elems)
    except ValueError as exc:
        raise ModelInvariantError(
            f"union of self-cosets at node {a.label!r} is not a group: {exc}"
        ) from exc
    if not a.group.is_subgroup_of(h):
        raise ModelInvariantError(
            f"H at node {a.label!r} does not contain G_{a.label}")
    return h


@dataclass(frozen=True)
class TriangleRecord:
    compositum: Compositum
    group_inside_source: bool      # G_V <= G_A
    source_inside_h: bool          # G_A <= H_A
    conjugacy_matches: bool        # rep H_B rep^-1 == H_A

    @property
    def ok(self) -> bool:
        return (self.group_inside_source and self.source_inside_h
                and self.conjugacy_matches)


@dataclass(frozen=True)
class BaseFieldResult:
    """Per-node H groups, the designated base group, and index data."""

    h: dict[str, Subgroup]
    base_label: str                # root node whose H was designated as k
    base_group: Subgroup
    indices: dict[str, int]        # label -> [H_A : G_A] = [k_A : k]
    witnesses: tuple[TriangleRecord, ...]

    @property
    def all_triangles_ok(self) -> bool:
        return all(w.ok for w in self.witnesses)


def base_field(system: CompositumSystem) -> BaseFieldResult:
    """Compute every H_A, verify the cross-node conjugacies, designate the
    base group at the lexicographically least node.

    The conjugacy rep_V H_B rep_V^-1 == H_A (for every V: A -> B in E) is
    what makes the base field well defined across nodes: any two connecting
    choices agree after restriction to the fixed field of H.
    """
    if not system.closed:
        raise NotClosedError("base_field needs a closed system")
    if not is_connected(system):
        raise NotConnectedError("base_field needs a connected system")
    h: dict[str, Subgroup] = {n.label: h_group(system, n) for n in system.nodes}
    witnesses = []
    for v in sorted(system.composita):
        ha = h[v.source.label]
        hb = h[v.target.label]
        conj = conjugate(hb, v.rep)
        rec = TriangleRecord(
            compositum=v,
            group_inside_source=v.group.is_subgroup_of(v.source.group),
            source_inside_h=v.source.group.is_subgroup_of(ha),
            conjugacy_matches=conj.elements == ha.elements,
        )
        if not rec.ok:
            raise ModelInvariantError(
                f"base-field verification failed on {v!r}: "
                f"G_V<=G_A={rec.group_inside_source}, "
                f"G_A<=H_A={rec.source_inside_h}, "
                f"conjugacy={rec.conjugacy_matches}")
        witnesses.append(rec)
    root = min(n.label for n in system.nodes)
    indices = {n.label: index(h[n.label], n.group) for n in system.nodes}
    return BaseFieldResult(h=h, base_label=root, base_group=h[root],
                           indices=indices, witnesses=tuple(witnesses))


def verify_triangles(result: BaseFieldResult,
                     system: CompositumSystem) -> list[TriangleRecord]:
    """Re-check every commuting-triangle containment, reporting per
    compositum instead of raising."""
    records = []
    for v in sorted(system.composita):
        ha = result.h[v.source.label]
        hb = result.h[v.target.label]
        records.append(TriangleRecord(
            compositum=v,
            group_inside_source=v.group.is_subgroup_of(v.source.group),
            source_inside_h=v.source.group.is_subgroup_of(ha),
            conjugacy_matches=conjugate(hb, v.rep).elements == ha.elements,
        ))
    return records
