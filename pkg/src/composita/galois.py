"""Fields and composita modeled inside a fixed ambient Galois context.

A context fixes one ambient permutation group G.  Field nodes are subgroups
G_A <= G (the Galois correspondence: bigger subgroup, smaller field).  A
compositum from node A to node B is a double coset G_A phi G_B, stored by
its canonical (lexicographically least) representative, together with the
derived subgroup

    G_V = G_A  intersect  phi G_B phi^-1,

which corresponds to the mutual extension generated by k_A and the
phi-positioned copy of k_B.  The double coset determines that extension up
to its position, which is exactly the data we keep.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import DegreeMismatchError
from .perm import (ElementSet, Permutation, Subgroup, compose, conjugate,
                   decompose_into_double_cosets, double_coset, index,
                   intersect)


@dataclass(frozen=True, order=True)
class FieldNode:
    """A field object: a label plus its subgroup of the ambient group.

    Identity is by label *and* subgroup, but two distinct labels may carry
    equal subgroups (distinct objects with isomorphic fields).
    """

    label: str
    group: Subgroup


@dataclass(frozen=True)
class GaloisContext:
    """The ambient group G with an optional concrete realization attached."""

    ambient: Subgroup
    label: str = ""
    realization: Any = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        # from_elements-built subgroups are verified; re-verify here so that
        # hand-assembled Subgroup values cannot smuggle in a non-group.
        Subgroup.from_elements(self.ambient.elements)

    @property
    def degree(self) -> int:
        return self.ambient.degree

    def node(self, label: str, group: Subgroup) -> FieldNode:
        if not group.is_subgroup_of(self.ambient):
            raise ValueError(f"node {label!r}: subgroup not inside the ambient group")
        return FieldNode(label, group)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.ambient


@dataclass(frozen=True, order=True)
class Compositum:
    """A canonical double coset G_A rep G_B with its derived subgroup.

    deg_left  = [k_V : k_A] = [G_A : G_V]
    deg_right = [k_V : k_B-positioned] = [G_B : rep^-1 G_V rep]
    """

    source: FieldNode
    target: FieldNode
    rep: Permutation
    group: Subgroup = field(compare=False)

    @property
    def deg_left(self) -> int:
        return index(self.source.group, self.group)

    @property
    def deg_right(self) -> int:
        return index(self.target.group, conjugate(self.group, self.rep.inverse()))

    def is_identity(self) -> bool:
        return self.source == self.target and self.rep.is_identity()

    def key(self) -> tuple:
        return (self.source.label, self.target.label, self.rep.images)

    def __repr__(self):
        return (f"Compositum({self.source.label}->{self.target.label}, "
                f"rep={list(self.rep.images)}, |G_V|={self.group.order})")


def make_compositum(ctx: GaloisContext, a: FieldNode, b: FieldNode,
                    phi: Permutation) -> Compositum:
    """Canonicalize phi inside G_A phi G_B and derive G_V.

    Two calls with phi in the same double coset return equal values.
    """
    if phi.degree != ctx.degree:
        raise DegreeMismatchError("connecting element of wrong degree")
    if phi not in ctx:
        raise ValueError("connecting element lies outside the ambient group")
    rep = min(double_coset(a.group, phi, b.group).elements)
    group = intersect(a.group, conjugate(b.group, rep))
    return Compositum(a, b, rep, group)


def identity_compositum(a: FieldNode) -> Compositum:
    """The identity compositum of a node: rep = 1, G_V = G_A.

    The identity is always the least element of its double coset (any
    non-identity permutation exceeds the identity lexicographically at its
    first moved point), so this is already canonical.
    """
    e = Permutation.identity(a.group.degree)
    return Compositum(a, a, e, a.group)


def dual(v: Compositum) -> Compositum:
    """The reverse compositum, rep = canonical form of rep^-1.

    An involution on canonical forms: inverting maps the double coset
    G_A rep G_B bijectively onto G_B rep^-1 G_A and back.
    """
    rep = min(double_coset(v.target.group, v.rep.inverse(), v.source.group).elements)
    group = intersect(v.target.group, conjugate(v.source.group, rep))
    return Compositum(v.target, v.source, rep, group)


def product_element_set(v: Compositum, w: Compositum) -> ElementSet:
    """The product set G_A rep_V G_B rep_W G_C, computed set-by-set."""
    if v.target != w.source:
        raise ValueError(
            f"composita do not compose: {v.target.label} != {w.source.label}")
    current = {compose(x, v.rep) for x in v.source.group}
    current = {compose(x, b) for x in current for b in v.target.group}
    current = {compose(x, w.rep) for x in current}
    current = {compose(x, c) for x in current for c in w.target.group}
    return ElementSet.from_iterable(current)


def amalgamate(v: Compositum, w: Compositum) -> list[Compositum]:
    """All composita arising from a composable pair.

    Decomposes the product set G_A rep_V G_B rep_W G_C into
    (G_A, G_C)-double cosets and returns one compositum per coset,
    deduplicated and ordered by canonical representative.  Multiplicity
    bookkeeping lives in the fusion layer, not here.
    """
    prod = product_element_set(v, w)
    a, c = v.source, w.target
    reps = decompose_into_double_cosets(prod, a.group, c.group)
    out = []
    for rep in reps:
        group = intersect(a.group, conjugate(c.group, rep))
        out.append(Compositum(a, c, rep, group))
    return sorted(out)


def composita_between(ctx: GaloisContext, a: FieldNode,
                      b: FieldNode) -> list[Compositum]:
    """Every compositum from a to b: one per (G_A, G_B)-double coset of G."""
    full = ElementSet.from_iterable(ctx.ambient.elements)
    reps = decompose_into_double_cosets(full, a.group, b.group)
    return sorted(Compositum(a, b, rep, intersect(a.group, conjugate(b.group, rep)))
                  for rep in reps)


def verify_group_consistency(v: Compositum) -> bool:
    """Recompute G_V from scratch and compare with the stored value."""
    fresh = intersect(v.source.group, conjugate(v.target.group, v.rep))
    return fresh.elements == v.group.elements
