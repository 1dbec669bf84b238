"""Exact finite permutation-group kernel.

Permutations are stored in one-line notation on the points ``0..n-1``.
Composition is function composition: ``compose(p, q)`` applies ``q`` first
and then ``p``, so ``compose(p, q).images[i] == p.images[q.images[i]]``.
Every product written multiplicatively in this package (``p * q``, double
cosets ``H g K``, conjugation ``g H g^-1``) uses this one convention.

Groups are explicit sorted element lists; we deliberately avoid stabilizer
chains because the ambient groups are desk scale and exhaustive
verification is worth more here than asymptotics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, CosetDecompositionError, DegreeMismatchError

DEFAULT_GROUP_ORDER_CAP = 10_000


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0, .., n-1}`` in one-line notation.

    Ordering is lexicographic on the image tuple; that order also defines
    canonical double-coset representatives throughout the package.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], degree: int) -> "Permutation":
        """Build a permutation from disjoint cycles of point labels."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = list(cycle)
            for a in cycle:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated across cycles")
                seen.add(a)
            for i, a in enumerate(cycle):
                images[a] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        out = []
        seen: set[int] = set()
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            a = self.images[start]
            while a != start:
                cyc.append(a)
                seen.add(a)
                a = self.images[a]
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degree {p.degree} != {q.degree}")
    return Permutation(tuple(p.images[j] for j in q.images))


def _product_left(elements: Iterable[Permutation], g: Permutation) -> set[Permutation]:
    return {compose(e, g) for e in elements}


@dataclass(frozen=True)
class ElementSet:
    """A sorted, duplicate-free set of permutations of common degree."""

    degree: int
    elements: tuple[Permutation, ...]

    @classmethod
    def from_iterable(cls, elems: Iterable[Permutation]) -> "ElementSet":
        unique = sorted(set(elems))
        if not unique:
            raise ValueError("empty element set has no degree")
        degree = unique[0].degree
        for e in unique:
            if e.degree != degree:
                raise DegreeMismatchError("mixed degrees in element set")
        return cls(degree, tuple(unique))

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)


@dataclass(frozen=True, order=True)
class Subgroup:
    """An explicit subgroup: sorted element tuple plus the generators that
    defined it.  ``generators`` is documentation; ``elements`` is the truth.
    """

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(compare=False, default=())

    @classmethod
    def from_elements(cls, elems: Iterable[Permutation],
                      generators: Sequence[Permutation] = ()) -> "Subgroup":
        """Wrap an element list, verifying group axioms by exhaustive scan."""
        unique = sorted(set(elems))
        if not unique:
            raise ValueError("a subgroup needs at least the identity")
        degree = unique[0].degree
        elem_set = set(unique)
        if Permutation.identity(degree) not in elem_set:
            raise ValueError("element list does not contain the identity")
        for a in unique:
            if a.degree != degree:
                raise DegreeMismatchError("mixed degrees in subgroup")
            if a.inverse() not in elem_set:
                raise ValueError(f"not closed under inversion at {a}")
            for b in unique:
                if compose(a, b) not in elem_set:
                    raise ValueError(f"not closed under composition at {a}, {b}")
        return cls(degree, tuple(unique), tuple(generators))

    @classmethod
    def trivial(cls, degree: int) -> "Subgroup":
        e = Permutation.identity(degree)
        return cls(degree, (e,), ())

    @classmethod
    def generate(cls, gens: Iterable[Permutation], degree: int | None = None,
                 max_order: int = DEFAULT_GROUP_ORDER_CAP) -> "Subgroup":
        return subgroup_closure(gens, degree=degree, max_order=max_order)

    @classmethod
    def symmetric(cls, degree: int,
                  max_order: int = DEFAULT_GROUP_ORDER_CAP) -> "Subgroup":
        if degree <= 1:
            return cls.trivial(max(degree, 1))
        swap = Permutation.from_cycles([(0, 1)], degree)
        cycle = Permutation(tuple(range(1, degree)) + (0,))
        return subgroup_closure([swap, cycle], degree=degree, max_order=max_order)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return set(self.elements) <= set(other.elements)

    def __repr__(self):
        gens = [list(g.images) for g in self.generators]
        return f"Subgroup(degree={self.degree}, order={self.order}, generators={gens})"


def subgroup_closure(gens: Iterable[Permutation], degree: int | None = None,
                     max_order: int = DEFAULT_GROUP_ORDER_CAP) -> Subgroup:
    """Smallest subgroup containing ``gens``, as an explicit element list.

    Breadth-first products; raises CapExceededError past ``max_order``.
    An empty generator set yields the trivial group (``degree`` required).
    """
    gens = list(gens)
    if not gens:
        if degree is None:
            raise ValueError("degree required for an empty generator set")
        return Subgroup.trivial(degree)
    if degree is None:
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError("generators of mixed degree")
    elems: set[Permutation] = {Permutation.identity(degree)}
    elems.update(gens)
    elems.update(g.inverse() for g in gens)
    frontier = list(elems)
    while frontier:
        new: list[Permutation] = []
        for a in frontier:
            for g in gens:
                c = compose(a, g)
                if c not in elems:
                    elems.add(c)
                    new.append(c)
                    if len(elems) > max_order:
                        raise CapExceededError(
                            f"subgroup closure exceeded cap {max_order}")
        frontier = new
    return Subgroup(degree, tuple(sorted(elems)), tuple(gens))


def double_coset(h: Subgroup, g: Permutation, k: Subgroup) -> ElementSet:
    """The set ``{x g y : x in H, y in K}``."""
    if h.degree != g.degree or k.degree != g.degree:
        raise DegreeMismatchError("double coset arguments of mixed degree")
    hg = _product_left(h.elements, g)
    out = {compose(a, y) for a in hg for y in k.elements}
    return ElementSet(g.degree, tuple(sorted(out)))


def canonical_rep(h: Subgroup, g: Permutation, k: Subgroup) -> Permutation:
    """Lexicographically least element of the double coset ``H g K``."""
    return min(double_coset(h, g, k).elements)


def decompose_into_double_cosets(s: ElementSet, h: Subgroup,
                                 k: Subgroup) -> list[Permutation]:
    """Split ``s`` into (H, K)-double cosets; return canonical representatives.

    The returned representatives are sorted, their cosets are pairwise
    disjoint, and their union is exactly ``s``.  If ``s`` is not a union of
    double cosets the leftover elements trigger CosetDecompositionError.
    """
    if s.degree != h.degree or s.degree != k.degree:
        raise DegreeMismatchError("decomposition arguments of mixed degree")
    remaining = set(s.elements)
    reps: list[Permutation] = []
    while remaining:
        g = min(remaining)
        coset = set(double_coset(h, g, k).elements)
        if not coset <= remaining:
            raise CosetDecompositionError(
                "element set is not a union of (H, K)-double cosets: "
                f"coset of {list(g.images)} leaks outside the set")
        reps.append(g)
        remaining -= coset
    return reps


def intersect(h: Subgroup, k: Subgroup) -> Subgroup:
    """Exact set intersection (always a subgroup)."""
    if h.degree != k.degree:
        raise DegreeMismatchError("intersecting subgroups of mixed degree")
    common = sorted(set(h.elements) & set(k.elements))
    return Subgroup(h.degree, tuple(common))


def conjugate(h: Subgroup, g: Permutation) -> Subgroup:
    """The conjugate subgroup ``g H g^-1``."""
    if h.degree != g.degree:
        raise DegreeMismatchError("conjugation arguments of mixed degree")
    ginv = g.inverse()
    elems = sorted(compose(compose(g, a), ginv) for a in h.elements)
    return Subgroup(h.degree, tuple(elems))


def index(g: Subgroup, h: Subgroup) -> int:
    """The index [G : H]; requires H <= G elementwise."""
    if not h.is_subgroup_of(g):
        raise ValueError("index called with a non-subgroup")
    return g.order // h.order


def all_subgroups(g: Subgroup) -> list[Subgroup]:
    """Every subgroup of ``g``, sorted by (order, elements).

    Incremental closure: repeatedly extend known subgroups by one element.
    Fine for desk-scale ambient groups.
    """
    found: dict[tuple[Permutation, ...], Subgroup] = {}
    trivial = Subgroup.trivial(g.degree)
    found[trivial.elements] = trivial
    frontier = [trivial]
    while frontier:
        new: list[Subgroup] = []
        for h in frontier:
            for x in g.elements:
                if x in h:
                    continue
                ext = subgroup_closure(list(h.elements) + [x],
                                       degree=g.degree, max_order=g.order)
                if ext.elements not in found:
                    found[ext.elements] = ext
                    new.append(ext)
        frontier = new
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


def perms_of_degree(degree: int) -> Iterator[Permutation]:
    """All permutations of the given degree (test and demo helper)."""
    for images in itertools.permutations(range(degree)):
        yield Permutation(images)
