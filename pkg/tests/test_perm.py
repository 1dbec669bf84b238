"""Permutation kernel tests.

Expected values marked as derived were computed by the brute-force oracles
defined at the top of this file (exhaustive Cayley table / product
enumeration), then frozen.
"""

import random

import pytest

from composita.errors import (CapExceededError, CosetDecompositionError,
                              DegreeMismatchError)
from composita.perm import (ElementSet, Permutation, Subgroup, all_subgroups,
                            canonical_rep, compose, conjugate, double_coset,
                            decompose_into_double_cosets, index, intersect,
                            perms_of_degree, subgroup_closure)


# --- independent oracles -------------------------------------------------

def oracle_compose(p, q):
    """Function composition on raw image tuples: apply q, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def oracle_cayley_table(degree):
    perms = [tuple(im) for im in
             sorted(p.images for p in perms_of_degree(degree))]
    return {(a, b): oracle_compose(a, b) for a in perms for b in perms}


def oracle_double_coset(h_elems, g, k_elems):
    return {oracle_compose(oracle_compose(x, g), y)
            for x in h_elems for y in k_elems}


S3 = Subgroup.symmetric(3)
T12 = Permutation.from_cycles([(1, 2)], 3)   # the transposition (1 2)
T02 = Permutation.from_cycles([(0, 2)], 3)
T01 = Permutation.from_cycles([(0, 1)], 3)
C3 = Permutation((1, 2, 0))                  # 3-cycle 0->1->2->0


# --- Permutation / compose ----------------------------------------------

def test_identity_and_inverse_cases():
    p = Permutation((2, 0, 1, 3))
    e = Permutation.identity(4)
    assert compose(e, p) == p
    assert compose(p, e) == p
    assert compose(p, p.inverse()) == e
    assert compose(p.inverse(), p) == e


def test_compose_matches_cayley_table_exhaustively():
    table = oracle_cayley_table(3)
    for (a, b), c in table.items():
        assert compose(Permutation(a), Permutation(b)).images == c
    # The frozen spec example, derived from the table above:
    # apply (0,2,1) first, then (1,0,2) -> the 3-cycle 0->1->2->0.
    assert oracle_compose((1, 0, 2), (0, 2, 1)) == (1, 2, 0)
    assert compose(Permutation((1, 0, 2)), Permutation((0, 2, 1))) == Permutation((1, 2, 0))


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(Permutation((1, 0)), Permutation((0, 1, 2)))


def test_permutation_validation_and_cycles():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    p = Permutation.from_cycles([(0, 1), (2, 3, 4)], 5)
    assert p.images == (1, 0, 3, 4, 2)
    assert p.cycles() == [(0, 1), (2, 3, 4)]
    with pytest.raises(ValueError):
        Permutation.from_cycles([(0, 1), (1, 2)], 3)


# --- subgroup closure ----------------------------------------------------

def test_closure_empty_and_involution():
    triv = subgroup_closure([], degree=3)
    assert triv.elements == (Permutation.identity(3),)
    two = subgroup_closure([T12])
    assert two.order == 2
    assert T12 in two


def test_closure_generates_s3():
    # Exhaustive enumeration oracle: S3 has exactly the 6 degree-3 perms.
    everything = sorted(perms_of_degree(3))
    g = subgroup_closure([T01, C3])
    assert list(g.elements) == everything
    assert g.order == 6


def test_closure_cap():
    with pytest.raises(CapExceededError):
        Subgroup.symmetric(5, max_order=24)


def test_from_elements_verifies_axioms():
    with pytest.raises(ValueError):
        Subgroup.from_elements([Permutation.identity(3), C3])  # no c^2
    ok = Subgroup.from_elements([Permutation.identity(3), C3, compose(C3, C3)])
    assert ok.order == 3


# --- double cosets -------------------------------------------------------

def test_double_coset_trivial_and_s3_sizes():
    triv = Subgroup.trivial(3)
    assert double_coset(triv, C3, triv).elements == (C3,)

    h = subgroup_closure([T12])
    e = Permutation.identity(3)
    # Derived by exhaustive product enumeration:
    assert oracle_double_coset([x.images for x in h], e.images,
                               [x.images for x in h]) == {(0, 1, 2), (0, 2, 1)}
    assert len(double_coset(h, e, h)) == 2
    assert len(double_coset(h, C3, h)) == 4
    # sizes 2 + 4 partition S3
    both = set(double_coset(h, e, h)) | set(double_coset(h, C3, h))
    assert both == set(S3.elements)


def test_double_coset_size_law_exhaustive_s3():
    subs = all_subgroups(S3)
    for h in subs:
        for k in subs:
            for g in S3:
                hg = double_coset(h, g, k)
                cap = intersect(h, conjugate(k, g))
                assert len(hg) * cap.order == h.order * k.order


def test_decompose_trivial_cases():
    h = subgroup_closure([T12])
    assert decompose_into_double_cosets(
        ElementSet.from_iterable(h.elements), h, h) == [Permutation.identity(3)]
    s3_set = ElementSet.from_iterable(S3.elements)
    reps = decompose_into_double_cosets(s3_set, h, h)
    assert len(reps) == 2
    triv = Subgroup.trivial(3)
    assert len(decompose_into_double_cosets(s3_set, triv, triv)) == 6


def test_decompose_rejects_non_union():
    h = subgroup_closure([T12])
    bad = ElementSet.from_iterable([Permutation.identity(3), C3])
    with pytest.raises(CosetDecompositionError):
        decompose_into_double_cosets(bad, h, h)


def test_partition_property_exhaustive():
    """Every union of (H, K)-double cosets decomposes disjointly and exactly."""
    subs = all_subgroups(S3)
    for h in subs:
        for k in subs:
            full = ElementSet.from_iterable(S3.elements)
            reps = decompose_into_double_cosets(full, h, k)
            seen: set = set()
            for r in reps:
                coset = set(double_coset(h, r, k))
                assert not (coset & seen)
                seen |= coset
            assert seen == set(S3.elements)


def test_canonical_rep_idempotent():
    h = subgroup_closure([T12])
    k = subgroup_closure([T01])
    for g in S3:
        rep = canonical_rep(h, g, k)
        for other in double_coset(h, g, k):
            assert canonical_rep(h, other, k) == rep


# --- intersect / conjugate / index ---------------------------------------

def test_intersect_examples():
    h = subgroup_closure([T12])
    k = subgroup_closure([T02])
    assert intersect(h, h) == h
    assert intersect(h, k).order == 1  # derived: exhaustive check
    assert index(S3, h) == 3


def test_index_rejects_non_subgroup():
    h = subgroup_closure([T12])
    k = subgroup_closure([T02])
    with pytest.raises(ValueError):
        index(h, k)


def test_conjugate():
    # c (1 2) c^-1 swaps c(1)=2 and c(2)=0, i.e. equals (0 2).
    h = subgroup_closure([T12])
    assert conjugate(h, C3).elements == subgroup_closure([T02]).elements
    for g in S3:
        assert conjugate(h, g).order == h.order


def test_all_subgroups_s3():
    subs = all_subgroups(S3)
    assert sorted(s.order for s in subs) == [1, 2, 2, 2, 3, 6]


def test_randomized_size_law_s4():
    rng = random.Random(7)
    s4 = Subgroup.symmetric(4)
    pool = list(s4.elements)
    for _ in range(25):
        h = subgroup_closure(rng.sample(pool, rng.randint(1, 2)))
        k = subgroup_closure(rng.sample(pool, rng.randint(1, 2)))
        g = rng.choice(pool)
        hg = double_coset(h, g, k)
        assert len(hg) * intersect(h, conjugate(k, g)).order == h.order * k.order
        reps = decompose_into_double_cosets(
            ElementSet.from_iterable(s4.elements), h, k)
        assert sum(len(double_coset(h, r, k)) for r in reps) == 24
