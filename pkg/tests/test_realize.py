"""Realization tests: explicit Galois fields, fixed fields, oracle checks."""

import pytest

from composita.errors import DocumentError, OracleMismatchError
from composita.galois import identity_compositum, make_compositum
from composita.numfield import FieldEmbedding
from composita.perm import Permutation, Subgroup, index, subgroup_closure
from composita.ratpoly import RatPoly
from composita.realize import (cyclotomic_poly, load_realization,
                               oracle_check, realization_to_document,
                               realize_context, sweep_system)


@pytest.fixture(scope="module")
def s3():
    return realize_context("s3_x3m2")


@pytest.fixture(scope="module")
def cyc4():
    return realize_context("cyclotomic", 4)


# --- realizations -----------------------------------------------------------

def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == RatPoly([-1, 1])
    assert cyclotomic_poly(2) == RatPoly([1, 1])
    assert cyclotomic_poly(4) == RatPoly([1, 0, 1])
    assert cyclotomic_poly(5) == RatPoly([1, 1, 1, 1, 1])
    assert cyclotomic_poly(12) == RatPoly([1, 0, -1, 0, 1])


def test_cyclotomic_5_is_cyclic_of_order_4():
    rctx = realize_context("cyclotomic", 5)
    g = rctx.ambient
    assert g.order == 4
    orders = sorted(_element_order(p, g.degree) for p in g)
    assert orders == [1, 2, 4, 4]  # cyclic


def test_cyclotomic_12_is_klein_four():
    rctx = realize_context("cyclotomic", 12)
    g = rctx.ambient
    assert g.order == 4
    assert all(_element_order(p, g.degree) in (1, 2) for p in g)


def _element_order(p, degree):
    e = Permutation.identity(degree)
    q, n = p, 1
    while q != e:
        q = q * p
        n += 1
    return n


def test_s3_realization_is_nonabelian_order_6(s3):
    g = s3.ambient
    assert g.order == 6
    assert any(a * b != b * a for a in g for b in g)
    assert len(s3.auto_images) == 6  # all six automorphisms realized
    assert s3.omega.degree == 6


def test_s3_roots_cube_to_two(s3):
    for r in s3.root_images:
        cube = s3.omega.mul(s3.omega.mul(r, r), r)
        assert cube == RatPoly([2])


def test_automorphisms_permute_roots(s3):
    # the permutation attached to each automorphism is its action on roots
    for p, img in s3.auto_images.items():
        for i, root in enumerate(s3.root_images):
            assert s3.apply_auto(p, root) == s3.root_images[p(i)]


def test_cyclotomic_unit_action(cyc4):
    # nontrivial automorphism of Q(i) is conjugation z -> z^3 = -z
    c = Permutation((1, 0))
    z = cyc4.omega.gen()
    assert cyc4.apply_auto(c, z) == RatPoly([0, -1])


# --- fixed fields ---------------------------------------------------------------

def test_fixed_field_extremes(s3):
    full, _ = s3.fixed_field(s3.ambient)
    assert full.degree == 1
    omega_field, emb = s3.fixed_field(Subgroup.trivial(3))
    assert omega_field is s3.omega
    assert emb.image == s3.omega.gen()


def test_fixed_field_of_transposition_is_cbrt2(s3):
    h = subgroup_closure([Permutation((0, 2, 1))])  # fixes root 0
    nf, emb = s3.fixed_field(h)
    assert nf.degree == 3
    # root 0 lies in the fixed field: express it in powers of the primitive
    # element, inside Omega.
    r0 = s3.root_images[0]
    from composita.linalg import solve
    cols = []
    power = RatPoly.one()
    for _ in range(nf.degree):
        cols.append(s3.omega.to_vector(power))
        power = s3.omega.mul(power, emb.image)
    matrix = [[cols[j][i] for j in range(nf.degree)]
              for i in range(s3.omega.degree)]
    sol = solve(matrix, s3.omega.to_vector(r0))
    assert sol is not None
    # and the copy of cbrt2 inside the fixed field satisfies x^3 - 2
    inside = RatPoly(sol)
    assert nf.reduce(nf.mul(nf.mul(inside, inside), inside) - RatPoly([2])).is_zero()


def test_fixed_field_degree_equals_index(s3):
    from composita.perm import all_subgroups
    for h in all_subgroups(s3.ambient):
        nf, _ = s3.fixed_field(h)
        assert nf.degree == index(s3.ambient, h)


def test_fixed_field_of_intersection_contains_both(s3):
    h1 = subgroup_closure([Permutation((0, 2, 1))])
    h2 = subgroup_closure([Permutation((2, 1, 0))])
    from composita.perm import intersect
    both = intersect(h1, h2)
    for h in (h1, h2):
        emb = s3.inclusion(h, both)   # Fix(h) embeds in Fix(h1 cap h2)
        assert emb.domain.degree == index(s3.ambient, h)


# --- oracle ------------------------------------------------------------------------

def test_oracle_identity_pair(cyc4):
    system = sweep_system(cyc4)
    node = system.nodes[0]
    ident = identity_compositum(node)
    report = oracle_check(cyc4, ident, ident)
    assert len(report.entries) == 1
    e = report.entries[0]
    assert e.output_class == ident
    assert e.weighted_multiplicity == 1


def test_oracle_complex_conjugation_squared(cyc4):
    # the first-example fixture: one node C (trivial subgroup), conjugation
    a = cyc4.ctx.node("C", Subgroup.trivial(2))
    conj = make_compositum(cyc4.ctx, a, a, Permutation((1, 0)))
    report = oracle_check(cyc4, conj, conj)
    assert len(report.entries) == 1
    e = report.entries[0]
    assert e.summand_degree == 2          # the summand is Q(i) itself
    assert e.output_class == identity_compositum(a)
    assert e.weighted_multiplicity == 1   # A (x) A == I, multiplicity one


def test_oracle_cbrt2_tensor_has_degrees_3_and_6(s3):
    full = s3.ctx.node("Q", s3.ambient)
    sub = s3.ctx.node("K", subgroup_closure([Permutation((0, 2, 1))]))
    e = Permutation.identity(3)
    v = make_compositum(s3.ctx, sub, full, e)
    w = make_compositum(s3.ctx, full, sub, e)
    report = oracle_check(s3, v, w)
    assert report.algebra_dim == 9
    assert report.degree_multiset() == [3, 6]
    assert report.radical == 0


def test_oracle_self_fusion_over_cbrt2(s3):
    # one-node system: k_V = Omega over Q(cbrt2); the 12-dimensional tensor
    # splits into two sextic summands, classes I (weight 2) and V (weight 1).
    sub = s3.ctx.node("K", subgroup_closure([Permutation((0, 2, 1))]))
    v = make_compositum(s3.ctx, sub, sub, Permutation((1, 2, 0)))
    report = oracle_check(s3, v, v)
    assert report.algebra_dim == 12
    assert report.degree_multiset() == [6, 6]
    mults = sorted(m for _, m in report.fuse_summands)
    assert mults == [1, 2]


def test_oracle_rejects_non_composable(cyc4):
    a = cyc4.ctx.node("A", Subgroup.trivial(2))
    b = cyc4.ctx.node("B", cyc4.ambient)
    v = identity_compositum(a)
    w = identity_compositum(b)
    with pytest.raises(ValueError):
        oracle_check(cyc4, v, w)


# --- realization documents ------------------------------------------------------

def test_realization_document_roundtrip(s3):
    doc = realization_to_document(s3)
    loaded = load_realization(doc)
    assert loaded.omega.min_poly == s3.omega.min_poly
    assert loaded.ambient.elements == s3.ambient.elements
    assert loaded.auto_images == s3.auto_images


def test_load_realization_rejects_bad_documents(s3):
    doc = realization_to_document(s3)
    broken = dict(doc)
    broken["automorphisms"] = doc["automorphisms"][:-1]
    with pytest.raises(DocumentError):
        load_realization(broken)
    tampered = dict(doc)
    tampered["automorphisms"] = [list(doc["automorphisms"][0])
                                 for _ in doc["automorphisms"]]
    with pytest.raises(DocumentError):
        load_realization(tampered)


def test_realize_context_errors():
    with pytest.raises(ValueError):
        realize_context("unknown")
    with pytest.raises(ValueError):
        realize_context("cyclotomic", 99)
    with pytest.raises(ValueError):
        realize_context("cyclotomic")
