"""Concrete realizations: explicit Galois fields for ambient groups, fixed
fields, and the cross-check between double cosets and tensor decompositions.

A realized context carries a big field (one number field Omega, Galois over
the rationals), its automorphisms as generator-image polynomials, and the
bijection between those automorphisms and the ambient permutation group.
Two built-ins: the cyclotomic family (abelian) and the splitting field of
x^3 - 2 (nonabelian, ambient S3 on the three roots).

oracle_check is the point of the module: for a composable pair it builds
the positioned fixed fields, forms their exact tensor algebra, decomposes
it, and verifies summand counts, degrees, idempotent evaluations, and the
compositum classes against the double-coset prediction.  Everything is an
exact identity; any disagreement raises with a full report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .closure import CompositumSystem
from .errors import (DocumentError, ModelInvariantError, OracleMismatchError)
from .fusion import FuseRecord, coset_multiplicity, fuse, fuse_cosets
from .galois import Compositum, FieldNode, GaloisContext
from .linalg import (in_row_space, matmul, matvec, nullspace, rref,
                     same_row_space, solve)
from .numfield import (EtaleSummand, FieldEmbedding, NumberField,
                       decompose_etale, field_as_algebra, min_poly_of_element,
                       radical_dim, tensor_over)
from .perm import (ElementSet, Permutation, Subgroup, all_subgroups, compose,
                   conjugate, decompose_into_double_cosets, intersect,
                   subgroup_closure)
from .ratpoly import RatPoly

DEFAULT_SEED = 1729
CYCLOTOMIC_MAX_N = 30


def small_generating_set(g: Subgroup) -> list[Permutation]:
    gens: list[Permutation] = []
    have = Subgroup.trivial(g.degree)
    for x in g.elements:
        if x not in have:
            gens.append(x)
            have = subgroup_closure(gens, degree=g.degree, max_order=g.order)
            if have.order == g.order:
                break
    return gens


class RealizedContext:
    """An ambient permutation group realized as Gal(Omega/Q).

    ``seed`` drives every randomized retry (primitive elements); the
    ``factor_cap`` bounds the degree the factorization engine will accept.
    Both default to the package-wide constants and exist so batch runs can
    pin them from the command line.
    """

    def __init__(self, name: str, ambient: Subgroup,
                 omega: NumberField, auto_images: dict, verify: bool = True,
                 seed: int = DEFAULT_SEED, factor_cap: int | None = None):
        self.name = name
        self.omega = omega
        self.seed = seed
        self.factor_cap = factor_cap
        self.auto_images = {p: img % omega.min_poly
                            for p, img in auto_images.items()}
        self.ctx = GaloisContext(ambient, label=name, realization=self)
        self._matrices: dict = {}
        self._omega_algebra = None
        self._fixed_cache: dict = {}
        self._inclusion_cache: dict = {}
        self._tensor_cache: dict = {}
        self._span_cache: dict = {}
        self._subspace_cache: dict = {}
        if verify:
            self._verify()

    @property
    def ambient(self) -> Subgroup:
        return self.ctx.ambient

    # --- automorphism machinery ------------------------------------------

    def auto_matrix(self, p: Permutation):
        m = self._matrices.get(p)
        if m is None:
            img = self.auto_images[p]
            cols = []
            power = RatPoly.one()
            d = self.omega.degree
            for _ in range(d):
                cols.append(self.omega.to_vector(power))
                power = self.omega.mul(power, img)
            m = [[cols[j][i] for j in range(d)] for i in range(d)]
            self._matrices[p] = m
        return m

    def apply_auto(self, p: Permutation, e: RatPoly) -> RatPoly:
        vec = matvec(self.auto_matrix(p), self.omega.to_vector(e))
        return RatPoly(vec)

    def omega_algebra(self):
        if self._omega_algebra is None:
            self._omega_algebra = field_as_algebra(self.omega)
        return self._omega_algebra

    def _verify(self):
        g = self.ambient
        if set(self.auto_images) != set(g.elements):
            raise DocumentError("automorphism table does not match the group")
        if len({img.coeffs for img in self.auto_images.values()}) != g.order:
            raise DocumentError("automorphism images are not distinct")
        ident = Permutation.identity(g.degree)
        if self.auto_images[ident] != RatPoly.x() % self.omega.min_poly:
            raise DocumentError("identity element must act as the identity")
        for p, img in self.auto_images.items():
            val = self.omega.min_poly.compose_mod(img, self.omega.min_poly)
            if not val.is_zero():
                raise DocumentError(
                    f"image for {list(p.images)} does not satisfy the minimal "
                    "polynomial")
        # homomorphism property: S_(gh) == S_g S_h for generators g and all
        # h, which propagates to all products.
        gens = small_generating_set(g)
        for a in gens:
            sa = self.auto_matrix(a)
            for b in g.elements:
                left = self.auto_matrix(compose(a, b))
                right = matmul(sa, self.auto_matrix(b))
                if left != right:
                    raise DocumentError(
                        "automorphism table is not a homomorphism at "
                        f"{list(a.images)} * {list(b.images)}")

    # --- fixed fields -----------------------------------------------------

    def fixed_field(self, h: Subgroup, seed: int | None = None,
                    max_retries: int = 32
                    ) -> tuple[NumberField, FieldEmbedding]:
        """The subfield of Omega fixed by h, with its embedding.

        Exact linear algebra on the h-action gives the fixed subspace; a
        primitive element is extracted deterministically (basis vectors
        first, then seeded small combinations).
        """
        key = h.elements
        hit = self._fixed_cache.get(key)
        if hit is not None:
            return hit
        g = self.ambient
        d = self.omega.degree
        expected = g.order // h.order
        if h.order == 1:
            result = (self.omega, FieldEmbedding.identity(self.omega))
            self._fixed_cache[key] = result
            return result
        rows = []
        for p in small_generating_set(h):
            m = self.auto_matrix(p)
            for i in range(d):
                rows.append([m[i][j] - (1 if i == j else 0) for j in range(d)])
        basis = nullspace(rows, n_cols=d)
        if len(basis) != expected:
            raise ModelInvariantError(
                f"fixed subspace has dimension {len(basis)}, expected "
                f"{expected}; the realization is not the full Galois group")
        alg = self.omega_algebra()
        rng = random.Random(self.seed if seed is None else seed)
        candidates = list(basis)
        theta = None
        for attempt in range(max_retries):
            if attempt < len(candidates):
                vec = candidates[attempt]
            else:
                vec = [sum((Fraction(rng.randint(-3, 3)) * b[i] for b in basis),
                           Fraction(0)) for i in range(d)]
            mp = min_poly_of_element(alg, tuple(vec))
            if mp.degree == expected:
                theta = vec
                break
        if theta is None:
            raise ModelInvariantError(
                f"no primitive element for the fixed field in {max_retries} tries")
        nf = NumberField(mp, name="u")
        emb = FieldEmbedding(nf, self.omega, RatPoly(theta))
        result = (nf, emb)
        self._fixed_cache[key] = result
        return result

    def inclusion(self, sub: Subgroup, sup: Subgroup) -> FieldEmbedding:
        """Embedding Fix(sub-group-of-larger) <- Fix(larger): the inclusion
        of fixed fields for sup <= sub (bigger group, smaller field)."""
        key = (sub.elements, sup.elements)
        hit = self._inclusion_cache.get(key)
        if hit is not None:
            return hit
        if not sup.is_subgroup_of(sub):
            raise ValueError("inclusion needs the codomain group inside the "
                             "domain group")
        small_nf, small_emb = self.fixed_field(sub)   # smaller field
        big_nf, big_emb = self.fixed_field(sup)       # bigger field
        d = self.omega.degree
        cols = []
        power = RatPoly.one()
        for _ in range(big_nf.degree):
            cols.append(self.omega.to_vector(power))
            power = self.omega.mul(power, big_emb.image)
        matrix = [[cols[j][i] for j in range(big_nf.degree)] for i in range(d)]
        sol = solve(matrix, self.omega.to_vector(small_emb.image))
        if sol is None:
            raise ModelInvariantError("fixed field failed to embed in the "
                                      "larger fixed field")
        emb = FieldEmbedding(small_nf, big_nf, RatPoly(sol))
        self._inclusion_cache[key] = emb
        return emb

    # --- tensor decompositions (cached per subgroup triple) ----------------

    def tensor_decomposition(self, b: Subgroup, u: Subgroup,
                             w: Subgroup) -> "TensorDecomposition":
        key = (b.elements, u.elements, w.elements)
        hit = self._tensor_cache.get(key)
        if hit is None:
            hit = TensorDecomposition.build(self, b, u, w)
            self._tensor_cache[key] = hit
        return hit

    def __repr__(self):
        return (f"RealizedContext({self.name!r}, |G|={self.ambient.order}, "
                f"[Omega:Q]={self.omega.degree})")


@dataclass(frozen=True)
class TensorDecomposition:
    """The concrete side of one fusion: Fix(u) (x)_{Fix(b)} Fix(w) for
    u, w <= b, decomposed, with each summand tied to its double coset by
    evaluating the idempotents under the coset homomorphism to Omega."""

    b: Subgroup
    u: Subgroup
    w: Subgroup
    algebra: object
    summands: tuple[EtaleSummand, ...]
    coset_reps: tuple[Permutation, ...]
    summand_of_coset: dict            # rep -> index into summands
    predicted_degree: dict            # rep -> [G : u cap g w g^-1]
    radical: int

    @classmethod
    def build(cls, rctx: RealizedContext, b: Subgroup, u: Subgroup,
              w: Subgroup) -> "TensorDecomposition":
        g_order = rctx.ambient.order
        kb_nf, kb_emb = rctx.fixed_field(b)
        kv_nf, kv_emb = rctx.fixed_field(u)
        kw_nf, kw_emb = rctx.fixed_field(w)
        ev = rctx.inclusion(b, u)
        ew = rctx.inclusion(b, w)
        algebra = tensor_over(kv_nf, ev, kw_nf, ew)
        summands = tuple(decompose_etale(algebra, seed=rctx.seed,
                                         factor_cap=rctx.factor_cap))
        reps = tuple(decompose_into_double_cosets(
            ElementSet(b.degree, b.elements), u, w))
        detail = {
            "dims": (kv_nf.degree, kw_nf.degree, kb_nf.degree, algebra.dim),
            "summand_degrees": sorted(s.degree for s in summands),
            "coset_count": len(reps),
        }
        if len(summands) != len(reps):
            raise OracleMismatchError(
                f"summand count {len(summands)} != double coset count "
                f"{len(reps)}", report=detail)
        expected_dim = (kv_nf.degree * kw_nf.degree) // kb_nf.degree
        if algebra.dim != expected_dim:
            raise OracleMismatchError("tensor dimension law failed", report=detail)
        if sum(s.degree for s in summands) != algebra.dim:
            raise OracleMismatchError("summand degrees do not fill the algebra",
                                      report=detail)

        # tie cosets to summands through the homomorphisms psi_g
        tags = algebra.basis_tags
        theta_v = kv_emb.image
        summand_of_coset = {}
        predicted = {}
        taken = set()
        for g in reps:
            img_w = rctx.apply_auto(g, kw_emb.image)
            basis_images = []
            for (j, s) in tags:
                val = rctx.omega.mul(rctx.omega.pow(theta_v, j),
                                     rctx.omega.pow(img_w, s))
                basis_images.append(val)
            hits = []
            for idx, summand in enumerate(summands):
                total = RatPoly.zero()
                for coord, img in zip(summand.idempotent, basis_images):
                    if coord:
                        total = total + img.scale(coord)
                total = rctx.omega.reduce(total)
                if total == RatPoly.one():
                    hits.append(idx)
                elif not total.is_zero():
                    raise OracleMismatchError(
                        "idempotent evaluated to a non-idempotent value under "
                        "a coset homomorphism", report=detail)
            if len(hits) != 1:
                raise OracleMismatchError(
                    f"coset hit {len(hits)} summands instead of one",
                    report=detail)
            idx = hits[0]
            if idx in taken:
                raise OracleMismatchError(
                    "two cosets landed on the same summand", report=detail)
            taken.add(idx)
            summand_of_coset[g] = idx
            pred = g_order // intersect(u, conjugate(w, g)).order
            predicted[g] = pred
            if summands[idx].degree != pred:
                raise OracleMismatchError(
                    f"summand degree {summands[idx].degree} != predicted {pred}",
                    report=detail)
        return cls(b=b, u=u, w=w, algebra=algebra, summands=summands,
                   coset_reps=reps, summand_of_coset=summand_of_coset,
                   predicted_degree=predicted, radical=radical_dim(algebra))


# --- built-in realizations ----------------------------------------------------


def cyclotomic_poly(n: int) -> RatPoly:
    """The n-th cyclotomic polynomial by exact recursive division."""
    if n == 1:
        return RatPoly([-1, 1])
    num = RatPoly([-1] + [0] * (n - 1) + [1])      # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = divmod(num, cyclotomic_poly(d))
            if not r.is_zero():
                raise ArithmeticError("cyclotomic division left a remainder")
            num = q
    return num


def realize_cyclotomic(n: int) -> RealizedContext:
    """Omega = Q(zeta_n); the ambient group is the unit group mod n acting
    on the sorted list of exponent residues."""
    if not 1 <= n <= CYCLOTOMIC_MAX_N:
        raise ValueError(f"cyclotomic realization needs 1 <= n <= {CYCLOTOMIC_MAX_N}")
    units = [u for u in range(1, max(n, 2)) if gcd(u, n) == 1] or [1]
    position = {u: i for i, u in enumerate(units)}
    phi = cyclotomic_poly(n)
    omega = NumberField(phi, name="z")
    auto_images = {}
    perms = []
    for u in units:
        images = tuple(position[(u * v) % n if n > 1 else 1] for v in units)
        p = Permutation(images)
        perms.append(p)
        auto_images[p] = RatPoly.monomial(u) % phi if n > 1 else RatPoly.one() % phi
    ambient = Subgroup.from_elements(perms)
    return RealizedContext(f"cyclotomic-{n}", ambient, omega, auto_images)


class _Tower:
    """Scratch arithmetic in Q[c, w]/(c^3 - 2, w^2 + c w + c^2): the
    splitting field of x^3 - 2 with roots c, w, -c-w."""

    DIM = 6  # basis c^i w^j, i < 3, j < 2, index = i + 3 j

    def mul_basis(self, i1, j1, i2, j2):
        """Product of two basis monomials as a coordinate vector."""
        out = [Fraction(0)] * self.DIM
        for (i, j, coeff) in self._reduce(i1 + i2, j1 + j2, Fraction(1)):
            out[i + 3 * j] += coeff
        return out

    def _reduce(self, i, j, coeff):
        if j >= 2:
            # w^2 = -c w - c^2
            for term in self._reduce(i + 1, j - 1, -coeff):
                yield term
            for term in self._reduce(i + 2, j - 2, -coeff):
                yield term
            return
        while i >= 3:
            i -= 3
            coeff = coeff * 2
        yield (i, j, coeff)

    def algebra(self):
        table = []
        for idx1 in range(self.DIM):
            row = []
            i1, j1 = idx1 % 3, idx1 // 3
            for idx2 in range(self.DIM):
                i2, j2 = idx2 % 3, idx2 // 3
                row.append(tuple(self.mul_basis(i1, j1, i2, j2)))
            table.append(row)
        one = [Fraction(0)] * self.DIM
        one[0] = Fraction(1)
        from .numfield import EtaleAlgebra
        return EtaleAlgebra(table, one, provenance="splitting field of x^3-2")

    @staticmethod
    def vector(pairs) -> tuple:
        out = [Fraction(0)] * _Tower.DIM
        for (i, j, coeff) in pairs:
            out[i + 3 * j] += Fraction(coeff)
        return tuple(out)


def realize_s3_x3m2() -> RealizedContext:
    """The splitting field of x^3 - 2, ambient S3 on the three roots.

    Built constructively: tower arithmetic gives the three roots, a
    primitive element is found by a deterministic search, and each root
    permutation becomes a generator-image polynomial by exact linear
    algebra.  All six automorphisms exist because any two distinct roots
    r, s satisfy r^2 + r s + s^2 = 0.
    """
    tower = _Tower()
    alg = tower.algebra()
    c = _Tower.vector([(1, 0, 1)])
    w = _Tower.vector([(0, 1, 1)])
    minus_cw = tuple(-a - b for a, b in zip(c, w))
    roots = [c, w, minus_cw]
    two = alg.scalar(2)
    for r in roots:
        if alg.mul(alg.mul(r, r), r) != two:
            raise ModelInvariantError("a root fails r^3 == 2")

    theta = None
    mp = None
    for (x, y) in [(1, 1), (1, -1), (1, 2), (2, 1), (1, -2)]:
        cand = tuple(Fraction(x) * a + Fraction(y) * b for a, b in zip(c, w))
        candidate_mp = min_poly_of_element(alg, cand)
        if candidate_mp.degree == 6:
            theta, mp = cand, candidate_mp
            break
    if theta is None:
        raise ModelInvariantError("no primitive element for the sextic field")
    omega = NumberField(mp, name="t")

    # basis change: columns are theta^k in tower coordinates
    powers = [alg.one]
    for _ in range(5):
        powers.append(alg.mul(powers[-1], theta))
    change = [[powers[k][i] for k in range(6)] for i in range(6)]

    def in_theta_basis(vec) -> RatPoly:
        sol = solve(change, list(vec))
        if sol is None:
            raise ModelInvariantError("element escaped the theta power basis")
        return RatPoly(sol)

    # each permutation p of the roots sends c -> roots[p(0)], w -> roots[p(1)];
    # theta maps to the same coordinate combination of the mapped monomials.
    auto_images = {}
    perms = []
    for images in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]:
        p = Permutation(images)
        rc, rw = roots[p(0)], roots[p(1)]
        rc_pows = [alg.one, rc, alg.mul(rc, rc)]
        rw_pows = [alg.one, rw]
        image_theta = [Fraction(0)] * 6
        for idx in range(6):
            coeff = theta[idx]
            if coeff == 0:
                continue
            i, j = idx % 3, idx // 3
            mapped = alg.mul(rc_pows[i], rw_pows[j])
            image_theta = [a + coeff * b for a, b in zip(image_theta, mapped)]
        perms.append(p)
        auto_images[p] = in_theta_basis(image_theta)
    ambient = Subgroup.from_elements(perms)
    rctx = RealizedContext("s3_x3m2", ambient, omega, auto_images)
    # stash the root coordinates (in the theta basis) for documents/tests
    rctx.root_images = [in_theta_basis(r) for r in roots]
    return rctx


def realize_context(name: str, n: int | None = None) -> RealizedContext:
    """Built-in realizations: ("cyclotomic", n) or "s3_x3m2"."""
    if name == "cyclotomic":
        if n is None:
            raise ValueError("the cyclotomic realization needs n")
        return realize_cyclotomic(n)
    if name == "s3_x3m2":
        return realize_s3_x3m2()
    raise ValueError(f"unsupported realization {name!r}")


def fixed_field(rctx: RealizedContext, h: Subgroup,
                seed: int = DEFAULT_SEED) -> tuple[NumberField, FieldEmbedding]:
    return rctx.fixed_field(h, seed=seed)


# --- the oracle -----------------------------------------------------------------


@dataclass(frozen=True)
class OracleEntry:
    coset_rep: Permutation
    summand_degree: int
    predicted_degree: int
    output_class: Compositum
    weighted_multiplicity: int


@dataclass(frozen=True)
class OracleReport:
    pair: tuple
    algebra_dim: int
    radical: int
    entries: tuple[OracleEntry, ...]
    fuse_summands: tuple
    ok: bool = True

    def degree_multiset(self):
        return sorted(e.summand_degree for e in self.entries)


def oracle_check(rctx: RealizedContext, v: Compositum,
                 w: Compositum) -> OracleReport:
    """Cross-validate one composable pair against the concrete tensor.

    Raises OracleMismatchError on any disagreement between the double-coset
    model and the exact number-field computation.
    """
    if v.target != w.source:
        raise ValueError("oracle_check needs a composable pair")
    g_order = rctx.ambient.order
    b = v.target.group
    u = conjugate(v.group, v.rep.inverse())
    td = rctx.tensor_decomposition(b, u, w.group)
    records = fuse_cosets(v, w)
    if tuple(r.coset_rep for r in records) != td.coset_reps:
        raise OracleMismatchError("coset decompositions disagree")
    if td.radical != 0:
        raise OracleMismatchError("tensor algebra is not semisimple",
                                  report=td)

    theta_a = rctx.fixed_field(v.source.group)[1].image
    theta_c = rctx.fixed_field(w.target.group)[1].image
    v_inv = v.rep.inverse()
    entries = []
    for rec in records:
        g = rec.coset_rep
        summand = td.summands[td.summand_of_coset[g]]
        pred = td.predicted_degree[g]
        if summand.degree != pred:
            raise OracleMismatchError("per-coset degree mismatch", report=td)
        # the class of the summand: the subfield of Omega generated by the
        # images of the two end fields must be exactly the fixed field of
        # the positioned class group.
        x = rctx.apply_auto(v_inv, theta_a)
        y = rctx.apply_auto(compose(g, w.rep), theta_c)
        span = _generated_subfield_span(rctx, x, y)
        stab = intersect(conjugate(v.source.group, v_inv),
                         conjugate(w.target.group, compose(g, w.rep)))
        expected_dim = g_order // stab.order
        if len(span) != expected_dim:
            raise OracleMismatchError(
                f"generated subfield has dimension {len(span)}, expected "
                f"{expected_dim}", report=td)
        if rec.output.group.order != stab.order:
            raise OracleMismatchError("class group order mismatch", report=td)
        fixed_rows = _fixed_subspace(rctx, stab)
        if not same_row_space(span, fixed_rows):
            raise OracleMismatchError(
                "generated subfield is not the fixed field of the class group",
                report=td)
        entries.append(OracleEntry(
            coset_rep=g, summand_degree=summand.degree,
            predicted_degree=pred, output_class=rec.output,
            weighted_multiplicity=coset_multiplicity(rec)))

    # class-level multiplicities: regroup entries and compare against fuse
    from .fusion import SimpleOneMorphism
    fused = fuse(SimpleOneMorphism(v), SimpleOneMorphism(w))
    regroup: dict[Compositum, int] = {}
    counts: dict[Compositum, int] = {}
    for e in entries:
        regroup[e.output_class] = (regroup.get(e.output_class, 0)
                                   + e.weighted_multiplicity)
        counts[e.output_class] = counts.get(e.output_class, 0) + 1
    fused_dict = {s.compositum: m for s, m in fused.summands}
    if fused_dict != regroup:
        raise OracleMismatchError("fusion multiplicities disagree with the "
                                  "tensor decomposition", report=td)
    # weighted dimension accounting over the base field of the realization
    total = sum(m * (g_order // x.group.order) for x, m in fused_dict.items())
    if total != td.algebra.dim:
        raise OracleMismatchError("dimension accounting failed", report=td)
    # concrete summand count per class equals the coset count per class
    for x, m in counts.items():
        got = sum(1 for e in entries if e.output_class == x)
        if got != m:
            raise OracleMismatchError("per-class summand count mismatch",
                                      report=td)
    return OracleReport(
        pair=(v.key(), w.key()), algebra_dim=td.algebra.dim,
        radical=td.radical, entries=tuple(entries),
        fuse_summands=tuple((s.compositum.key(), m) for s, m in fused.summands))


def _fixed_subspace(rctx: RealizedContext, h: Subgroup):
    hit = rctx._subspace_cache.get(h.elements)
    if hit is not None:
        return hit
    d = rctx.omega.degree
    if h.order == 1:
        rows = [[Fraction(1 if i == j else 0) for j in range(d)]
                for i in range(d)]
    else:
        stack = []
        for p in small_generating_set(h):
            m = rctx.auto_matrix(p)
            for i in range(d):
                stack.append([m[i][j] - (1 if i == j else 0) for j in range(d)])
        rows = nullspace(stack, n_cols=d)
    rctx._subspace_cache[h.elements] = rows
    return rows


def _generated_subfield_span(rctx: RealizedContext, x: RatPoly, y: RatPoly):
    """Basis (rref rows) of the subalgebra of Omega generated by x and y."""
    key = (x.coeffs, y.coeffs)
    hit = rctx._span_cache.get(key)
    if hit is not None:
        return hit
    omega = rctx.omega
    basis = [omega.to_vector(RatPoly.one())]
    elements = [RatPoly.one()]
    reduced, pivots = rref(basis)
    changed = True
    while changed:
        changed = False
        for e in list(elements):
            for gen in (x, y):
                cand = omega.mul(e, gen)
                vec = omega.to_vector(cand)
                if not in_row_space(reduced, pivots, vec):
                    elements.append(cand)
                    basis.append(list(vec))
                    reduced, pivots = rref(basis)
                    changed = True
    span = [row for row in reduced if any(c != 0 for c in row)]
    rctx._span_cache[key] = span
    return span


# --- sweeping ------------------------------------------------------------------


def sweep_system(rctx: RealizedContext) -> CompositumSystem:
    """The full closed system over every subgroup of the ambient group,
    with every double coset as a compositum."""
    from .galois import composita_between
    subs = all_subgroups(rctx.ambient)
    nodes = [rctx.ctx.node(f"N{i:02d}", s) for i, s in enumerate(subs)]
    comps = []
    for a in nodes:
        for b in nodes:
            comps.extend(composita_between(rctx.ctx, a, b))
    system = CompositumSystem(
        rctx.ctx, tuple(sorted(nodes)), tuple(sorted(comps)), closed=True,
        derivations={c: ("input",) for c in comps})
    return system


def oracle_sweep(rctx: RealizedContext) -> list[OracleReport]:
    """oracle_check over every composable pair of the full sweep system.

    Raises on the first mismatch; returns all reports otherwise.
    """
    system = sweep_system(rctx)
    reports = []
    for v in system.composita:
        for w in system.composita:
            if v.target != w.source:
                continue
            reports.append(oracle_check(rctx, v, w))
    return reports


# --- realization documents ---------------------------------------------------


def realization_to_document(rctx: RealizedContext) -> dict:
    elems = list(rctx.ambient.elements)
    return {
        "name": rctx.name,
        "min_poly": rctx.omega.min_poly.to_json(),
        "root_action": [list(p.images) for p in elems],
        "automorphisms": [rctx.auto_images[p].to_json() for p in elems],
    }


def load_realization(doc: dict) -> RealizedContext:
    try:
        name = doc.get("name", "custom")
        min_poly = RatPoly.from_json(doc["min_poly"])
        perms = [Permutation(tuple(img)) for img in doc["root_action"]]
        images = [RatPoly.from_json(c) for c in doc["automorphisms"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad realization document: {exc}") from exc
    if len(perms) != len(images):
        raise DocumentError("root_action and automorphisms differ in length")
    try:
        omega = NumberField(min_poly, name="t")
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    ambient = Subgroup.from_elements(perms)
    if ambient.order != len(perms):
        raise DocumentError("root_action contains duplicate permutations")
    return RealizedContext(name, ambient, omega,
                           dict(zip(perms, images)))
