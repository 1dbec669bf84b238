"""Exact number fields, embeddings, and commutative algebras over the
rationals.

A number field is a monic irreducible rational polynomial; its elements
are polynomials in the generator reduced mod that minimal polynomial.  A
finite-dimensional commutative algebra is a basis plus exact structure
constants.  Tensor products of fields over a common subfield are built as
quotient algebras and decomposed into field summands through a primitive
element, its factored minimal polynomial, and CRT idempotents.  No
floating point anywhere; every verification is an exact identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EmbeddingError, ModelInvariantError, SemisimplicityError
from .intfactor import factor_int_poly, is_irreducible
from .linalg import matvec, nullspace, rref, solve
from .ratpoly import RatPoly, poly_gcdex

Vector = tuple[Fraction, ...]


class NumberField:
    """The field Q[x]/(min_poly); elements are RatPoly of degree < n."""

    __slots__ = ("min_poly", "name", "degree")

    def __init__(self, min_poly: RatPoly, name: str = "a", check: bool = True):
        if not min_poly.is_monic() or min_poly.degree < 1:
            raise ValueError("a number field needs a monic minimal polynomial "
                             "of positive degree")
        if check and not is_irreducible(min_poly):
            raise ValueError(f"minimal polynomial is reducible: {min_poly}")
        object.__setattr__(self, "min_poly", min_poly)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "degree", min_poly.degree)

    def __setattr__(self, key, value):
        raise AttributeError("NumberField is immutable")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    # elements are RatPoly values of degree < self.degree
    def gen(self) -> RatPoly:
        return RatPoly.x() % self.min_poly

    def one(self) -> RatPoly:
        return RatPoly.one()

    def reduce(self, e: RatPoly) -> RatPoly:
        return e % self.min_poly

    def mul(self, a: RatPoly, b: RatPoly) -> RatPoly:
        return (a * b) % self.min_poly

    def inv(self, a: RatPoly) -> RatPoly:
        g, s, _ = poly_gcdex(a % self.min_poly, self.min_poly)
        if g != RatPoly.one():
            raise ZeroDivisionError("inverse of zero in a number field")
        return s % self.min_poly

    def pow(self, a: RatPoly, k: int) -> RatPoly:
        out, base = RatPoly.one(), a % self.min_poly
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def to_vector(self, e: RatPoly) -> Vector:
        e = e % self.min_poly
        return tuple(e[i] for i in range(self.degree))

    def from_vector(self, v) -> RatPoly:
        return RatPoly(v)

    def __repr__(self):
        return f"NumberField({self.name}: {self.min_poly})"


RATIONALS = NumberField(RatPoly([-1, 1]), name="one", check=False)


@dataclass(frozen=True)
class FieldEmbedding:
    """domain -> codomain, determined by the image of the domain generator.

    The defining relation min_poly_domain(image) == 0 in the codomain is
    verified at construction.
    """

    domain: NumberField
    codomain: NumberField
    image: RatPoly

    def __post_init__(self):
        img = self.image % self.codomain.min_poly
        object.__setattr__(self, "image", img)
        val = self.domain.min_poly.compose_mod(img, self.codomain.min_poly)
        if not val.is_zero():
            raise EmbeddingError(
                "generator image does not satisfy the domain minimal polynomial")

    def apply(self, e: RatPoly) -> RatPoly:
        return e.compose_mod(self.image, self.codomain.min_poly)

    @classmethod
    def identity(cls, k: NumberField) -> "FieldEmbedding":
        return cls(k, k, RatPoly.x() % k.min_poly)


def relative_min_poly(top: NumberField, sub: NumberField,
                      sub_image: RatPoly) -> list[RatPoly]:
    """Minimal polynomial of top's generator over the embedded subfield.

    ``sub_image`` positions sub inside top.  Returns the monic coefficient
    list (constant first) with entries expressed as elements of ``sub``.
    """
    if top.degree % sub.degree:
        raise ValueError("subfield degree does not divide the field degree")
    r = top.degree // sub.degree
    emb = FieldEmbedding(sub, top, sub_image)
    gen = top.gen()
    # columns: s^i * g^j for j < r, i < sub.degree, each a top-vector
    cols = []
    s_powers = [top.pow(emb.image, i) for i in range(sub.degree)]
    g_powers = [top.pow(gen, j) for j in range(r + 1)]
    for j in range(r):
        for i in range(sub.degree):
            cols.append(top.to_vector(top.mul(s_powers[i], g_powers[j])))
    matrix = [[cols[c][k] for c in range(len(cols))] for k in range(top.degree)]
    sol = solve(matrix, top.to_vector(g_powers[r]))
    if sol is None:
        raise ModelInvariantError("generator powers failed to span over the subfield")
    coeffs = []
    for j in range(r):
        piece = RatPoly(sol[j * sub.degree:(j + 1) * sub.degree])
        coeffs.append(-piece)           # m(y) = y^r - sum c_j y^j
    coeffs.append(RatPoly.one())
    return coeffs


class EtaleAlgebra:
    """A finite-dimensional commutative unital Q-algebra by structure
    constants: table[i][j] is the coordinate vector of b_i * b_j.

    The name states the intent; whether an instance actually has zero
    radical is measured by radical_dim and enforced where the contract
    requires it.
    """

    __slots__ = ("dim", "table", "one", "provenance", "basis_tags",
                 "_basis_traces")

    def __init__(self, table, one, provenance: str = "",
                 basis_tags: tuple | None = None):
        dim = len(table)
        tbl = tuple(tuple(tuple(Fraction(x) for x in vec) for vec in row)
                    for row in table)
        unit = tuple(Fraction(x) for x in one)
        if any(len(row) != dim for row in tbl) or len(unit) != dim:
            raise ValueError("structure constant table has inconsistent shape")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "table", tbl)
        object.__setattr__(self, "one", unit)
        object.__setattr__(self, "provenance", provenance)
        object.__setattr__(self, "basis_tags", basis_tags)
        object.__setattr__(self, "_basis_traces", None)
        for i in range(dim):
            for j in range(i + 1, dim):
                if tbl[i][j] != tbl[j][i]:
                    raise ValueError(f"multiplication not commutative at ({i},{j})")
        for j in range(dim):
            if self.mul(unit, self.basis_vector(j)) != self.basis_vector(j):
                raise ValueError(f"unit fails on basis element {j}")

    def __setattr__(self, key, value):
        raise AttributeError("EtaleAlgebra is immutable")

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1 if k == i else 0) for k in range(self.dim))

    def scalar(self, c) -> Vector:
        c = Fraction(c)
        return tuple(c * x for x in self.one)

    def mul(self, u, v) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = a * b
                vec = self.table[i][j]
                for k, t in enumerate(vec):
                    if t:
                        out[k] += ab * t
        return tuple(out)

    def mult_matrix(self, u) -> list[list[Fraction]]:
        """Matrix of multiplication by u (columns indexed by basis)."""
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j in range(self.dim):
                vec = self.table[i][j]
                for k, t in enumerate(vec):
                    if t:
                        m[k][j] += a * t
        return m

    def poly_eval(self, poly: RatPoly, u) -> Vector:
        """Evaluate a rational polynomial at the element u (Horner)."""
        m = self.mult_matrix(u)
        acc = [Fraction(0)] * self.dim
        for c in reversed(poly.coeffs):
            acc = matvec(m, acc)
            if c:
                acc = [x + c * o for x, o in zip(acc, self.one)]
        return tuple(acc)

    def basis_traces(self) -> list[Fraction]:
        cached = self._basis_traces
        if cached is None:
            cached = [sum((self.table[k][a][a] for a in range(self.dim)),
                          Fraction(0)) for k in range(self.dim)]
            object.__setattr__(self, "_basis_traces", cached)
        return cached

    def is_associative(self, triples=None) -> bool:
        """Exact associativity check on basis triples (all by default)."""
        rng = range(self.dim)
        if triples is None:
            triples = ((i, j, k) for i in rng for j in rng for k in rng)
        for i, j, k in triples:
            left = self.mul(self.table[i][j], self.basis_vector(k))
            right = self.mul(self.basis_vector(i), self.table[j][k])
            if left != right:
                return False
        return True

    def __repr__(self):
        return f"EtaleAlgebra(dim={self.dim}, provenance={self.provenance!r})"


def radical_dim(algebra: EtaleAlgebra) -> int:
    """Dimension of the nilradical: the kernel of the trace form.

    In characteristic zero the radical of a finite-dimensional commutative
    algebra is exactly the radical of its trace bilinear form, so an exact
    rank computation settles semisimplicity.
    """
    t = algebra.basis_traces()
    gram = [[sum((algebra.table[i][j][k] * t[k] for k in range(algebra.dim)
                  if algebra.table[i][j][k]), Fraction(0))
             for j in range(algebra.dim)] for i in range(algebra.dim)]
    return len(nullspace(gram, n_cols=algebra.dim))


def field_as_algebra(k: NumberField) -> EtaleAlgebra:
    """A number field as an algebra on the power basis of its generator."""
    powers = [k.pow(k.gen(), m) for m in range(2 * k.degree - 1)]
    table = [[k.to_vector(powers[i + j]) for j in range(k.degree)]
             for i in range(k.degree)]
    one = k.to_vector(k.one())
    return EtaleAlgebra(table, one, provenance=f"field {k.name}")


def tensor_over(kv: NumberField, ev: FieldEmbedding, kw: NumberField,
                ew: FieldEmbedding) -> EtaleAlgebra:
    """The tensor product kv (x)_{kb} kw as an explicit algebra.

    kb enters kv through ev and kw through ew; the result has dimension
    [kv:Q] [kw:Q] / [kb:Q] with basis y^j w^s, where y is kv's generator
    satisfying its relative minimal polynomial over kb, mapped into kw
    coefficients through ew.  Semisimplicity is asserted (characteristic
    zero, separable everywhere): a nonzero radical raises.
    """
    if ev.domain != ew.domain:
        raise ValueError("tensor factors do not share the base field")
    if ev.codomain != kv or ew.codomain != kw:
        raise ValueError("embeddings do not land in the tensor factors")
    kb = ev.domain
    rel = relative_min_poly(kv, kb, ev.image)
    r = len(rel) - 1
    m_w = [ew.apply(c) for c in rel]            # monic, coefficients in kw
    dw = kw.degree
    dim = r * dw

    w_powers = [kw.pow(kw.gen(), s) for s in range(2 * dw - 1)]

    # reductions of y^m for m in [r, 2r-2]: lists of kw coefficients
    reductions: dict[int, list[RatPoly]] = {}
    if r > 1:
        cur = [kw.mul(-m_w[j], RatPoly.one()) for j in range(r)]  # y^r
        reductions[r] = list(cur)
        for m in range(r + 1, 2 * r - 1):
            # multiply by y: shift, then reduce the overflow coefficient
            top = cur[-1]
            shifted = [RatPoly.zero()] + cur[:-1]
            cur = [shifted[j] + kw.mul(top, -m_w[j]) for j in range(r)]
            reductions[m] = list(cur)

    def emb_vec(j: int, coeff: RatPoly) -> list[Fraction]:
        """coeff * y^j as a coordinate vector."""
        out = [Fraction(0)] * dim
        for s in range(dw):
            out[j * dw + s] = coeff[s]
        return out

    table = [[None] * dim for _ in range(dim)]
    for j1 in range(r):
        for s1 in range(dw):
            for j2 in range(r):
                for s2 in range(dw):
                    ws = w_powers[s1 + s2]
                    m = j1 + j2
                    vec = [Fraction(0)] * dim
                    if m < r:
                        for s in range(dw):
                            vec[m * dw + s] = ws[s]
                    else:
                        for j, coeff in enumerate(reductions[m]):
                            prod = kw.mul(ws, coeff)
                            for s in range(dw):
                                vec[j * dw + s] += prod[s]
                    table[j1 * dw + s1][j2 * dw + s2] = tuple(vec)
    one = [Fraction(0)] * dim
    one[0] = Fraction(1)
    tags = tuple((j, s) for j in range(r) for s in range(dw))
    algebra = EtaleAlgebra(
        table, one, basis_tags=tags,
        provenance=f"tensor [{kv.degree}]x[{kw.degree}] over [{kb.degree}]")
    rad = radical_dim(algebra)
    if rad:
        raise SemisimplicityError(
            f"tensor algebra has radical of dimension {rad}")
    return algebra


def min_poly_of_element(algebra: EtaleAlgebra, u) -> RatPoly:
    """Monic minimal polynomial of u: first linear dependency of its powers."""
    m = algebra.mult_matrix(u)
    power = list(algebra.one)
    rows: list[list[Fraction]] = []   # augmented rref rows
    pivots: list[int] = []
    combos: list[list[Fraction]] = []
    k = 0
    while True:
        vec = [Fraction(x) for x in power]
        combo = [Fraction(1 if i == k else 0) for i in range(algebra.dim + 1)]
        for r_i, pc in enumerate(pivots):
            if vec[pc] != 0:
                f = vec[pc]
                vec = [a - f * b for a, b in zip(vec, rows[r_i])]
                combo = [a - f * b for a, b in zip(combo, combos[r_i])]
        nz = next((c for c in range(algebra.dim) if vec[c] != 0), None)
        if nz is None:
            # 0 == sum(combo[i] * power_i), so the monic minimal polynomial
            # is x^k + sum(combo[i]/combo[k] x^i) over i < k.
            lead = combo[k]
            coeffs = [combo[i] / lead for i in range(k)] + [Fraction(1)]
            return RatPoly(coeffs)
        inv = 1 / vec[nz]
        rows.append([x * inv for x in vec])
        combos.append([x * inv for x in combo])
        pivots.append(nz)
        power = matvec(m, power)
        k += 1


@dataclass(frozen=True)
class EtaleSummand:
    """One field summand of a decomposed algebra with its projection data."""

    summand: NumberField
    idempotent: Vector
    factor: RatPoly                  # monic irreducible factor of the
    # primitive element's minimal polynomial; the summand field is
    # Q[x]/(factor) with x the image of the primitive element.

    @property
    def degree(self) -> int:
        return self.summand.degree


def decompose_etale(algebra: EtaleAlgebra, seed: int = 1729,
                    max_retries: int = 32,
                    factor_cap: int | None = None) -> list[EtaleSummand]:
    """Split a commutative semisimple algebra into field summands.

    Random primitive element (seeded, bounded retries), exact minimal
    polynomial, factorization, and CRT idempotents.  The idempotent
    identities are verified exactly in Q[x]/(min poly), which is isomorphic
    to the algebra once the minimal polynomial reaches full degree.
    """
    rad = radical_dim(algebra)
    if rad:
        raise SemisimplicityError(
            f"cannot decompose: radical has dimension {rad}")
    rng = random.Random(seed)
    theta = None
    mp = None
    for attempt in range(max_retries):
        if attempt == 0:
            cand = algebra.one if algebra.dim == 1 else tuple(
                Fraction(i + 1) for i in range(algebra.dim))
        else:
            cand = tuple(Fraction(rng.randint(-4, 4))
                         for _ in range(algebra.dim))
        candidate_mp = min_poly_of_element(algebra, cand)
        if candidate_mp.degree == algebra.dim:
            theta, mp = cand, candidate_mp
            break
    if theta is None:
        raise ModelInvariantError(
            f"no primitive element found in {max_retries} seeded retries")

    _, ints = mp.clear_denominators()
    if factor_cap is None:
        _, factors = factor_int_poly(ints)
    else:
        _, factors = factor_int_poly(ints, max_degree=factor_cap)
    if any(mult != 1 for _, mult in factors):
        raise SemisimplicityError(
            "minimal polynomial of a primitive element is not squarefree")
    monic_factors = sorted((g.monic() for g, _ in factors),
                           key=lambda g: (g.degree, g.coeffs))

    # CRT idempotents in Q[x]/(mp)
    idems_poly = []
    for g in monic_factors:
        u = mp // g
        _, s, _ = poly_gcdex(u % g, g)
        e = (u * (s % g)) % mp
        idems_poly.append(e)
    total = RatPoly.zero()
    for e, g in zip(idems_poly, monic_factors):
        if (e * e - e) % mp != RatPoly.zero():
            raise ModelInvariantError("idempotent fails e^2 == e")
        total = total + e
    for i in range(len(idems_poly)):
        for j in range(i + 1, len(idems_poly)):
            if (idems_poly[i] * idems_poly[j]) % mp != RatPoly.zero():
                raise ModelInvariantError("idempotents are not orthogonal")
    if total % mp != RatPoly.one():
        raise ModelInvariantError("idempotents do not sum to one")

    out = []
    for g, e in zip(monic_factors, idems_poly):
        vec = algebra.poly_eval(e, theta)
        nf = NumberField(g, name="t", check=False)
        out.append(EtaleSummand(summand=nf, idempotent=vec, factor=g))
    if sum(s.degree for s in out) != algebra.dim:
        raise ModelInvariantError("summand degrees do not add to the dimension")
    return out
