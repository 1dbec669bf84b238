"""Exact factorization of integer polynomials.

The classical chain: primitive part, Yun squarefree decomposition,
factorization modulo a good small prime (Berlekamp), quadratic Hensel
lifting past the Mignotte coefficient bound, and subset recombination with
exact trial division.  Deterministic throughout: primes are tried in a
fixed order and the mod-p kernel basis comes from a fixed-pivot
elimination.

Integer polynomials are plain int lists, constant term first, trailing
zeros stripped (same layout as RatPoly.coeffs).
"""

from __future__ import annotations

from itertools import combinations
from math import isqrt

from .errors import CapExceededError
from .ratpoly import RatPoly, int_primitive, poly_gcd

DEFAULT_DEGREE_CAP = 36


# --- integer polynomial helpers -------------------------------------------

def _strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _deg(f: list[int]) -> int:
    return len(f) - 1


def _add(f, g):
    n = max(len(f), len(g))
    return _strip([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                   for i in range(n)])


def _sub(f, g):
    n = max(len(f), len(g))
    return _strip([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)
                   for i in range(n)])


def _mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _strip(out)


def _mul_ground(f, c):
    return _strip([a * c for a in f])


def _sym(a: int, m: int) -> int:
    """Symmetric residue in (-m/2, m/2]."""
    a %= m
    return a - m if 2 * a > m else a


def _trunc(f, m):
    return _strip([_sym(a, m) for a in f])


def _divmod_monic_mod(f, h, m):
    """divmod by a monic h with coefficient arithmetic mod m, symmetric."""
    rem = [a % m for a in f]
    dq = len(rem) - len(h)
    if dq < 0:
        return [], _trunc(rem, m)
    quot = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + _deg(h)] % m
        quot[k] = c
        if c:
            for j, b in enumerate(h):
                rem[k + j] = (rem[k + j] - c * b) % m
    return _trunc(quot, m), _trunc(rem[: max(_deg(h), 0)], m)


def try_exact_div(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient a // b when b divides a exactly over the integers, else None."""
    if not b:
        return None
    rem = list(a)
    db = _deg(b)
    dq = _deg(rem) - db
    if dq < 0:
        return None if _strip(rem) else []
    quot = [0] * (dq + 1)
    lead = b[-1]
    for k in range(dq, -1, -1):
        c = rem[k + db]
        if c % lead:
            return None
        c //= lead
        quot[k] = c
        if c:
            for j, bb in enumerate(b):
                rem[k + j] -= c * bb
    return quot if not _strip(rem) else None


# --- arithmetic mod a prime -------------------------------------------------

def _gf(f, p):
    return _strip([a % p for a in f])


def _gf_monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [a * inv % p for a in f]


def _gf_divmod(f, g, p):
    rem = [a % p for a in f]
    dg = _deg(g)
    dq = _deg(rem) - dg
    if dq < 0:
        return [], _strip(rem)
    inv = pow(g[-1], -1, p)
    quot = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + dg] * inv % p
        quot[k] = c
        if c:
            for j, b in enumerate(g):
                rem[k + j] = (rem[k + j] - c * b) % p
    return _strip(quot), _strip(rem[:dg])


def _gf_gcd(f, g, p):
    f, g = _gf(f, p), _gf(g, p)
    while g:
        f, g = g, _gf_divmod(f, g, p)[1]
    return _gf_monic(f, p)


def _gf_gcdex(f, g, p):
    """(s, t, h) with s f + t g == h, h the monic gcd, deg s < deg g - deg h."""
    r0, r1 = _gf(f, p), _gf(g, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf(_sub(s0, _mul(q, s1)), p)
        t0, t1 = t1, _gf(_sub(t0, _mul(q, t1)), p)
    if not r0:
        return s0, t0, r0
    inv = pow(r0[-1], -1, p)
    return (_gf(_mul_ground(s0, inv), p), _gf(_mul_ground(t0, inv), p),
            _gf_monic(r0, p))


def _gf_mul_mod(f, g, mod, p):
    return _gf_divmod(_mul(f, g), mod, p)[1]


def _gf_pow_mod(f, k, mod, p):
    out, base = [1], _gf_divmod(f, mod, p)[1]
    while k:
        if k & 1:
            out = _gf_mul_mod(out, base, mod, p)
        base = _gf_mul_mod(base, base, mod, p)
        k >>= 1
    return out


def _gf_kernel_basis(rows, p):
    """Deterministic basis of the left null space of (rows - I) over F_p,
    where rows[i] is the coefficient vector of x^(i p) mod f."""
    n = len(rows)
    m = [[(rows[i][j] - (1 if i == j else 0)) % p for j in range(n)]
         for i in range(n)]
    # column-reduce m (we need vectors v with v @ m == 0): transpose first
    mt = [[m[i][j] for i in range(n)] for j in range(n)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, n) if mt[i][c] % p), None)
        if pr is None:
            continue
        mt[r], mt[pr] = mt[pr], mt[r]
        inv = pow(mt[r][c], -1, p)
        mt[r] = [x * inv % p for x in mt[r]]
        for i in range(n):
            if i != r and mt[i][c] % p:
                fctr = mt[i][c]
                mt[i] = [(a - fctr * b) % p for a, b in zip(mt[i], mt[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [0] * n
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-mt[i][free]) % p
        basis.append(v)
    return basis


def _berlekamp(f, p):
    """Monic irreducible factors of a monic squarefree f mod p, sorted."""
    n = _deg(f)
    if n <= 1:
        return [list(f)]
    xp = _gf_pow_mod([0, 1], p, f, p)
    rows = []
    cur = [1]
    for i in range(n):
        rows.append([cur[j] if j < len(cur) else 0 for j in range(n)])
        if i < n - 1:
            cur = _gf_mul_mod(cur, xp, f, p)
    basis = _gf_kernel_basis(rows, p)
    r = len(basis)
    factors = [list(f)]
    for v in basis:
        if len(factors) == r:
            break
        vpoly = _strip(list(v))
        if _deg(vpoly) < 1:
            continue
        new = []
        for u in factors:
            if _deg(u) <= 1:
                new.append(u)
                continue
            rest = u
            for s in range(p):
                if _deg(rest) < 1:
                    break
                g = _gf_gcd(rest, _sub(vpoly, [s]), p)
                if 0 < _deg(g) < _deg(rest):
                    new.append(g)
                    rest = _gf_divmod(rest, g, p)[0]
            if _deg(rest) > 0:
                new.append(rest)
        factors = new
    return sorted(_gf_monic(u, p) for u in factors)


# --- Hensel lifting --------------------------------------------------------

def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from f == g h (mod m), s g + t h == 1 (mod m),
    h monic, to the same congruences mod m**2."""
    mm = m * m
    e = _trunc(_sub(f, _mul(g, h)), mm)
    q, r = _divmod_monic_mod(_mul(s, e), h, mm)
    gg = _trunc(_add(_add(g, _mul(t, e)), _mul(q, g)), mm)
    hh = _trunc(_add(h, r), mm)
    b = _trunc(_sub(_add(_mul(s, gg), _mul(t, hh)), [1]), mm)
    c, d = _divmod_monic_mod(_mul(s, b), hh, mm)
    ss = _trunc(_sub(s, d), mm)
    tt = _trunc(_sub(_sub(t, _mul(t, b)), _mul(c, gg)), mm)
    return gg, hh, ss, tt


def _hensel_lift(p, f, f_list, l):
    """Lift f == lc(f) * prod(f_list) (mod p), f_list monic mod p, to a
    monic factorization mod p**l (returned factors are symmetric mod p**l).
    """
    r = len(f_list)
    lc = f[-1]
    if r == 1:
        inv = pow(lc, -1, p ** l)
        return [_trunc(_mul_ground(f, inv), p ** l)]
    m = p
    k = r // 2
    d = max(1, (l - 1).bit_length())
    g = _trunc([lc], p)
    for fi in f_list[:k]:
        g = _trunc(_mul(g, fi), p)
    h = list(f_list[k])
    for fi in f_list[k + 1:]:
        h = _trunc(_mul(h, fi), p)
    s, t, one = _gf_gcdex(g, h, p)
    if one != [1]:
        raise ArithmeticError("hensel lift halves are not coprime mod p")
    s, t = _trunc(s, p), _trunc(t, p)
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, f_list[:k], l) + _hensel_lift(p, h, f_list[k:], l)


# --- Zassenhaus -----------------------------------------------------------

def _small_primes():
    yield from (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
    p = 59
    while True:
        if all(p % q for q in range(3, isqrt(p) + 1, 2)):
            yield p
        p += 2


def _zassenhaus(f: list[int]) -> list[list[int]]:
    """Irreducible factors of a primitive squarefree f with positive leading
    coefficient."""
    n = _deg(f)
    if n <= 1:
        return [list(f)]
    lc = f[-1]
    # Pick the usable prime with the fewest modular factors among the first
    # few candidates; a single modular factor proves irreducibility outright.
    best = None
    usable = 0
    for p in _small_primes():
        if lc % p == 0:
            continue
        fp = _gf(f, p)
        if _deg(fp) != n or _deg(_gf_gcd(fp, _gf(
                [i * c for i, c in enumerate(f)][1:], p), p)) != 0:
            continue
        factors_p = _berlekamp(_gf_monic(fp, p), p)
        if len(factors_p) == 1:
            return [list(f)]
        usable += 1
        if best is None or len(factors_p) < len(best[1]):
            best = (p, factors_p)
        if usable >= 5:
            break
    p, modular = best
    a_norm = max(abs(c) for c in f)
    bound = (isqrt(n + 1) + 1) * (1 << n) * a_norm * abs(lc)
    l = 1
    while p ** l <= 2 * bound:
        l += 1
    lifted = _hensel_lift(p, f, modular, l)
    pl = p ** l

    result: list[list[int]] = []
    rest = list(f)
    active = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(active):
        found = False
        for combo in combinations(active, size):
            cand = [rest[-1]]
            for i in combo:
                cand = _trunc(_mul(cand, lifted[i]), pl)
            _, cand = int_primitive(cand)
            quot = try_exact_div(rest, cand)
            if quot is not None:
                result.append(cand)
                rest = quot
                active = [i for i in active if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if _deg(rest) > 0:
        result.append(rest)
    return sorted(result)


def _yun_squarefree(f: list[int]) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of a primitive f with positive leading
    coefficient: f = prod g_i ** i with the g_i squarefree and coprime."""
    F = RatPoly(f)
    d = F.derivative()
    u = poly_gcd(F, d)
    v = F // u
    w = d // u
    out = []
    i = 1
    while v.degree > 0:
        h = poly_gcd(v, w - v.derivative())
        if h.degree > 0:
            _, prim = int_primitive(h.scale(
                1 / h.leading()).clear_denominators()[1])
            out.append((prim, i))
        wnext = (w - v.derivative()) // h
        v = v // h
        w = wnext
        i += 1
    return out


def factor_int_poly(f, max_degree: int = DEFAULT_DEGREE_CAP
                    ) -> tuple[int, list[tuple[RatPoly, int]]]:
    """Factor an integer-coefficient polynomial into irreducibles.

    Returns ``(content, factors)`` where content carries the sign, each
    factor is primitive with positive leading coefficient, and

        f == content * prod(g ** m for g, m in factors)

    holds exactly (re-verified before returning).
    """
    if isinstance(f, RatPoly):
        ints = f.int_coeffs()
    else:
        ints = [int(c) for c in f]
        if any(ints[i] != f[i] for i in range(len(ints))):
            raise ValueError("factor_int_poly needs integer coefficients")
    ints = _strip(list(ints))
    if not ints:
        raise ValueError("cannot factor the zero polynomial")
    if _deg(ints) > max_degree:
        raise CapExceededError(
            f"degree {_deg(ints)} exceeds the factorization cap {max_degree}")
    content, prim = int_primitive(ints)
    if _deg(prim) == 0:
        return content, []
    shift = next(i for i, c in enumerate(prim) if c)
    factors: list[tuple[RatPoly, int]] = []
    if shift:
        factors.append((RatPoly.x(), shift))
        prim = prim[shift:]
    if _deg(prim) > 0:
        for part, mult in _yun_squarefree(prim):
            for irr in _zassenhaus(part):
                factors.append((RatPoly(irr), mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    check = RatPoly.constant(content)
    for g, m in factors:
        check = check * g ** m
    if check != RatPoly(ints):
        raise ArithmeticError("factorization failed to reconstruct the input")
    return content, factors


def is_irreducible(f, max_degree: int = DEFAULT_DEGREE_CAP) -> bool:
    """True iff the (integer or rational) polynomial is irreducible over the
    rationals.  Rational input is scaled to an integer polynomial first;
    degree-0 input is not irreducible."""
    poly = f if isinstance(f, RatPoly) else RatPoly(f)
    if poly.degree < 1:
        return False
    _, ints = poly.clear_denominators()
    _, factors = factor_int_poly(ints, max_degree=max_degree)
    return len(factors) == 1 and factors[0][1] == 1
