"""Seeded random compositum systems for property sweeps.

Used by the test suite to quantify the closure guarantees over a corpus of
small ambient groups with random subgroups and connecting elements.
"""

from __future__ import annotations

import random

from .closure import CompositumSystem
from .errors import CapExceededError
from .galois import GaloisContext, make_compositum
from .perm import Permutation, Subgroup, subgroup_closure


def random_ambient(rng: random.Random, max_order: int = 24) -> Subgroup:
    """A random permutation group of order <= max_order (resampled until
    the cap holds)."""
    while True:
        degree = rng.randint(2, 5)
        gens = []
        for _ in range(rng.randint(1, 2)):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(Permutation(tuple(images)))
        try:
            g = subgroup_closure(gens, degree=degree, max_order=max_order)
        except CapExceededError:
            continue
        return g


def random_subgroup(rng: random.Random, g: Subgroup) -> Subgroup:
    pool = list(g.elements)
    gens = [rng.choice(pool) for _ in range(rng.randint(1, 2))]
    return subgroup_closure(gens, degree=g.degree, max_order=g.order)


def random_system(rng: random.Random, max_order: int = 24,
                  max_nodes: int = 3) -> CompositumSystem:
    """A random connected (unclosed) system: random ambient group, random
    node subgroups, spanning-tree connections plus a few extra composita."""
    ambient = random_ambient(rng, max_order=max_order)
    ctx = GaloisContext(ambient, label=f"random|{ambient.order}")
    n_nodes = rng.randint(1, max_nodes)
    nodes = [ctx.node(chr(ord("A") + i), random_subgroup(rng, ambient))
             for i in range(n_nodes)]
    pool = list(ambient.elements)
    comps = []
    for i in range(1, n_nodes):
        j = rng.randrange(i)
        comps.append(make_compositum(ctx, nodes[j], nodes[i], rng.choice(pool)))
    for _ in range(rng.randint(0, 2)):
        a = rng.choice(nodes)
        b = rng.choice(nodes)
        comps.append(make_compositum(ctx, a, b, rng.choice(pool)))
    return CompositumSystem.build(ctx, nodes, comps)
