"""Maximal cyclic subgroups, the covering invariants lambda and c, and the
cover kernel with its certificate.

The family of all maximal cyclic subgroups is the canonical largest
irredundant covering of a non-cyclic group, so lambda(G) is its size. A
cyclic group is assigned the degenerate family {G} and lambda 1, matching
how the invariant is used on cyclic inputs throughout the census.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .groups import (
    Group,
    Subgroup,
    cyclic_subgroup_list,
    is_normal,
    prime_factors,
    quotient_group,
    subgroup_from_mask,
    whole_subgroup,
)


@dataclass(frozen=True)
class MaximalCyclicFamily:
    """Maximal cyclic subgroups H_1, ..., H_m with |H_i| >= |H_{i+1}|."""

    members: tuple[Subgroup, ...]
    kernel: Subgroup
    degenerate: bool  # True for cyclic groups, where the family is {G}


@dataclass(frozen=True)
class KernelCertificate:
    kernel: Subgroup
    degenerate: bool
    central: bool
    cyclic: bool
    normal: bool
    lambda_preserved: bool


def cyclic_subgroups(G: Group) -> list[Subgroup]:
    """All distinct cyclic subgroups, trivial subgroup included."""
    return cyclic_subgroup_list(G)


def cyclic_count(G: Group) -> int:
    """c(G): the number of cyclic subgroups, trivial included."""
    if G.abelian_type is not None:
        return _abelian_cyclic_count(G.abelian_type)
    return len(cyclic_subgroup_list(G))


def is_cyclic(G: Group) -> bool:
    return max(G.element_orders) == G.order


def maximal_cyclic_subgroups(G: Group) -> MaximalCyclicFamily:
    """The containment-maximal cyclic subgroups, largest first."""
    cached = G._cache.get("max_cyclic_family")
    if cached is not None:
        return cached
    if is_cyclic(G):
        whole = whole_subgroup(G)
        fam = MaximalCyclicFamily((whole,), whole, True)
        G._cache["max_cyclic_family"] = fam
        return fam
    cyclics = cyclic_subgroup_list(G)
    by_order: dict[int, list[Subgroup]] = {}
    for s in cyclics:
        by_order.setdefault(s.order, []).append(s)
    orders = sorted(by_order)
    maximal: list[Subgroup] = []
    for s in cyclics:
        bigger_orders = [d for d in orders if d > s.order and d % s.order == 0]
        contained = any(
            s.mask & ~t.mask == 0 for d in bigger_orders for t in by_order[d]
        )
        if not contained:
            maximal.append(s)
    maximal.sort(key=lambda s: (-s.order, s.members))
    kmask = G.full_mask()
    for s in maximal:
        kmask &= s.mask
    fam = MaximalCyclicFamily(tuple(maximal), subgroup_from_mask(G, kmask), False)
    G._cache["max_cyclic_family"] = fam
    return fam


def lambda_(G: Group) -> int:
    """lambda(G): the maximum size of an irredundant covering; 1 iff cyclic."""
    cached = G._cache.get("lambda")
    if cached is not None:
        return cached
    if G.abelian_type is not None:
        val = _abelian_lambda(G.abelian_type)
    else:
        val = len(maximal_cyclic_subgroups(G).members)
    G._cache["lambda"] = val
    return val


def cover_kernel(G: Group) -> KernelCertificate:
    """N = intersection of the maximal cyclic subgroups, with its certificate.

    Cyclic input is flagged degenerate with kernel G itself.
    """
    fam = maximal_cyclic_subgroups(G)
    N = fam.kernel
    members = N.members
    gens = G.gens()
    central = all(G.mul(x, g) == G.mul(g, x) for x in members for g in gens)
    cyclic = any(G.element_orders[x] == N.order for x in members)
    normal = central or is_normal(G, N)
    lam = lambda_(G)
    lam_quot = lambda_(quotient_group(G, N)) if normal else -1
    return KernelCertificate(
        kernel=N,
        degenerate=fam.degenerate,
        central=central,
        cyclic=cyclic,
        normal=normal,
        lambda_preserved=(lam_quot == lam),
    )


# -- arithmetic fast path for abelian groups built from cyclic factors -----------
#
# In an abelian p-group A, a cyclic subgroup <x> sits inside a strictly larger
# cyclic subgroup exactly when x is a p-th power, so the maximal cyclic
# subgroups are generated by the elements outside A^p. Counting those orbits
# coordinate-wise avoids materialising subgroup masks, which keeps the large
# abelian sweeps (orders up to ~4 * 10^5) inside the time budget. Over mixed
# primes both invariants factor over the primary decomposition.


def _totient(n: int) -> int:
    out = n
    for p in prime_factors(n):
        out -= out // p
    return out


def _primary_type(divs: tuple[int, ...], p: int) -> list[int]:
    out = []
    for d in divs:
        q = 1
        while d % p == 0:
            d //= p
            q *= p
        if q > 1:
            out.append(q)
    return out


def _abelian_p_lambda(p: int, ptype: list[int]) -> int:
    if len(ptype) <= 1:
        return 1  # cyclic p-part
    counts: Counter[int] = Counter()
    coord_orders = [[q // math.gcd(q, x) for x in range(q)] for q in ptype]
    for vec in product(*(range(q) for q in ptype)):
        if all(x % p == 0 for x in vec):
            continue
        counts[math.lcm(*(po[x] for po, x in zip(coord_orders, vec)))] += 1
    return sum(c // _totient(d) for d, c in counts.items())


def _abelian_p_cyclic_count(p: int, ptype: list[int]) -> int:
    counts: Counter[int] = Counter()
    coord_orders = [[q // math.gcd(q, x) for x in range(q)] for q in ptype]
    for vec in product(*(range(q) for q in ptype)):
        counts[math.lcm(*(po[x] for po, x in zip(coord_orders, vec)))] += 1
    return sum(c // _totient(d) for d, c in counts.items())


def _abelian_lambda(divs: tuple[int, ...]) -> int:
    primes = sorted({p for d in divs for p in prime_factors(d)})
    out = 1
    for p in primes:
        out *= _abelian_p_lambda(p, _primary_type(divs, p))
    return out


def _abelian_cyclic_count(divs: tuple[int, ...]) -> int:
    primes = sorted({p for d in divs for p in prime_factors(d)})
    out = 1
    for p in primes:
        out *= _abelian_p_cyclic_count(p, _primary_type(divs, p))
    return out
