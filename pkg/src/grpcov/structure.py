"""Structural predicates: abelian, nilpotent, solvable, supersolvable,
Dedekind, all-Sylow-cyclic, and the self-normalizing cyclic scan.

Supersolvability is decided through the prime-index criterion on maximal
subgroups, with an independent normal-series search kept alongside as a
cross-check oracle for the census suite. The Dedekind scan only needs the
cyclic subgroups: a subgroup generated by normal subgroups is normal, so all
subgroups are normal exactly when all cyclic ones are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .groups import (
    Group,
    Subgroup,
    cyclic_subgroup_list,
    derived_series,
    is_abelian,
    is_normal,
    maximal_subgroups,
    prime_factors,
    quotient_group,
    sylow_subgroup,
)


@dataclass(frozen=True)
class StructureFlags:
    abelian: bool
    nilpotent: bool
    solvable: bool
    supersolvable: bool
    dedekind: bool
    all_sylow_cyclic: bool
    primes: tuple[int, ...]


def is_solvable(G: Group) -> bool:
    cached = G._cache.get("solvable")
    if cached is None:
        cached = derived_series(G)[-1].order == 1
        G._cache["solvable"] = cached
    return cached


def is_nilpotent(G: Group) -> bool:
    cached = G._cache.get("nilpotent")
    if cached is None:
        if is_abelian(G):
            cached = True
        else:
            cached = all(
                is_normal(G, sylow_subgroup(G, p)) for p in prime_factors(G.order)
            )
        G._cache["nilpotent"] = cached
    return cached


def is_dedekind(G: Group) -> bool:
    return all(is_normal(G, s) for s in cyclic_subgroup_list(G) if s.order > 1)


def all_sylow_cyclic(G: Group) -> bool:
    for p in prime_factors(G.order):
        P = sylow_subgroup(G, p)
        if max(G.element_orders[x] for x in P.members) != P.order:
            return False
    return True


def is_supersolvable(G: Group, *, cap: Optional[int] = None) -> bool:
    """Prime-index criterion: every maximal subgroup has prime index."""
    cached = G._cache.get("supersolvable")
    if cached is not None:
        return cached
    if not is_solvable(G):
        result = False
    elif is_abelian(G):
        result = True
    else:
        result = all(
            _is_prime(G.order // m.order) for m in maximal_subgroups(G, cap=cap)
        )
    G._cache["supersolvable"] = result
    return result


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_supersolvable_by_series(G: Group) -> bool:
    """Definitional cross-check: a normal series with cyclic factors exists.

    It suffices to peel off normal subgroups of prime order one at a time,
    backtracking over the available choices.
    """
    if G.order == 1:
        return True
    for s in cyclic_subgroup_list(G):
        if _is_prime(s.order) and is_normal(G, s):
            if is_supersolvable_by_series(quotient_group(G, s)):
                return True
    return False


def structure_flags(G: Group, *, cap: Optional[int] = None) -> StructureFlags:
    abelian = is_abelian(G)
    return StructureFlags(
        abelian=abelian,
        nilpotent=is_nilpotent(G),
        solvable=is_solvable(G),
        supersolvable=is_supersolvable(G, cap=cap),
        dedekind=True if abelian else is_dedekind(G),
        all_sylow_cyclic=all_sylow_cyclic(G),
        primes=tuple(prime_factors(G.order)),
    )


def self_normalizing_cyclic_scan(G: Group) -> list[Subgroup]:
    """All proper cyclic subgroups equal to their own normalizer.

    A cyclic H = <x> is normalised by g exactly when x^g lies in H, so the
    scan looks for any g outside H normalising it and stops early.
    """
    out = []
    for s in cyclic_subgroup_list(G):
        if s.order == 1 or s.order == G.order:
            continue
        x = s.generators[0]
        mask = s.mask
        self_normalizing = True
        for g in range(G.order):
            if (mask >> g) & 1:
                continue
            if (mask >> G.conj(x, g)) & 1:
                self_normalizing = False
                break
        if self_normalizing:
            out.append(s)
    return out


def dedekind_witness(G: Group) -> Optional[Subgroup]:
    """A non-normal cyclic subgroup, or None when G is Dedekind."""
    for s in cyclic_subgroup_list(G):
        if s.order > 1 and not is_normal(G, s):
            return s
    return None
