"""Covers by subgroups: verification with certificates, the exact
maximum-irredundant-cover oracle, exact sigma, and the bound-lemma checkers.

A covering is a family of at least two proper subgroups whose union is the
whole group; it is irredundant when every member keeps a witness element
lying in no other member. The oracle enumerates candidate families over the
full subgroup list with monotone pruning, so its optimum is exact and its
tie-breaking is lexicographic over the canonically sorted subgroup list.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from . import config
from .cyclic import is_cyclic, maximal_cyclic_subgroups
from .errors import CapExceeded, SigmaUndefinedError
from .groups import (
    Group,
    Subgroup,
    enumerate_subgroups,
    maximal_subgroups,
    subgroup_closure,
    subgroup_from_mask,
    whole_subgroup,
)

F_VALUES = {3: 4, 4: 9, 5: 16, 6: 36}


@dataclass(frozen=True)
class Cover:
    """A candidate covering; degenerate marks the {G} family of a cyclic group."""

    members: tuple[Subgroup, ...]
    degenerate: bool = False


@dataclass(frozen=True)
class IrredundancyCertificate:
    """One witness element per member, lying in that member and no other."""

    witnesses: tuple[int, ...]


@dataclass(frozen=True)
class CoverCheck:
    is_cover: bool
    is_irredundant: bool
    certificate: Optional[IrredundancyCertificate]


@dataclass(frozen=True)
class OracleResult:
    size: int
    cover: Cover


@dataclass(frozen=True)
class SigmaResult:
    size: int
    cover: Cover


@dataclass(frozen=True)
class BoundReport:
    cohn_sum_ok: bool
    index_of_intersection: int
    f_bound_ok: Optional[bool]
    details: str


@dataclass(frozen=True)
class ScorzaResult:
    exists: bool
    witness: Optional[Subgroup]


def _private_masks(members: Sequence[Subgroup]) -> list[int]:
    """mask of elements belonging to member i and to no other member."""
    n = len(members)
    prefix = [0] * (n + 1)
    for i, s in enumerate(members):
        prefix[i + 1] = prefix[i] | s.mask
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | members[i].mask
    return [members[i].mask & ~(prefix[i] | suffix[i + 1]) for i in range(n)]


def check_cover(G: Group, members: Sequence[Subgroup]) -> CoverCheck:
    """Decide covering and irredundance; certificate iff irredundant."""
    members = list(members)
    if len(members) < 2:
        raise ValueError("a covering needs at least 2 subgroups")
    for s in members:
        if s.parent is not G:
            raise ValueError("cover members must share the parent group")
    union = 0
    for s in members:
        union |= s.mask
    is_cover = union == G.full_mask()
    privates = _private_masks(members)
    irredundant = all(p != 0 for p in privates)
    cert = None
    if irredundant:
        cert = IrredundancyCertificate(
            tuple((p & -p).bit_length() - 1 for p in privates)
        )
    return CoverCheck(is_cover, irredundant, cert)


def _oracle_candidates(G: Group, cap: Optional[int]) -> list[Subgroup]:
    limit = config.oracle_cap(cap)
    subs = enumerate_subgroups(G)
    if len(subs) > limit:
        raise CapExceeded("oracle", limit, f"{len(subs)} subgroups enumerated")
    return [s for s in subs if s.order < G.order]


def max_irredundant_oracle(G: Group, *, cap: Optional[int] = None) -> OracleResult:
    """Exact maximum size of an irredundant cover by proper subgroups.

    Branch and bound over the canonical subgroup list; among maximum covers
    the lexicographically least index set is returned. Cyclic groups get the
    degenerate single-member family {G} of size 1.
    """
    if is_cyclic(G):
        return OracleResult(1, Cover((whole_subgroup(G),), degenerate=True))
    cands = _oracle_candidates(G, cap)
    full = G.full_mask()
    n = len(cands)
    best: list[Optional[tuple[int, tuple[int, ...]]]] = [None]

    def dfs(i: int, chosen: list[int], privates: list[int], union: int) -> None:
        viable = sum(
            1 for j in range(i, n) if cands[j].mask & ~union
        )
        cur_best = best[0][0] if best[0] else 0
        if len(chosen) + viable <= cur_best:
            return
        if i == n:
            if len(chosen) >= 2 and union == full:
                best[0] = (len(chosen), tuple(chosen))
            return
        mask = cands[i].mask
        new_private = mask & ~union
        if new_private:
            new_privates = [p & ~mask for p in privates]
            if all(new_privates):
                dfs(i + 1, chosen + [i], new_privates + [new_private], union | mask)
        dfs(i + 1, chosen, privates, union)

    dfs(0, [], [], 0)
    if best[0] is None:
        raise RuntimeError("no irredundant cover found for a non-cyclic group")
    size, idxs = best[0]
    return OracleResult(size, Cover(tuple(cands[i] for i in idxs)))


def enumerate_irredundant_covers(
    G: Group, *, cap: Optional[int] = None
) -> Iterator[tuple[Subgroup, ...]]:
    """All irredundant covers by proper subgroups, in lexicographic index order."""
    if is_cyclic(G):
        return
    cands = _oracle_candidates(G, cap)
    full = G.full_mask()
    n = len(cands)

    def dfs(i: int, chosen: list[int], privates: list[int], union: int):
        if i == n:
            if len(chosen) >= 2 and union == full:
                yield tuple(cands[j] for j in chosen)
            return
        mask = cands[i].mask
        new_private = mask & ~union
        if new_private:
            new_privates = [p & ~mask for p in privates]
            if all(new_privates):
                yield from dfs(i + 1, chosen + [i], new_privates + [new_private], union | mask)
        yield from dfs(i + 1, chosen, privates, union)

    yield from dfs(0, [], [], 0)


def sigma(G: Group, *, cap: Optional[int] = None) -> SigmaResult:
    """Exact minimum size of an irredundant cover of a non-cyclic group.

    Any cover member can be enlarged to a maximal subgroup without growing
    the family, so the search runs over maximal subgroups only: branch and
    bound on the least uncovered element with an uncovered-count lower bound,
    then a lexicographic second pass pins the witness cover.
    """
    if is_cyclic(G):
        raise SigmaUndefinedError("sigma is undefined for cyclic groups")
    maxima = maximal_subgroups(G, cap=cap)
    full = G.full_mask()
    biggest = max(s.order for s in maxima)
    best = [len(maxima) + 1]

    def dfs(chosen: list[int], union: int) -> None:
        if union == full:
            best[0] = min(best[0], len(chosen))
            return
        uncovered = full & ~union
        lower = len(chosen) + -(-(uncovered.bit_count()) // biggest)
        if lower >= best[0]:
            return
        pivot = (uncovered & -uncovered).bit_length() - 1
        for j, s in enumerate(maxima):
            if (s.mask >> pivot) & 1:
                dfs(chosen + [j], union | s.mask)

    dfs([], 0)
    size = best[0]
    for combo in combinations(range(len(maxima)), size):
        union = 0
        for j in combo:
            union |= maxima[j].mask
        if union == full:
            return SigmaResult(size, Cover(tuple(maxima[j] for j in combo)))
    raise RuntimeError("sigma search failed to reproduce its optimum")


def _require_irredundant(G: Group, cover: Cover) -> None:
    if cover.degenerate:
        return
    chk = check_cover(G, cover.members)
    if not (chk.is_cover and chk.is_irredundant):
        raise ValueError("expected an irredundant cover")


def check_bfs_lemma(G: Group, cover: Cover) -> list[tuple[int, int, int]]:
    """Prime-element multiplicity bound: offending (x, p, n) triples.

    For an irredundant cover X_1..X_m with intersection D, every p-element x
    lying in n members satisfies x in D or p <= m - n. Expected empty.
    """
    _require_irredundant(G, cover)
    if cover.degenerate:
        return []
    members = cover.members
    m = len(members)
    dmask = G.full_mask()
    for s in members:
        dmask &= s.mask
    violations = []
    for x in range(1, G.order):
        o = G.element_orders[x]
        p = _prime_power_base(o)
        if p == 0:
            continue
        if (dmask >> x) & 1:
            continue
        nx = sum(1 for s in members if (s.mask >> x) & 1)
        if p > m - nx:
            violations.append((x, p, nx))
    return violations


def _prime_power_base(o: int) -> int:
    """The prime p when o = p^k with k >= 1, else 0."""
    if o < 2:
        return 0
    p = 2
    while o % p != 0:
        p += 1
        if p * p > o:
            p = o
            break
    while o % p == 0:
        o //= p
    return p if o == 1 else 0


def check_cover_bounds(G: Group, cover: Cover) -> BoundReport:
    """Cohn's inequality and, for 3 <= n <= 6, the f(n) intersection bound."""
    _require_irredundant(G, cover)
    if cover.degenerate:
        return BoundReport(True, 1, None, "degenerate single-member family")
    members = sorted(cover.members, key=lambda s: -s.order)
    n = len(members)
    tail = sum(s.order for s in members[1:])
    cohn_ok = G.order <= tail
    dmask = G.full_mask()
    for s in members:
        dmask &= s.mask
    idx = G.order // dmask.bit_count()
    f_ok: Optional[bool] = None
    if 3 <= n <= 6:
        f_ok = idx <= F_VALUES[n]
    details = f"|G|={G.order} tail_sum={tail} [G:D]={idx} n={n}"
    return BoundReport(cohn_ok, idx, f_ok, details)


def scorza_3cover(G: Group) -> ScorzaResult:
    """Existence of a normal N with G/N isomorphic to C_2 x C_2.

    The subgroup generated by all squares has elementary abelian 2-group
    quotient, so such an N exists exactly when that quotient has order at
    least 4; a witness of index exactly 4 is grown deterministically.
    """
    squares = sorted({G.mul(x, x) for x in range(G.order)})
    K = subgroup_closure(G, squares)
    index = G.order // K.order
    if index < 4:
        return ScorzaResult(False, None)
    mask = K.mask
    while G.order // mask.bit_count() > 4:
        rest = ~mask & G.full_mask()
        x = (rest & -rest).bit_length() - 1
        mask = subgroup_closure(G, list(subgroup_from_mask(G, mask).generators) + [x]).mask
    return ScorzaResult(True, subgroup_from_mask(G, mask))


def has_irredundant_cover_of_size(G: Group, size: int, *, cap: Optional[int] = None) -> bool:
    """Brute-force existence of an irredundant cover with exactly `size` members."""
    if is_cyclic(G):
        return False
    cands = _oracle_candidates(G, cap)
    full = G.full_mask()
    for combo in combinations(cands, size):
        union = 0
        for s in combo:
            union |= s.mask
        if union != full:
            continue
        if all(p != 0 for p in _private_masks(combo)):
            return True
    return False
