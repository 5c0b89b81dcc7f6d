"""Concrete finite groups with fully enumerated element tables.

Elements are indices 0..order-1 with the identity at index 0. A group is
built either from permutation generators (breadth-first closure) or from an
enumerated set of hashable labels with a label-level product. Multiplication
tables are materialised for small orders; larger groups multiply through
their labels on demand.

Subgroups are membership bitmasks over element indices, which makes the
containment and intersection scans that dominate downstream searches
word-parallel.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from typing import Callable, Hashable, Iterable, Optional, Sequence

from . import config, perms
from .errors import CapExceeded, NotNormalError

# Dense n x n tables are built eagerly up to this order; beyond it the label
# product is used per call (an n^2 table for PSL(3,3) would dwarf its uses).
TABLE_LIMIT = 256

_ASSOC_SAMPLES = 1000


class Group:
    """Immutable finite group on indices 0..order-1, identity at 0."""

    __slots__ = (
        "order",
        "elements",
        "index",
        "inverses",
        "element_orders",
        "generators",
        "abelian_type",
        "_mul_label",
        "_table",
        "_cache",
    )

    def __init__(
        self,
        elements: Sequence[Hashable],
        mul_label: Optional[Callable[[Hashable, Hashable], Hashable]],
        *,
        generators: Sequence[int] = (),
        table: Optional[list[list[int]]] = None,
        inverses: Optional[Sequence[int]] = None,
        orders: Optional[Sequence[int]] = None,
        abelian_type: Optional[tuple[int, ...]] = None,
    ):
        self.elements = list(elements)
        self.order = len(self.elements)
        if self.order == 0:
            raise ValueError("a group needs at least the identity element")
        self.index = {lab: i for i, lab in enumerate(self.elements)}
        if len(self.index) != self.order:
            raise ValueError("duplicate element labels")
        self._mul_label = mul_label
        self._table = table
        self.abelian_type = abelian_type
        self._cache: dict = {}
        if table is None and mul_label is None:
            raise ValueError("need a label product or an explicit table")
        if table is None and self.order <= TABLE_LIMIT:
            self._build_table()
        self._check_identity()
        if inverses is None or orders is None:
            orders_c, inverses_c = self._orders_and_inverses()
            orders = orders if orders is not None else orders_c
            inverses = inverses if inverses is not None else inverses_c
        self.element_orders = list(orders)
        self.inverses = list(inverses)
        self._check_inverses()
        self._spot_check_associativity()
        self.generators = tuple(dict.fromkeys(g for g in generators if g != 0))

    # -- construction-time checks ------------------------------------------

    def _build_table(self) -> None:
        mul = self._mul_label
        idx = self.index
        els = self.elements
        self._table = [[idx[mul(a, b)] for b in els] for a in els]

    def _check_identity(self) -> None:
        for x in range(self.order):
            if self.mul(0, x) != x or self.mul(x, 0) != x:
                raise ValueError("element 0 is not a two-sided identity")

    def _check_inverses(self) -> None:
        for x in range(self.order):
            ix = self.inverses[x]
            if not (0 <= ix < self.order) or self.mul(x, ix) != 0 or self.mul(ix, x) != 0:
                raise ValueError(f"inverse law fails at element {x}")
            if self.order % self.element_orders[x] != 0:
                raise ValueError(f"element order {self.element_orders[x]} violates Lagrange")

    def _spot_check_associativity(self) -> None:
        n = self.order
        if n <= 16:
            triples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
        else:
            rng = random.Random(0xC0FFEE)
            triples = [
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLES)
            ]
        for a, b, c in triples:
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError(f"associativity fails on triple {(a, b, c)}")

    def _orders_and_inverses(self) -> tuple[list[int], list[int]]:
        n = self.order
        orders = [1] * n
        inverses = [0] * n
        for x in range(1, n):
            k = 1
            prev = 0
            cur = x
            while cur != 0:
                prev = cur
                cur = self.mul(cur, x)
                k += 1
            orders[x] = k
            inverses[x] = prev
        return orders, inverses

    # -- core queries --------------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def mul(self, i: int, j: int) -> int:
        t = self._table
        if t is not None:
            return t[i][j]
        return self.index[self._mul_label(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def power(self, i: int, k: int) -> int:
        k %= self.element_orders[i]
        out = 0
        base = i
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def conj(self, x: int, g: int) -> int:
        """x conjugated by g: g^-1 * x * g."""
        return self.mul(self.mul(self.inverses[g], x), g)

    def gens(self) -> tuple[int, ...]:
        """Recorded generators, or a greedily computed generating set."""
        if self.generators or self.order == 1:
            return self.generators
        self.generators = tuple(generating_sequence(self))
        return self.generators

    def full_mask(self) -> int:
        return (1 << self.order) - 1


def element_order(G: Group, x: int) -> int:
    """Least k >= 1 with x^k = identity."""
    return G.element_orders[x]


# -- subgroups ----------------------------------------------------------------


class Subgroup:
    """Membership bitmask over a parent group, with generator witnesses."""

    __slots__ = ("parent", "mask", "order", "generators", "_members")

    def __init__(self, parent: Group, mask: int, generators: Sequence[int] = ()):
        self.parent = parent
        self.mask = mask
        self.order = mask.bit_count()
        self.generators = tuple(generators)
        self._members: Optional[tuple[int, ...]] = None
        if not mask & 1:
            raise ValueError("a subgroup must contain the identity (index 0)")
        if parent.order % self.order != 0:
            raise ValueError("subgroup order does not divide parent order")

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            m = self.mask
            out = []
            while m:
                low = m & -m
                out.append(low.bit_length() - 1)
                m ^= low
            self._members = tuple(out)
        return self._members

    def __contains__(self, i: int) -> bool:
        return bool((self.mask >> i) & 1)

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return other.mask & ~self.mask == 0

    def is_whole_group(self) -> bool:
        return self.order == self.parent.order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.order})"


def subgroup_closure(G: Group, gen_indices: Iterable[int]) -> Subgroup:
    """Subgroup generated by the given element indices."""
    gens = []
    seen_gens = set()
    for g in gen_indices:
        if g != 0 and g not in seen_gens:
            gens.append(g)
            seen_gens.add(g)
    mask = 1
    queue = [0]
    members = {0}
    for x in queue:
        for g in gens:
            y = G.mul(x, g)
            if y not in members:
                members.add(y)
                queue.append(y)
                mask |= 1 << y
    return Subgroup(G, mask, tuple(gens))


def subgroup_from_mask(G: Group, mask: int) -> Subgroup:
    """Wrap a known-closed member set, computing greedy generator witnesses."""
    gens: list[int] = []
    closure_mask = 1
    while closure_mask != mask:
        rest = mask & ~closure_mask
        x = (rest & -rest).bit_length() - 1
        gens.append(x)
        closure_mask = subgroup_closure(G, gens).mask
        if closure_mask & ~mask:
            raise ValueError("member set is not closed under the group product")
    return Subgroup(G, mask, tuple(gens))


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, 1, ())


def whole_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, G.full_mask(), G.gens())


def cyclic_subgroup(G: Group, x: int) -> Subgroup:
    mask = 1
    cur = x
    while cur != 0:
        mask |= 1 << cur
        cur = G.mul(cur, x)
    return Subgroup(G, mask, (x,) if x != 0 else ())


def cyclic_subgroup_list(G: Group) -> list[Subgroup]:
    """All distinct cyclic subgroups, trivial included, deterministic order."""
    cached = G._cache.get("cyclic_subgroups")
    if cached is not None:
        return cached
    by_mask: dict[int, Subgroup] = {1: trivial_subgroup(G)}
    for x in range(1, G.order):
        sub = cyclic_subgroup(G, x)
        if sub.mask not in by_mask:
            by_mask[sub.mask] = sub
    out = sorted(by_mask.values(), key=lambda s: (s.order, s.members))
    G._cache["cyclic_subgroups"] = out
    return out


def is_normal(G: Group, H: Subgroup) -> bool:
    cached = H_normal_witness(G, H)
    return cached is None


def H_normal_witness(G: Group, H: Subgroup) -> Optional[tuple[int, int, int]]:
    """None if H is normal in G, else a witness (g, x, x^g) with x^g outside H."""
    hgens = H.generators or subgroup_from_mask(G, H.mask).generators
    for g in G.gens():
        for x in hgens:
            c = G.conj(x, g)
            if not (H.mask >> c) & 1:
                return (g, x, c)
    return None


def subgroup_as_group(H: Subgroup) -> Group:
    """Materialise a subgroup as a standalone group on its own indices."""
    G = H.parent
    members = list(H.members)
    local = {m: i for i, m in enumerate(members)}
    gens = H.generators or subgroup_from_mask(G, H.mask).generators
    return Group(
        members,
        lambda a, b: G.mul(a, b),
        generators=[local[g] for g in gens],
        inverses=[local[G.inverses[m]] for m in members],
        orders=[G.element_orders[m] for m in members],
    )


# -- constructors --------------------------------------------------------------


def trivial_group() -> Group:
    return Group([0], None, table=[[0]], inverses=[0], orders=[1])


def group_from_generators(
    gens: Sequence[tuple[int, ...]],
    degree: int,
    *,
    element_cap: Optional[int] = None,
) -> Group:
    """Closure of permutation generators under composition.

    Element 0 is the identity; the remaining elements appear in breadth-first
    discovery order, which makes indexing deterministic.
    """
    cap = config.element_cap(element_cap)
    for p in gens:
        if len(p) != degree or not perms.is_bijection(tuple(p)):
            raise ValueError(f"generator {p!r} is not a bijection on {degree} points")
    ident = perms.identity(degree)
    gen_tuples = [tuple(p) for p in gens]
    elements = [ident]
    index = {ident: 0}
    for cur in elements:
        for g in gen_tuples:
            nxt = perms.compose(cur, g)
            if nxt not in index:
                if len(elements) >= cap:
                    raise CapExceeded("element", cap, "closure of generators is too large")
                index[nxt] = len(elements)
                elements.append(nxt)
    orders = [perms.perm_order(p) for p in elements]
    inverses = [index[perms.invert(p)] for p in elements]
    gen_idx = sorted({index[g] for g in gen_tuples} - {0})
    return Group(
        elements,
        perms.compose,
        generators=gen_idx,
        inverses=inverses,
        orders=orders,
    )


def group_from_labels(
    elements: Sequence[Hashable],
    mul_label: Callable,
    *,
    generators: Sequence[Hashable] = (),
    inverse_label: Optional[Callable] = None,
    order_label: Optional[Callable] = None,
    abelian_type: Optional[tuple[int, ...]] = None,
    element_cap: Optional[int] = None,
) -> Group:
    """Group over an explicitly enumerated label set (normal forms).

    The first label must be the identity. Inverse and order callables, when
    given, are evaluated per label to skip the generic cycling pass.
    """
    cap = config.element_cap(element_cap)
    if len(elements) > cap:
        raise CapExceeded("element", cap, f"{len(elements)} normal forms")
    index = {lab: i for i, lab in enumerate(elements)}
    inverses = None
    if inverse_label is not None:
        inverses = [index[inverse_label(lab)] for lab in elements]
    orders = None
    if order_label is not None:
        orders = [order_label(lab) for lab in elements]
    return Group(
        elements,
        mul_label,
        generators=[index[g] for g in generators],
        inverses=inverses,
        orders=orders,
        abelian_type=abelian_type,
    )


def direct_product(G: Group, W: Group, *, element_cap: Optional[int] = None) -> Group:
    """Componentwise product on index pairs; (0, 0) is the identity."""
    cap = config.element_cap(element_cap)
    if G.order * W.order > cap:
        raise CapExceeded("element", cap, f"product order {G.order * W.order}")
    labels = [(i, j) for i in range(G.order) for j in range(W.order)]
    wn = W.order
    gmul, wmul = G.mul, W.mul
    abelian_type = None
    if G.abelian_type is not None and W.abelian_type is not None:
        abelian_type = G.abelian_type + W.abelian_type
    gens = [(g, 0) for g in G.gens()] + [(0, h) for h in W.gens()]
    return Group(
        labels,
        lambda a, b: (gmul(a[0], b[0]), wmul(a[1], b[1])),
        generators=[a * wn + b for a, b in gens],
        inverses=[G.inverses[i] * wn + W.inverses[j] for i, j in labels],
        orders=[math.lcm(G.element_orders[i], W.element_orders[j]) for i, j in labels],
        abelian_type=abelian_type,
    )


def product_embeddings(P: Group, G: Group, W: Group) -> tuple[Subgroup, Subgroup]:
    """Canonical factor embeddings of a direct_product result."""
    wn = W.order
    left = 0
    for i in range(G.order):
        left |= 1 << (i * wn)
    right = (1 << wn) - 1
    return subgroup_from_mask(P, left), subgroup_from_mask(P, right)


def quotient_group(G: Group, N: Subgroup) -> Group:
    """Quotient by a normal subgroup; cosets indexed by first representative."""
    if N.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    witness = H_normal_witness(G, N)
    if witness is not None:
        raise NotNormalError(*witness)
    if N.order == 1:
        return G
    if N.is_whole_group():
        return trivial_group()
    n = G.order
    coset_of = [-1] * n
    reps: list[int] = []
    nmembers = N.members
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for m in nmembers:
            coset_of[G.mul(x, m)] = cid
    nc = len(reps)
    table = [[coset_of[G.mul(reps[i], reps[j])] for j in range(nc)] for i in range(nc)]
    rng = random.Random(0xFACADE)
    for _ in range(min(200, nc * nc)):
        i, j = rng.randrange(nc), rng.randrange(nc)
        x = G.mul(reps[i], nmembers[rng.randrange(len(nmembers))])
        y = G.mul(reps[j], nmembers[rng.randrange(len(nmembers))])
        if coset_of[G.mul(x, y)] != table[i][j]:
            raise ValueError("coset multiplication is not well-defined")
    gen_images = sorted({coset_of[g] for g in G.gens()} - {0})
    return Group(reps, None, table=table, generators=gen_images)


# -- elementwise structure scans ------------------------------------------------


def center(G: Group) -> Subgroup:
    """Elements commuting with all of G (checked against a generating set)."""
    gens = G.gens()
    mask = 0
    for x in range(G.order):
        if all(G.mul(x, g) == G.mul(g, x) for g in gens):
            mask |= 1 << x
    return subgroup_from_mask(G, mask)


def is_abelian(G: Group) -> bool:
    cached = G._cache.get("abelian")
    if cached is None:
        gens = G.gens()
        cached = all(
            G.mul(a, b) == G.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]
        )
        G._cache["abelian"] = cached
    return cached


def conjugacy_classes(G: Group) -> list[tuple[int, ...]]:
    """Conjugacy classes as sorted tuples, ordered by minimal element."""
    cached = G._cache.get("classes")
    if cached is not None:
        return cached
    gens = G.gens()
    conj_by = [(G.inverses[g], g) for g in gens]
    seen = [False] * G.order
    classes = []
    for start in range(G.order):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        for x in orbit:
            for gi, g in conj_by:
                y = G.mul(G.mul(gi, x), g)
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
        classes.append(tuple(sorted(orbit)))
    G._cache["classes"] = classes
    return classes


def class_of(G: Group) -> list[int]:
    """Map element -> index of its conjugacy class."""
    cached = G._cache.get("class_of")
    if cached is None:
        cached = [0] * G.order
        for ci, cls in enumerate(conjugacy_classes(G)):
            for x in cls:
                cached[x] = ci
        G._cache["class_of"] = cached
    return cached


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    """Largest subgroup of G in which H is normal."""
    if H.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    hgens = H.generators or subgroup_from_mask(G, H.mask).generators
    hmask = H.mask
    mask = 0
    for g in range(G.order):
        gi = G.inverses[g]
        if all((hmask >> G.mul(G.mul(gi, x), g)) & 1 for x in hgens):
            mask |= 1 << g
    return subgroup_from_mask(G, mask)


def normal_closure(G: Group, seeds: Iterable[int], under: Optional[Sequence[int]] = None) -> Subgroup:
    """Smallest subgroup containing the seeds and closed under conjugation.

    ``under`` is the conjugating generator set (defaults to generators of G).
    """
    conj_gens = list(under if under is not None else G.gens())
    gens = [s for s in seeds if s != 0]
    sub = subgroup_closure(G, gens)
    i = 0
    while i < len(gens):
        x = gens[i]
        for g in conj_gens:
            c = G.conj(x, g)
            if not (sub.mask >> c) & 1:
                gens.append(c)
                sub = subgroup_closure(G, gens)
        i += 1
    return sub


def commutator(G: Group, x: int, y: int) -> int:
    return G.mul(G.mul(G.inverses[x], G.inverses[y]), G.mul(x, y))


def derived_of_subgroup(G: Group, H: Subgroup) -> Subgroup:
    hgens = H.generators or subgroup_from_mask(G, H.mask).generators
    seeds = {commutator(G, a, b) for a in hgens for b in hgens}
    return normal_closure(G, seeds, under=hgens)


def derived_subgroup(G: Group) -> Subgroup:
    cached = G._cache.get("derived")
    if cached is None:
        cached = derived_of_subgroup(G, whole_subgroup(G))
        G._cache["derived"] = cached
    return cached


def derived_series(G: Group) -> list[Subgroup]:
    """G >= G' >= G'' >= ... until the series stabilises."""
    series = [whole_subgroup(G)]
    while True:
        nxt = derived_of_subgroup(G, series[-1])
        if nxt.mask == series[-1].mask:
            return series
        series.append(nxt)
        if nxt.order == 1:
            return series


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown through normalizers from a p-element."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    if G.order % p != 0:
        raise ValueError(f"{p} does not divide the group order {G.order}")
    pk = 1
    while G.order % (pk * p) == 0:
        pk *= p
    seed = 0
    for x in range(1, G.order):
        if G.element_orders[x] % p == 0:
            seed = G.power(x, G.element_orders[x] // p)
            break
    P = subgroup_closure(G, [seed])
    while P.order < pk:
        N = normalizer(G, P)
        grown = False
        for t in N.members:
            if (P.mask >> t) & 1:
                continue
            # strip the prime-to-p part so tp has p-power order
            m = G.element_orders[t]
            while m % p == 0:
                m //= p
            tp = G.power(t, m)
            if tp == 0 or (P.mask >> tp) & 1:
                continue
            cand = subgroup_closure(G, list(P.generators) + [tp])
            if pk % cand.order == 0 and cand.order > P.order:
                P = cand
                grown = True
                break
        if not grown:
            raise RuntimeError("sylow growth stalled; group tables are inconsistent")
    return P


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def enumerate_subgroups(G: Group, *, cap: Optional[int] = None) -> list[Subgroup]:
    """Complete subgroup list, seeded by cyclic subgroups and closed under joins.

    Joining with cyclic subgroups only is enough to reach every subgroup and
    prunes the quadratic pass over the full lattice.
    """
    limit = config.subgroup_cap(cap)
    cached = G._cache.get(("subgroups", limit))
    if cached is not None:
        return cached
    cyclics = cyclic_subgroup_list(G)
    found: dict[int, Subgroup] = {s.mask: s for s in cyclics}
    if len(found) > limit:
        raise CapExceeded("subgroup", limit, f"{len(found)} cyclic subgroups already")
    tried: set[int] = set()
    frontier = list(found.values())
    nontrivial_cyclics = [c for c in cyclics if c.order > 1]
    while frontier:
        fresh: list[Subgroup] = []
        for H in frontier:
            for C in nontrivial_cyclics:
                if C.mask & ~H.mask == 0:
                    continue
                union = H.mask | C.mask
                if union in tried:
                    continue
                tried.add(union)
                J = subgroup_closure(G, list(H.generators) + list(C.generators))
                if J.mask not in found:
                    found[J.mask] = J
                    fresh.append(J)
                    if len(found) > limit:
                        raise CapExceeded("subgroup", limit, f"order {G.order} group")
        frontier = fresh
    out = sorted(found.values(), key=lambda s: (s.order, s.members))
    G._cache[("subgroups", limit)] = out
    return out


def maximal_subgroups(G: Group, *, cap: Optional[int] = None) -> list[Subgroup]:
    subs = enumerate_subgroups(G, cap=cap)
    proper = [s for s in subs if s.order < G.order]
    out = []
    for s in proper:
        if not any(t is not s and t.contains_subgroup(s) for t in proper):
            out.append(s)
    return out


def frattini_subgroup(G: Group, *, cap: Optional[int] = None) -> Subgroup:
    """Intersection of all maximal subgroups."""
    maxima = maximal_subgroups(G, cap=cap)
    if not maxima:
        return whole_subgroup(G)
    mask = G.full_mask()
    for s in maxima:
        mask &= s.mask
    return subgroup_from_mask(G, mask)


def coset_action(G: Group, H: Subgroup) -> tuple[Group, bool]:
    """Left-multiplication action on left cosets of H; returns (image, faithful)."""
    if H.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    n = G.order
    coset_of = [-1] * n
    reps: list[int] = []
    hmembers = H.members
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for m in hmembers:
            coset_of[G.mul(x, m)] = cid
    degree = len(reps)
    gen_perms = [
        tuple(coset_of[G.mul(g, reps[c])] for c in range(degree)) for g in G.gens()
    ]
    if not gen_perms:
        gen_perms = [perms.identity(degree)]
    image = group_from_generators(gen_perms, degree, element_cap=max(G.order, 1))
    return image, image.order == G.order


# -- isomorphism ---------------------------------------------------------------


def generating_sequence(G: Group) -> list[int]:
    """Small generating sequence, chosen greedily by descending element order."""
    cached = G._cache.get("genseq")
    if cached is not None:
        return cached
    seq: list[int] = []
    closure_mask = 1
    while closure_mask != G.full_mask():
        best = None
        for x in range(1, G.order):
            if (closure_mask >> x) & 1:
                continue
            key = (-G.element_orders[x], x)
            if best is None or key < best:
                best = key
        seq.append(best[1])
        closure_mask = subgroup_closure(G, seq).mask
    G._cache["genseq"] = seq
    return seq


def _element_invariants(G: Group) -> list[tuple[int, int]]:
    cached = G._cache.get("elem_inv")
    if cached is None:
        classes = conjugacy_classes(G)
        cls_idx = class_of(G)
        cached = [
            (G.element_orders[x], len(classes[cls_idx[x]])) for x in range(G.order)
        ]
        G._cache["elem_inv"] = cached
    return cached


def fingerprint(G: Group) -> tuple:
    """Isomorphism-invariant profile used to pre-screen candidate pairs."""
    cached = G._cache.get("fingerprint")
    if cached is not None:
        return cached
    order_hist = tuple(sorted(Counter(G.element_orders).items()))
    z = center(G).order
    D = derived_subgroup(G)
    d = D.order
    Q = quotient_group(G, D)
    ab_hist = tuple(sorted(Counter(Q.element_orders).items()))
    class_hist = tuple(sorted(Counter(_element_invariants(G)).items()))
    sq = Counter(G.mul(x, x) for x in range(G.order))
    sq_hist = tuple(sorted(Counter((G.element_orders[y], c) for y, c in sq.items()).items()))
    out = (G.order, order_hist, z, d, ab_hist, class_hist, sq_hist)
    G._cache["fingerprint"] = out
    return out


def _extend_map(G: Group, H: Group, gens: list[int], images: list[int]) -> Optional[list[int]]:
    """Map the closure of gens[:len(images)] into H along the given images.

    Walks the Cayley graph of the partial generating set, defining the map on
    tree edges and checking it on cross edges; any inconsistency or collision
    rejects the candidate immediately.
    """
    phi = [-1] * G.order
    used = [False] * H.order
    phi[0] = 0
    used[0] = True
    queue = [0]
    pairs = list(zip(gens[: len(images)], images))
    for x in queue:
        hx = phi[x]
        for g, hg in pairs:
            y = G.mul(x, g)
            hy = H.mul(hx, hg)
            if phi[y] >= 0:
                if phi[y] != hy:
                    return None
            else:
                if used[hy]:
                    return None
                phi[y] = hy
                used[hy] = True
                queue.append(y)
    return phi


def find_isomorphism(G: Group, H: Group) -> Optional[list[int]]:
    """A product-preserving bijection G -> H as an index map, or None.

    A greedy generating sequence of G is mapped onto invariant-matching
    tuples of H; partial maps are extended breadth-first through the
    multiplication tables and rejected at the first inconsistency. The image
    of the first generator only ranges over conjugacy-class representatives,
    since any isomorphism may be composed with an inner automorphism.
    """
    if G.order != H.order:
        return None
    if G.order == 1:
        return [0]
    if fingerprint(G) != fingerprint(H):
        return None
    gens = generating_sequence(G)
    inv_G = _element_invariants(G)
    inv_H = _element_invariants(H)
    h_classes = conjugacy_classes(H)

    candidates: list[list[int]] = []
    for t, g in enumerate(gens):
        want = inv_G[g]
        if t == 0:
            cand = [cls[0] for cls in h_classes if inv_H[cls[0]] == want]
        else:
            cand = [h for h in range(H.order) if inv_H[h] == want]
        if not cand:
            return None
        candidates.append(cand)

    images: list[int] = []

    def dfs(t: int) -> Optional[list[int]]:
        for h in candidates[t]:
            images.append(h)
            phi = _extend_map(G, H, gens, images)
            if phi is not None:
                if t + 1 == len(gens):
                    return phi
                deeper = dfs(t + 1)
                if deeper is not None:
                    return deeper
            images.pop()
        return None

    return dfs(0)


def are_isomorphic(G: Group, H: Group) -> bool:
    """True iff a product-preserving bijection exists."""
    return find_isomorphism(G, H) is not None


def automorphism_perms(G: Group) -> list[tuple[int, ...]]:
    """Every automorphism of G as a permutation of element indices."""
    if G.order == 1:
        return [(0,)]
    gens = generating_sequence(G)
    inv = _element_invariants(G)
    candidates = [
        [h for h in range(G.order) if inv[h] == inv[g]] for g in gens
    ]
    out: list[tuple[int, ...]] = []
    images: list[int] = []

    def dfs(t: int) -> None:
        for h in candidates[t]:
            images.append(h)
            phi = _extend_map(G, G, gens, images)
            if phi is not None:
                if t + 1 == len(gens):
                    out.append(tuple(phi))
                else:
                    dfs(t + 1)
            images.pop()
        return None

    dfs(0)
    return out
