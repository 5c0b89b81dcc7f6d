"""Permutations as image tuples over {0, ..., d-1}.

A permutation is a plain tuple ``p`` with ``p[i]`` the image of ``i``.
Composition follows function application: ``compose(a, b)`` maps ``i`` to
``a[b[i]]``, so ``b`` acts first.
"""

from __future__ import annotations

import math
from itertools import chain


def identity(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def is_bijection(images: tuple[int, ...]) -> bool:
    d = len(images)
    return all(isinstance(x, int) and 0 <= x < d for x in images) and len(set(images)) == d


def compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """a after b: i -> a[b[i]]."""
    return tuple(a[x] for x in b)


def invert(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycles(p: tuple[int, ...]) -> list[list[int]]:
    """Disjoint cycle decomposition, fixed points omitted.

    Each cycle starts at its minimal point; cycles are ordered by that point.
    """
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(cyc)
    return out


def from_cycles(cycle_list: list[list[int]], degree: int) -> tuple[int, ...]:
    """Build a permutation from disjoint cycles; omitted points are fixed."""
    images = list(range(degree))
    touched: set[int] = set()
    for cyc in cycle_list:
        for pt in cyc:
            if not (0 <= pt < degree):
                raise ValueError(f"cycle point {pt} out of range for degree {degree}")
            if pt in touched:
                raise ValueError(f"cycles are not disjoint at point {pt}")
            touched.add(pt)
        for i, pt in enumerate(cyc):
            images[pt] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def perm_order(p: tuple[int, ...]) -> int:
    return math.lcm(*(len(c) for c in cycles(p))) if any(p[i] != i for i in range(len(p))) else 1


def sign(p: tuple[int, ...]) -> int:
    """+1 for even permutations, -1 for odd."""
    swaps = sum(len(c) - 1 for c in cycles(p))
    return -1 if swaps % 2 else 1


def moved_points(p: tuple[int, ...]) -> list[int]:
    return [i for i, x in enumerate(p) if x != i]


def support_degree(cycle_list: list[list[int]]) -> int:
    """Smallest degree containing all points of the given cycles."""
    pts = list(chain.from_iterable(cycle_list))
    return max(pts) + 1 if pts else 1
