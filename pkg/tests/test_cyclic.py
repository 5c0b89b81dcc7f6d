"""Cyclic-subgroup enumeration, lambda, c, and the cover kernel."""

from __future__ import annotations

from grpcov.catalog import build
from grpcov.cyclic import (
    cover_kernel,
    cyclic_count,
    cyclic_subgroups,
    lambda_,
    maximal_cyclic_subgroups,
)
from grpcov.groups import are_isomorphic, direct_product, subgroup_as_group


def test_cyclic_subgroup_counts():
    assert len(cyclic_subgroups(build("C:6"))) == 4
    assert len(cyclic_subgroups(build("Alt:5"))) == 32
    assert len(cyclic_subgroups(build("Q:3"))) == 5


def test_cyclic_count_examples():
    assert cyclic_count(build("Alt:5")) == 32
    for p in (2, 3, 5, 7):
        assert cyclic_count(build(f"C:{p}")) == 2
    assert cyclic_count(build("Ab:2,2")) == 4


def test_maximal_family_sizes():
    fam = maximal_cyclic_subgroups(build("C:20"))
    assert len(fam.members) == 1 and fam.degenerate
    fam = maximal_cyclic_subgroups(build("Ab:2,2"))
    assert len(fam.members) == 3
    assert all(s.order == 2 for s in fam.members)
    fam = maximal_cyclic_subgroups(build("D:4"))
    assert len(fam.members) == 5


def test_family_is_sorted_and_covers():
    for spec in ["D:6", "Alt:4", "Meta:5,4,2", "Q:4"]:
        G = build(spec)
        fam = maximal_cyclic_subgroups(G)
        sizes = [s.order for s in fam.members]
        assert sizes == sorted(sizes, reverse=True)
        union = 0
        inter = G.full_mask()
        for s in fam.members:
            union |= s.mask
            inter &= s.mask
        assert union == G.full_mask()
        assert inter == fam.kernel.mask


def test_lambda_named_values():
    assert lambda_(build("Alt:4")) == 7
    assert lambda_(build("D:15")) == 16
    assert lambda_(build("PSL3:2")) == 57
    assert lambda_(build("Ab:3,9")) == 6


def test_lambda_cyclic_iff_one():
    for spec, expect in [("C:20", 1), ("C:1", 1), ("Ab:2,3", 1), ("D:5", 6)]:
        G = build(spec)
        assert (lambda_(G) == 1) == (max(G.element_orders) == G.order)
        assert lambda_(G) == expect


def test_abelian_fast_path_agrees_with_generic():
    # the same group with the cyclic-type metadata stripped via its regular
    # permutation image must give identical invariants through the mask path
    from grpcov.groups import coset_action, trivial_subgroup

    for divs in [(2, 2), (2, 4), (4, 4), (3, 9), (2, 2, 2), (5, 5), (2, 16), (6, 4)]:
        fast = build("Ab:" + ",".join(map(str, divs)))
        assert fast.abelian_type is not None
        img, faithful = coset_action(fast, trivial_subgroup(fast))
        assert faithful and img.abelian_type is None
        assert lambda_(img) == lambda_(fast)
        assert cyclic_count(img) == cyclic_count(fast)


def test_cover_kernel_examples():
    cert = cover_kernel(build("Ab:2,2"))
    assert cert.kernel.order == 1 and not cert.degenerate
    G = build("Prod:[D:5],[C:3]")
    cert = cover_kernel(G)
    assert cert.kernel.order == 3
    assert are_isomorphic(subgroup_as_group(cert.kernel), build("C:3"))
    G = build("Prod:[A:4],[C:7]")
    cert = cover_kernel(G)
    assert cert.kernel.order == 7
    assert are_isomorphic(subgroup_as_group(cert.kernel), build("C:7"))


def test_cover_kernel_certificate_properties():
    for spec in ["Ab:2,2", "D:4", "Alt:4", "Prod:[D:5],[C:3]", "Meta:5,4,2", "C:12"]:
        cert = cover_kernel(build(spec))
        assert cert.central and cert.cyclic and cert.normal
        assert cert.lambda_preserved
    assert cover_kernel(build("C:12")).degenerate


def test_lambda_coprime_product():
    pairs = [("D:5", "C:3", 6), ("Sym:3", "C:5", 4), ("Q:3", "C:3", 3), ("Alt:4", "C:7", 7)]
    for a, b, expect in pairs:
        G = direct_product(build(a), build(b))
        assert lambda_(G) == lambda_(build(a)) * lambda_(build(b)) == expect
