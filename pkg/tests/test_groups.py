"""Core group machinery: construction, subgroups, quotients, isomorphism."""

from __future__ import annotations

import random

import pytest

from grpcov import perms
from grpcov.catalog import build_group, parse_spec
from grpcov.errors import CapExceeded, NotNormalError
from grpcov.groups import (
    are_isomorphic,
    center,
    conjugacy_classes,
    coset_action,
    cyclic_subgroup_list,
    direct_product,
    derived_subgroup,
    element_order,
    enumerate_subgroups,
    fingerprint,
    find_isomorphism,
    frattini_subgroup,
    group_from_generators,
    is_normal,
    maximal_subgroups,
    normalizer,
    product_embeddings,
    quotient_group,
    subgroup_as_group,
    subgroup_closure,
    sylow_subgroup,
    trivial_group,
    whole_subgroup,
)


def g(spec: str):
    return build_group(parse_spec(spec))


def test_from_generators_identity_case():
    G = group_from_generators([], 1)
    assert G.order == 1
    assert G.identity == 0


def test_from_generators_transposition():
    G = group_from_generators([perms.from_cycles([[0, 1]], 2)], 2)
    assert G.order == 2
    assert G.element_orders[1] == 2


def test_from_generators_a5_closure():
    five = perms.from_cycles([[0, 1, 2, 3, 4]], 5)
    three = perms.from_cycles([[0, 1, 2]], 5)
    G = group_from_generators([five, three], 5)
    # independent arithmetic cross-check: |A_5| = 5!/2
    assert G.order == 120 // 2 == 60


def test_from_generators_rejects_non_bijection():
    with pytest.raises(ValueError, match="bijection"):
        group_from_generators([(0, 0, 1)], 3)


def test_from_generators_element_cap():
    five = perms.from_cycles([[0, 1, 2, 3, 4]], 5)
    three = perms.from_cycles([[0, 1, 2]], 5)
    with pytest.raises(CapExceeded, match="element cap of 10"):
        group_from_generators([five, three], 5, element_cap=10)


def test_element_orders():
    assert element_order(g("D:5"), 0) == 1
    D5 = g("D:5")
    rot = D5.generators[0]
    assert element_order(D5, rot) == 5
    Q8 = g("Q:3")
    non_central = [x for x in range(8) if Q8.element_orders[x] == 4]
    assert non_central and all(element_order(Q8, x) == 4 for x in non_central)


def test_group_laws_on_samples():
    rng = random.Random(7)
    for spec in ["D:6", "Q:3", "Alt:4", "Meta:5,4,2"]:
        G = g(spec)
        for _ in range(50):
            x, y = rng.randrange(G.order), rng.randrange(G.order)
            assert 0 <= G.mul(x, y) < G.order
            assert G.mul(x, G.inv(x)) == 0
            assert G.mul(0, x) == x
            assert G.order % G.element_orders[x] == 0


def test_direct_product_orders_and_embeddings():
    C2, C3 = g("C:2"), g("C:3")
    P = direct_product(C2, C3)
    assert P.order == 6
    assert max(P.element_orders) == 6  # cyclic
    Q8C2 = direct_product(g("Q:3"), C2)
    assert Q8C2.order == 16
    A4C7 = direct_product(g("Alt:4"), g("C:7"))
    assert A4C7.order == 84
    left, right = product_embeddings(Q8C2, g("Q:3"), C2)
    assert left.order == 8 and right.order == 2
    assert is_normal(Q8C2, left) and is_normal(Q8C2, right)


def test_quotient_whole_and_center():
    G = g("D:4")
    Q = quotient_group(G, whole_subgroup(G))
    assert Q.order == 1
    Z = center(G)
    assert Z.order == 2
    DQ = quotient_group(G, Z)
    assert DQ.order == 4
    assert are_isomorphic(DQ, g("Ab:2,2"))


def test_quotient_sl23_by_center_is_a4():
    sl = g("SL23")
    assert sl.order == 24
    Z = center(sl)
    assert Z.order == 2
    assert are_isomorphic(quotient_group(sl, Z), g("Alt:4"))


def test_quotient_rejects_non_normal_with_witness():
    S3 = g("Sym:3")
    H = next(
        s for s in enumerate_subgroups(S3) if s.order == 2
    )
    with pytest.raises(NotNormalError) as exc:
        quotient_group(S3, H)
    gw, xw, cw = exc.value.witness
    assert S3.conj(xw, gw) == cw and cw not in H


def test_quotient_by_trivial_subgroup():
    for spec in ["C:12", "D:4", "Alt:4"]:
        G = g(spec)
        triv = next(s for s in enumerate_subgroups(G) if s.order == 1)
        assert are_isomorphic(quotient_group(G, triv), G)


def test_center_examples():
    assert center(g("Ab:3,9")).order == 27
    assert center(g("Alt:5")).order == 1
    assert center(g("Q:3")).order == 2


def test_normalizer_examples():
    S3 = g("Sym:3")
    Z3 = next(s for s in enumerate_subgroups(S3) if s.order == 3)
    assert normalizer(S3, Z3).order == 6  # normal
    H2 = next(s for s in enumerate_subgroups(S3) if s.order == 2)
    assert normalizer(S3, H2).order == 2
    A5 = g("Alt:5")
    P5 = sylow_subgroup(A5, 5)
    assert normalizer(A5, P5).order == 10


def test_sylow_examples():
    assert sylow_subgroup(g("Sym:3"), 3).order == 3
    assert sylow_subgroup(g("C:12"), 2).order == 4
    assert sylow_subgroup(g("Alt:5"), 2).order == 4
    with pytest.raises(ValueError):
        sylow_subgroup(g("Sym:3"), 5)
    with pytest.raises(ValueError):
        sylow_subgroup(g("C:12"), 4)


def test_frattini_examples():
    assert frattini_subgroup(g("C:4")).order == 2
    assert frattini_subgroup(g("Ab:2,2")).order == 1
    Q8 = g("Q:3")
    assert len(enumerate_subgroups(Q8)) == 6
    assert frattini_subgroup(Q8).order == 2


def test_are_isomorphic_basics():
    C4 = g("C:4")
    assert are_isomorphic(C4, C4)
    assert not are_isomorphic(C4, g("Ab:2,2"))
    assert are_isomorphic(g("Meta:5,4,2"), g("Meta:5,4,3"))
    assert not are_isomorphic(g("Meta:5,4,2"), g("Meta:5,4,4"))


def test_isomorphism_map_preserves_products():
    G, H = g("Meta:5,4,2"), g("Meta:5,4,3")
    phi = find_isomorphism(G, H)
    assert phi is not None and sorted(phi) == list(range(20))
    rng = random.Random(3)
    for _ in range(100):
        x, y = rng.randrange(20), rng.randrange(20)
        assert phi[G.mul(x, y)] == H.mul(phi[x], phi[y])


def test_fingerprint_disagreement_implies_non_isomorphic():
    pairs = [("C:8", "Ab:2,4"), ("D:4", "Q:3"), ("Alt:4", "D:6")]
    for a, b in pairs:
        assert fingerprint(g(a)) != fingerprint(g(b))
        assert not are_isomorphic(g(a), g(b))


def test_coset_action_examples():
    S3 = g("Sym:3")
    img, faithful = coset_action(S3, whole_subgroup(S3))
    assert img.order == 1 and not faithful
    H = next(s for s in enumerate_subgroups(S3) if s.order == 2)
    img, faithful = coset_action(S3, H)
    assert img.order == 6 and faithful
    A5 = g("Alt:5")
    N10 = normalizer(A5, sylow_subgroup(A5, 5))
    img, faithful = coset_action(A5, N10)
    assert faithful and img.order == 60
    assert len(img.elements[0]) == 6
    assert all(perms.sign(img.elements[i]) == 1 for i in img.generators)


def test_enumerate_subgroups_counts():
    assert len(enumerate_subgroups(g("C:6"))) == 4
    assert len(enumerate_subgroups(g("Sym:3"))) == 6
    assert len(enumerate_subgroups(g("Q:3"))) == 6


def test_enumerate_subgroups_contains_extremes_and_cyclics():
    for spec in ["C:6", "Sym:3", "Q:3", "D:6"]:
        G = g(spec)
        subs = enumerate_subgroups(G)
        assert any(s.order == 1 for s in subs)
        assert any(s.order == G.order for s in subs)
        cyc = {s.mask for s in cyclic_subgroup_list(G)}
        enumerated_cyc = {
            s.mask
            for s in subs
            if any(cyclic.mask == s.mask for cyclic in cyclic_subgroup_list(G))
        }
        assert cyc == enumerated_cyc
        for s in subs:
            assert G.order % s.order == 0  # Lagrange


def test_enumerate_subgroups_cap_refusal():
    with pytest.raises(CapExceeded, match="subgroup cap of 5"):
        enumerate_subgroups(g("Ab:2,2,2"), cap=5)


def test_subgroup_as_group_roundtrip():
    A5 = g("Alt:5")
    P = sylow_subgroup(A5, 2)
    H = subgroup_as_group(P)
    assert H.order == 4 and are_isomorphic(H, g("Ab:2,2"))


def test_maximal_subgroups_of_q8():
    Q8 = g("Q:3")
    maxima = maximal_subgroups(Q8)
    assert sorted(s.order for s in maxima) == [4, 4, 4]


def test_derived_subgroup_examples():
    assert derived_subgroup(g("Sym:3")).order == 3
    assert derived_subgroup(g("Alt:5")).order == 60
    assert derived_subgroup(g("Ab:4,4")).order == 1


def test_conjugacy_classes_s3():
    S3 = g("Sym:3")
    sizes = sorted(len(c) for c in conjugacy_classes(S3))
    assert sizes == [1, 2, 3]


def test_subgroup_closure_deterministic():
    G = g("D:6")
    a = subgroup_closure(G, [G.generators[0]])
    b = subgroup_closure(G, [G.generators[0]])
    assert a.mask == b.mask and a.generators == b.generators


def test_trivial_group():
    T = trivial_group()
    assert T.order == 1 and T.mul(0, 0) == 0
