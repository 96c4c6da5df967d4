"""Tests for the permutation engine: BSGS, lattice enumeration, brute force."""

import pytest

from hallpi.arith import PrimeSet
from hallpi.perm_engine import (
    DEFAULT_MAX_ORDER,
    OrderLimitError,
    PermGroup,
    brute_d_via_hall_containment,
    brute_property,
    construct_named,
    enumerate_subgroups,
    identity,
    lattice_dump,
    maximal_pi_subgroups,
    perm_from_cycles,
    perm_to_cycles,
    pi_hall_subgroups,
    pinv,
    pmul,
)


# ---------------------------------------------------------------------------
# primitives


def test_cycle_notation_roundtrip():
    p = perm_from_cycles("(0 1 2)(3 4)", 6)
    assert p == (1, 2, 0, 4, 3, 5)
    assert perm_to_cycles(p) == "(0 1 2)(3 4)"
    assert perm_from_cycles("()", 4) == identity(4)
    assert perm_to_cycles(identity(4)) == "()"


def test_cycle_notation_rejects_garbage():
    with pytest.raises(ValueError):
        perm_from_cycles("(0 1", 4)
    with pytest.raises(ValueError):
        perm_from_cycles("(0 9)", 4)
    with pytest.raises(ValueError):
        perm_from_cycles("(0 1 0)", 4)


def test_product_and_inverse():
    a = perm_from_cycles("(0 1 2)", 3)
    assert pmul(a, pinv(a)) == identity(3)
    b = perm_from_cycles("(0 1)", 3)
    # left-to-right composition: apply a first
    assert pmul(a, b)[0] == b[a[0]]


# ---------------------------------------------------------------------------
# construction and BSGS order


@pytest.mark.parametrize(
    "spec,order",
    [
        ("alt:5", 60),
        ("alt:6", 360),
        ("alt:7", 2520),
        ("sym:4", 24),
        ("sym:6", 720),
        ("cyclic:12", 12),
        ("dihedral:7", 14),
        ("psl2:4", 60),
        ("psl2:5", 60),
        ("psl2:7", 168),
        ("psl2:8", 504),
        ("psl2:9", 360),
        ("psl2:11", 660),
        ("psl2:13", 1092),
        ("product:psl2:7xcyclic:2", 336),
        ("raw:5:(0 1 2);(0 1)(3 4)", 6),
    ],
)
def test_named_construction_orders(spec, order):
    assert construct_named(spec).order == order


def test_psl2_16_within_cap():
    G = construct_named("psl2:16")
    assert G.order == 4080
    ok, _ = brute_property(G, PrimeSet([3, 5]), "E")
    assert ok  # the cyclic torus of order q-1 = 15


def test_psl2_rejects_bad_q():
    with pytest.raises(ValueError):
        construct_named("psl2:6")
    with pytest.raises(ValueError):
        construct_named("psl2:32")


def test_membership():
    G = construct_named("alt:5")
    assert perm_from_cycles("(0 1 2)", 5) in G
    assert perm_from_cycles("(0 1)", 5) not in G
    assert G.contains(identity(5))


def test_product_acts_on_disjoint_points():
    G = construct_named("product:psl2:7xcyclic:2")
    assert G.degree == 10


# ---------------------------------------------------------------------------
# lattice enumeration


def test_cyclic_6_lattice():
    classes = enumerate_subgroups(construct_named("cyclic:6"))
    assert [(c.order, c.class_size) for c in classes] == [
        (1, 1), (2, 1), (3, 1), (6, 1),
    ]


def test_alt5_lattice_classes():
    classes = enumerate_subgroups(construct_named("alt:5"))
    assert [(c.order, c.class_size) for c in classes] == [
        (1, 1), (2, 15), (3, 10), (4, 5), (5, 6), (6, 10), (10, 6), (12, 5), (60, 1),
    ]


def test_alt5_lattice_against_pair_closure_oracle():
    """Independent completeness check: every subgroup of A5 is generated by
    at most two elements, so closing all element pairs enumerates the full
    set of subgroups."""
    from hallpi.perm_engine import _coset_closure

    G = construct_named("alt:5")
    ident = identity(5)
    subgroups = set()
    for a in G.elements():
        single = _coset_closure(frozenset([ident]), [], a)
        subgroups.add(single)
        for b in G.elements():
            subgroups.add(_coset_closure(single, [a], b))
    assert len(subgroups) == sum(c.class_size for c in enumerate_subgroups(G))


def test_lagrange_and_representative_consistency():
    for spec in ("sym:4", "psl2:7", "dihedral:6"):
        G = construct_named(spec)
        for c in enumerate_subgroups(G):
            assert G.order % c.order == 0
            assert c.representative.order == c.order
            assert all(g in G for g in c.representative.generators)


def test_enumeration_refuses_above_cap():
    with pytest.raises(OrderLimitError, match="25000"):
        enumerate_subgroups(construct_named("sym:9"))
    with pytest.raises(OrderLimitError, match="50"):
        enumerate_subgroups(construct_named("alt:5"), order_bound=50)


def test_lattice_dump_format():
    dump = lattice_dump(construct_named("cyclic:6"))
    lines = dump.splitlines()
    assert lines[0] == "order=1 class_size=1 gens=()"
    assert all(line.startswith("order=") for line in lines)


# ---------------------------------------------------------------------------
# Sylow and Hall cross-checks


@pytest.mark.parametrize("spec", ["alt:5", "sym:4", "psl2:7", "psl2:11"])
def test_sylow_cross_check(spec):
    G = construct_named(spec)
    order = G.order
    for t in (2, 3, 5, 7, 11):
        if order % t:
            continue
        ok, _ = brute_property(G, PrimeSet([t]), "D")
        assert ok
        sylow_order = 1
        rest = order
        while rest % t == 0:
            rest //= t
            sylow_order *= t
        count = sum(
            c.class_size for c in enumerate_subgroups(G) if c.order == sylow_order
        )
        assert count % t == 1


def test_hall_subgroups_of_psl2_7():
    G = construct_named("psl2:7")
    halls = pi_hall_subgroups(G, PrimeSet([3, 7]))
    assert [c.order for c in halls] == [21]
    assert maximal_pi_subgroups(G, PrimeSet([3, 7]))[0].order == 21


# ---------------------------------------------------------------------------
# brute properties


def test_psl2_7_d_and_u_hold():
    G = construct_named("psl2:7")
    for prop in ("E", "C", "D", "U"):
        ok, _ = brute_property(G, PrimeSet([3, 7]), prop)
        assert ok


def test_alt5_23_fails_d_with_witness():
    G = construct_named("alt:5")
    ok, witness = brute_property(G, PrimeSet([2, 3]), "D")
    assert not ok
    orders = sorted(w["order"] for w in witness["witness_pair"])
    assert orders == [6, 12]  # S3 and A4 are non-conjugate maximal {2,3}-subgroups
    # yet a {2,3}-Hall subgroup (A4) exists and is unique up to conjugacy
    assert brute_property(G, PrimeSet([2, 3]), "E")[0]
    assert brute_property(G, PrimeSet([2, 3]), "C")[0]


def test_psl2_11_35_has_no_hall():
    G = construct_named("psl2:11")
    ok, witness = brute_property(G, PrimeSet([3, 5]), "E")
    assert not ok and witness["target"] == 15


def test_brute_rejects_unknown_property():
    with pytest.raises(ValueError):
        brute_property(construct_named("alt:5"), PrimeSet([3]), "Q")


def test_d_definition_equivalence():
    """Single-maximal-class D must agree with 'C plus every pi-subgroup
    inside a Hall subgroup' on every tested instance."""
    cases = [
        ("alt:5", (2, 3)),
        ("alt:5", (2, 5)),
        ("alt:5", (3, 5)),
        ("sym:4", (2, 3)),
        ("psl2:7", (3, 7)),
        ("psl2:7", (2, 3)),
        ("psl2:11", (3, 5)),
        ("psl2:11", (5, 11)),
        ("psl2:13", (3, 13)),
        ("dihedral:15", (3, 5)),
    ]
    for spec, pi in cases:
        G = construct_named(spec)
        direct, _ = brute_property(G, PrimeSet(pi), "D")
        assert direct == brute_d_via_hall_containment(G, PrimeSet(pi))


def test_lemma_2a_hall_intersects_normal_subgroups():
    """H a pi-Hall subgroup of G, A normal in G: H cap A is pi-Hall in A."""
    from hallpi.arith import pi_part

    for spec, pi in [("sym:4", (2, 3)), ("sym:4", (3,)), ("alt:5", (2, 3))]:
        G = construct_named(spec)
        ps = PrimeSet(pi)
        classes = enumerate_subgroups(G)
        normals = [c for c in classes if c.class_size == 1]
        halls = pi_hall_subgroups(G, ps)
        for h in halls:
            for a in normals:
                inter = h.rep_set & a.rep_set
                assert len(inter) == pi_part(a.order, ps)


def test_lemma_2d_e_iff_c_for_odd_pi():
    for spec in ("alt:5", "sym:4", "psl2:7", "psl2:11", "dihedral:15"):
        G = construct_named(spec)
        odd = [t for t in (3, 5, 7, 11) if G.order % t == 0]
        for i, s in enumerate(odd):
            for t in odd[i + 1 :]:
                pi = PrimeSet([s, t])
                assert (
                    brute_property(G, pi, "E")[0] == brute_property(G, pi, "C")[0]
                )


def test_lemma_2e_nilpotent_hall_implies_d():
    """A cyclic (hence nilpotent) Hall subgroup forces D."""
    G = construct_named("dihedral:15")  # C15 is a cyclic {3,5}-Hall subgroup
    ok, _ = brute_property(G, PrimeSet([3, 5]), "D")
    assert ok


def test_star_property_on_psl2_13():
    G = construct_named("psl2:13")
    ok, _ = brute_property(G, PrimeSet([3, 7]), "star")
    assert ok


def test_u_follows_d_on_desk_cases():
    for spec, pi in [("psl2:7", (3, 7)), ("psl2:13", (3, 13)), ("alt:5", (2, 5))]:
        G = construct_named(spec)
        d, _ = brute_property(G, PrimeSet(pi), "D")
        if d:
            u, witness = brute_property(G, PrimeSet(pi), "U")
            assert u, witness
