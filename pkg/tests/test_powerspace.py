import pytest

from scottbench.errors import NotAnOpen, NotSaturated
from scottbench.finspace import closed_family, opens_family, saturated_family, topology_space
from scottbench.poset import antichain, chain, lattice_ops
from scottbench.powerspace import (
    box_open,
    commutes,
    consonance_transfer,
    diamond_intersection,
    diamond_map_continuous,
    diamond_open,
    is_consonant,
    local_compactness_report,
    lower_powerspace,
    neighborhood_filter,
    upper_powerspace,
)


def sierpinski():
    return topology_space(chain(2))


def spaces_upto(n):
    from scottbench.enumeration import posets_upto

    return [topology_space(P) for P in posets_upto(n)]


def test_lower_powerspace_sierpinski():
    ps = lower_powerspace(sierpinski())
    assert ps.ground.masks == (0, 0b01, 0b11)
    assert ps.space.spec.up == chain(3).up
    assert ps.space.opens_verified is True


def test_lower_powerspace_antichain():
    ps = lower_powerspace(topology_space(antichain(2)))
    assert len(ps.ground) == 4
    assert lattice_ops(ps.space.spec).is_lattice


def test_lower_powerspace_point():
    ps = lower_powerspace(topology_space(chain(1)))
    assert ps.ground.masks == (0, 1)
    assert ps.space.spec.up == chain(2).up


def test_upper_powerspace_sierpinski():
    ps = upper_powerspace(sierpinski())
    assert ps.ground.masks == (0, 0b10, 0b11)
    box = box_open(sierpinski(), ps.ground, 0b10)
    assert [ps.ground.masks[i] for i in box] == [0, 0b10]
    # empty set is the top under reverse inclusion
    top = lattice_ops(ps.space.spec).top
    assert ps.ground.masks[top] == 0


def test_upper_powerspace_discrete_two_points():
    ps = upper_powerspace(topology_space(antichain(2)))
    assert len(ps.ground) == 4


def test_specialization_orders_computed(spaces=None):
    for X in spaces_upto(4):
        lo = lower_powerspace(X)
        hi = upper_powerspace(X)
        inc = lo.ground.as_poset()
        assert lo.space.spec.up == inc.up
        assert hi.space.spec.up == hi.ground.as_poset().opposite().up


def test_diamond_box_laws():
    for X in spaces_upto(4):
        ground = closed_family(X)
        sats = saturated_family(X)
        opens = opens_family(X).masks
        for u in opens:
            for v in opens:
                du = diamond_open(X, ground, u).bits
                dv = diamond_open(X, ground, v).bits
                assert diamond_open(X, ground, u | v).bits == du | dv
                bu = box_open(X, sats, u).bits
                bv = box_open(X, sats, v).bits
                assert box_open(X, sats, u & v).bits == bu & bv


def test_diamond_rejects_non_open():
    X = sierpinski()
    with pytest.raises(NotAnOpen):
        diamond_open(X, closed_family(X), 0b01)


def test_neighborhood_filter_examples():
    X = sierpinski()
    opens = opens_family(X)
    phi = neighborhood_filter(X, 0b10)
    assert [opens.masks[i] for i in phi] == [0b10, 0b11]
    assert len(neighborhood_filter(X, 0)) == len(opens)
    assert [opens.masks[i] for i in neighborhood_filter(X, X.spec.full)] == [X.spec.full]
    with pytest.raises(NotSaturated):
        neighborhood_filter(X, 0b01)


def test_filter_intersection_recovers_compact():
    for X in spaces_upto(5):
        opens = opens_family(X)
        for k in saturated_family(X).masks:
            idx = neighborhood_filter(X, k)
            meet = X.spec.full
            for i in idx:
                meet &= opens.masks[i]
            assert meet == k


def test_consonance_examples():
    rep = is_consonant(sierpinski())
    assert rep.consonant and rep.families_scanned == 4
    assert is_consonant(topology_space(chain(1))).consonant
    for X in spaces_upto(4):
        assert is_consonant(X).consonant


def test_diamond_intersection_examples():
    X = sierpinski()
    ground = closed_family(X)
    out = diamond_intersection(X, (0b10, 0b11))
    assert [ground.masks[i] for i in out] == [0b11]
    assert diamond_intersection(X, (0b10,)).bits == diamond_open(X, ground, 0b10).bits
    assert diamond_intersection(X, (0b10, 0)).bits == 0
    assert diamond_map_continuous(X, 2)


def test_consonance_transfer():
    assert consonance_transfer(sierpinski()).transfer_holds
    assert consonance_transfer(topology_space(chain(1))).transfer_holds
    for X in spaces_upto(3):
        rep = consonance_transfer(X)
        assert rep.base_consonant and rep.lower_consonant and rep.transfer_holds


def test_commutes_examples():
    assert commutes(sierpinski()).commutes
    assert commutes(topology_space(antichain(2))).commutes
    for X in spaces_upto(3):
        rep = commutes(X)
        assert rep.commutes
        assert rep.iso is not None


def test_commutes_matches_consonance_at_three_points():
    for X in spaces_upto(3):
        assert commutes(X).commutes == is_consonant(X).consonant


def test_local_compactness_triangle():
    for X in spaces_upto(4):
        rep = local_compactness_report(X)
        assert rep.locally_compact and rep.core_compact and rep.consonant
        assert rep.biconditional_holds


def test_powerspace_report_type():
    from scottbench.powerspace import powerspace_report

    rep = powerspace_report(sierpinski())
    assert rep.lower.spec.up == chain(3).up
    assert rep.consonant.consonant
    assert rep.commutation is not None and rep.commutation.commutes
    # specialization orders: inclusion on closed sets, reverse inclusion on
    # compact saturated sets
    lo = lower_powerspace(sierpinski())
    hi = upper_powerspace(sierpinski())
    assert rep.lower.spec.up == lo.ground.as_poset().up
    assert rep.upper.spec.up == hi.ground.as_poset().opposite().up
