import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scottbench.bits import mask_of
from scottbench.errors import (
    CycleDetected,
    GroundMismatch,
    IndexOutOfRange,
    NotAPartialOrder,
    SizeCapExceeded,
    UnknownName,
)
from scottbench.poset import (
    SIZE_CAP,
    SetFamily,
    Subset,
    antichain,
    boolean,
    build_poset,
    chain,
    down_closure,
    ladder,
    lattice_ops,
    m3,
    n5,
    named_poset,
    opposite,
    product,
    up_closure,
)


def test_build_chain_from_covers():
    P = build_poset(3, [(0, 1), (1, 2)], "covers")
    assert P.leq(0, 2) and P.leq(0, 1) and not P.leq(2, 0)
    assert P.up == (0b111, 0b110, 0b100)


def test_build_antichain():
    P = build_poset(2, [], "covers")
    assert P.up == (0b01, 0b10)


def test_cycle_detected():
    with pytest.raises(CycleDetected):
        build_poset(2, [(0, 1), (1, 0)], "covers")


def test_full_mode_validates():
    P = build_poset(2, [(0, 1)], "full")
    assert P.leq(0, 1)
    with pytest.raises(NotAPartialOrder):
        build_poset(3, [(0, 1), (1, 2)], "full")  # missing (0, 2)
    with pytest.raises(CycleDetected):
        build_poset(2, [(0, 1), (1, 0)], "full")


def test_index_and_cap_errors():
    with pytest.raises(IndexOutOfRange):
        build_poset(2, [(0, 5)])
    with pytest.raises(SizeCapExceeded):
        build_poset(SIZE_CAP + 1, [])


def test_down_closure_examples():
    assert down_closure(chain(3), Subset.of(3, [2])).members() == (0, 1, 2)
    assert down_closure(antichain(2), Subset.of(2, [0])).members() == (0,)
    # bottom 0, a=1, top 4; 0 < 2 < 3 < 4 the long side
    assert down_closure(n5(), Subset.of(5, [1, 3])).members() == (0, 1, 2, 3)


def test_up_closure_examples():
    assert up_closure(chain(3), Subset.of(3, [0])).members() == (0, 1, 2)
    assert up_closure(n5(), Subset.of(5, [2])).members() == (2, 3, 4)
    # duality through the opposite order
    for P in (chain(3), n5(), m3()):
        for m in range(1 << P.n):
            s = Subset(P.n, m)
            assert up_closure(P, s) == down_closure(P.opposite(), s)


def test_closure_ground_mismatch():
    with pytest.raises(GroundMismatch):
        down_closure(chain(3), Subset.of(2, [0]))
    with pytest.raises(GroundMismatch):
        up_closure(chain(3), Subset.of(4, [0]))


def test_closure_laws(small_posets):
    for P in small_posets:
        for m in range(1 << P.n):
            down = P.down_closure_mask(m)
            assert P.down_closure_mask(down) == down
            assert P.up_closure_mask(m) == P.opposite().down_closure_mask(m)
            bigger = m | (1 << (P.n - 1))
            assert down & ~P.down_closure_mask(bigger) == 0


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_closure_monotone_random(data):
    P = data.draw(st.sampled_from([chain(4), n5(), m3(), boolean(2), ladder(2, 2)]))
    a = data.draw(st.integers(0, P.full))
    b = data.draw(st.integers(0, P.full))
    small, large = a & b, a | b
    assert P.down_closure_mask(small) & ~P.down_closure_mask(large) == 0


def test_lattice_ops_examples():
    c3 = lattice_ops(chain(3))
    assert c3.is_lattice and c3.top == 2 and c3.bottom == 0 and c3.is_complete
    a2 = lattice_ops(antichain(2))
    assert not a2.is_lattice and a2.witness == (0, 1)
    lm3 = lattice_ops(m3())
    assert lm3.is_lattice
    assert lm3.join[1][2] == 4 and lm3.meet[1][2] == 0


def test_lattice_laws_small(posets_to_5):
    for P in posets_to_5:
        ops = lattice_ops(P)
        if not ops.is_lattice:
            continue
        j, m = ops.join, ops.meet
        for a in range(P.n):
            for b in range(P.n):
                assert j[a][b] == j[b][a] and m[a][b] == m[b][a]
                assert j[a][m[a][b]] == a and m[a][j[a][b]] == a
                for c in range(P.n):
                    assert j[j[a][b]][c] == j[a][j[b][c]]
                    assert m[m[a][b]][c] == m[a][m[b][c]]


def test_product_and_opposite():
    b2 = product(chain(2), chain(2))
    assert lattice_ops(b2).is_lattice and b2.n == 4
    rev = opposite(chain(3))
    assert rev.leq(2, 0) and not rev.leq(0, 2)
    assert opposite(rev).up == chain(3).up
    two_chains = product(antichain(2), chain(2))
    assert two_chains.n == 4
    assert sum(two_chains.leq(i, j) for i in range(4) for j in range(4) if i != j) == 2
    with pytest.raises(SizeCapExceeded):
        product(chain(9), chain(8))


def test_named_posets():
    lad = ladder(2, 2)
    assert lad.n == 6
    ops = lattice_ops(lad)
    assert ops.is_lattice
    bottom, top = ops.bottom, ops.top
    cols = [i for i in range(6) if i not in (bottom, top)]
    assert sorted(lad.covers) == sorted(
        [(bottom, 0), (bottom, 2), (0, 1), (2, 3), (1, top), (3, top)]
    )
    assert boolean(2).n == 4
    assert named_poset("chain", 4).up == chain(4).up
    assert named_poset("M3").up == m3().up
    with pytest.raises(UnknownName):
        named_poset("zigzag", 3)
    with pytest.raises(UnknownName):
        named_poset("chain")


def test_minimal_maximal_and_directed():
    P = n5()
    assert P.minimal_of(P.full) == 1 << 0
    assert P.maximal_of(P.full) == 1 << 4
    assert P.is_directed(mask_of([0, 1, 4]))
    assert not P.is_directed(0)
    assert not P.is_directed(mask_of([1, 2]))  # a vs b have no ub inside


def test_sup_inf():
    P = m3()
    assert P.sup_of(mask_of([1, 2])) == 4
    assert P.inf_of(mask_of([1, 2])) == 0
    assert P.sup_of(0) == 0  # empty sup is the bottom
    A = antichain(2)
    assert A.sup_of(mask_of([0, 1])) is None


def test_upset_enumeration(small_posets):
    for P in small_posets:
        ups = set(P.iter_upsets())
        naive = {m for m in range(1 << P.n) if P.is_upset(m)}
        assert ups == naive
        downs = set(P.iter_downsets())
        assert downs == {m for m in range(1 << P.n) if P.is_downset(m)}


def test_subset_and_family():
    s = Subset.of(4, [1, 3])
    assert 1 in s and 0 not in s and len(s) == 2
    with pytest.raises(IndexOutOfRange):
        Subset.of(2, [5])
    fam = SetFamily.of(3, [0b011, 0b001, 0b011])
    assert len(fam) == 2
    poset = fam.as_poset()
    assert poset.leq(fam.index[0b001], fam.index[0b011])
    with pytest.raises(ValueError):
        SetFamily(2, (0b01, 0b01))


def test_every_construction_path_yields_valid_order(small_posets):
    for P in small_posets:
        for Q in (
            P,
            P.opposite(),
            P.relabel(list(reversed(range(P.n)))),
            P.restrict(P.full & ~1 if P.n > 1 else P.full),
            product(P, chain(2)),
        ):
            Q._validate()  # reflexive, antisymmetric, transitive
