import pytest

from scottbench.canonical import canonical_form, is_isomorphic
from scottbench.enumeration import (
    ENUMERATION_CAP,
    LABELED_LATTICE_COUNTS,
    LABELED_POSET_COUNTS,
    UNLABELED_LATTICE_COUNTS,
    UNLABELED_POSET_COUNTS,
    enumerate_lattices,
    enumerate_posets,
    labeled_counts,
    orbit_counts,
)
from scottbench.errors import SizeCapExceeded
from scottbench.poset import lattice_ops


def test_single_point():
    ps = list(enumerate_posets(1))
    assert len(ps) == 1 and ps[0].n == 1


def test_counts_to_5():
    for n in range(1, 6):
        assert len(list(enumerate_posets(n))) == UNLABELED_POSET_COUNTS[n - 1]
        assert len(list(enumerate_lattices(n))) == UNLABELED_LATTICE_COUNTS[n - 1]


def test_representatives_are_canonical_and_distinct():
    reps = list(enumerate_posets(4))
    for P in reps:
        assert canonical_form(P).poset.up == P.up
    for i, P in enumerate(reps):
        for Q in reps[i + 1 :]:
            assert is_isomorphic(P, Q) is None


def test_deterministic_order():
    a = [P.up for P in enumerate_posets(5)]
    b = [P.up for P in enumerate_posets(5)]
    assert a == b == sorted(a)


def test_lattice_stream_is_filtered():
    for P in enumerate_lattices(5):
        assert lattice_ops(P).is_lattice


def test_labeled_oracle_small():
    posets, lattices = labeled_counts(5)
    assert posets == LABELED_POSET_COUNTS[:5]
    assert lattices == LABELED_LATTICE_COUNTS[:5]


def test_orbit_quotient_matches_labeled():
    for n in range(1, 6):
        assert orbit_counts(n) == (
            LABELED_POSET_COUNTS[n - 1],
            LABELED_LATTICE_COUNTS[n - 1],
        )


def test_direct_quotient_of_labeled_enumeration():
    # canonicalize every labeled poset on 4 elements; classes must match
    from scottbench.enumeration import _one_point_extensions
    from scottbench.poset import Poset

    seen = set()
    stack = [()]
    while stack:
        up = stack.pop()
        if len(up) == 4:
            seen.add(canonical_form(Poset(up, _checked=True)).poset.up)
            continue
        stack.extend(_one_point_extensions(up))
    assert len(seen) == UNLABELED_POSET_COUNTS[3]


def test_enumeration_cap():
    with pytest.raises(SizeCapExceeded):
        list(enumerate_posets(ENUMERATION_CAP + 1))
