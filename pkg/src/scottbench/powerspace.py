"""Lower and upper powerspaces, consonance, and their interaction.

The lower powerspace lives on the closed sets with the topology generated by
the diamond sets, the upper one on the compact saturated sets with the box
sets as a basis.  Both are returned through their specialization posets, with
the generated topology checked against the expected order when small enough.
"""

import itertools
from dataclasses import dataclass

from .bits import bits, full_mask, mask_of
from .canonical import is_isomorphic
from .errors import (
    ConsonanceCapExceeded,
    MaterializationCapExceeded,
    NotAnOpen,
    NotSaturated,
)
from .finspace import (
    FinSpace,
    closed_family,
    compactness,
    generate_topology,
    opens_family,
    saturated_family,
    specialization_from_subbasis,
)
from .maps import MonotoneMap, is_continuous
from .poset import SIZE_CAP, SetFamily, Subset, power

FULL_TOPOLOGY_CHECK_CAP = 16
CONSONANCE_SCAN_CAP = 2**16
SAFE_OPENS_FOR_CONSONANCE = 16


@dataclass(frozen=True)
class Powerspace:
    base: FinSpace
    ground: SetFamily  # closed sets (lower) or compact saturated sets (upper)
    space: FinSpace
    kind: str


def diamond_open(X, ground, u):
    """Subset of ground indices whose member meets the open u."""
    um = u.bits if isinstance(u, Subset) else u
    if not X.is_open(um):
        raise NotAnOpen("diamond needs an open set")
    return Subset(
        len(ground), mask_of(i for i, c in enumerate(ground.masks) if c & um)
    )


def box_open(X, ground, u):
    """Subset of ground indices contained in the open u."""
    um = u.bits if isinstance(u, Subset) else u
    if not X.is_open(um):
        raise NotAnOpen("box needs an open set")
    return Subset(
        len(ground), mask_of(i for i, k in enumerate(ground.masks) if k & ~um == 0)
    )


def lower_powerspace(X):
    """Closed sets with the topology generated by the diamond subbasis."""
    ground = closed_family(X)
    k = len(ground)
    if k > SIZE_CAP:
        raise MaterializationCapExceeded(f"{k} closed sets exceed cap {SIZE_CAP}")
    opens = opens_family(X)
    subbasis = [diamond_open(X, ground, u).bits for u in opens.masks]
    spec = specialization_from_subbasis(k, subbasis)
    inclusion = ground.as_poset()
    assert spec.up == inclusion.up, "lower powerspace must specialize to inclusion"
    verified = None
    if k <= FULL_TOPOLOGY_CHECK_CAP:
        generated = generate_topology(k, subbasis, cap=2**k)
        verified = generated == tuple(sorted(inclusion.iter_upsets()))
    return Powerspace(X, ground, FinSpace(inclusion, "lower-vietoris", verified), "lower")


def upper_powerspace(X):
    """Compact saturated sets with the box sets as a basis."""
    ground = saturated_family(X)
    k = len(ground)
    if k > SIZE_CAP:
        raise MaterializationCapExceeded(f"{k} saturated sets exceed cap {SIZE_CAP}")
    opens = opens_family(X)
    basis = [box_open(X, ground, u).bits for u in opens.masks]
    spec = specialization_from_subbasis(k, basis)
    reverse = ground.as_poset().opposite()
    assert spec.up == reverse.up, "upper powerspace must specialize to reverse inclusion"
    verified = None
    if k <= FULL_TOPOLOGY_CHECK_CAP:
        generated = generate_topology(k, basis, cap=2**k)
        verified = generated == tuple(sorted(reverse.iter_upsets()))
    return Powerspace(X, ground, FinSpace(reverse, "upper-vietoris", verified), "upper")


def neighborhood_filter(X, K):
    """Opens containing the saturated set K, as indices into the opens family.

    The intersection of the filter gives K back, and the filter is Scott open
    (an upper set) in the opens lattice.
    """
    km = K.bits if isinstance(K, Subset) else K
    if not X.spec.is_upset(km):
        raise NotSaturated("filter needs a saturated (upper) set")
    opens = opens_family(X)
    idx = mask_of(i for i, u in enumerate(opens.masks) if km & ~u == 0)
    meet = X.spec.full
    for i in bits(idx):
        meet &= opens.masks[i]
    assert meet == km, "the neighborhood filter must intersect to its set"
    lattice = opens.as_poset()
    assert lattice.is_upset(idx)
    return Subset(len(opens), idx)


def diamond_intersection(X, opens_tuple, check_continuity=False):
    """Intersection of the diamonds of the given opens: a basic lower open."""
    ground = closed_family(X)
    out = full_mask(len(ground))
    for u in opens_tuple:
        out &= diamond_open(X, ground, u).bits
    if check_continuity:
        assert diamond_map_continuous(X, len(opens_tuple))
    return Subset(len(ground), out)


def diamond_map_continuous(X, arity):
    """The tuple-of-opens map is continuous from the product of the opens
    lattices into the Scott space of the lower Vietoris opens lattice."""
    opens = opens_family(X)
    lattice = opens.as_poset()
    ground = closed_family(X)
    ps = lower_powerspace(X)
    ps_opens = opens_family(ps.space)
    codomain = ps_opens.as_poset()
    prod = power(lattice, arity)
    table = []
    for combo in itertools.product(range(len(opens)), repeat=arity):
        m = full_mask(len(ground))
        for i in combo:
            m &= diamond_open(X, ground, opens.masks[i]).bits
        table.append(ps_opens.index[m])
    return is_continuous(MonotoneMap(prod, codomain, tuple(table)))


@dataclass(frozen=True)
class ConsonanceReport:
    consonant: bool
    families_scanned: int
    witnesses: tuple  # (family mask, open index, compact index)
    failure: tuple | None


def is_consonant(X, scan_cap=CONSONANCE_SCAN_CAP):
    """Exhaustive consonance check.

    For every Scott-open family of opens and every member open there must be
    a compact saturated set squeezing between them; the scan aborts loudly
    beyond the cap, because a sampled verdict is not evidence.
    """
    opens = opens_family(X)
    lattice = opens.as_poset()
    q = saturated_family(X)
    phi = [neighborhood_filter(X, k).bits for k in q.masks]
    witnesses = []
    scanned = 0
    for fam in lattice.iter_upsets():
        scanned += 1
        if scanned > scan_cap:
            raise ConsonanceCapExceeded(
                f"more than {scan_cap} Scott-open families of opens"
            )
        for uidx in bits(fam):
            found = None
            for kidx, kmask in enumerate(q.masks):
                if phi[kidx] >> uidx & 1 and phi[kidx] & ~fam == 0:
                    found = kidx
                    break
            if found is None:
                return ConsonanceReport(
                    False, scanned, tuple(witnesses), (tuple(bits(fam)), uidx)
                )
            witnesses.append((tuple(bits(fam)), uidx, found))
    return ConsonanceReport(True, scanned, tuple(witnesses), None)


@dataclass(frozen=True)
class TransferReport:
    base_consonant: bool
    lower_consonant: bool
    transfer_holds: bool
    basic_opens_checked: int
    witness_failures: tuple


def consonance_transfer(X, max_arity=2):
    """Consonance must carry over to the lower powerspace.

    Both consonance checks run, and the proof machinery is exercised: for a
    basic lower open (an intersection of diamonds) the compact witnesses of
    the member opens combine into a compact set of closed sets whose
    neighborhood filter contains the basic open.
    """
    base = is_consonant(X)
    ps = lower_powerspace(X)
    lower = is_consonant(ps.space)
    transfer = (not base.consonant) or lower.consonant

    opens = opens_family(X)
    q = saturated_family(X)
    phi = [neighborhood_filter(X, k).bits for k in q.masks]
    witness_for = {}
    for uidx, u in enumerate(opens.masks):
        principal = mask_of(
            j for j, v in enumerate(opens.masks) if u & ~v == 0
        )
        for kidx in range(len(q.masks)):
            if phi[kidx] >> uidx & 1 and phi[kidx] & ~principal == 0:
                witness_for[uidx] = kidx
                break

    ground = ps.ground
    checked = 0
    failures = []
    for arity in range(1, max_arity + 1):
        for combo in itertools.combinations(range(len(opens)), arity):
            checked += 1
            basic = full_mask(len(ground))
            for uidx in combo:
                basic &= diamond_open(X, ground, opens.masks[uidx]).bits
            compactly = full_mask(len(ground))
            ok = True
            for uidx in combo:
                kidx = witness_for.get(uidx)
                if kidx is None:
                    ok = False
                    break
                kmask = q.masks[kidx]
                compactly &= mask_of(
                    i for i, c in enumerate(ground.masks) if c & kmask
                )
            if not ok:
                failures.append(combo)
                continue
            # the combined witness is saturated in the powerspace and its
            # neighborhood filter contains the basic open
            if not ps.space.spec.is_upset(compactly) or compactly & ~basic:
                failures.append(combo)
    return TransferReport(
        base.consonant, lower.consonant, transfer and not failures, checked, tuple(failures)
    )


@dataclass(frozen=True)
class CommutationReport:
    commutes: bool
    iso: tuple | None
    invariants: tuple  # ((n, degree multiset) per side)


def commutes(X):
    """Compare the two double powerspaces up to homeomorphism.

    Finite spaces are homeomorphic exactly when their specialization posets
    are isomorphic, so the check reduces to poset isomorphism.
    """
    a = upper_powerspace(lower_powerspace(X).space).space.spec
    b = lower_powerspace(upper_powerspace(X).space).space.spec
    iso = is_isomorphic(a, b)
    inv = tuple(
        (p.n, tuple(sorted(r.bit_count() for r in p.up))) for p in (a, b)
    )
    return CommutationReport(iso is not None, tuple(iso) if iso else None, inv)


@dataclass(frozen=True)
class PowerspaceReport:
    """Both powerspaces of one subject plus the derived verdicts."""

    subject: FinSpace
    lower: FinSpace
    upper: FinSpace
    consonant: ConsonanceReport
    commutation: CommutationReport | None


def powerspace_report(X, with_commutation=True):
    lower = lower_powerspace(X)
    upper = upper_powerspace(X)
    commutation = None
    if with_commutation:
        try:
            commutation = commutes(X)
        except MaterializationCapExceeded:
            commutation = None
    return PowerspaceReport(X, lower.space, upper.space, is_consonant(X), commutation)


@dataclass(frozen=True)
class LocalCompactnessReport:
    locally_compact: bool
    core_compact: bool
    consonant: bool

    @property
    def biconditional_holds(self):
        return self.locally_compact == (self.core_compact and self.consonant)


def local_compactness_report(X):
    """Local compactness against core-compactness plus consonance, each by
    its own routine."""
    comp = compactness(X)
    cons = is_consonant(X)
    return LocalCompactnessReport(
        comp.is_locally_compact, bool(comp.is_core_compact), cons.consonant
    )
