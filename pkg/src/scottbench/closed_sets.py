"""The lattice of closed sets of a finite Scott space and the maps into it.

For a finite poset the Scott closed sets are exactly the down-sets, so the
lattice is materialized as a family of masks ordered by inclusion.  The
adjunction between the opens of the base and the opens of this lattice is
checked by streaming upper-set families of the lattice; those families are
never materialized as a family-of-families.
"""

import random
from dataclasses import dataclass

from .bits import bits, mask_of
from .errors import (
    MaterializationCapExceeded,
    NotAnOpen,
    WitnessNotFound,
)
from .finspace import topology_space
from .maps import GaloisPair, MonotoneMap, check_galois, is_continuous
from .orderprops import profile
from .poset import SIZE_CAP, SetFamily, Subset, lattice_ops, power


class DownSetLattice:
    """All down-sets of a base poset, ordered by inclusion."""

    def __init__(self, base, elements, poset):
        self.base = base
        self.elements = elements  # sorted masks; index 0 is the empty set
        self.poset = poset
        self.index = {m: i for i, m in enumerate(elements)}

    def __len__(self):
        return len(self.elements)

    @property
    def bottom(self):
        return self.index[0]

    @property
    def top(self):
        return self.index[self.base.full]

    def family(self):
        return SetFamily(self.base.n, self.elements)


def down_set_lattice(P, name=None):
    """Materialize the closed-set lattice of the Scott space of P."""
    masks = P.downsets()
    if len(masks) > SIZE_CAP:
        raise MaterializationCapExceeded(
            f"{len(masks)} down-sets exceed the lattice cap {SIZE_CAP}"
        )
    fam = SetFamily(P.n, masks)
    poset = fam.as_poset(name=name or (f"Gamma({P.name})" if P.name else None))
    gl = DownSetLattice(P, masks, poset)
    ops = lattice_ops(poset)
    assert ops.is_complete and ops.bottom == gl.bottom and ops.top == gl.top
    # closure under pairwise unions and intersections makes it a complete
    # sublattice of the powerset
    for a in masks:
        for b in masks:
            assert a | b in gl.index and a & b in gl.index
    return gl


def point_closure_map(gl):
    """x maps to the closure of the point x, i.e. its principal down-set."""
    table = tuple(gl.index[gl.base.dn[x]] for x in range(gl.base.n))
    m = MonotoneMap(gl.base, gl.poset, table)
    assert is_continuous(m)
    return m


def diamond(gl, u):
    """Closed sets meeting the open u, as a subset of lattice indices."""
    um = u.bits if isinstance(u, Subset) else u
    if not gl.base.is_upset(um):
        raise NotAnOpen("diamond needs an open of the base space")
    return Subset(
        len(gl.elements),
        mask_of(i for i, a in enumerate(gl.elements) if a & um),
    )


def open_points(gl, fam):
    """Points whose closure lies in the open family of the lattice.

    This is the preimage of the family under the point-closure map; with the
    diamond map it forms the adjunction between the two opens lattices.
    """
    fm = fam.bits if isinstance(fam, Subset) else fam
    if not gl.poset.is_upset(fm):
        raise NotAnOpen("expected a Scott-open family of closed sets")
    out = mask_of(
        x for x in range(gl.base.n) if fm >> gl.index[gl.base.dn[x]] & 1
    )
    return Subset(gl.base.n, out)


def _upset_stream(poset, exhaustive_cap, samples, seed):
    """Opens of the lattice to quantify over: everything when small, else
    principal filters plus seeded random unions."""
    n = poset.n
    if 2**n <= exhaustive_cap:
        yield from poset.iter_upsets()
        return
    yield 0
    yield poset.full
    for i in range(n):
        yield poset.up[i]
    rng = random.Random(seed)
    for _ in range(samples):
        m = 0
        for _ in range(rng.randint(2, 4)):
            m |= poset.up[rng.randrange(n)]
        yield m


@dataclass(frozen=True)
class AdjunctionReport:
    identity_holds: bool
    deflation_holds: bool
    families_checked: int
    strict_example: tuple | None
    violation: tuple | None


def adjunction_report(gl, exhaustive_cap=2**16, samples=32, seed=0):
    """Laws of the adjoint pair (diamond below, open_points above).

    open_points(diamond(u)) must give back every open u, and
    diamond(open_points(F)) must deflate every Scott-open family F, with at
    least one strict deflation recorded when present.  The streamed families
    also get the pointwise biconditional diamond(u) <= F iff u <= points(F).
    """
    base = gl.base
    opens = list(base.iter_upsets())
    diamonds = {u: diamond(gl, u).bits for u in opens}
    identity = True
    violation = None
    for u in opens:
        if open_points(gl, diamonds[u]).bits != u:
            identity = False
            violation = ("identity", u)
            break
    deflation = True
    strict = None
    checked = 0
    for fam in _upset_stream(gl.poset, exhaustive_cap, samples, seed):
        checked += 1
        pts = open_points(gl, fam)
        back = diamond(gl, pts.bits).bits
        if back & ~fam:
            deflation = False
            violation = violation or ("deflation", tuple(bits(fam)))
            break
        if strict is None and back != fam:
            strict = (tuple(bits(fam)), tuple(bits(back)))
        for u in opens:
            if (diamonds[u] & ~fam == 0) != (u & ~pts.bits == 0):
                violation = violation or ("biconditional", tuple(bits(u)), tuple(bits(fam)))
                deflation = False
                break
    return AdjunctionReport(identity, deflation, checked, strict, violation)


def diamond_preserves_unions(gl):
    """Unions of opens pass through the diamond map."""
    opens = list(gl.base.iter_upsets())
    for u in opens:
        for v in opens:
            if diamond(gl, u | v).bits != (diamond(gl, u).bits | diamond(gl, v).bits):
                return (u, v)
    return None


def union_of_downsets(gl, xs):
    """Index of the union of the principal down-sets of the tuple xs."""
    m = 0
    for x in xs:
        m |= gl.base.dn[x]
    return gl.index[m]


def union_of_downsets_map(gl, arity):
    """The tuple map as a monotone map from the arity-fold product."""
    base = gl.base
    prod = power(base, arity)
    table = []
    for code in range(base.n**arity):
        xs = []
        c = code
        for _ in range(arity):
            xs.append(c % base.n)
            c //= base.n
        xs.reverse()
        table.append(union_of_downsets(gl, xs))
    return MonotoneMap(prod, gl.poset, tuple(table))


@dataclass(frozen=True)
class DiamondWitness:
    finite_set: Subset
    opens: tuple
    intersection: Subset


def diamond_basis_witness(gl, fam, a_idx):
    """Express membership of a closed set in a Scott-open family through a
    finite intersection of diamonds.

    For a nonempty closed set A the maximal elements F of A give diamonds of
    their principal filters whose intersection contains A and sits inside the
    family; the empty set only belongs to the full family, whose witness is
    the empty intersection.
    """
    fm = fam.bits if isinstance(fam, Subset) else fam
    if not gl.poset.is_upset(fm):
        raise NotAnOpen("witness needs a Scott-open family")
    if not fm >> a_idx & 1:
        raise WitnessNotFound("the closed set is not in the family")
    full = (1 << len(gl.elements)) - 1
    a = gl.elements[a_idx]
    if a == 0:
        if fm != full:
            raise WitnessNotFound("empty set in a proper open family")
        return DiamondWitness(
            Subset(gl.base.n, 0), (), Subset(len(gl.elements), full)
        )
    f = gl.base.maximal_of(a)
    opens = tuple(Subset(gl.base.n, gl.base.up[x]) for x in bits(f))
    inter = full
    for u in opens:
        inter &= diamond(gl, u.bits).bits
    if not (inter >> a_idx & 1 and inter & ~fm == 0):
        raise WitnessNotFound("maximal-element witness failed to verify")
    return DiamondWitness(Subset(gl.base.n, f), opens, Subset(len(gl.elements), inter))


@dataclass(frozen=True)
class VietorisReport:
    principal_ok: bool
    families_checked: int
    witnesses: int
    failure: tuple | None


def scott_equals_vietoris(gl, exhaustive_cap=2**16, samples=16, seed=0):
    """Constructive comparison of the two topologies on the lattice.

    Every streamed Scott-open family must be the union of the diamond
    intersections produced by the witness extractor, which exactly says the
    Scott topology is included in (hence equal to) the lower Vietoris one.
    """
    checked = 0
    witnesses = 0
    for fam in _upset_stream(gl.poset, exhaustive_cap, samples, seed):
        checked += 1
        cover = 0
        for a_idx in bits(fam):
            w = diamond_basis_witness(gl, fam, a_idx)
            witnesses += 1
            cover |= w.intersection.bits
        if cover != fam and fam != 0:
            return VietorisReport(False, checked, witnesses, ("cover", fam))
        if fam == 0 and cover != 0:
            return VietorisReport(False, checked, witnesses, ("empty", cover))
    return VietorisReport(True, checked, witnesses, None)


# -- the adjunction on a distributive lattice ------------------------------------


@dataclass(frozen=True)
class ComplementAdjunctionReport:
    into_opens: MonotoneMap  # x -> complement of its principal filter
    from_opens: MonotoneMap  # left adjoint recovering the point
    distributive: bool
    identity_holds: bool
    deflation_holds: bool
    galois: object | None
    join_preservation_witness: int | None
    warning: str | None


def filter_complement_adjunction(L, subset_oracle_cap=12):
    """The pair I(x) = complement of the filter of x and its left adjoint J.

    J of a down-set U joins the meets of all finite sets whose upper closure
    covers the complement of U; candidates are restricted to antichains, and
    the unrestricted subset definition is asserted equal on small lattices.
    """
    ops = lattice_ops(L)
    if not (ops.is_lattice and L.n):
        from .errors import NotALattice

        raise NotALattice("the adjunction needs a nonempty lattice")
    # down-sets of L are the opens of the dual Scott space
    sigma_op = down_set_lattice(L)
    n = L.n

    def j_value(u_mask, antichains_only=True):
        k = L.full & ~u_mask
        best = None
        for f in range(1 << n):
            if antichains_only and L.minimal_of(f) != f:
                continue
            if k & ~L.up_closure_mask(f):
                continue
            meet = ops.meet_of(f)
            best = meet if best is None else ops.join[best][meet]
        return best if best is not None else ops.bottom

    i_table = tuple(sigma_op.index[L.full & ~L.up[x]] for x in range(n))
    j_table = tuple(j_value(m) for m in sigma_op.elements)
    if n <= subset_oracle_cap:
        assert j_table == tuple(
            j_value(m, antichains_only=False) for m in sigma_op.elements
        )
    I = MonotoneMap(L, sigma_op.poset, i_table)
    J = MonotoneMap(sigma_op.poset, L, j_table)

    identity = all(J(I(x)) == x for x in range(n))
    deflation = all(
        sigma_op.poset.leq(I(J(u)), u) for u in range(len(sigma_op.elements))
    )
    w = _distributive_witness_or_none(L, ops)
    distributive = w is None
    # I is the lower adjoint (it preserves unions of complements of filters)
    # and J the upper one; J preserving joins as well is what distributivity
    # buys, so it is reported separately instead of as part of the pair laws.
    galois = check_galois(GaloisPair(lower=I, upper=J))
    from .maps import preserves_joins

    join_witness = preserves_joins(J)
    warning = None
    if not distributive:
        warning = f"not distributive (witness {w}); join preservation not asserted"
    return ComplementAdjunctionReport(
        I, J, distributive, identity, deflation, galois, join_witness, warning
    )


def _distributive_witness_or_none(L, ops):
    for a in range(L.n):
        for b in range(L.n):
            for c in range(L.n):
                if ops.meet[a][ops.join[b][c]] != ops.join[ops.meet[a][b]][ops.meet[a][c]]:
                    return (a, b, c)
    return None


# -- correspondence reports --------------------------------------------------------


@dataclass(frozen=True)
class CorrespondenceReport:
    base_flags: dict
    lattice_flags: dict
    biconditionals: dict

    @property
    def all_hold(self):
        return all(self.biconditionals.values())


def correspondence_report(P):
    """Approximation properties of P against those of its closed-set lattice."""
    gl = down_set_lattice(P)
    pp = profile(P)
    pg = profile(gl.poset)
    names = ("continuous", "quasicontinuous", "algebraic", "quasialgebraic")
    base = {k: pp.flag(k) for k in names}
    latt = {k: pg.flag(k) for k in names}
    return CorrespondenceReport(
        base, latt, {k: base[k] == latt[k] for k in names}
    )


@dataclass(frozen=True)
class CoreCompactReport:
    base_core_compact: bool
    lattice_sober: bool
    lattice_locally_compact: bool
    topologies_coincide: bool

    @property
    def all_arms_agree(self):
        return (
            self.base_core_compact
            == self.lattice_sober
            == self.lattice_locally_compact
            == self.topologies_coincide
        )


def core_compact_report(P, exhaustive_cap=2**12):
    """Core-compactness of the base against sobriety, local compactness and
    topology coincidence on the closed-set lattice."""
    from .finspace import compactness, sobriety

    gl = down_set_lattice(P)
    base_cc = compactness(topology_space(P)).is_core_compact
    gspace = topology_space(gl.poset)
    sob = sobriety(gspace).is_sober
    lc = compactness(gspace, core_compact_cap=0).is_locally_compact
    sv = scott_equals_vietoris(gl, exhaustive_cap=exhaustive_cap).principal_ok
    return CoreCompactReport(bool(base_cc), sob, lc, sv)
