"""Finite T0 spaces and their topological predicates.

A finite topology is Alexandrov, so a space is stored as its specialization
poset and opens are exactly the upper sets.  The upper/lower/Lawson
constructors still build their topologies from subbases by explicit closure
(cap permitting); they are the cross-validation oracles for the up-set path.
"""

from dataclasses import dataclass, field

from .bits import bits, full_mask, mask_of
from .errors import MaterializationCapExceeded, NotAnOpen
from .poset import Poset, SetFamily, antichain

OPENS_CAP = 2**16
TOPOLOGY_CLOSURE_CAP = 1024


@dataclass(frozen=True)
class FinSpace:
    """Finite T0 space, represented by its specialization poset."""

    spec: Poset
    kind: str = "scott"
    opens_verified: bool | None = None

    @property
    def n(self):
        return self.spec.n

    def closure_mask(self, m):
        return self.spec.down_closure_mask(m)

    def interior_mask(self, m):
        """Largest open inside m: points whose minimal neighborhood fits."""
        return mask_of(i for i in bits(m) if self.spec.up[i] & ~m == 0)

    def is_open(self, m):
        return self.spec.is_upset(m)

    def is_closed(self, m):
        return self.spec.is_downset(m)


def generate_topology(n, subbasis, cap=TOPOLOGY_CLOSURE_CAP):
    """Close a subbasis under binary union and intersection, plus 0 and X.

    Explicit and slow on purpose; this is the oracle the Alexandrov fast
    paths are checked against.
    """
    family = {0, full_mask(n)}
    family.update(subbasis)
    frontier = list(family)
    while frontier:
        current = sorted(family)
        new = set()
        for a in current:
            for b in current:
                u, i = a | b, a & b
                if u not in family:
                    new.add(u)
                if i not in family:
                    new.add(i)
        if not new:
            break
        family.update(new)
        if len(family) > cap:
            raise MaterializationCapExceeded(
                f"topology closure exceeded {cap} sets"
            )
        frontier = list(new)
    return tuple(sorted(family))


def specialization_from_subbasis(n, subbasis, name=None):
    """Specialization order x <= y iff every subbasic open at x contains y."""
    up = []
    for x in range(n):
        row = full_mask(n)
        for s in subbasis:
            if s >> x & 1:
                row &= s
        up.append(row | (1 << x))
    return Poset(tuple(up), name=name)


def _upset_family(P, cap=OPENS_CAP):
    return SetFamily.of(P.n, P.iter_upsets(cap=cap))


def topology_space(P, kind="scott"):
    """Space for the requested topology on P, over its specialization poset."""
    n = P.n
    if kind in ("scott", "alexandrov"):
        return FinSpace(P, kind=kind, opens_verified=None)
    if kind == "upper":
        subbasis = [P.full & ~P.dn[x] for x in range(n)]
        spec = specialization_from_subbasis(n, subbasis)
        verified = None
        try:
            opens = generate_topology(n, subbasis)
            verified = opens == tuple(sorted(P.iter_upsets()))
        except MaterializationCapExceeded:
            pass
        assert spec.up == P.up, "upper topology must specialize to the order"
        return FinSpace(spec, kind=kind, opens_verified=verified)
    if kind == "lower":
        subbasis = [P.full & ~P.up[x] for x in range(n)]
        spec = specialization_from_subbasis(n, subbasis)
        op = P.opposite()
        verified = None
        try:
            opens = generate_topology(n, subbasis)
            verified = opens == tuple(sorted(op.iter_upsets()))
        except MaterializationCapExceeded:
            pass
        assert spec.up == op.up, "lower topology must specialize to the dual"
        return FinSpace(spec, kind=kind, opens_verified=verified)
    if kind == "lawson":
        subbasis = [P.full & ~P.up[x] for x in range(n)]
        subbasis.extend(P.iter_upsets())
        verified = None
        try:
            opens = generate_topology(n, subbasis, cap=OPENS_CAP)
            verified = len(opens) == 2**n
        except MaterializationCapExceeded:
            pass
        return FinSpace(antichain(n), kind=kind, opens_verified=verified)
    raise ValueError(f"unknown topology kind {kind!r}")


def opens_family(X, cap=OPENS_CAP):
    """All opens of X (the upper sets of its specialization order)."""
    return _upset_family(X.spec, cap=cap)


def closed_family(X, cap=OPENS_CAP):
    full = X.spec.full
    return SetFamily.of(X.n, (full & ~m for m in X.spec.iter_upsets(cap=cap)))


def saturated_family(X, cap=OPENS_CAP):
    """Q(X): compact saturated sets = all upper sets (finite space)."""
    return _upset_family(X.spec, cap=cap)


# -- sobriety -------------------------------------------------------------------

DEFINITIONAL_SOBRIETY_CAP = 64


@dataclass(frozen=True)
class SobrietyReport:
    irreducible_closed: SetFamily
    generic_points: dict
    is_sober: bool
    paths_agree: bool | None  # None when the pairwise-union scan was capped


def sobriety(X, definitional_cap=DEFINITIONAL_SOBRIETY_CAP):
    """Irreducible closed sets and generic points.

    The definition quantifies over all pairs of closed sets; that scan runs
    whenever the closed family is small, and is cross-checked against the
    principal characterization (irreducible = some point closure).
    """
    closed = closed_family(X)
    principal = {X.closure_mask(1 << x) for x in range(X.n)}
    irreducible_principal = tuple(sorted(m for m in closed.masks if m in principal and m))

    paths_agree = None
    masks = closed.masks
    if len(masks) <= definitional_cap:
        irr = []
        for a in masks:
            if a == 0:
                continue
            ok = True
            for b in masks:
                if not ok:
                    break
                for c in masks:
                    if a & ~(b | c) == 0 and a & ~b and a & ~c:
                        ok = False
                        break
            if ok:
                irr.append(a)
        paths_agree = tuple(sorted(irr)) == irreducible_principal
        irreducible = tuple(sorted(irr))
    else:
        irreducible = irreducible_principal

    generic = {}
    sober = True
    for m in irreducible:
        points = [x for x in range(X.n) if X.closure_mask(1 << x) == m]
        if len(points) == 1:
            generic[tuple(bits(m))] = points[0]
        else:
            sober = False
    return SobrietyReport(
        SetFamily.of(X.n, irreducible), generic, sober, paths_agree
    )


# -- compactness ----------------------------------------------------------------

CORE_COMPACT_CAP = 2048
WAY_BELOW_TABLE_CAP = 64
FINITE_GENERATION_CAP = 1024


@dataclass(frozen=True)
class CompactnessReport:
    Q: SetFamily
    is_locally_compact: bool
    is_core_compact: bool | None
    way_below_opens: tuple | None
    finite_generation_checked: bool
    notes: tuple = field(default_factory=tuple)


def compactness(
    X,
    core_compact_cap=CORE_COMPACT_CAP,
    table_cap=WAY_BELOW_TABLE_CAP,
    generation_cap=FINITE_GENERATION_CAP,
):
    """Q(X), local compactness, core-compactness and way-below on opens."""
    opens = opens_family(X)
    masks = opens.masks
    q = saturated_family(X)
    notes = []

    # locally compact: every point of every open has a compact saturated
    # neighborhood inside it; the minimal open of the point is the witness.
    locally_compact = True
    for u in masks:
        for x in bits(u):
            k = X.spec.up[x]
            if not (X.interior_mask(k) >> x & 1 and k & ~u == 0):
                locally_compact = False

    # way-below in the opens lattice: U << V iff every cover argument is
    # trivial at finite scale, equivalently U is contained in V.
    table = None
    if len(masks) <= table_cap:
        table = tuple(
            (i, j)
            for i, u in enumerate(masks)
            for j, v in enumerate(masks)
            if u & ~v == 0
        )

    core_compact = None
    if len(masks) <= core_compact_cap:
        core_compact = True
        for u in masks:
            acc = 0
            for v in masks:
                if v & ~u == 0:
                    acc |= v
                    if acc == u:
                        break
            if acc != u:
                core_compact = False
    else:
        notes.append(f"core-compactness skipped above {core_compact_cap} opens")

    # finite generation of compacts: K is the up-closure of its minimal
    # elements and sits inside every open neighborhood the same way.
    generation_checked = False
    if len(masks) * len(q.masks) <= generation_cap * generation_cap:
        generation_checked = True
        for k in q.masks:
            f = X.spec.minimal_of(k)
            upf = X.spec.up_closure_mask(f)
            assert upf == k and X.interior_mask(upf) == upf
            for u in masks:
                if k & ~u == 0 and upf & ~u:
                    generation_checked = False
    else:
        notes.append("finite-generation scan skipped above cap")

    return CompactnessReport(
        q, locally_compact, core_compact, table, generation_checked, tuple(notes)
    )


# -- separation -----------------------------------------------------------------


@dataclass(frozen=True)
class SeparationReport:
    is_T1: bool
    is_discrete: bool
    is_hausdorff: bool
    is_compact: bool


def separation(X):
    """T1/discreteness/Hausdorff flags; finite spaces are always compact."""
    n = X.n
    t1 = all(X.closure_mask(1 << x) == 1 << x for x in range(n))
    discrete = all(X.spec.up[x] == 1 << x for x in range(n))
    hausdorff = all(
        X.spec.up[x] & X.spec.up[y] == 0
        for x in range(n)
        for y in range(n)
        if x != y
    )
    return SeparationReport(t1, discrete, hausdorff, True)


def diamond_mask(closed_masks, u):
    """Indices of closed sets meeting the open u."""
    return mask_of(i for i, c in enumerate(closed_masks) if c & u)


def box_mask(saturated_masks, u):
    """Indices of compact saturated sets inside the open u."""
    return mask_of(i for i, k in enumerate(saturated_masks) if k & ~u == 0)


def require_open(X, m):
    if not X.is_open(m):
        raise NotAnOpen(f"{sorted(bits(m))} is not an upper set of the space")


def upper_basis(P):
    """Basic opens of the upper topology: complements of down-sets.

    The subbasis is complements of principal ideals; finite intersections
    give complements of finitely generated down-sets, which at finite scale
    are the complements of all down-sets.
    """
    full = P.full
    return tuple(sorted(full & ~d for d in P.iter_downsets()))


def upper_interior(P, m):
    """Interior of m in the upper topology, by explicit basis scan."""
    acc = 0
    full = P.full
    for d in P.iter_downsets():
        b = full & ~d
        if b & ~m == 0:
            acc |= b
    return acc
