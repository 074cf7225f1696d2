"""Approximation relations and lattice property checkers.

Each relation has two faces: the quantified definition (kept as a brute-force
oracle, capped) and the closed form that finite scale permits.  Property
flags are always computed from honest scans of the relation in question, so
the suites genuinely exercise the definitions instead of hardcoding the
finite-scale outcome.
"""

from dataclasses import dataclass, field

from .bits import bits, mask_of
from .errors import (
    CollectionOracleCapExceeded,
    NoBinaryJoins,
    NotALattice,
    SizeCapExceeded,
)
from .finspace import FinSpace, upper_interior
from .maps import MonotoneMap, is_continuous
from .poset import Poset, SetFamily, Subset, lattice_ops, product

WAY_BELOW_ORACLE_CAP = 16
TOTALLY_BELOW_ORACLE_CAP = 20
COLLECTION_ORACLE_CAP = 16


# -- way-below ----------------------------------------------------------------


def way_below(P, x, y):
    """x << y.  On a finite poset every directed set has a greatest element,
    so the quantified definition collapses to plain order."""
    return P.leq(x, y)


def way_below_definitional(P, x, y, cap=WAY_BELOW_ORACLE_CAP):
    """x << y by quantifying over directed subsets that have a supremum."""
    if P.n > cap:
        raise SizeCapExceeded(f"definitional way-below capped at {cap}")
    for d in range(1, 1 << P.n):
        if not P.is_directed(d):
            continue
        s = P.sup_of(d)
        if s is None:
            continue
        if P.leq(y, s) and not d & P.up[x]:
            return False
    return True


def way_below_set(P, F, G):
    """F << G for finite sets: every directed sup in the upper set of G
    already meets the upper set of F; closed form is an upper-set inclusion."""
    fm = F.bits if isinstance(F, Subset) else F
    gm = G.bits if isinstance(G, Subset) else G
    return P.up_closure_mask(gm) & ~P.up_closure_mask(fm) == 0


def way_below_set_definitional(P, F, G, cap=WAY_BELOW_ORACLE_CAP):
    if P.n > cap:
        raise SizeCapExceeded(f"definitional way-below capped at {cap}")
    fm = F.bits if isinstance(F, Subset) else F
    gm = G.bits if isinstance(G, Subset) else G
    upf, upg = P.up_closure_mask(fm), P.up_closure_mask(gm)
    for d in range(1, 1 << P.n):
        if not P.is_directed(d):
            continue
        s = P.sup_of(d)
        if s is None:
            continue
        if upg >> s & 1 and not d & upf:
            return False
    return True


def compact_elements(P):
    """K(P): elements way below themselves."""
    return Subset(P.n, mask_of(x for x in range(P.n) if way_below(P, x, x)))


# -- totally-below (wayway-below) ----------------------------------------------


def _require_complete(P):
    ops = lattice_ops(P)
    if not (ops.is_lattice and ops.is_complete):
        raise NotALattice("operation needs a complete (finite) lattice")
    return ops


def totally_below(L, x, y):
    """x <<< y, closed form: y is not under the join of everything not above x.

    Quantifying over all subsets including the empty one forces bottom <<<
    bottom to be false, since bottom is the empty join.
    """
    ops = _require_complete(L)
    blocked = L.full & ~L.up[x]
    return not L.leq(y, ops.join_of(blocked))


def totally_below_bruteforce(L, x, y, cap=TOTALLY_BELOW_ORACLE_CAP):
    """Quantifier over all 2^n subsets A: y <= sup A implies x <= some a."""
    if L.n > cap:
        raise SizeCapExceeded(f"totally-below brute force capped at {cap}")
    ops = _require_complete(L)
    sup = [0] * (1 << L.n)
    sup[0] = ops.bottom
    for a in range(1, 1 << L.n):
        low = a & -a
        sup[a] = ops.join[sup[a ^ low]][low.bit_length() - 1]
    for a in range(1 << L.n):
        if L.leq(y, sup[a]) and not a & L.up[x]:
            return False
    return True


# -- the hypercontinuity relation ------------------------------------------------


def hyper_below(L, x, y):
    """x -< y: y lies in the upper-topology interior of the upper set of x."""
    return bool(upper_interior(L, L.up[x]) >> y & 1)


def hyper_below_collections(L, x, y, cap=COLLECTION_ORACLE_CAP):
    """Collection-quantified form: whenever a nonempty family of upper sets
    intersects inside the upper set of y, finitely many members intersect
    inside the upper set of x.  All families are finite here, so the witness
    subfamily can be taken to be the whole family."""
    upsets = L.upsets()
    if len(upsets) > cap:
        raise CollectionOracleCapExceeded(
            f"{len(upsets)} upper sets exceeds collection oracle cap {cap}"
        )
    k = len(upsets)
    for fam in range(1, 1 << k):
        inter = L.full
        for i in bits(fam):
            inter &= upsets[i]
        if inter & ~L.up[y] == 0 and inter & ~L.up[x]:
            return False
    return True


def hyper_below_opens(P, u, v):
    """Lemma-style characterization on the opens lattice of P: the open u is
    below v iff u sits inside a finitely generated upper set inside v.
    Returns (flag, witness F mask)."""
    if not (P.is_upset(u) and P.is_upset(v)):
        from .errors import NotAnOpen

        raise NotAnOpen("arguments must be opens of the base poset")
    f = P.minimal_of(v)
    upf = P.up_closure_mask(f)
    if u & ~upf == 0 and upf & ~v == 0:
        return True, f
    return False, None


# -- lattice profile ---------------------------------------------------------------


@dataclass(frozen=True)
class LatticeProfile:
    is_lattice: bool
    is_complete: bool
    continuous: bool
    algebraic: bool
    quasicontinuous: bool
    quasialgebraic: bool
    hypercontinuous: bool | None
    hyperalgebraic: bool | None
    distributive: bool | None
    prime_continuous: bool | None
    jointly_scott_continuous: bool | None
    compact_elements: Subset
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.prime_continuous:
            assert self.distributive and self.continuous
        if self.hypercontinuous:
            assert self.continuous

    def flag(self, name):
        v = getattr(self, name)
        return bool(v)


def _approximants_ok(P, x, approx_mask):
    """Directedness of the approximant set plus supremum equal to x."""
    return P.is_directed(approx_mask) and P.sup_of(approx_mask) == x


def _distributivity_witness(L, ops):
    n = L.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = ops.meet[a][ops.join[b][c]]
                rhs = ops.join[ops.meet[a][b]][ops.meet[a][c]]
                if lhs != rhs:
                    return (a, b, c)
    return None


def profile(L):
    """Full property profile; lattice-only flags are None on non-lattices."""
    n = L.n
    ops = lattice_ops(L)
    witnesses = {}

    continuous = True
    for x in range(n):
        approx = mask_of(d for d in range(n) if way_below(L, d, x))
        if not _approximants_ok(L, x, approx):
            continuous = False
            witnesses["continuous"] = x
            break

    kmask = compact_elements(L).bits
    algebraic = True
    for x in range(n):
        if not _approximants_ok(L, x, L.dn[x] & kmask):
            algebraic = False
            witnesses["algebraic"] = x
            break

    quasicontinuous = True
    quasialgebraic = True
    for u in L.iter_upsets():
        if not (quasicontinuous or quasialgebraic):
            break
        for x in bits(u):
            f = 1 << x
            upf = L.up[x]
            cond_int = upf & ~u == 0 and L.is_upset(upf)
            if not (cond_int and upf >> x & 1):
                quasicontinuous = False
                witnesses["quasicontinuous"] = (x, tuple(bits(u)))
            if not (cond_int and upf == L.up_closure_mask(f)):
                quasialgebraic = False
                witnesses["quasialgebraic"] = (x, tuple(bits(u)))

    hypercontinuous = hyperalgebraic = None
    distributive = prime_continuous = None
    jointly = None
    if ops.is_lattice and n:
        uint = [upper_interior(L, L.up[d]) for d in range(n)]
        hyper = [
            mask_of(d for d in range(n) if uint[d] >> x & 1) for x in range(n)
        ]
        hypercontinuous = True
        for x in range(n):
            if not _approximants_ok(L, x, hyper[x]):
                hypercontinuous = False
                witnesses["hypercontinuous"] = x
                break
        hyperalgebraic = True
        for x in range(n):
            selfapprox = mask_of(
                y for y in bits(L.dn[x]) if hyper[y] >> y & 1
            )
            if ops.join_of(selfapprox) != x:
                hyperalgebraic = False
                witnesses["hyperalgebraic"] = x
                break
        w = _distributivity_witness(L, ops)
        distributive = w is None
        if w:
            witnesses["distributive"] = w
        prime_continuous = True
        for x in range(n):
            below = mask_of(d for d in range(n) if totally_below(L, d, x))
            if ops.join_of(below) != x:
                prime_continuous = False
                witnesses["prime_continuous"] = (x, ops.join_of(below))
                break
        try:
            jointly = jointly_scott_continuous(L)
        except SizeCapExceeded:
            jointly = None

    return LatticeProfile(
        ops.is_lattice,
        ops.is_complete,
        continuous,
        algebraic,
        quasicontinuous,
        quasialgebraic,
        hypercontinuous,
        hyperalgebraic,
        distributive,
        prime_continuous,
        jointly,
        Subset(n, kmask),
        witnesses,
    )


# -- spectrum ------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumReport:
    primes: Subset
    space: FinSpace
    prime_elements: tuple
    point_open: tuple
    hull_kernel_closed: SetFamily
    birkhoff_iso: tuple | None
    failure: tuple | None


def spectrum(L):
    """Meet-prime elements with the hull-kernel topology.

    Closed sets are the traces of principal filters on the primes; the family
    is already a topology (meets give intersections and primality turns
    unions of principal filters into the filter of the meet).
    """
    ops = lattice_ops(L)
    if not ops.is_lattice:
        raise NotALattice("spectrum needs a lattice")
    n = L.n
    primes = []
    for p in range(n):
        if n and p == ops.top:
            continue
        prime = True
        for a in range(n):
            for b in range(n):
                if L.leq(ops.meet[a][b], p) and not (L.leq(a, p) or L.leq(b, p)):
                    prime = False
                    break
            if not prime:
                break
        if prime:
            primes.append(p)
    k = len(primes)
    pos = {p: i for i, p in enumerate(primes)}

    closed_masks = sorted(
        {mask_of(pos[p] for p in primes if L.leq(x, p)) for x in range(n)} | {0}
    )
    closed = SetFamily.of(k, closed_masks)
    # specialization: p below q iff p lies in the closure of {q}
    clq = [
        min((m for m in closed_masks if m >> j & 1), key=lambda m: m.bit_count())
        for j in range(k)
    ]
    up = []
    for i in range(k):
        up.append(mask_of(j for j in range(k) if clq[j] >> i & 1) | 1 << i)
    spec = Poset(tuple(up), name="Spec")
    space = FinSpace(spec, kind="hull-kernel")

    point_open = tuple(
        mask_of(pos[p] for p in primes if not L.leq(x, p)) for x in range(n)
    )
    # Birkhoff map x -> U_x; an order iso onto the opens exactly when it is
    # injective, surjective onto the upper sets and reflects order.
    opens = set(spec.iter_upsets())
    failure = None
    if len(set(point_open)) != n:
        dup = {}
        for x, m in enumerate(point_open):
            if m in dup:
                failure = ("not_injective", dup[m], x)
                break
            dup[m] = x
    elif set(point_open) != opens:
        failure = ("not_surjective", len(opens))
    else:
        for x in range(n):
            for y in range(n):
                if L.leq(x, y) != (point_open[x] & ~point_open[y] == 0):
                    failure = ("not_embedding", x, y)
                    break
            if failure:
                break
    as_sets = tuple(tuple(bits(m)) for m in point_open)
    iso = as_sets if failure is None else None
    return SpectrumReport(
        Subset.of(n, primes), space, tuple(primes), as_sets, closed, iso, failure
    )


# -- joint Scott continuity ------------------------------------------------------


def jointly_scott_continuous(L, exhaustive_cap=None):
    """Continuity of the join map from the product Scott space to Scott L."""
    ops = lattice_ops(L)
    if L.n == 0:
        return True
    if ops.join is None:
        missing = [
            (i, j)
            for i in range(L.n)
            for j in range(L.n)
            if L.sup_of(mask_of((i, j))) is None
        ]
        raise NoBinaryJoins(f"no join for pairs {missing[:3]}")
    n = L.n
    if n * n <= 64:
        prod = product(L, L)
        table = tuple(ops.join[i][j] for i in range(n) for j in range(n))
        return is_continuous(MonotoneMap(prod, L, table), exhaustive_cap=exhaustive_cap)
    # Product too large to materialize: check principal preimages pairwise.
    join = ops.join
    for y in range(n):
        for a in range(n):
            for b in range(n):
                if not L.leq(y, join[a][b]):
                    continue
                for a2 in bits(L.up[a]):
                    for b2 in bits(L.up[b]):
                        if not L.leq(y, join[a2][b2]):
                            return False
    return True
