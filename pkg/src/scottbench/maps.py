"""Monotone maps between finite posets, adjoint pairs, and continuity checks."""

from dataclasses import dataclass

from .bits import bits, mask_of
from .errors import NotMonotone
from .poset import Poset, lattice_ops


@dataclass(frozen=True)
class MonotoneMap:
    dom: Poset
    cod: Poset
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.n:
            raise NotMonotone("table length differs from domain size")
        for x in range(self.dom.n):
            for y in bits(self.dom.up[x]):
                if not self.cod.leq(self.table[x], self.table[y]):
                    raise NotMonotone(f"order not preserved at {x} <= {y}")

    def __call__(self, x):
        return self.table[x]

    @classmethod
    def identity(cls, P):
        return cls(P, P, tuple(range(P.n)))

    def compose(self, other):
        """self after other."""
        return MonotoneMap(
            other.dom, self.cod, tuple(self.table[other.table[x]] for x in range(other.dom.n))
        )

    def preimage_mask(self, m):
        return mask_of(x for x in range(self.dom.n) if m >> self.table[x] & 1)

    def image_mask(self, m):
        return mask_of(self.table[x] for x in bits(m))


def is_continuous(m: MonotoneMap, exhaustive_cap=None):
    """Continuity between the Scott (Alexandrov) spaces of dom and cod.

    Preimages commute with unions and every open is a union of principal
    up-sets, so checking principal preimages is exact.  A full scan over all
    codomain opens runs too when a cap is given.
    """
    for y in range(m.cod.n):
        if not m.dom.is_upset(m.preimage_mask(m.cod.up[y])):
            return False
    if exhaustive_cap is not None:
        for v in m.cod.iter_upsets(cap=exhaustive_cap):
            if not m.dom.is_upset(m.preimage_mask(v)):
                return False
    return True


def preserves_joins(m: MonotoneMap, subset_cap=12):
    """Check preservation of all existing joins; witness mask on failure.

    On lattices this reduces to binary joins plus bottom; otherwise an
    exhaustive scan over subsets that do have a supremum runs when the
    domain is small enough.
    """
    dom_ops = lattice_ops(m.dom)
    cod = m.cod
    if dom_ops.is_lattice and m.dom.n:
        bot = dom_ops.bottom
        cod_bot = m.cod.sup_of(0)
        if cod_bot is not None and m.table[bot] != cod_bot:
            return 0
        for x in range(m.dom.n):
            for y in range(m.dom.n):
                j = dom_ops.join[x][y]
                t = cod.sup_of(mask_of((m.table[x], m.table[y])))
                if t is None or m.table[j] != t:
                    return mask_of((x, y))
        return None
    if m.dom.n <= subset_cap:
        for s in range(1 << m.dom.n):
            sup = m.dom.sup_of(s)
            if sup is None:
                continue
            t = cod.sup_of(m.image_mask(s))
            if t is None or m.table[sup] != t:
                return s
        return None
    return None  # nothing checkable; treated as vacuous


def preserves_meets(m: MonotoneMap, subset_cap=12):
    flipped = MonotoneMap(m.dom.opposite(), m.cod.opposite(), m.table)
    return preserves_joins(flipped, subset_cap=subset_cap)


@dataclass(frozen=True)
class GaloisPair:
    """Adjoint pair: lower(x) <= y iff x <= upper(y)."""

    lower: MonotoneMap
    upper: MonotoneMap

    def __post_init__(self):
        if (
            self.lower.dom is not self.upper.cod
            and self.lower.dom.up != self.upper.cod.up
        ) or (
            self.lower.cod is not self.upper.dom
            and self.lower.cod.up != self.upper.dom.up
        ):
            raise NotMonotone("adjoint pair domains do not match up")


@dataclass(frozen=True)
class GaloisReport:
    valid: bool
    adjunction_holds: bool
    lower_preserves_joins: bool
    upper_preserves_meets: bool
    violation: tuple | None


def check_galois(pair: GaloisPair):
    """Pointwise adjunction biconditional plus the preservation laws."""
    lo, up = pair.lower, pair.upper
    violation = None
    adjunction = True
    for x in range(lo.dom.n):
        for y in range(up.dom.n):
            left = lo.cod.leq(lo.table[x], y)
            right = lo.dom.leq(x, up.table[y])
            if left != right:
                adjunction = False
                violation = ("adjunction", x, y)
                break
        if not adjunction:
            break
    jw = preserves_joins(lo)
    mw = preserves_meets(up)
    if violation is None and jw is not None:
        violation = ("lower_joins", jw)
    if violation is None and mw is not None:
        violation = ("upper_meets", mw)
    valid = adjunction and jw is None and mw is None
    return GaloisReport(valid, adjunction, jw is None, mw is None, violation)
