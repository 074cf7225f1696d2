"""Finite posets over index elements 0..n-1, with order rows stored as bitmasks.

Row i of ``up`` is the upper set of i, so ``P.leq(i, j)`` is bit j of ``up[i]``.
Everything is immutable; derived structure is cached on first use.  The hard
size cap is SIZE_CAP elements so every row fits one machine word and the
brute-force oracles stay cheap.
"""

from dataclasses import dataclass
from functools import cached_property, reduce

from .bits import bits, full_mask, mask_of
from .errors import (
    CycleDetected,
    GroundMismatch,
    IndexOutOfRange,
    NotAPartialOrder,
    SizeCapExceeded,
    UnknownName,
)

SIZE_CAP = 64


@dataclass(frozen=True)
class Subset:
    """Subset of a ground set of known size, members as a bitmask."""

    ground: int
    bits: int

    def __post_init__(self):
        if self.bits >> self.ground:
            raise IndexOutOfRange(f"subset has members >= ground {self.ground}")

    @classmethod
    def of(cls, ground, items):
        return cls(ground, mask_of(items))

    def members(self):
        return tuple(bits(self.bits))

    def __contains__(self, i):
        return 0 <= i < self.ground and self.bits >> i & 1

    def __iter__(self):
        return bits(self.bits)

    def __len__(self):
        return self.bits.bit_count()


@dataclass(frozen=True)
class SetFamily:
    """Duplicate-free ordered collection of subsets over one ground set."""

    ground: int
    masks: tuple

    def __post_init__(self):
        if len(set(self.masks)) != len(self.masks):
            raise ValueError("duplicate sets in family")
        for m in self.masks:
            if m >> self.ground:
                raise IndexOutOfRange("family member outside ground")

    @classmethod
    def of(cls, ground, masks):
        return cls(ground, tuple(sorted(set(masks))))

    @cached_property
    def index(self):
        return {m: i for i, m in enumerate(self.masks)}

    def subsets(self):
        return tuple(Subset(self.ground, m) for m in self.masks)

    def __len__(self):
        return len(self.masks)

    def __contains__(self, mask):
        return mask in self.index

    def as_poset(self, name=None):
        """The family ordered by inclusion, as a Poset over family indices."""
        k = len(self.masks)
        if k > SIZE_CAP:
            raise SizeCapExceeded(f"family of {k} sets exceeds poset cap {SIZE_CAP}")
        up = []
        for m in self.masks:
            row = 0
            for j, other in enumerate(self.masks):
                if m & ~other == 0:
                    row |= 1 << j
            up.append(row)
        return Poset(tuple(up), name=name)


class Poset:
    """Finite partial order; ``up[i]`` is the bitmask of elements above i."""

    def __init__(self, up, name=None, _checked=False):
        n = len(up)
        if n > SIZE_CAP:
            raise SizeCapExceeded(f"{n} elements exceeds cap {SIZE_CAP}")
        self.n = n
        self.up = tuple(up)
        self.name = name
        if not _checked:
            self._validate()

    def _validate(self):
        n, up = self.n, self.up
        full = full_mask(n)
        for i in range(n):
            row = up[i]
            if row >> n:
                raise IndexOutOfRange(f"row {i} mentions elements >= {n}")
            if not row >> i & 1:
                raise NotAPartialOrder(f"not reflexive at {i}")
            closure = 0
            for j in bits(row):
                if i != j and up[j] >> i & 1:
                    raise CycleDetected(f"{i} <= {j} and {j} <= {i}")
                closure |= up[j]
            if closure & ~row & full:
                raise NotAPartialOrder(f"not transitive at {i}")

    # -- basic order queries ------------------------------------------------

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    @property
    def full(self):
        return full_mask(self.n)

    @cached_property
    def dn(self):
        """Transposed rows: dn[i] is the bitmask of elements below i."""
        dn = [0] * self.n
        for i, row in enumerate(self.up):
            for j in bits(row):
                dn[j] |= 1 << i
        return tuple(dn)

    @cached_property
    def strict_up(self):
        return tuple(self.up[i] & ~(1 << i) for i in range(self.n))

    @cached_property
    def strict_dn(self):
        return tuple(self.dn[i] & ~(1 << i) for i in range(self.n))

    def up_closure_mask(self, m):
        out = 0
        for i in bits(m):
            out |= self.up[i]
        return out

    def down_closure_mask(self, m):
        out = 0
        for i in bits(m):
            out |= self.dn[i]
        return out

    def is_upset(self, m):
        return self.up_closure_mask(m) == m

    def is_downset(self, m):
        return self.down_closure_mask(m) == m

    def minimal_of(self, m):
        """Minimal elements of the subset m."""
        return mask_of(i for i in bits(m) if self.dn[i] & m == 1 << i)

    def maximal_of(self, m):
        return mask_of(i for i in bits(m) if self.up[i] & m == 1 << i)

    def is_directed(self, m):
        """Nonempty and every pair has an upper bound inside m."""
        if m == 0:
            return False
        elems = list(bits(m))
        return all(
            self.up[a] & self.up[b] & m for a in elems for b in elems
        )

    def sup_of(self, m):
        """Least upper bound of subset m, or None; sup of empty = bottom."""
        ubs = self.full
        for i in bits(m):
            ubs &= self.up[i]
        for c in bits(ubs):
            if ubs & ~self.up[c] == 0:
                return c
        return None

    def inf_of(self, m):
        lbs = self.full
        for i in bits(m):
            lbs &= self.dn[i]
        for c in bits(lbs):
            if lbs & ~self.dn[c] == 0:
                return c
        return None

    @cached_property
    def linext(self):
        """A linear extension: indices sorted by size of their down-set."""
        return tuple(sorted(range(self.n), key=lambda i: (self.dn[i].bit_count(), i)))

    @cached_property
    def covers(self):
        """Hasse diagram pairs (i, j) with j covering i."""
        out = []
        for i in range(self.n):
            for j in bits(self.strict_up[i]):
                if not self.strict_up[i] & self.strict_dn[j]:
                    out.append((i, j))
        return tuple(sorted(out))

    # -- family enumeration -------------------------------------------------

    def iter_upsets(self, within=None, cap=None):
        """All upper sets contained in ``within`` (an up-set), by DFS.

        Elements are decided from maximal end of a linear extension, so
        including e only needs its strict upper cone to be chosen already.
        """
        if within is None:
            within = self.full
        order = [i for i in reversed(self.linext) if within >> i & 1]
        su = self.strict_up
        n_seen = 0
        stack = [(0, 0)]
        while stack:
            pos, acc = stack.pop()
            if pos == len(order):
                n_seen += 1
                if cap is not None and n_seen > cap:
                    from .errors import MaterializationCapExceeded

                    raise MaterializationCapExceeded(
                        f"more than {cap} upper sets"
                    )
                yield acc
                continue
            e = order[pos]
            if su[e] & within & ~acc == 0:
                stack.append((pos + 1, acc | (1 << e)))
            stack.append((pos + 1, acc))

    def upsets(self, cap=None):
        return tuple(sorted(self.iter_upsets(cap=cap)))

    def iter_downsets(self, cap=None):
        full = self.full
        for m in self.opposite().iter_upsets(cap=cap):
            yield m

    def downsets(self, cap=None):
        return tuple(sorted(self.iter_downsets(cap=cap)))

    # -- construction of new posets ------------------------------------------

    def relabel(self, perm, name=None):
        """Copy with element i renamed perm[i]."""
        up = [0] * self.n
        for i, row in enumerate(self.up):
            up[perm[i]] = mask_of(perm[j] for j in bits(row))
        return Poset(tuple(up), name=name, _checked=True)

    def restrict(self, m, name=None):
        """Induced subposet on the elements of mask m (re-indexed)."""
        elems = list(bits(m))
        pos = {e: i for i, e in enumerate(elems)}
        up = tuple(
            mask_of(pos[j] for j in bits(self.up[e] & m)) for e in elems
        )
        return Poset(up, name=name, _checked=True)

    def opposite(self, name=None):
        if name is None and self.name:
            name = f"{self.name}^op"
        out = Poset(self.dn, name=name, _checked=True)
        out.__dict__["dn"] = self.up
        return out

    def __eq__(self, other):
        return isinstance(other, Poset) and self.up == other.up

    def __hash__(self):
        return hash(self.up)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Poset(n={self.n}{label}, covers={list(self.covers)})"


# -- public operations -------------------------------------------------------


def build_poset(n, pairs, mode="covers", name=None):
    """Build a poset from pairs; covers-mode closes, full-mode validates."""
    if n < 0:
        raise IndexOutOfRange("negative size")
    if n > SIZE_CAP:
        raise SizeCapExceeded(f"{n} elements exceeds cap {SIZE_CAP}")
    up = [1 << i for i in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexOutOfRange(f"pair ({a}, {b}) outside 0..{n - 1}")
        up[a] |= 1 << b
    if mode == "covers":
        changed = True
        while changed:
            changed = False
            for i in range(n):
                row = up[i]
                acc = row
                for j in bits(row):
                    acc |= up[j]
                if acc != row:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in bits(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise CycleDetected(f"{i} and {j} lie on a cycle")
        return Poset(tuple(up), name=name, _checked=True)
    if mode == "full":
        return Poset(tuple(up), name=name)
    raise ValueError(f"unknown mode {mode!r}")


def down_closure(P, S):
    """All elements below some member of S."""
    if S.ground != P.n:
        raise GroundMismatch(f"subset over {S.ground}, poset has {P.n}")
    return Subset(P.n, P.down_closure_mask(S.bits))


def up_closure(P, S):
    if S.ground != P.n:
        raise GroundMismatch(f"subset over {S.ground}, poset has {P.n}")
    return Subset(P.n, P.up_closure_mask(S.bits))


@dataclass(frozen=True)
class LatticeOps:
    """Join/meet profile; tables are defined only when is_lattice."""

    is_lattice: bool
    is_complete: bool
    bottom: int | None
    top: int | None
    join: tuple | None
    meet: tuple | None
    witness: tuple | None  # pair lacking a join or meet

    def join_of(self, m):
        """Join of a subset mask (empty join is bottom)."""
        return reduce(lambda a, b: self.join[a][b], bits(m), self.bottom)

    def meet_of(self, m):
        return reduce(lambda a, b: self.meet[a][b], bits(m), self.top)


def lattice_ops(P):
    """Pairwise joins/meets by exhaustive bound scan (memoized per poset)."""
    cached = P.__dict__.get("_lattice_ops")
    if cached is not None:
        return cached
    out = _lattice_ops(P)
    P.__dict__["_lattice_ops"] = out
    return out


def _lattice_ops(P):
    n = P.n
    bottoms = [i for i in range(n) if P.up[i] == P.full]
    tops = [i for i in range(n) if P.dn[i] == P.full]
    bottom = bottoms[0] if len(bottoms) == 1 else None
    top = tops[0] if len(tops) == 1 else None
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = P.sup_of(mask_of((i, j)))
            t = P.inf_of(mask_of((i, j)))
            if s is None or t is None:
                return LatticeOps(False, False, bottom, top, None, None, (i, j))
            join[i][j] = s
            meet[i][j] = t
    is_lattice = True
    is_complete = is_lattice and bottom is not None and top is not None
    return LatticeOps(
        is_lattice,
        is_complete,
        bottom,
        top,
        tuple(map(tuple, join)),
        tuple(map(tuple, meet)),
        None,
    )


def product(P, Q, name=None):
    """Componentwise order on pairs, element (i, j) at index i*|Q|+j."""
    n = P.n * Q.n
    if n > SIZE_CAP:
        raise SizeCapExceeded(f"product of {P.n}x{Q.n} exceeds cap {SIZE_CAP}")
    up = []
    for i in range(P.n):
        for j in range(Q.n):
            row = 0
            for a in bits(P.up[i]):
                for b in bits(Q.up[j]):
                    row |= 1 << (a * Q.n + b)
            up.append(row)
    return Poset(tuple(up), name=name, _checked=True)


def power(P, k, name=None):
    """k-fold product of P with itself (k >= 1)."""
    out = P
    for _ in range(k - 1):
        out = product(out, P)
    if name:
        out = Poset(out.up, name=name, _checked=True)
    return out


def opposite(P, name=None):
    return P.opposite(name=name)


# -- named generators ---------------------------------------------------------


def chain(k):
    return build_poset(k, [(i, i + 1) for i in range(k - 1)], name=f"chain({k})")


def antichain(k):
    return build_poset(k, [], name=f"antichain({k})")


def boolean(k):
    """Powerset of a k-set ordered by inclusion; element i is the mask i."""
    if 2**k > SIZE_CAP:
        raise SizeCapExceeded(f"boolean({k}) has {2 ** k} elements")
    n = 2**k
    up = tuple(
        mask_of(j for j in range(n) if i & ~j == 0) for i in range(n)
    )
    return Poset(up, name=f"boolean({k})", _checked=True)


def diamond():
    """Four-element lattice with two incomparable middle points."""
    return build_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)], name="diamond")


def m3():
    return build_poset(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], name="M3"
    )


def n5():
    return build_poset(5, [(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)], name="N5")


def ladder(m, k):
    """m disjoint k-chains with a bottom below and a top above everything."""
    n = m * k + 2
    if n > SIZE_CAP:
        raise SizeCapExceeded(f"ladder({m},{k}) has {n} elements")
    pairs = []
    bot, top = m * k, m * k + 1
    for i in range(m):
        for j in range(k - 1):
            pairs.append((i * k + j, i * k + j + 1))
        pairs.append((bot, i * k))
        pairs.append((i * k + (k - 1), top))
    if m == 0:
        pairs.append((bot, top))
    return build_poset(n, pairs, name=f"ladder({m},{k})")


_NAMED = {
    "chain": (chain, 1),
    "antichain": (antichain, 1),
    "boolean": (boolean, 1),
    "m3": (m3, 0),
    "n5": (n5, 0),
    "diamond": (diamond, 0),
    "ladder": (ladder, 2),
}


def named_poset(name, *params):
    """Look up a generator by name: chain, antichain, boolean, M3, N5, diamond, ladder."""
    entry = _NAMED.get(name.lower())
    if entry is None:
        raise UnknownName(f"no named poset {name!r}")
    fn, arity = entry
    if len(params) != arity:
        raise UnknownName(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
