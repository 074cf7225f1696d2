"""Exhaustive poset and lattice enumeration up to isomorphism.

Two independent engines live here:

* ``enumerate_posets`` grows canonical representatives one element at a time,
  rejecting anything whose canonical form was already seen.  Output order is
  by canonical encoding, so corpora are reproducible.
* ``labeled_counts`` walks every *labeled* poset exactly once (each labeled
  poset on 0..k arises from a unique parent by deleting the top index), with
  no isomorphism machinery at all.  Together with automorphism counts it
  cross-checks the canonical engine via orbit sizes.
"""

from .bits import bits, full_mask
from .canonical import automorphism_count, canonical_form
from .errors import SizeCapExceeded
from .poset import Poset, lattice_ops

ENUMERATION_CAP = 8

# Classic counts, reverified at test time by the labeled oracle.
UNLABELED_POSET_COUNTS = (1, 2, 5, 16, 63, 318, 2045)  # n = 1..7
UNLABELED_LATTICE_COUNTS = (1, 1, 1, 2, 5, 15, 53)
LABELED_POSET_COUNTS = (1, 3, 19, 219, 4231, 130023, 6129859)
LABELED_LATTICE_COUNTS = (1, 2, 6, 36, 380, 6390, 157962)


def _downset_masks(up, k):
    """Down-sets of a labeled poset given as a row list (iterative DFS)."""
    if k == 0:
        return [0]
    # Minimal elements first (they have the largest upper sets), so that
    # including e only needs its strict lower cone to be decided already.
    order = sorted(range(k), key=lambda i: (-up[i].bit_count(), i))
    sd = [0] * k
    for i in range(k):
        for j in bits(up[i] & ~(1 << i)):
            sd[j] |= 1 << i
    out = []
    stack = [(0, 0)]
    while stack:
        pos, acc = stack.pop()
        if pos == k:
            out.append(acc)
            continue
        e = order[pos]
        if sd[e] & ~acc == 0:
            stack.append((pos + 1, acc | (1 << e)))
        stack.append((pos + 1, acc))
    return out


def _upsets_within(up, k, allowed):
    """Upper sets (in the whole poset) contained in the up-set ``allowed``."""
    order = [
        i
        for i in sorted(range(k), key=lambda i: (up[i].bit_count(), i))
        if allowed >> i & 1
    ]
    su = [up[i] & ~(1 << i) for i in range(k)]
    out = []
    stack = [(0, 0)]
    while stack:
        pos, acc = stack.pop()
        if pos == len(order):
            out.append(acc)
            continue
        e = order[pos]
        if su[e] & ~acc == 0:
            stack.append((pos + 1, acc | (1 << e)))
        stack.append((pos + 1, acc))
    return out


def _one_point_extensions(up):
    """All row tuples extending ``up`` by a new element with the top index.

    The new element sits above a down-set D and below an up-set U with
    d < u already holding for every d in D, u in U; this is exactly the set
    of valid one-point extensions, each produced once.
    """
    k = len(up)
    su = [up[i] & ~(1 << i) for i in range(k)]
    bit = 1 << k
    out = []
    for D in _downset_masks(up, k):
        allowed = full_mask(k)
        m = D
        while m:
            low = m & -m
            allowed &= su[low.bit_length() - 1]
            m ^= low
            if not allowed:
                break
        for U in _upsets_within(up, k, allowed):
            add = bit | U
            rows = [up[i] | add if D >> i & 1 else up[i] for i in range(k)]
            rows.append(add)
            out.append(tuple(rows))
    return out


_LEVELS = {0: ((),)}
_DISK_CACHE = False


def use_disk_cache(enabled=True):
    """Persist enumeration levels under the cache directory (CLI opt-in)."""
    global _DISK_CACHE
    _DISK_CACHE = enabled


def _load_level_from_disk(n):
    from . import cache

    posets = cache.load_corpus("posets", n)
    if posets is None:
        return None
    rows = tuple(P.up for P in posets)
    # trust nothing: entries must be canonical, distinct, sorted, and for
    # small n the class count is pinned to the frozen sequence
    if rows != tuple(sorted(set(rows))):
        return None
    if n <= 7 and len(rows) != UNLABELED_POSET_COUNTS[n - 1]:
        return None
    for r in rows:
        if len(r) != n or canonical_form(Poset(r)).poset.up != r:
            return None
    return rows


def _canonical_level(n):
    """Canonical representatives of all posets with n elements, sorted."""
    if n > ENUMERATION_CAP:
        raise SizeCapExceeded(f"enumeration capped at {ENUMERATION_CAP}")
    found = _LEVELS.get(n)
    if found is not None:
        return found
    rows = _load_level_from_disk(n) if _DISK_CACHE and n else None
    if rows is None:
        seen = set()
        for parent in _canonical_level(n - 1):
            for ext in _one_point_extensions(parent):
                child = canonical_form(Poset(ext, _checked=True)).poset
                seen.add(child.up)
        # row-tuple order = byte order of the canonical encodings
        rows = tuple(sorted(seen))
        if _DISK_CACHE:
            from . import cache

            cache.store_corpus(
                "posets", n, [Poset(r, _checked=True) for r in rows]
            )
    _LEVELS[n] = rows
    return rows


def enumerate_posets(n):
    """One canonical representative per isomorphism class, fixed order."""
    for rows in _canonical_level(n):
        yield Poset(rows, _checked=True)


def enumerate_lattices(n):
    for P in enumerate_posets(n):
        if lattice_ops(P).is_lattice:
            yield P


def posets_upto(n, start=1):
    for k in range(start, n + 1):
        yield from enumerate_posets(k)


def lattices_upto(n, start=1):
    for k in range(start, n + 1):
        yield from enumerate_lattices(k)


# -- labeled oracle -----------------------------------------------------------


def _is_labeled_lattice(up, k):
    """Bounded prefilter then exhaustive pairwise bound scan."""
    if k == 0:
        return True
    non_min = 0
    top_count = 0
    for i in range(k):
        row = up[i]
        non_min |= row & ~(1 << i)
        if row == 1 << i:
            top_count += 1
    if top_count != 1 or non_min.bit_count() != k - 1:
        return False
    dn = [0] * k
    for i in range(k):
        for j in bits(up[i]):
            dn[j] |= 1 << i
    for i in range(k):
        for j in range(i + 1, k):
            ub = up[i] & up[j]
            for c in bits(ub):
                if ub & ~up[c] == 0:
                    break
            else:
                return False
            lb = dn[i] & dn[j]
            for c in bits(lb):
                if lb & ~dn[c] == 0:
                    break
            else:
                return False
    return True


def labeled_counts(max_n):
    """Counts of labeled posets and labeled lattices for 1..max_n.

    Pure extension enumeration: every labeled poset is visited exactly once,
    so these totals are independent of the canonical engine.
    """
    posets = [0] * (max_n + 1)
    lattices = [0] * (max_n + 1)
    stack = [()]
    while stack:
        up = stack.pop()
        k = len(up)
        if k:
            posets[k] += 1
            if _is_labeled_lattice(up, k):
                lattices[k] += 1
        if k < max_n:
            stack.extend(_one_point_extensions(up))
    return tuple(posets[1:]), tuple(lattices[1:])


def orbit_counts(n):
    """Labeled totals implied by the canonical engine: sum of n!/|Aut|."""
    import math

    fact = math.factorial(n)
    posets = 0
    lattices = 0
    for P in enumerate_posets(n):
        orbit = fact // automorphism_count(P)
        posets += orbit
        if lattice_ops(P).is_lattice:
            lattices += orbit
    return posets, lattices
