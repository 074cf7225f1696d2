"""Canonical labeling, isomorphism testing and automorphism counting.

The canonical form is the lexicographically least relation encoding over all
relabelings compatible with an iterated invariant refinement.  Sizes here are
tiny, so plain branch-and-bound with a twin prune is enough.
"""

import base64
from dataclasses import dataclass

from .bits import bits
from .poset import Poset


def _refine(P):
    """Stable partition of elements by iterated up/down colour multisets.

    Returns (colour id per element, classes ordered by invariant key).
    Colour keys are built only from order-invariant data, so isomorphic
    posets get identically keyed classes.
    """
    n = P.n
    keys = [(P.up[i].bit_count(), P.dn[i].bit_count()) for i in range(n)]
    while True:
        palette = sorted(set(keys))
        colour = {k: c for c, k in enumerate(palette)}
        ids = [colour[k] for k in keys]
        if len(palette) == n:
            break
        new = [
            (
                ids[i],
                tuple(sorted(ids[j] for j in bits(P.strict_up[i]))),
                tuple(sorted(ids[j] for j in bits(P.strict_dn[i]))),
            )
            for i in range(n)
        ]
        if len(set(new)) == len(palette):
            keys = new
            palette2 = sorted(set(keys))
            if len(palette2) == len(palette):
                break
            continue
        keys = new
    palette = sorted(set(keys))
    colour = {k: c for c, k in enumerate(palette)}
    ids = [colour[k] for k in keys]
    classes = [[] for _ in palette]
    for i in range(n):
        classes[ids[i]].append(i)
    return ids, classes


def _twins(P, u, v):
    """True if transposing u and v is an automorphism."""
    m = ~((1 << u) | (1 << v))
    return (
        P.leq(u, v) == P.leq(v, u)
        and P.up[u] & m == P.up[v] & m
        and P.dn[u] & m == P.dn[v] & m
    )


@dataclass(frozen=True)
class CanonicalForm:
    poset: Poset
    relabeling: tuple  # old index -> canonical index


def canonical_form(P):
    """Canonical representative of the isomorphism class of P."""
    n = P.n
    if n == 0:
        return CanonicalForm(P if P.name is None else Poset((),), ())
    _, classes = _refine(P)
    order = [v for cls in classes for v in cls]
    class_of = {}
    for ci, cls in enumerate(classes):
        for v in cls:
            class_of[v] = ci
    best_levels = [None] * n
    best_perm = None
    assigned = []

    def level_code(v, depth):
        code = 0
        for i, w in enumerate(assigned):
            code |= P.leq(w, v) << (2 * i)
            code |= P.leq(v, w) << (2 * i + 1)
        return code

    def search(depth, remaining):
        nonlocal best_perm
        if depth == n:
            best_perm = list(assigned)
            return
        cls = class_of[order[depth]]
        candidates = [v for v in remaining if class_of[v] == cls]
        seen = []
        pruned = []
        for v in candidates:
            if any(_twins(P, v, w) for w in seen):
                continue
            seen.append(v)
            code = level_code(v, depth)
            prev = best_levels[depth]
            if prev is not None and code > prev:
                continue
            pruned.append((code, v))
        pruned.sort()
        for code, v in pruned:
            prev = best_levels[depth]
            if prev is not None and code > prev:
                continue
            if prev is None or code < prev:
                best_levels[depth] = code
                for d in range(depth + 1, n):
                    best_levels[d] = None
            assigned.append(v)
            search(depth + 1, [w for w in remaining if w != v])
            assigned.pop()

    search(0, order)
    inverse = best_perm  # inverse[new] = old
    relabel = [0] * n
    for new, old in enumerate(inverse):
        relabel[old] = new
    out = P.relabel(relabel)
    return CanonicalForm(out, tuple(relabel))


def is_isomorphic(P, Q):
    """Order isomorphism P -> Q as an index list, or None."""
    if P.n != Q.n:
        return None
    cp = canonical_form(P)
    cq = canonical_form(Q)
    if cp.poset.up != cq.poset.up:
        return None
    inv_q = [0] * Q.n
    for old, new in enumerate(cq.relabeling):
        inv_q[new] = old
    return [inv_q[cp.relabeling[i]] for i in range(P.n)]


def automorphism_count(P):
    """Number of order automorphisms, by class-respecting backtracking."""
    n = P.n
    if n <= 1:
        return 1
    ids, classes = _refine(P)
    order = [v for cls in classes for v in cls]
    count = 0
    image = {}
    used = set()

    def search(depth):
        nonlocal count
        if depth == n:
            count += 1
            return
        v = order[depth]
        for w in classes[ids[v]]:
            if w in used:
                continue
            ok = True
            for a, fa in image.items():
                if P.leq(a, v) != P.leq(fa, w) or P.leq(v, a) != P.leq(w, fa):
                    ok = False
                    break
            if ok:
                image[v] = w
                used.add(w)
                search(depth + 1)
                used.remove(w)
                del image[v]

    search(0)
    return count


# -- canonical text encoding ---------------------------------------------------


def encode_poset(P):
    """Newline-free base64 of the 8-byte little-endian order rows."""
    payload = b"".join(row.to_bytes(8, "little") for row in P.up)
    return base64.b64encode(bytes([P.n]) + payload).decode("ascii")


def decode_poset(text, name=None):
    raw = base64.b64decode(text.encode("ascii"))
    n = raw[0]
    up = tuple(
        int.from_bytes(raw[1 + 8 * i : 9 + 8 * i], "little") for i in range(n)
    )
    return Poset(up, name=name)


def cache_key(P):
    """Isomorphism-invariant key: encoding of the canonical form."""
    return encode_poset(canonical_form(P).poset)
