"""JSON interchange: poset and space documents, report serialization.

Documents follow the schema
``{"name"?: str, "n": int, "covers": [[i, j], ...]}`` or
``{"n": int, "relation": [[i, j], ...]}`` with exactly one of covers and
relation present.  All emitted JSON has sorted keys and sorted index arrays
so outputs are byte-stable.
"""

import dataclasses
import json

from .bits import bits
from .errors import WorkbenchError
from .poset import Poset, SetFamily, Subset, build_poset


class DocumentError(WorkbenchError):
    """Malformed input document."""


def poset_to_doc(P):
    doc = {"n": P.n, "covers": [list(c) for c in P.covers]}
    if P.name:
        doc["name"] = P.name
    return doc


def _check_pairs(pairs, n):
    if not isinstance(pairs, list):
        raise DocumentError("pairs must be a list")
    out = []
    for p in pairs:
        if not (isinstance(p, list) and len(p) == 2) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in p
        ):
            raise DocumentError(f"bad pair {p!r}")
        out.append((p[0], p[1]))
    return out


def poset_from_doc(doc):
    if not isinstance(doc, dict):
        raise DocumentError("poset document must be an object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DocumentError("'n' must be a nonnegative integer")
    has_covers = "covers" in doc
    has_relation = "relation" in doc
    if has_covers == has_relation:
        raise DocumentError("exactly one of 'covers'/'relation' required")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("'name' must be a string")
    if has_covers:
        return build_poset(n, _check_pairs(doc["covers"], n), "covers", name=name)
    return build_poset(n, _check_pairs(doc["relation"], n), "full", name=name)


SPACE_KINDS = ("scott", "upper", "lower", "lawson", "alexandrov")


def space_from_doc(doc):
    from .finspace import topology_space

    if not isinstance(doc, dict) or "poset" not in doc:
        raise DocumentError("space document needs a 'poset' member")
    kind = doc.get("kind", "scott")
    if kind not in SPACE_KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    return topology_space(poset_from_doc(doc["poset"]), kind)


def to_jsonable(obj):
    """Reports to plain JSON values; sets become sorted index arrays."""
    if isinstance(obj, Subset):
        return sorted(obj.members())
    if isinstance(obj, SetFamily):
        return [sorted(bits(m)) for m in obj.masks]
    if isinstance(obj, Poset):
        return poset_to_doc(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {}
        for f in dataclasses.fields(obj):
            if f.metadata.get("volatile"):
                continue  # timings etc. would break byte-stable reports
            out[f.name] = to_jsonable(getattr(obj, f.name))
        for name in dir(type(obj)):
            if isinstance(getattr(type(obj), name), property):
                out[name] = to_jsonable(getattr(obj, name))
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return repr(obj)


def dumps(obj):
    """Deterministic JSON text with a trailing newline."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"
