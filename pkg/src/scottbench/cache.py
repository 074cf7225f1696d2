"""Flat-file corpus cache keyed by canonical encodings.

The cache directory comes from SCOTT_CACHE_DIR, defaulting to
``~/.cache/scottbench``.  Writes go through a temp file and an atomic rename,
so concurrent writers of the same key stay idempotent.
"""

import os
from pathlib import Path

from .canonical import decode_poset, encode_poset


def cache_dir():
    override = os.environ.get("SCOTT_CACHE_DIR")
    if override:
        return Path(override)
    return Path.home() / ".cache" / "scottbench"


def corpus_path(kind, n):
    return cache_dir() / f"{kind}-{n}.txt"


def load_corpus(kind, n):
    """Cached canonical posets for a corpus level, or None on miss."""
    path = corpus_path(kind, n)
    if not path.is_file():
        return None
    return [decode_poset(line) for line in path.read_text().split()]


def store_corpus(kind, n, posets):
    path = corpus_path(kind, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".tmp{os.getpid()}")
    tmp.write_text("".join(encode_poset(P) + "\n" for P in posets))
    tmp.replace(path)


def cached_corpus(kind, n, generator):
    found = load_corpus(kind, n)
    if found is not None:
        return found
    posets = list(generator(n))
    store_corpus(kind, n, posets)
    return posets
