import json

import pytest

from scottbench.jsonio import (
    DocumentError,
    dumps,
    poset_from_doc,
    poset_to_doc,
    space_from_doc,
    to_jsonable,
)
from scottbench.orderprops import profile
from scottbench.poset import chain, m3, n5
from scottbench.theorems import run_theorem


def test_poset_doc_roundtrip():
    for P in (chain(3), m3(), n5()):
        doc = poset_to_doc(P)
        assert poset_from_doc(doc).up == P.up


def test_relation_document():
    doc = {"n": 2, "relation": [[0, 0], [1, 1], [0, 1]]}
    P = poset_from_doc(doc)
    assert P.leq(0, 1)


def test_exactly_one_of_covers_relation():
    with pytest.raises(DocumentError):
        poset_from_doc({"n": 2})
    with pytest.raises(DocumentError):
        poset_from_doc({"n": 2, "covers": [], "relation": []})


def test_malformed_documents():
    with pytest.raises(DocumentError):
        poset_from_doc({"n": -1, "covers": []})
    with pytest.raises(DocumentError):
        poset_from_doc({"n": 2, "covers": [[0]]})
    with pytest.raises(DocumentError):
        poset_from_doc({"n": 2, "covers": [[0, "x"]]})
    with pytest.raises(DocumentError):
        poset_from_doc([1, 2])
    with pytest.raises(DocumentError):
        poset_from_doc({"n": True, "covers": []})


def test_space_document():
    X = space_from_doc({"poset": {"n": 2, "covers": [[0, 1]]}, "kind": "lawson"})
    assert X.kind == "lawson"
    with pytest.raises(DocumentError):
        space_from_doc({"poset": {"n": 1, "covers": []}, "kind": "metric"})
    with pytest.raises(DocumentError):
        space_from_doc({"kind": "scott"})


def test_report_json_roundtrip():
    rep = run_theorem("P2.1", max_n=4)
    text = dumps(rep)
    parsed = json.loads(text)
    assert parsed == to_jsonable(rep)
    assert "elapsed" not in text  # volatile fields stay out of reports
    assert text.endswith("\n")


def test_profile_serializes_with_sorted_sets():
    doc = to_jsonable(profile(m3()))
    assert doc["compact_elements"] == [0, 1, 2, 3, 4]
    assert doc["witnesses"]["distributive"] == [1, 2, 3]


def test_dumps_deterministic():
    rep1 = dumps(to_jsonable(profile(n5())))
    rep2 = dumps(to_jsonable(profile(n5())))
    assert rep1 == rep2
