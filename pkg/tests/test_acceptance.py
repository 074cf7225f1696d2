"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The per-criterion lines bypass output capture, so any pytest invocation
shows them as they happen.  Everything here is exact; the only tolerances
are the stated wall-clock budgets.
"""

import contextlib
import io
import json
import time

from scottbench.bits import mask_of
from scottbench.closed_sets import (
    adjunction_report,
    down_set_lattice,
    filter_complement_adjunction,
)
from scottbench.enumeration import (
    UNLABELED_LATTICE_COUNTS,
    UNLABELED_POSET_COUNTS,
    enumerate_lattices,
    enumerate_posets,
    labeled_counts,
    lattices_upto,
    orbit_counts,
    posets_upto,
)
from scottbench.finspace import opens_family, saturated_family, topology_space
from scottbench.orderprops import (
    hyper_below,
    hyper_below_collections,
    profile,
    spectrum,
    totally_below,
    totally_below_bruteforce,
)
from scottbench.poset import boolean, lattice_ops, m3
from scottbench.powerspace import (
    commutes,
    consonance_transfer,
    is_consonant,
    local_compactness_report,
    neighborhood_filter,
)
from scottbench.theorems import run_theorem


@contextlib.contextmanager
def criterion(label, budget_seconds, capfd=None):
    """Time a criterion and print its PASS/FAIL line outside capture."""
    uncaptured = capfd.disabled() if capfd is not None else contextlib.nullcontext()
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        with uncaptured:
            print(f"ACCEPTANCE {label}: FAIL ({time.perf_counter() - start:.1f}s)", flush=True)
        raise
    elapsed = time.perf_counter() - start
    with uncaptured:
        print(f"ACCEPTANCE {label}: PASS ({elapsed:.1f}s)", flush=True)
    assert elapsed < budget_seconds, f"{label} exceeded {budget_seconds}s budget"


def test_criterion_1_enumeration_oracle(capfd):
    with criterion("C1 enumeration-oracle", 300, capfd):
        for n in range(1, 8):
            assert len(list(enumerate_posets(n))) == UNLABELED_POSET_COUNTS[n - 1]
            assert len(list(enumerate_lattices(n))) == UNLABELED_LATTICE_COUNTS[n - 1]
        labeled_p, labeled_l = labeled_counts(7)
        for n in range(1, 8):
            assert orbit_counts(n) == (labeled_p[n - 1], labeled_l[n - 1])


def test_criterion_2_prime_continuity(capfd):
    with criterion("C2 prime-continuity", 120, capfd):
        report = run_theorem("P2.1", max_n=7)
        assert report.instances == sum(UNLABELED_LATTICE_COUNTS) == 78
        assert not report.violations
        for L in lattices_upto(5):
            for x in range(L.n):
                for y in range(L.n):
                    assert totally_below(L, x, y) == totally_below_bruteforce(L, x, y)


def test_criterion_3_adjunction(capfd):
    with criterion("C3 adjunction", 120, capfd):
        instances = 0
        stricts = 0
        for P in posets_upto(6):
            instances += 1
            rep = adjunction_report(down_set_lattice(P))
            assert rep.identity_holds and rep.deflation_holds
            assert rep.violation is None
            if rep.strict_example is not None:
                stricts += 1
        assert instances == sum(UNLABELED_POSET_COUNTS[:6]) == 405
        assert stricts > 0


def test_criterion_4_topology_coincidence(capfd):
    with criterion("C4 topology-coincidence", 300, capfd):
        vietoris = run_theorem("P3.4", max_n=5)
        arms = run_theorem("T3.10", max_n=5)
        assert vietoris.instances == arms.instances == 87
        assert not vietoris.violations and not arms.violations


def test_criterion_5_hyper_below_paths(capfd):
    with criterion("C5 interior-relation-paths", 120, capfd):
        for P in posets_upto(4):
            for x in range(P.n):
                for y in range(P.n):
                    assert (
                        hyper_below_collections(P, x, y)
                        == hyper_below(P, x, y)
                        == P.leq(x, y)
                    )
        report = run_theorem("L2.3", max_n=5)
        assert report.instances == 87 and not report.violations


def test_criterion_6_complement_adjunction(capfd):
    with criterion("C6 complement-adjunction", 120, capfd):
        for L in lattices_upto(6):
            rep = filter_complement_adjunction(L)
            assert rep.identity_holds
            assert rep.galois.valid and rep.deflation_holds
            if rep.distributive:
                assert rep.join_preservation_witness is None
        # exact strictness on the four-element boolean lattice
        B2 = boolean(2)
        rep = filter_complement_adjunction(B2)
        sigma = down_set_lattice(B2)
        bottom_only = sigma.index[0b0001]
        assert rep.from_opens(bottom_only) == lattice_ops(B2).bottom
        assert sigma.elements[rep.into_opens(rep.from_opens(bottom_only))] == 0


def test_criterion_7_spectrum(capfd):
    with criterion("C7 spectrum", 120, capfd):
        checked = 0
        for L in lattices_upto(7):
            pr = profile(L)
            if not pr.distributive:
                continue
            checked += 1
            rep = spectrum(L)
            assert rep.birkhoff_iso is not None, L
        assert checked == 21  # distributive lattices with up to 7 elements
        assert spectrum(m3()).prime_elements == ()
        mirror = run_theorem("P4.2", max_n=5)
        assert mirror.instances == 10 and not mirror.violations


def test_criterion_8_consonance_powerspace(capfd):
    with criterion("C8 consonance-powerspace", 600, capfd):
        for P in posets_upto(4):
            X = topology_space(P)
            rep = is_consonant(X)
            assert rep.consonant
            opens = opens_family(X)
            q = saturated_family(X)
            phi = [neighborhood_filter(X, k).bits for k in q.masks]
            assert rep.witnesses
            for fam_sets, uidx, kidx in rep.witnesses:
                fam = mask_of(fam_sets)
                assert phi[kidx] >> uidx & 1, "member open must be in the filter"
                assert phi[kidx] & ~fam == 0, "filter must stay inside the family"
            # every (family, member) pair carries a witness
            lattice = opens.as_poset()
            expected = sum(f.bit_count() for f in lattice.iter_upsets())
            assert len(rep.witnesses) == expected
        for P in posets_upto(3):
            X = topology_space(P)
            assert commutes(X).commutes
            assert consonance_transfer(X).transfer_holds
        for P in posets_upto(4):
            assert local_compactness_report(topology_space(P)).biconditional_holds


def test_criterion_9_determinism_and_exit_codes(tmp_path, monkeypatch, capfd):
    monkeypatch.setenv("SCOTT_CACHE_DIR", str(tmp_path / "cache"))
    from scottbench.cli import main

    def run(argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            rc = main(argv)
        return rc, out.getvalue()

    with criterion("C9 determinism-and-exit-codes", 120, capfd):
        d1, d2 = tmp_path / "a", tmp_path / "b"
        rc1, out1 = run(["enumerate", "--n", "5", "--out", str(d1)])
        rc2, out2 = run(["enumerate", "--n", "5", "--out", str(d2)])
        assert rc1 == rc2 == 0 and out1 == out2
        names = sorted(p.name for p in d1.iterdir())
        assert names == sorted(p.name for p in d2.iterdir())
        for name in names:
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes()
        assert json.loads((d1 / "manifest.json").read_text())["count"] == 63

        va = run(["verify", "--theorem", "P4.5", "--max-n", "5"])
        vb = run(["verify", "--theorem", "P4.5", "--max-n", "5"])
        assert va == vb and va[0] == 0

        aa = run(["analyze", "N5"])
        ab = run(["analyze", "N5"])
        assert aa == ab and aa[0] == 0

        matrix = [
            (["analyze", "chain(3)"], 0),
            (["analyze", "no_such_generator(1)"], 2),
            (["verify", "--theorem", "T5.2", "--max-n", "3"], 0),
            (["verify", "--theorem", "XX"], 2),
            (["search", "--property", "lattice ∧ ¬distributive", "--max-n", "5"], 1),
            (["search", "--property", "¬sober", "--max-n", "4"], 0),
            (["search", "--property", "lattice ∧∧", "--max-n", "3"], 2),
            (["enumerate", "--n", "3", "--out", str(tmp_path / "c")], 0),
            (["enumerate", "--n", "2", "--out", "/proc/enumerate-denied"], 2),
        ]
        for argv, expected in matrix:
            rc, _ = run(argv)
            assert rc == expected, (argv, rc, expected)
