"""Data-driven registry of verification suites over enumerated corpora.

Every entry pairs a corpus filter with an instance checker; adding a suite
means adding an entry here, the command line stays untouched.  Checkers
return violation dictionaries (empty = instance verified); the report keeps
the canonical encoding of any offending subject so failures are replayable.
"""

import time
from dataclasses import dataclass, field

from .bits import bits
from .canonical import encode_poset
from .closed_sets import (
    adjunction_report,
    core_compact_report,
    correspondence_report,
    diamond_preserves_unions,
    down_set_lattice,
    filter_complement_adjunction,
    scott_equals_vietoris,
    union_of_downsets_map,
)
from .enumeration import ENUMERATION_CAP, enumerate_posets
from .errors import UnknownTheorem
from .finspace import (
    generate_topology,
    saturated_family,
    separation,
    topology_space,
)
from .maps import is_continuous
from .orderprops import (
    hyper_below_collections,
    hyper_below_opens,
    profile,
    spectrum,
)
from .poset import SetFamily, lattice_ops
from .powerspace import consonance_transfer, local_compactness_report


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    corpus: dict
    instances: int
    violations: tuple
    elapsed_seconds: float = field(metadata={"volatile": True})

    @property
    def status(self):
        return "verified" if not self.violations else "violated"


@dataclass(frozen=True)
class TheoremEntry:
    tid: str
    summary: str
    corpus: str
    default_max_n: int
    checker: object


def _is_lattice(P):
    return lattice_ops(P).is_lattice


def _is_distributive(P):
    pr = profile(P)
    return bool(pr.is_lattice and pr.distributive)


def _corpus(kind, max_n):
    for n in range(1, max_n + 1):
        for P in enumerate_posets(n):
            if kind == "posets":
                yield P
            elif kind == "lattices" and _is_lattice(P):
                yield P
            elif kind == "distributive-lattices" and _is_distributive(P):
                yield P
            elif kind == "spaces":
                yield P
            elif kind == "t1-spaces" and all(
                P.up[i] == 1 << i for i in range(P.n)
            ):
                yield P


# -- checkers -------------------------------------------------------------------


def _check_prime_continuity_classification(L):
    pr = profile(L)
    op = profile(L.opposite())
    arms = {
        "prime_continuous": pr.prime_continuous,
        "distributive": pr.distributive,
        "distributive_and_bicontinuous": pr.distributive
        and pr.continuous
        and op.continuous,
    }
    if len(set(arms.values())) != 1:
        return [{"arms": arms, "witnesses": pr.witnesses}]
    return []


def _check_hyper_below_paths(P):
    """On the opens lattice: interior path vs finite-set path (vs the
    collection oracle when it is enumerable)."""
    from .finspace import upper_interior

    opens = SetFamily.of(P.n, P.iter_upsets())
    lattice = opens.as_poset()
    out = []
    small = len(opens) <= 4
    interiors = [upper_interior(lattice, lattice.up[i]) for i in range(len(opens))]
    for i, u in enumerate(opens.masks):
        for j, v in enumerate(opens.masks):
            b = bool(interiors[i] >> j & 1)
            c, wit = hyper_below_opens(P, u, v)
            ok = b == c
            if ok and small:
                ok = b == hyper_below_collections(lattice, i, j)
            if not ok:
                out.append({"pair": [sorted(bits(u)), sorted(bits(v))], "paths": [b, c]})
    return out


def _check_compact_open_characterization(P):
    X = topology_space(P)
    out = []
    for u in P.iter_upsets():
        f = P.minimal_of(u)
        upf = P.up_closure_mask(f)
        if not (upf == u and X.interior_mask(upf) == upf):
            out.append({"open": sorted(bits(u))})
            continue
        cover = 0
        for x in bits(f):
            cover |= P.up[x]
        if cover != u:
            out.append({"open": sorted(bits(u)), "cover_gap": True})
    return out


def _check_opens_lattice_correspondence(P):
    pp = profile(P)
    sig = profile(SetFamily.of(P.n, P.iter_upsets()).as_poset())
    pairs = {
        "continuous_vs_completely_distributive": (
            pp.continuous,
            sig.prime_continuous,
        ),
        "algebraic_vs_cd_algebraic": (
            pp.algebraic,
            sig.prime_continuous and sig.algebraic,
        ),
        "quasicontinuous_vs_hypercontinuous": (
            pp.quasicontinuous,
            sig.hypercontinuous,
        ),
        "quasialgebraic_vs_algebraic": (pp.quasialgebraic, sig.algebraic),
        "quasialgebraic_vs_hyperalgebraic": (
            pp.quasialgebraic,
            sig.hyperalgebraic,
        ),
    }
    return [
        {"pair": name, "values": list(vals)}
        for name, vals in pairs.items()
        if vals[0] != vals[1]
    ]


def _check_vietoris_coincidence(P):
    gl = down_set_lattice(P)
    rep = scott_equals_vietoris(gl)
    out = []
    if not rep.principal_ok:
        out.append({"coincidence": rep.failure})
    w = diamond_preserves_unions(gl)
    if w is not None:
        out.append({"diamond_union": [sorted(bits(w[0])), sorted(bits(w[1]))]})
    arity = 1
    while P.n**(arity + 1) <= 64 and arity < 3:
        arity += 1
    for k in range(1, arity + 1):
        if not is_continuous(union_of_downsets_map(gl, k)):
            out.append({"tuple_map_not_continuous": k})
    return out


def _check_closed_set_adjunction(P):
    rep = adjunction_report(down_set_lattice(P))
    if rep.identity_holds and rep.deflation_holds and rep.violation is None:
        return []
    return [{"violation": rep.violation}]


def _check_core_compact_arms(P):
    rep = core_compact_report(P)
    if rep.all_arms_agree and rep.base_core_compact:
        return []
    return [
        {
            "arms": {
                "core_compact": rep.base_core_compact,
                "sober": rep.lattice_sober,
                "locally_compact": rep.lattice_locally_compact,
                "coincide": rep.topologies_coincide,
            }
        }
    ]


def _check_t1_discreteness(P):
    X = topology_space(P)
    closed = SetFamily.of(P.n, P.iter_downsets())
    lattice = closed.as_poset()
    upper = topology_space(lattice, "upper")
    coincide = upper.opens_verified
    discrete = separation(X).is_discrete
    if coincide and not discrete:
        return [{"t1_space_not_discrete": P.n}]
    if coincide is not True:
        return [{"coincidence_unverified": len(closed)}]
    return []


def _check_gamma_correspondence(P):
    rep = correspondence_report(P)
    if rep.all_hold:
        return []
    return [{"biconditionals": rep.biconditionals}]


def _check_compacts_mirror_opens(L):
    X = topology_space(L)
    q = saturated_family(X)
    down = SetFamily.of(L.n, L.iter_downsets())
    out = []
    comp = {m: L.full & ~m for m in q.masks}
    if sorted(comp.values()) != list(down.masks):
        out.append({"complements_differ": len(q)})
    else:
        qrev = q.as_poset().opposite()
        dposet = down.as_poset()
        cmap = [down.index[comp[m]] for m in q.masks]
        for i in range(len(q)):
            for j in range(len(q)):
                if qrev.leq(i, j) != dposet.leq(cmap[i], cmap[j]):
                    out.append({"order_mismatch": [i, j]})
    # bi-Scott topology: generated by both Scott topologies jointly, must be
    # compact (finite) and Hausdorff, i.e. discrete here
    subbasis = list(L.iter_upsets()) + list(L.iter_downsets())
    family = generate_topology(L.n, subbasis, cap=2 ** L.n)
    if len(family) != 2**L.n:
        out.append({"bi_scott_not_discrete": len(family)})
    return out


def _check_complement_adjunction(L):
    rep = filter_complement_adjunction(L)
    out = []
    if not (rep.identity_holds and rep.deflation_holds and rep.galois.valid):
        out.append(
            {
                "identity": rep.identity_holds,
                "deflation": rep.deflation_holds,
                "galois": rep.galois.violation,
            }
        )
    if rep.distributive and rep.join_preservation_witness is not None:
        out.append(
            {"join_preservation": sorted(bits(rep.join_preservation_witness))}
        )
    return out


def _check_hyperalgebraicity_square(L):
    pr = profile(L)
    op = profile(L.opposite())
    upper_on_dual = topology_space(L.opposite(), "upper")
    spec = spectrum(L)
    hull_kernel_scott = tuple(sorted(spec.hull_kernel_closed.masks)) == tuple(
        sorted(spec.space.spec.iter_downsets())
    )
    spec_profile = profile(spec.space.spec)
    conditions = {
        "hyperalgebraic": bool(pr.hyperalgebraic),
        "dual_scott_equals_upper": bool(upper_on_dual.opens_verified),
        "spectrum_quasialgebraic_scott": bool(
            spec_profile.quasialgebraic and hull_kernel_scott
        ),
        "dual_quasialgebraic": bool(op.quasialgebraic),
    }
    if len(set(conditions.values())) != 1:
        return [{"conditions": conditions}]
    return []


def _check_consonance_transfer(P):
    rep = consonance_transfer(topology_space(P))
    if rep.transfer_holds and not rep.witness_failures:
        return []
    return [{"transfer": rep.transfer_holds, "failures": rep.witness_failures}]


def _check_local_compactness_triangle(P):
    rep = local_compactness_report(topology_space(P))
    if rep.biconditional_holds:
        return []
    return [
        {
            "locally_compact": rep.locally_compact,
            "core_compact": rep.core_compact,
            "consonant": rep.consonant,
        }
    ]


REGISTRY = {
    e.tid: e
    for e in (
        TheoremEntry(
            "P2.1",
            "distributive = prime-continuous = distributive with continuous dual",
            "lattices",
            7,
            _check_prime_continuity_classification,
        ),
        TheoremEntry(
            "L2.3",
            "interior and finite-set characterizations of the relation below "
            "agree on opens lattices",
            "posets",
            5,
            _check_hyper_below_paths,
        ),
        TheoremEntry(
            "L2.4",
            "every compact open is the finitely generated upper set of its "
            "minimal elements",
            "spaces",
            5,
            _check_compact_open_characterization,
        ),
        TheoremEntry(
            "T2.5",
            "approximation properties of a poset match those of its opens lattice",
            "posets",
            5,
            _check_opens_lattice_correspondence,
        ),
        TheoremEntry(
            "P3.4",
            "Scott opens of the closed-set lattice are unions of finite "
            "diamond intersections",
            "posets",
            5,
            _check_vietoris_coincidence,
        ),
        TheoremEntry(
            "P3.8",
            "diamond and point-closure preimage form an adjunction between "
            "the opens lattices",
            "posets",
            5,
            _check_closed_set_adjunction,
        ),
        TheoremEntry(
            "T3.10",
            "core-compactness of the base matches sobriety, local compactness "
            "and topology coincidence on the closed-set lattice",
            "posets",
            5,
            _check_core_compact_arms,
        ),
        TheoremEntry(
            "P3.13",
            "a T1 space whose closed-set lattice has coinciding topologies is discrete",
            "t1-spaces",
            4,
            _check_t1_discreteness,
        ),
        TheoremEntry(
            "T3.15",
            "a poset and its closed-set lattice share the four approximation "
            "properties",
            "posets",
            5,
            _check_gamma_correspondence,
        ),
        TheoremEntry(
            "P4.2",
            "compact saturated sets under reverse inclusion mirror the "
            "down-set lattice; the bi-Scott topology is compact Hausdorff",
            "lattices",
            5,
            _check_compacts_mirror_opens,
        ),
        TheoremEntry(
            "P4.5",
            "complement-of-filter map and its upper adjoint satisfy the "
            "section laws; the adjoint preserves joins when distributive",
            "lattices",
            6,
            _check_complement_adjunction,
        ),
        TheoremEntry(
            "P4.7",
            "four equivalent faces of hyperalgebraicity for distributive lattices",
            "distributive-lattices",
            6,
            _check_hyperalgebraicity_square,
        ),
        TheoremEntry(
            "T5.2",
            "consonance carries over to the lower powerspace",
            "spaces",
            3,
            _check_consonance_transfer,
        ),
        TheoremEntry(
            "P5.4",
            "locally compact = core-compact and consonant",
            "spaces",
            4,
            _check_local_compactness_triangle,
        ),
    )
}


def run_theorem(tid, max_n=None, corpus_override=None):
    entry = REGISTRY.get(tid)
    if entry is None:
        raise UnknownTheorem(f"no theorem {tid!r}; known: {sorted(REGISTRY)}")
    kind = corpus_override or entry.corpus
    limit = entry.default_max_n if max_n is None else max_n
    limit = min(limit, ENUMERATION_CAP)
    start = time.perf_counter()
    instances = 0
    violations = []
    for P in _corpus(kind, limit):
        instances += 1
        for v in entry.checker(P):
            violations.append({"poset": encode_poset(P), **v})
    return TheoremReport(
        tid,
        {"kind": kind, "max_n": limit},
        instances,
        tuple(violations),
        time.perf_counter() - start,
    )
