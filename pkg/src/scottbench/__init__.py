"""Workbench for finite posets, lattices and finite T0 spaces."""

from .canonical import (
    automorphism_count,
    cache_key,
    canonical_form,
    decode_poset,
    encode_poset,
    is_isomorphic,
)
from .closed_sets import (
    DownSetLattice,
    adjunction_report,
    diamond,
    diamond_basis_witness,
    down_set_lattice,
    filter_complement_adjunction,
    open_points,
    point_closure_map,
    scott_equals_vietoris,
    union_of_downsets,
    union_of_downsets_map,
)
from .enumeration import (
    enumerate_lattices,
    enumerate_posets,
    labeled_counts,
    lattices_upto,
    orbit_counts,
    posets_upto,
)
from .finspace import (
    FinSpace,
    closed_family,
    compactness,
    opens_family,
    saturated_family,
    separation,
    sobriety,
    topology_space,
)
from .maps import GaloisPair, MonotoneMap, check_galois, is_continuous
from .orderprops import (
    LatticeProfile,
    compact_elements,
    hyper_below,
    hyper_below_collections,
    hyper_below_opens,
    jointly_scott_continuous,
    profile,
    spectrum,
    totally_below,
    totally_below_bruteforce,
    way_below,
    way_below_definitional,
    way_below_set,
)
from .poset import (
    Poset,
    SetFamily,
    Subset,
    antichain,
    boolean,
    build_poset,
    chain,
    diamond as diamond_poset,
    down_closure,
    ladder,
    lattice_ops,
    m3,
    n5,
    named_poset,
    opposite,
    product,
    up_closure,
)
from .powerspace import (
    commutes,
    consonance_transfer,
    diamond_intersection,
    is_consonant,
    local_compactness_report,
    lower_powerspace,
    neighborhood_filter,
    upper_powerspace,
)
from .theorems import REGISTRY, run_theorem
