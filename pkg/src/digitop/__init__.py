"""Digital topology toolkit.

c_u adjacencies on Z^n, finite digital images, digitally continuous
maps, homotopy certificates with auditable verification, and a
contractibility decision procedure by reachability over the graph of
continuous self-maps. Ships the MSS_18 sphere model and the machinery
to check its contractibility end to end.
"""

from .lattice import Adjacency, Point, adjacent, adjacent_or_equal, named_adjacency, neighbors
from .image import (
    DigitalImage,
    components,
    image,
    is_connected,
    is_connected_subset,
    is_simple_closed_curve,
    neighbors_in,
)
from .mapping import (
    DigitalMap,
    compose,
    constant_map,
    digital_map,
    identity_map,
    is_continuous_pointwise,
    is_continuous_setwise,
)
from .homotopy import (
    Homotopy,
    Verdict,
    concatenate,
    homotopy,
    is_contraction,
    reverse,
    verify_homotopy,
)
from .search import (
    MapGraphState,
    SearchLimits,
    SearchOutcome,
    SearchVerdict,
    audit_closure,
    decide_contractibility,
    guided_search,
    map_state,
    neighbor_maps,
)
from .catalog import (
    CatalogEntry,
    RefutationReport,
    mss18,
    mss18_contraction,
    mss18_cross_section,
    refutation_report,
    simple_closed_curve,
)

__version__ = "0.1.0"

__all__ = [
    "Adjacency",
    "CatalogEntry",
    "DigitalImage",
    "DigitalMap",
    "Homotopy",
    "MapGraphState",
    "Point",
    "RefutationReport",
    "SearchLimits",
    "SearchOutcome",
    "SearchVerdict",
    "Verdict",
    "adjacent",
    "adjacent_or_equal",
    "audit_closure",
    "components",
    "compose",
    "concatenate",
    "constant_map",
    "decide_contractibility",
    "digital_map",
    "guided_search",
    "homotopy",
    "identity_map",
    "image",
    "is_connected",
    "is_connected_subset",
    "is_continuous_pointwise",
    "is_continuous_setwise",
    "is_contraction",
    "is_simple_closed_curve",
    "map_state",
    "mss18",
    "mss18_contraction",
    "mss18_cross_section",
    "named_adjacency",
    "neighbor_maps",
    "neighbors",
    "neighbors_in",
    "refutation_report",
    "reverse",
    "simple_closed_curve",
    "verify_homotopy",
]
