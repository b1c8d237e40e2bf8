"""Compressed enumeration of all spanning trees with wildcard rows."""

from .bits import labels_of, mask_of
from .errors import (DisconnectedGraphError, GraphError, GraphFormatError, LibraryError,
                     LimitExceeded, WildtreeError)
from .graph import (Graph, Hypergraph, complete_graph, enumerate_cycles, enumerate_mincuts,
                    is_connected, mincuts_natural_order, parse_graph, read_graph, stars)
from .library import (Library, build_library, intersect_row, load_library, relevant_rows,
                      save_library, sieve)
from .noncover import compress_noncovers, cycles_to_sptrees, impose_noncover
from .oracles import (brute_force_noncovers, brute_force_spanning_trees, brute_force_transversals,
                      connected_count_by_size, kirchhoff_count, reliability_polynomial)
from .rows import ERow, NRow, RankPoly
from .transversal import (check_conjectures, compress_transversals, edge_covers, impose_transversal,
                          mcuts_to_sptrees)

__version__ = "0.1.0"
