"""3-uniform hypergraph toolkit for loose-path Ramsey machinery.

Detects the three forbidden patterns (loose path of length three, loose
3-cycle, the five-vertex gadget), purifies path-free hypergraphs by
bounded edge deletion, audits colorings of complete hosts through the
full counting pipeline, builds lower-bound colorings and bound tables,
and exports CNF instances for external SAT certification.
"""

from .core import (
    Component,
    ComponentPartition,
    Hypergraph,
    complete_hypergraph,
    components,
    make_triple,
    pair_degree,
    parse_hypergraph,
    write_hypergraph,
)
from .constructions import (
    BoundsRow,
    bounds_table,
    lower_bound_coloring,
    star_hypergraph,
)
from .errors import (
    DuplicateVertex,
    FalsificationWitness,
    FormatError,
    InputError,
    InvalidColoring,
    MissingGadgetEdge,
    ModelInvalid,
    NoGadgetPresent,
    NotPathFree,
    OrderTooSmall,
    PairDegreeTooLow,
    SameVertex,
    UncoloredTriple,
)
from .gen import SplitMix64, random_coloring, random_pfree
from .purification import DeletionCertificate, destroy_gadget_component, purify
from .patterns import (
    Embedding,
    PatternKind,
    contains_pattern,
    enumerate_loose_path3,
    find_gadget,
    find_loose_cycle3,
    find_loose_path3,
    find_pattern,
    oracle_contains,
)
from .pipeline import (
    CaseWitness,
    Coloring,
    PairGraph,
    PipelineTrace,
    audit,
    case_analysis,
    find_mono_path,
    find_path3_in_graph,
    parse_coloring,
    threshold,
    write_coloring,
)
from .satencode import CnfInstance, decode_model, encode, parse_model, to_dimacs

__version__ = "0.1.0"
