"""charzero: exact character-table zero-pattern toolkit.

Builds and ingests finite-group character tables with exact cyclotomic
values, extracts their zero patterns, solves the minimum class-cover
problem, and analyzes the common-zero graphs.
"""

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, root_of_unity
from .partitions import (
    conjugate,
    degree,
    has_hook,
    hook_lengths,
    mn_value,
    partitions_of,
    remove_rim_hooks,
)
from .chartable import (
    Character,
    CharacterTable,
    ConjClass,
    SchemaError,
    TableMetadata,
    build_abelian,
    build_cyclic,
    build_dihedral,
    build_symmetric,
    direct_product,
    load_table,
    save_table,
    validate,
)
from .vanishing import (
    DataIntegrityError,
    ZeroPattern,
    burnside_check,
    camina_classes,
    central_type_characters,
    nonvanishing_classes,
    prime_power_check,
    vanishing_classes,
    zero_pattern,
)
from .hcover import (
    CoverResult,
    NoCoverError,
    check_cover,
    conjecture_report,
    min_cover,
    pair_cover_product,
)
from .zerographs import (
    BipartiteGraph,
    GraphTooLargeError,
    SimpleGraph,
    bound_checks,
    components,
    delta_v,
    gamma_v,
    independence_number,
    theta,
)

__version__ = "0.1.0"
