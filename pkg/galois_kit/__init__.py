"""
Fuzzy relations, Galois connections and closure operators over finite residuated lattices
"""

from .__version__ import (
    __author__,
    __author_email__,
    __copyright__,
    __description__,
    __license__,
    __title__,
    __url__,
    __version__,
)

from .errors import (
    GaloisKitError,
    LawViolationError,
    PreconditionError,
    ShapeError,
    UnsupportedStructureError,
    NotAdjointableError,
    NotDecomposableError,
    BudgetExceededError,
    FormatError,
)

from .sweep import (
    DEFAULT_BUDGET,
    BUDGET_ENV_VAR,
    resolve_budget,
)

from .lattice import (
    Element,
    LatticeKind,
    LatticeSpec,
    LatticeReport,
    MvOperations,
    DistributionReport,
    make_lukasiewicz_chain,
    make_goedel_chain,
    make_custom_lattice,
    validate_residuated_lattice,
    classify_lattice,
    is_boolean_algebra,
    mv_extend,
    check_residuation_distribution,
)

from .relation import (
    IndexSet,
    FuzzyRelation,
    RelationReport,
    build_relation,
    transpose,
    all_relations,
    relation_properties,
)

from .vector import (
    FuzzyVector,
    VectorAlgebra,
)

from .operator import (
    InducedKind,
    ProvenanceKind,
    OperatorTable,
    GaloisReport,
    TypeClass,
    MappingTypeReport,
    AdjointDirection,
    RecoveryKind,
    ClosureReport,
    DecompositionMode,
    apply_induced,
    induced_table,
    verify_galois,
    classify_mapping,
    compute_adjoint,
    recover_relation,
    inducing_relations,
    closure_interior_check,
    decompose_operator,
    conjugate_check,
    boolean_criterion_check,
    type_transfer_check,
    closed_elements_check,
)

from .fca import (
    FuzzyContext,
    DerivationSide,
    Concept,
    ConceptSet,
    ExportFormat,
    derive,
    derivation_pair,
    enumerate_concepts,
    export_lattice,
    context_from_closure,
)

from .temporal import (
    TimeFrame,
    TenseStructure,
    AxiomSuite,
    AxiomReport,
    tense_from_frame,
    check_axioms,
    frame_correspondence,
    monadic_from_equivalence,
    check_monadic,
    monadic_tense_bridge,
    strong_adjoint_check,
    negation_swap_check,
)

from .file_formats import (
    load_lattice,
    dump_lattice,
    load_relation,
    dump_relation,
    load_operator,
    load_context,
    parse_vector,
)

from .cli_output import (
    CommandResult,
    ResultStatus,
)
