"""Cut-cofinality calculus for linear orders, ordered abelian groups and
ordered fields, with a concrete finite-support Hahn-series ground layer."""

from .cardinals import (
    ALEPH0,
    ALEPH1,
    Card,
    CardSet,
    CofPair,
    ONE,
    OrdinalIndex,
    ZERO,
    aleph,
    is_regular,
    reg_below,
    succ,
)
from .errors import (
    DescriptorError,
    DomainError,
    NotDerivableError,
    OrderCutsError,
    ParseError,
    SideConditionError,
)
from .order_terms import (
    Atom,
    CardinalSchedule,
    Completeness,
    Completion,
    CutSpectrum,
    EMPTY,
    Empty,
    FiniteChain,
    LexRefined,
    LexSchedule,
    OrderExtension,
    PhiMap,
    PhiPiece,
    Rev,
    Sum,
    WellOrder,
    card_bound,
    cf,
    chain,
    check_side_conditions,
    ci,
    coin_cofin,
    completeness_predicates,
    cut_spectrum,
    extend_order,
    rev,
    sum_of,
    well,
)
from .struct_classify import (
    ComponentAssignment,
    ComponentKind,
    FieldDescriptor,
    GroupDescriptor,
    Residue,
    Verdict,
    cf_group,
    cf_m_gamma,
    ci_positive_cone,
    classify_discrete,
    classify_field,
    classify_group,
    classify_group_cutwise,
    extend_field,
    extend_group,
    principal_cuts_ok,
    type1_cuts_ok,
    type2_cuts_ok,
)
from .hahn_concrete import (
    ExponentGroup,
    HahnElement,
    INF,
    INT_CHAIN,
    RAT_CHAIN,
    SeriesElement,
    UltraBall,
    arch_equiv,
    arch_witness,
    ball,
    ball_compare,
    nat_valuation,
    residue,
    series_mul,
    series_valuation,
)
from .oracle import (
    ConcreteChain,
    CutWitness,
    OracleReport,
    WitnessSide,
    concretize,
    derive_cf,
    derive_ci,
    sample_cuts,
    spectrum_soundness,
    verify_witness,
)

__version__ = "0.1.0"
