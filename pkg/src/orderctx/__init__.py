"""Information orders, entropy measures, and measurement-context distances.

The package has three layers.  `poset` gives finite partial orders with
brute-force domain checks (directed subsets, approximation, bases, dcpo).
`states` and `measures` give probabilistic states under the information
order together with entropy measures and their axioms.  `qubit`, `context`
and `experiments` put those to work on ideal spin measurements: transition
matrices between bases, a contextual distance in bits, and sequential
experiments whose traces show whether a process ever pins down its outcome.
"""

from .context import (
    Classification,
    ContextReport,
    contextual_distance,
    identical_context_closure,
    poset_orthogonal,
    qubit_distance_curve,
)
from .errors import (
    CertainOutcomeError,
    CycleError,
    DimensionMismatch,
    EmptySubsetError,
    IndexOutOfRange,
    InvalidDimension,
    InvalidPermutation,
    InvalidStateError,
    OrderContextError,
    ParameterOutOfRange,
    SizeLimitError,
    UnknownLabelError,
)
from .experiments import (
    BoxStep,
    ClassicalTrace,
    DeterminismVerdict,
    QuantumAggregate,
    boxes_experiment,
    determinism_check,
    fixed_basis_repeat,
    predicted_step_entropies,
    qubit_experiment,
)
from .measures import (
    HARTLEY,
    SHANNON,
    AxiomReport,
    CheckResult,
    MeasurementFn,
    hartley_bits,
    is_monotone_on,
    kernel_at_maximal,
    linear_combo,
    shannon_bits,
    verify_axioms,
)
from .poset import (
    DEFAULT_ENUMERATION_CAP,
    FinitePoset,
    PosetReport,
    load_poset,
    poset_from_dict,
)
from .qubit import (
    BlochAxis,
    NBasis,
    QuantumTrace,
    QubitState,
    TraceStep,
    angle_between,
    axis_transition_matrix,
    measure,
    random_basis,
    run_sequence,
    transition_matrix,
    transition_probs,
)
from .rng import philox_generator
from .states import (
    ClassicalState,
    bayesian_leq,
    eliminate,
    is_pure,
    mixed,
    mixing_path,
    pure,
    sample_ordered_pair,
    sample_state,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
