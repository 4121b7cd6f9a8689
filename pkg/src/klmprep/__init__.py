"""Plan, optimize and simulate KLM ancilla-state preparation with tunable c-phase gates."""
from .errors import (
    DegenerateSpecError,
    FeasibilityError,
    KlmError,
    QubitIndexError,
    SizeError,
    ValidationError,
)
from .gates import (
    TauEpsilon,
    control_ratio,
    elementary,
    hadamard,
    max_ratio,
    phase_gate,
    pi_phase_ratio,
    signal_basis_rotation,
    split_ratio,
    tau_epsilon,
)
from .klm import (
    KlmSpec,
    family_spec,
    fidelity_to_spec,
    klm_amplitudes,
    load_spec,
    make_spec,
    ramp_spec,
    spec_from_json,
    spec_to_json,
    tail_norm,
    to_state_vector,
)
from .oracle import brute_force_plan
from .planner import (
    STRATEGIES,
    PrepPlan,
    PrepStep,
    extend_equal_split,
    optimal_phase,
    plan,
    required_ratios,
    simulate_extension,
    simulate_plan,
    step_params,
    strategy_threshold,
)
from .state import (
    QubitParams,
    StateVector,
    apply_1q,
    apply_cphase,
    basis_state,
    fidelity,
    product_state,
)
from .success import SuccessReport, franson_baseline, p_cphase, plan_success

__version__ = "0.1.0"
