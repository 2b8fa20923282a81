"""Twin-beam conditional measurements, Wigner functions and teleportation."""

import json as _json

from ._twinbeam import (
    ConditionalResult,
    ConvergenceError,
    PovmElement,
    PreconditionError,
    RejectedOutcome,
    TruncationError,
    TwinBeam,
    binned_homodyne_povm,
    coherent_state,
    conditional_state,
    effective_K,
    fidelity,
    heterodyne_povm,
    homodyne_povm,
    mean_photon_number,
    onoff_povm,
    oracle_names,
    outcome_probability,
    run,
    squeezed_state,
    state,
    teleport_state,
    teleport_via_conditioning,
    trace_distance,
    wigner,
)
from ._twinbeam import oracle as _oracle

__version__ = "0.1.0"


def oracle(name, **params):
    """Closed-form result by name, decoded from JSON."""
    return _json.loads(_oracle(name, **params))
