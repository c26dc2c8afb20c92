"""Entanglement bounds for superpositions of bipartite pure states.

States are complex numpy arrays of shape (d_A, d_B); a superposition is a
list of coefficients plus a list of such arrays.
"""

from ._superbound import (
    AssistantCheckReport,
    BoundReport,
    DegenerateInputError,
    DomainError,
    InvariantError,
    NumericError,
    PreconditionError,
    SchemaError,
    ShapeError,
    assistant_state_check,
    basis_matrix,
    draw_spec,
    entanglement,
    evaluate_bound,
    exact_biorthogonal_entanglement,
    haar_state,
    is_biorthogonal,
    normalization_coeffs,
    reduced_density_matrix,
    run_campaign,
    schmidt_probabilities,
    superposition_entanglement,
    von_neumann_entropy,
)

__all__ = [
    "AssistantCheckReport",
    "BoundReport",
    "DegenerateInputError",
    "DomainError",
    "InvariantError",
    "NumericError",
    "PreconditionError",
    "SchemaError",
    "ShapeError",
    "assistant_state_check",
    "basis_matrix",
    "draw_spec",
    "entanglement",
    "evaluate_bound",
    "exact_biorthogonal_entanglement",
    "haar_state",
    "is_biorthogonal",
    "normalization_coeffs",
    "reduced_density_matrix",
    "run_campaign",
    "schmidt_probabilities",
    "superposition_entanglement",
    "von_neumann_entropy",
]
