"""Solitary waves of the generalized Kawahara equation.

Thin wrapper over the compiled ``_core`` module. Fields come back as
numpy arrays inside plain dicts.
"""

from ._core import (
    ComputationError,
    albert,
    beta_p,
    conserved,
    critical_exponent,
    evolve,
    explicit_soliton,
    explicit_speed,
    gkdv_soliton,
    groundstate,
    index,
    linear_decay_rate,
    orbital_distance,
    reproduce,
    spectrum,
)

__all__ = [
    "ComputationError",
    "albert",
    "beta_p",
    "conserved",
    "critical_exponent",
    "evolve",
    "explicit_soliton",
    "explicit_speed",
    "gkdv_soliton",
    "groundstate",
    "index",
    "linear_decay_rate",
    "orbital_distance",
    "reproduce",
    "spectrum",
]
