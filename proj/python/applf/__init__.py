"""Finite-field Appell-Lauricella toolkit: exact character-sum periods,
point counts on generalized Picard curves, and the identity verification
harness, backed by the C++ core."""

from ._applf import (
    ApplfError,
    count_points,
    eval_fd,
    eval_pd,
    genus,
    hasse_invariant,
    list_identities,
    sweep,
    trace,
    verify,
    zeta_pair,
)

__all__ = [
    "ApplfError",
    "count_points",
    "eval_fd",
    "eval_pd",
    "genus",
    "hasse_invariant",
    "list_identities",
    "sweep",
    "trace",
    "verify",
    "zeta_pair",
]
