"""Density matrices, single-qubit channels, Bloch maps and diagrams of states."""

from ._core import (
    DomainError,
    InputError,
    active_lines,
    apply_channel,
    bloch_map,
    channel_operators,
    dm_from_pure,
    ellipsoid,
    partial_trace,
    purify,
    render_diagram,
    run_cli,
    simulate,
    spectral_decompose,
    validate_density,
)

__all__ = [
    "DomainError",
    "InputError",
    "active_lines",
    "apply_channel",
    "bloch_map",
    "channel_operators",
    "dm_from_pure",
    "ellipsoid",
    "partial_trace",
    "purify",
    "render_diagram",
    "run_cli",
    "simulate",
    "spectral_decompose",
    "validate_density",
]
