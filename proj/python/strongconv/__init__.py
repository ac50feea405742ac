"""Renyi-entropy and strong-converse toolkit for quantum channels."""

import json

from ._core import (
    DimensionMismatch,
    DomainError,
    InvariantViolation,
    NotCertified,
    ParseError,
    QuantumChannel,
    ResourceExceeded,
    StrongconvError,
    additivity_check,
    alpha_relative_entropy,
    capacity,
    chi_alpha,
    depolarizing,
    identity_channel,
    min_output_renyi,
    pauli_diagonal,
    renyi_entropy,
    werner_holevo,
)
from . import _core


def exponent_curve(channel, rates, alpha_max, grid_points=64, restarts=32, seed=0x5EED):
    return json.loads(_core.exponent_curve(channel, list(rates), alpha_max, grid_points, restarts, seed))


def run_experiment(channel, n, rate, codebooks=50, generation="entangled-random", seed=1, exponent=0.0):
    return json.loads(_core.run_experiment(channel, n, rate, codebooks, generation, seed, exponent))


def verify(suite="all", samples=200, seed=1):
    return json.loads(_core.verify(suite, samples, seed))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
