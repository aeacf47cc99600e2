# Copyright (c) 2026 tabuq contributors
# SPDX-License-Identifier: Apache-2.0
"""QUBO tabu search with pluggable neighborhood samplers.

Thin python surface over the C++ core: instance parsing, objective
evaluation, the one-flip and sampler-driven tabu searches, the exact QAOA
statevector simulator with locality penalty, the derivative-free angle
optimizer, and the ECDF benchmarking helpers.
"""

from tabuq._tabuq import *  # noqa: F401,F403
from tabuq._tabuq import __version__  # noqa: F401
