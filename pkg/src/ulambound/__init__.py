"""Exact sphere-packing and liar-game lower bounds on binary code length."""

from .bounds import (BoundResult, CodeParams, Feasibility, KSequence, k_sequence,
                     new_bound_min_length, spb_feasible, spb_min_length, sweep,
                     theorem2_feasible)
from .combinatorics import binom, gcd_window, sphere_volume

__version__ = "0.1.0"
