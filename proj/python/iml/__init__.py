"""Exact computation of f(n, m), the shortest interval (m, m+L] holding
distinct multiples a_1, ..., a_n with i | a_i."""

from ._iml import *  # noqa: F401,F403
from ._iml import ENGINE_VERSION, solve_f

__all__ = [name for name in dir() if not name.startswith("_")]
