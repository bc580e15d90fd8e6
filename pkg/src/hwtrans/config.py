"""Size bounds shared by all modules.

Every bound is enforced with :class:`BoundError`; nothing is truncated
silently.  ``HWV_MAX_T`` in the environment overrides ``max_t``.
"""

import os
from dataclasses import dataclass, replace


class BoundError(ValueError):
    """An instance exceeds a configured size bound."""


@dataclass(frozen=True)
class Bounds:
    max_t: int = 6                   # hwv constructions
    group_algebra_max_t: int = 8     # dense-ish Sym_t computations
    grid_max_t: int = 4              # full cross-oracle grids
    character_max_t: int = 10
    brute_force_monomials: int = 20000
    nilcone_max_n: int = 4
    nilcone_max_degree: int = 6


def current_bounds():
    b = Bounds()
    env = os.environ.get("HWV_MAX_T")
    if env:
        b = replace(b, max_t=int(env))
    return b


def check(value, bound, what):
    if value > bound:
        raise BoundError(f"{what} = {value} exceeds the configured bound {bound}")
