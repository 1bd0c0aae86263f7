"""NOFIL, the impartial game of not completing a block of a Steiner triple system."""

from .catalog import BUILTIN_NAMES, builtin_sts
from .errors import NofilError
from .game import (
    AvailableHypergraph,
    Position,
    apply_move,
    available_hypergraph,
    census,
    initial_position,
    position_from_played,
)
from .kayles import SimpleGraph, kayles_grundy
from .solver import Solver, best_moves, game_tree, grundy, grundy_hypergraph, outcome
from .sts import SteinerTripleSystem, certificate, validate_sts

__all__ = [
    "BUILTIN_NAMES",
    "AvailableHypergraph",
    "NofilError",
    "Position",
    "SimpleGraph",
    "Solver",
    "SteinerTripleSystem",
    "apply_move",
    "available_hypergraph",
    "best_moves",
    "builtin_sts",
    "census",
    "certificate",
    "game_tree",
    "grundy",
    "grundy_hypergraph",
    "initial_position",
    "kayles_grundy",
    "outcome",
    "position_from_played",
    "validate_sts",
]
