"""Conjugacy and structure of finite inverse semigroups and partial bijections."""

from .pbij import PartialBijection, compose, inverse
from .orbits import cycle_chain_type, cycle_type
from .conj_symmetric import conj_i, conj_p, conj_pstar, conj_tr, conj_u, conj_o
from .closure import generate, check_property, is_factorizable
from .abstract import CayleyTable, conj_classes

__version__ = "0.1.0"

__all__ = [
    "PartialBijection", "compose", "inverse", "cycle_chain_type", "cycle_type",
    "conj_i", "conj_p", "conj_pstar", "conj_tr", "conj_u", "conj_o",
    "generate", "check_property", "is_factorizable", "CayleyTable", "conj_classes",
]
