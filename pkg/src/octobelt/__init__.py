"""Exact octonion arithmetic and a discrete hoop-and-ribbon model of the octonion loop."""

from .algebra import (
    BASIS_NAMES,
    Octonion,
    Quaternion,
    associator,
    oct_conj,
    oct_inverse,
    oct_mul,
    oct_norm,
    quat_conj,
    quat_mul,
    quat_norm,
    rotation_matrix,
)
from .loop16 import SignedBasis, build_loop_table, eval_word, loop_mul, predicates

__version__ = "0.1.0"

__all__ = [
    "BASIS_NAMES",
    "Octonion",
    "Quaternion",
    "SignedBasis",
    "associator",
    "build_loop_table",
    "eval_word",
    "loop_mul",
    "oct_conj",
    "oct_inverse",
    "oct_mul",
    "oct_norm",
    "predicates",
    "quat_conj",
    "quat_mul",
    "quat_norm",
    "rotation_matrix",
]
