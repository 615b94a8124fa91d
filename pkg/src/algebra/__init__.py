"""
Boolean algebra package: cutting and pasting, the operations, canonical form.
"""

from .boolean_ops import (
    complement,
    difference,
    join,
    join_all,
    meet,
    meet_all,
    symmetric_difference,
)
from .canonical import canonicalize, equal_canonical
from .cutting import cut, paste

__all__ = [
    "complement",
    "cut",
    "canonicalize",
    "difference",
    "equal_canonical",
    "join",
    "join_all",
    "meet",
    "meet_all",
    "paste",
    "symmetric_difference",
]
