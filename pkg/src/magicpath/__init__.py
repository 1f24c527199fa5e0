"""Magic square trajectories: enumeration, distance patterns and their symmetries."""

from .dudeney import GroupTable, build_group_table, chord_pattern, classify_group
from .enumerator import CanonicalCatalog, enumerate_all, enumerate_canonical
from .square import (
    Cell,
    MagicPathError,
    Square,
    Transform,
    apply_transform,
    complement,
    frenicle_canonical,
    is_associative,
    is_axis_complement,
    is_magic,
    is_pandiagonal,
    magic_constant,
)
from .symmetry import (
    ClassifierParams,
    SymmetryClass,
    classify,
    detect_period,
    duplicate_census,
    is_palindrome,
    longest_local_palindrome,
    mismatch_pairs,
)
from .trajectory import LegSequence, catalog_extremes, city_positions, leg_squares, trajectory_stats

__version__ = "0.1.0"
