"""Dendroid group automata over finitely-described infinite alphabets."""

from .alphabet import AlphabetSpec, Letter, fin, parse_letter, ray
from .automaton import DendroidReport, GroupAutomaton, dump, dumps, load, loads
from .action import (
    ProductAutomaton,
    SchreierBall,
    Tower,
    act,
    activity_profile,
    format_level_word,
    parse_level_word,
    product,
    schreier_ball,
    section_set,
    walk_return_stats,
)
from .exceptions import DomainError, FormatError, RadiusError
from .family import (
    CoreGraph,
    FamilyCertificate,
    FamilyVerdict,
    auto_radius,
    core_graph,
    cycle_diagram_oracle,
    is_dendroid_family,
)
from .models import binary_odometer, example_1mz_expz, get_model
from .permutation import FDPerm, FiniteOrbit, InfiniteOrbit, OrbitDecomposition, identity_perm
from .subshift import (
    FaithfulnessReport,
    SubshiftWord,
    check_faithful,
    compose_image,
    reduced_words,
    schreier_segment,
    subshift_perm,
    subshift_window_automaton,
    universal_word,
)
from .translation import (
    FiniteSupport,
    TailShift,
    bounded_equal,
    infinite_generators,
    support,
    translation_vector,
)
from .words import SignedWord

__version__ = "0.1.0"

__all__ = [
    "AlphabetSpec",
    "CoreGraph",
    "DendroidReport",
    "DomainError",
    "FDPerm",
    "FaithfulnessReport",
    "FamilyCertificate",
    "FamilyVerdict",
    "FiniteOrbit",
    "FiniteSupport",
    "FormatError",
    "GroupAutomaton",
    "InfiniteOrbit",
    "Letter",
    "OrbitDecomposition",
    "ProductAutomaton",
    "RadiusError",
    "SchreierBall",
    "SignedWord",
    "SubshiftWord",
    "TailShift",
    "Tower",
    "act",
    "activity_profile",
    "auto_radius",
    "binary_odometer",
    "bounded_equal",
    "check_faithful",
    "compose_image",
    "core_graph",
    "cycle_diagram_oracle",
    "dump",
    "dumps",
    "example_1mz_expz",
    "fin",
    "format_level_word",
    "get_model",
    "identity_perm",
    "infinite_generators",
    "is_dendroid_family",
    "load",
    "loads",
    "parse_letter",
    "parse_level_word",
    "product",
    "ray",
    "reduced_words",
    "schreier_ball",
    "schreier_segment",
    "section_set",
    "subshift_perm",
    "subshift_window_automaton",
    "support",
    "translation_vector",
    "universal_word",
    "walk_return_stats",
]
