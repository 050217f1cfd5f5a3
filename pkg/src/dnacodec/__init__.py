"""Transducer-described code properties of regular languages.

The package decides whether a regular language satisfies (and is maximal
with respect to) input-altering / input-preserving transducer properties
relative to a (anti)morphic permutation, compiles trajectory-based
bond-freeness and the classic DNA code properties into such transducers,
and carries bounded solvers plus reductions for correspondence problems.
"""

from .alphabets import BINARY, DNA, Alphabet, Permutation, dna_delta
from .automata import Nfa, parse_regex
from .dna import (
    NORMAL,
    PROPERTY_NAMES,
    STRICT,
    WEAK,
    hamming_property,
    hierarchy_edges,
    named_property,
)
from .errors import ClassAssertionRefuted, DnaCodecError, FormatError, ResourceLimitError
from .fado import parse_fado, serialize_fado, unescape_cli_text
from .pcp import (
    PcpInstance,
    SolutionCheck,
    ThetaPcpInstance,
    check_solution,
    map_solution,
    pcp_to_preserving_transducer,
    reduce_pcp_to_theta_pcp,
    solve_bounded,
    theta_pcp_to_one_state_transducer,
)
from .properties import (
    INPUT_ALTERING,
    INPUT_PRESERVING,
    PropertyDescriptor,
    S_KIND,
    UNRESTRICTED,
    Verdict,
    W_KIND,
    find_extension,
    is_maximal,
    satisfies,
    satisfies_S,
    satisfies_W_general,
    satisfies_W_preserving,
)
from .trajectories import (
    TrajectoryPair,
    bond_free_operator,
    build_op_transducer,
    compile_trajectory_property,
    delete_on_trajectory,
    shuffle_on_trajectory,
    trajectory_nfa,
)
from .transducers import (
    Transducer,
    bounded_counterexample,
    is_functional,
    is_length_preserving,
    is_partial_identity,
)

__all__ = [
    "Alphabet",
    "Permutation",
    "dna_delta",
    "DNA",
    "BINARY",
    "Nfa",
    "parse_regex",
    "Transducer",
    "bounded_counterexample",
    "is_functional",
    "is_length_preserving",
    "is_partial_identity",
    "PropertyDescriptor",
    "Verdict",
    "S_KIND",
    "W_KIND",
    "UNRESTRICTED",
    "INPUT_ALTERING",
    "INPUT_PRESERVING",
    "satisfies",
    "satisfies_S",
    "satisfies_W_preserving",
    "satisfies_W_general",
    "is_maximal",
    "find_extension",
    "TrajectoryPair",
    "shuffle_on_trajectory",
    "delete_on_trajectory",
    "trajectory_nfa",
    "build_op_transducer",
    "bond_free_operator",
    "compile_trajectory_property",
    "STRICT",
    "NORMAL",
    "WEAK",
    "PROPERTY_NAMES",
    "named_property",
    "hamming_property",
    "hierarchy_edges",
    "PcpInstance",
    "ThetaPcpInstance",
    "SolutionCheck",
    "check_solution",
    "solve_bounded",
    "reduce_pcp_to_theta_pcp",
    "map_solution",
    "pcp_to_preserving_transducer",
    "theta_pcp_to_one_state_transducer",
    "parse_fado",
    "serialize_fado",
    "unescape_cli_text",
    "DnaCodecError",
    "FormatError",
    "ResourceLimitError",
    "ClassAssertionRefuted",
    "__version__",
]

__version__ = "0.1.0"
