"""Combinatorics of fat-vertex intersection graph pairs.

Main entry points: :class:`IntersectionPair` and :func:`validate_pair` for
pairs, :class:`Star` and the derivative functions for the star calculus,
:func:`induce_orientation` for dual orientations and :func:`run_suite` for
the lemma harness.
"""

from .core import IntersectionPair, PairError, bridge_width, subgraph_labels, validate_pair
from .cycles import (all_x_cycles, find_great_webs, find_s_sets, isolated_vertices,
                     scharlemann_cycles, trees_or_cycles, web_number_check)
from .enumeration import EnumerationSpec, enumerate_pairs
from .harness import REGISTRY, Corpus, CorpusConfig, run_suite, verify_lemma
from .orientation import (build_rf, conjugate_star, directed_index_census, find_representing_faces,
                          induce_orientation, reverse_faces, two_color)
from .stars import (Star, StarError, derivative, derivative_relative, inherited_type,
                    sequence_of_coherence)

__version__ = "0.1.0"

__all__ = [
    "IntersectionPair", "PairError", "bridge_width", "subgraph_labels", "validate_pair",
    "all_x_cycles", "find_great_webs", "find_s_sets", "isolated_vertices", "scharlemann_cycles",
    "trees_or_cycles", "web_number_check", "EnumerationSpec", "enumerate_pairs",
    "REGISTRY", "Corpus", "CorpusConfig", "run_suite", "verify_lemma",
    "build_rf", "conjugate_star", "directed_index_census", "find_representing_faces",
    "induce_orientation", "reverse_faces", "two_color",
    "Star", "StarError", "derivative", "derivative_relative", "inherited_type",
    "sequence_of_coherence",
]
