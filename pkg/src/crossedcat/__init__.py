"""Finite matched pairs, twisted products, pointed crossed categories, and
their braided centers, with exhaustive desk-scale verification."""

from .braided import (BraidedMatchedPair, center_braiding, center_pair, turaev_braiding,
                      verify_braiding)
from .center import (CenterSimple, CenterStructure, build_center, center_g_action,
                     center_gamma_action, center_tensor, enumerate_center, equivariant_center,
                     graded_center, relative_center_oracle, verify_center_braided)
from .groups import (FiniteGroup, GroupActionOnSet, GroupAutAction, GroupHom, cyclic, dihedral,
                     direct_product, enumerate_characters, find_isomorphism, group_hom,
                     identity_hom, kernel, subgroup_from_generators, symmetric, trivial_group,
                     validate_group)
from .jsonio import (load_braided, load_category, load_group, load_matched, save_braided,
                     save_category, save_group, save_matched)
from .matched import (MatchedPair, direct_pair, from_exact_factorization, matched_pair,
                      turaev_pair, verify_matched_pair, zappa_szep)
from .pointed import (PointedCrossedCategory, dual_data, pointed_category, vec_gamma,
                      verify_crossed_category)
from .report import VerificationReport
from .scalars import UnitScalar
from .words import (check_coherence, eval_structural, eval_word, parse_word, print_word,
                    word_arity)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
