"""Exact composita of fields inside finite Galois contexts.

Subgroups of a finite ambient group stand for fields; double cosets stand
for mutual extensions.  The package closes systems of composita under
identities, duals and amalgamation, extracts the common base field,
derives fusion rules with multiplicities, and cross-validates everything
against an independent exact number-field tensor oracle.
"""

from .closure import (BaseFieldResult, CompositumSystem, base_field, close,
                      h_group, is_connected, replay_derivations,
                      verify_triangles)
from .errors import (CapExceededError, CompositaError, CosetDecompositionError,
                     DegreeMismatchError, DocumentError, EmbeddingError,
                     ModelInvariantError, NotClosedError, NotConnectedError,
                     OracleMismatchError, SemisimplicityError)
from .fusion import (FusionTable, OneMorphism, SimpleOneMorphism,
                     build_fusion_table, dual_simple, end_field, fold, fuse,
                     fuse_cosets, identity_simple, inv_dim,
                     invariant_space_dim, split_count, unfold,
                     weak_rigidity_check)
from .galois import (Compositum, FieldNode, GaloisContext, amalgamate, dual,
                     identity_compositum, make_compositum)
from .intfactor import factor_int_poly, is_irreducible
from .numfield import (EtaleAlgebra, EtaleSummand, FieldEmbedding,
                       NumberField, decompose_etale, radical_dim, tensor_over)
from .perm import (ElementSet, Permutation, Subgroup, compose, conjugate,
                   decompose_into_double_cosets, double_coset, index,
                   intersect, subgroup_closure)
from .ratpoly import RatPoly
from .realize import (RealizedContext, fixed_field, load_realization,
                      oracle_check, oracle_sweep, realization_to_document,
                      realize_context, sweep_system)

__version__ = "0.1.0"
