"""Smooth torus quotients of Schubert varieties in the Grassmannian G(r, n)."""

from .core import (
    ColumnTuple, GrassmannianContext, InvalidTupleError, PartitionShape,
    all_tuples, bruhat_leq, enumerate_interval, from_partition, make_context,
    parse_tuple, run_length, to_partition, top_tuple,
)
from .semistability import (
    NonCoprimeError, SemistableWitness, is_semistable_nonempty,
    minimal_semistable, semistable_witness,
)
from .singular import (
    singular_components, singular_components_oracle,
    singular_components_via_runs, smooth_fixed_points_oracle,
    stabilizer_descents,
)
from .smoothness import (
    IntegrityError, SmoothnessReport, analyze, criterion_components,
    criterion_runs,
)
from .words import (
    canonical_reduced_word, parabolic_orbit, reflect_subset,
    tuple_to_min_coset_perm, word_to_permutation,
)

__version__ = "0.1.0"
