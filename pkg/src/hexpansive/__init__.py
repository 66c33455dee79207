"""Exact structure decomposition of H-expansive matrices.

A matrix ``A`` is H-expansive for an invertible Hermitian ``H`` when
``A*HA - H`` is positive semidefinite.  :func:`decompose` splits ``C^n`` into
four subspaces so that the largest H-unitary compression of ``A`` appears as
a diagonal block; :func:`verify` re-checks every block identity.  All
arithmetic is exact over the Gaussian rationals.
"""

from .errors import (
    HExpansiveError,
    NotExpansiveError,
    ParseError,
    TheoremViolationError,
)
from .generator import PlantSpec, PlantedPair, cayley_h_unitary, plant, round_trip_check
from .krein import HPair, classify, defect, h_adjoint, unobservable_subspace
from .linalg import Inertia, hermitian_inertia, inverse, is_psd, kernel, rank, rref, solve
from .matrix import Matrix, block_diag, hstack, vstack
from .scalars import GaussianRational, rat_make
from .structure import (
    Decomposition,
    VerificationReport,
    decompose,
    neutral_core,
    selfadjoint_decompose,
    skew_link,
    unitary_compression,
    verify,
)
from .subspace import Subspace, extend_complement, h_companion, intersect

__version__ = "0.1.0"
