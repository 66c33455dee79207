"""Indefinite inner product predicates and the (D, A) observability machinery."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError
from .linalg import Inertia, hermitian_inertia, inverse, kernel
from .matrix import Matrix, vstack
from .subspace import Subspace, check_inner_product


@dataclass(frozen=True)
class HPair:
    """A square matrix ``A`` together with an invertible Hermitian ``H``."""

    A: Matrix
    H: Matrix

    def __post_init__(self):
        if not self.A.is_square:
            raise DimensionError(f"A must be square, got {self.A.rows}x{self.A.cols}")
        check_inner_product(self.H, self.A.rows)

    @property
    def n(self) -> int:
        return self.A.rows

    def conjugated(self, t: Matrix) -> "HPair":
        """The same operator and form in the basis given by the columns of ``t``."""
        return HPair(inverse(t) @ self.A @ t, t.adjoint() @ self.H @ t)


@dataclass(frozen=True)
class Classification:
    expansive: bool
    unitary: bool
    selfadjoint: bool
    defect_inertia: Inertia


def defect(p: HPair) -> Matrix:
    """``D = A* H A - H``."""
    return p.A.adjoint() @ p.H @ p.A - p.H


def classify(p: HPair) -> Classification:
    d = defect(p)
    inertia = hermitian_inertia(d)
    return Classification(
        expansive=inertia.neg == 0,
        unitary=d.is_zero(),
        selfadjoint=p.H @ p.A == p.A.adjoint() @ p.H,
        defect_inertia=inertia,
    )


def h_adjoint(p: HPair) -> Matrix:
    """``H^-1 A* H``."""
    return inverse(p.H) @ p.A.adjoint() @ p.H


def observability_matrix(d: Matrix, a: Matrix) -> Matrix:
    """Stack ``[D; DA; ...; DA^(n-1)]``."""
    if not a.is_square or d.cols != a.rows:
        raise DimensionError(f"incompatible shapes D {d.shape} and A {a.shape}")
    n = a.rows
    blocks = []
    cur = d
    for _ in range(n):
        blocks.append(cur)
        cur = cur @ a
    return vstack(blocks, cols=n)


def unobservable_subspace(d: Matrix, a: Matrix) -> Subspace:
    """Largest ``A``-invariant subspace of ``ker D``."""
    n = a.rows
    if n == 0:
        return Subspace.zero(0)
    return Subspace.span(kernel(observability_matrix(d, a)), n)


def is_observable(d: Matrix, a: Matrix) -> bool:
    return unobservable_subspace(d, a).dim == 0
