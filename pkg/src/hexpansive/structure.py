"""Four-space decomposition C^n = M + M1 + M2 + M3 of an H-expansive pair.

Pipeline for an H-expansive pair ``(A, H)`` with defect ``D = A*HA - H``:

* ``N``  -- unobservable subspace of ``(D, A)``;
* ``M``  -- ``N & (HN)^perp``, the H-neutral core of ``N``;
* ``M1`` -- a complement of ``M`` in ``N`` (H-nondegenerate);
* ``M2`` -- spanned by ``Y`` from :func:`skew_link`: H-neutral, H-orthogonal
  to ``M1`` and paired with ``M`` by the identity Gram matrix;
* ``M3`` -- ``(H(M + M1 + M2))^perp``.

In the basis ``S = [P | Q | Y | R]`` the form ``S*HS`` has an identity
pairing between blocks 1 and 3, the compression ``(A22, H22)`` is H22-unitary
and all of the defect lives on blocks 3 and 4.  :func:`verify` checks every
block identity independently of how ``S`` was produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateConfigurationError,
    DimensionError,
    InvalidTransformError,
    NoSolutionError,
    NotExpansiveError,
    PreconditionError,
    SingularMatrixError,
    TheoremViolationError,
)
from .krein import HPair, classify, defect, unobservable_subspace
from .linalg import inverse, kernel, negative_direction, solve
from .matrix import Matrix, block_matrix, hstack, partition
from .subspace import (
    Subspace,
    are_h_orthogonal,
    contains,
    extend_complement,
    h_companion,
    intersect,
    is_h_neutral,
    is_h_nondegenerate,
)

Dims = tuple  # (m, m1, m2, m3)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Matrix | None = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def _zero_check(name: str, residual: Matrix) -> Check:
    if residual.is_zero():
        return Check(name, True)
    return Check(name, False, residual)


def _try_inverse(m: Matrix) -> Matrix | None:
    try:
        return inverse(m)
    except SingularMatrixError:
        return None


def _hermitian_invertible_check(name: str, m: Matrix) -> Check:
    if not m.is_hermitian():
        return Check(name, False, m - m.adjoint())
    if _try_inverse(m) is None:
        return Check(name, False, kernel(m))
    return Check(name, True)


def _psd_check(name: str, m: Matrix) -> Check:
    if not m.is_hermitian():
        return Check(name, False, m - m.adjoint())
    x = negative_direction(m)
    return Check(name, x is None, x)


# ---------------------------------------------------------------------------
# construction stages


def neutral_core(n_space: Subspace, h: Matrix) -> Subspace:
    """``M = N & (HN)^perp``."""
    return intersect(n_space, h_companion(n_space, h))


def skew_link(m_space: Subspace, m1_space: Subspace, h: Matrix) -> Matrix:
    """Return ``Y`` (n x m) with ``P*HY = I``, ``Y*HY = 0`` and ``Q*HY = 0``.

    ``P`` and ``Q`` are the canonical bases of ``M`` and ``M1``.  The pairing
    system is solved inside ``ker(Q*H)`` with free variables zeroed; the
    result is then made neutral by subtracting ``P G / 2`` where ``G`` is its
    own Gram matrix.
    """
    n = m_space.ambient
    p, q = m_space.basis, m1_space.basis
    if not is_h_neutral(m_space, h):
        raise PreconditionError("M is not H-neutral")
    if not is_h_nondegenerate(m1_space, h):
        raise PreconditionError("M1 is not H-nondegenerate")
    if not are_h_orthogonal(m_space, m1_space, h):
        raise PreconditionError("M and M1 are not H-orthogonal")
    k = m_space.dim
    if k == 0:
        return Matrix.zeros(n, 0)
    w = kernel(q.adjoint() @ h) if q.cols else Matrix.identity(n)
    try:
        z = solve(p.adjoint() @ h @ w, Matrix.identity(k))
    except NoSolutionError as exc:
        raise DegenerateConfigurationError("no skew-linked partner for M exists") from exc
    y0 = w @ z
    g = y0.adjoint() @ h @ y0
    return y0 - (p @ g).scale(Fraction(1, 2))


def four_space_basis(p_: HPair, n_space: Subspace, complement_seed: int | None = None):
    """Return ``(S, dims, M, M1)`` for a given invariant subspace ``N``."""
    h = p_.H
    n = p_.n
    m_space = neutral_core(n_space, h)
    m1_space = extend_complement(m_space, n_space, seed=complement_seed)
    y = skew_link(m_space, m1_space, h)
    pqy = hstack([m_space.basis, m1_space.basis, y], rows=n)
    r = h_companion(Subspace.span(pqy, n), h, checked=False).basis
    s = hstack([pqy, r], rows=n)
    dims = (m_space.dim, m1_space.dim, y.cols, r.cols)
    return s, dims, m_space, m1_space


# ---------------------------------------------------------------------------
# verification


def _transformed(p: HPair, s: Matrix, dims: Sequence[int]):
    n = p.n
    dims = tuple(int(x) for x in dims)
    if len(dims) != 4 or any(x < 0 for x in dims):
        raise DimensionError(f"dims must be four nonnegative counts, got {dims}")
    m, m1, m2, m3 = dims
    if m2 != m or sum(dims) != n:
        raise DimensionError(f"dims {dims} must satisfy m2 = m and m + m1 + m2 + m3 = {n}")
    if s.shape != (n, n):
        raise InvalidTransformError(f"transform must be {n}x{n}, got {s.rows}x{s.cols}")
    s_inv = _try_inverse(s)
    if s_inv is None:
        raise InvalidTransformError("transform is singular")
    at = s_inv @ p.A @ s
    ht = s.adjoint() @ p.H @ s
    dt = s.adjoint() @ defect(p) @ s
    return dims, at, ht, dt


def _h_pattern_checks(h: dict, sizes: Sequence[int]) -> list[Check]:
    m = sizes[0]
    z = Matrix.zeros
    eye = Matrix.identity(m)
    grid = [
        [z(sizes[0], sizes[0]), z(sizes[0], sizes[1]), eye, z(sizes[0], sizes[3])],
        [z(sizes[1], sizes[0]), h[2, 2], z(sizes[1], sizes[2]), z(sizes[1], sizes[3])],
        [eye, z(sizes[2], sizes[1]), z(sizes[2], sizes[2]), z(sizes[2], sizes[3])],
        [z(sizes[3], sizes[0]), z(sizes[3], sizes[1]), z(sizes[3], sizes[2]), h[4, 4]],
    ]
    expected = block_matrix(grid, sizes, sizes)
    actual = block_matrix([[h[i, j] for j in range(1, 5)] for i in range(1, 5)], sizes, sizes)
    return [
        _zero_check("h_pattern", actual - expected),
        _hermitian_invertible_check("h22_hermitian_invertible", h[2, 2]),
        _hermitian_invertible_check("h44_hermitian_invertible", h[4, 4]),
    ]


_ZERO_A_BLOCKS = ((2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (2, 4), (3, 4))


def _a_zero_check(a: dict, sizes: Sequence[int]) -> Check:
    grid = [
        [a[i, j] if (i, j) in _ZERO_A_BLOCKS else Matrix.zeros(sizes[i - 1], sizes[j - 1]) for j in range(1, 5)]
        for i in range(1, 5)
    ]
    return _zero_check("a_zero_pattern", block_matrix(grid, sizes, sizes))


def _analyze(p: HPair, s: Matrix, dims: Sequence[int]):
    dims, at, ht, dt = _transformed(p, s, dims)
    sizes = dims
    a = partition(at, sizes)
    h = partition(ht, sizes)
    d = partition(dt, sizes)
    m, m1, _, m3 = dims
    checks = _h_pattern_checks(h, sizes)
    checks.append(_a_zero_check(a, sizes))

    a11, a12, a13, a14 = a[1, 1], a[1, 2], a[1, 3], a[1, 4]
    a22, a23, a33, a43, a44 = a[2, 2], a[2, 3], a[3, 3], a[4, 3], a[4, 4]
    h22, h44 = h[2, 2], h[4, 4]
    checks.append(_zero_check("a33_inverse_adjoint", a33.adjoint() @ a11 - Matrix.identity(m)))
    checks.append(_zero_check("a22_h22_unitary", a22.adjoint() @ h22 @ a22 - h22))

    a11_inv, a22_inv, h22_inv = _try_inverse(a11), _try_inverse(a22), _try_inverse(h22)
    singular = next(
        (x for x, xi in ((a11, a11_inv), (a22, a22_inv), (h22, h22_inv)) if xi is None), None
    )
    if singular is not None:
        checks.append(Check("a23_formula", False, kernel(singular)))
    else:
        a23_expected = -(h22_inv @ a22_inv.adjoint() @ a12.adjoint() @ a11_inv.adjoint())
        checks.append(_zero_check("a23_formula", a23 - a23_expected))

    d44_from_a = a44.adjoint() @ h44 @ a44 - h44
    checks.append(_psd_check("a44_h44_expansive", d44_from_a))

    keep_lower = {(3, 3), (3, 4), (4, 3), (4, 4)}
    grid = [
        [d[i, j] if (i, j) not in keep_lower else Matrix.zeros(sizes[i - 1], sizes[j - 1]) for j in range(1, 5)]
        for i in range(1, 5)
    ]
    checks.append(_zero_check("defect_confined", block_matrix(grid, sizes, sizes)))

    if a11_inv is None or h22_inv is None:
        witness = kernel(a11 if a11_inv is None else h22)
        checks.append(Check("d11_formula", False, witness))
        checks.append(Check("d12_formula", False, witness))
    else:
        a11_inv_adj = a11_inv.adjoint()
        d11 = (
            a11_inv @ a13
            + a13.adjoint() @ a11_inv_adj
            + a11_inv @ a12 @ h22_inv @ a12.adjoint() @ a11_inv_adj
            + a43.adjoint() @ h44 @ a43
        )
        d12 = a11_inv @ a14 + a43.adjoint() @ h44 @ a44
        checks.append(_zero_check("d11_formula", d[3, 3] - d11))
        checks.append(_zero_check("d12_formula", d[3, 4] - d12))
    checks.append(_zero_check("d22_formula", d[4, 4] - d44_from_a))
    checks.append(_psd_check("defect_psd", dt))

    red = (m, m3)
    d_red = block_matrix([[d[3, 3], d[3, 4]], [d[4, 3], d[4, 4]]], red, red)
    a_red = block_matrix([[a33, a[3, 4]], [a43, a44]], red, red)
    unobs = unobservable_subspace(d_red, a_red)
    checks.append(Check("reduced_pair_observable", unobs.dim == 0, unobs.basis if unobs.dim else None))
    return VerificationReport(tuple(checks)), a, h, d


def verify(p: HPair, s: Matrix, dims: Sequence[int]) -> VerificationReport:
    """Check every block identity of the structure theorem for the basis ``s``."""
    return _analyze(p, s, dims)[0]


# ---------------------------------------------------------------------------
# the decomposition


@dataclass(frozen=True)
class Decomposition:
    S: Matrix
    dims: tuple
    N: Subspace
    M: Subspace
    M1: Subspace
    a_blocks: dict = field(repr=False)
    h_blocks: dict = field(repr=False)
    d_blocks: dict = field(repr=False)
    report: VerificationReport = field(repr=False)

    def A(self, i: int, j: int) -> Matrix:
        return self.a_blocks[i, j]

    @property
    def H22(self) -> Matrix:
        return self.h_blocks[2, 2]

    @property
    def H44(self) -> Matrix:
        return self.h_blocks[4, 4]

    @property
    def D11(self) -> Matrix:
        return self.d_blocks[3, 3]

    @property
    def D12(self) -> Matrix:
        return self.d_blocks[3, 4]

    @property
    def D22(self) -> Matrix:
        return self.d_blocks[4, 4]

    @property
    def transformed_A(self) -> Matrix:
        return block_matrix([[self.a_blocks[i, j] for j in range(1, 5)] for i in range(1, 5)], self.dims, self.dims)

    @property
    def transformed_H(self) -> Matrix:
        return block_matrix([[self.h_blocks[i, j] for j in range(1, 5)] for i in range(1, 5)], self.dims, self.dims)

    @property
    def transformed_D(self) -> Matrix:
        return block_matrix([[self.d_blocks[i, j] for j in range(1, 5)] for i in range(1, 5)], self.dims, self.dims)


def decompose(p: HPair, complement_seed: int | None = None) -> Decomposition:
    """Compute the four-space decomposition of an H-expansive pair.

    Raises :class:`NotExpansiveError` when the defect has a negative
    eigenvalue and :class:`TheoremViolationError` if any identity fails on
    the computed basis.
    """
    cls = classify(p)
    if not cls.expansive:
        raise NotExpansiveError(cls.defect_inertia)
    n_space = unobservable_subspace(defect(p), p.A)
    s, dims, m_space, m1_space = four_space_basis(p, n_space, complement_seed)
    report, a, h, d = _analyze(p, s, dims)
    if not report.all_pass:
        raise TheoremViolationError(report)
    return Decomposition(s, dims, n_space, m_space, m1_space, a, h, d, report)


def unitary_compression(dec: Decomposition) -> tuple[Matrix, Matrix, bool]:
    """``(A22, H22, is_unitary_part)``; a unitary part when ``A12 = 0``."""
    return dec.A(2, 2), dec.H22, dec.A(1, 2).is_zero()


# ---------------------------------------------------------------------------
# H-selfadjoint variant


@dataclass(frozen=True)
class SelfadjointDecomposition:
    S: Matrix
    dims: tuple
    M: Subspace
    M1: Subspace
    a_blocks: dict = field(repr=False)
    h_blocks: dict = field(repr=False)
    report: VerificationReport = field(repr=False)

    def A(self, i: int, j: int) -> Matrix:
        return self.a_blocks[i, j]

    @property
    def H22(self) -> Matrix:
        return self.h_blocks[2, 2]

    @property
    def H44(self) -> Matrix:
        return self.h_blocks[4, 4]


def _analyze_selfadjoint(p: HPair, s: Matrix, dims: Sequence[int]):
    dims, at, ht, _ = _transformed(p, s, dims)
    a = partition(at, dims)
    h = partition(ht, dims)
    checks = _h_pattern_checks(h, dims)
    checks.append(_a_zero_check(a, dims))
    h22, h44 = h[2, 2], h[4, 4]
    checks.append(_zero_check("a33_adjoint", a[3, 3] - a[1, 1].adjoint()))
    h22_inv, h44_inv = _try_inverse(h22), _try_inverse(h44)
    if h22_inv is None:
        checks.append(Check("a23_formula", False, kernel(h22)))
    else:
        checks.append(_zero_check("a23_formula", a[2, 3] - h22_inv @ a[1, 2].adjoint()))
    if h44_inv is None:
        checks.append(Check("a43_formula", False, kernel(h44)))
    else:
        checks.append(_zero_check("a43_formula", a[4, 3] - h44_inv @ a[1, 4].adjoint()))
    checks.append(_zero_check("a22_h22_selfadjoint", h22 @ a[2, 2] - a[2, 2].adjoint() @ h22))
    checks.append(_zero_check("a44_h44_selfadjoint", h44 @ a[4, 4] - a[4, 4].adjoint() @ h44))
    return VerificationReport(tuple(checks)), a, h


def verify_selfadjoint(p: HPair, s: Matrix, dims: Sequence[int]) -> VerificationReport:
    return _analyze_selfadjoint(p, s, dims)[0]


def selfadjoint_decompose(
    p: HPair, n_space: Subspace, complement_seed: int | None = None
) -> SelfadjointDecomposition:
    """Block form of an H-selfadjoint ``A`` relative to an ``A``-invariant ``N``."""
    if not classify(p).selfadjoint:
        raise PreconditionError("A is not H-selfadjoint")
    if n_space.ambient != p.n:
        raise DimensionError("N lives in the wrong ambient space")
    if not contains(n_space, Subspace.span(p.A @ n_space.basis, p.n)):
        raise PreconditionError("N is not A-invariant")
    s, dims, m_space, m1_space = four_space_basis(p, n_space, complement_seed)
    report, a, h = _analyze_selfadjoint(p, s, dims)
    if not report.all_pass:
        raise TheoremViolationError(report)
    return SelfadjointDecomposition(s, dims, m_space, m1_space, a, h, report)
