"""Seeded generation of H-expansive pairs with a planted four-space structure.

A pair is first assembled directly in the block coordinates of the structure
theorem, with the defect blocks chosen first and ``A13``, ``A14`` solved from
them, and then hidden by a random integer change of basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CayleySingularError, GenerationFailureError, SingularMatrixError, TheoremViolationError
from .krein import HPair, defect, is_observable
from .linalg import inverse, negative_direction, rank
from .matrix import Matrix, block_matrix
from .rng import CounterRng
from .scalars import GaussianRational
from .structure import Check, VerificationReport, decompose, verify

MAX_ATTEMPTS = 64


@dataclass(frozen=True)
class PlantSpec:
    m: int
    m1: int
    m3: int
    entry_bound: int = 3
    seed: int = 0
    complex_entries: bool = False

    def __post_init__(self):
        if min(self.m, self.m1, self.m3) < 0:
            raise ValueError("block dimensions must be nonnegative")
        if self.entry_bound < 1:
            raise ValueError("entry_bound must be a positive integer")

    @property
    def n(self) -> int:
        return 2 * self.m + self.m1 + self.m3

    @property
    def dims(self) -> tuple:
        return (self.m, self.m1, self.m, self.m3)


@dataclass(frozen=True)
class PlantedPair:
    pair: HPair
    dims: tuple
    S_true: Matrix | None
    spec: PlantSpec | None = None


class _Sampler:
    def __init__(self, rng: CounterRng, bound: int, complex_entries: bool):
        self.rng = rng
        self.bound = bound
        self.complex = complex_entries

    def rational(self) -> Fraction:
        b = self.bound
        return Fraction(self.rng.randint(-b, b), self.rng.randint(1, b))

    def scalar(self) -> GaussianRational:
        im = self.rational() if self.complex else 0
        return GaussianRational(self.rational(), im)

    def matrix(self, r: int, c: int) -> Matrix:
        return Matrix([[self.scalar() for _ in range(c)] for _ in range(r)], rows=r, cols=c)

    def hermitian(self, n: int) -> Matrix:
        rows = [[GaussianRational(0)] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = GaussianRational(self.rational())
            for j in range(i + 1, n):
                z = self.scalar()
                rows[i][j] = z
                rows[j][i] = z.conjugate()
        return Matrix(rows, rows=n, cols=n)

    def skew_hermitian(self, n: int) -> Matrix:
        rows = [[GaussianRational(0)] * n for _ in range(n)]
        for i in range(n):
            if self.complex:
                rows[i][i] = GaussianRational(0, self.rational())
            for j in range(i + 1, n):
                z = self.scalar()
                rows[i][j] = z
                rows[j][i] = -z.conjugate()
        return Matrix(rows, rows=n, cols=n)

    def invertible(self, n: int, tries: int = 32) -> Matrix:
        for _ in range(tries):
            x = self.matrix(n, n)
            if rank(x) == n:
                return x
        raise GenerationFailureError("could not sample an invertible matrix")

    def int_invertible(self, n: int, tries: int = 32) -> Matrix:
        b = self.bound
        for _ in range(tries):
            x = Matrix([[self.rng.randint(-b, b) for _ in range(n)] for _ in range(n)], rows=n, cols=n)
            if rank(x) == n:
                return x
        raise GenerationFailureError("could not sample an invertible integer matrix")

    def hermitian_invertible(self, n: int, tries: int = 32) -> Matrix:
        for _ in range(tries):
            x = self.hermitian(n)
            if rank(x) == n:
                return x
        raise GenerationFailureError("could not sample an invertible Hermitian matrix")


def cayley_h_unitary(h: Matrix, w: Matrix) -> Matrix:
    """``(I - K)(I + K)^-1`` with ``K = H^-1 W``; H-unitary when ``W* = -W``."""
    n = h.rows
    k = inverse(h) @ w
    eye = Matrix.identity(n)
    try:
        return (eye - k) @ inverse(eye + k)
    except SingularMatrixError as exc:
        raise CayleySingularError("I + H^-1 W is singular; resample W") from exc


def _cayley_sample(smp: _Sampler, h: Matrix, tries: int = 32) -> Matrix:
    for _ in range(tries):
        try:
            return cayley_h_unitary(h, smp.skew_hermitian(h.rows))
        except CayleySingularError:
            continue
    raise GenerationFailureError("Cayley transform kept hitting a singular I + K")


def _attempt(spec: PlantSpec, rng: CounterRng):
    smp = _Sampler(rng, spec.entry_bound, spec.complex_entries)
    m, m1, m3 = spec.m, spec.m1, spec.m3
    half = Fraction(1, 2)

    h22 = smp.hermitian_invertible(m1)
    b44 = smp.matrix(m3, m3)
    h44 = b44.adjoint() @ b44 + Matrix.identity(m3)
    a11 = smp.invertible(m)
    a12 = smp.matrix(m, m1)
    a43 = smp.matrix(m3, m)
    a22 = _cayley_sample(smp, h22)
    a44 = _cayley_sample(smp, h44).scale(2)

    a11_inv = inverse(a11)
    a11_inv_adj = a11_inv.adjoint()
    h22_inv = inverse(h22)
    d22 = a44.adjoint() @ h44 @ a44 - h44
    d12 = smp.matrix(m, m3)
    k = rng.randint(0, m)
    b = smp.matrix(k, m)
    schur = b.adjoint() @ b
    if rng.randbelow(2):
        schur = schur + Matrix.identity(m)
    d11 = d12 @ inverse(d22) @ d12.adjoint() + schur

    known = a11_inv @ a12 @ h22_inv @ a12.adjoint() @ a11_inv_adj + a43.adjoint() @ h44 @ a43
    x = (d11 - known).scale(half) + smp.skew_hermitian(m)
    a13 = a11 @ x
    a14 = a11 @ (d12 - a43.adjoint() @ h44 @ a44)
    a23 = -(h22_inv @ inverse(a22).adjoint() @ a12.adjoint() @ a11_inv_adj)
    a33 = a11_inv_adj

    sizes = spec.dims
    z = Matrix.zeros
    a_t = block_matrix(
        [
            [a11, a12, a13, a14],
            [z(m1, m), a22, a23, z(m1, m3)],
            [z(m, m), z(m, m1), a33, z(m, m3)],
            [z(m3, m), z(m3, m1), a43, a44],
        ],
        sizes,
        sizes,
    )
    eye = Matrix.identity(m)
    h_t = block_matrix(
        [
            [z(m, m), z(m, m1), eye, z(m, m3)],
            [z(m1, m), h22, z(m1, m), z(m1, m3)],
            [eye, z(m, m1), z(m, m), z(m, m3)],
            [z(m3, m), z(m3, m1), z(m3, m), h44],
        ],
        sizes,
        sizes,
    )
    red = (m, m3)
    d_red = block_matrix([[d11, d12], [d12.adjoint(), d22]], red, red)
    a_red = block_matrix([[a33, z(m, m3)], [a43, a44]], red, red)
    if not is_observable(d_red, a_red):
        return None

    t = smp.int_invertible(spec.n)
    t_inv = inverse(t)
    pair = HPair(t_inv @ a_t @ t, t.adjoint() @ h_t @ t)
    return PlantedPair(pair, sizes, t_inv, spec)


def plant(spec: PlantSpec) -> PlantedPair:
    """Deterministically build an H-expansive pair with the block sizes of ``spec``."""
    root = CounterRng(spec.seed)
    for attempt in range(MAX_ATTEMPTS):
        out = _attempt(spec, root.split(f"attempt:{attempt}"))
        if out is not None:
            return out
    raise GenerationFailureError(
        f"no observable remainder after {MAX_ATTEMPTS} attempts (seed {spec.seed})"
    )


def spec_for_seed(seed: int, max_block: int = 3, max_n: int = 10, **kw) -> PlantSpec:
    """Block sizes drawn uniformly from ``{0..max_block}^3`` subject to ``n <= max_n``."""
    rng = CounterRng(seed).split("dims")
    while True:
        m, m1, m3 = (rng.randint(0, max_block) for _ in range(3))
        if 2 * m + m1 + m3 <= max_n:
            return PlantSpec(m, m1, m3, seed=seed, **kw)


def round_trip_check(planted: PlantedPair) -> VerificationReport:
    """Decompose the planted pair and compare against the planted truth."""
    neg = negative_direction(defect(planted.pair))
    checks = [Check("planted_expansive", neg is None, neg)]
    if planted.S_true is not None:
        truth = verify(planted.pair, planted.S_true, planted.dims)
        bad = truth.failed()
        checks.append(Check("planted_truth_verifies", not bad, bad[0].witness if bad else None))
    try:
        dec = decompose(planted.pair)
    except TheoremViolationError as exc:
        return VerificationReport(tuple(checks) + exc.report.checks)
    diff = [a - b for a, b in zip(dec.dims, planted.dims)]
    ok = not any(diff)
    checks.append(Check("dims_recovered", ok, None if ok else Matrix([diff])))
    return VerificationReport(tuple(checks) + dec.report.checks)
