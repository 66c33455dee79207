"""Subspaces of C^n in canonical form, plus the lattice and H-form operations."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContainmentError, DimensionError, InvalidInnerProductError, SingularMatrixError
from .linalg import inverse, kernel, rank, rref
from .matrix import Matrix, hstack
from .rng import CounterRng


@dataclass(frozen=True)
class Subspace:
    """Subspace of the ambient ``C^n``.

    ``basis`` is the reduced column-echelon form of any spanning set, so two
    instances compare equal exactly when they describe the same subspace.
    """

    ambient: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Matrix, n: int | None = None) -> "Subspace":
        n = vectors.rows if n is None else n
        if vectors.rows != n:
            raise DimensionError(f"vectors have {vectors.rows} rows, ambient is {n}")
        r, _, k = rref(vectors.transpose())
        return cls(n, r[:k, :].transpose() if k else Matrix.zeros(n, 0))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zeros(n, 0))

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @classmethod
    def coordinates(cls, n: int, indices) -> "Subspace":
        """``span{e_i : i in indices}`` with 0-based indices."""
        return cls.span(hstack([Matrix.unit(n, i) for i in indices], rows=n), n)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __contains__(self, v: Matrix) -> bool:
        return contains(self, Subspace.span(v, self.ambient))

    def __repr__(self):
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"


def _same_ambient(u: Subspace, v: Subspace):
    if u.ambient != v.ambient:
        raise DimensionError(f"ambient dimensions differ: {u.ambient} vs {v.ambient}")


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _same_ambient(u, v)
    return Subspace.span(hstack([u.basis, v.basis], rows=u.ambient), u.ambient)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    _same_ambient(u, v)
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.ambient)
    k = kernel(hstack([u.basis, -v.basis], rows=u.ambient))
    return Subspace.span(u.basis @ k[: u.dim, :], u.ambient)


def lattice(u: Subspace, v: Subspace, op: str) -> Subspace:
    if op == "sum":
        return subspace_sum(u, v)
    if op == "intersect":
        return intersect(u, v)
    raise ValueError(f"unknown lattice operation {op!r}")


def check_inner_product(h: Matrix, n: int | None = None) -> None:
    """Raise unless ``h`` is square Hermitian invertible (of size ``n``)."""
    if not h.is_square or (n is not None and h.rows != n):
        raise InvalidInnerProductError(f"H must be {n}x{n}, got {h.rows}x{h.cols}")
    if not h.is_hermitian():
        raise InvalidInnerProductError("H is not Hermitian")
    if rank(h) != h.rows:
        raise InvalidInnerProductError("H is singular")


def h_companion(u: Subspace, h: Matrix, *, checked: bool = True) -> Subspace:
    """``(HU)^perp = {x : u* H x = 0 for all u in U}``."""
    if checked:
        check_inner_product(h, u.ambient)
    if u.dim == 0:
        return Subspace.whole(u.ambient)
    return Subspace.span(kernel(u.basis.adjoint() @ h), u.ambient)


def contains(u: Subspace, v: Subspace) -> bool:
    """True when ``v`` is a subspace of ``u``."""
    _same_ambient(u, v)
    if v.dim == 0:
        return True
    return rank(hstack([u.basis, v.basis], rows=u.ambient)) == u.dim


def extend_complement(u: Subspace, w: Subspace, seed: int | None = None) -> Subspace:
    """A complement ``C`` of ``u`` inside ``w`` (``u + C = w``, ``u & C = 0``).

    Greedily appends columns of ``w``'s canonical basis that raise the rank.
    With ``seed`` the candidate columns are first mixed by a random
    unit-triangular integer matrix and shuffled, which reaches other
    complements while staying reproducible.
    """
    if not contains(w, u):
        raise ContainmentError("U is not contained in W")
    cand = w.basis
    if seed is not None and w.dim > 1:
        rng = CounterRng(seed).split("complement")
        k = w.dim
        mix = [[0] * k for _ in range(k)]
        for i in range(k):
            mix[i][i] = 1
            for j in range(i + 1, k):
                mix[i][j] = rng.randint(-2, 2)
        order = list(range(k))
        rng.shuffle(order)
        cand = cand @ Matrix(mix, rows=k, cols=k)
        cand = hstack([cand[:, j] for j in order], rows=w.ambient)
    picked = []
    current = u.basis
    r = u.dim
    for j in range(cand.cols):
        if r == w.dim:
            break
        trial = hstack([current, cand[:, j]], rows=u.ambient)
        if rank(trial) > r:
            current = trial
            picked.append(cand[:, j])
            r += 1
    return Subspace.span(hstack(picked, rows=u.ambient), u.ambient)


def gram(u: Subspace, h: Matrix, v: Subspace | None = None) -> Matrix:
    v = u if v is None else v
    return u.basis.adjoint() @ h @ v.basis


def is_h_neutral(u: Subspace, h: Matrix) -> bool:
    return gram(u, h).is_zero()


def is_h_nondegenerate(u: Subspace, h: Matrix) -> bool:
    g = gram(u, h)
    try:
        inverse(g)
    except SingularMatrixError:
        return False
    return True


def are_h_orthogonal(u: Subspace, v: Subspace, h: Matrix) -> bool:
    _same_ambient(u, v)
    return gram(u, h, v).is_zero()


def predicate(u: Subspace, v: Subspace | None, h: Matrix | None, which: str) -> bool:
    """Named-predicate dispatch used by the CLI and tests."""
    if which in ("h_neutral", "h_nondegenerate", "h_orthogonal_pair"):
        check_inner_product(h, u.ambient)
    if which == "h_neutral":
        return is_h_neutral(u, h)
    if which == "h_nondegenerate":
        return is_h_nondegenerate(u, h)
    if which == "h_orthogonal_pair":
        return are_h_orthogonal(u, v, h)
    if which == "contains":
        return contains(u, v)
    if which == "equals":
        return u == v
    raise ValueError(f"unknown predicate {which!r}")
