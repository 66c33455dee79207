"""The five worked examples, transcribed entry by entry.

Each record carries the pair plus whatever the worked example states about
it: the defect, ``N``, ``M``, the dimensions, and the printed transform
``S`` with ``S^-1 A S`` and ``S* H S`` where given.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .krein import HPair
from .matrix import Matrix, block_diag, hstack
from .subspace import Subspace


def jordan_block(n: int, eig=1) -> Matrix:
    return Matrix([[eig if i == j else 1 if j == i + 1 else 0 for j in range(n)] for i in range(n)], rows=n, cols=n)


def _m(rows):
    return Matrix(rows)


def _cols(vectors, n):
    return Matrix.from_columns(vectors, n)


@dataclass(frozen=True)
class ExampleRecord:
    id: int
    pair: HPair
    defect: Matrix
    N: Subspace
    M: Subspace
    dims: tuple
    unitary: bool = False
    S: Matrix | None = None
    S_inv_A_S: Matrix | None = None
    S_star_H_S: Matrix | None = None
    A22: Matrix | None = None
    H22: Matrix | None = None
    is_unitary_part: bool | None = None
    notes: dict = field(default_factory=dict)


def _e(n, *idx):
    return Subspace.coordinates(n, [i - 1 for i in idx])


def example1() -> ExampleRecord:
    a = jordan_block(5)
    h = _m([
        [0, 0, 0, 0, 1],
        [0, 0, 0, -1, -1],
        [0, 0, 1, 2, 2],
        [0, -1, 2, 4, 6],
        [1, -1, 2, 6, 2],
    ])
    d = _m([
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 5, 8],
        [0, 0, 0, 8, 16],
    ])
    x1 = [3, -2, 0, -1, 1]
    x2 = [0, 0, 2, -1, 0]
    s = _cols([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], x1, x2], 5)
    sas = _m([
        [1, 1, 0, -2, 0],
        [0, 1, 1, 0, 2],
        [0, 0, 1, 1, -1],
        [0, 0, 0, 1, 0],
        [0, 0, 0, -1, 1],
    ])
    shs = _m([
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 1, 0, 0],
        [1, 0, 0, 0, -4],
        [0, 1, 0, -4, 0],
    ])
    return ExampleRecord(
        1, HPair(a, h), d, _e(5, 1, 2, 3), _e(5, 1, 2), (2, 1, 2, 0),
        S=s, S_inv_A_S=sas, S_star_H_S=shs, A22=_m([[1]]), H22=_m([[1]]),
        notes={
            "M1": _e(5, 3),
            "M2": Subspace.span(_cols([x1, x2], 5)),
            # printed x1, x2 have x1* H x2 = -4; adding 2 e2 and 2 e1 makes them neutral
            "neutral_S": _cols([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0],
                                [3, 0, 0, -1, 1], [2, 0, 2, -1, 0]], 5),
        },
    )


EXAMPLE2_X = ["-47/32", "7/8", "1/4", "3/2", "1"]


def example2() -> ExampleRecord:
    a = jordan_block(5)
    h = _m([
        [0, 0, 0, 0, 1],
        [0, 0, 0, -1, "3/2"],
        [0, 0, 1, "-1/2", "1/2"],
        [0, -1, "-1/2", 0, 1],
        [1, "3/2", "1/2", 1, 0],
    ])
    s = hstack([Matrix.identity(5)[:, :4], _cols([EXAMPLE2_X], 5)])
    sas = _m([
        [1, 1, 0, 0, "7/8"],
        [0, 1, 1, 0, "1/4"],
        [0, 0, 1, 1, "3/2"],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1],
    ])
    shs = _m([
        [0, 0, 0, 0, 1],
        [0, 0, 0, -1, 0],
        [0, 0, 1, "-1/2", 0],
        [0, -1, "-1/2", 0, 0],
        [1, 0, 0, 0, 0],
    ])
    return ExampleRecord(
        2, HPair(a, h), Matrix.diag([0, 0, 0, 0, 2]), _e(5, 1, 2, 3, 4), _e(5, 1), (1, 3, 1, 0),
        S=s, S_inv_A_S=sas, S_star_H_S=shs,
        A22=jordan_block(3),
        H22=_m([[0, 0, -1], [0, 1, "-1/2"], [-1, "-1/2", 0]]),
        notes={"M1": _e(5, 2, 3, 4), "x": _cols([EXAMPLE2_X], 5)},
    )


def example3() -> ExampleRecord:
    a = jordan_block(5)
    h = _m([
        [0, 0, 0, 0, 1],
        [0, 0, 0, -1, "3/2"],
        [0, 0, 1, "-1/2", "1/2"],
        [0, -1, "-1/2", 0, 0],
        [1, "3/2", "1/2", 0, 0],
    ])
    return ExampleRecord(
        3, HPair(a, h), Matrix.zeros(5), Subspace.whole(5), Subspace.zero(5), (0, 5, 0, 0),
        unitary=True, A22=a, H22=h, is_unitary_part=True,
    )


EXAMPLE4_H22 = [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]


def example4() -> ExampleRecord:
    j2 = jordan_block(2)
    a = block_diag(j2, j2, j2)
    h = block_diag(_m(EXAMPLE4_H22), _m([[0, 1], [1, 0]]))
    return ExampleRecord(
        4, HPair(a, h), Matrix.diag([0, 0, 0, 0, 0, 2]), _e(6, 1, 2, 3, 4, 5), _e(6, 5), (1, 4, 1, 0),
        A22=block_diag(j2, j2), H22=_m(EXAMPLE4_H22), is_unitary_part=True,
        notes={"M1": _e(6, 1, 2, 3, 4), "M2": _e(6, 6)},
    )


# As printed, this H gives A*HA - H = [[0,0,0,0],[0,0,0,0],[0,0,-2,-2],[0,0,-2,0]],
# which is indefinite.  Flipping the signs of the (1,4) and (2,3) entries (and
# their mirrors) gives diag(0, 0, 2, 0); every H with that defect for J_4(1)
# has H[0][3] = -1, so the printed sign cannot be kept.
EXAMPLE5_PRINTED_H = [[0, 0, 0, 1], [0, 0, -1, -1], [0, -1, 0, 0], [1, -1, 0, 0]]
EXAMPLE5_H = [[0, 0, 0, -1], [0, 0, 1, -1], [0, 1, 0, 0], [-1, -1, 0, 0]]


def example5() -> ExampleRecord:
    a = jordan_block(4)
    return ExampleRecord(
        5, HPair(a, _m(EXAMPLE5_H)), Matrix.diag([0, 0, 2, 0]), _e(4, 1, 2), _e(4, 1, 2), (2, 0, 2, 0),
        A22=Matrix.zeros(0, 0), H22=Matrix.zeros(0, 0), is_unitary_part=True,
        notes={"printed_H": _m(EXAMPLE5_PRINTED_H), "M1": Subspace.zero(4)},
    )


EXAMPLES = {1: example1, 2: example2, 3: example3, 4: example4, 5: example5}


def get_example(k: int) -> ExampleRecord:
    try:
        return EXAMPLES[k]()
    except KeyError:
        raise ValueError(f"no example {k}; choose from 1..5") from None


def all_examples() -> list[ExampleRecord]:
    return [f() for f in EXAMPLES.values()]
