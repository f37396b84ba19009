"""Exact rank computations over F_p (numpy) and Q (Python integers)."""

from __future__ import annotations

import dataclasses
import logging
from typing import Iterable, Mapping, Sequence

import numpy as np

from glpoly.exception import InvalidPrimeError
from glpoly.types import is_prime

LOGGER = logging.getLogger(__name__)

RATIONAL = 0


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """A prime field F_p, or Q when ``characteristic`` is 0."""

    characteristic: int

    def __post_init__(self) -> None:
        if self.characteristic != RATIONAL and not is_prime(self.characteristic):
            raise InvalidPrimeError(f"{self.characteristic} is not a prime")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(RATIONAL)

    @classmethod
    def parse(cls, value: str | int) -> FieldSpec:
        if isinstance(value, str) and value.strip().upper() in ("Q", "QQ"):
            return cls.rational()
        return cls(int(value))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == RATIONAL

    @property
    def signs_collapse(self) -> bool:
        """In characteristic 2 the sign character is trivial."""
        return self.characteristic == 2

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"F_{self.characteristic}"


class PrimeFieldMatrix:
    """Dense matrix over F_p on an int64 array with entries in [0, p)."""

    def __init__(self, entries, p: int) -> None:
        if not is_prime(p):
            raise InvalidPrimeError(f"{p} is not a prime")
        self.p = p
        array = np.asarray(entries, dtype=np.int64)
        if array.ndim == 1:
            array = array.reshape(1, -1) if array.size else np.zeros((0, 0), np.int64)
        self.entries = np.mod(array, p)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __repr__(self) -> str:
        return f"<PrimeFieldMatrix {self.shape[0]}x{self.shape[1]} over F_{self.p}>"

    def rref(self) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the pivot columns."""
        p = self.p
        a = self.entries.copy()
        rows, cols = a.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nonzero = np.nonzero(a[r:, c])[0]
            if nonzero.size == 0:
                continue
            pivot = r + int(nonzero[0])
            if pivot != r:
                a[[r, pivot]] = a[[pivot, r]]
            a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
            factors = a[:, c].copy()
            factors[r] = 0
            a = (a - np.outer(factors, a[r])) % p
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self) -> int:
        if 0 in self.shape:
            return 0
        return len(self.rref()[1])

    def nullspace(self) -> np.ndarray:
        """Right kernel; the rows of the result form a basis."""
        rows, cols = self.shape
        if rows == 0:
            return np.eye(cols, dtype=np.int64)
        reduced, pivots = self.rref()
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for idx, f in enumerate(free):
            basis[idx, f] = 1
            for row, pc in enumerate(pivots):
                basis[idx, pc] = (-reduced[row, f]) % self.p
        return basis

    def left_nullspace(self) -> np.ndarray:
        """Rows ``a`` with ``a @ entries == 0``."""
        return PrimeFieldMatrix(self.entries.T, self.p).nullspace()

    def row_basis(self) -> np.ndarray:
        """Nonzero rows of the reduced echelon form."""
        if 0 in self.shape:
            return np.zeros((0, self.shape[1]), dtype=np.int64)
        reduced, pivots = self.rref()
        return reduced[: len(pivots)]


def rational_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in rows]
    if not a or not a[0]:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    previous = 1
    for c in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        lead = a[rank][c]
        for i in range(rank + 1, n_rows):
            factor = a[i][c]
            for j in range(c, n_cols):
                # exact by Sylvester's identity
                a[i][j] = (lead * a[i][j] - factor * a[rank][j]) // previous
        previous = lead
        rank += 1
    return rank


def matrix_rank(rows: Sequence[Sequence[int]], field: FieldSpec) -> int:
    if field.is_rational:
        return rational_rank(rows)
    if not rows:
        return 0
    return PrimeFieldMatrix(rows, field.characteristic).rank()


def _components(rows: Sequence[Mapping[int, int]]) -> list[list[int]]:
    """Group row indices that are connected through a shared column."""
    parent = list(range(len(rows)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[int, int] = {}
    for idx, row in enumerate(rows):
        for col in row:
            if col in owner:
                a, b = find(owner[col]), find(idx)
                if a != b:
                    parent[a] = b
            else:
                owner[col] = idx
    groups: dict[int, list[int]] = {}
    for idx in range(len(rows)):
        groups.setdefault(find(idx), []).append(idx)
    return list(groups.values())


def component_rank(rows: Iterable[Mapping[int, int]], field: FieldSpec) -> int:
    """Rank of a sparse matrix given as ``{column: value}`` rows.

    Rows sharing no column, even through other rows, sit in separate diagonal
    blocks; each block is eliminated on its own.
    """
    if field.is_rational:
        sparse = [{c: v for c, v in row.items() if v} for row in rows]
    else:
        q = field.characteristic
        sparse = [{c: v % q for c, v in row.items() if v % q} for row in rows]
    total = 0
    for group in _components(sparse):
        members = [sparse[i] for i in group]
        columns = sorted({c for row in members for c in row})
        if not columns:
            continue
        if len(members) == 1 or len(columns) == 1:
            total += 1
            continue
        position = {c: i for i, c in enumerate(columns)}
        dense = [[0] * len(columns) for _ in members]
        for dense_row, row in zip(dense, members):
            for c, v in row.items():
                dense_row[position[c]] = v
        total += matrix_rank(dense, field)
    LOGGER.debug("component_rank over %s: %d", field, total)
    return total
