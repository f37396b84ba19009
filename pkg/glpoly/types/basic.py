from __future__ import annotations

import dataclasses
import math
from typing import Iterator

from glpoly.exception import InvalidShapeError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, math.isqrt(n) + 1))


def _parse_parts(value: str) -> tuple[int, ...]:
    value = value.strip()
    if not value:
        return ()
    try:
        return tuple(int(v) for v in value.split(","))
    except ValueError as exc:
        raise InvalidShapeError(f"Cannot parse {value!r} as integers") from exc


@dataclasses.dataclass(frozen=True)
class Composition:
    """Sequence of positive integers, order significant."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 1 for p in self.parts):
            raise InvalidShapeError(f"Parts must be positive: {self.parts}")

    @classmethod
    def parse(cls, value: str) -> Composition:
        return cls(_parse_parts(value))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, idx: int) -> int:
        return self.parts[idx]

    def sorted(self) -> Partition:
        return Partition(tuple(sorted(self.parts, reverse=True)))

    def stabilizer_order(self) -> int:
        """Order of the Young subgroup of this shape."""
        return math.prod(math.factorial(p) for p in self.parts)

    def intervals(self) -> tuple[tuple[int, ...], ...]:
        """Consecutive blocks of {0..d-1} cut out by the parts."""
        blocks = []
        start = 0
        for part in self.parts:
            blocks.append(tuple(range(start, start + part)))
            start += part
        return tuple(blocks)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclasses.dataclass(frozen=True)
class Partition(Composition):
    """Weakly decreasing composition; the empty partition has weight 0."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidShapeError(f"Parts must be weakly decreasing: {self.parts}")

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))
        )

    def rows(self, offset: int = 0) -> tuple[tuple[int, ...], ...]:
        """Box numbers of each row, row-major from ``offset``."""
        rows = []
        for part in self.parts:
            rows.append(tuple(range(offset, offset + part)))
            offset += part
        return tuple(rows)

    def columns(self, offset: int = 0) -> tuple[tuple[int, ...], ...]:
        """Box numbers of each column under the row-major numbering."""
        rows = self.rows(offset)
        if not rows:
            return ()
        return tuple(
            tuple(row[j] for row in rows if len(row) > j) for j in range(len(rows[0]))
        )


@dataclasses.dataclass(frozen=True)
class SkewTuple:
    """Disjoint union (λ_1|λ_2|…|λ_n) of straight diagrams, left to right."""

    blocks: tuple[Partition, ...]

    def __post_init__(self) -> None:
        blocks = tuple(
            b if isinstance(b, Partition) else Partition(tuple(b)) for b in self.blocks
        )
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def parse(cls, value: str) -> SkewTuple:
        """Parse ``"2,1|1"`` into ((2,1)|(1))."""
        return cls(tuple(Partition.parse(block) for block in value.split("|")))

    @classmethod
    def single(cls, partition: Partition) -> SkewTuple:
        return cls((partition,))

    @property
    def weight(self) -> int:
        return sum(b.weight for b in self.blocks)

    def offsets(self) -> tuple[int, ...]:
        offsets = []
        total = 0
        for block in self.blocks:
            offsets.append(total)
            total += block.weight
        return tuple(offsets)

    def box_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            row
            for block, offset in zip(self.blocks, self.offsets())
            for row in block.rows(offset)
        )

    def box_columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            column
            for block, offset in zip(self.blocks, self.offsets())
            for column in block.columns(offset)
        )

    def conjugate(self) -> SkewTuple:
        return SkewTuple(tuple(b.conjugate() for b in self.blocks))

    def __str__(self) -> str:
        return "(" + "|".join(str(b) for b in self.blocks) + ")"
