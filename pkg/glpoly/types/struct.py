from __future__ import annotations

import dataclasses
import itertools
import math
from typing import Iterable, Iterator

from glpoly.exception import InvalidShapeError

from .basic import Composition


@dataclasses.dataclass(frozen=True)
class Permutation:
    """Bijection of {0..d-1}; ``images[i]`` is the image of ``i``.

    Products compose right to left: ``(g * h)(i) == g(h(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise InvalidShapeError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(d)))

    @classmethod
    def transposition(cls, d: int, a: int, b: int) -> Permutation:
        images = list(range(d))
        images[a], images[b] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Iterable[int]]) -> Permutation:
        images = list(range(d))
        for cycle in cycles:
            cycle = list(cycle)
            for pos, point in enumerate(cycle):
                images[point] = cycle[(pos + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def all_of(cls, d: int) -> Iterator[Permutation]:
        for images in itertools.permutations(range(d)):
            yield cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise InvalidShapeError("Permutations of different degree")
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for i, image in enumerate(self.images):
            images[image] = i
        return Permutation(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its least point."""
        seen = [False] * self.degree
        cycles = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = self.images[point]
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    @property
    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def __str__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "id"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in moved)


@dataclasses.dataclass(frozen=True)
class YoungSubgroup:
    """Product of the symmetric groups on the blocks of a set partition of {0..d-1}.

    ``shape`` lists the block sizes in block order. Groups built from a
    composition have consecutive interval blocks.
    """

    d: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(b)) for b in self.blocks if len(b) > 0)
        object.__setattr__(self, "blocks", blocks)
        if sorted(p for b in blocks for p in b) != list(range(self.d)):
            raise InvalidShapeError(f"{blocks} is not a set partition of {self.d}")

    @classmethod
    def from_composition(cls, shape: Composition) -> YoungSubgroup:
        return cls(shape.weight, shape.intervals())

    @property
    def shape(self) -> Composition:
        return Composition(tuple(len(b) for b in self.blocks))

    @property
    def order(self) -> int:
        return math.prod(math.factorial(len(b)) for b in self.blocks)

    def is_trivial(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def block_of(self) -> tuple[int, ...]:
        """Block index of every point."""
        labels = [0] * self.d
        for idx, block in enumerate(self.blocks):
            for point in block:
                labels[point] = idx
        return tuple(labels)

    def contains(self, g: Permutation) -> bool:
        labels = self.block_of()
        return all(labels[g(i)] == labels[i] for i in range(self.d))

    def generators(self) -> list[Permutation]:
        """Transpositions of neighbouring points inside each block."""
        return [
            Permutation.transposition(self.d, a, b)
            for block in self.blocks
            for a, b in zip(block, block[1:])
        ]

    def elements(self) -> Iterator[Permutation]:
        for choice in itertools.product(
            *(itertools.permutations(block) for block in self.blocks)
        ):
            images = list(range(self.d))
            for block, image in zip(self.blocks, choice):
                for point, target in zip(block, image):
                    images[point] = target
            yield Permutation(tuple(images))

    def intersection_order(self, other: YoungSubgroup) -> int:
        """Order of the intersection, itself the Young subgroup of the block meet."""
        meet = [
            set(a) & set(b) for a in self.blocks for b in other.blocks if set(a) & set(b)
        ]
        return math.prod(math.factorial(len(m)) for m in meet)

    def conjugated(self, w: Permutation) -> YoungSubgroup:
        """The group w·H·w⁻¹, whose blocks are the images of the blocks of H."""
        return YoungSubgroup(self.d, tuple(tuple(w(p) for p in b) for b in self.blocks))
