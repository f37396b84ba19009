"""Image of sign-twisted invariants in coinvariants of an elementary bimodule.

Every action in play permutes the basis of the bimodule up to sign, so
invariants twisted by a character have signed orbit sums as a basis and
coinvariants have one class per orbit. Only the final image needs
elimination, and that matrix splits into small diagonal blocks.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from typing import NamedTuple, Sequence

import numpy as np

from glpoly.combinatorics import column_group, partition_tuples, row_group
from glpoly.config import DEFAULT_MAX_SANDWICH_DEGREE
from glpoly.exception import ScaleGuardError, WeightMismatchError
from glpoly.linalg import FieldSpec, PrimeFieldMatrix, component_rank
from glpoly.model import ElementaryBimodule, graded_shape_counts
from glpoly.series import PoincareSeries, check_prime
from glpoly.types import Composition, Convention, Permutation, SkewTuple, YoungSubgroup

LOGGER = logging.getLogger(__name__)


class Generator(NamedTuple):
    """e_y ↦ signs[y]·e_{targets[y]}, required to act by ``character``."""

    targets: Sequence[int]
    signs: Sequence[int] | None
    character: int


@dataclasses.dataclass
class OrbitDecomposition:
    """Orbits of a signed permutation action with a coefficient per point.

    Along every generator c[g(y)] = character·sign(y)·c[y], normalized to 1
    at the first point of the orbit. An orbit is valid when these relations
    are consistent; the others carry neither invariants nor coinvariants
    outside characteristic 2.
    """

    labels: list[int]
    coefficients: list[int]
    valid: list[bool]
    roots: list[int]
    index: dict[int, int] = dataclasses.field(init=False)

    def __post_init__(self) -> None:
        # renumbering of the valid orbits as 0, 1, ...
        valid_orbits = (o for o, ok in enumerate(self.valid) if ok)
        self.index = {orbit: idx for idx, orbit in enumerate(valid_orbits)}

    @classmethod
    def build(
        cls, size: int, generators: Sequence[Generator], field: FieldSpec
    ) -> OrbitDecomposition:
        collapse = field.signs_collapse
        labels = [-1] * size
        coefficients = [0] * size
        valid: list[bool] = []
        roots: list[int] = []
        for start in range(size):
            if labels[start] != -1:
                continue
            orbit = len(roots)
            roots.append(start)
            consistent = True
            labels[start] = orbit
            coefficients[start] = 1
            stack = [start]
            while stack:
                y = stack.pop()
                for gen in generators:
                    target = gen.targets[y]
                    if collapse:
                        factor = 1
                    else:
                        factor = gen.character * (1 if gen.signs is None else gen.signs[y])
                    value = factor * coefficients[y]
                    if labels[target] == -1:
                        labels[target] = orbit
                        coefficients[target] = value
                        stack.append(target)
                    elif coefficients[target] != value:
                        consistent = False
            valid.append(consistent)
        return cls(labels, coefficients, valid, roots)

    @property
    def count(self) -> int:
        return len(self.roots)

    @property
    def dimension(self) -> int:
        return sum(self.valid)

    def vectors(self) -> list[dict[int, int]]:
        """Signed orbit sums over the valid orbits."""
        vectors: dict[int, dict[int, int]] = {
            o: {} for o in range(self.count) if self.valid[o]
        }
        for y, orbit in enumerate(self.labels):
            if self.valid[orbit]:
                vectors[orbit][y] = self.coefficients[y]
        return list(vectors.values())

    def project(self, vector: dict[int, int]) -> dict[int, int]:
        """Image in the quotient spanned by the valid orbit classes."""
        image: dict[int, int] = {}
        for y, value in vector.items():
            orbit = self.labels[y]
            if self.valid[orbit]:
                col = self.index[orbit]
                image[col] = image.get(col, 0) + value * self.coefficients[y]
        return {c: v for c, v in image.items() if v}

    def induced(self, generator: Generator, character: int = 1) -> Generator:
        """The action of a commuting generator on the valid orbits."""
        targets = []
        signs = []
        for orbit in range(self.count):
            if not self.valid[orbit]:
                continue
            root = self.roots[orbit]
            image = generator.targets[root]
            sign = 1 if generator.signs is None else generator.signs[root]
            targets.append(self.index[self.labels[image]])
            signs.append(sign * self.coefficients[image])
        return Generator(targets, signs, character)


@dataclasses.dataclass(frozen=True)
class SandwichGroups:
    alt_left: YoungSubgroup
    alt_right: YoungSubgroup
    coinvariant_left: YoungSubgroup
    coinvariant_right: YoungSubgroup

    def conjugated(self, w: Permutation) -> SandwichGroups:
        return SandwichGroups(
            self.alt_left.conjugated(w),
            self.alt_right.conjugated(w),
            self.coinvariant_left.conjugated(w),
            self.coinvariant_right.conjugated(w),
        )


def acting_groups(
    left: SkewTuple, right: SkewTuple, convention: Convention = Convention.ROW_ALT
) -> SandwichGroups:
    if convention is Convention.ROW_ALT:
        return SandwichGroups(
            row_group(left), row_group(right), column_group(left), column_group(right)
        )
    if convention is Convention.COLUMN_ALT:
        return SandwichGroups(
            column_group(left), column_group(right), row_group(left), row_group(right)
        )
    if convention is Convention.SAME_GROUPS:
        return SandwichGroups(
            row_group(left), row_group(right), row_group(left), row_group(right)
        )
    raise ValueError(f"Unknown convention {convention}")


@dataclasses.dataclass(frozen=True)
class SandwichQuery:
    module: ElementaryBimodule
    left: SkewTuple
    right: SkewTuple
    field: FieldSpec

    def __post_init__(self) -> None:
        if not isinstance(self.field, FieldSpec):
            object.__setattr__(self, "field", FieldSpec.parse(self.field))
        d = self.module.d
        if self.left.weight != d or self.right.weight != d:
            raise WeightMismatchError(
                f"Tuples {self.left} and {self.right} must both have weight {d}"
            )

    def groups(self, convention: Convention = Convention.ROW_ALT) -> SandwichGroups:
        return acting_groups(self.left, self.right, convention)


def _left_generators(
    module: ElementaryBimodule, group: YoungSubgroup, twisted: bool
) -> list[Generator]:
    return [
        Generator(module.left_action(g), None, g.sign if twisted else 1)
        for g in group.generators()
    ]


def _right_generators(
    module: ElementaryBimodule, group: YoungSubgroup, twisted: bool
) -> list[Generator]:
    return [
        Generator(module.right_action(h), None, h.sign if twisted else 1)
        for h in group.generators()
    ]


def alt_invariants(
    module: ElementaryBimodule,
    left_group: YoungSubgroup,
    right_group: YoungSubgroup,
    field: FieldSpec,
) -> list[dict[int, int]]:
    """Basis of {x : g·x = sgn(g)x, x·h = sgn(h)x} as sparse vectors."""
    generators = _left_generators(module, left_group, True) + _right_generators(
        module, right_group, True
    )
    return OrbitDecomposition.build(module.basis().size, generators, field).vectors()


def invariants_nullspace(
    module: ElementaryBimodule,
    left_group: YoungSubgroup,
    right_group: YoungSubgroup,
    field: FieldSpec,
) -> np.ndarray:
    """The same space as :func:`alt_invariants`, by dense elimination over F_p."""
    if field.is_rational:
        raise ValueError("Dense nullspace is only available over a prime field")
    size = module.basis().size
    generators = _left_generators(module, left_group, True) + _right_generators(
        module, right_group, True
    )
    if not generators:
        return np.eye(size, dtype=np.int64)
    # x·(T_g − χ·I) = 0 for the row vector x
    blocks = []
    for gen in generators:
        operator = -gen.character * np.eye(size, dtype=np.int64)
        operator[np.arange(size), np.asarray(gen.targets)] += 1
        blocks.append(operator)
    return PrimeFieldMatrix(np.hstack(blocks), field.characteristic).left_nullspace()


@dataclasses.dataclass(frozen=True)
class CoinvariantProjection:
    decomposition: OrbitDecomposition

    @property
    def dimension(self) -> int:
        return self.decomposition.dimension

    def __call__(self, vector: dict[int, int]) -> dict[int, int]:
        return self.decomposition.project(vector)


def coinvariant_projection(
    module: ElementaryBimodule,
    left_group: YoungSubgroup,
    right_group: YoungSubgroup,
    field: FieldSpec,
) -> CoinvariantProjection:
    generators = _left_generators(module, left_group, False) + _right_generators(
        module, right_group, False
    )
    return CoinvariantProjection(
        OrbitDecomposition.build(module.basis().size, generators, field)
    )


def _image_rank(
    size: int,
    alt_generators: Sequence[Generator],
    coinvariant_generators: Sequence[Generator],
    field: FieldSpec,
) -> int:
    invariants = OrbitDecomposition.build(size, alt_generators, field)
    classes = OrbitDecomposition.build(size, coinvariant_generators, field)
    return component_rank(
        (classes.project(v) for v in invariants.vectors()), field
    )


def _check_scale(d: int, max_degree: int) -> None:
    if d > max_degree:
        raise ScaleGuardError(
            f"Sandwich computations in degree {d} exceed the limit {max_degree}; "
            "pass --allow-large to raise it"
        )


def sandwich_dim_for_groups(
    module: ElementaryBimodule, groups: SandwichGroups, field: FieldSpec
) -> int:
    alt = _left_generators(module, groups.alt_left, True) + _right_generators(
        module, groups.alt_right, True
    )
    coinvariants = _left_generators(
        module, groups.coinvariant_left, False
    ) + _right_generators(module, groups.coinvariant_right, False)
    return _image_rank(module.basis().size, alt, coinvariants, field)


@functools.lru_cache(maxsize=8192)
def _cached_sandwich_dim(
    module: ElementaryBimodule,
    left: SkewTuple,
    right: SkewTuple,
    field: FieldSpec,
    convention: Convention,
) -> int:
    result = sandwich_dim_for_groups(
        module, acting_groups(left, right, convention), field
    )
    LOGGER.debug(
        "sandwich_dim(%s, %s, %s, %s, %s) = %d",
        module.gamma, left, right, field, convention, result,
    )
    return result


def sandwich_dim(
    query: SandwichQuery,
    convention: Convention = Convention.ROW_ALT,
    max_degree: int = DEFAULT_MAX_SANDWICH_DEGREE,
) -> int:
    """dim s_left M s_right over the query's field."""
    _check_scale(query.module.d, max_degree)
    return _cached_sandwich_dim(
        query.module.normalized(), query.left, query.right, query.field, convention
    )


def sandwich_rank(
    query: SandwichQuery,
    convention: Convention = Convention.ROW_ALT,
    max_degree: int = DEFAULT_MAX_SANDWICH_DEGREE,
) -> int:
    """The same composite computed over Q."""
    rational = dataclasses.replace(query, field=FieldSpec.rational())
    return sandwich_dim(rational, convention, max_degree)


def ext_series(
    left: SkewTuple,
    right: SkewTuple,
    p: int,
    r: int,
    convention: Convention = Convention.ROW_ALT,
    max_degree: int = DEFAULT_MAX_SANDWICH_DEGREE,
) -> PoincareSeries:
    """Σ_m dim s_left B_m s_right·t^{2|m|} over the summands of the tensor model."""
    check_prime(p)
    if left.weight != right.weight:
        raise WeightMismatchError(f"{left} and {right} have different weights")
    _check_scale(left.weight, max_degree)
    field = FieldSpec(p)
    terms = []
    for gamma, degree, multiplicity in graded_shape_counts(left.weight, p, r):
        module = ElementaryBimodule(left.weight, gamma)
        dim = sandwich_dim(SandwichQuery(module, left, right, field), convention, max_degree)
        terms.append((degree, multiplicity * dim))
    return PoincareSeries.from_terms(terms)


def sandwich_series(
    mu: Composition,
    p: int,
    r: int,
    convention: Convention = Convention.ROW_ALT,
    max_degree: int = DEFAULT_MAX_SANDWICH_DEGREE,
) -> PoincareSeries:
    """Σ_m Σ_{λ_i ⊢ μ_i} dim s_Λ B_m s_Λ over F_p, Λ = (λ_1|…|λ_n), in degree 2|m|."""
    check_prime(p)
    _check_scale(mu.weight, max_degree)
    tuples = partition_tuples(mu)
    series = PoincareSeries.zero()
    for shape in tuples:
        series += ext_series(shape, shape, p, r, convention, max_degree)
    LOGGER.debug("sandwich_series(%s, p=%d, r=%d) over %d tuples", mu, p, r, len(tuples))
    return series


# One side at a time. These work on dense matrices over F_p, one connected
# component of the combined action at a time.


def _component_points(size: int, generators: Sequence[Generator]) -> list[list[int]]:
    decomposition = OrbitDecomposition.build(size, generators, FieldSpec(2))
    components: list[list[int]] = [[] for _ in range(decomposition.count)]
    for y, label in enumerate(decomposition.labels):
        components[label].append(y)
    return components


def _restrict(generator: Generator, points: Sequence[int]) -> Generator:
    local = {y: i for i, y in enumerate(points)}
    return Generator(
        [local[generator.targets[y]] for y in points],
        None if generator.signs is None else [generator.signs[y] for y in points],
        generator.character,
    )


def _dense(vectors: Sequence[dict[int, int]], width: int, p: int) -> np.ndarray:
    matrix = np.zeros((len(vectors), width), dtype=np.int64)
    for row, vector in zip(matrix, vectors):
        for col, value in vector.items():
            row[col] = value % p
    return matrix


def _operator(generator: Generator, size: int, shift: int) -> np.ndarray:
    """T_g + shift·I, acting on row vectors."""
    operator = shift * np.eye(size, dtype=np.int64)
    signs = np.ones(size, dtype=np.int64) if generator.signs is None else np.asarray(
        generator.signs, dtype=np.int64
    )
    operator[np.arange(size), np.asarray(generator.targets, dtype=np.int64)] += signs
    return operator


def _rank(matrix: np.ndarray, p: int) -> int:
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return 0
    return PrimeFieldMatrix(matrix, p).rank()


class _SideBySide:
    """The four generator families of one component, localized.

    The left sandwich s_L M is kept as the map from the left alternating
    invariants P, which have a signed basis of left orbits, to the left
    coinvariants Q. Right alternation is applied to P and pushed into Q.
    Right coinvariants of the image are read in the two-sided coinvariants
    Q_G except in :meth:`coinvariants_of_sandwich`, which quotients s_L M
    itself. Over F_2 the map (s_L M)_G → Q_G is not injective in general.
    """

    def __init__(self, size: int, families: dict[str, list[Generator]], p: int) -> None:
        self.size = size
        self.families = families
        self.p = p
        self.field = FieldSpec(p)
        self.source = OrbitDecomposition.build(size, families["alt_left"], self.field)
        self.classes = OrbitDecomposition.build(
            size, families["coinvariant_left"], self.field
        )
        # rows: the basis of P written in the classes of Q
        self.presentation = _dense(
            [self.classes.project(v) for v in self.source.vectors()],
            self.classes.dimension,
            p,
        )

    def _induced(self, decomposition: OrbitDecomposition, family: str) -> list[Generator]:
        return [decomposition.induced(g, g.character) for g in self.families[family]]

    def _relations(self, family: str) -> np.ndarray:
        """Rows x·(T_g − I) spanning the kernel of Q → Q_G."""
        width = self.classes.dimension
        generators = self._induced(self.classes, family)
        if not generators or width == 0:
            return np.zeros((0, width), dtype=np.int64)
        return np.vstack([_operator(g, width, -1) % self.p for g in generators])

    def left_sandwich(self) -> np.ndarray:
        """Basis of s_L M inside Q."""
        if self.presentation.shape[0] == 0:
            return self.presentation
        return PrimeFieldMatrix(self.presentation, self.p).row_basis()

    def _alternating_image(self, family: str) -> np.ndarray:
        """Image in Q of the right alternating invariants of P."""
        twisted = OrbitDecomposition.build(
            self.source.dimension, self._induced(self.source, family), self.field
        )
        coordinates = _dense(twisted.vectors(), self.source.dimension, self.p)
        return (coordinates @ self.presentation) % self.p

    def _quotient_rank(self, rows: np.ndarray, relations: np.ndarray) -> int:
        if rows.shape[0] == 0:
            return 0
        return _rank(np.vstack([rows, relations]), self.p) - _rank(relations, self.p)

    def iterated(self) -> int:
        """dim (s_L M) s_R."""
        return self._quotient_rank(
            self._alternating_image("alt_right"), self._relations("coinvariant_right")
        )

    def coinvariants_of_sandwich(self) -> int:
        """dim (s_L M)_G for G the right coinvariant group."""
        basis = self.left_sandwich()
        if basis.shape[0] == 0:
            return 0
        width = basis.shape[1]
        generators = self._induced(self.classes, "coinvariant_right")
        if not generators:
            return basis.shape[0]
        relations = np.vstack(
            [(basis @ _operator(g, width, -1)) % self.p for g in generators]
        )
        return basis.shape[0] - _rank(relations, self.p)

    def sandwich_of_coinvariants(self) -> int:
        """dim s_L(M_G) for G the right coinvariant group."""
        quotient = OrbitDecomposition.build(
            self.size, self.families["coinvariant_right"], self.field
        )
        return _image_rank(
            quotient.dimension,
            self._induced(quotient, "alt_left"),
            self._induced(quotient, "coinvariant_left"),
            self.field,
        )

    def invariants_of_sandwich(self) -> int:
        """dim (s_L M)^{alt G} for G the right alternating group."""
        return _rank(self._alternating_image("alt_right"), self.p)

    def sandwich_of_invariants(self) -> int:
        """dim s_L(M^{alt G}) inside Q, for G the right alternating group."""
        invariants = OrbitDecomposition.build(
            self.size, self.families["alt_right"], self.field
        )
        twisted = OrbitDecomposition.build(
            invariants.dimension, self._induced(invariants, "alt_left"), self.field
        )
        embedding = invariants.vectors()
        rows = []
        for vector in twisted.vectors():
            combined: dict[int, int] = {}
            for orbit, coefficient in vector.items():
                for y, value in embedding[orbit].items():
                    combined[y] = combined.get(y, 0) + coefficient * value
            rows.append(self.classes.project(combined))
        return _rank(_dense(rows, self.classes.dimension, self.p), self.p)


def _side_by_side(
    query: SandwichQuery, convention: Convention, max_degree: int
) -> list[_SideBySide]:
    if query.field.is_rational:
        raise ValueError("One-sided computations are only available over a prime field")
    _check_scale(query.module.d, max_degree)
    module = query.module.normalized()
    groups = query.groups(convention)
    families = {
        "alt_left": _left_generators(module, groups.alt_left, True),
        "coinvariant_left": _left_generators(module, groups.coinvariant_left, False),
        "alt_right": _right_generators(module, groups.alt_right, True),
        "coinvariant_right": _right_generators(module, groups.coinvariant_right, False),
    }
    everything = [g for family in families.values() for g in family]
    return [
        _SideBySide(
            len(points),
            {
                name: [_restrict(g, points) for g in family]
                for name, family in families.items()
            },
            query.field.characteristic,
        )
        for points in _component_points(module.basis().size, everything)
    ]


def iterated_sandwich_dim(
    query: SandwichQuery,
    convention: Convention = Convention.ROW_ALT,
    max_degree: int = DEFAULT_MAX_SANDWICH_DEGREE,
) -> int:
    """dim (s_left M) s_right: the left sandwich first, then the right one."""
    return sum(part.iterated() for part in _side_by_side(query, convention, max_degree))


def coinvariants_commute(
    query: SandwichQuery,
    convention: Convention = Convention.ROW_ALT,
    max_degree: int = DEFAULT_MAX_SANDWICH_DEGREE,
) -> tuple[int, int]:
    """(dim (s_L M)_G, dim s_L(M_G)), G the right coinvariant group."""
    parts = _side_by_side(query, convention, max_degree)
    return (
        sum(part.coinvariants_of_sandwich() for part in parts),
        sum(part.sandwich_of_coinvariants() for part in parts),
    )


def invariants_commute(
    query: SandwichQuery,
    convention: Convention = Convention.ROW_ALT,
    max_degree: int = DEFAULT_MAX_SANDWICH_DEGREE,
) -> tuple[int, int]:
    """(dim s_L(M^{alt G}), dim (s_L M)^{alt G}), G the right alternating group."""
    parts = _side_by_side(query, convention, max_degree)
    return (
        sum(part.sandwich_of_invariants() for part in parts),
        sum(part.invariants_of_sandwich() for part in parts),
    )
