import enum


class StrEnum(str, enum.Enum):
    def __str__(self) -> str:
        return self.value


class Convention(StrEnum):
    # Which Young subgroups act in the sandwich composite.

    # Sign-twisted invariants under the row groups, coinvariants under the
    # column groups.
    ROW_ALT = "row_alt"
    # The transposed reading: invariants under columns, coinvariants under rows.
    COLUMN_ALT = "column_alt"
    # Negative control: the row groups on both ends.
    SAME_GROUPS = "same_groups"


class SeriesKind(StrEnum):
    # What a result document holds.

    SYM = "sym"
    GAMMA = "gamma"
    TENSOR = "tensor"
    EXT = "ext"


class ComputationPath(StrEnum):
    # Engine used for symmetric power coefficients.

    ORBIT = "orbit"
    SANDWICH = "sandwich"
    BOTH = "both"


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    PRETTY = "pretty"
