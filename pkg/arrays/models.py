from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class OrthogonalArray:
    """An m x n^2 array over 0..n-1; build it with ``validate_oa``."""
    m: int
    n: int
    cells: np.ndarray

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        cells.setflags(write=False)
        object.__setattr__(self, 'cells', cells)

    def __eq__(self, other):
        if not isinstance(other, OrthogonalArray):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.cells, other.cells)

    __hash__ = None

    @property
    def deficiency(self) -> int:
        return self.n - self.m + 1

    @property
    def full(self) -> bool:
        return self.deficiency == 0

    def rows(self):
        return self.cells.tolist()


Line = Tuple[int, ...]


@dataclass(frozen=True)
class ParallelClassSet:
    """Each class is n disjoint lines covering all n^2 columns, ordered by smallest column."""
    classes: Tuple[Tuple[Line, ...], ...]


@dataclass(frozen=True)
class CompletionReport:
    m: int
    n: int
    delta: int
    bound: Fraction
    bound_met: bool
    method: str
    line_count: int = 0
    class_count: int = 0
    warning: Optional[str] = None

    @property
    def already_full(self):
        return self.delta == 0
