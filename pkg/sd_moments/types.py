"""Dataclasses for tuple indices, equivalence classes, moment matrices and reports."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from phasedesign.exceptions import PreconditionError


@dataclass(frozen=True, slots=True)
class TupleIndex:
    """(x_1, ..., x_t) of n-bit strings; as an integer x_1 is the most significant block."""

    entries: Tuple[int, ...]
    n: int

    def __post_init__(self):
        limit = 1 << self.n
        for e in self.entries:
            if not 0 <= e < limit:
                raise PreconditionError(f"entry {e} is not an {self.n}-bit string")

    @property
    def t(self) -> int:
        return len(self.entries)

    def to_int(self) -> int:
        value = 0
        for e in self.entries:
            value = (value << self.n) | e
        return value

    @classmethod
    def from_int(cls, value: int, t: int, n: int) -> "TupleIndex":
        mask = (1 << n) - 1
        entries = tuple((value >> (n * (t - 1 - i))) & mask for i in range(t))
        return cls(entries, n)

    @classmethod
    def from_bits(cls, words: Sequence[str]) -> "TupleIndex":
        """Build from bit strings such as ("101", "111"), most significant bit first."""
        n = len(words[0])
        return cls(tuple(int(w, 2) for w in words), n)

    def __str__(self) -> str:
        return "(" + ",".join(format(e, f"0{self.n}b") for e in self.entries) + ")"


@dataclass(frozen=True, slots=True)
class Histogram:
    """Multiplicity map of a tuple, stored as sorted (string, multiplicity) pairs."""

    counts: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "Histogram":
        return cls(tuple(sorted(Counter(entries).items())))

    @property
    def total(self) -> int:
        return sum(m for _, m in self.counts)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)


@dataclass(frozen=True, slots=True)
class OddSet:
    """Strings occurring an odd number of times, as a sorted tuple."""

    members: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True, slots=True)
class ClassDescriptor:
    kind: str  # "permutation" or "stabilization"
    canonical: Histogram | OddSet
    size: int
    sentinel: TupleIndex
    members: Tuple["ClassDescriptor", ...] = ()

    @property
    def trivial(self) -> bool:
        """A stabilization class holding exactly one permutation class."""
        return self.kind == "stabilization" and len(self.members) == 1

    def to_dict(self, n: int) -> dict:
        fmt = f"0{n}b"
        if isinstance(self.canonical, Histogram):
            canonical = {format(s, fmt): m for s, m in self.canonical.counts}
        else:
            canonical = [format(s, fmt) for s in self.canonical.members]
        data = {
            "kind": self.kind,
            "canonical": canonical,
            "size": self.size,
            "sentinel": [format(e, fmt) for e in self.sentinel.entries],
        }
        if self.kind == "stabilization":
            data["trivial"] = self.trivial
            data["members"] = [m.to_dict(n) for m in self.members]
        return data


@dataclass(slots=True)
class MomentMatrix:
    """2^(tn) x 2^(tn) Hermitian matrix held as CSR, densified on demand."""

    label: str
    t: int
    n: int
    matrix: sp.csr_matrix

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    def entry(self, x: TupleIndex | int, y: TupleIndex | int) -> complex:
        row = x.to_int() if isinstance(x, TupleIndex) else x
        col = y.to_int() if isinstance(y, TupleIndex) else y
        return complex(self.matrix[row, col])

    def row_support(self, x: TupleIndex | int) -> np.ndarray:
        row = x.to_int() if isinstance(x, TupleIndex) else x
        start, stop = self.matrix.indptr[row], self.matrix.indptr[row + 1]
        return self.matrix.indices[start:stop]

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def trace(self) -> complex:
        return complex(self.matrix.diagonal().sum())

    def hermitian_defect(self) -> float:
        diff = self.matrix - self.matrix.conj().T
        return float(abs(diff).max()) if diff.nnz else 0.0

    def scaled_entries(self) -> np.ndarray:
        """Stored values multiplied by 2^(tn); integral for the phase-ensemble matrices."""
        return self.matrix.data * float(1 << (self.t * self.n))

    def __sub__(self, other: "MomentMatrix") -> "MomentMatrix":
        diff = (self.matrix - other.matrix).tocsr()
        diff.eliminate_zeros()
        diff.sort_indices()
        return MomentMatrix(f"{self.label}-{other.label}", self.t, self.n, diff)


@dataclass(frozen=True, slots=True)
class Spectrum:
    eigenvalues: np.ndarray  # sorted descending
    dim: int
    source: str

    @property
    def min(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def max(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def total(self) -> float:
        return float(np.sum(self.eigenvalues))

    @property
    def negative_mass(self) -> float:
        return float(-np.sum(self.eigenvalues[self.eigenvalues < 0]))

    @property
    def nuclear_norm(self) -> float:
        return float(np.sum(np.abs(self.eigenvalues)))


@dataclass(slots=True)
class BoundsReport:
    """Observed quantities for one (t, n) next to the bounds they must respect."""

    t: int
    n: int
    dim: int = 0
    observed_rank: int = 0
    rank_bound: int = 0
    lambda_min: float = 0.0
    eigenvalue_floor: float = 0.0
    td_binary_complex: float = 0.0
    td_complex_haar: float = 0.0
    td_binary_haar: float = 0.0
    th1_bound: float = 0.0
    jls_closed_form: float = 0.0
    main_bound: float = 0.0
    chain_bound: float = 0.0
    negative_eigen_sum: float = 0.0
    diff_trace: float = 0.0
    zero_row_classes: int = 0
    extra_zero_row_classes: int = 0
    checks: Dict[str, bool] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and not self.failures

    def record(self, name: str, ok: bool) -> None:
        self.checks[name] = bool(ok)
        if not ok:
            self.failures.append(name)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "dim": self.dim,
            "observed_rank": self.observed_rank,
            "rank_bound": self.rank_bound,
            "lambda_min": self.lambda_min,
            "eigenvalue_floor": self.eigenvalue_floor,
            "td_binary_complex": self.td_binary_complex,
            "td_complex_haar": self.td_complex_haar,
            "td_binary_haar": self.td_binary_haar,
            "th1_bound": self.th1_bound,
            "jls_closed_form": self.jls_closed_form,
            "main_bound": self.main_bound,
            "chain_bound": self.chain_bound,
            "negative_eigen_sum": self.negative_eigen_sum,
            "diff_trace": self.diff_trace,
            "zero_row_classes": self.zero_row_classes,
            "extra_zero_row_classes": self.extra_zero_row_classes,
            "checks": dict(self.checks),
            "failures": list(self.failures),
            "error": self.error,
            "passed": self.passed,
        }
