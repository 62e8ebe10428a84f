"""Permutation and stabilization relations over ({0,1}^n)^t.

Two tuples are permutations of each other when their histograms agree and
stabilizations of each other when their Odd sets agree. Remote stabilizations
are stabilization pairs that are not permutation pairs; they form the support
of the binary-minus-complex moment difference.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Dict, List, Tuple

import numpy as np

from phasedesign.constants import ENUMERATION_MAX_BITS
from phasedesign.exceptions import InstanceTooLargeError, PreconditionError

from .types import ClassDescriptor, Histogram, OddSet, TupleIndex


def _check_same_shape(x: TupleIndex, y: TupleIndex) -> None:
    if x.t != y.t or x.n != y.n:
        raise PreconditionError(f"tuples of different shape: (t={x.t}, n={x.n}) vs (t={y.t}, n={y.n})")


def histogram(x: TupleIndex) -> Histogram:
    return Histogram.from_entries(x.entries)


def odd_set(x: TupleIndex) -> OddSet:
    return OddSet(tuple(sorted(s for s, m in Counter(x.entries).items() if m % 2)))


def is_permutation_pair(x: TupleIndex, y: TupleIndex) -> bool:
    _check_same_shape(x, y)
    return histogram(x) == histogram(y)


def is_stabilization_pair(x: TupleIndex, y: TupleIndex) -> bool:
    _check_same_shape(x, y)
    return odd_set(x) == odd_set(y)


def stabilizes_by_concatenation(x: TupleIndex, y: TupleIndex) -> bool:
    """Every string appears an even number of times in x || y."""
    _check_same_shape(x, y)
    return all(m % 2 == 0 for m in Counter(x.entries + y.entries).values())


def is_remote_stabilization_pair(x: TupleIndex, y: TupleIndex) -> bool:
    return is_stabilization_pair(x, y) and not is_permutation_pair(x, y)


def permutation_class_size(h: Histogram) -> int:
    """t! / prod(multiplicity!)."""
    return factorial(h.total) // prod(factorial(m) for _, m in h.counts)


def multichoose(size: int, t: int) -> int:
    return comb(size + t - 1, t)


def check_enumerable(t: int, n: int) -> None:
    if t < 1 or n < 1:
        raise PreconditionError(f"need t >= 1 and n >= 1, got t={t}, n={n}")
    if t * n > ENUMERATION_MAX_BITS:
        raise InstanceTooLargeError(f"t*n = {t * n} exceeds the enumeration limit {ENUMERATION_MAX_BITS}")


def tuple_entries(index: np.ndarray, t: int, n: int) -> np.ndarray:
    """Split tn-bit tuple indices into a (len, t) array of n-bit entries, x_1 first."""
    mask = (1 << n) - 1
    shifts = np.array([n * (t - 1 - i) for i in range(t)], dtype=np.int64)
    return (np.asarray(index, dtype=np.int64)[:, None] >> shifts[None, :]) & mask


def entries_to_index(entries: np.ndarray, n: int) -> np.ndarray:
    t = entries.shape[1]
    shifts = np.array([n * (t - 1 - i) for i in range(t)], dtype=np.int64)
    return np.bitwise_or.reduce(entries.astype(np.int64) << shifts[None, :], axis=1)


@dataclass(frozen=True, slots=True)
class TupleSpace:
    """Every tuple of a (t, n) instance labelled with its permutation and stabilization class."""

    t: int
    n: int
    entries: np.ndarray
    perm_labels: np.ndarray
    perm_keys: Tuple[Tuple[int, ...], ...]
    perm_sizes: np.ndarray
    perm_sentinels: np.ndarray
    stab_of_perm: np.ndarray
    stab_keys: Tuple[Tuple[int, ...], ...]
    stab_labels: np.ndarray
    stab_sizes: np.ndarray
    stab_sentinels: np.ndarray

    @property
    def dim(self) -> int:
        return 1 << (self.t * self.n)

    def perm_members(self) -> List[np.ndarray]:
        """Member indices of each permutation class, ascending."""
        return _group(self.perm_labels, len(self.perm_keys))

    def stab_members(self) -> List[np.ndarray]:
        return _group(self.stab_labels, len(self.stab_keys))

    def perm_classes_of_stab(self) -> List[List[int]]:
        groups: List[List[int]] = [[] for _ in self.stab_keys]
        for p, s in enumerate(self.stab_of_perm.tolist()):
            groups[s].append(p)
        return groups


def _group(labels: np.ndarray, count: int) -> List[np.ndarray]:
    order = np.argsort(labels, kind="stable")
    bounds = np.cumsum(np.bincount(labels, minlength=count))[:-1]
    return np.split(order, bounds)


def build_tuple_space(t: int, n: int) -> TupleSpace:
    check_enumerable(t, n)
    index = np.arange(1 << (t * n), dtype=np.int64)
    entries = tuple_entries(index, t, n)
    keys, perm_labels = np.unique(np.sort(entries, axis=1), axis=0, return_inverse=True)
    perm_labels = perm_labels.reshape(-1)
    perm_sizes = np.bincount(perm_labels, minlength=len(keys))
    perm_sentinels = np.zeros(len(keys), dtype=np.int64)
    np.maximum.at(perm_sentinels, perm_labels, index)

    perm_keys = tuple(tuple(row) for row in keys.tolist())
    stab_ids: Dict[Tuple[int, ...], int] = {}
    stab_of_perm = np.empty(len(perm_keys), dtype=np.int64)
    for p, key in enumerate(perm_keys):
        odd = tuple(sorted(s for s, m in Counter(key).items() if m % 2))
        stab_of_perm[p] = stab_ids.setdefault(odd, len(stab_ids))
    stab_labels = stab_of_perm[perm_labels]
    stab_sizes = np.bincount(stab_labels, minlength=len(stab_ids))
    stab_sentinels = np.zeros(len(stab_ids), dtype=np.int64)
    np.maximum.at(stab_sentinels, stab_of_perm, perm_sentinels)

    for arr in (entries, perm_labels, perm_sizes, perm_sentinels, stab_of_perm, stab_labels, stab_sizes, stab_sentinels):
        arr.setflags(write=False)
    return TupleSpace(
        t=t,
        n=n,
        entries=entries,
        perm_labels=perm_labels,
        perm_keys=perm_keys,
        perm_sizes=perm_sizes,
        perm_sentinels=perm_sentinels,
        stab_of_perm=stab_of_perm,
        stab_keys=tuple(stab_ids),
        stab_labels=stab_labels,
        stab_sizes=stab_sizes,
        stab_sentinels=stab_sentinels,
    )


class ClassCombinatoricsMixin:
    """Class enumeration over a cached TupleSpace per (t, n)."""

    def tuple_space(self, t: int, n: int) -> TupleSpace:
        key = (t, n)
        with self._cache_lock:
            space = self._spaces.get(key)
        if space is None:
            self._logging(f"Enumerating 2^{t * n} tuples for t={t}, n={n}", 4)
            space = build_tuple_space(t, n)
            with self._cache_lock:
                space = self._spaces.setdefault(key, space)
        return space

    def _permutation_descriptors(self, space: TupleSpace) -> List[ClassDescriptor]:
        descriptors = []
        for p, key in enumerate(space.perm_keys):
            descriptors.append(
                ClassDescriptor(
                    kind="permutation",
                    canonical=Histogram.from_entries(key),
                    size=int(space.perm_sizes[p]),
                    sentinel=TupleIndex.from_int(int(space.perm_sentinels[p]), space.t, space.n),
                )
            )
        return descriptors

    def enumerate_permutation_classes(self, t: int, n: int) -> List[ClassDescriptor]:
        space = self.tuple_space(t, n)
        descriptors = self._permutation_descriptors(space)
        expected = multichoose(1 << n, t)
        if len(descriptors) != expected:  # pragma: no cover
            self._logging(f"Permutation class count {len(descriptors)} differs from {expected}", 1)
        return descriptors

    def enumerate_stabilization_classes(self, t: int, n: int) -> List[ClassDescriptor]:
        space = self.tuple_space(t, n)
        perm = self._permutation_descriptors(space)
        descriptors = []
        for s, members in enumerate(space.perm_classes_of_stab()):
            descriptors.append(
                ClassDescriptor(
                    kind="stabilization",
                    canonical=OddSet(space.stab_keys[s]),
                    size=int(space.stab_sizes[s]),
                    sentinel=TupleIndex.from_int(int(space.stab_sentinels[s]), t, n),
                    members=tuple(perm[p] for p in members),
                )
            )
        trivial = sum(1 for d in descriptors if d.trivial)
        self._logging(f"t={t}, n={n}: {len(descriptors)} stabilization classes, {trivial} trivial", 4)
        return descriptors

    def zero_row_classes(self, t: int, n: int) -> Tuple[int, int]:
        """(permutation classes with zero difference rows, how many of those are not all-distinct).

        A permutation class has zero rows exactly when it is alone in its
        stabilization class; the all-distinct classes always are.
        """
        space = self.tuple_space(t, n)
        per_stab = np.bincount(space.stab_of_perm, minlength=len(space.stab_keys))
        zero_rows = int(np.count_nonzero(per_stab == 1))
        return zero_rows, zero_rows - comb(1 << n, t)
