"""Product formula for det(rho_diff - lambda I) obtained by triangularizing each class block.

Within a non-trivial stabilization class S with permutation classes
P_1..P_k (P_S holding the sentinel), the block reduces to a k x k matrix whose
determinant factors into one term per non-sentinel row plus the sentinel's
diagonal term. Trivial classes contribute (-lambda)^|S|.
"""

from __future__ import annotations

import math
from typing import List, Tuple

import numpy as np

from phasedesign.constants import SINGULAR_TOL
from phasedesign.exceptions import SingularShiftError

from .bounds import check_parameters


def _accumulate(sign: float, logabs: float, value: float, power: int = 1) -> Tuple[float, float]:
    if power == 0:
        return sign, logabs
    if value == 0.0:
        return 0.0, float("-inf")
    if value < 0 and power % 2:
        sign = -sign
    return sign, logabs + power * math.log(abs(value))


class DeterminantMixin:
    def singular_set(self, t: int, n: int) -> List[float]:
        """{0} together with -|P|/2^(tn) over all permutation classes, ascending."""
        check_parameters(t, n)
        space = self.tuple_space(t, n)
        scale = 2.0 ** (-t * n)
        values = {0.0} | {-float(s) * scale for s in np.unique(space.perm_sizes).tolist()}
        return sorted(values)

    def _check_shift(self, t: int, n: int, lam: float) -> None:
        for point in self.singular_set(t, n):
            if abs(lam - point) <= SINGULAR_TOL:
                raise SingularShiftError(f"lambda={lam!r} lies on the singular point {point!r}")

    def sentinel_terms(self, t: int, n: int, lam: float) -> List[float]:
        """Sentinel diagonal term of every non-trivial stabilization class."""
        self._check_shift(t, n, lam)
        return [term for _, _, term in self._class_factors(t, n, lam)]

    def _class_factors(self, t: int, n: int, lam: float):
        """Per non-trivial class: (non-sentinel row count, base row sizes, sentinel term)."""
        space = self.tuple_space(t, n)
        scale = 2.0 ** (-t * n)
        for members in space.perm_classes_of_stab():
            if len(members) == 1:
                continue
            base = max(members, key=lambda p: int(space.perm_sentinels[p]))
            others = [p for p in members if p != base]
            a_base = float(space.perm_sizes[base]) * scale
            a_others = [float(space.perm_sizes[p]) * scale for p in others]
            term = -lam + (lam + a_base) * sum(a / (lam + a) for a in a_others)
            yield members, a_others, term

    def det_product_formula_log(self, t: int, n: int, lam: float) -> Tuple[float, float]:
        """(sign, log|det|) of rho_diff(t, n) - lam * I."""
        check_parameters(t, n)
        self._check_shift(t, n, lam)
        space = self.tuple_space(t, n)
        sign, logabs = 1.0, 0.0
        per_stab = np.bincount(space.stab_of_perm, minlength=len(space.stab_keys))
        trivial_rows = int(space.stab_sizes[per_stab == 1].sum())
        sign, logabs = _accumulate(sign, logabs, -lam, trivial_rows)

        for members, a_others, term in self._class_factors(t, n, lam):
            class_rows = int(sum(int(space.perm_sizes[p]) for p in members))
            # every row except one per permutation class is a plain -lambda
            sign, logabs = _accumulate(sign, logabs, -lam, class_rows - len(members))
            for a in a_others:
                sign, logabs = _accumulate(sign, logabs, -lam - a)
            sign, logabs = _accumulate(sign, logabs, term)
        return sign, logabs

    def det_product_formula(self, t: int, n: int, lam: float) -> float:
        sign, logabs = self.det_product_formula_log(t, n, lam)
        if sign == 0.0:
            return 0.0
        return sign * math.exp(logabs)
