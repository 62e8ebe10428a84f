import threading
from typing import Callable, Dict, Optional, Tuple

from .combinatorics import ClassCombinatoricsMixin, TupleSpace
from .determinant import DeterminantMixin
from .matrices import MomentMatrixMixin
from .spectral import SpectralMixin
from .types import Spectrum


class MomentAnalyzer(ClassCombinatoricsMixin, MomentMatrixMixin, SpectralMixin, DeterminantMixin):
    """Moment-matrix analysis with helper methods from multiple mixins.

    Inherits from:
    - ClassCombinatoricsMixin: tuple-space labelling and class enumeration
    - MomentMatrixMixin: rho_complex, rho_binary, rho_diff, rho_haar
    - SpectralMixin: cached spectra and named trace distances
    - DeterminantMixin: determinant product formula and its singular set

    Tuple spaces and spectra are cached per (t, n); the caches are shared by
    threads verifying different grid points.
    """

    def __init__(self):
        self._spaces: Dict[Tuple[int, int], TupleSpace] = {}
        self._spectra: Dict[Tuple[str, int, int], Spectrum] = {}
        self._cache_lock = threading.Lock()
        self._log_callback: Optional[Callable[[str, int], None]] = None

    def clear_cache(self) -> None:
        with self._cache_lock:
            self._spaces.clear()
            self._spectra.clear()

    def register_log_callback(self, callback):
        """Register a callback function for logging."""
        if callable(callback):
            self._log_callback = callback

    def _logging(self, message: str, level: int = 3):
        """Log a message if a callback is registered."""
        if self._log_callback:
            self._log_callback(message, level)
