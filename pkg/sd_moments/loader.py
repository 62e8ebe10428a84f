"""Module-level access to a shared MomentAnalyzer instance."""

from .analyzer import MomentAnalyzer

# Global instance; its caches serve every caller in the process
_analyzer = MomentAnalyzer()


def default_analyzer() -> MomentAnalyzer:
    return _analyzer


def resolve_operation(name: str):
    """Return the bound analyzer method called ``name``.

    Raises:
        AttributeError: if the analyzer has no public method of that name
    """
    if name.startswith("_"):
        raise AttributeError(f"'{name}' is not a public MomentAnalyzer operation")
    method = getattr(_analyzer, name, None)
    if method is None or not callable(method):
        raise AttributeError(f"Method '{name}' not found in MomentAnalyzer")
    return method


tuple_space = _analyzer.tuple_space
enumerate_permutation_classes = _analyzer.enumerate_permutation_classes
enumerate_stabilization_classes = _analyzer.enumerate_stabilization_classes
zero_row_classes = _analyzer.zero_row_classes
rho_complex = _analyzer.rho_complex
rho_binary = _analyzer.rho_binary
rho_diff = _analyzer.rho_diff
rho_haar = _analyzer.rho_haar
moment_spectrum = _analyzer.moment_spectrum
singular_set = _analyzer.singular_set
sentinel_terms = _analyzer.sentinel_terms
det_product_formula = _analyzer.det_product_formula
det_product_formula_log = _analyzer.det_product_formula_log
