import json
import logging

import pytest

from phasedesign.gf2n import find_modulus
from phasedesign.types import KWiseKey
from sd_moments import MomentAnalyzer, TupleIndex


@pytest.fixture
def logger():
    """Fixture for a logger."""
    return logging.getLogger(__name__)


@pytest.fixture(scope="session")
def analyzer():
    """One MomentAnalyzer per session so tuple spaces are enumerated only once."""
    return MomentAnalyzer()


@pytest.fixture
def fresh_analyzer():
    """Fixture for an analyzer with empty caches."""
    return MomentAnalyzer()


@pytest.fixture
def gf16():
    """GF(2^4) modulus x^4 + x + 1."""
    return find_modulus(4)


@pytest.fixture
def tuple_index():
    """Factory building a TupleIndex from bit strings, e.g. tuple_index("01", "10")."""

    def make(*words):
        return TupleIndex.from_bits(words)

    return make


@pytest.fixture
def key_file(tmp_path):
    """Fixture writing a 4-wise key over GF(2^2) to disk."""
    key = KWiseKey(coeffs=(1, 2, 3, 0), n=2, k=4)
    path = tmp_path / "key.json"
    path.write_text(json.dumps(key.to_dict()), encoding="utf-8")
    return path


@pytest.fixture
def table_file(tmp_path):
    """Factory writing a phase table JSON file."""

    def make(table, modulus=2, name="table.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"modulus": modulus, "table": list(table)}), encoding="utf-8")
        return path

    return make
