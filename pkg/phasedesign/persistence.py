"""Reading and writing keys, phase tables, states, matrices and reports."""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Iterable, List, Union

import numpy as np
from jsonschema import ValidationError, validate

from .exceptions import InputValidationError, PhaseDesignError
from .types import KWiseKey, PhaseFunction, StateVector

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

KEY_SCHEMA = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1, "maximum": 64, "description": "Field degree."},
        "k": {"type": "integer", "minimum": 1, "description": "Independence parameter."},
        "coeffs": {"type": "array", "items": {"type": "integer", "minimum": 0}, "description": "c_0..c_{k-1}."},
    },
    "required": ["n", "k", "coeffs"],
    "additionalProperties": False,
}

TABLE_SCHEMA = {
    "type": "object",
    "properties": {
        "modulus": {"type": "integer", "minimum": 1, "description": "Phase modulus (2 or 2^n)."},
        "table": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2},
    },
    "required": ["modulus", "table"],
    "additionalProperties": False,
}

REPORT_CSV_FIELDS = [
    "t",
    "n",
    "observed_rank",
    "rank_bound",
    "lambda_min",
    "eigenvalue_floor",
    "td_binary_complex",
    "td_complex_haar",
    "td_binary_haar",
    "th1_bound",
    "jls_closed_form",
    "main_bound",
    "passed",
]


def _load_json(path: PathLike, schema: dict, what: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            payload = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputValidationError(f"cannot read {what} file {path}: {e}") from e
    try:
        validate(instance=payload, schema=schema)
    except ValidationError as e:
        raise InputValidationError(f"{what} file {path} failed validation: {e.message}") from e
    return payload


def load_key(path: PathLike) -> KWiseKey:
    payload = _load_json(path, KEY_SCHEMA, "key")
    try:
        return KWiseKey(coeffs=tuple(payload["coeffs"]), n=payload["n"], k=payload["k"])
    except PhaseDesignError as e:
        raise InputValidationError(f"key file {path}: {e}") from e


def save_key(key: KWiseKey, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(key.to_dict(), f, indent=2)
        f.write("\n")


def load_table(path: PathLike) -> PhaseFunction:
    payload = _load_json(path, TABLE_SCHEMA, "phase table")
    try:
        return PhaseFunction(table=tuple(payload["table"]), modulus=payload["modulus"])
    except PhaseDesignError as e:
        raise InputValidationError(f"phase table file {path}: {e}") from e


def save_table(f: PhaseFunction, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"modulus": f.modulus, "table": list(f.table)}, fh, indent=2)
        fh.write("\n")


def state_to_csv(state: StateVector) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["index", "re", "im"])
    for i, amp in enumerate(state.amplitudes):
        writer.writerow([i, repr(float(amp.real)), repr(float(amp.imag))])
    return out.getvalue()


def state_from_csv(text: str) -> StateVector:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["index", "re", "im"]:
        raise InputValidationError("state CSV must start with the header index,re,im")
    body = rows[1:]
    size = len(body)
    if size < 2 or size & (size - 1):
        raise InputValidationError(f"state CSV holds {size} rows, not a power of two")
    amplitudes = np.zeros(size, dtype=np.complex128)
    seen = set()
    for line, row in enumerate(body, start=2):
        try:
            index, real, imag = int(row[0]), float(row[1]), float(row[2])
        except (ValueError, IndexError) as e:
            raise InputValidationError(f"malformed state CSV row on line {line}: {e}") from e
        if not 0 <= index < size:
            raise InputValidationError(f"state CSV line {line}: index {index} outside [0, {size})")
        if index in seen:
            raise InputValidationError(f"state CSV line {line}: index {index} repeated")
        seen.add(index)
        amplitudes[index] = complex(real, imag)
    return StateVector(amplitudes=amplitudes, n=size.bit_length() - 1)


def matrix_to_csv(matrix) -> str:
    """Coordinate list of a MomentMatrix: ``dim,<dim>`` then ``row,col,re,im`` rows."""
    coo = matrix.matrix.tocoo()
    order = np.lexsort((coo.col, coo.row))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["dim", matrix.dim])
    writer.writerow(["row", "col", "re", "im"])
    for i in order:
        v = coo.data[i]
        writer.writerow([int(coo.row[i]), int(coo.col[i]), repr(float(v.real)), repr(float(v.imag))])
    return out.getvalue()


def reports_to_json(reports: Iterable) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


def reports_to_csv(reports: Iterable) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=REPORT_CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.to_dict())
    return out.getvalue()


def write_output(text: str, path: PathLike | None) -> None:
    """Write to ``path``, or to stdout when no path is given."""
    if path is None:
        print(text, end="")
        return
    Path(path).write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputValidationError(f"cannot read {path}: {e}") from e


def classes_to_json(descriptors: List, n: int) -> str:
    return json.dumps([d.to_dict(n) for d in descriptors], indent=2) + "\n"
