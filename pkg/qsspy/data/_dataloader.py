from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING, Any

from filelock import FileLock
from lamin_utils import logger

from qsspy.data._datasets import BUILTIN_CODES
from qsspy.tools._paulistab import StabilizerCode, pauli_parse
from qsspy.tools._schemes import SecretSpec
from qsspy.tools._structures import MSP, AdversaryStructure, threshold_structure

if TYPE_CHECKING:
    from qsspy.tools._verifier import VerificationReport


def _read_json(path: str | Path) -> dict[str, Any]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ValueError(f"{path}: cannot read file ({e.strerror}).") from e
    try:
        content = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}.") from e
    if not isinstance(content, dict):
        raise ValueError(f"{path}: expected a JSON object at the top level, got {type(content).__name__}.")
    return content


def _field(content: dict[str, Any], name: str, path: Path, kind: type | tuple[type, ...]) -> Any:
    if name not in content:
        raise ValueError(f"{path}: missing field {name!r}.")
    value = content[name]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ValueError(f"{path}: field {name!r} has invalid type {type(value).__name__}.")
    return value


def _wrap(path: Path, name: str, build):
    try:
        return build()
    except (ValueError, TypeError) as e:
        raise ValueError(f"{path}: field {name!r}: {e}") from e


def load_code(source: str | Path) -> StabilizerCode:
    """Load a stabilizer code by built-in name or from a JSON file.

    The file holds ``{"n": int, "generators": [str], "logical_x": str, "logical_z": str}``.

    Args:
        source: ``"trivial"``, ``"five_qubit"``, ``"repetition"`` or a path.

    Returns:
        The validated code.

    Examples:
        >>> import qsspy as qs
        >>> qs.dt.load_code("five_qubit").n
        5
    """
    if str(source) in BUILTIN_CODES:
        return BUILTIN_CODES[str(source)]()
    path = Path(source)
    content = _read_json(path)
    n = _field(content, "n", path, int)
    generators = _field(content, "generators", path, list)
    logical_x = _wrap(path, "logical_x", lambda: pauli_parse(_field(content, "logical_x", path, str)))
    logical_z = _wrap(path, "logical_z", lambda: pauli_parse(_field(content, "logical_z", path, str)))
    parsed = tuple(_wrap(path, f"generators[{k}]", lambda g=g: pauli_parse(g)) for k, g in enumerate(generators))
    if logical_x.n != n:
        raise ValueError(f"{path}: field 'n' is {n} but logical_x acts on {logical_x.n} qubits.")
    code = StabilizerCode(parsed, logical_x, logical_z, name=path.stem)
    _wrap(path, "generators", code.validate)
    logger.info(f"Loaded code {code.name!r} with n={n} from {path}.")
    return code


def load_msp(path: str | Path) -> MSP:
    """Load ``{"q": int, "matrix": [[int]], "labels": [int]}``; an optional ``"n"`` adds row-less players."""
    path = Path(path)
    content = _read_json(path)
    q = _field(content, "q", path, int)
    matrix = _field(content, "matrix", path, list)
    labels = _field(content, "labels", path, list)
    n_players = content.get("n")
    return _wrap(path, "matrix", lambda: MSP.from_rows(q, matrix, labels, n_players))


def load_secret(path: str | Path) -> SecretSpec:
    """Load ``{"dim": int, "probs": [float]}``."""
    path = Path(path)
    content = _read_json(path)
    dim = _field(content, "dim", path, int)
    probs = _field(content, "probs", path, list)
    return _wrap(path, "probs", lambda: SecretSpec(dim, probs))


def parse_threshold(text: str) -> AdversaryStructure:
    """Parse ``"t,n"`` into a threshold structure."""
    try:
        t, n = (int(part) for part in text.split(","))
    except ValueError as e:
        raise ValueError(f"Threshold must be given as 't,n', got {text!r}.") from e
    return threshold_structure(t, n)


def load_structure(path: str | Path) -> AdversaryStructure:
    """Load ``{"n": int, "maximal_unauthorized": [[int]]}`` or ``{"threshold": {"t": int, "n": int}}``."""
    path = Path(path)
    content = _read_json(path)
    if "threshold" in content:
        threshold = _field(content, "threshold", path, dict)
        t = _field(threshold, "t", path, int)
        n = _field(threshold, "n", path, int)
        return _wrap(path, "threshold", lambda: threshold_structure(t, n))
    n = _field(content, "n", path, int)
    maximal = _field(content, "maximal_unauthorized", path, list)
    return _wrap(path, "maximal_unauthorized", lambda: AdversaryStructure.from_maximal(n, maximal))


def dumps_report(report: VerificationReport, extra: dict[str, Any] | None = None) -> str:
    """Deterministic JSON text of a report, optionally with extra top-level sections."""
    content = report.to_dict()
    if extra:
        content.update(extra)
    return json.dumps(content, indent=2, sort_keys=True) + "\n"


def write_report(report: VerificationReport, path: str | Path, extra: dict[str, Any] | None = None) -> None:
    """Write the report JSON to ``path`` under a file lock."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lock_path = path.with_name(f"{path.name}.lock")
    with FileLock(lock_path):
        path.write_text(dumps_report(report, extra))
    lock_path.unlink(missing_ok=True)
    logger.info(f"Wrote report to {path}.")
