"""Deterministic JSON rendering of reports and the full per-model pipeline."""

from __future__ import annotations

import dataclasses
import hashlib
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import __version__
from .anomaly import AnomalyReport, anomaly_report
from .bounds import BoundVerdict, run_all
from .milnor import DEFAULT_DEGREE_CAP
from .model import FibrationModel, Violation, has_errors, parse_model, total_milnor, validate
from .spectrum import SpectrumReport, full_spectrum


def jsonable(value: Any) -> Any:
    """Exact JSON form: integral rationals become ints, others "p/q" strings."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if dataclasses.is_dataclass(value):
        return {f.name: jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(value: Any) -> str:
    return json.dumps(jsonable(value), indent=2, sort_keys=True, ensure_ascii=False)


def spectrum_json(spec: SpectrumReport) -> Dict[str, Any]:
    out = jsonable(spec)
    out["H_total"] = jsonable(spec.H)
    return out


def bound_json(v: BoundVerdict) -> Dict[str, Any]:
    out = jsonable(v)
    out["at_boundary"] = v.at_boundary
    return out


def input_digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


@dataclasses.dataclass
class RunReport:
    model_path: str
    input_digest: str
    tool_version: str = __version__
    validation: List[Violation] = dataclasses.field(default_factory=list)
    spectrum: Optional[SpectrumReport] = None
    anomaly: Optional[AnomalyReport] = None
    bounds: List[BoundVerdict] = dataclasses.field(default_factory=list)
    errors: List[str] = dataclasses.field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        return {
            "model_path": self.model_path,
            "input_digest": self.input_digest,
            "tool_version": self.tool_version,
            "validation": jsonable(self.validation),
            "spectrum": None if self.spectrum is None else spectrum_json(self.spectrum),
            "anomaly": jsonable(self.anomaly),
            "bounds": [bound_json(b) for b in self.bounds],
            "errors": list(self.errors),
        }


def analyze(model: FibrationModel, report: RunReport, *, jacobian_ideal_only: bool = False,
            degree_cap: int = DEFAULT_DEGREE_CAP, mirror_elliptic_with_section: bool = False) -> RunReport:
    """Validate, then compute spectrum, anomalies and bounds unless validation failed.

    Milnor computation errors propagate to the caller.
    """
    sum_m = total_milnor(model, jacobian_ideal_only=jacobian_ideal_only, degree_cap=degree_cap)
    report.validation = validate(model, milnor_total=sum_m)
    if has_errors(report.validation):
        return report
    spec = full_spectrum(model, jacobian_ideal_only=jacobian_ideal_only, degree_cap=degree_cap)
    report.spectrum = spec
    report.anomaly = anomaly_report(model, spec)
    report.bounds = run_all(model, spec, mirror_elliptic_with_section=mirror_elliptic_with_section)
    return report


def analyze_bytes(data: bytes, path: str, **options) -> RunReport:
    report = RunReport(model_path=path, input_digest=input_digest(data))
    return analyze(parse_model(data), report, **options)
