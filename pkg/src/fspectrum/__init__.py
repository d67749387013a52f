"""Exact massless spectra, anomaly residuals and bounds for elliptic Calabi-Yau threefolds."""

__version__ = "0.1.0"

from .anomaly import AnomalyReport, anomaly_report, geometric_residual, gravitational_residual, solve
from .bounds import BoundVerdict, run_all
from .kodaira import FiberType, Monodromy, fiber_record, milnor_contributions
from .milnor import milnor_number, milnor_quasihomogeneous, parse_poly
from .model import FibrationModel, gauge_algebra_of, parse_model, serialize_model, validate
from .spectrum import SpectrumReport, full_spectrum, jacobian_cxdef

__all__ = [
    "AnomalyReport", "BoundVerdict", "FiberType", "FibrationModel", "Monodromy",
    "SpectrumReport", "anomaly_report", "fiber_record", "full_spectrum", "gauge_algebra_of",
    "geometric_residual", "gravitational_residual", "jacobian_cxdef", "milnor_contributions",
    "milnor_number", "milnor_quasihomogeneous", "parse_model", "parse_poly", "run_all",
    "serialize_model", "solve", "validate",
]
