"""Witnesses: sum, gain-weighted and EPR criteria with gain selection."""

from src.core.witnesses.classification import assemble_report, classify
from src.core.witnesses.criteria import (
    duan_entanglement,
    duan_implies_epr,
    epr_parameter,
    gain_entanglement,
    inference_variance,
    reid_product_satisfied,
)
from src.core.witnesses.gains import numeric_entanglement_gains, optimal_gain

__all__ = [
    "assemble_report",
    "classify",
    "duan_entanglement",
    "duan_implies_epr",
    "epr_parameter",
    "gain_entanglement",
    "inference_variance",
    "numeric_entanglement_gains",
    "optimal_gain",
    "reid_product_satisfied",
]
