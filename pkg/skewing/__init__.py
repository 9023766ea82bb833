"""Exact skewing of symmetric, noncommutative and chromatic quasisymmetric functions."""

from .chromatic import (
    HExpansion,
    RecurrenceReport,
    c_via_nc_p,
    gamma_beta,
    h_expansion,
    harada_precup,
    omega_x,
    verify_e_recurrence,
    verify_p_recurrence,
)
from .errors import SkewingError
from .foundation import QPoly
from .littlewood_richardson import lr_classical, lr_plactic, lr_skew_expansion
from .poset import NUIO
from .symfun import QSymElem, SymElem, convert, hall_inner, multiply, skew

__version__ = "0.1.0"
