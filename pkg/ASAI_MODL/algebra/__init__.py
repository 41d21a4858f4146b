from .charlattice import (
    CaseTag,
    DualityKind,
    EllContext,
    FiniteSetting,
    LiftClass,
    closed_form_dual_lift_count,
    closed_form_lift_total,
    enumerate_lifts,
)
from .errors import AsaiError, InvalidDatum
from .lfactor import EulerFactor, asai_l_factor, period_report, period_vanishing_primes, pole_order_at_one
from .padic import CuspidalDatum, Distinction, invariant_report, validate
from .roots import RootOfUnity
