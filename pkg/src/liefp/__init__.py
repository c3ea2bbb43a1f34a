"""Finite Lie rings over F_p: subring lattices, Engel sets and Cartan subrings."""

from .abnormal import is_def_abnormal, minimal_def_abnormal
from .corpus import FamilySpec, generate
from .engel import cartan_subring, cartan_subrings, engel_element, engel_minimal_subrings, engel_subring, fitting
from .errors import GuardExceeded, IndexExceedsCharacteristic, NotApplicable, NotNilpotent, VerificationFailed
from .exactla import Subspace
from .frattini import frattini, maximal_subrings
from .harness import SuiteConfig, run_check, verify_suite
from .inner import exp_ad, inner_group
from .liering import LieRing, validate

__version__ = "0.1.0"
