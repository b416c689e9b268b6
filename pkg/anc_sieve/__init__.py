"""Annular noncrossing permutations and their cyclic sieving.

This package computes the exact q-polynomials attached to connected annular
noncrossing permutations, enumerates those permutations at small sizes, and
checks the two against each other.

Classes:
    QPolynomial: exact polynomial in q with rational coefficients
    Partition: integer partition with weakly decreasing parts
    CycleProfile: cycle-type profile (n, m; c, r, s, R, S; alpha, beta, lam, mu)
    ProfileFilter: partial profile used to select permutations
    RotationPair: element of the bicyclic rotation action
    AnnularPermutation: permutation of [n+m] split into two circles
    VerificationReport: checks made by a verification suite
    AncConfig: run configuration

Example:
    ```python
    from anc_sieve import annular_catalan_q, enumerate_anc

    poly = annular_catalan_q(2, 2)
    assert poly.at_one() == len(enumerate_anc(2, 2))   # 18
    ```
"""

from .annulus import (
    AnnularPermutation,
    apply_rotation,
    enumerate_anc,
    enumerate_anc_B,
    enumerate_matchings,
    enumerate_nc_disc,
    fixed_points,
    is_connected_anc,
    profile_of,
    rigid_rotation,
    rotations_of_order,
)
from .config import AncConfig, get_config, load_anc_config, set_config
from .errors import AncSieveError
from .formulas import (
    annular_catalan_q,
    annular_kreweras_q,
    annular_narayana1_q,
    annular_narayana2_q,
    annular_narayana3_q,
    count_anc,
    count_anc_B,
    fixed_count_formula,
    rotation_csp_q,
)
from .logger import AncLogger, setup_logging
from .models import CycleProfile, ProfileFilter, RotationPair, make_profile
from .partitions import Partition, parse_partition
from .qcalc import QPolynomial, NotAnInteger, cyclotomic_as_integer, eval_at_primitive_root
from .report import CheckStatus, VerificationReport
from .verify import SUITES, run_suite

__all__ = [
    "AnnularPermutation",
    "AncConfig",
    "AncLogger",
    "AncSieveError",
    "CheckStatus",
    "CycleProfile",
    "NotAnInteger",
    "Partition",
    "ProfileFilter",
    "QPolynomial",
    "RotationPair",
    "SUITES",
    "VerificationReport",
    "annular_catalan_q",
    "annular_kreweras_q",
    "annular_narayana1_q",
    "annular_narayana2_q",
    "annular_narayana3_q",
    "apply_rotation",
    "count_anc",
    "count_anc_B",
    "cyclotomic_as_integer",
    "enumerate_anc",
    "enumerate_anc_B",
    "enumerate_matchings",
    "enumerate_nc_disc",
    "eval_at_primitive_root",
    "fixed_count_formula",
    "fixed_points",
    "get_config",
    "is_connected_anc",
    "load_anc_config",
    "make_profile",
    "parse_partition",
    "profile_of",
    "rigid_rotation",
    "rotation_csp_q",
    "rotations_of_order",
    "run_suite",
    "set_config",
    "setup_logging",
]
