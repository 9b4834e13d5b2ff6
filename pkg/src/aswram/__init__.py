"""Ramification data of cyclic p-power extensions of F_q((t)) presented by Witt vectors."""
from __future__ import annotations

from .asw import (AswClass, ReductionCertificate, extension_degree, in_image_wp, inertia_bounds,
                  normalize_generator, standard_form, upper_jumps)
from .fields import GF, FieldSpec, FiniteField, prime_field
from .oracle import OracleResult, oracle_e1
from .ow import star_condition, star_prime_condition, ow_liftable_no_essential
from .polys import PolyU
from .ramification import (JumpSequence, different_degree, essential_decomposition, herbrand,
                           kato_check, kg_genus, validate_jumps)
from .series import LaurentSeries, series_hensel_root
from .splitting import materialize, split_plan, theta_matrix, verify_plan
from .witt import WittVector, witt_add, witt_neg, wp

__version__ = "0.1.0"
