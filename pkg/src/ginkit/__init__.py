"""Exact Groebner bases, generic initial ideals and partial regularities.

The main entry points are :func:`gin`, :func:`invariant_report` and
:func:`reduction_number`; the ``ginkit`` command wraps them.
"""

from .betti import BettiTable, ek_betti, extremal_betti, profiles_from_betti
from .errors import (
    BorelCheckFailed,
    CharNotZero,
    GinkitError,
    GinUnstable,
    NoPower,
    NotAReduction,
    NotBorelFixed,
    NotFilterRegular,
    NotHomogeneous,
    ParseError,
    RouteDisagreement,
    UnitIdeal,
)
from .gin import GinResult, gin, random_coordinate_change
from .groebner import GroebnerBasis, initial_ideal, normal_form, reduced_groebner_basis
from .io import parse_ideal, format_ideal, render_report
from .monomial_ideal import (
    DeltaProfile,
    MonomialIdeal,
    borel_closure,
    colon_by_variable,
    delta_profile,
    hf,
    hilbert_numerator,
    is_borel_fixed,
    krull_dimension,
    restrict_below,
)
from .poly import Polynomial, Ring, TermOrder, monomial_compare
from .profiles import InvariantProfile, profiles_borel, profiles_colon
from .reduction import ReductionResult, bh_reduction, direct_reduction_degree, reduction_number
from .report import InvariantReport, ReportConfig, invariant_report

__version__ = "0.1.0"
