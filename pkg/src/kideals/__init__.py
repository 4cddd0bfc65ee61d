"""Subtractive ideals, congruences, quotients and localisations of finite commutative semirings."""

from .classify import ClassProfile, classify_ideal, ik_system_equivalence_check, is_ik_system
from .congruence import Congruence, bourne_congruence, enumerate_congruences, excellent_congruence
from .core import (
    Budget,
    FiniteSemiring,
    Hom,
    from_json,
    from_tables,
    load,
    make_boolean,
    make_chain_lattice,
    make_product,
    make_tropical,
    make_truncated_nat,
    make_zn_ring,
    validate_semiring,
)
from .errors import (
    BudgetExceededError,
    ContractViolation,
    KIdealError,
    MalformedInputError,
    NotApplicableError,
    SemiringAxiomError,
)
from .ideals import (
    IdealSet,
    MultSet,
    enumerate_ideals,
    enumerate_k_ideals,
    generate_ideal,
    k_closure,
    k_radical,
    lattice_analysis,
    mult_set,
)
from .nat import NatIdeal, TropIdeal, nat_classify, trop_classify
from .quotient import bourne_quotient, localize
from .suites import REGISTRY, SuiteReport, build_corpus, run_suite

__version__ = "0.1.0"
