"""Finite generalized groups, the star product on integer sequences, and slenderness checks."""

from .core import (
    AxiomReport,
    FiniteGenGroup,
    FiniteGroup,
    direct_product,
    group_component,
    idempotents,
    inverse,
    is_abelian,
    is_group,
    is_normal,
    local_identity,
    make_finite_gg,
    verify_axioms,
)
from .hom import HomTable, check_hom, enumerate_homs, find_isomorphism
from .rees import ReesSpec, random_rees, rees_build, rees_idempotent
from .seqgg import FinSeq, basis, star
from .slender import FgAbelian, IntMatrix, classify, is_slender_fg, smith_normal_form

__version__ = "0.1.0"
