"""Graded commutative algebra over GF(q) and QQ: Gröbner bases, ideal
operations, Hilbert invariants, minimal free resolutions, and explicit
families of primary ideals with large projective dimension."""

from .families import (
    FamilySpec,
    build_I,
    build_L,
    burch_ideal,
    engheta_fixtures,
    j_reg,
    link,
    verify_family,
)
from .formats import format_complex, format_ideal, parse_complex, parse_ideal
from .groebner import groebner_basis, normal_form, syzygies
from .ideals import Ideal, colon, intersect, is_primary_to_linear, radical_member, saturate
from .invariants import depth_certificate, dimension, height, hilbert, is_unmixed, multiplicity, regularity
from .matrix import FreeModuleElement, RingMatrix
from .poly import Polynomial, parse_poly
from .report import Report
from .resolution import (
    BettiTable,
    FreeComplex,
    PresentedModule,
    be_acyclicity_check,
    betti_table,
    dualize,
    ext_via_linkage,
    homology_presentation,
    is_complex,
    minimal_free_resolution,
    minors_ideal,
    projective_dimension,
    serre_sk_check,
)
from .ring import Field, Ring, make_ring

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "FamilySpec",
    "Field",
    "FreeComplex",
    "FreeModuleElement",
    "Ideal",
    "Polynomial",
    "PresentedModule",
    "Report",
    "Ring",
    "RingMatrix",
    "be_acyclicity_check",
    "betti_table",
    "build_I",
    "build_L",
    "burch_ideal",
    "colon",
    "depth_certificate",
    "dimension",
    "dualize",
    "engheta_fixtures",
    "ext_via_linkage",
    "format_complex",
    "format_ideal",
    "groebner_basis",
    "height",
    "hilbert",
    "homology_presentation",
    "intersect",
    "is_complex",
    "is_primary_to_linear",
    "is_unmixed",
    "j_reg",
    "link",
    "make_ring",
    "minimal_free_resolution",
    "minors_ideal",
    "multiplicity",
    "normal_form",
    "parse_complex",
    "parse_ideal",
    "parse_poly",
    "projective_dimension",
    "radical_member",
    "regularity",
    "saturate",
    "serre_sk_check",
    "syzygies",
    "verify_family",
]
