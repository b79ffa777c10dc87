"""Exact Newton numbers and Milnor number spectra of semi-quasi-homogeneous plane curve singularities."""

from .constructions import (
    NamedDeformation,
    SQHParams,
    extended_family,
    first_jump_diagram,
    gcd_parity,
    pkp_family,
    sigma_diagram,
    small_p_family,
    staircase_brackets,
)
from .dsl import parse_diagram, render_terms, render_vertices
from .eea import EEASequence, decompose_Nn, eea_sequence, sign_of
from .geometry import (
    Diagram,
    LatticePoint,
    SegmentTerm,
    deform,
    diagram_from_terms,
    diagram_from_vertices,
    is_deformation_of,
    newton_number,
    tr,
    triangle,
    twice_area_under,
)
from .oracle import (
    BudgetExceeded,
    EnumerationConstraints,
    SpectrumResult,
    VerificationReport,
    attainable_spectrum,
    enumerate_subdiagrams,
    find_witness,
    verify,
)
from .predictor import GapReport, mu_sqh, predicted_report

__version__ = "0.1.0"
