"""Exact Fock-basis construction and single-particle entanglement measures
for fractional quantum Hall model wavefunctions.

The pipeline is: expand a model wavefunction's polynomial part exactly
(poly), project it onto monomial determinants, normalize into a Fock vector
over lowest-Landau-level orbitals (lll), and evaluate entanglement measures
on the result (entangle).  Hierarchical families are produced from
two-quasihole condensate integrals (quasihole, states); figures and the CLI
sit on top (figures, cli, verify).
"""

from .entangle import (
    DimensionNotFourError,
    EntanglementReport,
    NotTwoFermionError,
    OneBodyDensityMatrix,
    SlaterPairing,
    closed_form_sf_laughlin2,
    modified_measure,
    one_body_density,
    schliemann_eta,
    slater_pairing,
    two_qubit_consistency,
    von_neumann,
)
from .exact import PiScalar, sqrt_exact
from .figures import (
    FigureSpec,
    SweepPoint,
    evaluate_point,
    figure_points,
    figure_spec,
    figure_title,
    render_svg,
    rows_to_csv,
    sweep,
)
from .lll import (
    Amplitude,
    FockConfig,
    FockVector,
    ZeroStateError,
    amplitude_pattern,
    orbital_norm_sq,
    slater_coefficient_magnitudes,
    to_fock,
)
from .poly import (
    MultiPoly,
    NotAntisymmetricError,
    SlaterExpansion,
    elementary_symmetric,
    slater_project,
    vandermonde_power,
)
from .quasihole import (
    CondensateKernel,
    ScaledPoly,
    condense,
    gaussian_moment,
    vanishes,
)
from .states import (
    FAMILIES,
    FAMILY_NAMES,
    FamilySpec,
    KMatrix,
    ZeroWavefunctionError,
    build_state,
    chi,
    chi_k,
    family_polynomial,
    filling_fraction,
    hierarchical_phi,
    hierarchical_phi_k,
    laughlin,
)
from .verify import CheckResult, all_passed, format_report, run_verification

__version__ = "0.1.0"

__all__ = [
    "Amplitude",
    "CheckResult",
    "CondensateKernel",
    "DimensionNotFourError",
    "EntanglementReport",
    "FAMILIES",
    "FAMILY_NAMES",
    "FamilySpec",
    "FigureSpec",
    "FockConfig",
    "FockVector",
    "KMatrix",
    "MultiPoly",
    "NotAntisymmetricError",
    "NotTwoFermionError",
    "OneBodyDensityMatrix",
    "PiScalar",
    "ScaledPoly",
    "SlaterExpansion",
    "SlaterPairing",
    "SweepPoint",
    "ZeroStateError",
    "ZeroWavefunctionError",
    "all_passed",
    "amplitude_pattern",
    "build_state",
    "chi",
    "chi_k",
    "closed_form_sf_laughlin2",
    "condense",
    "elementary_symmetric",
    "evaluate_point",
    "family_polynomial",
    "figure_points",
    "figure_spec",
    "figure_title",
    "filling_fraction",
    "format_report",
    "gaussian_moment",
    "hierarchical_phi",
    "hierarchical_phi_k",
    "laughlin",
    "modified_measure",
    "one_body_density",
    "orbital_norm_sq",
    "render_svg",
    "rows_to_csv",
    "run_verification",
    "schliemann_eta",
    "slater_coefficient_magnitudes",
    "slater_pairing",
    "slater_project",
    "sqrt_exact",
    "sweep",
    "to_fock",
    "two_qubit_consistency",
    "vandermonde_power",
    "vanishes",
    "von_neumann",
]
