"""Toolkit for the modular group PSL2(Z), indefinite binary quadratic
forms, cark ribbon graphs, geodesics, and the representation problem."""

from .cark import (
    CarkEdge,
    CarkGraph,
    CarkNode,
    SpineCycle,
    expand_cark,
    path_on_spine,
    revolve_around_spine,
    spine_signature,
)
from .errors import (
    DepthError,
    DomainError,
    FormClassError,
    GeodesicError,
    IdentityHasNoForm,
    SolveError,
    SpineError,
    StepLimitExceeded,
)
from .geometry import (
    DiskGeodesic,
    Geodesic,
    Surd,
    cayley,
    cayley_inverse,
    geodesic_of_element,
    geodesic_of_form,
    sample_geodesic,
    to_disk,
)
from .modular_group import (
    GEN_L,
    GEN_L2,
    GEN_S,
    GEN_T,
    IDENTITY,
    GroupElement,
    Word,
    classify_element,
    inverse,
    matrix_to_word,
    multiply,
    word_meet,
    word_to_matrix,
)
from .quadratic_forms import (
    QuadForm,
    act,
    classify_form,
    form_of_element,
    is_gauss_reduced,
    is_lagrange_reduced,
    is_on_spine,
    is_primitive,
)
from .reduction import (
    ReductionPath,
    ReductionStep,
    cark_reduce_path,
    gauss_reduce,
    lagrange_reduce,
    reduce_form,
    rho_step,
)
from .representation import (
    Solution,
    SolveResult,
    automorph,
    apply_automorph,
    enumerate_solutions,
    solve_definite,
    solve_form,
    solve_form_detailed,
)
from .sunburst import (
    SunburstCell,
    SunburstLayout,
    cell_geometry,
    enumerate_cells,
    neighbors,
    path_to_root,
    recenter,
)

__version__ = "0.1.0"
