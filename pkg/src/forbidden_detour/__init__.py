"""Forbidden detour moves, the affine index polynomial and unknotting bounds
for virtual knots given as Gauss diagrams."""
from .diagram import (
    DuplicateRoleError,
    Endpoint,
    GaussCodeError,
    GaussCodeSyntaxError,
    GaussDiagram,
    LabelCountError,
    Role,
    SignMismatchError,
    all_diagrams,
    canonical_key,
    parse_gauss_code,
    random_diagram,
    serialize,
)
from .laurent import LaurentPoly, divide_by_t_minus_1, format_poly, parse_poly
from .invariants import affine_index_poly, endpoint_sign, index, n_writhes
from .moves import (
    MoveError,
    MoveKind,
    MoveRecord,
    MoveTrace,
    ReplayError,
    apply_f,
    apply_fd,
    apply_r1_insert,
    apply_r1_remove,
    apply_r2_insert,
    apply_r2_remove,
    enumerate_moves,
    replay,
)
from .bounds import (
    BoundsReport,
    StageReport,
    bfs_min_fd,
    bfs_search,
    closed_form_upper,
    lower_bound,
    report,
    summation_upper,
    unknot,
)

__version__ = "0.1.0"
