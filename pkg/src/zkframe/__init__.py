"""Classification of self-dual codes over Z_k via lattice frames.

The pipeline: enumerate the k-frames of a unimodular lattice, project
each frame to a self-dual Z_k-code, and deduplicate the projections up
to monomial equivalence.  Supported lattice classes are Z^n (lengths 1
to 9), the even lattice of rank 8, and its sum with Z (rank 9).

Hot loops live in a compiled extension when it is available; a pure
Python twin with the same contracts is selected automatically otherwise
(see zkframe.kernels.BACKEND, and ZKFRAME_PURE_PY=1 to force the pure
path).
"""
from .classify import (
    ClassificationResult,
    classify,
    classify_length,
    cross_check,
    length8_type_split,
    monitor_type_conjecture,
    oracle_classify,
    run_cells,
    table_n4,
)
from .codes import (
    BudgetExceededError,
    CodeType,
    ZkCode,
    allowed_length,
    brute_force_classify,
    cardinality,
    code_from_rows,
    code_type,
    codewords,
    dual,
    euclidean_weight,
    is_self_dual,
    symmetrized_weight_enumerator,
)
from .equivalence import (
    MonomialMap,
    all_monomial_maps,
    apply,
    are_equivalent,
    canonical_form,
    dedupe,
)
from .frames import (
    Frame,
    FrameError,
    covering_frames,
    enumerate_frames,
    frame_f9,
    make_frame,
    n_condition,
    od_frame_M,
    od_frame_N,
    od_matrix_m,
    od_matrix_n,
    project_frame,
    sign_normalize,
)
from .kernels import BACKEND
from .lattices import (
    E8,
    E8Z,
    ZN,
    LatticeClass,
    ScaledLattice,
    construction_a,
    gram,
    identify_class,
    is_even,
    is_unimodular,
    lattice_classes_for_length,
    short_vectors,
    standard_lattice,
)
from .ring_linalg import (
    K_MAX,
    ZkMatrix,
    howell_form,
    kernel_mod_k,
    mat_mul_mod_k,
    row_span_cardinality,
    zk_matrix,
)
from .zkdb import FormatError, check_db, export_db, export_json, parse_db, read_db, render_db

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceededError",
    "ClassificationResult",
    "CodeType",
    "E8",
    "E8Z",
    "FormatError",
    "Frame",
    "FrameError",
    "K_MAX",
    "LatticeClass",
    "MonomialMap",
    "ScaledLattice",
    "ZN",
    "ZkCode",
    "ZkMatrix",
    "all_monomial_maps",
    "allowed_length",
    "apply",
    "are_equivalent",
    "brute_force_classify",
    "canonical_form",
    "cardinality",
    "check_db",
    "classify",
    "classify_length",
    "code_from_rows",
    "code_type",
    "codewords",
    "construction_a",
    "covering_frames",
    "cross_check",
    "dedupe",
    "dual",
    "enumerate_frames",
    "euclidean_weight",
    "export_db",
    "export_json",
    "frame_f9",
    "gram",
    "howell_form",
    "identify_class",
    "is_even",
    "is_self_dual",
    "is_unimodular",
    "kernel_mod_k",
    "lattice_classes_for_length",
    "length8_type_split",
    "make_frame",
    "mat_mul_mod_k",
    "monitor_type_conjecture",
    "n_condition",
    "od_frame_M",
    "od_frame_N",
    "od_matrix_m",
    "od_matrix_n",
    "oracle_classify",
    "parse_db",
    "project_frame",
    "read_db",
    "render_db",
    "row_span_cardinality",
    "run_cells",
    "short_vectors",
    "sign_normalize",
    "standard_lattice",
    "symmetrized_weight_enumerator",
    "table_n4",
    "zk_matrix",
]
