"""Kernel backend selection.

The hot loops (Howell reduction, orthogonality graphs, clique search,
norm-vector enumeration) exist twice: a compiled Cython extension
`_kernels` and a pure-Python twin `_kernels_py` with identical signatures
and identical outputs.  The compiled backend is preferred when importable;
setting the environment variable ZKFRAME_PURE_PY to a non-empty value forces
the pure twin (used for parity testing and benchmarking).
"""
import os

if os.environ.get("ZKFRAME_PURE_PY"):
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"

howell_core = _impl.howell_core
orth_bitsets = _impl.orth_bitsets
cliques_fixed_size = _impl.cliques_fixed_size
norm_vectors = _impl.norm_vectors
filter_members = _impl.filter_members
