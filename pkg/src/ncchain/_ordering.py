"""Backend selection for the ordering kernels.

The compiled extension is preferred; the pure-Python twin is used when the
extension is unavailable or when ``NCCHAIN_PURE=1`` is set.  Both expose the
same functions and produce identical results (tests assert parity).
"""

import os

if os.environ.get("NCCHAIN_PURE") == "1":
    from . import _ordering_py as _impl
else:
    try:
        from . import _ordering_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _ordering_py as _impl

BACKEND = _impl.BACKEND

KIND_SHIFT = _impl.KIND_SHIFT
PART_SHIFT = _impl.PART_SHIFT
KIND_AUX_A = _impl.KIND_AUX_A
KIND_AUX_PA = _impl.KIND_AUX_PA
KIND_AUX_B = _impl.KIND_AUX_B
KIND_AUX_PB = _impl.KIND_AUX_PB
KIND_X = _impl.KIND_X
KIND_P = _impl.KIND_P
PRINCIPAL_MIN = _impl.PRINCIPAL_MIN
C_ZERO = _impl.C_ZERO
C_ONE = _impl.C_ONE

gid = _impl.gid
gid_kind = _impl.gid_kind
gid_particle = _impl.gid_particle
gid_axis = _impl.gid_axis
cnorm = _impl.cnorm
cadd = _impl.cadd
cmul = _impl.cmul
cneg = _impl.cneg
cconj = _impl.cconj
normal_order_into = _impl.normal_order_into
mul_terms = _impl.mul_terms
add_terms = _impl.add_terms
scale_terms = _impl.scale_terms
adjoint_terms = _impl.adjoint_terms
wick_scalar = _impl.wick_scalar
