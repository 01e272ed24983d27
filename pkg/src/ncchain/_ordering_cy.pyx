# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops: exact normal ordering and ground-state pairings.

Twin of ``_ordering_py`` (see that module for the encoding contract).  The
two implementations must return identical values; roles differ only in
speed.  Coefficient numerators/denominators stay arbitrary-precision Python
ints, the win comes from typed loop machinery around them.
"""

from math import gcd

KIND_SHIFT = 20
PART_SHIFT = 8
KIND_STEP = 1 << KIND_SHIFT

KIND_AUX_A = 0
KIND_AUX_PA = 1
KIND_AUX_B = 2
KIND_AUX_PB = 3
KIND_X = 4
KIND_P = 5

PRINCIPAL_MIN = KIND_X << KIND_SHIFT

C_ZERO = (0, 0, 1)
C_ONE = (1, 0, 1)

BACKEND = "cython"

cdef enum:
    _KIND_SHIFT = 20
    _KIND_STEP = 1048576  # 1 << 20
    _KIND_X = 4


def gid(kind, particle, axis):
    return (kind << KIND_SHIFT) | (particle << PART_SHIFT) | axis


def gid_kind(g):
    return g >> KIND_SHIFT


def gid_particle(g):
    return (g >> PART_SHIFT) & 0xFFF


def gid_axis(g):
    return g & 0xFF


cdef tuple _cnorm(object a, object b, object d):
    if a == 0 and b == 0:
        return C_ZERO
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(a, b, d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


cdef tuple _cadd(tuple c1, tuple c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    if d1 == d2:
        return _cnorm(a1 + a2, b1 + b2, d1)
    return _cnorm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


cdef tuple _cmul(tuple c1, tuple c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    return _cnorm(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


def cnorm(a, b, d):
    return _cnorm(a, b, d)


def cadd(c1, c2):
    return _cadd(c1, c2)


def cmul(c1, c2):
    return _cmul(c1, c2)


def cneg(c):
    a, b, d = c
    return (-a, -b, d)


def cconj(c):
    a, b, d = c
    return (a, -b, d)


cdef inline void _acc(dict out, tuple mon, tuple coeff):
    old = out.get(mon)
    if old is None:
        out[mon] = coeff
        return
    cdef tuple s = _cadd(<tuple>old, coeff)
    if s[0] == 0 and s[1] == 0:
        del out[mon]
    else:
        out[mon] = s


cdef void _normal_order_into(dict out, tuple mon, tuple coeff,
                             object hnum, object hden):
    cdef list stack = [(mon, coeff)]
    cdef tuple m, c, cv
    cdef Py_ssize_t i, n
    cdef long g, h, k
    while stack:
        m, c = stack.pop()
        n = len(m)
        i = 0
        while i + 1 < n and <long>m[i] <= <long>m[i + 1]:
            i += 1
        if i + 1 >= n:
            _acc(out, m, c)
            continue
        g = <long>m[i]
        h = <long>m[i + 1]
        stack.append((m[:i] + (h, g) + m[i + 2:], c))
        if g - h == _KIND_STEP:
            k = h >> _KIND_SHIFT
            if k & 1 == 0:
                if k == _KIND_X:
                    cv = _cnorm(0, -hnum, hden)
                else:
                    cv = (0, -1, 1)
                stack.append((m[:i] + m[i + 2:], _cmul(c, cv)))


def normal_order_into(out, mon, coeff, hnum, hden):
    """Accumulate ``coeff * mon`` into ``out`` in canonical generator order."""
    _normal_order_into(out, mon, coeff, hnum, hden)


def mul_terms(dict ta, dict tb, hnum, hden):
    """Normal-ordered product of two term dicts."""
    cdef dict out = {}
    cdef tuple ma, mb, c
    for ma, ca in ta.items():
        for mb, cb in tb.items():
            c = _cmul(<tuple>ca, <tuple>cb)
            if len(ma) == 0:
                _acc(out, mb, c)
            elif len(mb) == 0 or <long>ma[len(ma) - 1] <= <long>mb[0]:
                _acc(out, ma + mb, c)
            else:
                _normal_order_into(out, ma + mb, c, hnum, hden)
    return out


def add_terms(dict ta, dict tb):
    cdef dict out = dict(ta)
    for m, c in tb.items():
        _acc(out, <tuple>m, <tuple>c)
    return out


def scale_terms(dict t, tuple coeff):
    if coeff[0] == 0 and coeff[1] == 0:
        return {}
    cdef dict out = {}
    for m, c in t.items():
        out[m] = _cmul(<tuple>c, coeff)
    return out


def adjoint_terms(dict t, hnum, hden):
    """Hermitian adjoint: reverse monomials, conjugate coefficients, reorder."""
    cdef dict out = {}
    cdef tuple m
    for m, c in t.items():
        a, b, d = c
        _normal_order_into(out, m[::-1], (a, -b, d), hnum, hden)
    return out


cdef dict _WICK_CACHE = {}


cdef tuple _pair_value(long g, long h):
    if (g ^ h) & ~_KIND_STEP:
        return None
    cdef long kg = g >> _KIND_SHIFT
    if kg == (h >> _KIND_SHIFT):
        return (1, 0, 2)
    if kg & 1 == 0:
        return (0, 1, 2)
    return (0, -1, 2)


def wick_scalar(tuple mon):
    """Ground-state expectation of an auxiliary-only monomial via pairings."""
    cached = _WICK_CACHE.get(mon)
    if cached is not None:
        return cached
    cdef Py_ssize_t n = len(mon)
    cdef Py_ssize_t j
    cdef tuple val, rest, pv, sub, total
    cdef long g
    if n == 0:
        val = C_ONE
    elif n & 1:
        val = C_ZERO
    else:
        total = C_ZERO
        g = <long>mon[0]
        rest = mon[1:]
        for j in range(n - 1):
            pv = _pair_value(g, <long>rest[j])
            if pv is None:
                continue
            sub = wick_scalar(rest[:j] + rest[j + 1:])
            if sub is not C_ZERO and not (sub[0] == 0 and sub[1] == 0):
                total = _cadd(total, _cmul(pv, sub))
        val = total
    _WICK_CACHE[mon] = val
    return val
