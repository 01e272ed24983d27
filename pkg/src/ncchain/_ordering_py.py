"""Pure-Python inner loops: exact normal ordering and ground-state pairings.

This module is the fallback twin of the compiled extension ``_ordering_cy``;
both implement the same contract and must produce identical results.

Generators are encoded as integers so that the canonical ordering is plain
integer comparison::

    gid = (kind << 20) | (particle << 8) | axis

with kinds 0..3 the auxiliary pairs (a~, pa~, b~, pb~; particle bits zero)
and kinds 4, 5 the principal positions/momenta.  Auxiliary generators sort
before principal ones, positions before momenta, and within a kind the sort
key is (particle, axis).

A monomial is a tuple of gids.  Coefficients are Gaussian rationals stored
as normalized triples ``(a, b, d)`` meaning ``(a + i*b) / d`` with ``d > 0``
and ``gcd(a, b, d) == 1``.  hbar enters as the pair ``(hnum, hden)``.

The only nonzero commutators are scalar: ``[pa~_i, a~_i] = [pb~_i, b~_i]
= -i`` and ``[p_i^(n), x_i^(n)] = -i*hbar`` (stated for the descending
order in which the ordering loop meets them), so normal ordering of any
product terminates.
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

BACKEND = "python"


def gid(kind, particle, axis):
    return (kind << KIND_SHIFT) | (particle << PART_SHIFT) | axis


def gid_kind(g):
    return g >> KIND_SHIFT


def gid_particle(g):
    return (g >> PART_SHIFT) & 0xFFF


def gid_axis(g):
    return g & 0xFF


def cnorm(a, b, d):
    if a == 0 and b == 0:
        return C_ZERO
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(a, b, d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


def cadd(c1, c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    if d1 == d2:
        return cnorm(a1 + a2, b1 + b2, d1)
    return cnorm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def cmul(c1, c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    return cnorm(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


def cneg(c):
    a, b, d = c
    return (-a, -b, d)


def cconj(c):
    a, b, d = c
    return (a, -b, d)


def _acc(out, mon, coeff):
    old = out.get(mon)
    if old is None:
        out[mon] = coeff
        return
    a, b, d = cadd(old, coeff)
    if a == 0 and b == 0:
        del out[mon]
    else:
        out[mon] = (a, b, d)


def normal_order_into(out, mon, coeff, hnum, hden):
    """Accumulate ``coeff * mon`` into ``out`` in canonical generator order."""
    stack = [(mon, coeff)]
    while stack:
        m, c = stack.pop()
        n = len(m)
        i = 0
        while i + 1 < n and m[i] <= m[i + 1]:
            i += 1
        if i + 1 >= n:
            _acc(out, m, c)
            continue
        g = m[i]
        h = m[i + 1]
        stack.append((m[:i] + (h, g) + m[i + 2 :], c))
        # [g, h] with g > h is -i (auxiliary pair) or -i*hbar (principal pair)
        if g - h == KIND_STEP:
            k = h >> KIND_SHIFT
            if k & 1 == 0:
                if k == KIND_X:
                    cv = cnorm(0, -hnum, hden)
                else:
                    cv = (0, -1, 1)
                stack.append((m[:i] + m[i + 2 :], cmul(c, cv)))


def mul_terms(ta, tb, hnum, hden):
    """Normal-ordered product of two term dicts."""
    out = {}
    for ma, ca in ta.items():
        for mb, cb in tb.items():
            c = cmul(ca, cb)
            if not ma:
                _acc(out, mb, c)
            elif not mb or ma[-1] <= mb[0]:
                _acc(out, ma + mb, c)
            else:
                normal_order_into(out, ma + mb, c, hnum, hden)
    return out


def add_terms(ta, tb):
    out = dict(ta)
    for m, c in tb.items():
        _acc(out, m, c)
    return out


def scale_terms(t, coeff):
    a, b, _ = coeff
    if a == 0 and b == 0:
        return {}
    return {m: cmul(c, coeff) for m, c in t.items()}


def adjoint_terms(t, hnum, hden):
    """Hermitian adjoint: reverse monomials, conjugate coefficients, reorder."""
    out = {}
    for m, c in t.items():
        normal_order_into(out, m[::-1], cconj(c), hnum, hden)
    return out


_WICK_CACHE = {}


def _pair_value(g, h):
    # Ground-state two-point function of two auxiliary generators, in the
    # order they appear: <q q> = <p p> = 1/2, <q p> = i/2, <p q> = -i/2,
    # zero across distinct axes or across the two auxiliary systems.
    if (g ^ h) & ~KIND_STEP:
        return None
    kg = g >> KIND_SHIFT
    kh = h >> KIND_SHIFT
    if kg == kh or kg & 1 == 0:
        return (1, 0, 2) if kg == kh else (0, 1, 2)
    return (0, -1, 2)


def wick_scalar(mon):
    """Ground-state expectation of an auxiliary-only monomial via pairings."""
    cached = _WICK_CACHE.get(mon)
    if cached is not None:
        return cached
    n = len(mon)
    if n == 0:
        val = C_ONE
    elif n & 1:
        val = C_ZERO
    else:
        total = C_ZERO
        g = mon[0]
        rest = mon[1:]
        for j in range(n - 1):
            pv = _pair_value(g, rest[j])
            if pv is None:
                continue
            sub = wick_scalar(rest[:j] + rest[j + 1 :])
            if sub != C_ZERO:
                total = cadd(total, cmul(pv, sub))
        val = total
    _WICK_CACHE[mon] = val
    return val
