"""Exact polynomial algebra in noncommuting canonical generators.

Six generator kinds live side by side: principal positions/momenta
``x_i^(n)``, ``p_i^(n)`` for particles n = 1..N with ``[x_i^(n), p_j^(m)] =
i*hbar*delta_nm*delta_ij``, and two dimensionless auxiliary oscillator pairs
``a~_i, pa~_i`` and ``b~_i, pb~_i`` with ``[a~_i, pa~_j] = [b~_i, pb~_j] =
i*delta_ij``.  Everything else commutes.  Polynomials are kept in a normal
form where each monomial's generators are sorted by (kind, particle, axis),
auxiliary kinds first; coefficients are exact Gaussian rationals.

All values are immutable and all operations pure, so the module is safe to
use from multiple threads.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction

from . import _ordering as ker

__all__ = [
    "Generator",
    "Algebra",
    "OperatorPoly",
    "KIND_NAMES",
    "kernel_backend",
]

# kind codes -> short names used in reprs and constructors
KIND_NAMES = {
    ker.KIND_AUX_A: "a~",
    ker.KIND_AUX_PA: "pa~",
    ker.KIND_AUX_B: "b~",
    ker.KIND_AUX_PB: "pb~",
    ker.KIND_X: "x",
    ker.KIND_P: "p",
}
_NAME_KINDS = {v: k for k, v in KIND_NAMES.items()}
_AUX_KINDS = (ker.KIND_AUX_A, ker.KIND_AUX_PA, ker.KIND_AUX_B, ker.KIND_AUX_PB)


def kernel_backend() -> str:
    """Name of the active ordering backend ("cython" or "python")."""
    return ker.BACKEND


@dataclass(frozen=True, order=True)
class Generator:
    """One canonical generator, ordered by (kind, particle, axis).

    ``particle`` is required for principal kinds ("x", "p") and must be
    absent for the auxiliary kinds ("a~", "pa~", "b~", "pb~").
    """

    sort_key: int

    def __init__(self, kind: str, axis: int, particle: int | None = None):
        if kind not in _NAME_KINDS:
            raise ValueError(f"unknown generator kind {kind!r}")
        if axis not in (1, 2, 3):
            raise ValueError(f"axis must be 1, 2 or 3, got {axis}")
        code = _NAME_KINDS[kind]
        if code in _AUX_KINDS:
            if particle is not None:
                raise ValueError(f"auxiliary generator {kind!r} takes no particle index")
            particle = 0
        else:
            if particle is None:
                raise ValueError(f"principal generator {kind!r} needs a particle index")
            if not 1 <= particle <= 0xFFF:
                raise ValueError(f"particle index out of range: {particle}")
        object.__setattr__(self, "sort_key", ker.gid(code, particle, axis))

    @classmethod
    def from_gid(cls, g: int) -> "Generator":
        kind = KIND_NAMES[ker.gid_kind(g)]
        particle = ker.gid_particle(g) or None
        return cls(kind, ker.gid_axis(g), particle)

    @property
    def kind(self) -> str:
        return KIND_NAMES[ker.gid_kind(self.sort_key)]

    @property
    def axis(self) -> int:
        return ker.gid_axis(self.sort_key)

    @property
    def particle(self) -> int | None:
        return ker.gid_particle(self.sort_key) or None

    @property
    def is_auxiliary(self) -> bool:
        return self.sort_key < ker.PRINCIPAL_MIN

    def __repr__(self):
        return _gid_str(self.sort_key)


def _gid_str(g: int) -> str:
    kind = KIND_NAMES[ker.gid_kind(g)]
    axis = ker.gid_axis(g)
    particle = ker.gid_particle(g)
    if particle:
        return f"{kind}{axis}^({particle})"
    return f"{kind}{axis}"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, float, str)):
        return Fraction(value)
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _as_triple(value) -> tuple:
    """Coerce a scalar to the kernel's (a, b, d) Gaussian-rational triple.

    Floats are converted exactly (every float is a binary rational).
    """
    if isinstance(value, tuple) and len(value) == 3:
        return ker.cnorm(*value)
    if isinstance(value, complex):
        re = Fraction(value.real)
        im = Fraction(value.imag)
        return ker.cnorm(
            re.numerator * im.denominator,
            im.numerator * re.denominator,
            re.denominator * im.denominator,
        )
    re = _as_fraction(value)
    return ker.cnorm(re.numerator, 0, re.denominator)


def _triple_re_im(c) -> tuple[Fraction, Fraction]:
    a, b, d = c
    return Fraction(a, d), Fraction(b, d)


def _coeff_str(c) -> str:
    re, im = _triple_re_im(c)
    if im == 0:
        return str(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{im}i"
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    istr = "i" if mag == 1 else f"{mag}i"
    return f"({re}{sign}{istr})"


@dataclass(frozen=True)
class Algebra:
    """Value object fixing hbar; the factory for polynomials.

    Polynomials from two Algebra instances interoperate iff the instances
    compare equal (same hbar).
    """

    hbar: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "hbar", _as_fraction(self.hbar))
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")

    # -- constructors -------------------------------------------------------
    def poly(self, terms: dict) -> "OperatorPoly":
        """Wrap a raw term dict (already normal ordered) without copying."""
        return OperatorPoly(self, terms)

    def scalar(self, value) -> "OperatorPoly":
        c = _as_triple(value)
        if c[0] == 0 and c[1] == 0:
            return OperatorPoly(self, {})
        return OperatorPoly(self, {(): c})

    @property
    def zero(self) -> "OperatorPoly":
        return OperatorPoly(self, {})

    @property
    def one(self) -> "OperatorPoly":
        return OperatorPoly(self, {(): ker.C_ONE})

    def generator(self, g: Generator) -> "OperatorPoly":
        return OperatorPoly(self, {(g.sort_key,): ker.C_ONE})

    def x(self, particle: int, axis: int) -> "OperatorPoly":
        return self.generator(Generator("x", axis, particle))

    def p(self, particle: int, axis: int) -> "OperatorPoly":
        return self.generator(Generator("p", axis, particle))

    def aux_a(self, axis: int) -> "OperatorPoly":
        return self.generator(Generator("a~", axis))

    def aux_pa(self, axis: int) -> "OperatorPoly":
        return self.generator(Generator("pa~", axis))

    def aux_b(self, axis: int) -> "OperatorPoly":
        return self.generator(Generator("b~", axis))

    def aux_pb(self, axis: int) -> "OperatorPoly":
        return self.generator(Generator("pb~", axis))

    def sum(self, polys) -> "OperatorPoly":
        """Sum many polynomials with in-place accumulation."""
        acc: dict = {}
        for p in polys:
            self._check(p)
            for m, c in p._terms.items():
                old = acc.get(m)
                s = ker.cadd(old, c) if old is not None else c
                if s[0] == 0 and s[1] == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return OperatorPoly(self, acc)

    def _check(self, other: "OperatorPoly"):
        if other.algebra.hbar != self.hbar:
            raise ValueError("mixing polynomials from algebras with different hbar")

    @property
    def _h(self) -> tuple[int, int]:
        return self.hbar.numerator, self.hbar.denominator


class OperatorPoly:
    """Normal-ordered polynomial with exact Gaussian-rational coefficients.

    Supports ``+``, ``-``, and ``*`` (scalar or operator product, dispatched
    on the operand type).  Instances are immutable; every operation returns
    a new polynomial in normal form.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: Algebra, terms: dict):
        self.algebra = algebra
        self._terms = terms

    # -- inspection ----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def terms(self):
        """Iterate (generators, (re, im)) with exact Fraction parts."""
        for m in sorted(self._terms):
            yield (
                tuple(Generator.from_gid(g) for g in m),
                _triple_re_im(self._terms[m]),
            )

    def coefficient(self, *gens: Generator) -> tuple[Fraction, Fraction]:
        """Exact (re, im) coefficient of the given ordered monomial."""
        m = tuple(g.sort_key for g in gens)
        return _triple_re_im(self._terms.get(m, ker.C_ZERO))

    def constant_term(self) -> tuple[Fraction, Fraction]:
        return _triple_re_im(self._terms.get((), ker.C_ZERO))

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def aux_degree(self) -> int:
        deg = 0
        for m in self._terms:
            deg = max(deg, sum(1 for g in m if g < ker.PRINCIPAL_MIN))
        return deg

    @property
    def is_hermitian(self) -> bool:
        return self == self.adjoint()

    # -- algebra -------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return OperatorPoly(self.algebra, ker.add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return OperatorPoly(self.algebra, ker.scale_terms(self._terms, (-1, 0, 1)))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, OperatorPoly):
            self.algebra._check(other)
            hn, hd = self.algebra._h
            return OperatorPoly(
                self.algebra, ker.mul_terms(self._terms, other._terms, hn, hd)
            )
        try:
            c = _as_triple(other)
        except TypeError:
            return NotImplemented
        return OperatorPoly(self.algebra, ker.scale_terms(self._terms, c))

    def __rmul__(self, other):
        # scalars commute with everything, so scalar * poly == poly * scalar
        if isinstance(other, OperatorPoly):
            return NotImplemented
        return self.__mul__(other)

    def __truediv__(self, other):
        return self * (1 / _as_fraction(other))

    def commutator(self, other: "OperatorPoly") -> "OperatorPoly":
        return self * other - other * self

    def adjoint(self) -> "OperatorPoly":
        hn, hd = self.algebra._h
        return OperatorPoly(self.algebra, ker.adjoint_terms(self._terms, hn, hd))

    # -- comparison ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, OperatorPoly):
            self.algebra._check(other)
            return other
        try:
            return self.algebra.scalar(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if isinstance(other, OperatorPoly):
            return (
                self.algebra.hbar == other.algebra.hbar
                and self._terms == other._terms
            )
        if isinstance(other, (int, Fraction, float, complex)):
            return self._terms == self.algebra.scalar(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra.hbar, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms, key=lambda m: (len(m), m)):
            c = self._terms[m]
            body = "·".join(_gid_str(g) for g in m)
            cs = _coeff_str(c)
            if not body:
                parts.append(cs)
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append(f"-{body}")
            else:
                parts.append(f"{cs}·{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out
