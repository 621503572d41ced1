"""Sparse exact polynomials in the variables (u, z, v).

Coefficients are rationals, stored as integer numerators over a single
positive denominator per polynomial.  Integer polynomials (the common
case: every final count table is integral) therefore multiply in pure
int arithmetic.  Exponent triples are packed into one int so that
monomial multiplication is a single addition.

Instances are immutable values; every operation allocates a fresh
polynomial, which makes sharing across threads safe.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from .errors import NonDivisibleError

_SHIFT = 21
_MASK = (1 << _SHIFT) - 1


def _pack(eu: int, ez: int, ev: int) -> int:
    return (eu << (2 * _SHIFT)) | (ez << _SHIFT) | ev


def _unpack(key: int) -> tuple[int, int, int]:
    return key >> (2 * _SHIFT), (key >> _SHIFT) & _MASK, key & _MASK


def _grlex_key(exps: tuple[int, int, int]):
    # graded lexicographic on (e_u, e_z, e_v), largest first when printing
    return (sum(exps), exps)


class Poly:
    __slots__ = ("terms", "den")

    def __init__(self, terms: dict[int, int] | None = None, den: int = 1):
        # Internal constructor: packed-exponent keys, integer numerators.
        if den == 0:
            raise ZeroDivisionError("polynomial denominator is zero")
        if den < 0:
            den = -den
            terms = {k: -c for k, c in terms.items()} if terms else None
        if terms:
            terms = {k: c for k, c in terms.items() if c}
        if not terms:
            terms, den = {}, 1
        elif den != 1:
            g = den
            for c in terms.values():
                g = gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                den //= g
                terms = {k: c // g for k, c in terms.items()}
        self.terms = terms
        self.den = den

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return _ZERO

    @classmethod
    def const(cls, value) -> "Poly":
        f = Fraction(value)
        return cls({_pack(0, 0, 0): f.numerator}, f.denominator)

    @classmethod
    def from_terms(cls, mapping) -> "Poly":
        """Build from {(e_u, e_z, e_v): rational}."""
        den = 1
        fracs = {}
        for exps, c in mapping.items():
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            f = Fraction(c)
            if f:
                fracs[_pack(*exps)] = f
                den = den * f.denominator // gcd(den, f.denominator)
        return cls({k: int(f * den) for k, f in fracs.items()}, den)

    @classmethod
    def sum(cls, polys) -> "Poly":
        """Sum an iterable of polynomials without quadratic re-copying."""
        polys = [p for p in polys if p.terms]
        if not polys:
            return _ZERO
        den = 1
        for p in polys:
            den = den * p.den // gcd(den, p.den)
        acc: dict[int, int] = {}
        for p in polys:
            f = den // p.den
            for k, c in p.terms.items():
                acc[k] = acc.get(k, 0) + c * f
        return cls(acc, den)

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        """Iterate ((e_u, e_z, e_v), Fraction) pairs (unordered)."""
        den = self.den
        for k, c in self.terms.items():
            yield _unpack(k), Fraction(c, den)

    def coeff(self, exps: tuple[int, int, int]) -> Fraction:
        return Fraction(self.terms.get(_pack(*exps), 0), self.den)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(_unpack(k)) for k in self.terms)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(_unpack(k)) == degree for k in self.terms)

    def is_integral(self) -> bool:
        return self.den == 1

    def has_nonnegative_coeffs(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def evaluate(self, u=1, z=1, v=1) -> Fraction:
        u, z, v = Fraction(u), Fraction(z), Fraction(v)
        total = Fraction(0)
        for (eu, ez, ev), c in self.items():
            total += c * u**eu * z**ez * v**ev
        return total

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        if self.den == other.den:
            out = dict(self.terms)
            for k, c in other.terms.items():
                out[k] = out.get(k, 0) + c
            return Poly(out, self.den)
        den = self.den * other.den // gcd(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        out = {k: c * fa for k, c in self.terms.items()}
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c * fb
        return Poly(out, den)

    def __neg__(self):
        return Poly({k: -c for k, c in self.terms.items()}, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.terms or not other.terms:
            return _ZERO
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return Poly(out, self.den * other.den)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value) -> "Poly":
        f = Fraction(value)
        if not f:
            return _ZERO
        return Poly(
            {k: c * f.numerator for k, c in self.terms.items()},
            self.den * f.denominator,
        )

    def __pow__(self, exp: int) -> "Poly":
        if exp < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            exp >>= 1
            if exp:
                base = base * base
        return result

    # -- structural operations ------------------------------------------

    def _shift_var(self, delta: int, field: int) -> "Poly":
        if delta == 0 or not self.terms:
            return self
        out: dict[int, int] = {}
        for k, c in self.terms.items():
            e = (k >> (field * _SHIFT)) & _MASK
            base = k - (e << (field * _SHIFT))
            for i in range(e + 1):
                add = c * comb(e, i) * delta ** (e - i)
                kk = base + (i << (field * _SHIFT))
                out[kk] = out.get(kk, 0) + add
        return Poly(out, self.den)

    def shift_u(self, delta: int) -> "Poly":
        """Substitute u -> u + delta, expanded exactly."""
        return self._shift_var(delta, 2)

    def shift_v(self, delta: int) -> "Poly":
        """Substitute v -> v + delta, expanded exactly."""
        return self._shift_var(delta, 0)

    def div_z(self) -> "Poly":
        """Exact division by z; every monomial must carry a z."""
        out = {}
        step = 1 << _SHIFT
        for k, c in self.terms.items():
            if not (k >> _SHIFT) & _MASK:
                raise NonDivisibleError(f"monomial {_unpack(k)} has no factor z")
            out[k - step] = c
        return Poly(out, self.den)

    # -- comparisons / display -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.den == other.den and self.terms == other.terms

    def __hash__(self):
        return hash((self.den, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.items(), key=lambda t: _grlex_key(t[0]), reverse=True):
            mono = "*".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(("u", "z", "v"), exps)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


_ZERO = Poly()
ZERO = _ZERO
ONE = Poly.const(1)
U = Poly({_pack(1, 0, 0): 1})
Z = Poly({_pack(0, 1, 0): 1})
V = Poly({_pack(0, 0, 1): 1})
