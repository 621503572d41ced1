"""Functional-identity verification on truncated series.

Each map model's generating series (built from the recurrence tables)
supports a family of auxiliary series F[lam], indexed by a derivative
multi-index lam = [ell, 3^n3, 2^n2, 1^n1]: these are root-face-marking
derivatives of the underlying multi-variable generating function, after
all face variables are specialized.  A loop-equation recursion expresses
each F[lam] through strictly smaller indices, with the model's series as
the base case, so every F[lam] is computable on a truncated window with
no symbolic machinery.

From the F[lam] we assemble three quadratic combinations KP1, KP2, KP3
per model and evaluate the functional identities the enumeration theory
promises: a shifted identity (charge moved by +-2), one unshifted ODE
per model, two linear one-face ODEs, and a shift-free identity that also
involves derivative-expanded combinations.  Every check returns a
residual series; correctness means every retained coefficient is the
exact rational zero (tolerance is not a concept here).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .bipartite import BipOneFaceTable, BipTable, bip_oneface_series, eta_series
from .errors import WindowError
from .maps import MapsTable, OneFaceTable, oneface_series, theta_series
from .poly import ONE, Poly, U, V, Z
from .triangulations import TriTable, xi_series
from .tseries import TSeries

_UZ = U * Z
_UV = U * V


@dataclass(frozen=True)
class LambdaIndex:
    """Canonical derivative multi-index [ell, 3^n3, 2^n2, 1^n1].

    ell is the (single) largest part, 0 for the empty index; at most one
    part may exceed 3, which is exactly the range the recursion reaches.
    """

    ell: int = 0
    n3: int = 0
    n2: int = 0
    n1: int = 0

    def __post_init__(self):
        if min(self.ell, self.n3, self.n2, self.n1) < 0:
            raise ValueError("negative multi-index component")

    @property
    def size(self) -> int:
        return self.ell + 3 * self.n3 + 2 * self.n2 + self.n1

    def parts(self) -> tuple[int, ...]:
        return _canon(
            ([self.ell] if self.ell else [])
            + [3] * self.n3 + [2] * self.n2 + [1] * self.n1
        )

    @classmethod
    def from_parts(cls, parts) -> "LambdaIndex":
        parts = _canon(parts)
        if not parts:
            return cls()
        rest = parts[1:]
        if rest and rest[0] > 3:
            raise ValueError(f"more than one part above 3 in {parts}")
        return cls(
            ell=parts[0],
            n3=rest.count(3),
            n2=rest.count(2),
            n1=rest.count(1),
        )


def _canon(parts) -> tuple[int, ...]:
    return tuple(sorted((p for p in parts if p), reverse=True))


@dataclass
class SeriesContext:
    """One model's series plus the memo of computed F[lam]."""

    model: str                     # "maps" | "bipartite" | "triangulations"
    theta: TSeries
    memo: dict = field(default_factory=dict)

    def clear_memo(self):
        self.memo.clear()


def maps_context(order: int, table: MapsTable | None = None) -> SeriesContext:
    table = table or MapsTable("cc").fill(order // 2)
    return SeriesContext("maps", theta_series(table, order))

def bipartite_context(order: int, table: BipTable | None = None) -> SeriesContext:
    table = table or BipTable().fill(order)
    return SeriesContext("bipartite", eta_series(table, order))

def triangulations_context(order: int, table: TriTable | None = None) -> SeriesContext:
    table = table or TriTable().fill(order // 6)
    return SeriesContext("triangulations", xi_series(table, order))


# ---------------------------------------------------------------------------
# the F[lam] recursions


def ftheta(ctx: SeriesContext, lam) -> TSeries:
    """The truncated series F[lam], by structural recursion on the size."""
    parts = lam.parts() if isinstance(lam, LambdaIndex) else _canon(lam)
    return _F(ctx, parts)


def _F(ctx: SeriesContext, parts: tuple[int, ...]) -> TSeries:
    if not parts:
        return ctx.theta
    hit = ctx.memo.get(parts)
    if hit is None:
        if ctx.model == "maps":
            hit = _f_maps(ctx, parts)
        elif ctx.model == "bipartite":
            hit = _f_bip(ctx, parts)
        else:
            hit = _f_tri(ctx, parts)
        ctx.memo[parts] = hit
    return hit


def _rest_counts(parts):
    rest = parts[1:]
    if rest and rest[0] > 3:
        raise ValueError(f"two parts above 3 in {parts}")
    return rest.count(3), rest.count(2), rest.count(1)


def _split_products(ctx, i, n3, n2, n1):
    """Quadratic terms: sum over a+b=i and binomial splits of the small parts."""
    terms = []
    for a in range(1, i):
        b = i - a
        for l3 in range(n3 + 1):
            for l2 in range(n2 + 1):
                for l1 in range(n1 + 1):
                    c = 2 * a * b * comb(n3, l3) * comb(n2, l2) * comb(n1, l1)
                    left = _F(ctx, _canon((a,) + (3,) * l3 + (2,) * l2 + (1,) * l1))
                    right = _F(ctx, _canon(
                        (b,) + (3,) * (n3 - l3) + (2,) * (n2 - l2) + (1,) * (n1 - l1)
                    ))
                    terms.append((left * right).scale(c))
    return terms


def _f_maps(ctx, parts):
    ell = parts[0]
    if ell > 9:
        raise ValueError(f"leading part {ell} out of reachable range")
    n3, n2, n1 = _rest_counts(parts)
    rest = parts[1:]
    i = ell - 2
    acc = list(_split_products(ctx, i, n3, n2, n1))
    for a in range(1, i):
        acc.append(_F(ctx, _canon((a, i - a) + rest)).scale(2 * a * (i - a)))
    for j, nj in ((1, n1), (2, n2), (3, n3)):
        if nj and i + j > 0:
            sub = list(rest)
            sub.remove(j)
            acc.append(_F(ctx, _canon([i + j] + sub)).scale(nj * (i + j)))
    base = _F(ctx, rest)
    acc.append(base.t_dt())
    size_rest = n1 + 2 * n2 + 3 * n3
    if size_rest:
        acc.append(base.scale(-size_rest))
    for a in range(1, i + 1):
        acc.append(_F(ctx, _canon((a,) + rest)).scale(Z).scale(-a))
    if i >= 1:
        acc.append(_F(ctx, _canon((i,) + rest)).scale((2 * U + (i + 1) * ONE).scale(i)))
    if n2 == 0 and n3 == 0:
        if i == -1:
            if n1 == 1:
                acc.append(TSeries.const(U.scale(Fraction(1, 2))))
            elif n1 == 0:
                acc.append(TSeries.const(_UZ.scale(Fraction(1, 2))))
        elif i == 0 and n1 == 0:
            acc.append(TSeries.const((U * (U + ONE)).scale(Fraction(1, 2))))
    return _series_sum(acc).shift_t(2).scale(Fraction(1, ell))


def _f_bip(ctx, parts):
    ell = parts[0]
    if ell > 9:
        raise ValueError(f"leading part {ell} out of reachable range")
    n3, n2, n1 = _rest_counts(parts)
    rest = parts[1:]
    i = ell - 1
    acc = list(_split_products(ctx, i, n3, n2, n1))
    for a in range(1, i):
        acc.append(_F(ctx, _canon((a, i - a) + rest)).scale(2 * a * (i - a)))
    for j, nj in ((1, n1), (2, n2), (3, n3)):
        if nj and i + j > 0:
            sub = list(rest)
            sub.remove(j)
            acc.append(_F(ctx, _canon([i + j] + sub)).scale(nj * (i + j)))
    base = _F(ctx, rest)
    acc.append(base.t_dt())
    size_rest = n1 + 2 * n2 + 3 * n3
    if size_rest:
        acc.append(base.scale(-size_rest))
    for a in range(1, i + 1):
        acc.append(_F(ctx, _canon((a,) + rest)).scale(Z).scale(-a))
    if i >= 1:
        acc.append(_F(ctx, _canon((i,) + rest)).scale((U + V + i * ONE).scale(i)))
    if i == 0 and not rest:
        acc.append(TSeries.const(_UV.scale(Fraction(1, 2))))
    return _series_sum(acc).shift_t(1).scale(Fraction(1, ell))


def _f_tri(ctx, parts):
    if 3 in parts:
        sub = list(parts)
        sub.remove(3)
        mu = _canon(sub)
        base = _F(ctx, mu)
        combo = base.t_dt() - base.scale(sum(mu))
        return combo.div_z().scale(Fraction(1, 3))
    if all(p == 1 for p in parts):
        l = len(parts)
        acc = [_F(ctx, parts[1:]).dt().shift_t(5).scale(Z)]
        if l == 1:
            acc.append(TSeries.exact({4: (U * U + U).scale(Fraction(1, 2)) * Z}))
        elif l == 2:
            acc.append(TSeries.exact({2: U.scale(Fraction(1, 2))}))
        return _series_sum(acc)
    ell = parts[0]
    if ell > 10:
        raise ValueError(f"leading part {ell} out of reachable range")
    n3, n2, n1 = _rest_counts(parts)
    if n3:
        raise AssertionError("unreachable: parts of size 3 eliminated above")
    rest = parts[1:]
    i = ell - 3
    inner = list(_split_products(ctx, i, 0, n2, n1))
    for a in range(1, i):
        inner.append(_F(ctx, _canon((a, i - a) + rest)).scale(2 * a * (i - a)))
    for j, nj in ((1, n1), (2, n2)):
        if nj and i + j > 0:
            sub = list(rest)
            sub.remove(j)
            inner.append(_F(ctx, _canon([i + j] + sub)).scale(nj * (i + j)))
    if i >= 1:
        inner.append(_F(ctx, _canon((i,) + rest)).scale((2 * U + (i + 1) * ONE).scale(i)))
    if n2 == 0:
        if i == -1 and n1 == 1:
            inner.append(TSeries.const(U.scale(Fraction(1, 2))))
        elif i == 0 and n1 == 0:
            inner.append(TSeries.const((U * (U + ONE)).scale(Fraction(1, 2))))
    rhs = _F(ctx, _canon((i + 2,) + rest)).scale(i + 2) - _series_sum(inner).shift_t(2)
    return rhs.div_z().shift_t(-2).scale(Fraction(1, ell))


def _series_sum(terms) -> TSeries:
    acc = TSeries.zero()
    for t in terms:
        acc = acc + t
    return acc


# ---------------------------------------------------------------------------
# KP combinations (common shape across the three models)


def kp_combinations(ctx: SeriesContext) -> tuple[TSeries, TSeries, TSeries]:
    key = "__kp__"
    if key not in ctx.memo:
        F = lambda *parts: _F(ctx, _canon(parts))
        f11 = F(1, 1)
        kp1 = _series_sum([
            F(3, 1).scale(-4),
            F(2, 2).scale(4),
            (f11 * f11).scale(8),
            F(1, 1, 1, 1).scale(Fraction(4, 3)),
        ])
        kp2 = _series_sum([
            F(4, 1).scale(-4),
            F(3, 2).scale(4),
            (F(2, 1) * f11).scale(16),
            F(2, 1, 1, 1).scale(Fraction(8, 3)),
        ])
        kp3 = _series_sum([
            F(5, 1).scale(-6),
            F(4, 2).scale(4),
            F(3, 3).scale(2),
            (F(3, 1) * f11).scale(16),
            F(3, 1, 1, 1).scale(Fraction(8, 3)),
            (F(2, 1) * F(2, 1)).scale(16),
            (F(2, 2) * f11).scale(8),
            F(2, 2, 1, 1).scale(4),
            (f11 * f11 * f11).scale(Fraction(16, 3)),
            (F(1, 1, 1, 1) * f11).scale(Fraction(8, 3)),
            F(1, 1, 1, 1, 1, 1).scale(Fraction(4, 45)),
        ])
        ctx.memo[key] = (kp1, kp2, kp3)
    return ctx.memo[key]


# ---------------------------------------------------------------------------
# identity residuals


def verify_shifted_bkp1(ctx: SeriesContext) -> TSeries:
    """Shifted first identity for the maps model: the charge-moved second
    difference of the series times KP1 equals (d/dt - 4/t) KP1."""
    if ctx.model != "maps":
        raise ValueError("the shifted identity is implemented for the maps model")
    theta = ctx.theta
    kp1, _, _ = kp_combinations(ctx)
    nabla2 = theta.shift_u(2) + theta.shift_u(-2) - theta.scale(2)
    lhs = nabla2.dt() * kp1
    rhs = kp1.dt() - kp1.shift_t(-1).scale(4)
    return lhs - rhs


def verify_ode(model: str, ctx: SeriesContext) -> TSeries:
    """Unshifted ODE residual for the given model."""
    if ctx.model != model:
        raise ValueError(f"context is for {ctx.model!r}, not {model!r}")
    kp1, kp2, kp3 = kp_combinations(ctx)
    d1 = kp1.dt()
    d2 = d1.dt()
    theta = ctx.theta
    if model == "maps":
        cof = _series_sum([
            theta.dt().dt().shift_t(6).scale(2),
            theta.dt().shift_t(5).scale(4),
            TSeries.exact({4: _UZ - 4 * ONE, 2: 3 * U + ONE - Z}),
        ])
        inner = kp3 - kp2.scale(Fraction(1, 2)) - (
            d2.shift_t(6) + d1.shift_t(5).scale(2) + kp1 * cof
        )
        return (d1 * d1).shift_t(6) - kp2 * kp2 + kp1 * inner
    if model == "bipartite":
        cof = _series_sum([
            theta.dt().dt().shift_t(4).scale(2),
            theta.dt().shift_t(3).scale(8),
            TSeries.exact({2: 3 * _UV, 1: -(U + V)}),
        ])
        half_fac = TSeries.exact({1: U + V + ONE - Z, 0: ONE}).scale(Fraction(1, 2))
        inner = kp3 - kp2 * half_fac - (
            d2.shift_t(4) + d1.shift_t(3).scale(4) + kp1 * cof
        )
        return (d1 * d1).shift_t(4) - kp2 * kp2 + kp1 * inner
    if model == "triangulations":
        zz = Z * Z
        cof = _series_sum([
            theta.dt().dt().shift_t(10).scale(2 * zz),
            theta.dt().shift_t(9).scale(10 * zz),
            TSeries.exact({8: (4 * (U * U + U)) * zz, 2: U}),
        ])
        inner = kp3 - kp2.div_z().shift_t(-2).scale(Fraction(1, 2)) - (
            d2.shift_t(10).scale(zz) + d1.shift_t(9).scale(5 * zz) + kp1 * cof
        )
        return (d1 * d1).shift_t(10).scale(zz) - kp2 * kp2 + kp1 * inner
    raise ValueError(f"unknown model {model!r}")


def verify_oneface_maps_ode(series: TSeries) -> TSeries:
    """Linear ODE residual for the one-face map series (variables t, u)."""
    d = [series]
    for _ in range(6):
        d.append(d[-1].dt())
    u2 = U * U
    c1 = TSeries.exact({
        4: (u2 - U - 5 * ONE).scale(32), 6: (2 * U - ONE).scale(240),
        2: 10 * ONE - 20 * U, 8: Poly.const(2880), 0: Poly.const(3),
    })
    c2 = TSeries.exact({
        5: (8 * u2 - 8 * U - 109 * ONE).scale(2), 7: (2 * U - ONE).scale(360),
        3: 4 * ONE - 8 * U, 9: Poly.const(7200), 1: ONE,
    })
    c3 = TSeries.exact({
        8: (2 * U - ONE).scale(120), 10: Poly.const(4800), 6: Poly.const(-66),
    })
    c4 = TSeries.exact({
        7: Poly.const(-5), 9: (2 * U - ONE).scale(10), 11: Poly.const(1200),
    })
    inhom = TSeries.exact({
        7: 240 * U, 5: (2 * u2 - U).scale(30),
        3: (4 * U * u2 - 4 * u2 - 11 * U).scale(2), 1: (u2 + U).scale(-2),
    })
    return _series_sum([
        c1 * d[1], c2 * d[2], c3 * d[3], c4 * d[4],
        d[5].shift_t(12).scale(120), d[6].shift_t(13).scale(4),
        inhom,
    ])


def verify_oneface_bipartite_ode(series: TSeries) -> TSeries:
    """Linear ODE residual for the one-face bipartite series (t, u, v)."""
    d = [series]
    for _ in range(6):
        d.append(d[-1].dt())
    u2, v2 = U * U, V * V
    dmv = U - V
    dmv2 = dmv * dmv
    s3 = 3 * u2 + 3 * v2 + 2 * _UV
    # the t^3 cofactor's inner constant must be 9: the quoted form with 7
    # fails the residual from t^3 on, while 9 makes it vanish identically
    # through every checked order on the slice-validated table
    c1 = TSeries.exact({
        0: Poly.const(2),
        1: (ONE - U - V).scale(7),
        2: s3.scale(3) - (U + V).scale(12) - 29 * ONE,
        3: (-(U * u2) + u2 * V + U * v2 - V * v2 + dmv2 + (U + V - ONE).scale(9)).scale(5),
        4: dmv2 * dmv2 - dmv2.scale(18) + 81 * ONE,
    })
    c2 = TSeries.exact({
        1: ONE,
        2: (ONE - U - V).scale(4),
        3: s3.scale(2) - (U + V).scale(8) - 86 * ONE,
        4: (U * u2 - u2 * V - U * v2 + V * v2 - dmv2 - (U + V - ONE).scale(37)).scale(-4),
        5: dmv2 * dmv2 - dmv2.scale(64) + 719 * ONE,
    })
    c3 = TSeries.exact({
        4: Poly.const(-44),
        5: (U + V - ONE).scale(82),
        6: dmv2.scale(-38) + 1078 * ONE,
    })
    c4 = TSeries.exact({
        5: Poly.const(-5),
        6: (U + V - ONE).scale(10),
        7: dmv2.scale(-5) + 493 * ONE,
    })
    inhom = TSeries.exact({
        0: -_UV,
        1: _UV * (2 * U + 2 * V - 5 * ONE),
        2: -(_UV * (dmv2 - ONE)),
    })
    return _series_sum([
        c1 * d[1], c2 * d[2], c3 * d[3], c4 * d[4],
        d[5].shift_t(8).scale(80), d[6].shift_t(9).scale(4),
        inhom,
    ])


# ---------------------------------------------------------------------------
# shift-free identity with derivative-expanded combinations (maps model)

_Mono = tuple[tuple[int, ...], ...]
_FPoly = dict[_Mono, Fraction]


def _fp(*items) -> _FPoly:
    out: _FPoly = {}
    for coef, *mus in items:
        key = tuple(sorted(tuple(sorted(m, reverse=True)) for m in mus))
        out[key] = out.get(key, Fraction(0)) + Fraction(coef)
    return {k: v for k, v in out.items() if v}


KP1_FORMAL = _fp(
    (-1, (3, 1)), (1, (2, 2)),
    (Fraction(1, 2), (1, 1), (1, 1)), (Fraction(1, 12), (1, 1, 1, 1)),
)
KP2_FORMAL = _fp(
    (-2, (4, 1)), (2, (3, 2)),
    (2, (2, 1), (1, 1)), (Fraction(1, 3), (2, 1, 1, 1)),
)
KP3_FORMAL = _fp(
    (-6, (5, 1)), (4, (4, 2)), (2, (3, 3)),
    (4, (3, 1), (1, 1)), (Fraction(2, 3), (3, 1, 1, 1)),
    (4, (2, 1), (2, 1)), (2, (2, 2), (1, 1)), (1, (2, 2, 1, 1)),
    (Fraction(1, 3), (1, 1), (1, 1), (1, 1)),
    (Fraction(1, 6), (1, 1, 1, 1), (1, 1)),
    (Fraction(1, 180), (1, 1, 1, 1, 1, 1)),
)


def formal_dp(fp: _FPoly, k: int) -> _FPoly:
    """Derivative with respect to the k-th face variable, by product rule."""
    out: _FPoly = {}
    for mono, coef in fp.items():
        for pos in range(len(mono)):
            new = list(mono)
            new[pos] = tuple(sorted(mono[pos] + (k,), reverse=True))
            key = tuple(sorted(new))
            out[key] = out.get(key, Fraction(0)) + coef
    return {k_: v for k_, v in out.items() if v}


def formal_eval(ctx: SeriesContext, fp: _FPoly) -> TSeries:
    """Specialize a formal combination: products of F[mu] series.

    The underlying tau function carries doubled time variables, so each
    factor F[mu] picks up 2^(number of parts of mu) when expressed through
    the face-specialized series.
    """
    acc = TSeries.zero()
    for mono, coef in fp.items():
        term = TSeries.const(1)
        weight = 1
        for mu in mono:
            term = term * _F(ctx, mu)
            weight <<= len(mu)
        acc = acc + term.scale(coef * weight)
    return acc


def verify_fixed_charge(ctx: SeriesContext) -> TSeries:
    """Shift-free identity on the plain (unrescaled) combinations."""
    if ctx.model != "maps":
        raise ValueError("the shift-free identity check runs on the maps model")
    ev = lambda fp: formal_eval(ctx, fp)
    k1, k2, k3 = ev(KP1_FORMAL), ev(KP2_FORMAL), ev(KP3_FORMAL)
    k3_1 = ev(formal_dp(KP3_FORMAL, 1))
    k2_2 = ev(formal_dp(KP2_FORMAL, 2))
    k2_1 = ev(formal_dp(KP2_FORMAL, 1))
    kp1_1f = formal_dp(KP1_FORMAL, 1)
    k1_1 = ev(kp1_1f)
    k1_2 = ev(formal_dp(KP1_FORMAL, 2))
    kp1_11f = formal_dp(kp1_1f, 1)
    k1_11 = ev(kp1_11f)
    k1_111 = ev(formal_dp(kp1_11f, 1))
    f111 = _F(ctx, (1, 1, 1)).scale(8)  # same doubled-time weight 2^3
    lhs = (f111 * k1 * k1 * k1).scale(2)
    rhs = _series_sum([
        (k3_1 - k2_2.scale(2)) * k1 * k1,
        -((k3 - k1_11.scale(3)) * k1 * k1_1),
        ((k1_2 - k2_1) * k1 * k2).scale(2),
        (k2 * k2 * k1_1).scale(2),
        (k1_1 * k1_1 * k1_1).scale(-2),
        -(k1 * k1 * k1_111),
    ])
    return lhs - rhs


# ---------------------------------------------------------------------------
# named checks with machine-readable reports


@dataclass
class VerifyReport:
    identity: str
    model: str
    requested_order: int
    window: tuple[int, int]
    status: str                        # "pass" | "fail"
    first_failure: dict | None = None  # {"order": ..., "coefficient": ...}

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "model": self.model,
            "requested_order": self.requested_order,
            "window": list(self.window),
            "status": self.status,
            "first_failure": self.first_failure,
        }


def _residual_shifted(order, tables):
    ctx = maps_context(order, tables.get("maps"))
    return verify_shifted_bkp1(ctx)

def _residual_ode_maps(order, tables):
    return verify_ode("maps", maps_context(order, tables.get("maps")))

def _residual_ode_bip(order, tables):
    return verify_ode("bipartite", bipartite_context(order, tables.get("bipartite")))

def _residual_ode_tri(order, tables):
    return verify_ode("triangulations", triangulations_context(order, tables.get("triangulations")))

def _residual_fixed(order, tables):
    return verify_fixed_charge(maps_context(order, tables.get("maps")))

def _residual_of_maps(order, tables):
    table = tables.get("oneface") or OneFaceTable().fill((order + 2) // 2)
    return verify_oneface_maps_ode(oneface_series(table, order + 2))

def _residual_of_bip(order, tables):
    table = tables.get("bip-oneface") or BipOneFaceTable().fill(order + 2)
    return verify_oneface_bipartite_ode(bip_oneface_series(table, order + 2))


IDENTITIES = {
    # name: (model, default order, residual builder)
    "shifted-bkp1": ("maps", 20, _residual_shifted),
    "ode-maps": ("maps", 16, _residual_ode_maps),
    "ode-bipartite": ("bipartite", 12, _residual_ode_bip),
    "ode-triangulations": ("triangulations", 18, _residual_ode_tri),
    "ode-oneface-maps": ("oneface", 14, _residual_of_maps),
    "ode-oneface-bipartite": ("bip-oneface", 10, _residual_of_bip),
    "fixed-charge": ("maps", 12, _residual_fixed),
}


def run_identity(name: str, order: int | None = None, tables: dict | None = None) -> VerifyReport:
    """Evaluate one named identity's residual and wrap it in a report.

    Pass criteria: the residual's validity window reaches the requested
    order and every retained coefficient is the exact rational zero.
    """
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; know {sorted(IDENTITIES)}")
    model, default_order, builder = IDENTITIES[name]
    order = default_order if order is None else order
    if order < 1:
        raise WindowError(f"order {order} leaves no window to check")
    residual = builder(order, tables or {})
    residual.require_order(order)
    failure = residual.first_nonzero()
    return VerifyReport(
        identity=name,
        model=model,
        requested_order=order,
        window=(residual.min_order, residual.max_order),
        status="pass" if failure is None else "fail",
        first_failure=None if failure is None else
            {"order": failure[0], "coefficient": str(failure[1])},
    )


def verify_oneface_odes(order_maps: int = 14, order_bip: int = 10,
                        tables: dict | None = None) -> tuple[TSeries, TSeries]:
    """Both one-face ODE residuals, built to cover the requested orders."""
    tables = tables or {}
    res_maps = _residual_of_maps(order_maps, tables).require_order(order_maps)
    res_bip = _residual_of_bip(order_bip, tables).require_order(order_bip)
    return res_maps, res_bip
