from fractions import Fraction

import pytest

from surfcount.errors import WindowError
from surfcount.identities import (
    LambdaIndex,
    bipartite_context,
    ftheta,
    kp_combinations,
    maps_context,
    run_identity,
    verify_fixed_charge,
    verify_ode,
    verify_shifted_bkp1,
)
from surfcount.maps import MapsTable, OneFaceTable, oneface_series
from surfcount.oracle import marked_face_coefficient
from surfcount.poly import ONE, Poly, U, V, Z
from surfcount.tseries import TSeries


@pytest.fixture(scope="module")
def ctx10(maps_cc_12):
    return maps_context(10, maps_cc_12)


def test_lambda_index_roundtrip():
    lam = LambdaIndex.from_parts((4, 3, 1, 1))
    assert (lam.ell, lam.n3, lam.n2, lam.n1) == (4, 1, 0, 2)
    assert lam.size == 9
    assert lam.parts() == (4, 3, 1, 1)
    assert LambdaIndex().parts() == ()
    with pytest.raises(ValueError):
        LambdaIndex.from_parts((5, 4))


def test_base_case_is_series(ctx10):
    assert ftheta(ctx10, ()) is ctx10.theta
    assert ftheta(ctx10, LambdaIndex()) is ctx10.theta


def test_single_mark_formula(ctx10):
    # marking one degree-1 face: t^2 (t d/dt Theta + uz/2)
    got = ftheta(ctx10, (1,))
    expected = (ctx10.theta.t_dt() + TSeries.const((U * Z).scale(Fraction(1, 2)))).shift_t(2)
    for k in range(0, got.max_order + 1):
        assert got.coeff(k) == expected.coeff(k)


def test_two_marks_low_order(ctx10):
    # the planar loop has two ordered degree-1 face markings: u/2 at t^2
    assert ftheta(ctx10, (1, 1)).coeff(2) == U.scale(Fraction(1, 2))


def test_ftheta_against_flag_oracle(ctx10, oracle3):
    prof = oracle3["profiles"]
    for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (4, 1), (3, 2), (5, 1)]:
        got = {(i, j): c for (i, j, _), c in ftheta(ctx10, lam).coeff(6).items()}
        want = marked_face_coefficient(prof, 3, lam)
        assert got == want, lam


def test_kp1_lowest_order(ctx10):
    kp1, kp2, kp3 = kp_combinations(ctx10)
    assert kp1.coeff(4) == U * U - U
    # the maps series has only even orders, so do the combinations
    for s in (kp1, kp2, kp3):
        assert all(s.coeff(k).is_zero() for k in range(s.min_order, s.max_order + 1) if k % 2)


def test_kp1_bipartite_lowest_order(bip_16):
    ctx = bipartite_context(8, bip_16)
    kp1, _, _ = kp_combinations(ctx)
    assert kp1.coeff(4) == U * V * (U - ONE) * (V - ONE)
    assert kp1.coeff(5) == (U * V * (U - ONE) * (V - ONE) * Z).scale(4)


def test_shifted_residual_zero(ctx10):
    res = verify_shifted_bkp1(ctx10)
    assert res.is_zero()
    assert res.max_order >= 12


def test_memoization_transparent(maps_cc_12):
    ctx = maps_context(8, maps_cc_12)
    first = ftheta(ctx, (3, 1))
    ctx.clear_memo()
    again = ftheta(ctx, (3, 1))
    assert first == again


def test_window_shrink_consistency(maps_cc_12):
    # shrinking the build order never flips a verdict on the shared window
    prev_max = None
    for order in (6, 8, 10, 12):
        res = verify_shifted_bkp1(maps_context(order, maps_cc_12))
        assert res.is_zero()
        if prev_max is not None:
            assert res.max_order >= prev_max
        prev_max = res.max_order
    # and a corrupted table fails at every order wide enough to see it
    broken = MapsTable("cc")
    broken.entries.update(maps_cc_12.entries)
    broken.entries[(3, 0)] = broken.entries[(3, 0)] + Poly.from_terms({(4, 1, 0): 1})
    locations = set()
    for order in (10, 12, 14):
        res = verify_shifted_bkp1(maps_context(order, broken))
        assert not res.is_zero()
        locations.add(res.first_nonzero()[0])
    assert len(locations) == 1  # same first failure regardless of window


def test_mutation_detected_in_shifted_identity(maps_cc_12):
    # +1 on one coefficient of the 3-edge planar polynomial
    broken = MapsTable("cc")
    broken.entries.update(maps_cc_12.entries)
    bad = broken.entries[(3, 0)] + Poly.from_terms({(2, 3, 0): 1})
    broken.entries[(3, 0)] = bad
    ctx = maps_context(10, broken)
    res = verify_shifted_bkp1(ctx)
    assert not res.is_zero()
    order, coeff = res.first_nonzero()
    assert order <= 10


def test_mutation_detected_in_oneface_ode():
    table = OneFaceTable().fill(8)
    table.entries[(3, 2)] += 1   # corrupt one stored value
    res = verify_oneface_maps_ode_series(table)
    assert not res.is_zero()


def verify_oneface_maps_ode_series(table):
    from surfcount.identities import verify_oneface_maps_ode

    return verify_oneface_maps_ode(oneface_series(table, 16))


def test_fixed_charge_uses_same_evaluator(ctx10):
    # the F[1,1,1] factor in the shift-free identity is the ftheta series
    # itself (up to the doubled-time weight), consistent by construction
    from surfcount.identities import formal_eval

    direct = formal_eval(ctx10, {((1, 1, 1),): Fraction(1)})
    assert direct == ftheta(ctx10, (1, 1, 1)).scale(8)


def test_mutation_detected_in_fixed_charge(maps_cc_12):
    broken = MapsTable("cc")
    broken.entries.update(maps_cc_12.entries)
    broken.entries[(2, 1)] = broken.entries[(2, 1)] + Poly.from_terms({(1, 1, 0): 1})
    res = verify_fixed_charge(maps_context(8, broken))
    assert not res.is_zero()


def test_run_identity_reports():
    rep = run_identity("ode-oneface-maps", 8)
    assert rep.status == "pass"
    assert rep.window[1] >= 8
    d = rep.as_dict()
    assert d["identity"] == "ode-oneface-maps" and d["first_failure"] is None
    with pytest.raises(KeyError):
        run_identity("no-such-identity")
    with pytest.raises(WindowError):
        run_identity("ode-oneface-maps", 0)


def test_oneface_pair_entry_point():
    from surfcount.identities import verify_oneface_odes

    res_maps, res_bip = verify_oneface_odes(10, 8)
    assert res_maps.is_zero() and res_bip.is_zero()
    assert res_maps.max_order >= 10 and res_bip.max_order >= 8


def test_all_identities_pass_small_orders(maps_cc_12, bip_16, tri_15):
    tables = {"maps": maps_cc_12, "bipartite": bip_16, "triangulations": tri_15}
    small = {"shifted-bkp1": 10, "ode-maps": 10, "ode-bipartite": 8,
             "ode-triangulations": 12, "ode-oneface-maps": 8,
             "ode-oneface-bipartite": 6, "fixed-charge": 8}
    for name, order in small.items():
        rep = run_identity(name, order, tables)
        assert rep.status == "pass", name
