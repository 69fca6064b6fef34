import random

import pytest

from binbasis.basisgen import (
    alpha_of,
    construct_cantor,
    delta_of,
    enumerate_point,
    random_basis,
)
from binbasis.field import get_field
from binbasis.oracle import (
    basis_poly,
    bound,
    get_oracle,
    oracle_convert,
    oracle_l2x_mixed,
    poly_add,
    poly_compose,
    poly_eval,
    poly_mul,
    poly_shift,
    poly_trim,
    solve,
)


def test_poly_basics():
    f = get_field(8)
    assert poly_trim([1, 0, 2, 0, 0]) == (1, 0, 2)
    assert poly_add((1, 1), (1,)) == (0, 1)
    assert poly_eval(f, (1, 1), 1) == 0
    assert poly_shift(f, (0, 1), 0x1A) == (0x1A, 1)
    a, b = 0x3, 0x5
    assert poly_mul(f, (a, 1), (b, 1)) == (f.mul(a, b), a ^ b, 1)


def test_poly_shift_is_self_inverse():
    f = get_field(12)
    rng = random.Random(30)
    for _ in range(20):
        p = poly_trim(rng.randrange(f.order) for _ in range(rng.randrange(1, 12)))
        lam = rng.randrange(f.order)
        assert poly_shift(f, poly_shift(f, p, lam), lam) == p


def test_poly_compose():
    f = get_field(8)
    # (q(x))^2 + 1 with q = x^2 + 3
    q = (3, 0, 1)
    p = (1, 0, 1)
    direct = poly_add(poly_mul(f, q, q), (1,))
    assert poly_compose(f, p, q) == direct


def test_newton_poly_normalization_and_vanishing():
    f = get_field(8)
    beta = random_basis(f, 4, random.Random(31))
    omega = [enumerate_point(beta, i) for i in range(16)]
    for i in range(16):
        p = basis_poly(f, "newton", beta, i)
        assert len(p) == i + 1
        assert poly_eval(f, p, omega[i]) == 1
        for j in range(i):
            assert poly_eval(f, p, omega[j]) == 0
    assert basis_poly(f, "newton", beta, 0) == (1,)


def test_lagrange_poly_is_indicator():
    f = get_field(8)
    beta = random_basis(f, 3, random.Random(32))
    omega = [enumerate_point(beta, i) for i in range(8)]
    for i in range(8):
        p = basis_poly(f, "lagrange", beta, i)
        for j in range(8):
            assert poly_eval(f, p, omega[j]) == (1 if i == j else 0)


def test_dim_one_basis_polys():
    f = get_field(8)
    b0 = 0x1D
    inv = f.inv(b0)
    assert basis_poly(f, "lagrange", (b0,), 0) == (1, inv)
    assert basis_poly(f, "lagrange", (b0,), 1) == (0, inv)
    assert basis_poly(f, "lch", (b0,), 1) == (0, inv)


def test_graded_degrees_and_twist():
    f = get_field(12)
    beta = random_basis(f, 4, random.Random(33))
    rng = random.Random(34)
    for i in range(16):
        p = basis_poly(f, "lch", beta, i)
        assert len(p) == i + 1
        q = basis_poly(f, "lch_twisted", beta, i)
        for _ in range(3):
            x0 = rng.randrange(f.order)
            assert poly_eval(f, q, x0) == poly_eval(f, p, f.mul(beta[0], x0))


def test_solve_round_trip():
    f = get_field(4)
    assert solve(f, [[1, 0], [0, 1]], [7, 9]) == [7, 9]
    assert solve(f, [[5]], [7]) == [f.mul(7, f.inv(5))]
    rng = random.Random(35)
    while True:
        mat = [[rng.randrange(16) for _ in range(8)] for _ in range(8)]
        try:
            rhs = [rng.randrange(16) for _ in range(8)]
            x = solve(f, mat, rhs)
            break
        except ValueError:
            continue
    for row, want in zip(mat, rhs):
        acc = 0
        for a, b in zip(row, x):
            acc ^= f.mul(a, b)
        assert acc == want
    with pytest.raises(ValueError):
        solve(f, [[1, 1], [1, 1]], [0, 1])


def test_oracle_convert_identity_and_dim_one():
    f = get_field(8)
    beta = (0x2B,)
    rng = random.Random(36)
    for _ in range(10):
        coeffs = [rng.randrange(f.order), rng.randrange(f.order)]
        lam = rng.randrange(f.order)
        assert oracle_convert(f, "newton", "newton", beta, lam, 2, coeffs) == coeffs
        got = oracle_convert(f, "lagrange", "lch", beta, lam, 2, coeffs)
        phi = f.mul(lam, f.inv(beta[0]))
        h1 = coeffs[0] ^ coeffs[1]
        assert got == [coeffs[0] ^ f.mul(phi, h1), h1]


def test_oracle_convert_round_trips_and_composition():
    f = get_field(12)
    beta = random_basis(f, 3, random.Random(37))
    rng = random.Random(38)
    kinds = ["monomial", "newton", "lagrange", "lch", "lch_twisted"]
    for ell in (1, 3, 5, 8):
        coeffs = [rng.randrange(f.order) for _ in range(ell)]
        lam = rng.randrange(f.order)
        for a in kinds:
            for b in kinds:
                there = oracle_convert(f, a, b, beta, lam, ell, coeffs)
                back = oracle_convert(f, b, a, beta, lam, ell, there)
                assert back == coeffs
        via = oracle_convert(f, "newton", "lch", beta, lam, ell, coeffs)
        via = oracle_convert(f, "lch", "lagrange", beta, lam, ell, via)
        direct = oracle_convert(f, "newton", "lagrange", beta, lam, ell, coeffs)
        assert via == direct


def test_lagrange_coefficients_are_evaluations():
    f = get_field(8)
    beta = random_basis(f, 3, random.Random(39))
    rng = random.Random(40)
    ora = get_oracle(f, beta)
    lam = rng.randrange(f.order)
    h = [rng.randrange(f.order) for _ in range(8)]
    poly = ora.combine("lch", h)
    vals = oracle_convert(f, "lch", "lagrange", beta, lam, 8, h)
    assert vals == [poly_eval(f, poly, lam ^ w) for w in ora.omega]


def test_mixed_system_full_case_matches_plain_conversion():
    f = get_field(8)
    beta = random_basis(f, 3, random.Random(41))
    rng = random.Random(42)
    lam = rng.randrange(f.order)
    fvals = [rng.randrange(f.order) for _ in range(8)]
    assert oracle_l2x_mixed(f, beta, lam, 8, 8, 0, fvals) == \
        oracle_convert(f, "lagrange", "lch", beta, lam, 8, fvals)


def test_mixed_system_tiny_cases():
    f = get_field(8)
    beta = (0x35,)
    h0 = 0x5C
    assert oracle_l2x_mixed(f, beta, 0x11, 0, 1, 1, [h0]) == [h0]


def test_mixed_system_agrees_with_gaussian_solver():
    f = get_field(8)
    beta = random_basis(f, 3, random.Random(43))
    ora = get_oracle(f, beta)
    rng = random.Random(44)
    for _ in range(40):
        ell = rng.randrange(1, 9)
        c = rng.randrange(0, ell + 1)
        b_max = min(1, 8 - c)
        b = rng.randrange(0 if c else 1, b_max + 1)
        inputs = [rng.randrange(f.order) for _ in range(ell)]
        lam = rng.randrange(f.order)
        got = oracle_l2x_mixed(f, beta, lam, c, ell, b, inputs)
        points = ora.points(lam)
        if c:
            mat = [[poly_eval(f, ora.lch[i], points[j]) for i in range(c)]
                   for j in range(c)]
            rhs = []
            for j in range(c):
                acc = inputs[j]
                for i in range(c, ell):
                    acc ^= f.mul(inputs[i], poly_eval(f, ora.lch[i], points[j]))
                rhs.append(acc)
            assert got[:c] == solve(f, mat, rhs)
        if b:
            full = [0] * c + list(inputs[c:ell])
            for i in range(c):
                full[i] = got[i]
            acc = 0
            for i in range(ell):
                acc ^= f.mul(full[i], poly_eval(f, ora.lch[i], points[c]))
            assert got[-1] == acc


def test_reduction_identities_small():
    # Splitting off a power-of-two prefix factors every basis polynomial.
    f = get_field(8)
    beta = construct_cantor(f, 4)
    for d in (1, 2):
        alpha = alpha_of(beta, d)
        delta = delta_of(f, beta, d)
        gamma = beta[d:]
        inv0 = f.inv(beta[0])
        psi = [0] * ((1 << d) + 1)
        psi[1] = inv0
        psi[1 << d] = f.pow2k(inv0, d)
        psi = poly_trim(psi)
        for idx in range(16):
            i, j = divmod(idx, 1 << d)
            w_gamma = enumerate_point(gamma, i)
            for kind in ("lagrange", "newton", "lch"):
                whole = basis_poly(f, kind, beta, idx)
                outer = poly_compose(f, basis_poly(f, kind, delta, i), psi)
                inner = basis_poly(f, kind, alpha, j)
                if kind != "lch":
                    inner = poly_shift(f, inner, w_gamma)
                assert whole == poly_mul(f, outer, inner)


def test_bound_values():
    assert bound("newton_add", ell=16) == 49
    assert bound("newton_mul", ell=1) == 0
    assert bound("newton_mul", ell=16) == 32
    assert bound("cantor_newton_add", ell=16) == 46
    assert bound("monomial_mul", ell=2) == 0
    assert bound("monomial_add", ell=16) == 48
    assert bound("cantor_monomial_add", ell=16) == 64
    assert bound("taylor_add", ell=16, t=2) == 24
    assert bound("lagrange_add", ell=16) == 104
    assert bound("lagrange_mul", ell=16) == 40
    assert bound("l2x_add", c=16, b=0, ell=16, n=4) == bound("x2l_add", c=16, ell=16, n=4)
    assert bound("l2x_mul", c=0, b=1, ell=1, n=4) == 0
    with pytest.raises(ValueError):
        bound("nonsense", ell=4)
    with pytest.raises(ValueError):
        bound("taylor_add", ell=4)


def test_bound_caps_engage():
    # For c = ell = 2^n the growing form exceeds the fixed cap.
    n = 4
    cap_add = (1 << (n - 1)) * (3 * n - 2) + 1
    assert bound("x2l_add", c=16, ell=16, n=n) <= cap_add
    loose = (16 - 1) * (3 * 4 - 1) // 2 + 15
    assert bound("x2l_add", c=16, ell=16, n=n) == min(loose, cap_add)
