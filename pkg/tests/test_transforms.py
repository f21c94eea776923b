"""Torus maps, shift pullbacks, and finite binomial-sum identities."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkz import (
    ConfigMismatch,
    DimensionMismatch,
    LeavesConfiguration,
    NotNegativeInteger,
    PointConfiguration,
    apply,
    binomial_expansion_identity,
    elementary_pullback,
    find_symmetries,
    identity_symmetry,
    induced_transformation,
    inverse_transformation,
    monomial_torus_map,
    standard_form,
    to_standard_form,
)
from gkz.symmetry import solve_T_for_permutation

T2 = ((1, 0, 0), (1, -1, 0), (0, 0, 1))


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


# --------------------------------------------------------------------------
# monomial torus maps
# --------------------------------------------------------------------------


def test_torus_map_identity(square_entry):
    config = square_entry.config
    rows = monomial_torus_map(config, identity_symmetry(config))
    assert rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_torus_map_quadric_reversal(quadric_entry):
    config = quadric_entry.config
    sym = solve_T_for_permutation(config, (2, 1, 0))
    assert monomial_torus_map(config, sym) == ((1, 0), (2, -1))


def test_torus_map_square_t2(square_entry):
    config = square_entry.config
    sym = solve_T_for_permutation(config, (2, 3, 0, 1))
    assert monomial_torus_map(config, sym) == T2


def test_torus_map_config_mismatch(square_entry, quadric_entry):
    sym = identity_symmetry(quadric_entry.config)
    with pytest.raises(ConfigMismatch):
        monomial_torus_map(square_entry.config, sym)


def test_torus_map_permutes_monomials(square_entry):
    """Exact exponent bookkeeping: the map sends the exponent of column j
    onto the exponent of column perm[j], so relabeling coefficients by the
    permutation leaves the defining sum unchanged."""
    config = square_entry.config
    a = np.array(config.matrix)
    x = list(range(2, 2 + config.n))
    for sym in find_symmetries(config):
        t = np.array(monomial_torus_map(config, sym))
        before = {tuple(a[:, j]): x[j] for j in range(config.n)}
        after = {tuple(t @ a[:, j]): x[j] for j in range(config.n)}
        relabeled = {}
        for j in range(config.n):
            relabeled[tuple(a[:, sym.perm[j]])] = x[j]
        assert after == relabeled
        assert sorted(after) == sorted(before)


# --------------------------------------------------------------------------
# linear transformations and their (beta, x) action
# --------------------------------------------------------------------------


def test_induced_transformation_scale(square_entry):
    for sym in find_symmetries(square_entry.config):
        assert induced_transformation(sym).scale == 1


def test_apply_beta_action_is_t(square_entry):
    config = square_entry.config
    sym = solve_T_for_permutation(config, (2, 3, 0, 1))
    tr = induced_transformation(sym)
    beta = (Fraction(1, 3), Fraction(-2, 5), Fraction(7, 2))
    beta_new, _ = apply(tr, beta, (1, 2, 3, 4))
    expected = tuple(
        sum(Fraction(T2[i][k]) * beta[k] for k in range(3)) for i in range(3)
    )
    assert beta_new == expected


def test_apply_then_inverse_is_identity(square_entry):
    config = square_entry.config
    beta = (Fraction(1, 3), Fraction(-2, 5), Fraction(7, 2))
    x = (Fraction(2), Fraction(3), Fraction(5), Fraction(7))
    for sym in find_symmetries(config):
        tr = induced_transformation(sym)
        back = inverse_transformation(tr)
        b1, x1 = apply(tr, beta, x)
        b2, x2 = apply(back, b1, x1)
        assert b2 == beta
        assert x2 == x


def test_apply_dimension_checks(square_entry):
    tr = induced_transformation(identity_symmetry(square_entry.config))
    with pytest.raises(DimensionMismatch):
        apply(tr, (1, 2), (1, 2, 3, 4))
    with pytest.raises(DimensionMismatch):
        apply(tr, (1, 2, 3), (1, 2, 3))


def test_linear_json_shape(square_entry):
    sym = solve_T_for_permutation(square_entry.config, (2, 3, 0, 1))
    blob = induced_transformation(sym).to_json()
    assert blob["kind"] == "linear"
    assert blob["T"] == [list(r) for r in T2]
    assert blob["perm"] == [3, 4, 1, 2]
    assert blob["scale"] == 1


# --------------------------------------------------------------------------
# elementary shift pullbacks
# --------------------------------------------------------------------------


def test_pullback_quadric(quadric_entry):
    sf = quadric_entry.standard_form(1)
    ea = elementary_pullback(sf, 1, 1)
    assert ea.pullback((2, 3, 5)) == (2 + 3 + 5, 3 + 2 * 5, 5)


def test_pullback_square(square_entry):
    sf = square_entry.standard_form(1)
    ea = elementary_pullback(sf, 1, 1)
    assert ea.pullback((2, 3, 5, 7)) == (2 + 3, 3, 5 + 7, 7)


def test_pullback_zero_shift_is_identity(quadric_entry):
    sf = quadric_entry.standard_form(1)
    ea = elementary_pullback(sf, 1, 0)
    ident = tuple(
        tuple(1 if i == j else 0 for j in range(3)) for i in range(3)
    )
    assert ea.coefficient_map == ident


def test_pullback_leaves_configuration():
    # monomials {1, w^2}: shifting w by 1 produces the missing w term
    config = PointConfiguration(matrix=((1, 1), (0, 2)), xi=(1, 0))
    sf = standard_form(config, ((1, 0), (0, 1)), 1)
    with pytest.raises(LeavesConfiguration):
        elementary_pullback(sf, 1, 1)
    # the degenerate shift stays inside
    ea = elementary_pullback(sf, 1, 0)
    assert ea.coefficient_map == ((1, 0), (0, 1))


def test_pullback_needs_one_block(square_entry):
    sf = to_standard_form(square_entry.config, 2)
    with pytest.raises(ConfigMismatch):
        elementary_pullback(sf, 1, 1)


def test_pullback_variable_range(quadric_entry):
    sf = quadric_entry.standard_form(1)
    with pytest.raises(DimensionMismatch):
        elementary_pullback(sf, 2, 1)
    with pytest.raises(DimensionMismatch):
        elementary_pullback(sf, 0, 1)


def test_pullback_matches_polynomial_substitution(square_entry):
    """f(x; w + t e_i) = f(xM; w) checked coefficient by coefficient."""
    sf = square_entry.standard_form(1)
    exps = sf.exponents
    n = sf.base.n
    t = Fraction(3, 7)
    x = (Fraction(2), Fraction(-3), Fraction(5), Fraction(1, 2))
    for i in (1, 2):
        ea = elementary_pullback(sf, i, t)
        xm = ea.pullback(x)
        w = (Fraction(4, 3), Fraction(-5, 2))
        shifted = tuple(
            w[k] + (t if k == i - 1 else 0) for k in range(sf.r)
        )
        def f(coeffs, point):
            total = Fraction(0)
            for j in range(n):
                term = coeffs[j]
                for k in range(sf.r):
                    term *= point[k] ** exps[k][j]
                total += term
            return total
        assert f(x, shifted) == f(xm, w)


@given(
    t=st.fractions(min_value=-3, max_value=3, max_denominator=8),
    s=st.fractions(min_value=-3, max_value=3, max_denominator=8),
)
@settings(max_examples=60, deadline=None)
def test_pullback_one_parameter_group(t, s):
    from gkz import catalog

    sf = catalog("quadric").standard_form(1)
    m_t = elementary_pullback(sf, 1, t).coefficient_map
    m_s = elementary_pullback(sf, 1, s).coefficient_map
    m_ts = elementary_pullback(sf, 1, t + s).coefficient_map
    assert mat_mul(m_t, m_s) == m_ts


def test_pullback_group_law_float(square_entry):
    sf = square_entry.standard_form(1)
    t, s = 0.37, -1.21
    m_t = np.array(elementary_pullback(sf, 2, t).coefficient_map, dtype=float)
    m_s = np.array(elementary_pullback(sf, 2, s).coefficient_map, dtype=float)
    m_ts = np.array(elementary_pullback(sf, 2, t + s).coefficient_map, dtype=float)
    assert np.allclose(m_t @ m_s, m_ts, rtol=1e-12, atol=0)


# --------------------------------------------------------------------------
# binomial-sum identities
# --------------------------------------------------------------------------


def test_binomial_quadric_structure(quadric_entry):
    sf = quadric_entry.standard_form(1)
    ea = elementary_pullback(sf, 1, 1)
    ident = binomial_expansion_identity(sf, ea, (-2.6, -2), 2)
    assert ident.order == 2
    assert ident.slot == 1
    assert len(ident.terms) == 3
    assert [t.binomial for t in ident.terms] == [1, 2, 1]
    assert [t.t_power for t in ident.terms] == [2, 1, 0]
    # U is the identity here, so the shifted parameter is read off directly
    for k, term in enumerate(ident.terms):
        assert term.beta == (-2.6, -k)
    assert ident.lhs_beta == (-2.6, -2)


def test_binomial_square_back_substitution(square_entry):
    # the chart permutes rows 2 and 3, so slot 2 of the transformed vector
    # is the third original parameter
    sf = square_entry.standard_form(1)
    ea = elementary_pullback(sf, 1, 0.5)
    beta = (-2.0, -0.1, -3)
    ident = binomial_expansion_identity(sf, ea, beta, 3)
    assert len(ident.terms) == 4
    for k, term in enumerate(ident.terms):
        assert term.beta == (-2.0, -0.1, -k)


def test_binomial_zero_shift_degenerates(quadric_entry):
    sf = quadric_entry.standard_form(1)
    ea = elementary_pullback(sf, 1, 0)
    ident = binomial_expansion_identity(sf, ea, (-1.3, -1), 1)
    live = [t for t in ident.terms if t.coefficient(0) != 0]
    assert len(live) == 1
    assert live[0].beta == (-1.3, -1)
    assert live[0].coefficient(0) == 1


def test_binomial_coefficients_sum(quadric_entry):
    # row sums of Pascal's triangle double-check the exact coefficients
    sf = quadric_entry.standard_form(1)
    for n_ord in (1, 2, 3, 4):
        ea = elementary_pullback(sf, 1, 1)
        ident = binomial_expansion_identity(sf, ea, (-0.7, -n_ord), n_ord)
        assert sum(t.coefficient(1) for t in ident.terms) == 2**n_ord


def test_binomial_rejects_bad_order(quadric_entry):
    sf = quadric_entry.standard_form(1)
    ea = elementary_pullback(sf, 1, 1)
    for bad in (0, -1, 2.5):
        with pytest.raises(NotNegativeInteger):
            binomial_expansion_identity(sf, ea, (-2.6, -2), bad)
    # slot value must equal -N
    with pytest.raises(NotNegativeInteger):
        binomial_expansion_identity(sf, ea, (-2.6, -2), 3)
    with pytest.raises(NotNegativeInteger):
        binomial_expansion_identity(sf, ea, (-2.6, -0.5), 1)


def test_binomial_chart_mismatch(quadric_entry, square_entry):
    sf_q = quadric_entry.standard_form(1)
    sf_s = square_entry.standard_form(1)
    ea = elementary_pullback(sf_s, 1, 1)
    with pytest.raises(ConfigMismatch):
        binomial_expansion_identity(sf_q, ea, (-2.6, -2), 2)


def test_binomial_json_shape(quadric_entry):
    sf = quadric_entry.standard_form(1)
    ea = elementary_pullback(sf, 1, 1)
    blob = binomial_expansion_identity(sf, ea, (-2.6, -2), 2).to_json()
    assert blob["kind"] == "binomial"
    assert blob["N"] == 2
    assert blob["variable_index"] == 1
    assert blob["shift"] == [1.0, 0.0]
    assert len(blob["terms"]) == 3
    assert blob["terms"][1]["binomial"] == 2
    assert blob["terms"][1]["t_power"] == 1
    assert blob["terms"][1]["beta_shift"] == [[-2.6, 0.0], [-1.0, 0.0]]
