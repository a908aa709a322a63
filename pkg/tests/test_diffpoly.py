import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from painleve import catalog
from painleve.diffpoly import (
    DiffExpr,
    Poly,
    RelationSet,
    T_VAR,
    jet,
    pv_change_of_variables_exprs,
    pv_random_point_check,
    reduce,
    relations_for_system,
    riccati_sign_note,
    sym,
    total_derivative,
    verify_group_relation,
    verify_pv_change_of_variables,
    verify_riccati,
)

Y0, Y1, Y2 = jet("y", 0), jet("y", 1), jet("y", 2)
T = DiffExpr.t()
Y = DiffExpr.var(Y0)
YP = DiffExpr.var(Y1)


# -- expression strategies -----------------------------------------------------

coeffs = st.builds(Fraction, st.integers(min_value=-9, max_value=9), st.integers(min_value=1, max_value=4))
base_vars = st.sampled_from([T_VAR, Y0, Y1, sym("v1"), jet("q", 0)])


@st.composite
def polys(draw):
    n_terms = draw(st.integers(min_value=0, max_value=4))
    out = Poly.const(draw(coeffs))
    for _ in range(n_terms):
        term = Poly.const(draw(coeffs))
        for v in draw(st.lists(base_vars, max_size=3)):
            term = term * Poly.var(v)
        out = out + term
    return out


@st.composite
def exprs(draw):
    num = draw(polys())
    den = draw(polys())
    if den.is_zero:
        den = Poly.const(1)
    return DiffExpr(num, den)


# -- total derivative -----------------------------------------------------------


def test_derivative_examples():
    assert total_derivative(Y * Y).equals(2 * Y * YP)
    assert total_derivative(T * DiffExpr.var(jet("q", 0))).equals(
        DiffExpr.var(jet("q", 0)) + T * DiffExpr.var(jet("q", 1))
    )
    assert total_derivative(DiffExpr.var(sym("v1"))).is_zero
    assert total_derivative(T).equals(1)
    assert total_derivative(DiffExpr.var(Y1)).equals(DiffExpr.var(Y2))


@given(exprs(), exprs())
@settings(max_examples=60, deadline=None)
def test_derivation_leibniz_and_additivity(f, g):
    assert total_derivative(f * g).equals(total_derivative(f) * g + f * total_derivative(g))
    assert total_derivative(f + g).equals(total_derivative(f) + total_derivative(g))


# -- polynomial arithmetic sanity --------------------------------------------------


@given(exprs(), exprs(), exprs())
@settings(max_examples=40, deadline=None)
def test_field_laws_by_cross_multiplication(a, b, c):
    assert (a + b).equals(b + a)
    assert ((a + b) + c).equals(a + (b + c))
    assert (a * (b + c)).equals(a * b + a * c)
    assert (a - a).is_zero


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        DiffExpr(Poly.const(1), Poly.const(0))
    with pytest.raises(ZeroDivisionError):
        DiffExpr.const(1) / (Y - Y)


def test_equality_ignores_common_factors():
    a = (Y * Y - DiffExpr.const(1)) / (Y - DiffExpr.const(1))
    b = Y + DiffExpr.const(1)
    assert a.equals(b)


def test_printing_is_deterministic():
    e = Y * Y * 2 + T * 3 - DiffExpr.const(Fraction(1, 2))
    assert str(e) == str(Y * Y * 2 + T * 3 - DiffExpr.const(Fraction(1, 2)))


# -- reduction ------------------------------------------------------------------------


def riccati_rels(sign=1):
    return RelationSet(catalog.riccati_rules(sign))


def test_reduce_second_derivative_under_riccati():
    expected = 2 * Y * (Y * Y + Fraction(1, 2) * T) + Fraction(1, 2)
    assert reduce(DiffExpr.var(Y2), riccati_rels(1)).equals(expected)


def test_reduce_piii_first_equation():
    system = catalog.ode_system(catalog.Family.PIII)
    rels = system.relations()
    q, p = DiffExpr.var(jet("q", 0)), DiffExpr.var(jet("p", 0))
    v1 = DiffExpr.var(sym("v1"))
    expected = (2 * q * q * p - q * q - v1 * q + T) / T
    assert reduce(DiffExpr.var(jet("q", 1)), rels).equals(expected)


def test_reduce_relation_residual_to_zero():
    system = catalog.ode_system(catalog.Family.PV, "QP")
    rels = system.relations()
    for resid in system.residual_exprs():
        assert reduce(resid, rels).is_zero


def test_reduce_is_idempotent():
    rels = riccati_rels(-1)
    e = DiffExpr.var(jet("y", 3)) * Y + DiffExpr.var(Y2)
    once = reduce(e, rels)
    assert reduce(once, rels).equals(once)
    assert not any(v.is_jet and v.order >= 1 for v in once.variables())


def test_reduce_handles_prolonged_orders():
    rels = riccati_rels(1)
    reduced = reduce(DiffExpr.var(jet("y", 4)), rels)
    assert reduced.variables() == (T_VAR, Y0)


def test_reduce_detects_vanishing_denominator():
    q1 = DiffExpr.var(jet("q", 1))
    q = DiffExpr.var(jet("q", 0))
    rels = RelationSet({jet("q", 1): DiffExpr.const(0)})
    with pytest.raises(ZeroDivisionError):
        reduce(q / q1, rels)
    assert reduce(q1 / q, rels).is_zero


def test_relations_require_derivatives():
    with pytest.raises(ValueError):
        RelationSet({Y0: Y})
    with pytest.raises(ValueError):
        relations_for_system(["y"], 2, [Y, Y])


# -- zero test vs random evaluation (sanity oracle) -------------------------------------


@given(exprs())
@settings(max_examples=25, deadline=None)
def test_zero_test_agrees_with_random_evaluation(e):
    rng = random.Random(99)
    vars_needed = e.variables()
    hits = 0
    agree_zero = e.is_zero
    for _ in range(25):
        point = {v: Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for v in vars_needed}
        try:
            value = e.evaluate(point)
        except ZeroDivisionError:
            continue
        hits += 1
        if value != 0:
            assert not agree_zero
            return
    if hits >= 5:
        # Never nonzero across many points: for these small degrees the
        # Schwartz-Zippel failure chance is negligible.
        assert agree_zero or e.num.is_zero or hits < 5


# -- verifications ---------------------------------------------------------------------------


def test_verify_riccati_exact_values():
    assert verify_riccati(1) == Fraction(1, 2)
    assert verify_riccati(-1) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        verify_riccati(0)


def test_riccati_residual_at_alpha_zero():
    for sign in (1, -1):
        rels = riccati_rels(sign)
        residual = reduce(DiffExpr.var(Y2) - 2 * Y * Y * Y - T * Y - DiffExpr.const(0), rels)
        assert residual.equals(DiffExpr.const(Fraction(sign, 2)))


def test_riccati_note_mentions_both_signs():
    note = riccati_sign_note()
    assert "-1/2" in note and "+1/2" in note


def test_pv_change_of_variables_substitution_values():
    q_expr, p_expr = pv_change_of_variables_exprs()
    point = {jet("Q", 0): Fraction(2), jet("P", 0): Fraction(1), sym("v1"): Fraction(0), sym("v3"): Fraction(0)}
    assert q_expr.evaluate(point) == 2
    assert p_expr.evaluate(point) == -1


def test_pv_change_of_variables_report():
    report = verify_pv_change_of_variables()
    assert report.identity_q is True
    assert report.identity_p is True
    assert report.holds
    assert report.excluded_loci == ("t = 0", "Q = 1")
    assert any("v4" in n for n in report.notes)


def test_pv_random_point_secondary_oracle():
    points, all_zero = pv_random_point_check(points=25, seed=3)
    assert points == 25
    assert all_zero is True


def test_verify_group_relation_fixtures():
    from painleve import weyl

    named = weyl.named_generators(catalog.Family.PIV)
    assert verify_group_relation(
        catalog.Family.PIV, ("tminus", "s1", "s2", "s1", "tminus^-1"), named["s0"]
    )
    expected = weyl.AffineMap.from_permutation(
        catalog.Family.PV, (0, 3, 2, 1), translation=(0, 1, 0, -1)
    )
    assert verify_group_relation(
        catalog.Family.PV, ("tminus", "s3", "s1", "s2", "s1", "s3", "tminus^-1"), expected
    )
    ident = weyl.AffineMap.identity(catalog.Family.PIII, 2)
    assert verify_group_relation(catalog.Family.PIII, ("s1", "s1"), ident)
    assert not verify_group_relation(catalog.Family.PIII, ("s1",), ident)
