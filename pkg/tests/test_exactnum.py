import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from painleve.exactnum import (
    Atom,
    AtomKind,
    ParamSyntaxError,
    ParamValue,
    TriBool,
    alg,
    decide_coset,
    format_param,
    integer_solve,
    parse_param,
    rational_rank,
    tau,
    transcendence_degree,
    tri_and,
    tri_not,
    tri_or,
)

# -- strategies --------------------------------------------------------------

rationals = st.builds(
    Fraction,
    st.integers(min_value=-60, max_value=60),
    st.integers(min_value=1, max_value=12),
)
atoms = st.one_of(
    st.integers(min_value=0, max_value=3).map(tau),
    st.integers(min_value=0, max_value=2).map(alg),
)
param_values = st.builds(
    ParamValue,
    rationals,
    st.dictionaries(atoms, rationals, max_size=4),
)


# -- parsing and printing ----------------------------------------------------

def test_parse_plain_rational():
    assert parse_param("1/2") == ParamValue(Fraction(1, 2))
    assert parse_param("1/2").is_rational


def test_parse_linear_term():
    v = parse_param("2*tau1 - 1/3")
    assert v.const == Fraction(-1, 3)
    assert v.coeff(tau(1)) == 2
    assert v.atoms() == (tau(1),)


def test_parse_canonicalizes_repeated_atoms():
    assert parse_param("tau1 + tau1") == ParamValue(0, {tau(1): 2})


def test_parse_cancellation_drops_atom():
    assert parse_param("tau1 - tau1 + 5") == ParamValue(5)


def test_parse_accepts_signed_continuation():
    assert parse_param("tau1 + -1/3") == parse_param("tau1 - 1/3")


@pytest.mark.parametrize(
    "text,pos",
    [
        ("", 0),
        ("1//2", 2),
        ("2*", 2),
        ("2*3", 2),
        ("tau1 tau2", 5),
        ("-tau1", 1),
        ("1 + ^", 4),
    ],
)
def test_parse_syntax_error_positions(text, pos):
    with pytest.raises(ParamSyntaxError) as err:
        parse_param(text)
    assert err.value.position == pos


def test_parse_zero_denominator():
    with pytest.raises(ParamSyntaxError):
        parse_param("1/0")


@given(param_values)
def test_print_parse_roundtrip(v):
    assert parse_param(format_param(v)) == v


@given(param_values)
def test_roundtrip_is_idempotent_on_text(v):
    text = format_param(v)
    assert format_param(parse_param(text)) == text


# -- arithmetic and canonical form -------------------------------------------

@given(param_values, param_values)
def test_add_then_subtract_is_identity(a, b):
    assert a + b - b == a


@given(param_values, rationals)
def test_scaling_distributes_over_coefficients(v, q):
    scaled = v * q
    assert scaled.const == v.const * q
    for a in v.atoms():
        assert scaled.coeff(a) == v.coeff(a) * q


def test_no_zero_coefficients_stored():
    v = ParamValue(1, {tau(1): Fraction(0), alg(0): 2})
    assert v.atoms() == (alg(0),)


def test_equality_against_plain_rationals():
    assert ParamValue(Fraction(3, 2)) == Fraction(3, 2)
    assert parse_param("2*tau1 - 2*tau1 + 7") == 7


# -- decide_coset -------------------------------------------------------------

def test_coset_rational_yes():
    assert decide_coset(ParamValue(Fraction(7, 2)), Fraction(1, 2), 1) is TriBool.YES


def test_coset_transcendental_no():
    x = ParamValue(Fraction(1, 2), {tau(1): 1})
    assert decide_coset(x, 0, 1) is TriBool.NO


def test_coset_two_algebraic_unknown():
    x = ParamValue(0, {alg(1): 1, alg(2): 1})
    assert decide_coset(x, 0, 1) is TriBool.UNKNOWN


def test_coset_cancelled_atoms_yes():
    x = ParamValue.of_atom(alg(1), 2) - ParamValue.of_atom(alg(1), 2) + 4
    assert decide_coset(x, 0, 2) is TriBool.YES


def test_coset_single_algebraic_no():
    assert decide_coset(ParamValue(0, {alg(1): Fraction(1, 3)}), 0, 1) is TriBool.NO


def test_coset_requires_positive_modulus():
    with pytest.raises(ValueError):
        decide_coset(ParamValue(1), 0, 0)


def test_coset_soundness_exhaustive_small_rationals():
    # Independent oracle: for atom-free q, the verdict must equal exact
    # rational membership of (q - offset) / modulus in Z.
    grid = [Fraction(n, d) for n in range(-6, 7) for d in (1, 2, 3, 4)]
    for q, offset in itertools.product(grid, [Fraction(0), Fraction(1, 2), Fraction(-1, 3)]):
        for modulus in (1, 2, Fraction(1, 2)):
            expected = TriBool.of(((q - offset) / Fraction(modulus)).denominator == 1)
            assert decide_coset(ParamValue(q), offset, modulus) is expected


@given(param_values, atoms, rationals)
def test_coset_stable_under_cancelling_atom_noise(v, a, q):
    noisy = v + ParamValue.of_atom(a, q) - ParamValue.of_atom(a, q)
    assert decide_coset(noisy, 0, 1) is decide_coset(v, 0, 1)


@given(param_values)
def test_coset_yes_implies_atom_free(v):
    if decide_coset(v, 0, 1) is TriBool.YES:
        assert v.is_rational


# -- tri-valued logic ----------------------------------------------------------

def test_tribool_combinators():
    assert tri_and([TriBool.YES, TriBool.UNKNOWN]) is TriBool.UNKNOWN
    assert tri_and([TriBool.NO, TriBool.UNKNOWN]) is TriBool.NO
    assert tri_or([TriBool.NO, TriBool.UNKNOWN]) is TriBool.UNKNOWN
    assert tri_or([TriBool.YES, TriBool.UNKNOWN]) is TriBool.YES
    assert tri_not(TriBool.UNKNOWN) is TriBool.UNKNOWN


def test_tribool_is_not_truthy():
    with pytest.raises(TypeError):
        bool(TriBool.YES)


# -- transcendence degree -------------------------------------------------------

def test_td_single_atom_family():
    t1 = ParamValue.of_atom(tau(1))
    assert transcendence_degree([t1, t1 + 3, 2 * t1]) == 1


def test_td_ignores_algebraic_atoms():
    assert transcendence_degree([ParamValue(Fraction(1, 2)), ParamValue(3), ParamValue.of_atom(alg(1))]) == 0


def test_td_two_independent():
    t1, t2 = ParamValue.of_atom(tau(1)), ParamValue.of_atom(tau(2))
    assert transcendence_degree([t1, t2, t1 + t2]) == 2


@given(st.lists(param_values, min_size=1, max_size=5), st.randoms())
def test_td_invariant_under_permutation(values, rng):
    shuffled = list(values)
    rng.shuffle(shuffled)
    assert transcendence_degree(values) == transcendence_degree(shuffled)


@given(st.lists(param_values, min_size=1, max_size=4), st.lists(rationals, min_size=1, max_size=4), rationals)
def test_td_unchanged_by_linear_combinations(values, weights, const):
    combo = ParamValue(const)
    for v, w in zip(values, weights):
        combo = combo + v * w
    assert transcendence_degree(values + [combo]) == transcendence_degree(values)


# -- integer_solve ---------------------------------------------------------------

def brute_force_solve(A, b, radius):
    n = len(A[0]) if A else 0
    for cand in itertools.product(range(-radius, radius + 1), repeat=n):
        if all(sum(A[i][j] * cand[j] for j in range(n)) == b[i] for i in range(len(A))):
            return list(cand)
    return None


def test_solve_identity():
    assert integer_solve([[1, 0], [0, 1]], [3, -5]) == [3, -5]


def test_solve_parity_obstruction():
    assert integer_solve([[2, 0], [0, 2]], [1, 0]) is None


def test_solve_small_system_matches_brute_force():
    A, b = [[1, 1], [1, -1]], [2, 0]
    expected = brute_force_solve(A, b, 5)
    assert expected == [1, 1]
    got = integer_solve(A, b)
    assert got is not None
    assert all(sum(A[i][j] * got[j] for j in range(2)) == b[i] for i in range(2))


def test_solve_rectangular_systems():
    # Underdetermined: 1 equation, 2 unknowns.
    got = integer_solve([[2, 3]], [1])
    assert got is not None and 2 * got[0] + 3 * got[1] == 1
    # Overdetermined but consistent.
    assert integer_solve([[1, 0], [0, 1], [1, 1]], [2, 3, 5]) == [2, 3]
    # Overdetermined and inconsistent.
    assert integer_solve([[1, 0], [0, 1], [1, 1]], [2, 3, 6]) is None


@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=3),
    st.data(),
)
@settings(max_examples=150)
def test_solve_agrees_with_brute_force(m, n, data):
    A = [
        [data.draw(st.integers(min_value=-4, max_value=4)) for _ in range(n)]
        for _ in range(m)
    ]
    b = [data.draw(st.integers(min_value=-6, max_value=6)) for _ in range(m)]
    got = integer_solve(A, b)
    brute = brute_force_solve(A, b, 20)
    if got is None:
        assert brute is None
    else:
        assert all(sum(A[i][j] * got[j] for j in range(n)) == b[i] for i in range(m))
        if all(abs(x) <= 20 for x in got):
            assert brute is not None


# -- rank helper -------------------------------------------------------------------

def test_rational_rank_basic():
    assert rational_rank([[1, 0], [0, 1]]) == 2
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[0, 0]]) == 0
    assert rational_rank([]) == 0


def test_atom_names_and_kinds():
    assert tau(3).name == "tau3"
    assert alg(0).name == "alg0"
    assert tau(1).kind is AtomKind.TRANSCENDENTAL
    with pytest.raises(ValueError):
        Atom(AtomKind.TRANSCENDENTAL, -1)
