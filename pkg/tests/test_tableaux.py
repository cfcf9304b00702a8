from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_SWEEP, SWEEP, brute_content_counts, brute_tableaux
from superschur.errors import ContractError, NotHookError, NoWitnessError, ShapeMismatchError
from superschur.partitions import Partition, conjugate, partitions_up_to
from superschur.polytopes import hook_set
from superschur.tableaux import (
    Content,
    SuperLetter,
    SuperTableau,
    construct_witness,
    content,
    content_counts,
    enumerate_tableaux,
    hook_word,
    is_valid,
    mixed_insert,
    satisfies_hook,
)

TABLEAU_331 = [["t1", "t2", "u1"], ["t2", "t3", "u2"], ["u1"]]


def test_letter_order():
    t1, t2, u1, u2 = (SuperLetter.parse(s) for s in ("t1", "t2", "u1", "u2"))
    assert t1 < t2 < u1 < u2
    assert SuperLetter("T", 9) < SuperLetter("U", 1)
    assert str(u2) == "u2"


def test_331_tableau_is_a_brute_force_witness():
    tab = SuperTableau.from_rows(TABLEAU_331)
    assert is_valid(tab, 3, 2)
    assert content(tab, 3, 2).vector == (1, 2, 1, 2, 1)
    assert brute_content_counts((3, 3, 1), 3, 2)[(1, 2, 1, 2, 1)] >= 1


def test_431_content_is_realised():
    # the figure is an image; any valid (2,2)-tableau of shape (4,3,1) with this content will do
    assert brute_content_counts((4, 3, 1), 2, 2)[(2, 1, 3, 2)] >= 1
    tab = construct_witness((2, 1, 3, 2), (4, 3, 1), 2, 2)
    assert is_valid(tab, 2, 2) and tab.shape == (4, 3, 1)
    assert content(tab, 2, 2) == Content((2, 1), (3, 2))


def test_small_validity_examples():
    assert is_valid(SuperTableau.from_rows([["t1"]]), 1, 0)
    assert not is_valid(SuperTableau.from_rows([["u1", "u1"]]), 0, 1)
    assert is_valid(SuperTableau.from_rows([["u1"], ["u1"]]), 0, 1)
    assert not is_valid(SuperTableau.from_rows([["t1"], ["t1"]]), 1, 0)
    assert is_valid(SuperTableau.from_rows([["t1", "t1"]]), 1, 0)
    # letter index out of range
    assert not is_valid(SuperTableau.from_rows([["t3"]]), 2, 1)


def test_shape_mismatch_is_structural():
    bad = SuperTableau(Partition((2, 1)), ((SuperLetter("T", 1),),))
    with pytest.raises(ShapeMismatchError):
        is_valid(bad, 1, 1)
    ragged = SuperTableau.from_rows([["t1"], ["t1", "u1"]])
    with pytest.raises(ShapeMismatchError):
        is_valid(ragged, 1, 1)


def test_content_examples():
    assert content(SuperTableau.from_rows([["t1"]]), 2, 1).vector == (1, 0, 0)


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_tableaux((2, 1, 1), 2, 1)) == 8
    assert sum(1 for _ in enumerate_tableaux((1,), 1, 0)) == 1
    # (2,2) is outside H(1,1); the determinant at x = y = 1 must agree with the empty count
    from superschur.polynomials import schur_super_det

    assert sum(1 for _ in enumerate_tableaux((2, 2), 1, 1)) == schur_super_det((2, 2), 1, 1).evaluate([1, 1]) == 0


@pytest.mark.parametrize("lam, k, l", [inst for inst in SMALL_SWEEP if sum(inst[0]) <= 4] + [((2, 2), 1, 1), ((3,), 0, 2)])
def test_enumeration_matches_brute_force(lam, k, l):
    tabs = list(enumerate_tableaux(lam, k, l))
    keys = [tuple(tuple(r) for r in t.rows) for t in tabs]
    assert len(set(keys)) == len(keys)
    assert all(is_valid(t, k, l) for t in tabs)
    assert len(tabs) == len(brute_tableaux(lam, k, l))
    assert dict(content_counts(lam, k, l)) == brute_content_counts(lam, k, l)


def test_empty_stream_outside_hook():
    assert list(enumerate_tableaux((2, 2, 2), 1, 1)) == []
    assert list(enumerate_tableaux((), 0, 0)) != []


def test_satisfies_hook_examples():
    assert satisfies_hook((1, 1, 2), (2, 1, 1), 2, 1)
    assert not satisfies_hook((2, 2, 0), (2, 1, 1), 2, 1)
    assert satisfies_hook((0, 0, 0), (), 2, 1)
    with pytest.raises(NotHookError):
        satisfies_hook((1, 1), (2, 2, 2), 1, 1)


def test_hook_inequalities_are_necessary(sweep):
    """Every tableau content satisfies the hook inequalities."""
    for lam, k, l in sweep:
        for c in content_counts(lam, k, l):
            assert satisfies_hook(c, lam, k, l), (lam, k, l, c)


def test_hook_inequalities_not_sufficient_for_211():
    # (0,3,1) satisfies every inequality but x2^3 y1 is not a monomial of S_(2,1,1)
    assert satisfies_hook((0, 3, 1), (2, 1, 1), 2, 1)
    assert (0, 3, 1) not in content_counts((2, 1, 1), 2, 1)
    assert (0, 3, 1) not in brute_content_counts((2, 1, 1), 2, 1)


@pytest.mark.xfail(strict=True, reason="converse of the hook lemma fails, e.g. (0,3,1) for shape (2,1,1)")
def test_hook_content_equivalence_over_sweep(sweep):
    for lam, k, l in sweep:
        assert set(content_counts(lam, k, l)) == hook_set(lam, k, l), (lam, k, l)


def test_witness_examples():
    tab = construct_witness((2, 1, 1), (2, 1, 1), 2, 1)
    assert is_valid(tab, 2, 1) and tab.shape == (2, 1, 1) and content(tab, 2, 1).vector == (2, 1, 1)
    assert construct_witness((0, 0), (), 1, 1).rows == ()
    tab = construct_witness((1, 2, 1, 2, 1), (3, 3, 1), 3, 2)
    assert is_valid(tab, 3, 2) and tab.shape == (3, 3, 1) and content(tab, 3, 2).vector == (1, 2, 1, 2, 1)


def test_witness_precondition_checked():
    with pytest.raises(ContractError):
        construct_witness((2, 2, 0), (2, 1, 1), 2, 1)


def test_witness_reports_missing_tableau():
    with pytest.raises(NoWitnessError):
        construct_witness((0, 3, 1), (2, 1, 1), 2, 1)


def test_witness_for_every_support_point(sweep):
    for lam, k, l in sweep:
        if sum(lam) > 6:
            continue
        for c in content_counts(lam, k, l):
            tab = construct_witness(c, lam, k, l)
            assert is_valid(tab, k, l) and tab.shape == lam and content(tab, k, l).vector == c


@pytest.mark.xfail(strict=True, raises=NoWitnessError, reason="hook inequalities admit contents with no tableau")
def test_witness_whenever_hook_inequalities_hold():
    for lam, k, l in SMALL_SWEEP:
        for c in hook_set(lam, k, l):
            construct_witness(c, lam, k, l)


def test_hook_word_layout():
    assert [str(z) for z in hook_word((2, 1, 1, 2), 2, 2)] == ["t1", "t1", "t2", "u2", "u2", "u1"]


def test_hook_word_insertion_shape_is_not_lambda():
    # the all-t-then-all-u word is inserted into one long first row, whatever lambda is
    tab = mixed_insert(hook_word((1, 1, 2), 2, 1), 2, 1)
    assert tab.shape != (2, 1, 1)


words = st.integers(0, 3).flatmap(
    lambda k: st.integers(0 if k else 1, 3).flatmap(
        lambda l: st.tuples(
            st.just(k), st.just(l),
            st.lists(st.sampled_from([f"t{i}" for i in range(1, k + 1)] + [f"u{j}" for j in range(1, l + 1)]), max_size=9),
        )
    )
)


@settings(max_examples=300)
@given(words)
def test_mixed_insertion_gives_semistandard_tableau(data):
    k, l, word = data
    tab = mixed_insert(word, k, l)
    assert is_valid(tab, k, l)
    assert sum(tab.shape) == len(word)
    letters = [SuperLetter.parse(w) for w in word]
    expected = tuple(letters.count(SuperLetter("T", i)) for i in range(1, k + 1)) + tuple(
        letters.count(SuperLetter("U", j)) for j in range(1, l + 1)
    )
    assert content(tab, k, l).vector == expected
    assert tab.shape[k:k + 1] == () or tab.shape[k] <= l


def _hook_content_count(mu, k):
    """Number of SSYT of shape mu with entries <= k: prod (k + j - i) / hook."""
    conj = conjugate(mu)
    num = prod(Fraction(k + j - i) for i, p in enumerate(mu) for j in range(p))
    hooks = prod((p - j) + (conj[j] - i) - 1 for i, p in enumerate(mu) for j in range(p))
    return num / hooks


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_classical_counts_match_hook_content_formula(k):
    from superschur.polynomials import schur_classical

    for mu in partitions_up_to(6):
        n = sum(1 for _ in enumerate_tableaux(mu, k, 0))
        assert n == _hook_content_count(mu, k)
        assert schur_classical(mu, k).evaluate([1] * k) == n


def test_json_roundtrip():
    tab = SuperTableau.from_rows(TABLEAU_331)
    assert tab.to_json() == '[["t1", "t2", "u1"], ["t2", "t3", "u2"], ["u1"]]'
    assert SuperTableau.from_json(tab.to_json()) == tab
