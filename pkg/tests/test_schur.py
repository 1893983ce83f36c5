from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from skewtca.partition import Partition, partitions, q1_of_size, complement_in_rect
from skewtca.schur import (NotSymmetricError, SchurVector, SymPoly, character_of, dim_schur,
                           lr_coefficient, rect_lr_scan, schur_expand, schur_polynomial,
                           sym_of_sym2, sym_of_wedge2, tensor_schur, wedge_of_sym2)

P = Partition


def bialternant(lam, n):
    """Schur polynomial as a ratio of alternants, expanded by sympy."""
    xs = sympy.symbols(f"x1:{n + 1}")
    lam = tuple(lam) + (0,) * (n - len(lam))
    num = sympy.Matrix(n, n, lambda i, j: xs[i] ** (lam[j] + n - 1 - j)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    q = sympy.Poly(sympy.cancel(num / den), *xs)
    return {m: int(c) for m, c in q.terms()}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_schur_polynomial_matches_bialternant(n):
    for m in range(6):
        for lam in partitions(m, max_length=n):
            assert schur_polynomial(lam, n).terms == bialternant(lam, n)


def test_lr_examples():
    assert lr_coefficient(P((2,)), P((1,)), P((2, 1))) == 1
    assert lr_coefficient(P((2,)), P((2,)), P((2, 2))) == 1
    assert lr_coefficient(P((2,)), P((2,)), P((3, 2))) == 0


def test_tensor_examples():
    assert tensor_schur(P(()), P((2, 1))) == SchurVector({P((2, 1)): 1})
    assert tensor_schur(P((1,)), P((1,))) == SchurVector({P((2,)): 1, P((1, 1)): 1})
    assert tensor_schur(P((1, 1, 1)), P((2,))) == SchurVector({P((3, 1, 1)): 1, P((2, 1, 1, 1)): 1})


small = st.sampled_from([p for m in range(4) for p in partitions(m)])


@settings(max_examples=40, deadline=None)
@given(small, small)
def test_tensor_agrees_with_character_product(lam, mu):
    n = 3
    lhs = character_of(tensor_schur(lam, mu, n), n)
    assert lhs == schur_polynomial(lam, n) * schur_polynomial(mu, n)


@settings(max_examples=40, deadline=None)
@given(small, small)
def test_lr_transpose_symmetry(lam, mu):
    for nu, c in tensor_schur(lam, mu).items():
        assert lr_coefficient(lam.transpose(), mu.transpose(), nu.transpose()) == c
        assert lr_coefficient(mu, lam, nu) == c


def test_dim_schur_examples():
    assert dim_schur(P((3, 1)), 2) == 3
    assert dim_schur(P((2, 1, 1)), 2) == 0
    assert dim_schur(P(()), 4) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dim_is_character_at_ones(n):
    for lam in partitions(5, max_length=n):
        assert dim_schur(lam, n) == sum(schur_polynomial(lam, n).terms.values())


def test_schur_expand_examples():
    assert schur_expand(schur_polynomial(P((2,)), 2), 2) == SchurVector({P((2,)): 1})
    e2 = SymPoly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert schur_expand(e2, 3) == SchurVector({P((1, 1)): 1})
    h2 = SymPoly(2, {(2, 0): 1, (0, 2): 1, (1, 1): 1})
    e1 = SymPoly(2, {(1, 0): 1, (0, 1): 1})
    assert schur_expand(h2 * e1, 2) == SchurVector({P((3,)): 1, P((2, 1)): 1})


def test_schur_expand_rejects_nonsymmetric():
    with pytest.raises(NotSymmetricError):
        schur_expand(SymPoly(2, {(1, 0): 1}), 2)


def test_plethysm_examples():
    assert wedge_of_sym2(1, 3) == SchurVector({P((2,)): 1})
    assert wedge_of_sym2(3, 2) == SchurVector({P((3, 3)): 1})
    assert wedge_of_sym2(3, 3) == SchurVector({P((3, 3)): 1, P((4, 1, 1)): 1})
    assert sym_of_sym2(1, 2) == SchurVector({P((2,)): 1})
    assert sym_of_sym2(2, 4) == SchurVector({P((4,)): 1, P((2, 2)): 1})
    assert sym_of_sym2(3, 6) == SchurVector({P((6,)): 1, P((4, 2)): 1, P((2, 2, 2)): 1})


@pytest.mark.parametrize("d", range(0, 4))
def test_sym_of_sym2_is_even_partitions(d):
    want = SchurVector({lam: 1 for lam in partitions(2 * d, max_length=2 * d)
                        if all(p % 2 == 0 for p in lam)})
    assert sym_of_sym2(d, 2 * d or 1) == want


@pytest.mark.parametrize("d", range(0, 4))
def test_wedge_sym2_and_sym_wedge2_are_transposes_in_shape(d):
    # Λ^d(Sym^2) lives on Q1 partitions; Sym^d(Λ^2) on partitions with even columns
    n = 2 * d or 1
    assert set(wedge_of_sym2(d, n).support()) == {lam for lam in q1_of_size(2 * d) if len(lam) <= n}
    assert all(all(c % 2 == 0 for c in lam.transpose()) for lam in sym_of_wedge2(d, n))


@pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (3, 2), (2, 3)])
def test_rect_scan_examples(n, k):
    report = rect_lr_scan(n, k)
    assert report.passed, report.witnesses


def test_rect_complement_rule_directly():
    box = P((2, 2))
    for lam in partitions(2):
        mu = complement_in_rect(lam, 2, 2)
        assert lr_coefficient(lam, mu, box) == 1


def test_dimension_of_wedge_power():
    # dim Λ^d(Sym^2 C^n) = C(n(n+1)/2, d)
    from math import comb
    for n in (1, 2, 3):
        for d in range(4):
            vec = wedge_of_sym2(d, n)
            assert sum(c * dim_schur(lam, n) for lam, c in vec.items()) == comb(n * (n + 1) // 2, d)


def test_symmetry_detection():
    assert SymPoly(2, {(1, 0): 1, (0, 1): 1}).is_symmetric()
    assert not SymPoly(2, {(2, 0): 1, (0, 1): 1}).is_symmetric()
    assert SymPoly(3, {p: 1 for p in set(permutations((2, 1, 0)))}).is_symmetric()
