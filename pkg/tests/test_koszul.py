import pytest
from hypothesis import given, settings, strategies as st

from skewtca.koszul import (BRANCHES, ExtQuery, Side, ext_dim, ext_solutions, ext_table,
                            isolated_partitions, remark_report, table_csv)
from skewtca.partition import EMPTY, Partition, partitions
from skewtca.schur import lr_coefficient, sym_of_wedge2, tensor_schur, wedge_of_wedge2

P = Partition


def test_hom_of_simple_with_itself():
    for side in Side:
        assert ext_dim(ExtQuery(side, 0, P((2, 1)), P((2, 1)))).multiplicity == 1


def test_wedge_side_examples():
    assert ext_dim(ExtQuery(Side.WEDGE, 1, EMPTY, P((2,)))).multiplicity == 1
    assert ext_dim(ExtQuery(Side.WEDGE, 2, EMPTY, P((4,)))).multiplicity == 1
    assert ext_dim(ExtQuery(Side.WEDGE, 2, EMPTY, P((2, 2)))).multiplicity == 1
    assert ext_dim(ExtQuery(Side.WEDGE, 2, EMPTY, P((3, 1)))).multiplicity == 0


def test_branches_swap_roles():
    q = ExtQuery(Side.WEDGE, 1, P((2,)), EMPTY)
    assert ext_dim(q, "lambda_larger").multiplicity == 1
    assert ext_dim(q, "mu_larger").multiplicity == 0


def test_solutions_at_empty_partition():
    wedge = ext_solutions(Side.WEDGE, 2, EMPTY, "lambda_larger")
    assert wedge == [P((4,)), P((2, 2))]
    sym = ext_solutions(Side.SYM, 2, EMPTY, "lambda_larger")
    assert len(sym) == 1


@pytest.mark.parametrize("mu", ["-", "2", "2,1", "3,1,1"])
def test_degree_zero_solutions(mu):
    mu = P.parse(mu)
    for side in Side:
        for branch in BRANCHES:
            assert ext_solutions(side, 0, mu, branch) == [mu]


@pytest.mark.parametrize("side", list(Side))
def test_degree_zero_is_delta(side):
    for lam in partitions(3):
        for mu in partitions(3):
            assert ext_dim(ExtQuery(side, 0, lam, mu)).multiplicity == int(lam == mu)


small = st.sampled_from([p for m in range(5) for p in partitions(m)])


def transposed_multiplicity(dual_plethysm, i, lam, mu):
    rank = max(len(mu.transpose()), 1)
    return sum(c * lr_coefficient(lam.transpose(), kappa, mu.transpose())
               for kappa, c in dual_plethysm(i, rank).items())


@settings(max_examples=40, deadline=None)
@given(small, st.integers(1, 3), st.data())
def test_transpose_duality(lam, i, data):
    # conjugation sends Λ^i(Sym^2) to Λ^i(Λ^2) and Sym^i(Sym^2) to Sym^i(Λ^2)
    mu = data.draw(st.sampled_from(list(partitions(lam.size + 2 * i))))
    if mu.size > 10:
        return
    sym = ext_dim(ExtQuery(Side.SYM, i, lam, mu)).multiplicity
    wedge = ext_dim(ExtQuery(Side.WEDGE, i, lam, mu)).multiplicity
    assert sym == transposed_multiplicity(wedge_of_wedge2, i, lam, mu)
    assert wedge == transposed_multiplicity(sym_of_wedge2, i, lam, mu)


def test_exterior_side_is_not_dual_to_sym_of_wedge2():
    # the pairing Λ^i(Sym^2) <-> Sym^i(Λ^2) breaks already at i = 2
    mu = P((4,))
    assert ext_dim(ExtQuery(Side.SYM, 2, EMPTY, mu)).multiplicity == 0
    assert transposed_multiplicity(sym_of_wedge2, 2, EMPTY, mu) == 1


@settings(max_examples=40, deadline=None)
@given(small, small, st.integers(0, 3), st.sampled_from(list(Side)), st.sampled_from(BRANCHES))
def test_rank_stability(lam, mu, i, side, branch):
    r = ext_dim(ExtQuery(side, i, lam, mu), branch)
    assert r.stable


def test_solutions_agree_with_ext_dim():
    for side in Side:
        for mu in partitions(2):
            for branch in BRANCHES:
                sols = set(ext_solutions(side, 1, mu, branch))
                size = mu.size + 2 if branch == "lambda_larger" else mu.size - 2
                brute = {lam for lam in (partitions(size) if size >= 0 else [])
                         if ext_dim(ExtQuery(side, 1, lam, mu), branch).multiplicity}
                assert sols == brute


def test_pieri_shapes():
    for d in range(1, 7):
        want = {P((3,) + (1,) * (d - 1)): 1, P((2,) + (1,) * d): 1}
        assert dict(tensor_schur(P((1,) * d), P((2,)))) == want


def test_sym_side_column_family_is_isolated():
    got = isolated_partitions(Side.SYM, "mu_larger", 4)
    assert got == [P((1,) * d) for d in range(5)]


def test_query_validation():
    with pytest.raises(ValueError):
        ExtQuery(Side.SYM, -1, EMPTY, EMPTY)
    with pytest.raises(ValueError):
        ext_dim(ExtQuery(Side.SYM, 0, EMPTY, EMPTY), "sideways")
    with pytest.raises(ValueError):
        ext_dim(ExtQuery(Side.SYM, 0, P((15,)), P((15,))))


def test_table_csv():
    rows = ext_table(Side.WEDGE, 1, 2)
    text = table_csv(rows)
    assert text.splitlines()[0] == "side,i,lambda,mu,branch,multiplicity"
    assert "wedge,1,-,2,mu_larger,1" in text


def test_remark_report_flags_without_failing():
    r = remark_report(4)
    assert r.status == "warn"
    names = {line["check"]: line for line in r.details["lines"]}
    assert names["Sym2(Sym2) = S(4) + S(2,2)"]["ok"]
    assert any(k.startswith("Wedge2(Sym2)") for k in r.details["discrepancies"])
    assert names["degree 2 at the empty partition: 2 simples vs 4 simples"]["ok"]
    with pytest.raises(ValueError):
        remark_report(7)
