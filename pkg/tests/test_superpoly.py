import pytest
from hypothesis import given, settings, strategies as st

from skewtca.superpoly import (EVEN, ODD, GuardExceeded, InhomogeneousError, MixedTableError,
                               Superderivation, UndefinedImageError, Variable, VariableTable,
                               certificate_sum, graded_basis, span_membership)
from skewtca.tca import RankContext

CTX = RankContext(2)
T = CTX.table


def test_odd_square_and_swap():
    y11, y12, x11 = CTX.y(1, 1), CTX.y(1, 2), CTX.x(1, 1)
    assert (y11 * y11).is_zero()
    assert y12 * y11 == -(y11 * y12)
    assert x11 * y11 == y11 * x11


def test_mixed_tables_rejected():
    other = RankContext(1)
    with pytest.raises(MixedTableError):
        CTX.x(1, 1) * other.x(1, 1)


def test_derivation_examples():
    ctx = RankContext(1)
    lift = ctx.elementary(ctx.f(1), ctx.e(1))
    assert lift(ctx.y(1, 1)) == ctx.x(1, 1).scale(2)
    assert lift(ctx.table.one()).is_zero()
    shift = CTX.elementary(CTX.e(2), CTX.e(1))
    assert shift(CTX.x(1, 1)) == CTX.x(2, 1)


def test_undefined_image():
    D = Superderivation(T, {}, EVEN)
    with pytest.raises(UndefinedImageError):
        D(CTX.x(1, 1))


def test_graded_basis_examples():
    y1 = RankContext(1, 0).table
    assert graded_basis(y1, 2) == [(1,)]
    y2 = RankContext(2, 0)
    assert [y2.table.monomial(m) for m in graded_basis(y2.table, 6)] == [y2.y(1, 1) * y2.y(1, 2) * y2.y(2, 2)]
    assert graded_basis(VariableTable([]), 0) == [()]


def test_graded_basis_guard():
    with pytest.raises(GuardExceeded) as err:
        graded_basis(T, 8, guard=10)
    assert err.value.estimate > 10


def test_graded_basis_counts_match_table():
    for d in range(0, 9, 2):
        assert len(graded_basis(T, d)) == T.count_degree(d)


def test_span_membership_examples():
    y11, x11 = CTX.y(1, 1), CTX.x(1, 1)
    assert span_membership(T.zero(), [y11]) == (True, [])
    ok, cert = span_membership(y11, [y11], 2)
    assert ok and certificate_sum(cert, [y11], T) == y11
    assert span_membership(x11, [y11], 2) == (False, None)


def test_span_membership_certificate():
    gens = [CTX.x(1, 1), CTX.y(1, 2)]
    target = CTX.x(1, 1) * CTX.x(2, 2) - CTX.y(1, 2) * CTX.y(1, 1)
    ok, cert = span_membership(target, gens)
    assert ok and certificate_sum(cert, gens, T) == target


def test_inhomogeneous_target():
    with pytest.raises(InhomogeneousError):
        span_membership(T.one() + CTX.x(1, 1), [CTX.x(1, 1)])


names = [v.name for v in T.variables]


@st.composite
def poly(draw, max_terms=3):
    out = T.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        m = T.one()
        for name in draw(st.lists(st.sampled_from(names), max_size=3)):
            m = m * T.var(name)
        out = out + m.scale(draw(st.integers(-3, 3)))
    return out


@st.composite
def homogeneous(draw):
    parity = draw(st.sampled_from([EVEN, ODD]))
    p = draw(poly())
    return type(p)(T, {m: c for m, c in p.terms.items() if T.parity_of(m) == parity}), parity


@settings(max_examples=80, deadline=None)
@given(poly(), poly(), poly())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=80, deadline=None)
@given(homogeneous(), homogeneous())
def test_super_commutativity(a, b):
    (p, pp), (q, qp) = a, b
    sign = -1 if pp and qp else 1
    assert p * q == (q * p).scale(sign)


ops = [(r, c) for r in range(4) for c in range(4)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ops), homogeneous(), poly())
def test_leibniz_rule(op, a, q):
    p, parity = a
    D = CTX.elementary(*op)
    sign = -1 if D.parity and parity else 1
    assert D(p * q) == D(p) * q + (p * D(q)).scale(sign)


def test_substitute_rejects_odd_values():
    with pytest.raises(ValueError):
        CTX.y(1, 1).substitute({T.index["y[1,1]"]: 1})


def test_table_validation():
    with pytest.raises(ValueError):
        VariableTable([Variable("a", EVEN, (1,)), Variable("a", ODD, (1,))])
    with pytest.raises(ValueError):
        VariableTable([Variable("a", EVEN, (1,)), Variable("b", ODD, (1, 0))])
