"""Gabidulin codes, rank census versus the closed-form distribution."""

import pytest

from fqcodes.errors import (
    EnumerationTooLarge,
    ParameterOutOfRange,
    TooFewCodewords,
)
from fqcodes.gf import FieldCtx
from fqcodes.linalg import rref
from fqcodes.rankmetric import (
    LinearizedPoly,
    RankCode,
    delsarte_rank_distribution,
    empirical_rank_distribution,
    gabidulin_code,
    gabidulin_rect,
    gaussian_binomial,
    linearized_eval,
    mrd_check,
    poly_rank,
    poly_to_matrix,
    rank_distance_of_code,
)

GF8 = FieldCtx(2, 3, [1, 1, 0, 1])


def test_eval_identity_and_zero():
    ident = LinearizedPoly(GF8, (GF8.one,))
    zero = LinearizedPoly(GF8, (GF8.zero, GF8.zero))
    for x in GF8.elements():
        assert linearized_eval(ident, x) == x
        assert linearized_eval(zero, x) == GF8.zero


def test_eval_squaring_example():
    square = LinearizedPoly(GF8, (GF8.zero, GF8.one))  # x^q
    assert linearized_eval(square, (1, 1, 0)) == (1, 0, 1)  # (a+1)^2 = a^2+1


def test_eval_is_additive():
    p = LinearizedPoly(GF8, ((1, 1, 0), (0, 1, 0)))
    for x in GF8.elements():
        for y in GF8.elements():
            assert linearized_eval(p, GF8.add(x, y)) == \
                GF8.add(linearized_eval(p, x), linearized_eval(p, y))


def test_poly_to_matrix_examples():
    ident = LinearizedPoly(GF8, (GF8.one,))
    assert poly_to_matrix(ident).rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    zero = LinearizedPoly(GF8, (GF8.zero,))
    assert poly_to_matrix(zero).rows == ((0, 0, 0),) * 3
    square = LinearizedPoly(GF8, (GF8.zero, GF8.one))
    assert rref(poly_to_matrix(square))[1] == 3  # Frobenius is a bijection


def test_poly_to_matrix_additive_and_injective():
    code = gabidulin_code(GF8, 1)
    seen = set()
    for p in code.members:
        seen.add(poly_to_matrix(p).rows)
    assert len(seen) == len(code)
    a, b = code.members[5], code.members[9]
    summed = LinearizedPoly(GF8, tuple(GF8.add(x, y) for x, y in zip(a.coeffs, b.coeffs)))
    lhs = poly_to_matrix(summed).rows
    rhs = tuple(tuple((x + y) % 2 for x, y in zip(r1, r2))
                for r1, r2 in zip(poly_to_matrix(a).rows, poly_to_matrix(b).rows))
    assert lhs == rhs


def test_gabidulin_examples():
    code = gabidulin_code(GF8, 1)
    assert len(code) == 64
    assert rank_distance_of_code(code) == 2
    t0 = gabidulin_code(GF8, 0)
    assert len(t0) == 8
    assert rank_distance_of_code(t0) == 3
    big = gabidulin_code(FieldCtx(2, 4), 2)
    assert len(big) == 4096
    assert rank_distance_of_code(big) == 2


def test_gabidulin_rank_lower_bound():
    for ctx, t in ((GF8, 1), (GF8, 2)):
        code = gabidulin_code(ctx, t)
        for p in code.members:
            if not p.is_zero():
                assert poly_rank(p) >= ctx.n - t


def test_gabidulin_guard():
    with pytest.raises(EnumerationTooLarge):
        gabidulin_code(FieldCtx(2, 12), 1)


def test_rank_distance_requires_members():
    singleton = RankCode(GF8, [LinearizedPoly(GF8, (GF8.zero,))], 0)
    with pytest.raises(TooFewCodewords):
        rank_distance_of_code(singleton)


def test_rank_distance_pairwise_matches_linear_scan():
    code = gabidulin_code(GF8, 1)
    nonlinear = RankCode(GF8, code.members, 1, linear=False)
    assert rank_distance_of_code(nonlinear) == rank_distance_of_code(code)


def test_mrd_examples():
    code = gabidulin_code(GF8, 1)
    assert mrd_check(code, 3, 3, 2)
    subcode = RankCode(GF8, code.members[:32], 1, linear=False)
    assert not mrd_check(subcode, 3, 3, 2)
    big = gabidulin_code(FieldCtx(2, 4), 2)
    assert mrd_check(big, 4, 4, 2)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(4, 0, 2) == 1
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(5, 2, 2) == 155
    for n in range(6):
        for k in range(n + 1):
            assert gaussian_binomial(n, k, 2) == gaussian_binomial(n, n - k, 2)
    with pytest.raises(ParameterOutOfRange):
        gaussian_binomial(3, 4, 2)


def test_delsarte_examples():
    dist = delsarte_rank_distribution(3, 2, 2)
    assert dist.counts == (1, 0, 49, 14)
    assert dist.total() == 64
    full = delsarte_rank_distribution(3, 3, 2)
    assert full.counts == (1, 0, 0, 7)  # rank_n = q^n - 1
    assert delsarte_rank_distribution(4, 2, 2).total() == 2 ** 12


@pytest.mark.parametrize("q,n,t", [(2, 3, 1), (2, 3, 2), (2, 3, 0), (2, 4, 2), (3, 2, 1)])
def test_delsarte_matches_census(q, n, t):
    code = gabidulin_code(FieldCtx(q, n), t)
    census = empirical_rank_distribution(code)
    formula = delsarte_rank_distribution(n, n - t, q)
    assert census.counts == formula.counts


def test_empirical_distribution_examples():
    zero_code = RankCode(GF8, [LinearizedPoly(GF8, (GF8.zero,))], 0, linear=False)
    assert empirical_rank_distribution(zero_code).counts == (1, 0, 0, 0)
    census = empirical_rank_distribution(gabidulin_code(FieldCtx(2, 4), 2))
    assert census.total() == 4096


def test_rect_coincides_with_square_when_h_zero():
    square = gabidulin_code(GF8, 1)
    rect = gabidulin_rect(GF8, GF8, 1)
    assert {p.coeffs for p in rect.members} == {p.coeffs for p in square.members}
    assert rect.src is None


def test_rect_example_k2_h1_t0():
    f4 = FieldCtx(2, 2)
    f8 = FieldCtx(2, 3)
    rect = gabidulin_rect(f4, f8, 0)
    assert len(rect) == 8  # q^((k+h)(t+1))
    assert rect.nrows == 2 and rect.ncols == 3
    assert rank_distance_of_code(rect) == 2
    for p in rect.members:
        if not p.is_zero():
            # kernel dimension at most t = 0
            assert poly_rank(p) == 2


def test_rect_member_count_formula():
    f4 = FieldCtx(2, 2)
    f16 = FieldCtx(2, 4)
    rect = gabidulin_rect(f4, f16, 1)
    assert len(rect) == 2 ** (4 * 2)
    assert rank_distance_of_code(rect) == 1
