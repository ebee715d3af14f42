"""Field arithmetic: worked examples plus exhaustive axiom checks."""

import itertools

import pytest

from fqcodes.errors import (
    DimensionTooSmall,
    NonDivisorDegree,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroInverse,
)
from fqcodes.gf import FieldCtx, embed_linear
from fqcodes.linalg import rref

# the GF(8) used in the worked examples: x^3 + x + 1
GF8 = FieldCtx(2, 3, [1, 1, 0, 1])
ALPHA = (0, 1, 0)


def _cubic_has_gf2_root(tail):
    c0, c1, c2 = tail
    return c0 == 0 or (c0 + c1 + c2 + 1) % 2 == 0


def test_prime_field_default_modulus_is_x():
    f2 = FieldCtx(2, 1)
    assert f2.modulus == (0, 1)
    assert f2.order == 2
    assert f2.one == (1,)


def test_default_gf8_modulus_is_lex_smallest():
    # a cubic over F_2 is irreducible iff it has no root; every candidate
    # below the default must be reducible by this independent criterion
    f8 = FieldCtx(2, 3)
    assert f8.modulus == (1, 0, 1, 1)  # x^3 + x^2 + 1
    for tail in itertools.product(range(2), repeat=3):
        if tail < (1, 0, 1):
            assert _cubic_has_gf2_root(tail)
    assert not _cubic_has_gf2_root((1, 0, 1))


def test_explicit_moduli_accepted():
    assert FieldCtx(2, 3, [1, 1, 0, 1]).modulus == (1, 1, 0, 1)
    assert FieldCtx(2, 3, [1, 0, 1, 1]).modulus == (1, 0, 1, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        FieldCtx(2, 3, [1, 1, 1, 1])  # has the root 1
    with pytest.raises(ReducibleModulus):
        FieldCtx(2, 2, [0, 1, 1])  # x^2 + x = x(x+1)


def test_non_prime_characteristic_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        FieldCtx(4, 1)
    with pytest.raises(NonPrimeCharacteristic):
        FieldCtx(1, 3)


def test_mul_example():
    alpha2 = GF8.mul(ALPHA, ALPHA)
    assert GF8.mul(ALPHA, alpha2) == (1, 1, 0)  # alpha^3 = alpha + 1


def test_mul_identity_all_elements():
    for a in GF8.elements():
        assert GF8.mul(a, GF8.one) == a


def test_inv_example_and_brute_force_oracle():
    assert GF8.inv(ALPHA) == (1, 0, 1)  # alpha^6 = 1 + alpha^2
    for a in GF8.elements():
        if a == GF8.zero:
            continue
        oracle = [b for b in GF8.elements() if GF8.mul(a, b) == GF8.one]
        assert oracle == [GF8.inv(a)]


def test_zero_inverse_raises():
    with pytest.raises(ZeroInverse):
        GF8.inv(GF8.zero)
    with pytest.raises(ZeroInverse):
        GF8.pow(GF8.zero, -1)


def test_pow_negative_exponent():
    a = GF8.element((1, 1, 0))
    assert GF8.pow(a, -1) == GF8.inv(a)
    assert GF8.mul(GF8.pow(a, -2), GF8.pow(a, 2)) == GF8.one


def test_frobenius_examples():
    assert GF8.frobenius(ALPHA, 1) == GF8.mul(ALPHA, ALPHA)
    assert GF8.frobenius(ALPHA, 3) == ALPHA
    assert GF8.frobenius((1, 1, 0), 1) == (1, 0, 1)  # (a+1)^2 = a^2 + 1


@pytest.mark.parametrize("ctx", [GF8, FieldCtx(3, 2), FieldCtx(2, 4)])
def test_frobenius_is_linear_automorphism(ctx):
    elems = list(ctx.elements())
    for x in elems:
        assert ctx.frobenius(x, ctx.n) == x
    for x in elems[:8]:
        for y in elems[:8]:
            assert ctx.frobenius(ctx.add(x, y), 1) == \
                ctx.add(ctx.frobenius(x, 1), ctx.frobenius(y, 1))
            assert ctx.frobenius(ctx.mul(x, y), 1) == \
                ctx.mul(ctx.frobenius(x, 1), ctx.frobenius(y, 1))


def test_trace_examples():
    assert GF8.trace(GF8.one) == 1  # n mod q = 3 mod 2
    assert GF8.trace(ALPHA) == 0    # alpha + alpha^2 + alpha^4 = 0
    assert GF8.trace(GF8.zero) == 0


@pytest.mark.parametrize("ctx", [GF8, FieldCtx(3, 2), FieldCtx(2, 4)])
def test_trace_linear_surjective_frobenius_invariant(ctx):
    values = set()
    for x in ctx.elements():
        t = ctx.trace(x)
        values.add(t)
        assert ctx.trace(ctx.frobenius(x, 1)) == t
    assert values == set(range(ctx.q))  # surjective onto the prime field
    elems = list(ctx.elements())
    for x in elems[:6]:
        for y in elems[:6]:
            assert ctx.trace(ctx.add(x, y)) == (ctx.trace(x) + ctx.trace(y)) % ctx.q


def test_subfield_member_gf16():
    f16 = FieldCtx(2, 4)
    assert f16.subfield_member(f16.zero, 2)
    beta = next(x for x in f16.elements()
                if x != f16.zero and _mult_order(f16, x) == 15)
    assert not f16.subfield_member(beta, 2)
    assert f16.subfield_member(f16.pow(beta, 5), 2)  # order 3 = 2^2 - 1
    members = sum(1 for x in f16.elements() if f16.subfield_member(x, 2))
    assert members == 4
    with pytest.raises(NonDivisorDegree):
        f16.subfield_member(beta, 3)


def _mult_order(ctx, x):
    cur = x
    k = 1
    while cur != ctx.one:
        cur = ctx.mul(cur, x)
        k += 1
    return k


def test_subfield_member_counts():
    f26 = FieldCtx(2, 6)
    for k in (1, 2, 3, 6):
        count = sum(1 for x in f26.elements() if f26.subfield_member(x, k))
        assert count == 2 ** k


def test_multiplication_matrix_examples():
    ident = GF8.multiplication_matrix(GF8.one)
    assert ident.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert GF8.multiplication_matrix(GF8.zero).rows == ((0, 0, 0),) * 3
    f4 = FieldCtx(2, 2)
    assert f4.multiplication_matrix((0, 1)).rows == ((0, 1), (1, 1))


@pytest.mark.parametrize("ctx", [FieldCtx(2, 2), GF8])
def test_multiplication_matrix_is_multiplicative(ctx):
    for x in ctx.elements():
        for y in ctx.elements():
            lhs = ctx.multiplication_matrix(ctx.mul(x, y))
            rhs = ctx.multiplication_matrix(x).matmul(ctx.multiplication_matrix(y))
            assert lhs == rhs


def test_multiplication_matrix_invertible_iff_nonzero():
    for x in GF8.elements():
        rk = rref(GF8.multiplication_matrix(x))[1]
        assert (rk == 3) == (x != GF8.zero)


def test_embed_trivial_and_injective():
    f2 = FieldCtx(2, 1)
    f4 = FieldCtx(2, 2)
    phi = embed_linear(f2, f4)
    assert phi(f2.one) == (1, 0)
    f16 = FieldCtx(2, 4)
    psi = embed_linear(f4, f16)
    images = {psi(x) for x in f4.elements()}
    assert len(images) == 4


def test_embed_compose_frobenius_rank():
    f4 = FieldCtx(2, 2)
    f16 = FieldCtx(2, 4)
    psi = embed_linear(f4, f16)
    rows = [psi(f4.frobenius(b, 1)) for b in f4.basis()]
    from fqcodes.linalg import FqMatrix
    assert rref(FqMatrix(2, tuple(rows), 4))[1] == 2


def test_embed_dimension_guard():
    with pytest.raises(DimensionTooSmall):
        embed_linear(FieldCtx(2, 3), FieldCtx(2, 2))


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2)])
def test_field_axioms_exhaustive(q, n):
    ctx = FieldCtx(q, n)
    elems = list(ctx.elements())
    for a in elems:
        for b in elems:
            assert ctx.mul(a, b) == ctx.mul(b, a)
            for c in elems:
                assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
                assert ctx.mul(a, ctx.add(b, c)) == \
                    ctx.add(ctx.mul(a, b), ctx.mul(a, c))


def test_field_axioms_gf256_sampled():
    import random
    ctx = FieldCtx(2, 8)
    rng = random.Random(1)
    for x in ctx.elements():
        if x != ctx.zero:
            assert ctx.mul(x, ctx.inv(x)) == ctx.one
    for _ in range(5000):
        a, b, c = (ctx.element_at(rng.randrange(ctx.order)) for _ in range(3))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


def test_arithmetic_without_tables():
    # above the table threshold the polynomial fallback must still satisfy
    # the group laws
    big = FieldCtx(2, 17)
    assert big._log is None
    x = big.element_at(12345)
    y = big.element_at(54321)
    assert big.mul(x, big.inv(x)) == big.one
    assert big.mul(x, y) == big.mul(y, x)
    assert big.frobenius(x, 17) == x
    assert big.pow(x, big.order - 1) == big.one
    assert big.trace(x) in (0, 1)


def test_element_ordering_constant_term_most_significant():
    f4 = FieldCtx(2, 2)
    assert [f4.element_at(i) for i in range(4)] == \
        [(0, 0), (0, 1), (1, 0), (1, 1)]
    for i in range(4):
        assert f4.index_of(f4.element_at(i)) == i
