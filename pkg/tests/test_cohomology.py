import random

import pytest

from schubdual.cohomology import (
    CeilingError,
    ContextMismatchError,
    EmbeddingSpec,
    Grassmannian,
    MultiProjective,
    ProjectiveSpace,
    SplitProjectiveBundle,
    binomial_series,
    degree_of_embedding,
    euler_characteristic,
    hyperplane_power,
    integrate,
    multiply,
    tangent_chern,
    total_chern,
)
from schubdual.partitions import Box, Partition, complement_in_box

P = Partition


@pytest.fixture
def gr25():
    return Grassmannian(2, 5)


@pytest.fixture
def bundle12():
    return SplitProjectiveBundle(1, (1, 2))


def test_multiply_examples(gr25, bundle12):
    s = gr25.schubert
    assert multiply(gr25, s(1), s(1)) == s(2) + s(1, 1)
    assert multiply(gr25, s(3), s(2, 1)) == gr25.zero()
    b = bundle12
    assert multiply(b, b.xi(), b.xi()) == b.h() * b.xi() * 3


def test_integrate_examples(gr25):
    s = gr25.schubert
    assert integrate(gr25, s(3, 3)) == 1
    assert integrate(gr25, s(2, 1)) == 0
    assert integrate(gr25, s(1) ** 6) == 5


def test_mismatch_errors(gr25):
    other = Grassmannian(2, 4)
    with pytest.raises(ContextMismatchError):
        multiply(gr25, gr25.schubert(1), other.schubert(1))
    with pytest.raises(ContextMismatchError):
        integrate(gr25, other.schubert(2, 2))
    with pytest.raises(ContextMismatchError):
        gr25.schubert(1) + other.schubert(1)


def test_hyperplane_power_examples(gr25):
    assert hyperplane_power(EmbeddingSpec.standard(gr25), 0) == gr25.one()
    p1 = ProjectiveSpace(1)
    assert hyperplane_power(EmbeddingSpec(p1, p1.h(0) * 3), 1) == p1.h(0) * 3
    m = MultiProjective((1, 2))
    h1, h2 = m.h(0), m.h(1)
    assert hyperplane_power(EmbeddingSpec.standard(m), 3) == h1 * h2 * h2 * 3
    with pytest.raises(ValueError):
        hyperplane_power(EmbeddingSpec.standard(m), 4)


def test_tangent_examples(bundle12):
    p1 = ProjectiveSpace(1)
    assert tangent_chern(p1)[1] == p1.h(0) * 2
    b = bundle12
    c1 = tangent_chern(b)[1]
    assert c1 == b.xi() * 2 - b.h()
    assert integrate(b, c1 * c1) == 8
    m = MultiProjective((1, 2))
    assert tangent_chern(m)[3] == m.h(0) * m.h(1) ** 2 * 6


def test_total_chern_sums_pieces(gr25):
    pieces = tangent_chern(gr25)
    assert total_chern(gr25).pieces()[: len(pieces)] == pieces


@pytest.mark.parametrize(
    "ctx,expected",
    [
        (Grassmannian(2, 5), 10),
        (ProjectiveSpace(4), 5),
        (SplitProjectiveBundle(2, (0, 1, 3)), 9),
        (SplitProjectiveBundle(1, (1, 2)), 4),
    ],
)
def test_euler_examples(ctx, expected):
    assert euler_characteristic(ctx) == expected


def test_degree_examples(gr25, bundle12):
    assert degree_of_embedding(EmbeddingSpec.standard(gr25)) == 5
    assert degree_of_embedding(EmbeddingSpec.standard(MultiProjective((1, 2)))) == 3
    assert degree_of_embedding(EmbeddingSpec.standard(bundle12)) == 3


def test_embedding_rejects_bad_h(gr25):
    with pytest.raises(ValueError):
        EmbeddingSpec(gr25, gr25.zero())
    with pytest.raises(ValueError):
        EmbeddingSpec(gr25, gr25.schubert(2))
    with pytest.raises(ValueError):
        EmbeddingSpec(gr25, -gr25.schubert(1))
    m = MultiProjective((1, 1))
    with pytest.raises(ValueError):
        EmbeddingSpec(m, m.h(0) - m.h(1))


def test_ceiling_guard():
    with pytest.raises(CeilingError):
        Grassmannian(4, 9)
    assert Grassmannian(4, 9, ceiling=20).dimension == 20


def test_binomial_series_inverts():
    b = SplitProjectiveBundle(2, (0, 1))
    x = b.xi() * 2 + b.h()
    assert binomial_series(b, x, 3) * binomial_series(b, x, -3) == b.one()
    with pytest.raises(ValueError):
        binomial_series(b, b.one(), 2)


# properties -----------------------------------------------------------------

CONTEXTS = [
    Grassmannian(2, 5),
    Grassmannian(3, 6),
    ProjectiveSpace(5),
    MultiProjective((1, 2, 2)),
    SplitProjectiveBundle(2, (0, 1, 3)),
    SplitProjectiveBundle(1, (1, 2)),
]


def random_element(ctx, rng):
    basis = ctx.all_basis()
    return ctx.element({idx: rng.randint(-3, 3) for idx in rng.sample(basis, min(3, len(basis)))})


@pytest.mark.parametrize("ctx", CONTEXTS, ids=lambda c: c.name)
def test_commutative_associative(ctx):
    rng = random.Random(repr(ctx.key()))
    for _ in range(100):
        u, v, w = (random_element(ctx, rng) for _ in range(3))
        assert multiply(ctx, u, v) == multiply(ctx, v, u)
        assert multiply(ctx, multiply(ctx, u, v), w) == multiply(ctx, u, multiply(ctx, v, w))


@pytest.mark.parametrize("ctx", CONTEXTS, ids=lambda c: c.name)
def test_grading(ctx):
    rng = random.Random(7)
    for _ in range(50):
        i, j = rng.choice(ctx.all_basis()), rng.choice(ctx.all_basis())
        prod = multiply(ctx, ctx.basis_element(i), ctx.basis_element(j))
        assert prod.degrees() <= {ctx.degree(i) + ctx.degree(j)}


@pytest.mark.parametrize("rows,cols", [(r, c) for r in range(1, 4) for c in range(1, 5)])
def test_poincare_duality(rows, cols):
    g = Grassmannian(rows, rows + cols)
    box = Box(rows, cols)
    for d in range(box.area + 1):
        for lam in g.basis(d):
            for mu in g.basis(box.area - d):
                expected = 1 if mu == complement_in_box(lam, box) else 0
                assert integrate(g, g.basis_element(lam) * g.basis_element(mu)) == expected


def constructible_contexts():
    out = []
    for n in range(2, 13):
        for k in range(1, n):
            if k * (n - k) <= 10:
                out.append(Grassmannian(k, n))
    out += [ProjectiveSpace(n) for n in range(1, 11)]
    out += [MultiProjective(d) for d in [(1, 1), (1, 2), (2, 3), (1, 1, 1), (3, 3, 4)]]
    out += [SplitProjectiveBundle(m, a) for m, a in [(1, (0,)), (1, (1, 2)), (2, (0, 1, 3)), (3, (1, 1, 2, 5)), (4, (2, 2))]]
    return out


@pytest.mark.parametrize("ctx", constructible_contexts(), ids=lambda c: c.name)
def test_gauss_bonnet(ctx):
    assert ctx.dimension <= 10
    assert euler_characteristic(ctx) == len(ctx.all_basis())


def test_top_normalization():
    for ctx in constructible_contexts():
        assert integrate(ctx, ctx.basis_element(ctx.top)) == 1
        for idx in ctx.all_basis():
            if idx != ctx.top:
                assert integrate(ctx, ctx.basis_element(idx)) == 0


@pytest.mark.parametrize("m,a", [(1, (1, 2)), (2, (0, 1, 3)), (3, (1, 1, 2, 5)), (2, (4,))])
def test_bundle_relation(m, a):
    b = SplitProjectiveBundle(m, a)
    assert b.relation() == b.zero()
    assert multiply(b, b.xi() ** b.r, b.relation()) == b.zero()
    assert b.h() ** (m + 1) == b.zero()
    assert integrate(b, b.h() ** m * b.xi() ** b.r) == 1
