import random
from fractions import Fraction

import pytest

from lefcoin import (
    Field,
    HomologyError,
    QQ,
    SimplicialComplex,
    SimplicialPair,
    Workspace,
    builtin_map,
    builtin_pair,
    cross_product,
    fundamental_class,
    product_complex,
)
from lefcoin.homology import compose, identity_graded
from lefcoin.randmaps import random_map

BETTI = {
    "point": [1],
    "c3": [1, 1],
    "c6": [1, 1],
    "interval": [0, 1],
    "s2": [1, 0, 1],
    "s3": [1, 0, 0, 1],
    "torus": [1, 2, 1],
    "genus2": [1, 4, 1],
}


@pytest.mark.parametrize("name", sorted(BETTI))
def test_betti_numbers_rational(name):
    pair = builtin_pair(name)
    basis = Workspace(QQ).basis(pair)
    assert [basis.betti_of(k) for k in range(pair.total.dim + 1)] == BETTI[name]


@pytest.mark.parametrize("name", sorted(BETTI))
def test_betti_numbers_mod_five(name):
    pair = builtin_pair(name)
    basis = Workspace(Field(5)).basis(pair)
    assert [basis.betti_of(k) for k in range(pair.total.dim + 1)] == BETTI[name]


def test_interval_absolute_vs_relative():
    iv = builtin_pair("interval")
    w = Workspace(QQ)
    assert [w.absolute(iv).betti_of(k) for k in (0, 1)] == [1, 0]
    assert [w.basis(iv).betti_of(k) for k in (0, 1)] == [0, 1]


def test_projective_plane_depends_on_the_field():
    rp2 = SimplicialPair.absolute(SimplicialComplex(6, [
        (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 5), (0, 4, 5),
        (1, 2, 4), (1, 2, 5), (1, 3, 5), (2, 3, 4), (3, 4, 5),
    ]))
    over_q = Workspace(QQ).basis(rp2)
    over_2 = Workspace(Field(2)).basis(rp2)
    assert [over_q.betti_of(k) for k in range(3)] == [1, 0, 0]
    assert [over_2.betti_of(k) for k in range(3)] == [1, 1, 1]


def test_coords_rejects_non_cycles():
    c3 = builtin_pair("c3")
    basis = Workspace(QQ).basis(c3)
    with pytest.raises(HomologyError, match="not a cycle"):
        basis.coords({(0, 1): Fraction(1)}, 1)


def test_basis_and_cocycles_pair_as_identity():
    for name in ("torus", "genus2"):
        basis = Workspace(QQ).basis(builtin_pair(name))
        for k in range(basis.dim + 1):
            for j in range(basis.betti_of(k)):
                z = basis.basis_class(k, j)
                coords = basis.coords(z.chain(), k)
                want = [QQ.zero] * basis.betti_of(k)
                want[j] = QQ.one
                assert list(coords) == want


def _fundamental_cycle(w, pair, degree):
    chain = {s: QQ.of(c) for s, c in fundamental_class(pair).coefficients.items()}
    return w.absolute(pair).class_of(chain, degree)


def test_double_cover_multiplies_the_circle_class():
    w = Workspace(QQ)
    c6, c3 = builtin_pair("c6"), builtin_pair("c3")
    dbl = builtin_map("double", c6, c3)
    z6 = _fundamental_cycle(w, c6, 1)
    z3 = _fundamental_cycle(w, c3, 1)
    pushed = w.induced_absolute(dbl).apply(z6)
    assert list(pushed.coords) == [2 * v for v in z3.coords]


def test_rotation_acts_trivially_reflection_negates():
    w = Workspace(QQ)
    c3 = builtin_pair("c3")
    rot = w.induced_absolute(builtin_map("rot", c3, c3))
    rev = w.induced_absolute(builtin_map("reverse", c3, c3))
    assert rot.block(1)[0, 0] == QQ.one
    assert rev.block(1)[0, 0] == -QQ.one


def test_swap_reverses_torus_orientation():
    w = Workspace(QQ)
    torus = builtin_pair("torus")
    swap = w.induced_absolute(builtin_map("swap", torus, torus))
    assert swap.block(2)[0, 0] == -QQ.one
    b1 = swap.block(1)
    assert [[b1[i, j] for j in range(2)] for i in range(2)] == [
        [QQ.zero, QQ.one], [QQ.one, QQ.zero]]


def test_functoriality_on_random_maps():
    w = Workspace(QQ)
    rng = random.Random(11)
    torus, c3 = builtin_pair("torus"), builtin_pair("c3")
    for _ in range(5):
        f = random_map(rng, torus, c3)
        g = random_map(rng, c3, c3)
        lhs = w.induced_absolute(g.absolute().compose(f.absolute()))
        rhs = compose(w.induced_absolute(g), w.induced_absolute(f))
        assert lhs.eq(rhs)


def test_identity_induces_identity():
    w = Workspace(QQ)
    g2 = builtin_pair("genus2")
    ident = builtin_map("identity", g2, g2)
    assert w.induced_absolute(ident).eq(identity_graded(w.absolute(g2)))


def test_cross_products_build_torus_homology():
    w = Workspace(QQ)
    c3 = builtin_pair("c3").total
    pd = product_complex(c3, c3)
    prod_basis = w.absolute(pd.complex)
    left = w.absolute(pd.left)
    right = w.absolute(pd.right)
    pt = left.basis_class(0, 0)
    loop_l = left.basis_class(1, 0)
    loop_r = right.basis_class(1, 0)
    top = cross_product(loop_l, loop_r, pd, prod_basis)
    assert top.degree == 2 and not top.is_zero
    mixed_a = cross_product(pt, loop_r, pd, prod_basis)
    mixed_b = cross_product(loop_l, right.basis_class(0, 0), pd, prod_basis)
    assert not mixed_a.is_zero and not mixed_b.is_zero
    # the two mixed classes are linearly independent in H_1
    assert list(mixed_a.coords) != list(mixed_b.coords)


def test_cross_product_anticommutes_with_swap():
    w = Workspace(QQ)
    torus = builtin_pair("torus")
    c3 = builtin_pair("c3").total
    pd = product_complex(c3, c3)
    prod_basis = w.absolute(pd.complex)
    left = w.absolute(pd.left)
    a = left.basis_class(1, 0)
    b = w.absolute(pd.right).basis_class(1, 0)
    ab = cross_product(a, b, pd, prod_basis)
    ba = cross_product(b, a, pd, prod_basis)
    swap = w.induced_absolute(builtin_map("swap", torus, torus))
    swapped = swap.apply(ba)
    assert list(ab.coords) == [-v for v in swapped.coords]
