import numpy as np
import pytest

from cyclesets import (
    InconsistentAddition,
    SizeTooLarge,
    block_systems,
    build_perm_brace,
    cyclic_cycle_set,
    irr_cycle_set,
    mpl2_cycle_set,
    sigma_gens,
    sub_cycle_set,
    verify_brace,
)
from cyclesets.perms import inverse


@pytest.fixture(scope="module")
def brace8():
    return build_perm_brace(irr_cycle_set(2, (0, 1), 1))


@pytest.fixture(scope="module")
def brace81():
    return build_perm_brace(irr_cycle_set(3, (0, 1, 1), 1))


def test_cyclic_brace_is_trivial():
    br = build_perm_brace(cyclic_cycle_set(4))
    assert br.order == 4
    n = br.order
    assert all(br.add(i, j) == br.circ(i, j) for i in range(n) for j in range(n))
    assert all(br.star(i, j) == br.zero for i in range(n) for j in range(n))
    assert br.socle().indices == tuple(range(4))


def test_order_eight_brace(brace8):
    assert brace8.order == 8
    assert any(
        brace8.circ(i, j) != brace8.circ(j, i) for i in range(8) for j in range(8)
    )
    assert verify_brace(brace8)


def test_order_eightyone_brace(brace81):
    assert brace81.order == 81
    assert verify_brace(brace81)


def test_brace_identities(brace8):
    br = brace8
    n = br.order
    for a in range(n):
        assert br.add(a, br.zero) == a
        assert br.circ(a, br.zero) == a
        assert br.add(a, br.neg(a)) == br.zero
        assert br.circ(a, br.circ_inv(a)) == br.zero
        assert br.star(a, br.zero) == br.zero
        for b in range(n):
            assert br.add(a, b) == br.add(b, a)
            # a o b = a + lambda_a(b)
            assert br.circ(a, b) == br.add(a, br.lam(a, b))
    # left distributivity a o (b + c) = a o b - a + a o c on a sample
    rng = np.random.default_rng(1)
    for a, b, c in rng.integers(0, n, size=(50, 3)):
        lhs = br.circ(a, br.add(b, c))
        rhs = br.add(br.add(br.circ(a, b), br.neg(a)), br.circ(a, c))
        assert lhs == rhs


def test_socle_trivial_for_irretractable(brace8, brace81):
    assert brace8.socle().indices == (brace8.zero,)
    assert brace81.socle().indices == (brace81.zero,)


def test_fix_has_size_p(brace8, brace81):
    f8 = brace8.fix()
    f81 = brace81.fix()
    assert len(f8.indices) == 2
    assert len(f81.indices) == 3
    # Fix is a sub-brace in both operations
    assert f8.add_subgroup and f8.circ_subgroup
    assert f81.add_subgroup and f81.circ_subgroup


def _sigma_inverse_embedding(cs, br):
    return [br.index_of(inverse(cs.sigma(x))) for x in range(cs.n)]


@pytest.mark.parametrize("p,phi", [(2, (0, 1)), (3, (0, 1, 1)), (3, (1, 2, 2))])
def test_block_stabilizer_and_fix_geometry(p, phi):
    cs = irr_cycle_set(p, phi, 1)
    br = build_perm_brace(cs)
    system = block_systems(sigma_gens(cs), cs.n)[0]
    stab = br.block_stabilizer(system)
    assert stab.circ_subgroup
    assert br.order // len(stab.indices) == p
    fix = set(br.fix().indices)
    assert fix & set(stab.indices) == {br.zero}

    # the image of the cycle set sits inside the brace as x -> sigma_x^{-1};
    # each block is then a coset of Fix, in both operations
    emb = _sigma_inverse_embedding(cs, br)
    for block in system:
        img = sorted(emb[y] for y in block)
        x = emb[block[0]]
        assert img == sorted(br.add(x, f) for f in fix)
        assert img == sorted(br.circ(x, f) for f in fix)

    # the double coset Fix o x o Fix recovers the whole image
    spread = {br.circ(br.circ(f1, emb[0]), f2) for f1 in fix for f2 in fix}
    assert sorted(spread) == sorted(emb)

    # the points landing in the stabilizer generate the cycle set
    seed = [x for x in range(cs.n) if emb[x] in set(stab.indices)]
    assert seed == [a * p for a in range(p)]
    assert sub_cycle_set(cs, seed) == tuple(range(cs.n))


def test_additive_sylow_of_p_group_is_everything(brace8):
    syl = brace8.additive_sylow(2)
    assert len(syl.indices) == 8
    assert brace8.additive_sylow(3).indices == (brace8.zero,)


def test_circ_center(brace8):
    centre = brace8.circ_center()
    assert len(centre.indices) == 2
    assert brace8.zero in centre.indices


def test_add_and_circ_orders(brace8):
    assert sorted({brace8.add_order(i) for i in range(8)}) == [1, 2]
    assert sorted({brace8.circ_order(i) for i in range(8)}) == [1, 2, 4]
    assert brace8.add_order(brace8.zero) == 1
    for i in range(8):
        assert brace8.add_pow(brace8.add_order(i), i) == brace8.zero


def test_add_pow_scalar_matches_repeated_addition(brace81):
    br = brace81
    rng = np.random.default_rng(7)
    for i in rng.integers(0, br.order, size=12):
        acc = br.zero
        for k in range(1, 5):
            acc = br.add(acc, int(i))
            assert br.add_pow(k, int(i)) == acc


def test_spans(brace8):
    assert brace8.additive_span([]) == (brace8.zero,)
    assert len(brace8.additive_span(range(8))) == 8
    sidx = int(brace8.sidx[0])
    assert sidx in brace8.circ_span([sidx])


def test_classify_subset_tags_match_brute_force(brace8):
    br = brace8
    n = br.order
    rng = np.random.default_rng(3)
    for _ in range(25):
        size = int(rng.integers(1, 6))
        subset = sorted({br.zero, *rng.integers(0, n, size=size).tolist()})
        tags = br.classify_subset(subset)
        members = set(subset)
        add_closed = all(br.add(a, b) in members for a in members for b in members)
        circ_closed = all(br.circ(a, b) in members for a in members for b in members)
        lam_stable = all(
            br.lam(g, a) in members for g in range(n) for a in members
        )
        assert tags.add_subgroup == add_closed
        assert tags.circ_subgroup == circ_closed
        assert tags.left_ideal == (add_closed and lam_stable)
        if tags.ideal:
            assert tags.left_ideal and tags.circ_subgroup


def test_block_stabilizer_is_not_an_ideal(brace81):
    cs = irr_cycle_set(3, (0, 1, 1), 1)
    system = block_systems(sigma_gens(cs), 9)[0]
    stab = brace81.block_stabilizer(system)
    assert stab.circ_subgroup
    assert not stab.add_subgroup
    assert not stab.ideal


def test_tables_round_trip(brace8):
    circ = brace8.circ_table()
    add = brace8.add_table()
    assert circ.shape == (8, 8) and add.shape == (8, 8)
    assert circ[0].tolist() == list(range(8))
    for i in range(8):
        for j in range(8):
            assert circ[i, j] == brace8.circ(i, j)
            assert add[i, j] == brace8.add(i, j)


def test_table_guard(brace81):
    with pytest.raises(SizeTooLarge):
        brace81.circ_table(max_order=16)


def test_mpl2_brace_order():
    br = build_perm_brace(mpl2_cycle_set(2, (2,), (0, 1), 1))
    assert br.order in (4, 8)
    assert verify_brace(br)
