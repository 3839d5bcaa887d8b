import math

import pytest

import oracles
from defkt.commutative_monoid import FgAbelianGroup
from defkt.finite_groups import IrrepData, build_group, irrep_data
from defkt.presentation_dsl import Cyclic, Quaternion8, Symmetric, Trivial
from defkt.rep_monoid import (
    count_components,
    free_product_components,
    free_product_k0,
    free_product_pi0,
    k0,
    pi0_rep_monoid,
)


def _monoid(leaf, label=None):
    group = build_group(leaf)
    return pi0_rep_monoid(irrep_data(group), label or group.label)


def test_pi0_rep_monoid_c2():
    monoid = _monoid(Cyclic(2))
    assert monoid.base.generator_count == 2
    assert monoid.degrees == (1, 1)
    assert monoid.base.is_free


def test_pi0_rep_monoid_s3():
    monoid = _monoid(Symmetric(3))
    assert monoid.degrees == (1, 1, 2)


def test_pi0_rep_monoid_needs_degrees():
    with pytest.raises(ValueError):
        pi0_rep_monoid(IrrepData(class_count=7, degrees=None), "S5")


def test_count_components_c2_dim3():
    result = count_components(irrep_data(build_group(Cyclic(2))), 3)
    assert result.count == 4
    assert result.representatives == ((0, 3), (1, 2), (2, 1), (3, 0))
    assert not result.truncated


def test_count_components_dim0_is_single_empty():
    for leaf in (Trivial(), Cyclic(3), Symmetric(3)):
        data = irrep_data(build_group(leaf))
        result = count_components(data, 0)
        assert result.count == 1
        assert result.representatives == ((0,) * data.class_count,)


def test_count_components_s3_dim2():
    # degrees 1,1,2: multisets {a,a},{a,b},{b,b},{c}
    assert count_components(irrep_data(build_group(Symmetric(3))), 2).count == 4


def test_count_components_matches_enumeration_oracle():
    for m in range(1, 7):
        data = irrep_data(build_group(Cyclic(m)))
        for n in range(13):
            result = count_components(data, n, cap=10**6)
            brute = oracles.enumerate_grade_vectors(data.degrees, n)
            assert result.count == len(brute) == math.comb(n + m - 1, m - 1)
            assert list(result.representatives) == sorted(brute)
    for leaf in (Symmetric(3), Symmetric(4), Quaternion8()):
        data = irrep_data(build_group(leaf))
        for n in range(9):
            assert count_components(data, n).count == len(
                oracles.enumerate_grade_vectors(data.degrees, n))


def test_count_components_truncates_representatives():
    data = irrep_data(build_group(Cyclic(2)))
    result = count_components(data, 1500)
    assert result.count == 1501
    assert len(result.representatives) == 1000
    assert result.truncated
    assert result.representatives[0] == (0, 1500)  # lexicographic start


def test_k0_values():
    assert k0(_monoid(Cyclic(3))) == FgAbelianGroup(3)
    assert k0(_monoid(Trivial())) == FgAbelianGroup(1)
    assert k0(_monoid(Quaternion8())) == FgAbelianGroup(5)


def test_free_product_rank_examples():
    c2, c3 = _monoid(Cyclic(2)), _monoid(Cyclic(3))
    assert free_product_pi0(c2, c3).group == FgAbelianGroup(4)
    triv = _monoid(Trivial())
    assert free_product_pi0(triv, triv).group == FgAbelianGroup(1)
    assert free_product_pi0(c2, _monoid(Cyclic(2))).group == FgAbelianGroup(3)


def test_free_product_group_is_torsion_free():
    for a in (Cyclic(4), Symmetric(3), Quaternion8()):
        for b in (Cyclic(2), Symmetric(4)):
            group = free_product_pi0(_monoid(a), _monoid(b)).group
            assert group.torsion == ()


def test_free_product_rank_identity():
    for a in (Trivial(), Cyclic(2), Cyclic(5), Symmetric(3), Quaternion8()):
        for b in (Trivial(), Cyclic(3), Symmetric(4)):
            ma, mb = _monoid(a), _monoid(b)
            fp = free_product_pi0(ma, mb)
            assert fp.group.rank == k0(ma).rank + k0(mb).rank - 1


def test_per_degree_multiplicativity():
    ma, mb = _monoid(Symmetric(3)), _monoid(Cyclic(4))
    fp = free_product_pi0(ma, mb)
    for n in range(11):
        left = count_components(irrep_data(build_group(Symmetric(3))), n).count
        right = count_components(irrep_data(build_group(Cyclic(4))), n).count
        assert fp.count_at(n) == left * right
        assert free_product_components([ma, mb], n).count == left * right


def test_free_product_components_concatenates_representatives():
    c2, c3 = _monoid(Cyclic(2)), _monoid(Cyclic(3))
    result = free_product_components([c2, c3], 1)
    assert result.count == 6
    assert all(len(vec) == 5 for vec in result.representatives)
    # grade 1 on each side: one unit among the first two slots, one among the rest
    for vec in result.representatives:
        assert sum(vec[:2]) == 1 and sum(vec[2:]) == 1
    assert list(result.representatives) == sorted(result.representatives)


def test_free_product_k0_n_ary():
    c2, c3, s3 = _monoid(Cyclic(2)), _monoid(Cyclic(3)), _monoid(Symmetric(3))
    assert free_product_k0([c2]) == FgAbelianGroup(2)
    assert free_product_k0([c2, c3]) == FgAbelianGroup(4)
    assert free_product_k0([c2, c3, s3]) == FgAbelianGroup(2 + 3 + 3 - 2)


def test_negative_dimension_rejected():
    with pytest.raises(ValueError):
        count_components(irrep_data(build_group(Cyclic(2))), -1)
