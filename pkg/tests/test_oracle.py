import pytest

from diamondgf.oracle import (
    enumerate_diamonds,
    enumerate_infinite_univariate,
    enumerate_ppartitions,
    random_poset_corpus,
    schmidt_oracle,
)
from diamondgf.poset import (
    DiamondSpec,
    build_antichain,
    build_chain,
    constant_assignment,
    stanley_sigma,
)
from diamondgf.series import Poly2, RationalExpr, TruncSeries2


def test_ppartitions_chain_pair():
    # pairs m1 <= m2 with m1 + m2 <= 2: (0,0), (0,1), (0,2), (1,1)
    s = enumerate_ppartitions(build_chain(2), constant_assignment(2), 2)
    assert s == TruncSeries2(2, {(0, 0): 1, (0, 1): 1, (0, 2): 2})


def test_ppartitions_truncation_zero():
    for p in (build_chain(3), build_antichain(4)):
        s = enumerate_ppartitions(p, constant_assignment(p.size), 0)
        assert s == TruncSeries2.one(0)


def test_ppartitions_antichain():
    s = enumerate_ppartitions(build_antichain(2), constant_assignment(2), 3)
    assert s == TruncSeries2(3, {(0, 0): 1, (0, 1): 2, (0, 2): 3, (0, 3): 4})


def test_enumerate_diamonds_single_chain_block():
    s = enumerate_diamonds(DiamondSpec.uniform(1, 1), 3)
    expected = RationalExpr(Poly2.one(), ((0, 1), (1, 1), (1, 2))).expand(3)
    assert s == expected


def test_enumerate_diamonds_two_fold_block():
    # direct listing of 4-element diamonds with total sum <= 2
    s = enumerate_diamonds(DiamondSpec.uniform(2, 1), 2)
    assert s == TruncSeries2(2, {(0, 0): 1, (0, 1): 1, (0, 2): 1, (1, 1): 2})


def test_enumerate_diamonds_truncation_zero():
    assert enumerate_diamonds(DiamondSpec((3, 1)), 0) == TruncSeries2.one(0)


def test_infinite_univariate_values():
    assert enumerate_infinite_univariate(2, 3) == [1, 1, 3, 4]
    assert enumerate_infinite_univariate(1, 4) == [1, 1, 2, 3, 5]
    for d in (1, 2, 3):
        assert enumerate_infinite_univariate(d, 0) == [1]
        assert enumerate_infinite_univariate(d, 5)[0] == 1


def test_schmidt_oracle_values():
    # 1/((1-q)^2 (1-q^2)) through q^2
    assert schmidt_oracle(1, 1, 2) == [1, 2, 4]
    for d in (1, 2, 3):
        assert schmidt_oracle(d, 2, 3)[0] == 1


def test_schmidt_oracle_validation():
    with pytest.raises(ValueError):
        schmidt_oracle(0, 1, 2)
    with pytest.raises(ValueError):
        schmidt_oracle(1, 1, -1)


def test_oracle_outputs_count_objects():
    # nonnegative coefficients, constant term 1 (the empty assignment)
    bivariate = [
        enumerate_diamonds(DiamondSpec((2, 1)), 5),
        enumerate_ppartitions(build_chain(4), constant_assignment(4), 5),
    ]
    for s in bivariate:
        assert s.coefficient(0, 0) == 1
        assert all(c >= 0 for c in s.terms.values())
    univariate = [
        enumerate_infinite_univariate(2, 6),
        schmidt_oracle(2, 3, 6),
    ]
    for coeffs in univariate:
        assert coeffs[0] == 1
        assert all(c >= 0 for c in coeffs)


def test_corpus_is_deterministic():
    first = [
        (p.size, sorted(p.covers), tags)
        for p, tags in random_poset_corpus(20, seed=99, max_size=6)
    ]
    second = [
        (p.size, sorted(p.covers), tags)
        for p, tags in random_poset_corpus(20, seed=99, max_size=6)
    ]
    assert first == second
    sizes = {entry[0] for entry in first}
    assert len(sizes) > 1  # the corpus varies


def test_corpus_matches_stanley_on_a_sample():
    for p, tags in random_poset_corpus(40, seed=5, max_size=6):
        assert stanley_sigma(p, tags, 6) == enumerate_ppartitions(p, tags, 6)
