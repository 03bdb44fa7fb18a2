import doctest

from diamondgf import permstat, series


def test_series_doctests():
    result = doctest.testmod(series)
    assert result.attempted > 0
    assert result.failed == 0


def test_permstat_doctests():
    result = doctest.testmod(permstat)
    assert result.attempted > 0
    assert result.failed == 0
