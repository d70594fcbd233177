import numpy as np
import pytest

from pybicorn.certify import (augmented_bound, augmented_ceiling, bound_value, derived_augmented_bound,
                              hempel_bound, log3_bound, log3_ceiling)

def test_log3_below_hempel():
    i = np.arange(2, 10**6 + 1)
    assert np.all(log3_bound(i) <= hempel_bound(i))

def test_log3_exact_points():
    assert abs(log3_bound(4) - 4) < 1e-12
    assert abs(log3_bound(12) - 6) < 1e-12
    assert bound_value("log3", 4).value == pytest.approx(4)

@pytest.mark.parametrize("i,m", [(2, 3), (3, 4), (4, 4), (12, 6), (13, 7)])
def test_log3_ceiling(i, m):
    assert log3_ceiling(i) == m

def test_log3_ceiling_matches_float():
    i = np.arange(2, 3000)
    expected = np.ceil(log3_bound(i) - 1e-9).astype(int)
    assert [log3_ceiling(int(x)) for x in i] == list(expected)

def test_augmented():
    assert augmented_bound(9, 2) == pytest.approx(3)
    assert augmented_ceiling(9, 2) == 3
    assert derived_augmented_bound(9, 2) == 3
    # the written induction only gives the stated bound for k <= 2
    assert augmented_ceiling(81, 8) == 3
    assert derived_augmented_bound(81, 8) == 4

def test_formula_ranges():
    with pytest.raises(ValueError):
        log3_bound(1)
    with pytest.raises(ValueError):
        hempel_bound(np.array([0, 3]))
    with pytest.raises(ValueError):
        augmented_bound(5, 1)
    with pytest.raises(ValueError):
        bound_value("cubic", 5)
