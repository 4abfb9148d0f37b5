"""Angular quadrature tables: counts, weights, polynomial exactness."""
import itertools
import math

import numpy as np
import pytest

from entropart.lebedev import LEBEDEV_ORDERS, SUPPORTED_NODE_COUNTS, lebedev_grid


def double_factorial(n):
    return 1 if n <= 1 else n * double_factorial(n - 2)


def monomial_average(i, j, k):
    """Exact unit-sphere average of x^(2i) y^(2j) z^(2k)."""
    num = (double_factorial(2 * i - 1) * double_factorial(2 * j - 1)
           * double_factorial(2 * k - 1))
    return num / double_factorial(2 * (i + j + k) + 1)


def test_supported_counts():
    assert SUPPORTED_NODE_COUNTS == (6, 14, 26, 38, 50, 86, 110, 146, 170,
                                     194, 302, 434)
    # rules with negative weights are excluded on purpose
    assert 74 not in LEBEDEV_ORDERS
    assert 230 not in LEBEDEV_ORDERS


@pytest.mark.parametrize("n", SUPPORTED_NODE_COUNTS)
def test_counts_weights_sphere(n):
    pts, wts = lebedev_grid(n)
    assert pts.shape == (n, 3)
    assert wts.shape == (n,)
    assert (wts > 0).all()
    assert abs(math.fsum(wts) - 1.0) < 1e-13
    assert np.max(np.abs(np.einsum("ij,ij->i", pts, pts) - 1.0)) < 1e-13


@pytest.mark.parametrize("n", SUPPORTED_NODE_COUNTS)
def test_even_monomial_exactness(n):
    order = LEBEDEV_ORDERS[n]
    pts, wts = lebedev_grid(n)
    for i, j, k in itertools.product(range(0, 6), repeat=3):
        deg = 2 * (i + j + k)
        if deg == 0 or deg > order:
            continue
        val = float(np.dot(wts, pts[:, 0] ** (2 * i) * pts[:, 1] ** (2 * j)
                           * pts[:, 2] ** (2 * k)))
        assert val == pytest.approx(monomial_average(i, j, k), abs=1e-13)


def test_odd_monomials_vanish():
    pts, wts = lebedev_grid(194)
    for pows in [(1, 0, 0), (0, 3, 0), (1, 1, 1), (2, 1, 0), (3, 2, 0)]:
        val = float(np.dot(wts, pts[:, 0] ** pows[0] * pts[:, 1] ** pows[1]
                           * pts[:, 2] ** pows[2]))
        assert abs(val) < 1e-14


def test_unsupported_count_rejected():
    with pytest.raises(ValueError, match="supported"):
        lebedev_grid(74)
    with pytest.raises(ValueError, match="supported"):
        lebedev_grid(100)
