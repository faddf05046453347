from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, strategies as st

from hatlab.modring import (CoprimeViolation, ZnCtx, crt_combine, elem_order, geometric_sum, in_subgroup,
                            is_unit, subgroup_generated)


def test_context_normalizes():
    z = ZnCtx(12)
    assert z.norm(-1) == 11
    assert z.units() == [1, 5, 7, 11]
    assert z.subgroup(8) == frozenset({0, 4, 8})


def test_bad_modulus():
    with pytest.raises(ValueError):
        ZnCtx(0)


@given(st.integers(1, 200), st.integers(-500, 500))
def test_order_and_subgroup_agree(n, x):
    sub = subgroup_generated(n, x)
    assert len(sub) == elem_order(n, x)
    assert all(in_subgroup(n, y, x) == (y in sub) for y in range(n))
    assert is_unit(n, x) == (gcd(x % n, n) == 1)


@given(st.integers(1, 100), st.integers(-50, 50), st.integers(0, 12))
def test_geometric_sum(n, r, m):
    assert geometric_sum(n, r, m) == sum(pow(r, i, n) for i in range(m)) % n


@given(st.integers(1, 60), st.integers(1, 60), st.integers(-100, 100), st.integers(-100, 100))
def test_crt(n1, n2, a1, a2):
    if gcd(n1, n2) != 1:
        with pytest.raises(CoprimeViolation):
            crt_combine(n1, a1, n2, a2)
        return
    x = crt_combine(n1, a1, n2, a2)
    assert 0 <= x < n1 * n2
    assert (x - a1) % n1 == 0 and (x - a2) % n2 == 0


def test_crt_values_used_by_covers():
    assert crt_combine(48, 13, 5, 1) == 61
    assert crt_combine(48, 44, 5, 4) == 44
    assert crt_combine(20, 9, 7, 1) == 29
