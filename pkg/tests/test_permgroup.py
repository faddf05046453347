from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, strategies as st

from hatlab.permgroup import DegreeMismatch, PermGroup, Permutation, conjugation_exponent, is_semiregular

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(n))))


def test_right_action_product():
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    # apply p first, then q
    assert (p * q).images.tolist() == [q(p(x)) for x in range(3)]


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([0, 3, 1])


@given(perms, st.integers(-20, 20))
def test_power_and_inverse(images, k):
    p = Permutation(images)
    assert (p * p.inverse()).is_identity()
    expected = Permutation.identity(p.degree)
    step = p if k >= 0 else p.inverse()
    for _ in range(abs(k)):
        expected = expected * step
    assert p ** k == expected
    assert (p ** p.order()).is_identity()


def test_cycles_and_semiregular():
    p = Permutation.from_cycles(6, [[0, 1, 2], [3, 4, 5]])
    assert is_semiregular(p, 2, 3)
    assert not is_semiregular(p, 3, 2)
    with pytest.raises(DegreeMismatch):
        is_semiregular(p, 2, 2)
    assert p.order() == 3
    assert p.support() == [0, 1, 2, 3, 4, 5]


def test_conjugation_exponent():
    rho = Permutation.from_cycles(5, [[0, 1, 2, 3, 4]])
    sigma = Permutation([(2 * x) % 5 for x in range(5)])
    r = conjugation_exponent(rho, sigma, 5)
    assert r is not None and rho.conjugate(sigma) == rho ** r
    tau = Permutation([1, 0, 2, 3, 4])
    assert conjugation_exponent(rho, tau, 5) is None


def test_symmetric_group_orders():
    # an n-cycle and a transposition of adjacent points generate S_n
    for n in range(2, 9):
        gens = [Permutation.from_cycles(n, [list(range(n))]), Permutation.from_cycles(n, [[0, 1]])]
        g = PermGroup(gens, degree=n)
        assert g.order() == math.factorial(n)
        assert g.is_transitive()
    assert PermGroup([], degree=4).order() == 1


def test_elements_and_membership():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 7)
        gens = []
        for _ in range(rng.randint(1, 3)):
            im = list(range(n))
            rng.shuffle(im)
            gens.append(Permutation(im))
        g = PermGroup(gens, degree=n, seed=rng.randint(0, 99))
        # closure by brute force
        closure = {Permutation.identity(n)}
        frontier = list(closure)
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = x * s
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        assert g.order() == len(closure)
        assert set(g.elements()) == closure
        for x in closure:
            assert x in g
        assert g.stabilizer_order(0) * len(g.orbit(0)) == g.order()


def test_order_hint_matches_certified_order():
    gens = [Permutation.from_cycles(6, [[0, 1, 2, 3, 4, 5]]), Permutation.from_cycles(6, [[1, 5], [2, 4]])]
    assert PermGroup(gens, order_hint=12).order() == PermGroup(gens).order() == 12


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        PermGroup([Permutation([1, 0]), Permutation([1, 2, 0])])
