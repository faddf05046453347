from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from hatlab.autgroup import are_isomorphic
from hatlab.families import (DegenerateAdjacency, InvalidParams, MetaParams, Xe, Xo, Y, Z, build, canonical_pair,
                             parse_params, validate)
from hatlab.permgroup import conjugation_exponent, is_semiregular

EXAMPLES = ["Xo(3,9;2)", "Xe(4,80;23,0)", "Y(4,48;13,44)", "Z(20,5;9,2)", "Y(3,9;7,3)", "Xo(5,11;3)"]


@pytest.mark.parametrize("text", EXAMPLES)
def test_parse_str_round_trip(text):
    p = parse_params(text)
    assert str(p) == text
    assert parse_params(f"  {text.replace(',', ', ')} ") == p


@pytest.mark.parametrize("text", ["Xo(3,9)", "Xo(3,9;2,1)", "Y(4,48;13)", "W(1,2;3,4)", "Y(4,48,13,44)"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_params(text)


def test_residues_normalized():
    assert Y(4, 48, 13 + 48, -4) == Y(4, 48, 13, 44)
    assert Z(20, 5, 29, 2).k == 9


@pytest.mark.parametrize("p,fragment", [
    (Xo(3, 10, 3), "odd"), (Xo(3, 9, 3), "unit"), (Xo(3, 11, 2), "r^m"), (Xe(3, 8, 3, 0), "even"),
    (Y(4, 48, 13, 1), "t(r-1)"), (Z(20, 5, 1, 2), "k must not"), (Y(2, 5, 1, 0), "m >= 3"),
])
def test_validate_messages(p, fragment):
    msgs = validate(p)
    assert any(fragment in msg for msg in msgs), msgs
    with pytest.raises(InvalidParams):
        build(p)


@pytest.mark.parametrize("text", EXAMPLES)
def test_build_is_quartic_with_canonical_pair(text):
    p = parse_params(text)
    g = build(p)
    assert g.order == p.m * p.n
    assert g.is_regular(4)
    rho, sigma = canonical_pair(p)
    assert g.is_automorphism(rho.images) and g.is_automorphism(sigma.images)
    assert is_semiregular(rho, p.m, p.n)
    assert conjugation_exponent(rho, sigma, p.n) is not None


def test_degenerate_adjacency():
    with pytest.raises(DegenerateAdjacency):
        build(Z(6, 3, 3, 2))


@given(st.integers(3, 8), st.integers(3, 20), st.data())
def test_vertex_label_inverse(m, n, data):
    p = MetaParams("Y", m, n, 1, t=0)
    i = data.draw(st.integers(-20, 20))
    j = data.draw(st.integers(-40, 40))
    v = p.vertex(i, j)
    assert 0 <= v < m * n
    assert p.label(v) == (i % m, j % n)


def test_holt_two_descriptions():
    assert are_isomorphic(build(Xo(3, 9, 2)), build(Y(3, 9, 7, 3)))[0]
