import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adjinv.characters import (
    alt2_char,
    char_double,
    char_product,
    character,
    decompose_character,
    freudenthal_weights,
    invariant_dim_in,
    recombine,
    sym2_char,
    weyl_dim,
)
from adjinv.errors import NotDominant, SizeCapExceeded
from adjinv.root_system import build
from adjinv.weyl import opposition

from .oracles import generic_direction, poly_mul, specialize, weyl_formula_holds

SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xG2"]


def small_dominant(name, max_label=2):
    rs = build(name)
    return st.lists(st.integers(0, max_label), min_size=rs.rank, max_size=rs.rank).map(rs.weight)


def test_freudenthal_examples():
    a2 = build("A2")
    adj = freudenthal_weights(a2.weight((1, 1)))
    assert adj.entries == {(1, 1): 1, (0, 0): 2}
    full = adj.expand().entries
    assert all(full[r.labels] == 1 for r in a2.roots)
    assert adj.dimension() == 8
    g2 = build("G2")
    seven = freudenthal_weights(g2.weight((1, 0)))
    assert seven.dimension() == 7
    assert seven[(0, 0)] == 1
    with pytest.raises(NotDominant):
        freudenthal_weights(a2.weight((1, -1)))


@pytest.mark.parametrize("name", SMALL + ["D4", "F4", "E6"])
def test_adjoint_weight_system(name):
    rs = build(name)
    for theta in rs.highest_roots:
        full = freudenthal_weights(theta.as_weight()).expand().entries
        in_factor = {r.labels for r in rs.roots if r.factor == theta.factor}
        assert full.pop(rs.zero.labels) == rs.spec.factors[theta.factor].rank
        assert set(full) == in_factor and set(full.values()) == {1}


def test_weyl_dim_examples():
    assert weyl_dim(build("B3").zero) == 1
    a1 = build("A1")
    assert [weyl_dim(a1.weight((n,))) for n in range(6)] == [1, 2, 3, 4, 5, 6]
    e6 = build("E6")
    assert weyl_dim(e6.fundamental_weights[0]) == 27
    assert [weyl_dim(w) for w in build("G2").fundamental_weights] == [7, 14]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_freudenthal_matches_weyl_character_formula(name, data):
    rs = build(name)
    mu = data.draw(small_dominant(name))
    wm = freudenthal_weights(mu)
    assert wm.dimension() == weyl_dim(mu)
    assert weyl_formula_holds(rs, mu.labels, wm.expand().entries)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL + ["D4"]), st.data())
def test_weight_system_duality(name, data):
    mu = data.draw(small_dominant(name))
    full = freudenthal_weights(mu).expand().entries
    negated = {tuple(-x for x in w): m for w, m in full.items()}
    dual = freudenthal_weights(opposition(mu)).expand().entries
    assert negated == dual
    assert (negated == full) == (opposition(mu) == mu)


def test_char_product_examples():
    a1 = build("A1")
    v = character(a1.weight((1,)))
    # dominant weight multiplicities, not irreducible components
    assert char_product(v, v).terms == {(2,): 1, (0,): 2}
    one = character(a1.zero)
    assert char_product(v, one) == v
    with pytest.raises(SizeCapExceeded):
        char_product(v, v, cap=3)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_char_product_against_evaluation(name, data):
    rs = build(name)
    a = character(data.draw(small_dominant(name)))
    b = character(data.draw(small_dominant(name)))
    ab = char_product(a, b)
    assert ab == char_product(b, a)
    v = generic_direction(rs)
    assert specialize(ab.expand(), v) == poly_mul(specialize(a.expand(), v), specialize(b.expand(), v))


def test_char_double_examples():
    a1 = build("A1")
    assert char_double(character(a1.zero)) == character(a1.zero)
    d = char_double(character(a1.weight((1,))))
    assert d.terms == {(2,): 1}
    assert d.expand() == {(2,): 1, (-2,): 1}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_square_identities(name, data):
    rs = build(name)
    mu = data.draw(small_dominant(name))
    chi = character(mu)
    s, a = sym2_char(mu), alt2_char(mu)
    assert s + a == char_product(chi, chi)
    assert s - a == char_double(chi)
    d = weyl_dim(mu)
    assert s.dimension() == d * (d + 1) // 2
    assert a.dimension() == d * (d - 1) // 2
    assert char_double(chi).dimension() == d
    v = generic_direction(rs)
    p1 = specialize(chi.expand(), v)
    p2 = specialize(chi.expand(), v, scale=2)
    square = poly_mul(p1, p1)
    halved = {k: (square.get(k, 0) + p2.get(k, 0)) // 2 for k in set(square) | set(p2)}
    assert specialize(s.expand(), v) == {k: c for k, c in halved.items() if c}


def test_sl2_plethysm():
    a1 = build("A1")
    assert decompose_character(sym2_char(a1.weight((1,)))) == {(2,): 1}
    assert decompose_character(alt2_char(a1.weight((1,)))) == {(0,): 1}
    assert decompose_character(sym2_char(a1.weight((2,)))) == {(4,): 1, (0,): 1}
    assert decompose_character(alt2_char(a1.weight((2,)))) == {(2,): 1}


def test_decompose_examples():
    a2 = build("A2")
    mu = a2.weight((2, 1))
    assert decompose_character(character(mu)) == {(2, 1): 1}
    a1 = build("A1")
    v = character(a1.weight((1,)))
    assert decompose_character(char_product(v, v)) == {(2,): 1, (0,): 1}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_decompose_roundtrip_and_positivity(name, data):
    rs = build(name)
    a = character(data.draw(small_dominant(name)))
    b = character(data.draw(small_dominant(name)))
    prod = char_product(a, b)
    coeffs = decompose_character(prod)
    assert all(c > 0 for c in coeffs.values())
    assert recombine(rs, coeffs) == prod
    virtual = prod - a.scale(3)
    assert recombine(rs, decompose_character(virtual)) == virtual


def test_invariant_dim_in_examples():
    a2 = build("A2")
    adj = a2.highest_roots[0].as_weight()
    assert invariant_dim_in(alt2_char(adj)) == 1
    a1 = build("A1")
    w = a1.weight((1,))
    assert (invariant_dim_in(sym2_char(w)), invariant_dim_in(alt2_char(w))) == (1, 0)
    b3 = build("B3")
    spin = b3.weight((0, 0, 1))
    assert weyl_dim(spin) == 8
    assert (invariant_dim_in(sym2_char(spin)), invariant_dim_in(alt2_char(spin))) == (0, 1)
