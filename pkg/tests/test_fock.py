from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import graph, top
from twistbialg import fock, graphs, laws, setcomp, topology
from twistbialg.errors import CapacityError, DomainError
from twistbialg.fock import Polynomial
from twistbialg.lincomb import LinComb

X = Polynomial.x()
polys = st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4)), max_size=5).map(Polynomial)


@given(polys, polys, polys)
def test_polynomial_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert p - p == 0


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_ring_map(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_polynomial_basics():
    p = X * X - 2 * X + 1
    assert p.degree == 2
    assert p(1) == 0
    assert p.scale_var(2) == 4 * X * X - 4 * X + 1
    assert fock.render_poly(p) == "X^2 - 2*X + 1"
    assert fock.render_poly(Polynomial()) == "0"
    assert fock.render_poly(Fraction(-1, 2) * X) == "-1/2*X"
    assert p.to_json() == {"coeffs": ["1/1", "-2/1", "1/1"]}


@pytest.mark.parametrize("n", range(6))
def test_hilbert_polynomials_count_subsets(n):
    h = fock.hilbert_poly(n)
    assert h.degree == n
    assert all(h(k) == len([s for s in range(1 << k) if bin(s).count("1") == n]) for k in range(7))


def test_k_encoding_round_trip():
    for c in laws.comps_on(1, 4):
        w = fock.k_encode(c)
        assert fock.is_packed(w)
        assert fock.k_decode(w) == c
    assert fock.k_encode(setcomp.make([[1, 3], [2]])) == (1, 2, 1)


def test_k_needs_an_initial_integer_segment():
    with pytest.raises(DomainError):
        fock.k_encode(setcomp.make([[1], [3]]))
    with pytest.raises(DomainError):
        fock.k_encode(setcomp.make([["A"]]))


def test_khat_forgets_labels():
    x = LinComb([(setcomp.make([[1, 3], [2]]), 1), (setcomp.make([[2], [1, 3]]), 2)])
    assert fock.khat_image(x) == LinComb([((2, 1), 1), ((1, 2), 2)])


@pytest.mark.parametrize("u, v", [((1,), (1,)), ((1, 2), (1,)), ((1, 1), (2, 1)), ((2, 1, 1), (1,))])
def test_k_is_an_algebra_map(u, v):
    # packed words of disjoint initial segments: shift the second word's labels
    a, b = fock.k_decode(u), fock.k_decode(v)
    b = setcomp.relabel(b, {i: i + len(u) for i in range(1, len(v) + 1)})
    assert fock.k_image(setcomp.quasi_shuffle(a, b)) == fock.wqsym_product(u, v)


@pytest.mark.parametrize("w", [(1,), (1, 2), (2, 1, 1), (1, 2, 1, 3)])
def test_k_intertwines_internal_coproducts(w):
    d = setcomp.internal_delta(fock.k_decode(w))
    image = LinComb(((fock.k_encode(l), fock.k_encode(r)), c) for (l, r), c in d.items())
    assert image == fock.wqsym_internal_delta(w)


def test_qsym_products():
    assert fock.qsym_quasi_shuffle((1,), (2,)) == LinComb([((1, 2), 1), ((2, 1), 1), ((3,), 1)])
    assert fock.qsym_coproduct((1, 2)) == LinComb([(((), (1, 2)), 1), (((1,), (2,)), 1), (((1, 2), ()), 1)])


@pytest.mark.parametrize("q", [2, -1, Fraction(1, 3)])
def test_theta_commutes_with_khat(q):
    for c in laws.comps_on(1, 3):
        lhs = fock.khat_image(setcomp.theta_q(c, q))
        rhs = fock.theta_q_qsym(fock.khat_encode(c), q)
        assert lhs == rhs


@pytest.mark.parametrize("q", [1, -1, 2])
def test_h_turns_theta_into_rescaling(q):
    for c in [(1,), (2, 1), (1, 1, 1)]:
        assert fock.H_lin(fock.theta_q_qsym(c, q)) == fock.H_morphism(c).scale_var(q)


@pytest.mark.parametrize("g", [g for n in range(4) for g in laws.graphs_on(1, n)], ids=graphs.render)
def test_chromatic_polynomial_two_ways(g):
    assert fock.chromatic_via_lambda(g) == fock.chromatic_polynomial(g)


@pytest.mark.parametrize("q", [2, -1, Fraction(1, 2)])
def test_deformed_polynomials_rescale(q):
    # P_q(X) = q^n P_1(X / q)
    g = graph(["A", "B", "C"], ["AB", "AC"])
    assert fock.chromatic_polynomial(g, q) == fock.chromatic_polynomial(g).scale_var(1 / Fraction(q)) * Fraction(q) ** 3
    t = top(["A", "B", "C"], ["AB", "BC"])
    assert fock.ehrhart_polynomial(t, q) == fock.ehrhart_polynomial(t).scale_var(1 / Fraction(q)) * Fraction(q) ** 3


def test_canonical_class_identifies_isomorphic_graphs():
    a = graphs.make([[1], [2, 3]], [(0, 1)])
    b = graphs.make([[3], [1, 2]], [(0, 1)])
    c = graphs.make([[1, 2, 3]])
    assert fock.canonical_class(a) == fock.canonical_class(b) != fock.canonical_class(c)
    s, t = top(["A", "B"], ["AB"]), top(["B", "A"], ["BA"])
    assert fock.canonical_class(s) == fock.canonical_class(t)
    with pytest.raises(DomainError):
        fock.canonical_class("x")
    with pytest.raises(CapacityError):
        fock.canonical_class(graphs.make([[i] for i in range(fock.CANONICAL_CAP + 1)]))


def test_canonical_image_merges_isomorphic_terms():
    a = graphs.make([[1], [2, 3]], [(0, 1)])
    b = graphs.make([[3], [1, 2]], [(0, 1)])
    assert len(fock.canonical_image(LinComb([(a, 1), (b, 1)]))) == 1
