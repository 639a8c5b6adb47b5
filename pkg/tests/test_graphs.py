from math import factorial

import pytest

from helpers import comp, graph, lc
from twistbialg import fock, graphs, laws, setcomp
from twistbialg.errors import DomainError
from twistbialg.lincomb import LinComb

SMALL = [g for n in range(4) for g in laws.graphs_on(1, n)]


def complete(n):
    return graphs.make([[i] for i in range(n)], [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_make_canonicalizes_vertex_order():
    g = graphs.make([[3], [1, 2]], [(1, 0)])
    assert g.blocks == ((1, 2), (3,))
    assert g.edges == ((0, 1),)
    assert g == graphs.make([[2, 1], [3]], [(0, 1), (1, 0)])


@pytest.mark.parametrize("blocks, edges, msg", [
    ([[1], []], [], "nonempty"),
    ([[1, 2], [2]], [], "label 2"),
    ([[1], [2]], [(0, 0)], "loop"),
    ([[1], [2]], [(0, 5)], "missing vertex"),
])
def test_make_rejects_bad_input(blocks, edges, msg):
    with pytest.raises(DomainError, match=msg):
        graphs.make(blocks, edges)


def test_from_json_validation():
    assert graphs.from_json({"blocks": [[1], [2]], "edges": [[0, 1]]}) == graphs.make([[1], [2]], [(0, 1)])
    for bad in ([[1]], {"edges": []}, {"blocks": [[1, 1]]}, {"blocks": [[1], [2]], "edges": [[0, 1], [1, 0]]},
                {"blocks": [[1], [2]], "edges": [["a", 1]]}):
        with pytest.raises(DomainError):
            graphs.from_json(bad)


def test_json_round_trip():
    for g in SMALL:
        assert graphs.from_json(graphs.to_json(g)) == g


def test_components_and_split():
    g = graph(["A", "B", "C", "D"], ["AB"])
    assert graphs.cc(g) == 3
    assert graphs.split(g, frozenset("AB"), frozenset("CD")) == (graph(["A", "B"], ["AB"]), graph(["C", "D"]))
    assert graphs.split(g, frozenset("A"), frozenset("BCD")) == (graph(["A"]), graph(["B", "C", "D"]))
    with pytest.raises(DomainError):
        graphs.split(g, frozenset("AB"), frozenset("C"))


def test_split_inside_a_block_is_zero():
    g = graph(["AB", "C"])
    assert graphs.split(g, frozenset("A"), frozenset("BC")) is None


def test_admissible_equivalences_of_the_path():
    # 5 set partitions of three vertices; {A, C} alone is disconnected
    assert len(graphs.admissible_equivalences(graph(["A", "B", "C"], ["AB", "BC"]))) == 4
    with pytest.raises(DomainError, match="disconnected"):
        graphs.contract(graph(["A", "B", "C"], ["AB", "BC"]), [(0, 2), (1,)])


@pytest.mark.parametrize("n", range(1, 6))
def test_acyclic_orientations_of_complete_graphs(n):
    assert graphs.ao_count(complete(n)) == graphs.ao_count_dc(complete(n)) == factorial(n)


@pytest.mark.parametrize("g", SMALL, ids=graphs.render)
def test_chromatic_deletion_contraction(g):
    p = fock.chromatic_polynomial
    for e in g.edges:
        assert p(g) == p(graphs.delete_edge(g, e)) - p(graphs.contract_edge(g, e))


@pytest.mark.parametrize("g", SMALL, ids=graphs.render)
def test_phi_chr_counts_valid_colourings(g):
    assert sum(graphs.phi_chr(g).values()) == len(graphs.valid_colorations(g))
    assert graphs.phi_chr_q(g, 1) == graphs.phi_chr(g)
    assert graphs.phi_chr_q(g, 0) == graphs.phi_hom(g)


def test_phi_chr_is_multiplicative_on_an_example():
    g, h = graph(["A", "B"], ["AB"]), graph(["C"])
    assert graphs.phi_chr(graphs.disjoint_union(g, h)) == setcomp.qs_lin(graphs.phi_chr(g), graphs.phi_chr(h))


def test_phi_hom_weights():
    g = graph(["AB", "C"])
    assert graphs.phi_hom(g, [2, 5]) == setcomp.qs_product(comp("AB"), comp("C")) * 10
    assert graphs.phi_hom(g, lambda n: int(n == 1)) == 0


@pytest.mark.parametrize("g", SMALL, ids=graphs.render)
def test_gamma_inverse(g):
    assert LinComb.basis(g).apply(graphs.gamma_inv).apply(graphs.gamma) == LinComb.basis(g)
    assert LinComb.basis(g).apply(graphs.gamma).apply(graphs.gamma_inv) == LinComb.basis(g)


def test_gamma_of_an_edge():
    edge = graph(["A", "B"], ["AB"])
    assert graphs.gamma(edge) == lc(edge, (2, graph(["AB"])))
    assert graphs.gamma_inv(edge) == lc(edge, (-2, graph(["AB"])))


def test_counits():
    assert graphs.eps(graphs.EMPTY) == 1
    assert graphs.eps(graph(["A"])) == 0
    assert graphs.eps_prime(graph(["A", "B"])) == 1
    assert graphs.eps_prime(graph(["A", "B"], ["AB"])) == 0


def test_all_graphs_counts():
    assert [len(laws.graphs_on(1, n)) for n in range(5)] == [1, 1, 3, 15, 127]


def test_render():
    assert graphs.render(graphs.make([[1, 3], [2]], [(0, 1)])) == "{1,3} {2} | {1,3}-{2}"
    assert graphs.ao_count(graphs.EMPTY) == 1


def test_term_counts_on_small_graphs(small_graphs):
    counts = {name: len(graphs.phi_chr(g)) for name, g in small_graphs.items()}
    assert counts == {"single": 1, "edge": 2, "star": 8, "path": 8}
    assert {name: len(graphs.internal_delta(g)) for name, g in small_graphs.items()} == {
        "single": 1, "edge": 2, "star": 4, "path": 4}
