from fractions import Fraction

import pytest

from helpers import comp, lc, top
from twistbialg import fock, laws, setcomp, topology
from twistbialg.errors import DomainError
from twistbialg.lincomb import LinComb

SMALL = [t for n in range(4) for t in laws.tops_on(1, n)]


def test_make_reduces_to_covers():
    t = topology.make([[1], [2], [3]], [(0, 1), (1, 2), (0, 2)])
    assert t.covers == ((0, 1), (1, 2))
    assert topology.strict_pairs(t) == [(0, 1), (0, 2), (1, 2)]
    assert t == topology.chain(1, 2, 3)


def test_cycles_are_named():
    with pytest.raises(DomainError, match=r"cyclic covers: \{1\} < \{2\} < \{3\} < \{1\}"):
        topology.make([[1], [2], [3]], [(0, 1), (1, 2), (2, 0)])


@pytest.mark.parametrize("classes, rel, msg", [
    ([[1], []], [], "nonempty"),
    ([[1, 2], [2]], [], "label 2"),
    ([[1], [2]], [(0, 0)], "itself"),
    ([[1], [2]], [(0, 3)], "missing class"),
])
def test_make_rejects_bad_input(classes, rel, msg):
    with pytest.raises(DomainError, match=msg):
        topology.make(classes, rel)


def test_json_round_trip():
    for t in SMALL:
        assert topology.from_json(topology.to_json(t)) == t
    with pytest.raises(DomainError):
        topology.from_json({"classes": [[1, 1]]})
    with pytest.raises(DomainError):
        topology.from_json({"covers": []})


def test_open_sets_are_upward_closed():
    v = top(["A", "B", "C"], ["AB", "AC"])
    assert topology.open_sets(v) == ((), (1,), (2,), (1, 2), (0, 1, 2))


def test_split_needs_an_open_right_factor():
    chain = top(["A", "B"], ["AB"])
    assert topology.delta_split(chain, "A", "B") == (top(["A"]), top(["B"]))
    assert topology.delta_split(chain, "B", "A") is None
    assert topology.delta_split(top(["AB"]), "A", "B") is None
    with pytest.raises(DomainError):
        topology.delta_split(chain, "A", "A")


def test_joint_product():
    s, t = top(["A"]), top(["B", "C"])
    assert topology.joint_product(s, t) == top(["A", "B", "C"], ["AB", "AC"])
    with pytest.raises(DomainError):
        topology.joint_product(s, s)


def test_compatible_equivalences_of_the_chain():
    # the non-adjacent pair {A, C} of a 3-chain is not connected once B is removed
    chain = top(["A", "B", "C"], ["AB", "BC"])
    assert len(topology.compatible_equivalences(chain)) == 4
    with pytest.raises(DomainError):
        topology.quotient(chain, [(0, 2), (1,)])


def test_incomparable_classes_may_not_merge():
    assert len(topology.compatible_equivalences(top(["A", "B"]))) == 1


@pytest.mark.parametrize("t", SMALL, ids=topology.render)
def test_extension_counts(t):
    assert sum(topology.phi_ehr(t).values()) == len(topology.strict_extensions(t))
    assert topology.phi_ehr_q(t, 1) == topology.phi_ehr(t)
    assert topology.phi_ehr_q(t, 0) == topology.phi_hom_top(t)
    assert topology.phi_ehr_q(t, -1) == topology.phi_weak(t)


@pytest.mark.parametrize("t", SMALL, ids=topology.render)
def test_gamma_inverse(t):
    x = LinComb.basis(t)
    assert x.apply(topology.gamma_inv).apply(topology.gamma) == x


@pytest.mark.parametrize("t", SMALL, ids=topology.render)
def test_ehrhart_reciprocity(t):
    # P_{-1}(T)(X) = (-1)^cl P_1(T)(-X)
    p1, pm = fock.ehrhart_polynomial(t, 1), fock.ehrhart_polynomial(t, -1)
    for x in range(-3, 4):
        assert pm(x) == (-1) ** topology.cl(t) * p1(-x)


def test_heap_orders():
    assert topology.heap_order_count(topology.EMPTY) == 1
    assert topology.heap_order_count(top(["A", "B", "C"], ["AB", "AC"])) == 2
    assert topology.heap_order_count(top(["A", "B", "C"])) == 6
    assert topology.lambda_ho(top(["A", "B"], ["AB"])) == Fraction(1, 2)


def test_gamma_of_a_chain():
    chain = top(["A", "B"], ["AB"])
    assert topology.gamma(chain) == lc(chain, top(["AB"]))
    assert topology.gamma_inv(chain) == lc(chain, (-1, top(["AB"])))


def test_phi_weak_of_a_chain():
    assert topology.phi_weak(top(["A", "B"], ["AB"])) == lc(comp("A", "B"), comp("AB"))


def test_counts_on_four_labels():
    assert [len(laws.tops_on(1, n)) for n in range(5)] == [1, 1, 4, 29, 355]


def test_render():
    assert topology.render(topology.chain([1, 3], 2)) == "{1,3} {2} | {1,3}<{2}"


def test_term_counts_on_small_topologies(small_tops):
    assert {name: len(topology.phi_ehr(t)) for name, t in small_tops.items()} == {
        "single": 1, "chain2": 1, "V": 3, "chain3": 1}
    assert {name: len(topology.coproduct(t)) for name, t in small_tops.items()} == {
        "single": 2, "chain2": 3, "V": 5, "chain3": 4}
