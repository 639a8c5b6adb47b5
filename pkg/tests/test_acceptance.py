"""The four acceptance criteria, with exact rational equality throughout.

Each criterion is one test; it also leaves a PASS/FAIL line in the session
summary.  Running this file as a script prints the same lines.
"""
from fractions import Fraction
from itertools import product

import pytest

from helpers import ACCEPTANCE_LINES, comp, graph, lc, top
from twistbialg import fock, graphs, laws, setcomp, topology
from twistbialg.fock import Polynomial
from twistbialg.lincomb import LinComb

F = Fraction
X = Polynomial.x()

SINGLE_G = graph(["A"])
EDGE_G = graph(["A", "B"], ["AB"])
STAR_G = graph(["A", "B", "C"], ["AB", "AC"])  # A is the centre
PATH_G = graph(["A", "B", "C"], ["AB", "BC"])

SINGLE_T = top(["A"])
CHAIN2_T = top(["A", "B"], ["AB"])
V_T = top(["A", "B", "C"], ["AB", "AC"])  # A below both B and C
CHAIN3_T = top(["A", "B", "C"], ["AB", "BC"])

QS = (F(2), F(-1), F(1, 2), F(3), F(-2, 3))


def pairs(*terms):
    """Tensor-square elements: pairs(("x", "y"), (2, ("x", "y")), ...)."""
    out = []
    for t in terms:
        if isinstance(t[0], (int, Fraction)):
            out.append((t[1], t[0]))
        else:
            out.append((t, 1))
    return LinComb(out)


def as_lc(cop):
    return LinComb((p, 1) for p in cop)


def G(*blocks, edges=()):
    return graph(list(blocks), list(edges))


def T(*classes, rel=()):
    return top(list(classes), list(rel))


# -- criterion 1 ---------------------------------------------------------------

def quasi_shuffle_examples():
    qsh = setcomp.quasi_shuffle
    yield "(A)⊎(B)", qsh(comp("A"), comp("B")) == lc(comp("A", "B"), comp("B", "A"), comp("AB"))
    # the fifth term is (A⊔C, B); (A⊔B, C) would merge two letters of the same word
    five = lc(comp("A", "B", "C"), comp("A", "C", "B"), comp("C", "A", "B"), comp("AC", "B"), comp("A", "BC"))
    yield "(A,B)⊎(C)", qsh(comp("A", "B"), comp("C")) == five and len(five) == 5
    thirteen = lc(
        comp("A", "B", "C", "D"), comp("A", "C", "B", "D"), comp("C", "A", "B", "D"),
        comp("A", "C", "D", "B"), comp("C", "A", "D", "B"), comp("C", "D", "A", "B"),
        comp("A", "BC", "D"), comp("AC", "B", "D"), comp("AC", "D", "B"),
        comp("A", "C", "BD"), comp("C", "A", "BD"), comp("C", "AD", "B"),
        comp("AC", "BD"),
    )
    yield "(A,B)⊎(C,D)", qsh(comp("A", "B"), comp("C", "D")) == thirteen and len(thirteen) == 13


def comp_delta_examples():
    d, q = setcomp.internal_delta, setcomp.qs_product
    yield "δ(A)", d(comp("A")) == pairs((comp("A"), comp("A")))
    expect = LinComb(((comp("A", "B"), k), c) for k, c in q(comp("A"), comp("B")).items()) + pairs((comp("AB"), comp("A", "B")))
    yield "δ(A,B)", d(comp("A", "B")) == expect
    expect = (
        LinComb(((comp("A", "B", "C"), k), c) for k, c in q(comp("A"), comp("B"), comp("C")).items())
        + LinComb(((comp("A", "BC"), k), c) for k, c in q(comp("A"), comp("B", "C")).items())
        + LinComb(((comp("AB", "C"), k), c) for k, c in q(comp("A", "B"), comp("C")).items())
        + pairs((comp("ABC"), comp("A", "B", "C")))
    )
    yield "δ(A,B,C)", d(comp("A", "B", "C")) == expect


def graph_examples():
    one = graphs.EMPTY
    cop = lambda g: as_lc(graphs.coproduct(g))
    yield "Gr' Δ(single)", cop(SINGLE_G) == pairs((G("A"), one), (one, G("A")))
    yield "Gr' Δ(edge)", cop(EDGE_G) == pairs((EDGE_G, one), (G("A"), G("B")), (G("B"), G("A")), (one, EDGE_G))
    yield "Gr' Δ(star)", cop(STAR_G) == pairs(
        (STAR_G, one), (G("A", "B", edges=["AB"]), G("C")), (G("A", "C", edges=["AC"]), G("B")),
        (G("B", "C"), G("A")), (G("C"), G("A", "B", edges=["AB"])), (G("B"), G("A", "C", edges=["AC"])),
        (G("A"), G("B", "C")), (one, STAR_G),
    )
    split = lambda g, i: graphs.split(g, frozenset(i), graphs.ground(g) - frozenset(i))
    path_splits = {
        "A": (G("A"), G("B", "C", edges=["BC"])),
        "BC": (G("B", "C", edges=["BC"]), G("A")),
        "B": (G("B"), G("A", "C")),
        "AC": (G("A", "C"), G("B")),
        "C": (G("C"), G("A", "B", edges=["AB"])),
        "AB": (G("A", "B", edges=["AB"]), G("C")),
    }
    yield "Gr' Δ_{I,J}(path)", all(split(PATH_G, i) == v for i, v in path_splits.items())
    d = graphs.internal_delta
    yield "Gr' δ(single)", d(SINGLE_G) == pairs((SINGLE_G, SINGLE_G))
    yield "Gr' δ(edge)", d(EDGE_G) == pairs((EDGE_G, G("A", "B")), (G("AB"), EDGE_G))
    yield "Gr' δ(star)", d(STAR_G) == pairs(
        (STAR_G, G("A", "B", "C")),
        (G("AB", "C", edges=["AC"]), G("A", "B", "C", edges=["AB"])),
        (G("AC", "B", edges=["AB"]), G("A", "B", "C", edges=["AC"])),
        (G("ABC"), STAR_G),
    )


def top_examples():
    one = topology.EMPTY
    cop = lambda t: as_lc(topology.coproduct(t))
    yield "Top Δ(single)", cop(SINGLE_T) == pairs((SINGLE_T, one), (one, SINGLE_T))
    yield "Top Δ(chain2)", cop(CHAIN2_T) == pairs((CHAIN2_T, one), (T("A"), T("B")), (one, CHAIN2_T))
    yield "Top Δ(V)", cop(V_T) == pairs(
        (V_T, one), (T("A", "B", rel=["AB"]), T("C")), (T("A", "C", rel=["AC"]), T("B")),
        (T("A"), T("B", "C")), (one, V_T),
    )
    yield "Top Δ(chain3)", cop(CHAIN3_T) == pairs(
        (CHAIN3_T, one), (T("A", "B", rel=["AB"]), T("C")), (T("A"), T("B", "C", rel=["BC"])), (one, CHAIN3_T),
    )
    split = lambda t, i: topology.delta_split(t, frozenset(i), topology.ground(t) - frozenset(i))
    chain_splits = {
        "A": (T("A"), T("B", "C", rel=["BC"])), "BC": None, "B": None, "AC": None, "C": None,
        "AB": (T("A", "B", rel=["AB"]), T("C")),
    }
    yield "Top Δ_{I,J}(chain3)", all(split(CHAIN3_T, i) == v for i, v in chain_splits.items())
    d = topology.internal_delta
    yield "Top δ(single)", d(SINGLE_T) == pairs((SINGLE_T, SINGLE_T))
    yield "Top δ(chain2)", d(CHAIN2_T) == pairs((CHAIN2_T, T("A", "B")), (T("AB"), CHAIN2_T))
    yield "Top δ(V)", d(V_T) == pairs(
        (V_T, T("A", "B", "C")),
        (T("AB", "C", rel=["AC"]), T("A", "B", "C", rel=["AB"])),
        (T("AC", "B", rel=["AB"]), T("A", "B", "C", rel=["AC"])),
        (T("ABC"), V_T),
    )
    yield "Top δ(chain3)", d(CHAIN3_T) == pairs(
        (CHAIN3_T, T("A", "B", "C")),
        (T("AB", "C", rel=["AC"]), T("A", "B", "C", rel=["AB"])),
        (T("A", "BC", rel=["AB"]), T("A", "B", "C", rel=["BC"])),
        (T("ABC"), CHAIN3_T),
    )


PERMS3 = [comp(*p) for p in ("ABC", "ACB", "BAC", "BCA", "CAB", "CBA")]


def morphism_examples():
    yield "φ_chr(single)", graphs.phi_chr(SINGLE_G) == lc(comp("A"))
    yield "φ_chr(edge)", graphs.phi_chr(EDGE_G) == lc(comp("A", "B"), comp("B", "A"))
    yield "φ_chr(path)", graphs.phi_chr(PATH_G) == lc(*PERMS3, comp("AC", "B"), comp("B", "AC"))
    yield "φ_chr(star)", graphs.phi_chr(STAR_G) == lc(*PERMS3, comp("BC", "A"), comp("A", "BC"))
    yield "φ_ehr(single)", topology.phi_ehr(SINGLE_T) == lc(comp("A"))
    yield "φ_ehr(chain2)", topology.phi_ehr(CHAIN2_T) == lc(comp("A", "B"))
    yield "φ_ehr(V)", topology.phi_ehr(V_T) == lc(comp("A", "B", "C"), comp("A", "C", "B"), comp("A", "BC"))
    yield "φ_ehr(chain3)", topology.phi_ehr(CHAIN3_T) == lc(comp("A", "B", "C"))
    phi1 = topology.phi_hom_top
    yield "φ_1(single)", phi1(SINGLE_T) == lc(comp("A"))
    yield "φ_1(chain2)", phi1(CHAIN2_T) == lc(comp("A", "B"), (F(1, 2), comp("AB")))
    yield "φ_1(V)", phi1(V_T) == lc(
        comp("A", "B", "C"), comp("A", "C", "B"), comp("A", "BC"),
        (F(1, 2), comp("AB", "C")), (F(1, 2), comp("AC", "B")), (F(1, 3), comp("ABC")),
    )
    yield "φ_1(chain3)", phi1(CHAIN3_T) == lc(
        comp("A", "B", "C"), (F(1, 2), comp("A", "BC")), (F(1, 2), comp("AB", "C")), (F(1, 6), comp("ABC")),
    )


def theta_examples():
    """θ_q on (A), (A,B), (A,B,C), (A,B,C,D); keys list the merged runs."""
    H = lambda n, q: {1: q, 2: q * (q - 1) / 2, 3: q * (q - 1) * (q - 2) / 6,
                      4: q * (q - 1) * (q - 2) * (q - 3) / 24}[n]
    table = {
        1: {("A",): lambda q: q},
        2: {("A", "B"): lambda q: q ** 2, ("AB",): lambda q: q * (q - 1) / 2},
        3: {("A", "B", "C"): lambda q: q ** 3,
            ("AB", "C"): lambda q: q ** 2 * (q - 1) / 2,
            ("A", "BC"): lambda q: q ** 2 * (q - 1) / 2,
            ("ABC",): lambda q: q * (q - 1) * (q - 2) / 6},
        # one merged pair among four blocks carries q^3 (q-1)/2, not q^2 (q-1)/2
        4: {("A", "B", "C", "D"): lambda q: q ** 4,
            ("AB", "C", "D"): lambda q: q ** 3 * (q - 1) / 2,
            ("A", "BC", "D"): lambda q: q ** 3 * (q - 1) / 2,
            ("A", "B", "CD"): lambda q: q ** 3 * (q - 1) / 2,
            ("AB", "CD"): lambda q: q ** 2 * (q - 1) ** 2 / 4,
            ("ABC", "D"): lambda q: q ** 2 * (q - 1) * (q - 2) / 6,
            ("A", "BCD"): lambda q: q ** 2 * (q - 1) * (q - 2) / 6,
            ("ABCD",): lambda q: H(4, q)},
    }
    for n, rows in table.items():
        source = comp(*"ABCD"[:n])
        ok = all(
            setcomp.theta_q(source, q) == LinComb((comp(*k), f(q)) for k, f in rows.items())
            for q in QS
        )
        yield f"θ_q length {n}", ok


def deformed_examples():
    def chr_q(q):
        return {
            "single": lc(comp("A")),
            "edge": lc(comp("A", "B"), comp("B", "A"), (1 - q, comp("AB"))),
            # full merge: (1-q)^2 by deletion-contraction, not 2(1-q)
            "star": lc(*PERMS3,
                       (1 - q, comp("AB", "C")), (1 - q, comp("AC", "B")), comp("BC", "A"),
                       (1 - q, comp("C", "AB")), (1 - q, comp("B", "AC")), comp("A", "BC"),
                       ((1 - q) ** 2, comp("ABC"))),
        }

    def ehr_q(q):
        return {
            "single": lc(comp("A")),
            "chain2": lc(comp("A", "B"), ((1 - q) / 2, comp("AB"))),
            "V": lc(comp("A", "B", "C"), comp("A", "C", "B"), comp("A", "BC"),
                    ((1 - q) / 2, comp("AB", "C")), ((1 - q) / 2, comp("AC", "B")),
                    ((1 - q) * (2 - q) / 6, comp("ABC"))),
            # full merge: (1-q)(1-2q)/6, not (1-q)(2-q)/6; at q = 0 it must match φ_1
            "chain3": lc(comp("A", "B", "C"), ((1 - q) / 2, comp("A", "BC")), ((1 - q) / 2, comp("AB", "C")),
                         ((1 - q) * (1 - 2 * q) / 6, comp("ABC"))),
        }

    gs = {"single": SINGLE_G, "edge": EDGE_G, "star": STAR_G}
    ts = {"single": SINGLE_T, "chain2": CHAIN2_T, "V": V_T, "chain3": CHAIN3_T}
    for name, g in gs.items():
        yield f"φ_chr_q({name})", all(graphs.phi_chr_q(g, q) == chr_q(q)[name] for q in QS)
    for name, t in ts.items():
        yield f"φ_ehr_q({name})", all(topology.phi_ehr_q(t, q) == ehr_q(q)[name] for q in QS)
    phi_q = lambda g, q: graphs.phi_hom(g, lambda n: q if n == 1 else 0)
    yield "φ_q(star)", all(
        phi_q(STAR_G, q) == setcomp.qs_product(comp("A"), comp("B"), comp("C")) * q ** 3 for q in QS
    ) and len(phi_q(STAR_G, F(2))) == 13


def wqsym_examples():
    P = fock.wqsym_product
    yield "(11)⊎(11)", P((1, 1), (1, 1)) == lc((1, 1, 2, 2), (2, 2, 1, 1), (1, 1, 1, 1))
    yield "(12)⊎(11)", P((1, 2), (1, 1)) == lc((1, 2, 3, 3), (1, 3, 2, 2), (2, 3, 1, 1), (1, 2, 1, 1), (1, 2, 2, 2))
    yield "Δ((1123))", fock.wqsym_coproduct((1, 1, 2, 3)) == pairs(
        ((), (1, 1, 2, 3)), ((1, 1), (1, 2)), ((1, 1, 2), (1,)), ((1, 1, 2, 3), ()))
    yield "δ((11))", fock.wqsym_internal_delta((1, 1)) == pairs(((1, 1), (1, 1)))
    yield "δ((12))", fock.wqsym_internal_delta((1, 2)) == pairs(
        ((1, 2), (1, 2)), ((1, 2), (2, 1)), ((1, 2), (1, 1)), ((1, 1), (1, 2)))


def words(*ws):
    return LinComb((tuple(int(ch) for ch in w), 1) for w in ws)


def fock_examples():
    g1 = graphs.make([[1]])
    g2 = graphs.make([[1, 3], [2]], [(0, 1)])
    g3 = graphs.make([[1, 4], [2], [3]], [(0, 1), (0, 2)])
    K = lambda x: fock.k_image(x)
    yield "K(φ_chr_1)(single)", K(graphs.phi_chr(g1)) == words("1")
    yield "K(φ_chr_1)(edge)", K(graphs.phi_chr(g2)) == words("121", "212")
    yield "K(φ_chr_1)(star)", K(graphs.phi_chr(g3)) == words(
        "1231", "1321", "2132", "2312", "3123", "3213", "1221", "2112")
    t1 = topology.make([[1]])
    t2 = topology.make([[1, 3], [2]], [(0, 1)])
    t3 = topology.make([[1, 4], [2], [3]], [(0, 1), (0, 2)])
    t4 = topology.make([[1, 3], [4], [2]], [(0, 1), (1, 2)])
    E = lambda t, q=1: K(topology.phi_ehr_q(t, q))
    yield "K(φ_ehr_1)(single)", E(t1) == words("1")
    yield "K(φ_ehr_1)(chain2)", E(t2) == words("121")
    yield "K(φ_ehr_1)(V)", E(t3) == words("1231", "1321", "1221")
    yield "K(φ_ehr_1)(chain3)", E(t4) == words("1312")
    yield "K(φ_ehr_-1)(single)", E(t1, -1) == words("1")
    yield "K(φ_ehr_-1)(chain2)", E(t2, -1) == words("121", "111")
    yield "K(φ_ehr_-1)(V)", E(t3, -1) == words("1231", "1321", "1221", "1211", "1121", "1111")
    # merging {4} with {2} packs to 1212; the word 1221 cannot arise from this chain
    yield "K(φ_ehr_-1)(chain3)", E(t4, -1) == words("1312", "1211", "1212", "1111")


def criterion_1():
    for gen in (quasi_shuffle_examples, comp_delta_examples, graph_examples, top_examples,
                morphism_examples, theta_examples, deformed_examples, wqsym_examples, fock_examples):
        yield from gen()


# -- criterion 2 ---------------------------------------------------------------

def criterion_2():
    P = fock.chromatic_polynomial
    yield "P_chr_1(single) = X", P(SINGLE_G) == X
    yield "P_chr_1(edge) = X(X-1)", P(EDGE_G) == X * (X - 1)
    yield "P_chr_1(star) = X(X-1)^2", P(STAR_G) == X * (X - 1) * (X - 1)
    E = fock.ehrhart_polynomial
    for sign, q in (("-", 1), ("+", -1)):
        s = -q  # X(X∓1): the shift is -1 for q = 1 and +1 for q = -1
        yield f"P_ehr_{q}(single) = X", E(SINGLE_T, q) == X
        yield f"P_ehr_{q}(chain2) = X(X{sign}1)/2", E(CHAIN2_T, q) == X * (X + s) * F(1, 2)
        yield f"P_ehr_{q}(V) = X(X{sign}1)(2X{sign}1)/6", E(V_T, q) == X * (X + s) * (2 * X + s) * F(1, 6)
        yield f"P_ehr_{q}(chain3) = X(X{sign}1)(X{sign}2)/6", E(CHAIN3_T, q) == X * (X + s) * (X + 2 * s) * F(1, 6)


# -- criterion 3: independent brute force ------------------------------------------

def brute_colorings(g, k):
    n = graphs.deg(g)
    return sum(all(c[a] != c[b] for a, b in g.edges) for c in product(range(k), repeat=n))


def brute_monotone(t, k, strict):
    n = topology.cl(t)
    less = [(a, b) for a in range(n) for b in range(n) if a != b and topology.reach(t)[a][b]]
    if strict:
        return sum(all(f[a] < f[b] for a, b in less) for f in product(range(k), repeat=n))
    return sum(all(f[a] <= f[b] for a, b in less) for f in product(range(k), repeat=n))


def brute_acyclic(g):
    n, edges = graphs.deg(g), g.edges
    count = 0
    for flips in product((False, True), repeat=len(edges)):
        arcs = [(b, a) if f else (a, b) for (a, b), f in zip(edges, flips)]
        indeg = [0] * n
        for _, b in arcs:
            indeg[b] += 1
        stack = [v for v in range(n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for a, b in arcs:
                if a == v:
                    indeg[b] -= 1
                    if indeg[b] == 0:
                        stack.append(b)
        count += seen == n
    return count


def criterion_3():
    gs = [g for n in range(5) for g in laws.graphs_on(1, n)]
    ts = [t for n in range(5) for t in laws.tops_on(1, n)]
    ok = all(fock.chromatic_polynomial(g)(k) == brute_colorings(g, k) for g in gs for k in range(6))
    yield f"P_chr_1 = proper colorings ({len(gs)} graphs, k ≤ 5)", ok
    ok = all(fock.ehrhart_polynomial(t, 1)(k) == brute_monotone(t, k, True) for t in ts for k in range(6))
    yield f"P_ehr_1 = strict monotone maps ({len(ts)} quasi-posets, k ≤ 5)", ok
    ok = all(fock.ehrhart_polynomial(t, -1)(k) == brute_monotone(t, k, False) for t in ts for k in range(6))
    yield f"P_ehr_-1 = weak monotone maps ({len(ts)} quasi-posets, k ≤ 5)", ok
    ok = all(graphs.ao_count(g) == graphs.ao_count_dc(g) == brute_acyclic(g) for g in gs)
    yield f"ao_count = deletion-contraction ({len(gs)} graphs)", ok


# -- criterion 4 ---------------------------------------------------------------------

def criterion_4():
    for r in laws.run_all(4):
        detail = r.name if r.passed else f"{r.name}: counterexample {r.counterexample} {r.error or ''}"
        yield detail, r.passed


CRITERIA = {
    1: ("worked-example fidelity", criterion_1),
    2: ("polynomial tables", criterion_2),
    3: ("oracle equivalence", criterion_3),
    4: ("law suite, grounds of size ≤ 4", criterion_4),
}


def evaluate(number):
    title, gen = CRITERIA[number]
    checks = list(gen())
    failed = [name for name, ok in checks if not ok]
    status = "PASS" if not failed else "FAIL"
    line = f"{status} criterion {number}: {title} ({len(checks) - len(failed)}/{len(checks)} checks)"
    if failed:
        line += " | failing: " + "; ".join(failed)
    return line, failed


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_acceptance_criterion(number):
    line, failed = evaluate(number)
    ACCEPTANCE_LINES[f"{number}"] = line
    print(line)
    assert not failed, line


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        print(evaluate(n)[0])
