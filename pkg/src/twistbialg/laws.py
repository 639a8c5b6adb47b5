"""Exhaustive identity checks on small instances.

Each law is a generator of ``(ok, case)`` pairs, producing cases in order of
increasing ground-set size.  :func:`run_law` stops at the first failure, so the
reported counterexample is a smallest one.  The same registry backs the test
suite and ``twistbialg check``.
"""
from __future__ import annotations

import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Any

from . import characters as C
from . import fock, graphs, kernels, setcomp, topology
from .characters import Bialgebra
from .lincomb import LinComb, lc_sum

Cases = Iterator[tuple[bool, Any]]


# -- instance families ----------------------------------------------------

def labels(lo: int, hi: int) -> list[int]:
    return list(range(lo, hi + 1))


@lru_cache(maxsize=None)
def comps_on(lo: int, hi: int) -> tuple:
    return tuple(setcomp.set_compositions(labels(lo, hi)))


@lru_cache(maxsize=None)
def graphs_on(lo: int, hi: int) -> tuple:
    return tuple(graphs.all_graphs(labels(lo, hi)))


@lru_cache(maxsize=None)
def tops_on(lo: int, hi: int) -> tuple:
    return tuple(topology.all_quasiposets(labels(lo, hi)))


FAMILIES: dict[str, Callable[[int, int], tuple]] = {
    "Comp": comps_on,
    "Gr'": graphs_on,
    "Top": tops_on,
}

DESCRIPTORS: dict[str, Bialgebra] = {"Comp": C.COMP, "Gr'": C.GRAPHS, "Top": C.TOP}


def family(name: str, max_size: int) -> Iterator:
    on = FAMILIES[name]
    for n in range(max_size + 1):
        yield from on(1, n)


def pairs(name: str, max_size: int) -> Iterator[tuple[Any, Any]]:
    on = FAMILIES[name]
    for n in range(max_size + 1):
        for a in range(n + 1):
            for x in on(1, a):
                for y in on(a + 1, n):
                    yield x, y


def subsets(ground) -> Iterator[tuple[frozenset, frozenset]]:
    g = sorted(ground)
    for mask in range(1 << len(g)):
        left = frozenset(x for i, x in enumerate(g) if mask >> i & 1)
        yield left, frozenset(g) - left


def three_splits(ground) -> Iterator[tuple[frozenset, frozenset, frozenset]]:
    g = sorted(ground)
    for assign in product(range(3), repeat=len(g)):
        parts = [frozenset(x for x, a in zip(g, assign) if a == k) for k in range(3)]
        yield parts[0], parts[1], parts[2]


# -- linear helpers ---------------------------------------------------------

def split_lc(B: Bialgebra, x, left, right) -> LinComb:
    cut = B.split(x, left, right)
    return LinComb() if cut is None else LinComb.basis(cut)


def product_lc(B: Bialgebra, X: LinComb, Y: LinComb) -> LinComb:
    return lc_sum(B.product(x, y) * (a * b) for x, a in X.items() for y, b in Y.items())


def product_pairs(B: Bialgebra, X: LinComb, Y: LinComb) -> LinComb:
    """Componentwise product of two tensor-square elements."""
    out = []
    for (x1, x2), a in X.items():
        for (y1, y2), b in Y.items():
            for p1, c1 in B.product(x1, y1).items():
                for p2, c2 in B.product(x2, y2).items():
                    out.append(((p1, p2), a * b * c1 * c2))
    return LinComb(out)


def delta_lc(B: Bialgebra, X: LinComb) -> LinComb:
    return X.apply(B.internal_delta)


# -- generic bialgebra laws -------------------------------------------------

def law_coassoc_Delta(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    for x in family(name, n):
        for i, j, k in three_splits(B.ground(x)):
            lhs = []
            cut = B.split(x, i | j, k)
            if cut is not None:
                inner = B.split(cut[0], i, j)
                if inner is not None:
                    lhs.append((inner + (cut[1],), 1))
            rhs = []
            cut = B.split(x, i, j | k)
            if cut is not None:
                inner = B.split(cut[1], j, k)
                if inner is not None:
                    rhs.append(((cut[0],) + inner, 1))
            yield LinComb(lhs) == LinComb(rhs), (x, sorted(i), sorted(j), sorted(k))


def law_counit_Delta(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    for x in family(name, n):
        g = B.ground(x)
        ok = B.split(x, frozenset(), g) == (B.unit, x) and B.split(x, g, frozenset()) == (x, B.unit)
        yield ok, (x,)


def law_bialgebra(name: str, n: int) -> Cases:
    """Δ_{I,J}(xy) = Δ_{I∩A,J∩A}(x) Δ_{I∩B,J∩B}(y)."""
    B = DESCRIPTORS[name]
    for x, y in pairs(name, n):
        gx, gy = B.ground(x), B.ground(y)
        xy = B.product(x, y)
        for i, j in subsets(gx | gy):
            lhs = lc_sum(split_lc(B, z, i, j) * c for z, c in xy.items())
            rhs = product_pairs(B, split_lc(B, x, i & gx, j & gx), split_lc(B, y, i & gy, j & gy))
            yield lhs == rhs, (x, y, sorted(i))


def law_coassoc_delta(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    for x in family(name, n):
        d = B.internal_delta(x)
        lhs = LinComb(((a1, a2, b), c * c1) for (a, b), c in d.items() for (a1, a2), c1 in B.internal_delta(a).items())
        rhs = LinComb(((a, b1, b2), c * c1) for (a, b), c in d.items() for (b1, b2), c1 in B.internal_delta(b).items())
        yield lhs == rhs, (x,)


def law_counit_delta(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    for x in family(name, n):
        d = B.internal_delta(x)
        left = LinComb((b, c * B.eps_prime(a)) for (a, b), c in d.items())
        right = LinComb((a, c * B.eps_prime(b)) for (a, b), c in d.items())
        yield left == LinComb.basis(x) and right == LinComb.basis(x), (x,)


def law_delta_multiplicative(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    for x, y in pairs(name, n):
        lhs = delta_lc(B, B.product(x, y))
        rhs = product_pairs(B, B.internal_delta(x), B.internal_delta(y))
        yield lhs == rhs, (x, y)


def law_eps_prime_multiplicative(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    for x, y in pairs(name, n):
        yield B.product(x, y).evaluate(B.eps_prime) == B.eps_prime(x) * B.eps_prime(y), (x, y)


def law_cointeraction(name: str, n: int) -> Cases:
    """(Δ_{I,J} ⊗ Id)∘δ = m_{1,3,24}∘(δ ⊗ δ)∘Δ_{I,J}."""
    B = DESCRIPTORS[name]
    for x in family(name, n):
        d = B.internal_delta(x)
        for i, j in subsets(B.ground(x)):
            lhs = []
            for (a, b), c in d.items():
                cut = B.split(a, i, j)
                if cut is not None:
                    lhs.append(((cut[0], cut[1], b), c))
            rhs = []
            cut = B.split(x, i, j)
            if cut is not None:
                for (p1, p2), c1 in B.internal_delta(cut[0]).items():
                    for (s1, s2), c2 in B.internal_delta(cut[1]).items():
                        for m, c3 in B.product(p2, s2).items():
                            rhs.append(((p1, s1, m), c1 * c2 * c3))
            yield LinComb(lhs) == LinComb(rhs), (x, sorted(i))


def law_counit_Delta_eps_prime(name: str, n: int) -> Cases:
    """ε′ is compatible with Δ: (ε′ ⊗ ε′)∘Δ_{I,J} = ε′ on every split (ε′ is a character)."""
    B = DESCRIPTORS[name]
    for x in family(name, n):
        for i, j in subsets(B.ground(x)):
            cut = B.split(x, i, j)
            if cut is None:
                continue
            # the counit of δ is multiplicative, so ε′(x) must be 0 or the product ε′(x_I)ε′(x_J)
            ok = B.eps_prime(x) == 0 or B.eps_prime(cut[0]) * B.eps_prime(cut[1]) == B.eps_prime(x)
            yield ok, (x, sorted(i))


# -- morphisms into Comp ----------------------------------------------------

def check_morphism(name: str, n: int, phi: Callable[[Any], LinComb], double: bool) -> Cases:
    B = DESCRIPTORS[name]
    for x in family(name, n):
        fx = phi(x)
        for i, j in subsets(B.ground(x)):
            lhs = lc_sum(
                LinComb() if setcomp.deconcat(c, i) is None else LinComb.basis(setcomp.deconcat(c, i)) * v
                for c, v in fx.items()
            )
            cut = B.split(x, i, j)
            rhs = LinComb() if cut is None else LinComb(
                ((a, b), ca * cb) for a, ca in phi(cut[0]).items() for b, cb in phi(cut[1]).items()
            )
            yield lhs == rhs, ("Delta", x, sorted(i))
        if double:
            lhs = fx.apply(setcomp.internal_delta)
            rhs = LinComb(
                ((a, b), c * ca * cb)
                for (l, r), c in B.internal_delta(x).items()
                for a, ca in phi(l).items()
                for b, cb in phi(r).items()
            )
            yield lhs == rhs, ("delta", x)
            yield fx.evaluate(setcomp.eps_prime) == B.eps_prime(x), ("eps'", x)
    for x, y in pairs(name, n):
        lhs = product_lc(B, LinComb.basis(x), LinComb.basis(y)).apply(phi)
        rhs = setcomp.qs_lin(phi(x), phi(y))
        yield lhs == rhs, ("product", x, y)


# -- Comp-specific -----------------------------------------------------------

def law_qsh_assoc_comm(n: int) -> Cases:
    for x, y in pairs("Comp", n):
        yield setcomp.quasi_shuffle(x, y) == setcomp.quasi_shuffle(y, x), ("qsh-comm", x, y)
        yield setcomp.shuffle(x, y) == setcomp.shuffle(y, x), ("sh-comm", x, y)
    for total in range(n + 1):
        for a in range(total + 1):
            for b in range(total - a + 1):
                for x in comps_on(1, a):
                    for y in comps_on(a + 1, a + b):
                        for z in comps_on(a + b + 1, total):
                            l1 = setcomp.qs_lin(setcomp.quasi_shuffle(x, y), LinComb.basis(z))
                            r1 = setcomp.qs_lin(LinComb.basis(x), setcomp.quasi_shuffle(y, z))
                            yield l1 == r1, ("qsh-assoc", x, y, z)
                            sh = lambda X, Y: lc_sum(setcomp.shuffle(p, q) * (u * v) for p, u in X.items() for q, v in Y.items())
                            l2 = sh(setcomp.shuffle(x, y), LinComb.basis(z))
                            r2 = sh(LinComb.basis(x), setcomp.shuffle(y, z))
                            yield l2 == r2, ("sh-assoc", x, y, z)
    for x in family("Comp", n):
        one = LinComb.basis(x)
        ok = setcomp.quasi_shuffle((), x) == one == setcomp.quasi_shuffle(x, ())
        yield ok and setcomp.shuffle((), x) == one, ("unit", x)


def law_delta_cont(n: int) -> Cases:
    for x in family("Comp", n):
        yield setcomp.internal_delta(x) == setcomp.internal_delta_via_cont(x), (x,)


def law_rho(n: int) -> Cases:
    for x, y in pairs("Comp", n):
        lhs = setcomp.rho_iso(setcomp.shuffle(x, y))
        rhs = setcomp.qs_lin(setcomp.rho_iso(x), setcomp.rho_iso(y))
        yield lhs == rhs, ("shuffle-to-qsh", x, y)
    for x in family("Comp", n):
        rx = setcomp.rho_iso(x)
        for i, j in subsets(setcomp.ground(x)):
            lhs = lc_sum(LinComb() if setcomp.deconcat(c, i) is None else LinComb.basis(setcomp.deconcat(c, i)) * v
                         for c, v in rx.items())
            cut = setcomp.deconcat(x, i)
            rhs = LinComb() if cut is None else LinComb(
                ((a, b), ca * cb) for a, ca in setcomp.rho_iso(cut[0]).items() for b, cb in setcomp.rho_iso(cut[1]).items()
            )
            yield lhs == rhs, ("Delta", x, sorted(i))


THETA_QS = (Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3))


def law_theta_group(n: int) -> Cases:
    for x in family("Comp", n):
        for q in THETA_QS:
            for r in THETA_QS:
                lhs = setcomp.theta_q(setcomp.theta_q(x, r), q)
                yield lhs == setcomp.theta_q(x, q * r), (x, str(q), str(r))


# -- graph-specific ------------------------------------------------------------

def law_deletion_contraction(n: int) -> Cases:
    for g in family("Gr'", n):
        for e in g.edges:
            d, c = graphs.delete_edge(g, e), graphs.contract_edge(g, e)
            yield graphs.phi_chr(g) == graphs.phi_chr(d) - graphs.phi_chr(c), ("q=1", g, e)
            for q in (Fraction(2), Fraction(-1), Fraction(1, 2)):
                lhs = graphs.phi_chr_q(g, q)
                yield lhs == graphs.phi_chr_q(d, q) - graphs.phi_chr_q(c, q) * q, (f"q={q}", g, e)


def law_ao_oracle(n: int) -> Cases:
    for g in family("Gr'", n):
        yield graphs.ao_count(g) == graphs.ao_count_dc(g), (g,)
        lam = graphs.phi_chr_q(g, -1).evaluate(setcomp.eps_prime)
        yield lam == graphs.ao_count(g), ("eps'∘phi_{-1}", g)


def law_lambda_chr_inverse(n: int) -> Cases:
    for q in (Fraction(1), Fraction(2), Fraction(-1)):
        inv = C.inverse_star(C.lambda_chr_q(q))
        for g in family("Gr'", n):
            yield inv(g) == q ** (graphs.deg(g) - graphs.cc(g)), (str(q), g)


def law_lambda_ao_inverse(n: int) -> Cases:
    ao = C.lambda_ao()
    inv = C.inverse_star(ao)
    for g in family("Gr'", n):
        yield inv(g) == (-1) ** (graphs.deg(g) + graphs.cc(g)) * ao(g), (g,)


def law_gamma_graphs(n: int) -> Cases:
    B = C.GRAPHS
    ao = C.lambda_ao()
    ident = lambda g: LinComb.basis(g)
    for g in family("Gr'", n):
        yield graphs.lin(graphs.gamma_inv, graphs.gamma(g)) == LinComb.basis(g), ("inv∘gamma", g)
        yield graphs.lin(graphs.gamma, graphs.gamma_inv(g)) == LinComb.basis(g), ("gamma∘inv", g)
        yield graphs.gamma(g) == C.act_left(ident, ao, g, B), ("Id<-ao", g)
        yield graphs.phi_chr_q(g, -1) == graphs.gamma(g).apply(graphs.phi_chr), ("phi_-1", g)


# -- topology-specific ---------------------------------------------------------

def law_phi_minus_one(n: int) -> Cases:
    for t in family("Top", n):
        f = topology.phi_ehr_q(t, -1)
        yield f.evaluate(setcomp.eps_prime) == 1, ("eps'", t)
        yield f == topology.phi_weak(t), ("L'", t)


def suffix_open_compositions(t) -> list:
    """Compositions (A_1..A_k) of the classes with every suffix A_i ⊔ ... ⊔ A_k open."""
    out = []
    k = topology.cl(t)
    for w in kernels.packed_words(k):
        m = max(w, default=0)
        if all(topology.is_open(t, [v for v in range(k) if w[v] >= i]) for i in range(1, m + 1)):
            out.append(setcomp.merge_by(t.classes, w))
    return sorted(out)


def law_weak_extensions_suffix(n: int) -> Cases:
    for t in family("Top", n):
        mine = sorted(setcomp.merge_by(t.classes, f) for f in topology.weak_extensions(t))
        yield mine == suffix_open_compositions(t), (t,)


def law_heap_lemma(n: int) -> Cases:
    for t in family("Top", n):
        k = topology.cl(t)
        if k == 0:
            continue
        total = Fraction(0)
        for o in topology.open_sets(t):
            if 0 < len(o) < k:
                rest = [i for i in range(k) if i not in o]
                total += (Fraction(factorial(k), factorial(len(o)) * factorial(len(rest)))
                          * topology.heap_order_count(topology.induced(t, rest))
                          * topology.heap_order_count(topology.induced(t, o)))
        yield total == (2 ** k - 2) * topology.heap_order_count(t), (t,)


def law_lambda_ehr_inverse(n: int) -> Cases:
    for q in (Fraction(1), Fraction(2), Fraction(-1)):
        inv = C.inverse_star(C.lambda_ehr_q(q))
        for t in family("Top", n):
            expect = q ** (topology.cl(t) - topology.cc(t)) * topology.lambda_ho(t)
            yield inv(t) == expect, (str(q), t)
    inv_one = C.inverse_star(C.constant_one(C.TOP))
    for t in family("Top", n):
        yield inv_one(t) == (-1) ** (topology.cl(t) + topology.cc(t)), ("one", t)


def law_gamma_top(n: int) -> Cases:
    def lin(f, x):
        return lc_sum(f(k) * c for k, c in x.items())

    one = C.constant_one(C.TOP)
    ident = lambda t: LinComb.basis(t)
    for t in family("Top", n):
        yield lin(topology.gamma_inv, topology.gamma(t)) == LinComb.basis(t), ("inv∘gamma", t)
        yield lin(topology.gamma, topology.gamma_inv(t)) == LinComb.basis(t), ("gamma∘inv", t)
        yield topology.gamma(t) == C.act_left(ident, one, t, C.TOP), ("Id<-1", t)
        yield topology.phi_ehr_q(t, -1) == topology.gamma(t).apply(topology.phi_ehr), ("phi_-1", t)


def law_ce_lemma(n: int) -> Cases:
    """CE(T) agrees with: connected classes, each one an intersection of a saturated open and closed set."""
    for t in family("Top", n):
        k = topology.cl(t)
        opens = [frozenset(o) for o in topology.open_sets(t)]
        closeds = [frozenset(range(k)) - o for o in opens]
        found = []
        for rgs in kernels.set_partitions(k):
            groups = [tuple(v for v in range(k) if rgs[v] == b) for b in range(max(rgs, default=-1) + 1)]
            sat = lambda s: all(set(g) <= s or not set(g) & s for g in groups)
            ok = True
            for g in groups:
                sub = topology.induced(t, g)
                if topology.cc(sub) != 1:
                    ok = False
                    break
                gs = frozenset(g)
                if not any(o & c == gs for o in opens if sat(o) for c in closeds if sat(c)):
                    ok = False
                    break
            if ok:
                found.append(tuple(groups))
        yield sorted(found) == sorted(topology.compatible_equivalences(t)), (t,)


def law_cofree(n: int) -> Cases:
    """The three-case formula for Δ_{I,J}(S ⊛ T)."""
    B = C.TOP
    for s, t in pairs("Top", n):
        if topology.cl(s) > 3 or topology.cl(t) > 3:
            continue
        st = topology.joint_product(s, t)
        gs, gt = topology.ground(s), topology.ground(t)
        for i, j in subsets(gs | gt):
            lhs = B.split(st, i, j)
            if gs <= i:
                cut = B.split(t, i - gs, j)
                rhs = None if cut is None else (topology.joint_product(s, cut[0]), cut[1])
            elif gt <= j:
                cut = B.split(s, i, j - gt)
                rhs = None if cut is None else (cut[0], topology.joint_product(cut[1], t))
            else:
                rhs = None
            yield lhs == rhs, (s, t, sorted(i))


def law_joint_assoc(n: int) -> Cases:
    for total in range(n + 1):
        for a in range(total + 1):
            for b in range(total - a + 1):
                for x in tops_on(1, a):
                    for y in tops_on(a + 1, a + b):
                        for z in tops_on(a + b + 1, total):
                            J = topology.joint_product
                            yield J(J(x, y), z) == J(x, J(y, z)), (x, y, z)
    for x in family("Top", n):
        J = topology.joint_product
        yield J(x, topology.EMPTY) == x == J(topology.EMPTY, x), ("unit", x)


# -- characters ----------------------------------------------------------------

def _generic_graph(g) -> Fraction:
    return Fraction(graphs.deg(g) + 2 * len(g.edges) + sum(len(b) ** 2 for b in g.blocks), graphs.deg(g) + 1)


def _generic_top(t) -> Fraction:
    return Fraction(topology.cl(t) + 3 * len(t.covers) + sum(len(c) ** 2 for c in t.classes), topology.cl(t) + 2)


def test_characters(name: str) -> list:
    B = DESCRIPTORS[name]
    if name == "Comp":
        ep = C.counit_prime(B)
        return [C.power(ep, 2), C.power(ep, Fraction(-1, 2)),
                C.Character(B, lambda c: C.hilbert(len(c), 3) * Fraction(2) ** len(setcomp.ground(c)), "H3*2^n")]
    if name == "Gr'":
        return [C.lambda_ao(), C.Character(B, _generic_graph, "generic"), C.power(C.constant_one(B), Fraction(1, 2))]
    return [C.lambda_ho(), C.Character(B, _generic_top, "generic"), C.constant_one(B)]


def law_char_monoids(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    a, b, c = test_characters(name)
    e, e1 = C.counit(B), C.counit_prime(B)
    ab_c = C.convolve(C.convolve(a, b), c)
    a_bc = C.convolve(a, C.convolve(b, c))
    AB_C = C.convolve_delta(C.convolve_delta(a, b), c)
    A_BC = C.convolve_delta(a, C.convolve_delta(b, c))
    dist_l = C.convolve_delta(C.convolve(a, b), c)
    dist_r = C.convolve(C.convolve_delta(a, c), C.convolve_delta(b, c))
    inv = C.inverse_conv(a)
    inv_l, inv_r = C.convolve(inv, a), C.convolve(a, inv)
    for x in family(name, n):
        yield ab_c(x) == a_bc(x), ("*-assoc", x)
        yield C.conv_D(e, a, x, B) == a(x) == C.conv_D(a, e, x, B), ("*-unit", x)
        yield inv_l(x) == e(x) == inv_r(x), ("*-inverse", x)
        yield AB_C(x) == A_BC(x), ("⋆-assoc", x)
        yield C.conv_d(e1, a, x, B) == a(x) == C.conv_d(a, e1, x, B), ("⋆-unit", x)
        yield dist_l(x) == dist_r(x), ("distributivity", x)


EXPONENTS = (Fraction(-1), Fraction(1, 2), Fraction(2))


def law_char_powers(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    lam = test_characters(name)[1]
    powers = {q: C.power(lam, q) for q in EXPONENTS + (Fraction(1), Fraction(0))}
    for x in family(name, n):
        yield powers[Fraction(1)](x) == lam(x), ("λ^1", x)
        yield powers[Fraction(0)](x) == C.counit(B)(x), ("λ^0", x)
    for q in EXPONENTS:
        for r in EXPONENTS:
            s = C.convolve(powers[q], powers[r])
            t = C.power(powers[q], r)
            sum_pow = C.power(lam, q + r)
            prod_pow = C.power(lam, q * r)
            for x in family(name, n):
                yield s(x) == sum_pow(x), (f"λ^{q}*λ^{r}", x)
                yield t(x) == prod_pow(x), (f"(λ^{q})^{r}", x)
    # the powers are characters again
    for q in EXPONENTS:
        for x, y in pairs(name, min(n, 4)):
            yield B.product(x, y).evaluate(powers[q]) == powers[q](x) * powers[q](y), (f"mult λ^{q}", x, y)


def law_char_inverse_star(name: str, n: int) -> Cases:
    B = DESCRIPTORS[name]
    e1 = C.counit_prime(B)
    for lam in test_characters(name)[:2]:
        mu = C.inverse_star(lam)
        for x in family(name, n):
            yield C.conv_d(mu, lam, x, B) == e1(x) == C.conv_d(lam, mu, x, B), (lam.name, x)


def _base_morphism(name: str) -> Callable:
    return {"Gr'": graphs.phi_chr, "Top": topology.phi_ehr}[name]


def law_bijection(name: str, n: int) -> Cases:
    """ε′∘(φ←λ) = λ and the universal morphism of ε′∘ψ gives back ψ."""
    B = DESCRIPTORS[name]
    phi = _base_morphism(name)
    if name == "Gr'":
        psis = {"phi_chr": graphs.phi_chr, "phi_chr_2": lambda g: graphs.phi_chr_q(g, 2),
                "phi_1": graphs.phi_hom, "phi_chr_-1": lambda g: graphs.phi_chr_q(g, -1)}
    else:
        psis = {"phi_ehr": topology.phi_ehr, "phi_ehr_2": lambda t: topology.phi_ehr_q(t, 2),
                "phi_1": topology.phi_hom_top, "phi_ehr_-1": lambda t: topology.phi_ehr_q(t, -1)}
    chars = test_characters(name)
    for x in family(name, n):
        for lam in chars:
            got = C.act_left(phi, lam, x, B).evaluate(setcomp.eps_prime)
            yield got == lam(x), ("eps'∘(phi<-λ)", lam.name, x)
        for label, psi in psis.items():
            lam = C.eps_prime_after(psi, B)
            yield C.universal_to_comp(lam, x, B) == psi(x), ("universal", label, x)
        lam = chars[1]
        yield C.universal_to_comp(lam, x, B) == C.universal_to_comp_literal(lam, x, B), ("literal", x)


def law_action(name: str, n: int) -> Cases:
    """(φ←λ)←μ = φ←(λ⋆μ), and φ←ε′ = φ."""
    B = DESCRIPTORS[name]
    phi = _base_morphism(name)
    lam, mu = test_characters(name)[:2]
    lm = C.convolve_delta(lam, mu)
    phl = C.acted(phi, lam, B)
    for x in family(name, n):
        yield C.act_left(phl, mu, x, B) == C.act_left(phi, lm, x, B), ("action", x)
        yield C.act_left(phi, C.counit_prime(B), x, B) == phi(x), ("unit", x)


# -- Fock level ------------------------------------------------------------------

def int_compositions(n: int) -> Iterator[tuple]:
    """Compositions of every length <= n with parts in {1, 2}."""
    for k in range(n + 1):
        yield from product((1, 2), repeat=k)


def law_H_morphism(n: int) -> Cases:
    @lru_cache(maxsize=None)
    def H(c, x):
        return fock.H_morphism(c)(x)

    for a in int_compositions(n):
        yield H(a, 1) == (1 if len(a) <= 1 else 0), ("eps'", a)
        cop, dlt = fock.qsym_coproduct(a), fock.qsym_internal_delta(a)
        for k in range(6):
            for l in range(6):
                rhs = sum((c * H(p, k) * H(s, l) for (p, s), c in cop.items()), Fraction(0))
                yield H(a, k + l) == rhs, ("Delta", a, k, l)
                rhs = sum((c * H(p, k) * H(s, l) for (p, s), c in dlt.items()), Fraction(0))
                yield H(a, k * l) == rhs, ("delta", a, k, l)
    for a in int_compositions(min(n, 3)):
        for b in int_compositions(min(n, 3)):
            yield fock.H_lin(fock.qsym_quasi_shuffle(a, b)) == fock.H_morphism(a) * fock.H_morphism(b), ("product", a, b)


def law_H_theta(n: int) -> Cases:
    for a in int_compositions(n):
        for q in THETA_QS:
            lhs = fock.H_lin(fock.theta_q_qsym(a, q))
            yield lhs == fock.H_morphism(a).scale_var(q), (a, str(q))


def law_khat_morphism(n: int) -> Cases:
    for x, y in pairs("Comp", n):
        lhs = fock.khat_image(setcomp.quasi_shuffle(x, y))
        yield lhs == fock.qsym_quasi_shuffle(fock.khat_encode(x), fock.khat_encode(y)), ("product", x, y)
    for x in family("Comp", n):
        lhs = setcomp.internal_delta(x).map_keys(lambda p: (fock.khat_encode(p[0]), fock.khat_encode(p[1])))
        yield lhs == fock.qsym_internal_delta(fock.khat_encode(x)), ("delta", x)
        for q in THETA_QS:
            yield fock.khat_image(setcomp.theta_q(x, q)) == fock.theta_q_qsym(fock.khat_encode(x), q), ("theta", x, str(q))


def law_k_morphism(n: int) -> Cases:
    for x, y in pairs("Comp", n):
        lhs = fock.k_image(setcomp.quasi_shuffle(x, y))
        yk = fock.k_encode(setcomp.relabel(y, {v: v - len(setcomp.ground(x)) for v in setcomp.ground(y)})) if y else ()
        yield lhs == fock.wqsym_product(fock.k_encode(x), yk), ("product", x, y)
    for x in family("Comp", n):
        lhs = setcomp.internal_delta(x).map_keys(lambda p: (fock.k_encode(p[0]), fock.k_encode(p[1])))
        yield lhs == fock.wqsym_internal_delta(fock.k_encode(x)), ("delta", x)


def law_chromatic_oracle(n: int) -> Cases:
    for g in family("Gr'", n):
        p = fock.chromatic_polynomial(g)
        for k in range(6):
            yield p(k) == kernels.count_proper_colorings(graphs.deg(g), g.edges, k), (g, k)
        yield p == fock.chromatic_via_lambda(g), ("via λ_chr", g)


def law_ehrhart_oracle(n: int) -> Cases:
    for t in family("Top", n):
        p1, pm = fock.ehrhart_polynomial(t, 1), fock.ehrhart_polynomial(t, -1)
        rel = topology.strict_pairs(t)
        for k in range(6):
            yield p1(k) == kernels.count_monotone_maps(topology.cl(t), rel, k, True), ("strict", t, k)
            yield pm(k) == kernels.count_monotone_maps(topology.cl(t), rel, k, False), ("weak", t, k)


def law_duality(n: int) -> Cases:
    for t in family("Top", n):
        base = fock.ehrhart_polynomial(t, 1)
        for q in (Fraction(-1), Fraction(2), Fraction(1, 2)):
            expect = base.scale_var(1 / q) * q ** topology.cl(t)
            yield fock.ehrhart_polynomial(t, q) == expect, ("ehr", t, str(q))
    for g in family("Gr'", n):
        base = fock.chromatic_polynomial(g, 1)
        for q in (Fraction(-1), Fraction(2), Fraction(1, 2)):
            expect = base.scale_var(1 / q) * q ** graphs.deg(g)
            yield fock.chromatic_polynomial(g, q) == expect, ("chr", g, str(q))


# -- registry and runner ---------------------------------------------------------

@dataclass
class LawResult:
    name: str
    checked: int = 0
    counterexample: Any = None
    elapsed: float = 0.0
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.error is None


def _structure_laws() -> list[tuple[str, Callable[[int], Cases]]]:
    out = []
    for nm in ("Comp", "Gr'", "Top"):
        out += [
            (f"{nm}: Δ coassociative", lambda n, nm=nm: law_coassoc_Delta(nm, n)),
            (f"{nm}: Δ counit", lambda n, nm=nm: law_counit_Delta(nm, n)),
            (f"{nm}: product/Δ compatibility", lambda n, nm=nm: law_bialgebra(nm, n)),
            (f"{nm}: δ coassociative", lambda n, nm=nm: law_coassoc_delta(nm, n)),
            (f"{nm}: δ counit ε′", lambda n, nm=nm: law_counit_delta(nm, n)),
            (f"{nm}: δ multiplicative", lambda n, nm=nm: law_delta_multiplicative(nm, n)),
            (f"{nm}: ε′ multiplicative", lambda n, nm=nm: law_eps_prime_multiplicative(nm, n)),
            (f"{nm}: ε′ and Δ", lambda n, nm=nm: law_counit_Delta_eps_prime(nm, n)),
            (f"{nm}: cointeraction", lambda n, nm=nm: law_cointeraction(nm, n)),
        ]
    return out


def registry() -> list[tuple[str, Callable[[int], Cases]]]:
    return _structure_laws() + [
        ("Comp: ⊎ and ⧢ associative, commutative, unital", law_qsh_assoc_comm),
        ("Comp: δ via cont_k equals cut-point formula", law_delta_cont),
        ("Comp: ρ intertwines ⧢ and ⊎, commutes with Δ", law_rho),
        ("Comp: θ_q∘θ_r = θ_qr", law_theta_group),
        ("Gr': φ_chr double morphism", lambda n: check_morphism("Gr'", n, graphs.phi_chr, True)),
        ("Gr': φ_chr_q bialgebra morphism (q=2)", lambda n: check_morphism("Gr'", n, lambda g: graphs.phi_chr_q(g, 2), False)),
        ("Gr': φ_chr←λ bialgebra morphism", lambda n: check_morphism(
            "Gr'", n, C.acted(graphs.phi_chr, test_characters("Gr'")[1], C.GRAPHS), False)),
        ("Gr': deletion-contraction", law_deletion_contraction),
        ("Gr': acyclic orientations (brute force = recursion = ε′∘φ_chr_-1)", law_ao_oracle),
        ("Gr': λ_chr_q ⋆-inverse is q^(deg-cc)", law_lambda_chr_inverse),
        ("Gr': λ_ao ⋆-inverse", law_lambda_ao_inverse),
        ("Gr': Γ, Γ′ inverse; Γ = Id←λ_ao; φ_chr_-1 = φ_chr∘Γ", law_gamma_graphs),
        ("Top: φ_ehr double morphism", lambda n: check_morphism("Top", n, topology.phi_ehr, True)),
        ("Top: φ_ehr_q bialgebra morphism (q=2)", lambda n: check_morphism("Top", n, lambda t: topology.phi_ehr_q(t, 2), False)),
        ("Top: φ_1 bialgebra morphism", lambda n: check_morphism("Top", n, topology.phi_hom_top, False)),
        ("Top: φ_ehr_-1 = Σ over weak extensions, ε′∘φ_ehr_-1 = 1", law_phi_minus_one),
        ("Top: weak extensions = suffix-open compositions", law_weak_extensions_suffix),
        ("Top: heap-order lemma", law_heap_lemma),
        ("Top: λ_ehr_q and constant-one ⋆-inverses", law_lambda_ehr_inverse),
        ("Top: Γ, Γ′ inverse; φ_ehr_-1 = φ_ehr∘Γ", law_gamma_top),
        ("Top: CE(T) = saturated open ∩ closed characterization", law_ce_lemma),
        ("Top: cofreeness criterion for ⊛", law_cofree),
        ("Top: ⊛ associative and unital", law_joint_assoc),
    ] + [
        item
        for nm in ("Comp", "Gr'", "Top")
        for item in [
            (f"{nm}: character monoids and distributivity", lambda n, nm=nm: law_char_monoids(nm, n)),
            (f"{nm}: power laws", lambda n, nm=nm: law_char_powers(nm, n)),
            (f"{nm}: ⋆-inverse", lambda n, nm=nm: law_char_inverse_star(nm, n)),
        ]
    ] + [
        ("Gr': character/morphism bijection round trips", lambda n: law_bijection("Gr'", n)),
        ("Top: character/morphism bijection round trips", lambda n: law_bijection("Top", n)),
        ("Gr': ← is a right action", lambda n: law_action("Gr'", n)),
        ("Top: ← is a right action", lambda n: law_action("Top", n)),
        ("H double morphism (bi-degree evaluation)", law_H_morphism),
        ("H∘K̂(θ_q) = Θ_q∘H", law_H_theta),
        ("K̂ intertwines products, δ and θ_q", law_khat_morphism),
        ("K intertwines ⊎ and δ with WQSym", law_k_morphism),
        ("P_chr_1 = proper colorings; = Σ λ_chr X^cl", law_chromatic_oracle),
        ("P_ehr_±1 = strict/weak monotone maps", law_ehrhart_oracle),
        ("duality principle", law_duality),
    ]


def describe(obj) -> Any:
    """JSON-friendly rendering of a counterexample component."""
    if isinstance(obj, graphs.BlockGraph):
        return {"graph": graphs.to_json(obj)}
    if isinstance(obj, topology.QuasiPoset):
        return {"quasiposet": topology.to_json(obj)}
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return [describe(o) for o in obj]
    if isinstance(obj, list):
        return [describe(o) for o in obj]
    return obj


def run_law(name: str, fn: Callable[[int], Cases], max_size: int) -> LawResult:
    res = LawResult(name)
    start = time.perf_counter()
    try:
        for ok, case in fn(max_size):
            res.checked += 1
            if not ok:
                res.counterexample = describe(case)
                break
    except Exception as exc:  # a crash is reported as a failure, not swallowed
        res.error = f"{type(exc).__name__}: {exc}"
    res.elapsed = time.perf_counter() - start
    return res


def run_all(max_size: int = 4, select: Callable[[str], bool] = lambda s: True) -> list[LawResult]:
    return [run_law(nm, fn, max_size) for nm, fn in registry() if select(nm)]
