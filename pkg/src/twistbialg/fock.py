"""Fock-functor images: packed words, integer compositions and polynomials.

The full Fock functor K reads a set composition of {1..n} as the packed word whose
i-th letter is the index of the block holding i.  The bosonic functor K̂ forgets
labels and keeps the block sizes.  H sends a composition of length n to the
Hilbert polynomial H_n(X), and chromatic/Ehrhart polynomials are obtained as H
applied to the K̂-image of the relevant morphism.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from . import graphs, kernels, setcomp, topology
from .combinat import hilbert, segmentations
from .errors import CapacityError, DomainError
from .lincomb import LinComb, as_fraction, format_fraction, lc_sum
from .setcomp import merge_by

PackedWord = tuple  # tuple[int, ...]
IntComposition = tuple  # tuple[int, ...]

CANONICAL_CAP = 8


class Polynomial:
    """Dense one-variable polynomial with exact rational coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Polynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.coeffs == _as_poly(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_var(self, q) -> Polynomial:
        """P(X) -> P(qX)."""
        q = as_fraction(q)
        return Polynomial(c * q ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"Polynomial({render_poly(self)})"

    def to_json(self) -> dict:
        return {"coeffs": [format_fraction(c) for c in self.coeffs]}


def _as_poly(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    return Polynomial.const(as_fraction(p))


def render_poly(p: Polynomial) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


@lru_cache(maxsize=None)
def hilbert_poly(n: int) -> Polynomial:
    """H_n(X) = X(X-1)...(X-n+1)/n! as a polynomial."""
    p = Polynomial.const(1)
    for i in range(n):
        p = p * Polynomial((-i, 1))
    return p * Fraction(1, _fact(n))


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def poly_eval(p: Polynomial, x) -> Fraction:
    return p(x)


def poly_scale_var(p: Polynomial, q) -> Polynomial:
    """Θ_q: P(X) -> P(qX)."""
    return p.scale_var(q)


# -- K: set compositions of {1..n} and packed words ---------------------

def _int_label(x) -> int:
    if isinstance(x, bool):
        raise DomainError("labels must be the integers 1..n")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and x.strip().isdigit():
        return int(x)
    raise DomainError(f"label {x!r} is not an integer")


def k_encode(c: setcomp.SetComp) -> PackedWord:
    """The packed word w with w_i = index of the block containing label i."""
    where = {}
    for k, block in enumerate(c, start=1):
        for x in block:
            where[_int_label(x)] = k
    n = len(where)
    if set(where) != set(range(1, n + 1)):
        raise DomainError("the ground set must be {1, ..., n}")
    return tuple(where[i] for i in range(1, n + 1))


def k_decode(w: PackedWord) -> setcomp.SetComp:
    return merge_by([(i,) for i in range(1, len(w) + 1)], w)


def k_image(x: LinComb) -> LinComb:
    return x.map_keys(k_encode)


def is_packed(w: Sequence[int]) -> bool:
    return set(w) == set(range(1, max(w, default=0) + 1))


def wqsym_product(u: PackedWord, v: PackedWord) -> LinComb:
    """Quasi-shuffle of packed words: values of u and shifted values of v merged by QSh."""
    mu, mv = max(u, default=0), max(v, default=0)
    out = []
    for s in kernels.qsh(mu, mv):
        out.append((tuple(s[a - 1] for a in u) + tuple(s[mu + b - 1] for b in v), 1))
    return LinComb(out)


def _pack(w: Sequence[int]) -> PackedWord:
    vals = {v: i for i, v in enumerate(sorted(set(w)), start=1)}
    return tuple(vals[v] for v in w)


def wqsym_coproduct(w: PackedWord) -> LinComb:
    """Δ(w) = Σ_j pack(letters <= j) ⊗ pack(letters > j)."""
    return LinComb(
        ((_pack([a for a in w if a <= j]), _pack([a for a in w if a > j])), 1)
        for j in range(max(w, default=0) + 1)
    )


def wqsym_internal_delta(w: PackedWord) -> LinComb:
    """δ(w) = Σ_{(σ,τ) ∈ cont_k} σ∘w ⊗ τ∘w, k = max(w)."""
    return LinComb(
        ((tuple(s[a - 1] for a in w), tuple(t[a - 1] for a in w)), 1)
        for s, t in setcomp.enumerate_cont(max(w, default=0))
    )


# -- K̂: integer compositions ----------------------------------------------

def khat_encode(c: setcomp.SetComp) -> IntComposition:
    return tuple(len(b) for b in c)


def khat_image(x: LinComb) -> LinComb:
    return x.map_keys(khat_encode)


def qsym_quasi_shuffle(a: IntComposition, b: IntComposition) -> LinComb:
    """Quasi-shuffle of integer compositions; merged parts are added."""
    out = []
    for s in kernels.qsh(len(a), len(b)):
        parts = [0] * max(s, default=0)
        for p, v in zip(a + b, s):
            parts[v - 1] += p
        out.append((tuple(parts), 1))
    return LinComb(out)


def qsym_product(*comps: IntComposition) -> LinComb:
    acc = LinComb.basis(())
    for c in comps:
        acc = lc_sum(qsym_quasi_shuffle(k, c) * v for k, v in acc.items())
    return acc


def qsym_coproduct(a: IntComposition) -> LinComb:
    return LinComb(((a[:i], a[i:]), 1) for i in range(len(a) + 1))


def qsym_internal_delta(a: IntComposition) -> LinComb:
    out = []
    for segs in segmentations(len(a)):
        left = tuple(sum(a[i:j]) for i, j in segs)
        for r, v in qsym_product(*(a[i:j] for i, j in segs)).items():
            out.append(((left, r), v))
    return LinComb(out)


def theta_q_qsym(c: IntComposition, q) -> LinComb:
    """K̂(θ_q): runs of n consecutive parts are added, with weight H_n(q)."""
    q = as_fraction(q)
    out = []
    for segs in segmentations(len(c)):
        w = Fraction(1)
        for i, j in segs:
            w *= hilbert(j - i, q)
        out.append((tuple(sum(c[i:j]) for i, j in segs), w))
    return LinComb(out)


def H_morphism(c: IntComposition) -> Polynomial:
    """H((a_1, ..., a_n)) = H_n(X), whatever the parts."""
    return hilbert_poly(len(c))


def H_lin(x: LinComb) -> Polynomial:
    acc = Polynomial()
    for c, v in x.items():
        acc = acc + hilbert_poly(len(c)) * v
    return acc


# -- chromatic and Ehrhart polynomials ------------------------------------

def chromatic_polynomial(g: graphs.BlockGraph, q=1) -> Polynomial:
    """P_chr_q(G) = H(K̂(φ_chr_q(G)))."""
    return H_lin(khat_image(graphs.phi_chr_q(g, q)))


def ehrhart_polynomial(t: topology.QuasiPoset, q=1) -> Polynomial:
    """P_ehr_q(T) = H(K̂(φ_ehr_q(T)))."""
    return H_lin(khat_image(topology.phi_ehr_q(t, q)))


def chromatic_via_lambda(g: graphs.BlockGraph) -> Polynomial:
    """Σ_{∼} λ_chr_1(G|∼) X^{cl(∼)}, with λ_chr_1 the ⋆-inverse of the constant character."""
    from . import characters as C

    lam = C.inverse_star(C.constant_one(C.GRAPHS))
    acc = Polynomial()
    for e in graphs.admissible_equivalences(g):
        acc = acc + Polynomial((0,) * len(e) + (1,)) * lam(graphs.restrict_classes(g, e))
    return acc


# -- canonical forms up to relabeling -------------------------------------

def _orderings(sizes: Sequence[int]):
    """Vertex orderings that list vertices by nondecreasing decoration."""
    groups: dict[int, list[int]] = {}
    for v, s in enumerate(sizes):
        groups.setdefault(s, []).append(v)
    keys = sorted(groups)
    for combo in product(*(permutations(groups[k]) for k in keys)):
        yield [v for part in combo for v in part]


def canonical_class(x) -> tuple:
    """An isomorphism-class key for a block graph or quasi-poset, decorated by block sizes.

    Brute-force minimization over all relabelings; capped at eight vertices.
    """
    if isinstance(x, graphs.BlockGraph):
        kind, cells, rel, directed = "graph", x.blocks, x.edges, False
    elif isinstance(x, topology.QuasiPoset):
        kind, cells, rel, directed = "top", x.classes, x.covers, True
    else:
        raise DomainError("canonical_class expects a BlockGraph or a QuasiPoset")
    n = len(cells)
    if n > CANONICAL_CAP:
        raise CapacityError(f"canonical_class handles at most {CANONICAL_CAP} vertices, got {n}")
    sizes = [len(c) for c in cells]
    best = None
    for order in _orderings(sizes):
        pos = {v: i for i, v in enumerate(order)}
        if directed:
            edges = tuple(sorted((pos[a], pos[b]) for a, b in rel))
        else:
            edges = tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in rel))
        if best is None or edges < best:
            best = edges
    return (kind, tuple(sorted(sizes)), best)


def canonical_image(x: LinComb) -> LinComb:
    return x.map_keys(canonical_class)
