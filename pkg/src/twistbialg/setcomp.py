"""The double twisted bialgebra of set compositions.

A set composition is stored as a tuple of blocks, each block a sorted tuple of
labels; the empty tuple is the unit.  Tuples compare lexicographically, which is
exactly the canonical order used for serialization.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import kernels
from .combinat import hilbert, segmentations
from .errors import DomainError
from .lincomb import LinComb, as_fraction, lc_sum

SetComp = tuple  # tuple[tuple[Label, ...], ...]

UNIT: SetComp = ()


def make(blocks: Iterable[Iterable]) -> SetComp:
    """Validate and normalize a sequence of blocks into a set composition."""
    out, seen = [], set()
    for block in blocks:
        block = tuple(sorted(set(block)))
        if not block:
            raise DomainError("set compositions have nonempty blocks")
        shared = seen.intersection(block)
        if shared:
            raise DomainError(f"label {sorted(shared)[0]!r} appears in two blocks")
        seen.update(block)
        out.append(block)
    return tuple(out)


def ground(c: SetComp) -> frozenset:
    return frozenset(x for block in c for x in block)


def _check_disjoint(a: SetComp, b: SetComp) -> None:
    shared = ground(a) & ground(b)
    if shared:
        raise DomainError(f"ground sets overlap on {sorted(shared)!r}")


def merge_by(blocks: Sequence[tuple], sigma: Sequence[int]) -> SetComp:
    """The composition whose i-th block is the union of the blocks sent to i."""
    m = max(sigma, default=0)
    merged: list[list] = [[] for _ in range(m)]
    for block, s in zip(blocks, sigma):
        merged[s - 1].extend(block)
    return tuple(tuple(sorted(b)) for b in merged)


def enumerate_qsh(k: int, l: int) -> list[tuple[int, ...]]:
    """Quasi-shuffles of type (k, l).

    Surjections onto an initial segment that are increasing on ``1..k`` and on
    ``k+1..k+l``.  Strict monotonicity is what makes (A,B)⊎(C) have 5 terms.
    """
    if k < 0 or l < 0:
        raise DomainError("negative run length")
    return kernels.qsh(k, l)


@lru_cache(maxsize=1 << 16)
def quasi_shuffle(a: SetComp, b: SetComp) -> LinComb:
    _check_disjoint(a, b)
    blocks = a + b
    return LinComb((merge_by(blocks, s), 1) for s in kernels.qsh(len(a), len(b)))


@lru_cache(maxsize=1 << 16)
def shuffle(a: SetComp, b: SetComp) -> LinComb:
    _check_disjoint(a, b)
    blocks, n = a + b, len(a) + len(b)
    return LinComb(
        (merge_by(blocks, s), 1) for s in kernels.qsh(len(a), len(b)) if max(s, default=0) == n
    )


def qs_product(*comps: SetComp) -> LinComb:
    """Iterated quasi-shuffle of basis elements."""
    acc = LinComb.basis(UNIT)
    for c in comps:
        acc = lc_sum(quasi_shuffle(k, c) * v for k, v in acc.items())
    return acc


def qs_lin(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear quasi-shuffle of two linear combinations."""
    return lc_sum(quasi_shuffle(a, b) * (ca * cb) for a, ca in x.items() for b, cb in y.items())


def deconcat(c: SetComp, part) -> tuple[SetComp, SetComp] | None:
    """Δ_{I,J}: the unique prefix/suffix cut with prefix ground I, or None."""
    part = frozenset(part)
    g = ground(c)
    if not part <= g:
        raise DomainError("split set is not contained in the ground set")
    acc: set = set()
    for p in range(len(c) + 1):
        if acc == part:
            return c[:p], c[p:]
        if p < len(c):
            acc.update(c[p])
            if not acc <= part:
                return None
    return None


def coproduct(c: SetComp) -> list[tuple[SetComp, SetComp]]:
    """All nonzero Δ_{I,J}(c) terms: one per cut point."""
    return [(c[:p], c[p:]) for p in range(len(c) + 1)]


def iterated_split(x: LinComb, parts: Sequence[Iterable]) -> LinComb:
    """Δ_{A_1,...,A_k} linearized; keys are k-tuples of set compositions."""
    parts = [frozenset(p) for p in parts]
    union = frozenset().union(*parts) if parts else frozenset()
    if sum(len(p) for p in parts) != len(union):
        raise DomainError("split parts are not disjoint")
    out = []
    for c, coeff in x.items():
        if ground(c) != union:
            raise DomainError("split parts do not cover the ground set")
        if not parts:
            if c == UNIT:
                out.append(((), coeff))
            continue
        pieces, rest, ok = [], c, True
        for p in parts[:-1]:
            cut = deconcat(rest, p)
            if cut is None:
                ok = False
                break
            pieces.append(cut[0])
            rest = cut[1]
        if ok:
            out.append((tuple(pieces) + (rest,), coeff))
    return LinComb(out)


@lru_cache(maxsize=1 << 14)
def internal_delta(c: SetComp) -> LinComb:
    """δ via cut points: merged composition ⊗ quasi-shuffle of the segments."""
    out = []
    for segs in segmentations(len(c)):
        left = tuple(tuple(sorted(x for b in c[i:j] for x in b)) for i, j in segs)
        right = qs_product(*(c[i:j] for i, j in segs))
        out.extend(((left, r), v) for r, v in right.items())
    return LinComb(out)


def internal_delta_lin(x: LinComb) -> LinComb:
    return x.apply(internal_delta)


@lru_cache(maxsize=None)
def enumerate_cont(k: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Pairs (σ, τ): σ nondecreasing onto 1..m, τ onto 1..m', τ increasing on σ-fibers."""
    if k < 0:
        raise DomainError("negative length")
    sigmas = [w for w in kernels.packed_words(k) if list(w) == sorted(w)]
    taus = kernels.packed_words(k)
    out = []
    for s in sigmas:
        for t in taus:
            if all(t[i] < t[j] for i in range(k) for j in range(i + 1, k) if s[i] == s[j]):
                out.append((s, t))
    return tuple(out)


def internal_delta_via_cont(c: SetComp) -> LinComb:
    """δ as Σ_{(σ,τ) ∈ cont_k} σ∘c ⊗ τ∘c (independent of the cut-point formula)."""
    return LinComb(((merge_by(c, s), merge_by(c, t)), 1) for s, t in enumerate_cont(len(c)))


def eps(c: SetComp) -> Fraction:
    """Counit of Δ."""
    return Fraction(1 if c == UNIT else 0)


def eps_prime(c: SetComp) -> Fraction:
    """Counit of δ: 1 on one-block compositions (and on the unit), 0 otherwise."""
    return Fraction(1 if len(c) <= 1 else 0)


def _weighted_merges(c: SetComp, weight) -> LinComb:
    out = []
    for segs in segmentations(len(c)):
        w = prod((weight(j - i) for i, j in segs), start=Fraction(1))
        if w:
            out.append((tuple(tuple(sorted(x for b in c[i:j] for x in b)) for i, j in segs), w))
    return LinComb(out)


def theta_q(x: LinComb | SetComp, q) -> LinComb:
    """θ_q: each run of n consecutive blocks merged with weight H_n(q)."""
    q = as_fraction(q)
    if not isinstance(x, LinComb):
        x = LinComb.basis(x)
    return x.apply(lambda c: _theta_basis(c, q))


@lru_cache(maxsize=1 << 15)
def _theta_basis(c: SetComp, q: Fraction) -> LinComb:
    return _weighted_merges(c, lambda n: hilbert(n, q))


@lru_cache(maxsize=1 << 15)
def _rho_basis(c: SetComp) -> LinComb:
    return _weighted_merges(c, lambda n: Fraction(1, factorial(n)))


def rho_iso(x: LinComb | SetComp) -> LinComb:
    """ρ: each run of n consecutive blocks merged with weight 1/n!."""
    if not isinstance(x, LinComb):
        x = LinComb.basis(x)
    return x.apply(_rho_basis)


def set_compositions(labels: Iterable) -> list[SetComp]:
    """Every set composition of a finite label set, in canonical order."""
    labels = sorted(set(labels))
    out = []
    for w in kernels.packed_words(len(labels)):
        blocks: list[list] = [[] for _ in range(max(w, default=0))]
        for lab, v in zip(labels, w):
            blocks[v - 1].append(lab)
        out.append(tuple(tuple(b) for b in blocks))
    out.sort()
    return out


def relabel(c: SetComp, mapping) -> SetComp:
    return make([mapping[x] for x in b] for b in c)


def to_json(c: SetComp) -> list[list]:
    return [list(b) for b in c]


def from_json(doc) -> SetComp:
    if not isinstance(doc, list) or not all(isinstance(b, list) for b in doc):
        raise DomainError("a set composition is a list of label lists")
    return make(doc)


def render(c: SetComp) -> str:
    return "(" + ",".join("{" + ",".join(map(str, b)) + "}" for b in c) + ")"
