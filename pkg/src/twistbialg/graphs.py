"""The double twisted bialgebra of graphs whose vertices are blocks of labels.

Vertices are stored as sorted label tuples, ordered by their minimal label; edges
are sorted pairs of vertex indices.  ``deg`` is the number of vertices and ``cc``
the number of connected components.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod

from . import kernels, setcomp
from .errors import DomainError
from .lincomb import LinComb, as_fraction, lc_sum


@dataclass(frozen=True, order=True)
class BlockGraph:
    blocks: tuple[tuple, ...]
    edges: tuple[tuple[int, int], ...]

    def __repr__(self) -> str:
        return f"BlockGraph({render(self)})"


def make(blocks: Iterable[Iterable], edges: Iterable[Sequence[int]] = ()) -> BlockGraph:
    """Canonicalize blocks and edges given as index pairs into ``blocks``."""
    raw = [tuple(sorted(set(b))) for b in blocks]
    seen: set = set()
    for b in raw:
        if not b:
            raise DomainError("vertices are nonempty label sets")
        shared = seen.intersection(b)
        if shared:
            raise DomainError(f"label {sorted(shared)[0]!r} is shared by two vertices")
        seen.update(b)
    order = sorted(range(len(raw)), key=lambda i: raw[i])
    pos = {old: new for new, old in enumerate(order)}
    es = set()
    for e in edges:
        i, j = e
        if not (0 <= i < len(raw) and 0 <= j < len(raw)):
            raise DomainError(f"edge {list(e)} refers to a missing vertex")
        if i == j:
            raise DomainError(f"edge {list(e)} is a loop")
        a, b = pos[i], pos[j]
        es.add((min(a, b), max(a, b)))
    return BlockGraph(tuple(raw[i] for i in order), tuple(sorted(es)))


EMPTY = BlockGraph((), ())


def ground(g: BlockGraph) -> frozenset:
    return frozenset(x for b in g.blocks for x in b)


def deg(g: BlockGraph) -> int:
    return len(g.blocks)


def _adjacency(n: int, edges) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _component_sets(n: int, edges) -> list[list[int]]:
    adj = _adjacency(n, edges)
    seen, comps = [False] * n, []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def cc(g: BlockGraph) -> int:
    return len(_component_sets(deg(g), g.edges))


def induced(g: BlockGraph, idx: Iterable[int]) -> BlockGraph:
    idx = sorted(idx)
    pos = {v: i for i, v in enumerate(idx)}
    return make([g.blocks[i] for i in idx], [(pos[a], pos[b]) for a, b in g.edges if a in pos and b in pos])


def components(g: BlockGraph) -> list[BlockGraph]:
    return [induced(g, c) for c in _component_sets(deg(g), g.edges)]


def is_connected_subset(g: BlockGraph, idx: Sequence[int]) -> bool:
    sub = induced(g, idx)
    return deg(sub) > 0 and cc(sub) == 1


def disjoint_union(g: BlockGraph, h: BlockGraph) -> BlockGraph:
    shared = ground(g) & ground(h)
    if shared:
        raise DomainError(f"ground sets overlap on {sorted(shared)!r}")
    n = deg(g)
    return make(g.blocks + h.blocks, list(g.edges) + [(a + n, b + n) for a, b in h.edges])


def restrict(g: BlockGraph, part) -> BlockGraph | None:
    """G|_I when I is a union of vertices, else None."""
    part = frozenset(part)
    if not part <= ground(g):
        raise DomainError("restriction set is not contained in the ground set")
    idx = []
    for i, b in enumerate(g.blocks):
        inside = part.intersection(b)
        if inside and len(inside) != len(b):
            return None
        if inside:
            idx.append(i)
    return induced(g, idx)


def split(g: BlockGraph, left, right) -> tuple[BlockGraph, BlockGraph] | None:
    left, right = frozenset(left), frozenset(right)
    if left & right or (left | right) != ground(g):
        raise DomainError("split sets must partition the ground set")
    a = restrict(g, left)
    return None if a is None else (a, restrict(g, right))


def coproduct(g: BlockGraph) -> list[tuple[BlockGraph, BlockGraph]]:
    n = deg(g)
    out = []
    for mask in range(1 << n):
        inside = [i for i in range(n) if mask >> i & 1]
        outside = [i for i in range(n) if not mask >> i & 1]
        out.append((induced(g, inside), induced(g, outside)))
    return out


@lru_cache(maxsize=1 << 14)
def admissible_equivalences(g: BlockGraph) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Partitions of the vertices into groups that each induce a connected subgraph."""
    n = deg(g)
    out = []
    for rgs in kernels.set_partitions(n):
        groups = [[] for _ in range(max(rgs, default=-1) + 1)]
        for v, b in enumerate(rgs):
            groups[b].append(v)
        if all(len(grp) == 1 or is_connected_subset(g, grp) for grp in groups):
            out.append(tuple(tuple(grp) for grp in groups))
    return tuple(out)


def _check_admissible(g: BlockGraph, e) -> tuple[tuple[int, ...], ...]:
    e = tuple(tuple(sorted(grp)) for grp in e)
    flat = sorted(v for grp in e for v in grp)
    if flat != list(range(deg(g))):
        raise DomainError("equivalence is not a partition of the vertices")
    if any(len(grp) > 1 and not is_connected_subset(g, grp) for grp in e):
        raise DomainError("equivalence has a disconnected class")
    return e


def contract(g: BlockGraph, e) -> BlockGraph:
    """G/∼: each class becomes one vertex; parallel edges collapse."""
    e = _check_admissible(g, e)
    where = {v: k for k, grp in enumerate(e) for v in grp}
    blocks = [tuple(x for v in grp for x in g.blocks[v]) for grp in e]
    edges = {(where[a], where[b]) for a, b in g.edges if where[a] != where[b]}
    return make(blocks, edges)


def restrict_classes(g: BlockGraph, e) -> BlockGraph:
    """G|∼: same vertices, only the edges inside a class survive."""
    e = _check_admissible(g, e)
    where = {v: k for k, grp in enumerate(e) for v in grp}
    return BlockGraph(g.blocks, tuple(ed for ed in g.edges if where[ed[0]] == where[ed[1]]))


@lru_cache(maxsize=1 << 14)
def internal_delta(g: BlockGraph) -> LinComb:
    return LinComb(((contract(g, e), restrict_classes(g, e)), 1) for e in admissible_equivalences(g))


def eps(g: BlockGraph) -> Fraction:
    return Fraction(1 if not g.blocks else 0)


def eps_prime(g: BlockGraph) -> Fraction:
    return Fraction(1 if not g.edges else 0)


def valid_colorations(g: BlockGraph) -> list[tuple[int, ...]]:
    """Packed words on the vertices taking different values at the ends of every edge."""
    return [c for c in kernels.packed_words(deg(g)) if all(c[a] != c[b] for a, b in g.edges)]


@lru_cache(maxsize=1 << 14)
def phi_chr(g: BlockGraph) -> LinComb:
    return LinComb((setcomp.merge_by(g.blocks, c), 1) for c in valid_colorations(g))


def _weights(u) -> Callable[[int], Fraction]:
    if u is None:
        return lambda n: Fraction(1)
    if callable(u):
        return lambda n: as_fraction(u(n))
    seq = [as_fraction(x) for x in u]
    return lambda n: seq[n - 1]


def phi_hom(g: BlockGraph, u=None) -> LinComb:
    """φ_u(G) = (Π u_{#I}) (I_1)⊎...⊎(I_k); ``u`` is a callable n -> u_n or (u_1, u_2, ...)."""
    w = _weights(u)
    scale = prod((w(len(b)) for b in g.blocks), start=Fraction(1))
    if not scale:
        return LinComb()
    return setcomp.qs_product(*((b,) for b in g.blocks)) * scale


def phi_chr_q(g: BlockGraph, q) -> LinComb:
    """θ_{1/q}(q^deg φ_chr(G)); q = 0 gives φ_1."""
    return _phi_chr_q(g, as_fraction(q))


@lru_cache(maxsize=1 << 14)
def _phi_chr_q(g: BlockGraph, q: Fraction) -> LinComb:
    if q == 0:
        return phi_hom(g)
    return setcomp.theta_q(phi_chr(g) * q ** deg(g), 1 / q)


def ao_count(g: BlockGraph) -> int:
    """Acyclic orientations, by brute force over all 2^|E| orientations."""
    return kernels.count_acyclic_orientations(deg(g), g.edges)


@lru_cache(maxsize=1 << 14)
def ao_count_dc(g: BlockGraph) -> int:
    """Acyclic orientations by deletion-contraction: ao(G) = ao(G∖e) + ao(G/e)."""
    if not g.edges:
        return 1
    e = g.edges[0]
    return ao_count_dc(delete_edge(g, e)) + ao_count_dc(contract_edge(g, e))


def gamma(g: BlockGraph) -> LinComb:
    """Γ(G) = Σ_{∼} ao(G|∼) G/∼."""
    return LinComb((contract(g, e), ao_count(restrict_classes(g, e))) for e in admissible_equivalences(g))


def gamma_inv(g: BlockGraph) -> LinComb:
    """Γ'(G) = Σ_{∼} (-1)^{cl(∼)+deg(G)} ao(G|∼) G/∼."""
    return LinComb(
        (contract(g, e), (-1) ** (len(e) + deg(g)) * ao_count(restrict_classes(g, e)))
        for e in admissible_equivalences(g)
    )


def _edge(g: BlockGraph, e) -> tuple[int, int]:
    a, b = e
    e = (min(a, b), max(a, b))
    if e not in g.edges:
        raise DomainError(f"{list(e)} is not an edge")
    return e


def delete_edge(g: BlockGraph, e) -> BlockGraph:
    e = _edge(g, e)
    return BlockGraph(g.blocks, tuple(x for x in g.edges if x != e))


def contract_edge(g: BlockGraph, e) -> BlockGraph:
    a, b = _edge(g, e)
    groups = [(v,) for v in range(deg(g)) if v not in (a, b)] + [(a, b)]
    where = {v: k for k, grp in enumerate(groups) for v in grp}
    blocks = [tuple(x for v in grp for x in g.blocks[v]) for grp in groups]
    return make(blocks, {(where[x], where[y]) for x, y in g.edges if where[x] != where[y]})


def all_graphs(labels: Iterable, max_blocks: int | None = None) -> list[BlockGraph]:
    """Every block graph on exactly this label set."""
    labels = sorted(set(labels))
    out = []
    for rgs in kernels.set_partitions(len(labels)):
        k = max(rgs, default=-1) + 1
        if max_blocks is not None and k > max_blocks:
            continue
        blocks = [[] for _ in range(k)]
        for lab, b in zip(labels, rgs):
            blocks[b].append(lab)
        pairs = list(combinations(range(k), 2))
        for mask in range(1 << len(pairs)):
            out.append(make(blocks, [p for i, p in enumerate(pairs) if mask >> i & 1]))
    out.sort()
    return out


def relabel(g: BlockGraph, mapping) -> BlockGraph:
    return make([[mapping[x] for x in b] for b in g.blocks], g.edges)


def lin(f: Callable[[BlockGraph], LinComb], x: LinComb) -> LinComb:
    return lc_sum(f(k) * c for k, c in x.items())


def to_json(g: BlockGraph) -> dict:
    return {"blocks": [list(b) for b in g.blocks], "edges": [list(e) for e in g.edges]}


def from_json(doc) -> BlockGraph:
    if not isinstance(doc, dict) or "blocks" not in doc:
        raise DomainError('a graph is an object with "blocks" and "edges"')
    blocks, edges = doc["blocks"], doc.get("edges", [])
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise DomainError('"blocks" must be a list of label lists')
    for b in blocks:
        if len(set(b)) != len(b):
            raise DomainError(f"duplicate label inside block {b}")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(i, int) for i in e)):
            raise DomainError(f"edge {e!r} is not a pair of block indices")
        pairs.append(tuple(e))
    if len(set(map(frozenset, pairs))) != len(pairs):
        raise DomainError("repeated edge")
    return make(blocks, pairs)


def render(g: BlockGraph) -> str:
    vs = ["{" + ",".join(map(str, b)) + "}" for b in g.blocks]
    es = [f"{vs[a]}-{vs[b]}" for a, b in g.edges]
    return " ".join(vs) + (" | " + " ".join(es) if es else "")
