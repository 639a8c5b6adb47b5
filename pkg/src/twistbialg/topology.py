"""The double twisted bialgebra of finite topologies, stored as quasi-posets.

A quasi-poset is kept already quotiented: ``classes`` are the equivalence classes
of the preorder (sorted label tuples, ordered by minimal label) and ``covers`` is
the Hasse relation of the induced partial order on class indices.  Open sets of
the topology are the up-closed unions of classes.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod

from . import kernels, setcomp
from .errors import DomainError
from .lincomb import LinComb, as_fraction


@dataclass(frozen=True, order=True)
class QuasiPoset:
    classes: tuple[tuple, ...]
    covers: tuple[tuple[int, int], ...]

    def __repr__(self) -> str:
        return f"QuasiPoset({render(self)})"


def _closure(k: int, rel: Iterable[tuple[int, int]]) -> list[list[bool]]:
    reach = [[i == j for j in range(k)] for i in range(k)]
    for a, b in rel:
        reach[a][b] = True
    for m in range(k):
        for i in range(k):
            if reach[i][m]:
                row_m, row_i = reach[m], reach[i]
                for j in range(k):
                    if row_m[j]:
                        row_i[j] = True
    return reach


def find_cycle(k: int, rel: Iterable[tuple[int, int]]) -> list[int] | None:
    """A directed cycle in the relation (as a vertex list), or None."""
    succ: list[list[int]] = [[] for _ in range(k)]
    for a, b in rel:
        succ[a].append(b)
    state = [0] * k
    path: list[int] = []

    def dfs(v):
        state[v] = 1
        path.append(v)
        for w in succ[v]:
            if state[w] == 1:
                return path[path.index(w):] + [w]
            if state[w] == 0:
                found = dfs(w)
                if found:
                    return found
        state[v] = 2
        path.pop()
        return None

    for v in range(k):
        if state[v] == 0:
            found = dfs(v)
            if found:
                return found
    return None


def make(classes: Iterable[Iterable], relations: Iterable[Sequence[int]] = ()) -> QuasiPoset:
    """Build a quasi-poset from classes and any relations ``i < j`` between class indices.

    The relations are closed transitively and reduced to covers; a cycle is an error.
    """
    raw = [tuple(sorted(set(c))) for c in classes]
    seen: set = set()
    for c in raw:
        if not c:
            raise DomainError("classes are nonempty label sets")
        shared = seen.intersection(c)
        if shared:
            raise DomainError(f"label {sorted(shared)[0]!r} is shared by two classes")
        seen.update(c)
    k = len(raw)
    rel = []
    for r in relations:
        a, b = r
        if not (0 <= a < k and 0 <= b < k):
            raise DomainError(f"relation {list(r)} refers to a missing class")
        if a == b:
            raise DomainError(f"relation {list(r)} relates a class to itself")
        rel.append((a, b))
    cycle = find_cycle(k, rel)
    if cycle:
        names = ["{" + ",".join(map(str, raw[i])) + "}" for i in cycle]
        raise DomainError("cyclic covers: " + " < ".join(names))
    reach = _closure(k, rel)
    order = sorted(range(k), key=lambda i: raw[i])
    pos = {old: new for new, old in enumerate(order)}
    covers = []
    for a in range(k):
        for b in range(k):
            if a != b and reach[a][b]:
                if not any(m not in (a, b) and reach[a][m] and reach[m][b] for m in range(k)):
                    covers.append((pos[a], pos[b]))
    return QuasiPoset(tuple(raw[i] for i in order), tuple(sorted(covers)))


EMPTY = QuasiPoset((), ())


def ground(t: QuasiPoset) -> frozenset:
    return frozenset(x for c in t.classes for x in c)


def cl(t: QuasiPoset) -> int:
    return len(t.classes)


@lru_cache(maxsize=1 << 15)
def reach(t: QuasiPoset) -> tuple[tuple[bool, ...], ...]:
    """reach[i][j] is True iff class i <= class j."""
    return tuple(map(tuple, _closure(cl(t), t.covers)))


def strict_pairs(t: QuasiPoset) -> list[tuple[int, int]]:
    r = reach(t)
    return [(i, j) for i in range(cl(t)) for j in range(cl(t)) if i != j and r[i][j]]


def _component_sets(k: int, edges) -> list[list[int]]:
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for v in range(k):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def cc(t: QuasiPoset) -> int:
    return len(_component_sets(cl(t), t.covers))


def induced(t: QuasiPoset, idx: Iterable[int]) -> QuasiPoset:
    return _induced(t, tuple(sorted(idx)))


@lru_cache(maxsize=1 << 16)
def _induced(t: QuasiPoset, idx: tuple[int, ...]) -> QuasiPoset:
    pos = {v: i for i, v in enumerate(idx)}
    r = reach(t)
    rel = [(pos[a], pos[b]) for a in idx for b in idx if a != b and r[a][b]]
    return make([t.classes[i] for i in idx], rel)


def components(t: QuasiPoset) -> list[QuasiPoset]:
    return [induced(t, c) for c in _component_sets(cl(t), t.covers)]


def disjoint_union(s: QuasiPoset, t: QuasiPoset) -> QuasiPoset:
    shared = ground(s) & ground(t)
    if shared:
        raise DomainError(f"ground sets overlap on {sorted(shared)!r}")
    n = cl(s)
    return make(s.classes + t.classes, list(s.covers) + [(a + n, b + n) for a, b in t.covers])


def joint_product(s: QuasiPoset, t: QuasiPoset) -> QuasiPoset:
    """S ⊛ T: the disjoint union with every class of S below every class of T."""
    shared = ground(s) & ground(t)
    if shared:
        raise DomainError(f"ground sets overlap on {sorted(shared)!r}")
    n, m = cl(s), cl(t)
    rel = list(s.covers) + [(a + n, b + n) for a, b in t.covers]
    rel += [(i, n + j) for i in range(n) for j in range(m)]
    return make(s.classes + t.classes, rel)


def is_open(t: QuasiPoset, idx: Iterable[int]) -> bool:
    idx = set(idx)
    return all(b in idx for a, b in t.covers if a in idx)


@lru_cache(maxsize=1 << 14)
def open_sets(t: QuasiPoset) -> tuple[tuple[int, ...], ...]:
    """Up-closed sets of class indices, ordered by size then lexicographically."""
    k = cl(t)
    out = []
    for mask in range(1 << k):
        idx = tuple(i for i in range(k) if mask >> i & 1)
        if is_open(t, idx):
            out.append(idx)
    out.sort(key=lambda s: (len(s), s))
    return tuple(out)


def _class_indices(t: QuasiPoset, part: frozenset) -> list[int] | None:
    idx = []
    for i, c in enumerate(t.classes):
        inside = part.intersection(c)
        if inside and len(inside) != len(c):
            return None
        if inside:
            idx.append(i)
    return idx


def restrict(t: QuasiPoset, part) -> QuasiPoset | None:
    """T|_I when I is a union of classes, else None."""
    part = frozenset(part)
    if not part <= ground(t):
        raise DomainError("restriction set is not contained in the ground set")
    idx = _class_indices(t, part)
    return None if idx is None else induced(t, idx)


def delta_split(t: QuasiPoset, left, right) -> tuple[QuasiPoset, QuasiPoset] | None:
    """Δ_{I,J}(T) = T|_I ⊗ T|_J when J is open, else None."""
    left, right = frozenset(left), frozenset(right)
    if left & right or (left | right) != ground(t):
        raise DomainError("split sets must partition the ground set")
    idx = _class_indices(t, right)
    if idx is None or not is_open(t, idx):
        return None
    comp = [i for i in range(cl(t)) if i not in idx]
    return induced(t, comp), induced(t, idx)


def coproduct(t: QuasiPoset) -> list[tuple[QuasiPoset, QuasiPoset]]:
    k = cl(t)
    return [(induced(t, [i for i in range(k) if i not in o]), induced(t, o)) for o in open_sets(t)]


def _groups_of(rgs: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    groups: list[list[int]] = [[] for _ in range(max(rgs, default=-1) + 1)]
    for v, b in enumerate(rgs):
        groups[b].append(v)
    return tuple(tuple(g) for g in groups)


def _is_compatible(t: QuasiPoset, e) -> bool:
    r = reach(t)
    # every class of ∼ must be connected for the induced order
    for grp in e:
        if len(grp) > 1:
            rel = [(a, b) for a in grp for b in grp if a != b and r[a][b]]
            if len(_component_sets(len(grp), [(grp.index(a), grp.index(b)) for a, b in rel])) != 1:
                return False
    # the quotient preorder must not identify two distinct classes of ∼
    where = {v: k for k, grp in enumerate(e) for v in grp}
    rel = {(where[a], where[b]) for a in range(cl(t)) for b in range(cl(t)) if r[a][b] and where[a] != where[b]}
    return find_cycle(len(e), rel) is None


@lru_cache(maxsize=1 << 14)
def compatible_equivalences(t: QuasiPoset) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """CE(T) as partitions of the class indices, by brute force over all partitions."""
    out = []
    for rgs in kernels.set_partitions(cl(t)):
        e = _groups_of(rgs)
        if _is_compatible(t, e):
            out.append(e)
    return tuple(out)


def _check_compatible(t: QuasiPoset, e) -> tuple[tuple[int, ...], ...]:
    e = tuple(tuple(sorted(g)) for g in e)
    if sorted(v for g in e for v in g) != list(range(cl(t))):
        raise DomainError("equivalence is not a partition of the classes")
    if not _is_compatible(t, e):
        raise DomainError("equivalence is not compatible with the topology")
    return e


def quotient(t: QuasiPoset, e) -> QuasiPoset:
    """T/∼: groups become classes, ordered by the transitive closure of ≤ ∪ ∼."""
    e = _check_compatible(t, e)
    where = {v: k for k, grp in enumerate(e) for v in grp}
    r = reach(t)
    rel = {(where[a], where[b]) for a in range(cl(t)) for b in range(cl(t)) if r[a][b] and where[a] != where[b]}
    return make([tuple(x for v in grp for x in t.classes[v]) for grp in e], rel)


def restriction(t: QuasiPoset, e) -> QuasiPoset:
    """T|∼: same classes, only the comparabilities inside a group survive."""
    e = _check_compatible(t, e)
    where = {v: k for k, grp in enumerate(e) for v in grp}
    return make(t.classes, [(a, b) for a, b in strict_pairs(t) if where[a] == where[b]])


@lru_cache(maxsize=1 << 14)
def internal_delta(t: QuasiPoset) -> LinComb:
    return LinComb(((quotient(t, e), restriction(t, e)), 1) for e in compatible_equivalences(t))


def eps(t: QuasiPoset) -> Fraction:
    return Fraction(1 if not t.classes else 0)


def eps_prime(t: QuasiPoset) -> Fraction:
    """1 when the preorder is an equivalence (no two classes comparable)."""
    return Fraction(1 if not t.covers else 0)


def strict_extensions(t: QuasiPoset) -> list[tuple[int, ...]]:
    """L(T): packed words on classes, strictly increasing along the order."""
    return [f for f in kernels.packed_words(cl(t)) if all(f[a] < f[b] for a, b in t.covers)]


def weak_extensions(t: QuasiPoset) -> list[tuple[int, ...]]:
    """L'(T): packed words on classes, weakly increasing along the order."""
    return [f for f in kernels.packed_words(cl(t)) if all(f[a] <= f[b] for a, b in t.covers)]


@lru_cache(maxsize=1 << 14)
def phi_ehr(t: QuasiPoset) -> LinComb:
    return LinComb((setcomp.merge_by(t.classes, f), 1) for f in strict_extensions(t))


def phi_weak(t: QuasiPoset) -> LinComb:
    """Σ over L'(T) of the fiber compositions."""
    return LinComb((setcomp.merge_by(t.classes, f), 1) for f in weak_extensions(t))


def heap_order_count(t: QuasiPoset) -> int:
    """Linear extensions of the class poset (bijective strict extensions); ho(∅) = 1."""
    return sum(1 for f in strict_extensions(t) if max(f, default=0) == cl(t))


def lambda_ho(t: QuasiPoset) -> Fraction:
    return Fraction(heap_order_count(t), factorial(cl(t)))


def _weights(u) -> Callable[[int], Fraction]:
    if u is None:
        return lambda n: Fraction(1)
    if callable(u):
        return lambda n: as_fraction(u(n))
    seq = [as_fraction(x) for x in u]
    return lambda n: seq[n - 1]


def phi_hom_top(t: QuasiPoset, u=None) -> LinComb:
    """φ_u(T) = (Π u_{#I}) (φ_ehr ← λ_ho)(T)."""
    w = _weights(u)
    scale = prod((w(len(c)) for c in t.classes), start=Fraction(1))
    out = LinComb()
    for (left, right), c in internal_delta(t).items():
        out = out + phi_ehr(left) * (c * lambda_ho(right))
    return out * scale


def phi_ehr_q(t: QuasiPoset, q) -> LinComb:
    """θ_{1/q}(q^cl φ_ehr(T)); q = 0 gives φ_1."""
    return _phi_ehr_q(t, as_fraction(q))


@lru_cache(maxsize=1 << 14)
def _phi_ehr_q(t: QuasiPoset, q: Fraction) -> LinComb:
    if q == 0:
        return phi_hom_top(t)
    return setcomp.theta_q(phi_ehr(t) * q ** cl(t), 1 / q)


def gamma(t: QuasiPoset) -> LinComb:
    """Γ(T) = Σ_{∼ ∈ CE(T)} T/∼."""
    return LinComb((quotient(t, e), 1) for e in compatible_equivalences(t))


def gamma_inv(t: QuasiPoset) -> LinComb:
    """Γ'(T) = Σ_{∼ ∈ CE(T)} (-1)^{cl(T)+cl(∼)} T/∼."""
    return LinComb((quotient(t, e), (-1) ** (cl(t) + len(e))) for e in compatible_equivalences(t))


@lru_cache(maxsize=None)
def _posets_on(k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All strict partial orders on range(k), as transitively closed relation sets."""
    pairs = [(a, b) for a in range(k) for b in range(k) if a < b]
    out = []
    for dirs in product((0, 1, 2), repeat=len(pairs)):
        rel = set()
        for (a, b), d in zip(pairs, dirs):
            if d == 1:
                rel.add((a, b))
            elif d == 2:
                rel.add((b, a))
        if all((a, c) in rel for a, b in rel for b2, c in rel if b == b2):
            out.append(tuple(sorted(rel)))
    return tuple(out)


def all_quasiposets(labels: Iterable, max_classes: int | None = None) -> list[QuasiPoset]:
    """Every finite topology on exactly this label set."""
    labels = sorted(set(labels))
    out = set()
    for rgs in kernels.set_partitions(len(labels)):
        k = max(rgs, default=-1) + 1
        if max_classes is not None and k > max_classes:
            continue
        classes = [[] for _ in range(k)]
        for lab, b in zip(labels, rgs):
            classes[b].append(lab)
        for rel in _posets_on(k):
            out.add(make(classes, rel))
    return sorted(out)


def relabel(t: QuasiPoset, mapping) -> QuasiPoset:
    return make([[mapping[x] for x in c] for c in t.classes], t.covers)


def chain(*classes) -> QuasiPoset:
    """Convenience: the chain c_1 < c_2 < ... (each argument a class)."""
    return make([c if isinstance(c, (list, tuple, set, frozenset)) else [c] for c in classes],
                [(i, i + 1) for i in range(len(classes) - 1)])


def to_json(t: QuasiPoset) -> dict:
    return {"classes": [list(c) for c in t.classes], "covers": [list(e) for e in t.covers]}


def from_json(doc) -> QuasiPoset:
    if not isinstance(doc, dict) or "classes" not in doc:
        raise DomainError('a quasi-poset is an object with "classes" and "covers"')
    classes, covers = doc["classes"], doc.get("covers", [])
    if not isinstance(classes, list) or not all(isinstance(c, list) for c in classes):
        raise DomainError('"classes" must be a list of label lists')
    for c in classes:
        if len(set(c)) != len(c):
            raise DomainError(f"duplicate label inside class {c}")
    pairs = []
    for e in covers:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(i, int) for i in e)):
            raise DomainError(f"cover {e!r} is not a pair of class indices")
        pairs.append(tuple(e))
    return make(classes, pairs)


def render(t: QuasiPoset) -> str:
    vs = ["{" + ",".join(map(str, c)) + "}" for c in t.classes]
    es = [f"{vs[a]}<{vs[b]}" for a, b in t.covers]
    return " ".join(vs) + (" | " + " ".join(es) if es else "")
