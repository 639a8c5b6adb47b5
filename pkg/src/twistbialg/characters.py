"""Characters of a connected double twisted bialgebra and the two convolutions.

Everything here is generic over a :class:`Bialgebra` descriptor; the three concrete
descriptors ``COMP``, ``GRAPHS`` and ``TOP`` are defined at the bottom.

* ``*`` is the convolution dual to the coproduct Δ (sum over splits ``I ⊔ J``).
* ``⋆`` is the convolution dual to the internal coproduct δ.
* ``φ ← λ`` is ``(φ ⊗ λ) ∘ δ``.
"""
from __future__ import annotations

import threading
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import graphs, setcomp, topology
from .combinat import hilbert
from .errors import NotInvertibleError
from .lincomb import LinComb, as_fraction, lc_sum


@dataclass(frozen=True)
class Bialgebra:
    """What the generic algorithms need to know about a double twisted bialgebra."""

    name: str
    unit: Any
    ground: Callable[[Any], frozenset]
    product: Callable[[Any, Any], LinComb]
    coproduct: Callable[[Any], list]  # every nonzero Δ_{I,J}(x) as a (left, right) pair
    split: Callable[[Any, frozenset, frozenset], tuple | None]
    internal_delta: Callable[[Any], LinComb]
    eps_prime: Callable[[Any], Fraction]
    standardize: Callable[[Any], Any] = lambda x: x
    components: Callable[[Any], list] | None = None
    size: Callable[[Any], int] = len


class LinearForm:
    """A rational-valued linear form on a bialgebra, evaluated lazily and memoized.

    With ``multiplicative=True`` (a character) the value on the unit is 1 and, when
    the descriptor knows connected components, evaluation factors through them.
    The memo is keyed on relabeled basis elements, since every form used here is
    invariant under relabeling.
    """

    def __init__(self, bialg: Bialgebra, rule: Callable[[Any], Any], name: str = "",
                 multiplicative: bool = False):
        self.bialg = bialg
        self.rule = rule
        self.name = name or getattr(rule, "__name__", "form")
        self.multiplicative = multiplicative
        self._memo: dict = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        kind = "Character" if self.multiplicative else "LinearForm"
        return f"{kind}({self.name} on {self.bialg.name})"

    def __call__(self, x) -> Fraction:
        if isinstance(x, LinComb):
            return x.evaluate(self)
        B = self.bialg
        if self.multiplicative:
            if x == B.unit:
                return Fraction(1)
            if B.components is not None:
                comps = B.components(x)
                if len(comps) > 1:
                    out = Fraction(1)
                    for c in comps:
                        out *= self(c)
                    return out
        key = B.standardize(x)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        value = as_fraction(self.rule(x))
        with self._lock:
            self._memo.setdefault(key, value)
        return value


def Character(bialg: Bialgebra, rule: Callable[[Any], Any], name: str = "") -> LinearForm:
    return LinearForm(bialg, rule, name, multiplicative=True)


def counit(bialg: Bialgebra) -> LinearForm:
    """ε: the unit of *."""
    return Character(bialg, lambda x: 1 if x == bialg.unit else 0, "eps")


def counit_prime(bialg: Bialgebra) -> LinearForm:
    """ε′: the unit of ⋆."""
    return Character(bialg, bialg.eps_prime, "eps'")


def constant_one(bialg: Bialgebra) -> LinearForm:
    return Character(bialg, lambda x: 1, "one")


# -- the two convolutions ------------------------------------------------

def conv_D(a: Callable, b: Callable, x, bialg: Bialgebra) -> Fraction:
    """(a * b)(x) = Σ over Δ-splits of a(x_I) b(x_J)."""
    return sum((a(l) * b(r) for l, r in bialg.coproduct(x)), Fraction(0))


def conv_d(a: Callable, b: Callable, x, bialg: Bialgebra) -> Fraction:
    """(a ⋆ b)(x) = Σ a(x′) b(x″) over the internal coproduct."""
    return sum((c * a(l) * b(r) for (l, r), c in bialg.internal_delta(x).items()), Fraction(0))


def _is_char(*forms) -> bool:
    return all(isinstance(f, LinearForm) and f.multiplicative for f in forms)


def convolve(a: LinearForm, b: LinearForm) -> LinearForm:
    B = a.bialg
    return LinearForm(B, lambda x: conv_D(a, b, x, B), f"({a.name}*{b.name})", _is_char(a, b))


def convolve_delta(a: LinearForm, b: LinearForm) -> LinearForm:
    B = a.bialg
    return LinearForm(B, lambda x: conv_d(a, b, x, B), f"({a.name}⋆{b.name})", _is_char(a, b))


# -- powers and inverses -------------------------------------------------

def _reduced_powers(lam: LinearForm, x, memo: dict) -> list[Fraction]:
    """[(λ-ε)^{*n}(x) for n = 0..|ground(x)|]."""
    B = lam.bialg
    key = B.standardize(x)
    if key in memo:
        return memo[key]
    n = len(B.ground(x))
    out = [Fraction(1 if x == B.unit else 0)] + [Fraction(0)] * n
    for left, right in B.coproduct(x):
        if left == B.unit:
            continue
        f = lam(left)
        if not f:
            continue
        tail = _reduced_powers(lam, right, memo)
        for k, v in enumerate(tail):
            if k + 1 <= n:
                out[k + 1] += f * v
    memo[key] = out
    return out


def power(lam: LinearForm, q) -> LinearForm:
    """λ^q = Σ_n H_n(q) (λ-ε)^{*n}; the sum stops at n = |ground| by nilpotence."""
    q = as_fraction(q)
    memo: dict = {}

    def rule(x):
        return sum((hilbert(n, q) * v for n, v in enumerate(_reduced_powers(lam, x, memo))), Fraction(0))

    return LinearForm(lam.bialg, rule, f"{lam.name}^{q}", lam.multiplicative)


def power_at(lam: LinearForm, q, x) -> Fraction:
    return power(lam, q)(x)


def inverse_conv(lam: LinearForm) -> LinearForm:
    """The *-inverse, λ^{-1}."""
    return power(lam, -1)


def inverse_star(lam: LinearForm) -> LinearForm:
    """The ⋆-inverse μ with μ ⋆ λ = ε′, by triangular recursion on δ.

    In δ(x) the only left legs equal to x come with a right leg made of one-vertex
    pieces; all other left legs are strictly smaller.  This is solvable exactly when
    λ does not vanish on one-vertex elements.
    """
    B = lam.bialg
    eps1 = counit_prime(B)

    def rule(x):
        diag = Fraction(0)
        rest = Fraction(0)
        for (left, right), c in B.internal_delta(x).items():
            if left == x:
                diag += c * lam(right)
            else:
                rest += c * mu(left) * lam(right)
        if not diag:
            raise NotInvertibleError(f"{lam.name} vanishes on a one-vertex element of {x!r}")
        return (eps1(x) - rest) / diag

    mu = LinearForm(B, rule, f"{lam.name}^(⋆-1)", lam.multiplicative)
    return mu


# -- morphisms -----------------------------------------------------------

def act_left(phi: Callable[[Any], LinComb], lam: Callable, x, bialg: Bialgebra) -> LinComb:
    """(φ ← λ)(x) = Σ λ(x″) φ(x′)."""
    return lc_sum(phi(l) * (c * lam(r)) for (l, r), c in bialg.internal_delta(x).items())


def acted(phi: Callable[[Any], LinComb], lam: Callable, bialg: Bialgebra) -> Callable[[Any], LinComb]:
    return lambda x: act_left(phi, lam, x, bialg)


def eps_prime_after(phi: Callable[[Any], LinComb], bialg: Bialgebra, name: str = "") -> LinearForm:
    """The character ε′∘φ for a morphism φ into set compositions."""
    return Character(bialg, lambda x: phi(x).evaluate(setcomp.eps_prime), name or "eps'∘phi")


def universal_to_comp(lam: Callable, x, bialg: Bialgebra) -> LinComb:
    """Σ over set compositions (A_1..A_k) of λ^{⊗k}(Δ_{A_1..A_k}(x)) (A_1..A_k).

    Computed by peeling the first block off with Δ and recursing on the rest.
    """
    B = bialg
    if x == B.unit:
        return LinComb.basis(setcomp.UNIT)
    out = []
    for left, right in B.coproduct(x):
        if left == B.unit:
            continue
        v = lam(left)
        if not v:
            continue
        head = tuple(sorted(B.ground(left)))
        for tail, c in universal_to_comp(lam, right, B).items():
            out.append(((head,) + tail, v * c))
    return LinComb(out)


def universal_to_comp_literal(lam: Callable, x, bialg: Bialgebra) -> LinComb:
    """Same sum, evaluated literally through iterated splits over every composition."""
    B = bialg
    out = []
    for comp in setcomp.set_compositions(B.ground(x)):
        value, rest = Fraction(1), x
        for i, block in enumerate(comp):
            remaining = frozenset(y for b in comp[i + 1:] for y in b)
            cut = B.split(rest, frozenset(block), remaining)
            if cut is None:
                value = Fraction(0)
                break
            value *= lam(cut[0])
            rest = cut[1]
        if value:
            out.append((comp, value))
    return LinComb(out)


# -- concrete descriptors ------------------------------------------------

def _std_map(labels: Iterable) -> dict:
    return {lab: i for i, lab in enumerate(sorted(labels))}


def _comp_split(c, left, right):
    return setcomp.deconcat(c, left)


COMP = Bialgebra(
    name="Comp",
    unit=setcomp.UNIT,
    ground=setcomp.ground,
    product=setcomp.quasi_shuffle,
    coproduct=setcomp.coproduct,
    split=_comp_split,
    internal_delta=setcomp.internal_delta,
    eps_prime=setcomp.eps_prime,
    standardize=lambda c: setcomp.relabel(c, _std_map(setcomp.ground(c))),
    size=len,
)

GRAPHS = Bialgebra(
    name="Gr'",
    unit=graphs.EMPTY,
    ground=graphs.ground,
    product=lambda g, h: LinComb.basis(graphs.disjoint_union(g, h)),
    coproduct=graphs.coproduct,
    split=graphs.split,
    internal_delta=graphs.internal_delta,
    eps_prime=graphs.eps_prime,
    standardize=lambda g: graphs.relabel(g, _std_map(graphs.ground(g))),
    components=graphs.components,
    size=graphs.deg,
)

TOP = Bialgebra(
    name="Top",
    unit=topology.EMPTY,
    ground=topology.ground,
    product=lambda s, t: LinComb.basis(topology.disjoint_union(s, t)),
    coproduct=topology.coproduct,
    split=topology.delta_split,
    internal_delta=topology.internal_delta,
    eps_prime=topology.eps_prime,
    standardize=lambda t: topology.relabel(t, _std_map(topology.ground(t))),
    components=topology.components,
    size=topology.cl,
)


def lambda_ao() -> LinearForm:
    """Acyclic orientations on graphs."""
    return Character(GRAPHS, graphs.ao_count, "ao")


def lambda_ho() -> LinearForm:
    """ho(T)/cl(T)! on finite topologies."""
    return Character(TOP, topology.lambda_ho, "ho")


def lambda_chr_q(q) -> LinearForm:
    """The character with φ_chr_q = φ_1 ← λ_chr_q, i.e. (λ_one)^{⋆-1} ⋆ (ε′∘φ_chr_q)."""
    q = as_fraction(q)
    inv_one = inverse_star(constant_one(GRAPHS))
    return convolve_delta(inv_one, eps_prime_after(lambda g: graphs.phi_chr_q(g, q), GRAPHS))


def lambda_ehr_q(q) -> LinearForm:
    """The character with φ_ehr_q = φ_1 ← λ_ehr_q, where here φ_1 = φ_ehr ← λ_ho."""
    q = as_fraction(q)
    return convolve_delta(inverse_star(lambda_ho()),
                          eps_prime_after(lambda t: topology.phi_ehr_q(t, q), TOP))
