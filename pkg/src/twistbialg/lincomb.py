"""Exact sparse linear combinations over ordered basis keys.

A ``LinComb`` is an immutable mapping ``key -> Fraction`` with no zero entries.
Integral coefficients are held as plain ints, which compare and hash equal to the
corresponding Fractions but are much cheaper to add and multiply.
Keys only need to be hashable and mutually comparable; iteration always follows
their natural order, so two constructions of the same value serialize the same way.
Tensor keys are plain tuples ``(left, right)`` (or longer), which Python already
orders lexicographically.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational
from typing import Any

Scalar = int | Fraction


def as_fraction(value: Any) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction; reject floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}") from None
        except ValueError:
            raise ValueError(f"{value!r} is not a rational number") from None
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _coeff(value: Any) -> int | Fraction:
    """Internal coefficient form: integral values as int (cheaper arithmetic), others as Fraction."""
    t = type(value)
    if t is int:
        return value
    if t is Fraction:
        return value.numerator if value.denominator == 1 else value
    c = as_fraction(value)
    return c.numerator if c.denominator == 1 else c


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class LinComb(Mapping):
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple[Any, Any]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            c = _coeff(coeff)
            if c:
                total = acc.get(key, 0) + c
                if total:
                    acc[key] = total
                else:
                    del acc[key]
        self._terms = {k: _coeff(v) for k, v in sorted(acc.items(), key=lambda kv: kv[0])}
        self._hash = None

    @classmethod
    def basis(cls, key, coeff: Scalar = 1) -> LinComb:
        return cls(((key, coeff),))

    # Mapping protocol -------------------------------------------------
    def __getitem__(self, key) -> Fraction:
        return Fraction(self._terms.get(key, 0))

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def items(self):
        return self._terms.items()

    # Arithmetic -------------------------------------------------------
    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return LinComb(list(self.items()) + list(other.items()))

    def __sub__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return LinComb(list(self.items()) + [(k, -c) for k, c in other.items()])

    def __neg__(self) -> LinComb:
        return self * -1

    def __mul__(self, scalar) -> LinComb:
        if isinstance(scalar, LinComb):
            return NotImplemented
        c = _coeff(scalar)
        if c == 1:
            return self
        return LinComb((k, v * c) for k, v in self.items())

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == LinComb(other)
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        body = " + ".join(f"{c}*{k!r}" for k, c in self.items())
        return f"LinComb({body})"

    # Linear maps ------------------------------------------------------
    def apply(self, f: Callable[[Any], LinComb]) -> LinComb:
        """Linear extension of a basis map returning linear combinations."""
        return lc_sum(f(k) * c for k, c in self.items())

    def map_keys(self, f: Callable[[Any], Any]) -> LinComb:
        """Linear extension of a basis-to-basis map (``None`` means zero)."""
        return LinComb((f(k), c) for k, c in self.items() if f(k) is not None)

    def evaluate(self, form: Callable[[Any], Any]) -> Fraction:
        """Apply a scalar-valued linear form."""
        return sum((c * as_fraction(form(k)) for k, c in self.items()), Fraction(0))

    def to_json(self, encode_key: Callable[[Any], Any] = lambda k: k) -> list[dict]:
        return [{"coeff": format_fraction(c), "key": encode_key(k)} for k, c in self.items()]

    @classmethod
    def from_json(cls, doc: list[dict], decode_key: Callable[[Any], Any] = lambda k: k) -> LinComb:
        return cls((decode_key(t["key"]), as_fraction(t["coeff"])) for t in doc)


ZERO = LinComb()


def lc_sum(parts: Iterable[LinComb]) -> LinComb:
    pairs: list = []
    for p in parts:
        pairs.extend(p.items())
    return LinComb(pairs)


def lc_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lc_scale(a: LinComb, c) -> LinComb:
    return a * c


def bilinear_extend(f: Callable[[Any, Any], LinComb], a: LinComb, b: LinComb) -> LinComb:
    """``sum a_i b_j f(k_i, k_j)`` for a basis-level bilinear map ``f``."""
    pairs: list = []
    for ka, ca in a.items():
        for kb, cb in b.items():
            for k, c in f(ka, kb).items():
                pairs.append((k, c * ca * cb))
    return LinComb(pairs)


def tensor(a: LinComb, b: LinComb) -> LinComb:
    return LinComb(((ka, kb), ca * cb) for ka, ca in a.items() for kb, cb in b.items())


def linear_extend(f: Callable[[Any], LinComb], a: LinComb) -> LinComb:
    return a.apply(f)
