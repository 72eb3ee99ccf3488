"""Finite products of fields R = K_0 x ... x K_{k-1}.

Every element has a pseudo-inverse (invert the nonzero coordinates), so
``x = x^2 * xbar`` and ``e = x * xbar`` is an idempotent generating the same
principal ideal as x.  The primes of R are the kernels of the coordinate
projections; they are pairwise incomparable, so Spec R is discrete.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .fields import Field
from .finspace import FiniteSpace


@dataclass(frozen=True)
class ProductRing:
    factors: tuple[Field, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def power(cls, field: Field, size: int) -> "ProductRing":
        return cls((field,) * size)

    @property
    def size(self) -> int:
        return len(self.factors)

    def __call__(self, *entries) -> "ProductElement":
        if len(entries) == 1 and isinstance(entries[0], (list, tuple)):
            entries = tuple(entries[0])
        if len(entries) != self.size:
            raise ValueError(f"expected {self.size} coordinates, got {len(entries)}")
        return ProductElement(self, tuple(f(v) for f, v in zip(self.factors, entries)))

    @property
    def zero(self) -> "ProductElement":
        return self(*(0,) * self.size)

    @property
    def one(self) -> "ProductElement":
        return self(*(1,) * self.size)

    def unit_vector(self, j: int) -> "ProductElement":
        return self(*(int(i == j) for i in range(self.size)))

    def random(self, rng: random.Random, zero_rate: float = 0.3) -> "ProductElement":
        # bias toward zeros so supports of every shape show up
        return ProductElement(
            self,
            tuple(f.zero if rng.random() < zero_rate else f.random(rng) for f in self.factors),
        )

    def elements(self):
        """All elements of a finite product of finite fields."""
        for vals in itertools.product(*(f.elements() for f in self.factors)):
            yield ProductElement(self, vals)


@dataclass(frozen=True)
class ProductElement:
    ring: ProductRing
    entries: tuple

    def _zip(self, other, op):
        if other.ring != self.ring:
            raise ValueError("elements of different rings")
        return ProductElement(
            self.ring,
            tuple(op(f, a, b) for f, a, b in zip(self.ring.factors, self.entries, other.entries)),
        )

    def __add__(self, other):
        return self._zip(other, Field.add)

    def __sub__(self, other):
        return self._zip(other, Field.sub)

    def __mul__(self, other):
        return self._zip(other, Field.mul)

    def __neg__(self):
        return ProductElement(self.ring, tuple(f.neg(a) for f, a in zip(self.ring.factors, self.entries)))

    def __pow__(self, k: int):
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def to_json(self) -> dict:
        return {
            "fields": [f.name for f in self.ring.factors],
            "entries": [f.encode(a) for f, a in zip(self.ring.factors, self.entries)],
        }

    @classmethod
    def from_json(cls, data) -> "ProductElement":
        ring = ProductRing(tuple(Field.parse(n) for n in data["fields"]))
        return cls(ring, tuple(f.decode(v) for f, v in zip(ring.factors, data["entries"])))


@dataclass(frozen=True, order=True)
class SpecPoint:
    """The prime ideal ``prod_{i != j} K_i``, kernel of the j-th projection."""

    j: int

    def contains(self, x: ProductElement) -> bool:
        return x.entries[self.j] == 0


def pseudo_inverse(x: ProductElement) -> ProductElement:
    """Invert the nonzero coordinates, keep zeros."""
    return ProductElement(
        x.ring,
        tuple(f.zero if a == 0 else f.inv(a) for f, a in zip(x.ring.factors, x.entries)),
    )


def idempotent_of(x: ProductElement) -> ProductElement:
    """``e = x * xbar``: the support indicator of x."""
    return x * pseudo_inverse(x)


def principal_open(x: ProductElement) -> frozenset[SpecPoint]:
    """D(x): the primes not containing x."""
    return frozenset(p for p in spectrum(x.ring) if not p.contains(x))


def vanishing_set(x: ProductElement) -> frozenset[SpecPoint]:
    """V(x): the primes containing x."""
    return frozenset(p for p in spectrum(x.ring) if p.contains(x))


def spectrum(ring: ProductRing | int, factors: Sequence[Field] | None = None) -> list[SpecPoint]:
    """The primes of a finite product of fields, one per coordinate.

    Accepts a :class:`ProductRing` or a size plus field descriptors.
    """
    if not isinstance(ring, ProductRing):
        size = ring
        if factors is None:
            factors = (Field(0),) * size
        ring = ProductRing(tuple(factors))
        if ring.size != size:
            raise ValueError("number of field descriptors must equal the index size")
    if ring.size == 0:
        raise ValueError("the zero ring has empty spectrum and is excluded")
    return [SpecPoint(j) for j in range(ring.size)]


def prime_included(ring: ProductRing, p: SpecPoint, q: SpecPoint) -> bool:
    """Whether p is a subset of q, decided on ideal generators.

    The kernel of projection j is generated by ``1 - u_j`` (u_j the unit
    vector), so p is inside q iff that generator lies in q.
    """
    gen = ring.one - ring.unit_vector(p.j)
    return q.contains(gen)


def spectrum_space(ring: ProductRing) -> FiniteSpace:
    """Spec R as a finite space: p specializes q (p in cl{q}) iff q is inside p."""
    pts = spectrum(ring)
    leq = tuple(tuple(prime_included(ring, q, p) for q in pts) for p in pts)
    return FiniteSpace(len(pts), leq)
