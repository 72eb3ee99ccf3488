"""Hochster's monoid algebra K[M]: connected and pointwise integral, not integral.

The monoid is built from a totally ordered set E.  On ``L = E x N*``

    (x, m) * (y, n) = (x, m)      if x < y
                    = (y, n)      if x > y
                    = (x, m + n)  if x == y

and M is L with a neutral element adjoined.  Elements of R = K[M] are finitely
supported K-linear combinations of basis elements ``e_u`` (u in M), stored
exactly; no level truncation ever happens.

Primes of R are sorted by the cut ``(I, J)`` of E they induce
(``I = {x | e_(x,1) in p}``).  :func:`cut_evaluation` realizes each cut class
as an explicit ring homomorphism into K, K[t], or K[a, b]/(a(b-1)); the last
one only exists when E has adjacent elements, i.e. is not gapfree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .fields import Field

# ---------------------------------------------------------------------------
# ordered index sets


@dataclass(frozen=True)
class FiniteChain:
    """The chain 0 < 1 < ... < size-1."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("a chain needs at least one element")

    name = property(lambda self: f"chain:{self.size}")
    is_gapfree = False

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.size

    def coerce(self, x):
        x = int(x)
        if not self.contains(x):
            raise ValueError(f"{x} is not in {self.name}")
        return x

    def between(self, x, y):
        """Some z with x < z < y, or None."""
        return x + 1 if y - x >= 2 else None

    def successor(self, x):
        return x + 1 if x + 1 < self.size else None

    def predecessor(self, x):
        return x - 1 if x > 0 else None

    def minimum(self):
        return 0

    def maximum(self):
        return self.size - 1

    def window(self, k: int | None = None) -> list:
        return list(range(self.size if k is None else min(k, self.size)))

    def encode(self, x):
        return x

    def decode(self, v):
        return self.coerce(v)


@dataclass(frozen=True)
class RationalLine:
    """Q with its usual order; gapfree, no least or greatest element."""

    name = "rationals"
    is_gapfree = True

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction))

    def coerce(self, x):
        return Fraction(x)

    def between(self, x, y):
        return (x + y) / 2 if x < y else None

    def successor(self, x):
        return None

    def predecessor(self, x):
        return None

    def minimum(self):
        return None

    def maximum(self):
        return None

    def window(self, k: int | None = None) -> list:
        """A fixed finite sample of Q used to draw random elements."""
        pts = sorted({Fraction(a, b) for a in range(-6, 7) for b in (1, 2, 3, 4)})
        return pts if k is None else pts[len(pts) // 2 - k // 2:][:k]

    def encode(self, x):
        return str(x)

    def decode(self, v):
        return Fraction(v)


OrderedIndex = FiniteChain | RationalLine


def parse_index(text: str) -> OrderedIndex:
    text = text.strip().lower()
    if text in ("rationals", "q"):
        return RationalLine()
    if text.startswith("chain:"):
        return FiniteChain(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown index {text!r}; expected chain:N or rationals")


# ---------------------------------------------------------------------------
# the monoid


class _One:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ONE"

    def __reduce__(self):
        return (_One, ())


ONE = _One()


@dataclass(frozen=True)
class Pair:
    x: object
    m: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and self.m >= 1):
            raise ValueError(f"level must be a positive integer, got {self.m!r}")

    def __repr__(self):
        return f"({self.x},{self.m})"


MonoidElement = Pair | _One


def monoid_mul(a: MonoidElement, b: MonoidElement) -> MonoidElement:
    if a is ONE:
        return b
    if b is ONE:
        return a
    if a.x < b.x:
        return a
    if a.x > b.x:
        return b
    return Pair(a.x, a.m + b.m)


def monoid_pow(a: MonoidElement, n: int) -> MonoidElement:
    if n < 0:
        raise ValueError("negative power")
    if n == 0 or a is ONE:
        return ONE
    return Pair(a.x, a.m * n)


def monoid_key(a: MonoidElement):
    """Canonical ordering: ONE first, then by E-coordinate, then level."""
    return (0, 0, 0) if a is ONE else (1, a.x, a.m)


# ---------------------------------------------------------------------------
# the algebra


@dataclass(frozen=True)
class MonoidAlgebra:
    field: Field
    index: OrderedIndex

    def element(self, terms: dict | Iterable = ()) -> "RingElement":
        items = terms.items() if isinstance(terms, dict) else terms
        out: dict = {}
        f = self.field
        for u, c in items:
            if u is not ONE:
                u = Pair(self.index.coerce(u.x), u.m)
            out[u] = f.add(out.get(u, f.zero), f(c))
        return RingElement(self, out)

    def e(self, x, m: int = 1) -> "RingElement":
        return self.element({Pair(self.index.coerce(x), m): 1})

    def scalar(self, c) -> "RingElement":
        return self.element({ONE: c})

    @property
    def one(self) -> "RingElement":
        return self.scalar(1)

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def random(self, rng: random.Random, max_terms: int = 6, max_level: int = 4,
               points: list | None = None, with_one: bool = True) -> "RingElement":
        pts = self.index.window() if points is None else list(points)
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            if with_one and rng.random() < 0.15:
                u = ONE
            else:
                u = Pair(rng.choice(pts), rng.randint(1, max_level))
            terms[u] = self.field.random(rng, nonzero=True)
        return self.element(terms)


class RingElement:
    """A finitely supported K-combination of monoid basis elements.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: MonoidAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = {u: c for u, c in terms.items() if c != 0}

    @property
    def field(self) -> Field:
        return self.algebra.field

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = f.add(out.get(u, f.zero), c)
        return RingElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.algebra, {u: self.field.neg(c) for u, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        out: dict = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                w = monoid_mul(u, v)
                out[w] = f.add(out.get(w, f.zero), f.mul(c, d))
        return RingElement(self.algebra, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.algebra.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def in_base_field(self) -> bool:
        return all(u is ONE for u in self.terms)

    def coefficient(self, u: MonoidElement):
        return self.terms.get(u, self.field.zero)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: monoid_key(t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for u, c in self.sorted_terms():
            parts.append(f"{c}" if u is ONE else f"{c}*e{u!r}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        f, idx = self.field, self.algebra.index
        return {
            "field": f.name,
            "index": idx.name,
            "terms": [
                [None if u is ONE else [idx.encode(u.x), u.m], f.encode(c)]
                for u, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "RingElement":
        alg = MonoidAlgebra(Field.parse(data["field"]), parse_index(data["index"]))
        terms = {}
        for key, c in data["terms"]:
            u = ONE if key is None else Pair(alg.index.decode(key[0]), int(key[1]))
            terms[u] = alg.field.decode(c)
        return RingElement(alg, terms)


def ring_add(r: RingElement, s: RingElement) -> RingElement:
    return r + s


def ring_mul(r: RingElement, s: RingElement) -> RingElement:
    return r * s


# ---------------------------------------------------------------------------
# reducedness and idempotents


@dataclass(frozen=True)
class LeadingData:
    level: int
    pivot: object
    coeff: object


def leading_data(r: RingElement) -> LeadingData | None:
    """Highest level l in the support, then the largest E-coordinate z at that level."""
    pairs = [u for u in r.terms if u is not ONE]
    if not pairs:
        return None
    level = max(u.m for u in pairs)
    pivot = max(u.x for u in pairs if u.m == level)
    return LeadingData(level, pivot, r.terms[Pair(pivot, level)])


class InBaseField(ValueError):
    """Raised for elements of K, where reducedness is plain field logic."""


@dataclass(frozen=True)
class ReducednessCertificate:
    element: RingElement
    level: int
    pivot: object
    coeff: object
    square_term: Pair
    square_coeff: object

    @property
    def square_nonzero(self) -> bool:
        return self.square_coeff != 0

    @property
    def square_differs(self) -> bool:
        # (z, 2l) lies above the top level l of r, so r has no such term
        return self.element.coefficient(self.square_term) != self.square_coeff


def reducedness_witness(r: RingElement) -> ReducednessCertificate:
    """Certify r^2 != 0 and r^2 != r for r outside K.

    The only product of basis elements landing on ``(z, 2l)`` is
    ``e_(z,l)^2``, so r^2 carries the term ``c^2 e_(z,2l)``.  The
    certificate records the coefficient actually found in the computed
    square; callers compare it with ``c^2``.
    """
    lead = leading_data(r)
    if lead is None:
        raise InBaseField(f"{r!r} lies in K; r^2 = r iff r in {{0, 1}}")
    term = Pair(lead.pivot, 2 * lead.level)
    sq = r * r
    return ReducednessCertificate(r, lead.level, lead.pivot, lead.coeff, term, sq.coefficient(term))


def certificate_valid(cert: ReducednessCertificate) -> bool:
    f = cert.element.field
    return (
        cert.square_coeff == f.mul(cert.coeff, cert.coeff)
        and cert.square_nonzero
        and cert.square_differs
    )


def idempotent_check(r: RingElement) -> bool:
    return r * r == r


# ---------------------------------------------------------------------------
# cuts


@dataclass(frozen=True)
class Cut:
    """A partition E = I + J with I down-closed, J up-closed.

    kinds: ``at`` (pivot ``z`` on ``side`` "lower" or "upper"),
    ``lower_empty`` (I empty), ``upper_empty`` (J empty), ``gap`` (irrational
    cut on Q given by ``in_lower_fn``).
    """

    kind: str
    z: object = None
    side: str | None = None
    label: str = ""
    in_lower_fn: Callable | None = field(default=None, compare=False, repr=False)

    @classmethod
    def at(cls, z, side: str) -> "Cut":
        if side not in ("lower", "upper"):
            raise ValueError("side must be 'lower' or 'upper'")
        return cls("at", z, side, f"at:{z}:{side}")

    @classmethod
    def between(cls, i: int) -> "Cut":
        """Chain cut {0..i} | {i+1..}."""
        return cls("at", i, "lower", f"between:{i}:{i + 1}")

    @classmethod
    def lower_empty(cls) -> "Cut":
        return cls("lower_empty", label="lowerEmpty")

    @classmethod
    def upper_empty(cls) -> "Cut":
        return cls("upper_empty", label="upperEmpty")

    @classmethod
    def sqrt2(cls) -> "Cut":
        # x in I iff x < 0 or x^2 < 2, decided exactly on rationals
        return cls("gap", label="sqrt2", in_lower_fn=lambda x: x < 0 or x * x < 2)

    @classmethod
    def parse(cls, text: str) -> "Cut":
        parts = text.strip().split(":")
        head = parts[0]
        if head == "sqrt2" and len(parts) == 1:
            return cls.sqrt2()
        if head == "lowerEmpty" and len(parts) == 1:
            return cls.lower_empty()
        if head == "upperEmpty" and len(parts) == 1:
            return cls.upper_empty()
        if head == "at" and len(parts) == 3:
            return cls.at(Fraction(parts[1]), parts[2])
        if head == "between" and len(parts) == 3:
            i, j = int(parts[1]), int(parts[2])
            if j != i + 1:
                raise ValueError("between:<i>:<i+1> needs adjacent elements")
            return cls.between(i)
        raise ValueError(
            f"bad cut spec {text!r}; expected at:<q>:lower|upper, sqrt2, lowerEmpty, "
            "upperEmpty or between:<i>:<i+1>"
        )

    def validate(self, index: OrderedIndex) -> "Cut":
        if self.kind == "gap" and not index.is_gapfree:
            raise ValueError("irrational gaps only exist on the rational line")
        if self.kind == "at":
            z = index.coerce(self.z)
            if self.label.startswith("between") and index.successor(z) is None:
                raise ValueError(f"{self.label}: {z} has no successor in {index.name}")
            return Cut(self.kind, z, self.side, self.label)
        return self

    def in_lower(self, x) -> bool:
        if self.kind == "lower_empty":
            return False
        if self.kind == "upper_empty":
            return True
        if self.kind == "gap":
            return self.in_lower_fn(x)
        return x < self.z or (x == self.z and self.side == "lower")


def pivots(cut: Cut, index: OrderedIndex) -> tuple[object, object]:
    """(greatest element of I, least element of J), each None if absent."""
    cut = cut.validate(index)
    if cut.kind == "gap":
        return None, None
    if cut.kind == "lower_empty":
        return None, index.minimum()
    if cut.kind == "upper_empty":
        return index.maximum(), None
    if cut.side == "lower":
        return cut.z, index.successor(cut.z)
    return index.predecessor(cut.z), cut.z


# ---------------------------------------------------------------------------
# codomains of the cut evaluations


@dataclass(frozen=True)
class Codomain:
    """K (``field``), K[t] (``poly``) or K[a, b]/(a(b-1)) (``ab``).

    Elements are dicts from exponent tuples to coefficients, kept in normal
    form.  For ``ab`` the single relation ``ab = a`` is a Groebner basis, so
    normal monomials are ``a^i`` (i >= 1) and ``b^j``.
    """

    field: Field
    kind: str

    @property
    def nvars(self) -> int:
        return {"field": 0, "poly": 1, "ab": 2}[self.kind]

    @property
    def is_integral(self) -> bool:
        return self.kind != "ab"

    def _normal(self, mono: tuple) -> tuple:
        if self.kind == "ab" and mono[0] >= 1:
            return (mono[0], 0)
        return mono

    def make(self, terms: dict) -> "CodomainElement":
        f = self.field
        out: dict = {}
        for mono, c in terms.items():
            mono = self._normal(tuple(mono))
            out[mono] = f.add(out.get(mono, f.zero), f(c))
        return CodomainElement(self, {k: v for k, v in out.items() if v != 0})

    def constant(self, c) -> "CodomainElement":
        return self.make({(0,) * self.nvars: c})

    def monomial(self, *exps) -> "CodomainElement":
        return self.make({tuple(exps): 1})

    def __str__(self):
        k = str(self.field)
        return {"field": k, "poly": f"{k}[t]", "ab": f"{k}[a,b]/(a(b-1))"}[self.kind]


@dataclass(frozen=True)
class CodomainElement:
    ring: Codomain
    terms: dict = field(hash=False)

    def __add__(self, other):
        f = self.ring.field
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = f.add(out.get(k, f.zero), v)
        return self.ring.make(out)

    def __sub__(self, other):
        f = self.ring.field
        return self + self.ring.make({k: f.neg(v) for k, v in other.terms.items()})

    def __mul__(self, other):
        f = self.ring.field
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                mono = self.ring._normal(tuple(a + b for a, b in zip(k1, k2)))
                out[mono] = f.add(out.get(mono, f.zero), f.mul(v1, v2))
        return self.ring.make(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        names = {"field": (), "poly": ("t",), "ab": ("a", "b")}[self.ring.kind]
        parts = []
        for mono, c in sorted(self.terms.items()):
            var = "*".join(f"{n}^{e}" if e > 1 else n for n, e in zip(names, mono) if e)
            parts.append(f"{c}*{var}" if var else f"{c}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# cut evaluations and stalks


@dataclass(frozen=True)
class StalkClass:
    tag: str
    pivots: tuple
    note: str


def stalk_classify(cut: Cut, index: OrderedIndex) -> StalkClass:
    g, z = pivots(cut, index)
    if g is None and z is None:
        return StalkClass("TrivialField", (), "I has no greatest and J no least element: R_p = K")
    if g is not None and z is not None:
        return StalkClass(
            "DoublePivot", (g, z),
            f"adjacent pivots {g} < {z}: evaluation lands in K[a,b]/(a(b-1)), which has "
            "zero divisors; only possible when E has a gap",
        )
    piv = g if g is not None else z
    return StalkClass(
        "LocalizedPolynomial", (piv,),
        f"single pivot {piv}: R_p is a local ring of fractions of K[e_({piv},1)]",
    )


@dataclass(frozen=True)
class CutEvaluation:
    """A ring homomorphism phi: K[M] -> codomain realizing one cut class.

    The exhibited prime is ``phi^-1(q)`` for a prime q of the codomain:
    q = 0 for ``field``; q = (t) or 0 for ``poly`` depending on whether the
    pivot lies in I or J; q = (a) for ``ab``.  Its cut is the given one.
    """

    algebra: MonoidAlgebra
    cut: Cut
    stalk: StalkClass
    codomain: Codomain

    @property
    def pivots(self) -> tuple:
        return self.stalk.pivots

    def image_of_basis(self, u: MonoidElement) -> CodomainElement:
        C = self.codomain
        if u is ONE:
            return C.constant(1)
        x, m = u.x, u.m
        if C.kind == "field":
            return C.constant(0 if self.cut.in_lower(x) else 1)
        if C.kind == "poly":
            (z,) = self.pivots
            if x < z:
                return C.constant(0)
            return C.monomial(m) if x == z else C.constant(1)
        g, z = self.pivots
        if x < g:
            return C.constant(0)
        if x == g:
            return C.monomial(m, 0)
        if x == z:
            return C.monomial(0, m)
        return C.constant(1)

    def __call__(self, r: RingElement) -> CodomainElement:
        out = self.codomain.make({})
        for u, c in r.terms.items():
            out = out + self.codomain.constant(c) * self.image_of_basis(u)
        return out

    def prime_contains(self, r: RingElement) -> bool:
        img = self(r)
        kind = self.codomain.kind
        if kind == "field":
            return img.is_zero()
        if kind == "poly":
            (z,) = self.pivots
            if self.cut.in_lower(z):
                return img.terms.get((0,), 0) == 0
            return img.is_zero()
        # (a) consists of the normal forms without pure b^j terms
        return all(mono[0] >= 1 for mono in img.terms)

    def exhibited_cut(self, points: Iterable) -> dict:
        """Which of the given E-points have e_(x,1) in the exhibited prime."""
        return {x: self.prime_contains(self.algebra.e(x)) for x in points}


def cut_evaluation(cut: Cut, algebra: MonoidAlgebra) -> CutEvaluation:
    cut = cut.validate(algebra.index)
    stalk = stalk_classify(cut, algebra.index)
    kind = {"TrivialField": "field", "LocalizedPolynomial": "poly", "DoublePivot": "ab"}[stalk.tag]
    return CutEvaluation(algebra, cut, stalk, Codomain(algebra.field, kind))


def zero_divisor_pair(ev: CutEvaluation) -> tuple[CodomainElement, CodomainElement]:
    """(a, b - 1) in the double-pivot codomain: both nonzero, product zero."""
    if ev.codomain.kind != "ab":
        raise ValueError(f"{ev.codomain} is integral; no zero-divisor pair")
    C = ev.codomain
    return C.monomial(1, 0), C.monomial(0, 1) - C.constant(1)


# ---------------------------------------------------------------------------
# monoid properties


@dataclass
class MonoidReport:
    torsionfree: bool
    torsionfree_checked: int
    aperiodic: bool
    aperiodic_checked: int
    cancellable: bool
    cancellation_witness: tuple | None
    one_cancellable: bool
    associative: bool
    commutative: bool

    def to_json(self) -> dict:
        w = self.cancellation_witness
        return {
            "torsionfree": self.torsionfree,
            "torsionfree_checked": self.torsionfree_checked,
            "aperiodic": self.aperiodic,
            "aperiodic_checked": self.aperiodic_checked,
            "cancellable": self.cancellable,
            "cancellation_witness": None if w is None else [repr(u) for u in w],
            "one_cancellable": self.one_cancellable,
            "associative": self.associative,
            "commutative": self.commutative,
        }


def monoid_window(index: OrderedIndex, width: int = 4, max_level: int = 3) -> list:
    return [ONE] + [Pair(x, m) for x in index.window(width) for m in range(1, max_level + 1)]


def monoid_property_witnesses(index: OrderedIndex, width: int = 4, max_level: int = 4,
                              max_power: int = 4) -> MonoidReport:
    """Exhaustive checks over a finite window of M.

    Aperiodicity is checked for elements other than 1 (1^m = 1^n for all m, n).
    """
    pts = index.window(width)
    if len(pts) < 2:
        raise ValueError("need at least two elements of E")
    win = [ONE] + [Pair(x, m) for x in pts for m in range(1, max_level + 1)]

    tf_checked = 0
    torsionfree = True
    for a in win:
        for b in win:
            for n in range(1, max_power + 1):
                tf_checked += 1
                if monoid_pow(a, n) == monoid_pow(b, n) and a != b:
                    torsionfree = False

    ap_checked = 0
    aperiodic = True
    for a in win:
        if a is ONE:
            continue
        for m in range(0, max_power + 1):
            for n in range(0, max_power + 1):
                ap_checked += 1
                if monoid_pow(a, m) == monoid_pow(a, n) and m != n:
                    aperiodic = False

    witness = None
    for a in win:
        for b in win:
            if a == b:
                continue
            for c in win:
                if monoid_mul(a, c) == monoid_mul(b, c):
                    witness = (a, b, c)
                    break
            if witness:
                break
        if witness:
            break

    one_cancellable = all(monoid_mul(a, ONE) != monoid_mul(b, ONE) for a in win for b in win if a != b)
    small = [ONE] + [Pair(x, m) for x in pts for m in range(1, 4)]
    commutative = all(monoid_mul(a, b) == monoid_mul(b, a) for a in small for b in small)
    associative = all(
        monoid_mul(monoid_mul(a, b), c) == monoid_mul(a, monoid_mul(b, c))
        for a in small for b in small for c in small
    )
    return MonoidReport(
        torsionfree, tf_checked, aperiodic, ap_checked, witness is None, witness,
        one_cancellable, associative, commutative,
    )


def sqrt2_neighbours(k: int = 4) -> list[Fraction]:
    """Continued-fraction convergents of sqrt(2), alternating sides of the gap."""
    out, p, q = [], 1, 1
    for _ in range(k):
        out.append(Fraction(p, q))
        p, q = p + 2 * q, p + q
    return out


def random_cut(index: OrderedIndex, rng: random.Random) -> Cut:
    """A random representable cut of the index."""
    kinds = ["at", "lower_empty", "upper_empty"] + (["gap"] if index.is_gapfree else [])
    kind = rng.choice(kinds)
    if kind == "at":
        return Cut.at(rng.choice(index.window()), rng.choice(["lower", "upper"]))
    if kind == "gap":
        return Cut.sqrt2()
    return Cut.lower_empty() if kind == "lower_empty" else Cut.upper_empty()

