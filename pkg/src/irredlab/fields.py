"""Exact coefficient fields: the rationals and small prime fields.

Scalars are plain Python values owned by a :class:`Field` descriptor:
``Fraction`` for Q and ``int`` in ``range(p)`` for F_p.  All arithmetic goes
through the descriptor so that no floating point ever enters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class Field:
    """A field descriptor; ``p == 0`` means Q."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"F_{self.p} is not a field")

    @property
    def name(self) -> str:
        return "q" if self.p == 0 else f"f{self.p}"

    @classmethod
    def parse(cls, name: str) -> "Field":
        name = name.strip().lower()
        if name in ("q", "qq", "rationals"):
            return cls(0)
        if name.startswith("f") and name[1:].isdigit():
            return cls(int(name[1:]))
        raise ValueError(f"unknown field {name!r}; expected q or f<p>")

    def __str__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"

    # -- elements ---------------------------------------------------------

    def __call__(self, value):
        """Coerce an int, Fraction or string into this field."""
        if self.p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return int(value) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p == 0 else pow(a, -1, self.p)

    def elements(self):
        """All elements of a finite field, in order."""
        if self.p == 0:
            raise ValueError("Q is infinite")
        return list(range(self.p))

    def random(self, rng: random.Random, nonzero: bool = False):
        if self.p == 0:
            while True:
                v = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                if v or not nonzero:
                    return v
        return rng.randint(1 if nonzero else 0, self.p - 1)

    # -- serialization ----------------------------------------------------

    def encode(self, a):
        """JSON-friendly form: ints for F_p, ``"num/den"`` strings for Q."""
        return str(a) if self.p == 0 else int(a)

    def decode(self, v):
        return self(Fraction(v)) if self.p == 0 else self(int(v))


QQ = Field(0)
F2 = Field(2)
F3 = Field(3)
