"""Named example spaces with hand-derived expected profiles, and the
statement-to-check traceability table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import finspace as fs
from .fields import F2, F3
from .finspace import FiniteSpace, PropertyProfile
from .prodfields import ProductRing, spectrum_space


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    space: FiniteSpace
    expected: dict
    provenance: str

    def profile(self) -> PropertyProfile:
        return fs.condition_profile(self.space)

    def mismatches(self) -> dict:
        """Fields where the recomputed profile differs from the stored one."""
        got = self.profile().to_json()
        got["failing"] = sorted(got.pop("witnesses"))
        out = {}
        for key, want in self.expected.items():
            if got[key] != want:
                out[key] = {"expected": want, "got": got[key]}
        return out

    @property
    def valid(self) -> bool:
        return not self.mismatches()


ALL_CONDITIONS = ["p1", "p2", "p3", "p4", "p5", "p6"]


def _expect(p, irreducible, connected, nonempty, discrete, td, t0, dim, pointwise, irr, conn):
    failing = [] if p else list(ALL_CONDITIONS)
    return {
        **{c: p for c in ALL_CONDITIONS},
        "irreducible": irreducible,
        "connected": connected,
        "nonempty": nonempty,
        "discrete": discrete,
        "totally_disconnected": td,
        "t0": t0,
        "dimension": dim,
        "pointwise_irreducible": pointwise,
        "irreducible_components": irr,
        "connected_components": conn,
        "failing": failing,
    }


_CATALOG: dict[str, Callable[[], GalleryEntry]] = {}


def _entry(fn):
    _CATALOG[fn.__name__.removeprefix("_g_")] = fn
    return fn


@_entry
def _g_empty():
    return GalleryEntry(
        "empty", FiniteSpace(0, ()),
        _expect(True, False, True, False, True, True, True, None, [], [], []),
        "1.36 A: the empty space is connected and locally irreducible, not irreducible",
    )


@_entry
def _g_point():
    return GalleryEntry(
        "point", FiniteSpace.discrete(1),
        _expect(True, True, True, True, True, True, True, 0, [True], [[0]], [[0]]),
        "Spec of a field",
    )


@_entry
def _g_sierpinski():
    # 0 is the closed point, 1 the generic point (Spec of a DVR)
    return GalleryEntry(
        "sierpinski", FiniteSpace.from_relation(2, [(0, 1)]),
        _expect(True, True, True, True, False, False, True, 1, [True, True], [[0, 1]], [[0, 1]]),
        "irreducible space of dimension 1",
    )


@_entry
def _g_discrete2():
    return GalleryEntry(
        "discrete2", FiniteSpace.discrete(2),
        _expect(True, False, False, True, True, True, True, 0, [True, True], [[0], [1]], [[0], [1]]),
        "1.36 A: nonempty, locally irreducible, not connected",
    )


@_entry
def _g_indiscrete2():
    return GalleryEntry(
        "indiscrete2", FiniteSpace.indiscrete(2),
        _expect(True, True, True, True, False, False, False, 0, [True, True], [[0, 1]], [[0, 1]]),
        "non-T0 irreducible space; its Kolmogorov quotient is a point",
    )


@_entry
def _g_threePoint140C():
    # a = 0 and b = 1 open, c = 2 closed
    return GalleryEntry(
        "threePoint140C", FiniteSpace.from_relation(3, [(2, 0), (2, 1)]),
        _expect(False, False, True, True, False, False, True, 1, [True, True, False],
                [[0, 2], [1, 2]], [[0, 1, 2]]),
        "1.40 C: one closed point, two open points; the closed point has no "
        "irreducible neighbourhood",
    )


@_entry
def _g_xySkeleton():
    # origin 0 below the generic points of the two axes
    return GalleryEntry(
        "xySkeleton", FiniteSpace.from_relation(3, [(0, 1), (0, 2)]),
        _expect(False, False, True, True, False, False, True, 1, [False, True, True],
                [[0, 1], [0, 2]], [[0, 1, 2]]),
        "1.36 B / 2.75 A: finite skeleton of Spec K[X,Y]/<XY>; connected, not "
        "irreducible, not pointwise irreducible at the origin",
    )


@_entry
def _g_specF2xF3():
    return GalleryEntry(
        "specF2xF3", spectrum_space(ProductRing((F2, F3))),
        _expect(True, False, False, True, True, True, True, 0, [True, True], [[0], [1]], [[0], [1]]),
        "1.36 B: spectrum of a product of two fields",
    )


def catalog() -> list[str]:
    return list(_CATALOG)


def gallery(name: str) -> GalleryEntry:
    try:
        return _CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown gallery entry {name!r}; catalog: {', '.join(catalog())}") from None


# ---------------------------------------------------------------------------
# traceability


TRACE = [
    ("1.10 A-C definitions", "finspace.is_irreducible_subset / is_locally_irreducible (brute vs fast)", "verified"),
    ("Prop 1.20", "enumeration.verify_theorems [prop1.20]", "verified"),
    ("Cor 1.30", "enumeration.verify_theorems [cor1.30]", "verified"),
    ("Cor 1.35", "enumeration.verify_theorems [cor1.35]", "verified"),
    ("1.36 A/B/C", "gallery: empty, discrete2, specF2xF3, xySkeleton", "verified"),
    ("1.40 A (Q)", "search 'p4 and not p3' finds nothing on finite spaces", "out of scope (infinite space)"),
    ("1.40 B (R)", "search 'p6 and not p5' finds nothing on finite spaces", "out of scope (infinite space)"),
    ("1.40 C", "gallery threePoint140C; enumeration.find_counterexample('not p1')", "verified"),
    ("Prop 1.41", "enumeration.verify_theorems [prop1.41]; prodfields.idempotent_of", "verified"),
    ("Cor 1.42", "finite spaces are quasicompact; remark only", "remark"),
    ("1.43 A", "prodfields.pseudo_inverse / idempotent_of / spectrum (finite index sets)", "verified"),
    ("1.43 B (Cantor set)", "-", "out of scope"),
    ("1.45 B", "hochster.monoid_mul / MonoidAlgebra", "verified"),
    ("1.45 C", "hochster.reducedness_witness / idempotent_check / monoid_property_witnesses", "verified"),
    ("1.45 D", "hochster.cut_evaluation / stalk_classify", "verified"),
    ("1.45 E", "hochster.stalk_classify presentation notes", "classification only"),
    ("Prop 2.40", "finspace.pointwise_irreducible_at (finite model)", "verified"),
    ("Cor 2.45", "enumeration.verify_theorems [cor2.45]", "verified"),
    ("Prop 2.60", "enumeration.verify_theorems [prop2.60]", "verified"),
    ("Cor 2.70", "enumeration.verify_theorems [cor2.70]", "verified"),
    ("2.75 A/B", "gallery xySkeleton; hochster cut classification", "verified"),
    ("Prop 3.20 (X_red functor)", "-", "out of scope"),
    ("Prop 3.30", "hochster/prodfields rings checked reduced, so irreducible = integral", "verified"),
    ("Hochster spectrality theorem", "finite T0 spaces are spectral (assumed)", "out of scope"),
]


def trace() -> list[str]:
    return [f"{stmt} -> {check}  [{status}]" for stmt, check, status in TRACE]
