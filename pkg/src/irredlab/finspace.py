"""Finite topological spaces encoded by their specialization preorder.

A finite topology on ``{0, ..., n-1}`` is the same thing as a preorder on
that set.  We write ``x <= y`` (``space.leq[x][y]``) when x lies in the
closure of {y}, i.e. x is a specialization of y.  Closed sets are then the
down-closed sets and open sets the up-closed ones.

Most predicates come in two flavours selected by ``method``:

``"brute"``
    the textbook definition, evaluated by enumerating closed/open subsets;
``"fast"``
    a characterization in terms of the preorder (generic points, up-sets).

The two are cross-checked exhaustively by the enumeration harness.

Subsets are passed around as ``frozenset`` of point indices.  Internally
everything runs on int bitmasks.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class FiniteSpace:
    """A finite space given by its specialization preorder.

    ``leq[x][y]`` is True iff x lies in the closure of {y}.
    """

    n: int
    leq: tuple[tuple[bool, ...], ...]
    _down: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _up: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        leq = tuple(tuple(bool(b) for b in row) for row in self.leq)
        object.__setattr__(self, "leq", leq)
        n = self.n
        if n < 0 or len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError(f"leq must be an {n}x{n} boolean matrix")
        for x in range(n):
            if not leq[x][x]:
                raise ValueError(f"relation is not reflexive at {x}")
        for x, y, z in itertools.product(range(n), repeat=3):
            if leq[x][y] and leq[y][z] and not leq[x][z]:
                raise ValueError(f"relation is not transitive: {x}<={y}<={z}")
        down = tuple(sum(1 << x for x in range(n) if leq[x][y]) for y in range(n))
        up = tuple(sum(1 << y for y in range(n) if leq[x][y]) for x in range(n))
        object.__setattr__(self, "_down", down)
        object.__setattr__(self, "_up", up)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]] = ()) -> "FiniteSpace":
        """Reflexive-transitive closure of the given ``(x, y)`` pairs (x <= y)."""
        m = [[x == y for y in range(n)] for x in range(n)]
        for x, y in pairs:
            _check_point(n, x)
            _check_point(n, y)
            m[x][y] = True
        for k in range(n):
            for i in range(n):
                if m[i][k]:
                    for j in range(n):
                        if m[k][j]:
                            m[i][j] = True
        return cls(n, tuple(map(tuple, m)))

    @classmethod
    def from_open_sets(cls, n: int, opens: Iterable[Iterable[int]]) -> "FiniteSpace":
        """Space from an explicit topology, given as its family of open sets."""
        family = {frozenset(u) for u in opens}
        full = frozenset(range(n))
        if frozenset() not in family or full not in family:
            raise ValueError("a topology contains the empty set and the whole space")
        for u, v in itertools.combinations(family, 2):
            if u | v not in family or u & v not in family:
                raise ValueError("open sets are not closed under union and intersection")
        # x is in the closure of {y} iff every open set containing x contains y
        leq = tuple(
            tuple(all(y in u for u in family if x in u) for y in range(n))
            for x in range(n)
        )
        return cls(n, leq)

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        return cls.from_relation(n)

    @classmethod
    def indiscrete(cls, n: int) -> "FiniteSpace":
        return cls(n, tuple(tuple(True for _ in range(n)) for _ in range(n)))

    # -- basic accessors --------------------------------------------------

    @property
    def points(self) -> range:
        return range(self.n)

    @property
    def full(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def down_mask(self, y: int) -> int:
        return self._down[y]

    def up_mask(self, x: int) -> int:
        return self._up[x]

    def open_sets(self) -> list[frozenset[int]]:
        return [_to_set(m) for m in _open_masks(self)]

    def closed_sets(self) -> list[frozenset[int]]:
        return [_to_set(m) for m in _closed_masks(self)]

    def relabel(self, perm: Sequence) -> "FiniteSpace":
        """Image of the space under the bijection ``x -> perm[x]``."""
        inv = [0] * self.n
        for x, px in enumerate(perm):
            inv[px] = x
        return FiniteSpace(
            self.n,
            tuple(tuple(self.leq[inv[i]][inv[j]] for j in range(self.n)) for i in range(self.n)),
        )

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "leq": [list(row) for row in self.leq]}

    @classmethod
    def from_json(cls, data) -> "FiniteSpace":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(tuple(bool(b) for b in row) for row in data["leq"]))


# ---------------------------------------------------------------------------
# bitmask helpers


def _check_point(n: int, x: int) -> None:
    if not (isinstance(x, int) and 0 <= x < n):
        raise IndexError(f"point {x!r} out of range for a space with {n} points")


def _mask(space: FiniteSpace, s: Iterable[int]) -> int:
    m = 0
    for x in s:
        _check_point(space.n, x)
        m |= 1 << x
    return m


def _bits(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def _to_set(m: int) -> frozenset[int]:
    return frozenset(_bits(m))


def _sorted(m: int) -> list[int]:
    return _bits(m)


def _closure_mask(space: FiniteSpace, m: int) -> int:
    out = 0
    for y in _bits(m):
        out |= space._down[y]
    return out


def _upset_mask(space: FiniteSpace, m: int) -> int:
    out = 0
    for x in _bits(m):
        out |= space._up[x]
    return out


def _closed_masks(space: FiniteSpace) -> list[int]:
    """Every closed subset, straight from the definition (down-closed)."""
    n = space.n
    out = []
    for m in range(1 << n):
        if all((space._down[y] & ~m) == 0 for y in _bits(m)):
            out.append(m)
    return out


def _open_masks(space: FiniteSpace) -> list[int]:
    full = (1 << space.n) - 1
    return sorted(full & ~c for c in _closed_masks(space))


def _is_open_mask(space: FiniteSpace, m: int) -> bool:
    return _upset_mask(space, m) == m


# ---------------------------------------------------------------------------
# closure, neighbourhoods


def subspace(space: FiniteSpace, s: Iterable[int]) -> FiniteSpace:
    """Subspace on ``s``, relabeled ``0..len(s)-1`` in increasing order.

    The induced topology of an Alexandrov space is the restricted preorder.
    """
    pts = sorted(_to_set(_mask(space, s)))
    return FiniteSpace(len(pts), tuple(tuple(space.leq[a][b] for b in pts) for a in pts))


def closure(space: FiniteSpace, s: Iterable[int]) -> frozenset[int]:
    """Smallest closed superset of ``s``: every point below some point of ``s``."""
    return _to_set(_closure_mask(space, _mask(space, s)))


def is_closed(space: FiniteSpace, s: Iterable[int]) -> bool:
    m = _mask(space, s)
    return _closure_mask(space, m) == m


def is_open(space: FiniteSpace, s: Iterable[int]) -> bool:
    return _is_open_mask(space, _mask(space, s))


def minimal_open_neighbourhood(space: FiniteSpace, x: int) -> frozenset[int]:
    """The smallest open set containing ``x``: its up-set ``{y | x <= y}``."""
    _check_point(space.n, x)
    return _to_set(space._up[x])


# ---------------------------------------------------------------------------
# irreducibility


def _irreducible_brute(space: FiniteSpace, m: int, closed: list[int]) -> bool:
    # s is irreducible iff nonempty and not the union of two proper
    # relatively closed subsets
    if m == 0:
        return False
    rel = {m & c for c in closed}
    proper = [a for a in rel if a != m]
    for a, b in itertools.combinations_with_replacement(proper, 2):
        if a | b == m:
            return False
    return True


def _irreducible_fast(space: FiniteSpace, m: int) -> bool:
    # a generic point of s: some y in s with every point of s below y
    return m != 0 and any((m & ~space._down[y]) == 0 for y in _bits(m))


def is_irreducible_subset(space: FiniteSpace, s: Iterable[int], method: str = "fast") -> bool:
    m = _mask(space, s)
    if method == "fast":
        return _irreducible_fast(space, m)
    if method == "brute":
        return _irreducible_brute(space, m, _closed_masks(space))
    raise ValueError(f"unknown method {method!r}")


def _components_fast(space: FiniteSpace) -> list[int]:
    comps = set()
    for x in space.points:
        # x maximal: everything above x is equivalent to x
        if all(space.leq[y][x] for y in _bits(space._up[x])):
            comps.add(space._down[x])
    return sorted(comps, key=_bits)


def _components_brute(space: FiniteSpace) -> list[int]:
    closed = _closed_masks(space)
    irr = [m for m in range(1 << space.n) if _irreducible_brute(space, m, closed)]
    maximal = [m for m in irr if not any(m != o and (m & ~o) == 0 for o in irr)]
    return sorted(maximal, key=_bits)


def irreducible_components(space: FiniteSpace, method: str = "fast") -> list[frozenset[int]]:
    """The inclusion-maximal irreducible subsets.

    ``fast`` takes closures of maximal points (indistinguishable maximal points
    give the same closure and are merged); ``brute`` enumerates all subsets.
    """
    if method == "fast":
        masks = _components_fast(space)
    elif method == "brute":
        masks = _components_brute(space)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [_to_set(m) for m in masks]


def pointwise_irreducible_at(space: FiniteSpace, x: int) -> bool:
    """True iff exactly one irreducible component contains ``x``."""
    _check_point(space.n, x)
    return sum(1 for c in _components_fast(space) if c >> x & 1) == 1


# ---------------------------------------------------------------------------
# connectedness


def _connected_masks(space: FiniteSpace) -> list[int]:
    # components of the comparability graph
    seen = 0
    comps = []
    for start in space.points:
        if seen >> start & 1:
            continue
        comp = 0
        frontier = 1 << start
        while frontier:
            comp |= frontier
            nxt = 0
            for x in _bits(frontier):
                nxt |= space._up[x] | space._down[x]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(space: FiniteSpace) -> list[frozenset[int]]:
    return [_to_set(m) for m in _connected_masks(space)]


def is_connected(space: FiniteSpace, method: str = "brute") -> bool:
    """No partition into two nonempty open sets; the empty space is connected."""
    if method == "fast":
        return len(_connected_masks(space)) <= 1
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    full = (1 << space.n) - 1
    opens = set(_open_masks(space))
    return not any(u and u != full and (full & ~u) in opens for u in opens)


# ---------------------------------------------------------------------------
# local irreducibility


def _has_irreducible_nbhd_brute(space, x, closed, cache) -> bool:
    # neighbourhoods of x: every superset of an open set containing x
    full = (1 << space.n) - 1
    core = space._up[x]
    rest = full & ~core
    sub = rest
    while True:
        m = core | sub
        if m not in cache:
            cache[m] = _irreducible_brute(space, m, closed)
        if cache[m]:
            return True
        if sub == 0:
            return False
        sub = (sub - 1) & rest


def has_irreducible_neighbourhood(space: FiniteSpace, x: int, method: str = "fast") -> bool:
    _check_point(space.n, x)
    if method == "fast":
        return _irreducible_fast(space, space._up[x])
    if method == "brute":
        return _has_irreducible_nbhd_brute(space, x, _closed_masks(space), {})
    raise ValueError(f"unknown method {method!r}")


def is_locally_irreducible(space: FiniteSpace, method: str = "fast") -> bool:
    """Every point has an irreducible neighbourhood.

    The fast route only inspects minimal open neighbourhoods: an irreducible
    neighbourhood contains one, and nonempty opens of irreducible sets are
    irreducible.
    """
    if method == "fast":
        return all(_irreducible_fast(space, space._up[x]) for x in space.points)
    if method == "brute":
        closed = _closed_masks(space)
        cache: dict[int, bool] = {}
        return all(_has_irreducible_nbhd_brute(space, x, closed, cache) for x in space.points)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Kolmogorov quotient and dimension


def kolmogorov_classes(space: FiniteSpace) -> list[frozenset[int]]:
    """Classes of topologically indistinguishable points, ordered by least member."""
    classes = []
    seen = 0
    for x in space.points:
        if seen >> x & 1:
            continue
        cls = space._up[x] & space._down[x]
        seen |= cls
        classes.append(cls)
    return [_to_set(c) for c in classes]


def kolmogorov_quotient(space: FiniteSpace) -> FiniteSpace:
    reps = [min(c) for c in kolmogorov_classes(space)]
    return FiniteSpace(len(reps), tuple(tuple(space.leq[a][b] for b in reps) for a in reps))


def is_t0(space: FiniteSpace) -> bool:
    return len(kolmogorov_classes(space)) == space.n


def _longest_chain(elems: list[int], less) -> int:
    """Number of elements in a longest strict chain (elems topologically sortable)."""
    best: dict[int, int] = {}

    def height(a):
        if a not in best:
            best[a] = 1 + max((height(b) for b in elems if less(b, a)), default=0)
        return best[a]

    return max((height(a) for a in elems), default=0)


def dimension(space: FiniteSpace, method: str = "fast") -> int | None:
    """Krull dimension; ``None`` for the empty space, where it is undefined.

    ``fast``: longest strict chain in the T0 quotient poset.  ``brute``:
    longest strict chain of irreducible closed subsets.
    """
    if space.n == 0:
        return None
    if method == "fast":
        q = kolmogorov_quotient(space)
        pts = list(q.points)
        return _longest_chain(pts, lambda a, b: a != b and q.leq[a][b]) - 1
    if method == "brute":
        closed = _closed_masks(space)
        irr = [c for c in closed if _irreducible_brute(space, c, closed)]
        return _longest_chain(irr, lambda a, b: a != b and (a & ~b) == 0) - 1
    raise ValueError(f"unknown method {method!r}")


def is_discrete(space: FiniteSpace) -> bool:
    return all(space._up[x] == 1 << x for x in space.points)


def is_totally_disconnected(space: FiniteSpace) -> bool:
    return all(len(_bits(c)) == 1 for c in _connected_masks(space))


# ---------------------------------------------------------------------------
# condition profile


@dataclass(frozen=True)
class PropertyProfile:
    """Conditions (1)-(6) on irreducible vs. connected components, plus the
    global flags and per-point pointwise irreducibility.

    ``witnesses`` maps the name of each failing condition to a JSON-friendly
    certificate of failure.
    """

    p1: bool
    p2: bool
    p3: bool
    p4: bool
    p5: bool
    p6: bool
    irreducible: bool
    connected: bool
    nonempty: bool
    discrete: bool
    totally_disconnected: bool
    t0: bool
    dimension: int | None
    pointwise_irreducible: tuple[bool, ...]
    irreducible_components: tuple[tuple[int, ...], ...]
    connected_components: tuple[tuple[int, ...], ...]
    witnesses: dict = field(default_factory=dict, hash=False)

    FLAGS = (
        "p1", "p2", "p3", "p4", "p5", "p6", "irreducible", "connected",
        "nonempty", "discrete", "totally_disconnected", "t0",
    )

    def flags(self) -> dict[str, bool]:
        """Named booleans usable in search predicates."""
        out = {name: getattr(self, name) for name in self.FLAGS}
        out["locally_irreducible"] = self.p1
        out["pointwise"] = all(self.pointwise_irreducible)
        # every finite family of components is locally finite
        out["locally_finite"] = True
        return out

    def to_json(self) -> dict:
        return {
            **{name: getattr(self, name) for name in self.FLAGS},
            "dimension": self.dimension,
            "pointwise_irreducible": list(self.pointwise_irreducible),
            "irreducible_components": [list(c) for c in self.irreducible_components],
            "connected_components": [list(c) for c in self.connected_components],
            "witnesses": self.witnesses,
        }

    @classmethod
    def from_json(cls, data) -> "PropertyProfile":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            **{name: bool(data[name]) for name in cls.FLAGS},
            dimension=data["dimension"],
            pointwise_irreducible=tuple(bool(b) for b in data["pointwise_irreducible"]),
            irreducible_components=tuple(tuple(c) for c in data["irreducible_components"]),
            connected_components=tuple(tuple(c) for c in data["connected_components"]),
            witnesses=dict(data.get("witnesses", {})),
        )


def condition_profile(space: FiniteSpace) -> PropertyProfile:
    irr = _components_fast(space)
    conn = _connected_masks(space)
    full = (1 << space.n) - 1
    witnesses: dict[str, dict] = {}

    bad_point = next(
        (x for x in space.points if not _irreducible_fast(space, space._up[x])), None
    )
    p1 = bad_point is None
    if not p1:
        witnesses["p1"] = {"point": bad_point, "minimal_open": _sorted(space._up[bad_point])}

    not_open = next((c for c in irr if not _is_open_mask(space, c)), None)
    p2 = not_open is None
    if not p2:
        witnesses["p2"] = {"component": _sorted(not_open)}

    meeting = next(
        ((a, b) for a, b in itertools.combinations(irr, 2) if a & b), None
    )
    union = 0
    for c in irr:
        union |= c
    p3 = not_open is None and meeting is None and union == full
    if not p3:
        if not_open is not None:
            witnesses["p3"] = {"component": _sorted(not_open), "reason": "not open"}
        elif meeting is not None:
            witnesses["p3"] = {"components": [_sorted(m) for m in meeting], "reason": "not disjoint"}
        else:
            witnesses["p3"] = {"uncovered": _sorted(full & ~union), "reason": "not a cover"}

    p4 = set(irr) == set(conn)
    if not p4:
        odd = sorted(set(irr) ^ set(conn), key=_bits)[0]
        side = "irreducible_only" if odd in irr else "connected_only"
        witnesses["p4"] = {side: _sorted(odd)}

    not_irr = next((c for c in conn if not _irreducible_fast(space, c)), None)
    p5 = not_irr is None
    if not p5:
        witnesses["p5"] = {"connected_component": _sorted(not_irr)}

    p6 = meeting is None
    if not p6:
        a, b = meeting
        witnesses["p6"] = {"components": [_sorted(a), _sorted(b)], "meet": _sorted(a & b)}

    pointwise = tuple(sum(1 for c in irr if c >> x & 1) == 1 for x in space.points)
    return PropertyProfile(
        p1=p1, p2=p2, p3=p3, p4=p4, p5=p5, p6=p6,
        irreducible=_irreducible_fast(space, full),
        connected=is_connected(space, "brute"),
        nonempty=space.n > 0,
        discrete=is_discrete(space),
        totally_disconnected=is_totally_disconnected(space),
        t0=is_t0(space),
        dimension=dimension(space),
        pointwise_irreducible=pointwise,
        irreducible_components=tuple(tuple(_bits(c)) for c in irr),
        connected_components=tuple(tuple(_bits(c)) for c in conn),
        witnesses=witnesses,
    )


# ---------------------------------------------------------------------------
# isomorphism and export


def canonical_form(space: FiniteSpace) -> tuple[bool, ...]:
    """Lexicographically least flattened relation over all relabelings."""
    n = space.n
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(space.leq[perm[i]][perm[j]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def isomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def to_dot(space: FiniteSpace, name: str = "space") -> str:
    """Hasse diagram of the T0 quotient, generic points on top."""
    classes = kolmogorov_classes(space)
    q = kolmogorov_quotient(space)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for i, c in enumerate(classes):
        label = ",".join(str(x) for x in sorted(c))
        lines.append(f'  c{i} [label="{{{label}}}"];')
    for a, b in itertools.permutations(q.points, 2):
        if q.leq[a][b] and not any(
            k not in (a, b) and q.leq[a][k] and q.leq[k][b] for k in q.points
        ):
            lines.append(f"  c{a} -> c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
