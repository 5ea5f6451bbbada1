"""Pure simplicial complexes, f-vectors, boundaries, interior face counts.

A complex is stored by its facet set alone; every lower face is recovered
by explicit subset expansion with deduplication.  That is deliberate: the
corpus lives at desk scale (at most ~10^6 faces) and exact, obviously
correct counting beats clever closure algebra here.

Faces are strictly increasing tuples of nonnegative integer vertex ids.
The ambient parameter n is the number of vertices per facet, so a complex
of n-vertex facets has dimension n - 1.  Interior face counts are defined
componentwise as f(B) - f(boundary B); the interior itself is never
materialized as a complex.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Face",
    "ComplexError",
    "EmptyInputError",
    "NonPureError",
    "DuplicateVertexError",
    "RidgeOverflowError",
    "NoBoundaryError",
    "FVector",
    "BallCheckReport",
    "Complex",
    "from_facets",
]

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Base class for invalid complexes or invalid complex operations."""


class EmptyInputError(ComplexError):
    """No facets were given."""


class NonPureError(ComplexError):
    """Facets of mixed dimension."""


class DuplicateVertexError(ComplexError):
    """A facet lists the same vertex twice."""


class RidgeOverflowError(ComplexError):
    """Some ridge lies in three or more facets: not a pseudomanifold."""


class NoBoundaryError(ComplexError):
    """Every ridge lies in exactly two facets: a sphere candidate, not a ball."""


@dataclass(frozen=True)
class FVector:
    """Face counts by dimension, counts[d] = number of d-faces for 0 <= d < n.

    Lookups outside 0..n-1 return 0, so identity sums need no range guards.
    The empty face is never counted.
    """

    n: int
    counts: tuple[int, ...]

    def __getitem__(self, dim: int) -> int:
        if 0 <= dim < len(self.counts):
            return self.counts[dim]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def euler_characteristic(self) -> int:
        return sum(c if d % 2 == 0 else -c for d, c in enumerate(self.counts))


@dataclass(frozen=True)
class BallCheckReport:
    """Necessary-condition screen for "is this facet set a ball?".

    Purity, ridge incidence at most 2, a nonempty boundary, a connected
    facet-adjacency graph, and the two Euler characteristics.  A genuine
    (n-1)-ball has euler_char_ball = 1 and euler_char_boundary =
    1 + (-1)^n.  Passing the screen does NOT prove ball-ness; failing it
    disproves it.
    """

    n: int
    is_pure: bool
    ridge_incidence_ok: bool
    has_boundary: bool
    dual_graph_connected: bool
    euler_char_ball: int
    euler_char_boundary: int

    @property
    def ok(self) -> bool:
        return (
            self.is_pure
            and self.ridge_incidence_ok
            and self.has_boundary
            and self.dual_graph_connected
            and self.euler_char_ball == 1
            and self.euler_char_boundary == 1 + (-1) ** self.n
        )

    def failures(self) -> list[str]:
        """Human-readable list of the conditions that failed."""
        out = []
        if not self.is_pure:
            out.append("facets of mixed dimension")
        if not self.ridge_incidence_ok:
            out.append("a ridge lies in more than two facets")
        if not self.has_boundary:
            out.append("no boundary ridge (sphere candidate, not a ball)")
        if not self.dual_graph_connected:
            out.append("facet-adjacency graph is disconnected")
        if self.euler_char_ball != 1:
            out.append(f"Euler characteristic {self.euler_char_ball} != 1")
        expected = 1 + (-1) ** self.n
        if self.euler_char_boundary != expected:
            out.append(
                f"boundary Euler characteristic {self.euler_char_boundary} "
                f"!= {expected}"
            )
        return out


class Complex:
    """A pure simplicial complex given by its facets.

    Instances are immutable.  Use :func:`from_facets` to build one from
    raw vertex lists; the constructor trusts its argument.  The
    per-dimension face sets are computed on first use and cached with a
    single compute-then-assign, so concurrent readers are safe.
    """

    __slots__ = ("facets", "n", "_face_cache")

    def __init__(self, facets: frozenset[Face]):
        if not facets:
            raise EmptyInputError("a complex needs at least one facet")
        sizes = {len(f) for f in facets}
        if len(sizes) != 1:
            raise NonPureError(f"facet sizes differ: {sorted(sizes)}")
        self.facets = facets
        self.n = sizes.pop()
        self._face_cache: tuple[frozenset[Face], ...] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"Complex(n={self.n}, facets={len(self.facets)})"

    @property
    def dim(self) -> int:
        return self.n - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def _faces_by_dim(self) -> tuple[frozenset[Face], ...]:
        cache = self._face_cache
        if cache is None:
            sets: list[set[Face]] = [set() for _ in range(self.n)]
            for facet in self.facets:
                for size in range(1, self.n + 1):
                    sets[size - 1].update(itertools.combinations(facet, size))
            cache = tuple(frozenset(s) for s in sets)
            self._face_cache = cache
        return cache

    def faces(self, dim: int) -> frozenset[Face]:
        """All faces of the given dimension (empty set outside 0..n-1)."""
        if 0 <= dim < self.n:
            return self._faces_by_dim()[dim]
        return frozenset()

    def f_vector(self) -> FVector:
        """Counts of distinct i-faces for i = 0 .. n-1."""
        return FVector(self.n, tuple(len(s) for s in self._faces_by_dim()))

    def _ridge_incidence(self) -> Counter[Face]:
        counts: Counter[Face] = Counter()
        for facet in self.facets:
            counts.update(itertools.combinations(facet, self.n - 1))
        return counts

    def boundary(self) -> "Complex":
        """The subcomplex generated by ridges lying in exactly one facet.

        For a ball this is its boundary sphere.  Raises RidgeOverflowError
        if some ridge lies in three or more facets, NoBoundaryError if
        every ridge lies in exactly two.
        """
        if self.n < 2:
            raise ComplexError("boundary needs facets with at least 2 vertices")
        incidence = self._ridge_incidence()
        overflow = [r for r, c in incidence.items() if c > 2]
        if overflow:
            raise RidgeOverflowError(
                f"ridge {overflow[0]} lies in {incidence[overflow[0]]} facets"
            )
        boundary_facets = frozenset(r for r, c in incidence.items() if c == 1)
        if not boundary_facets:
            raise NoBoundaryError("every ridge is interior")
        return Complex(boundary_facets)

    def interior_f_vector(self) -> FVector:
        """f(B) - f(boundary B) componentwise.

        The boundary has no (n-1)-faces, so the top entry is the facet
        count.  The interior is a vector of counts only, not a complex.
        """
        total = self.f_vector()
        bd = self.boundary().f_vector()
        return FVector(self.n, tuple(total[d] - bd[d] for d in range(self.n)))

    def ball_check(self) -> BallCheckReport:
        """Compute the necessary-condition screen.  Never raises."""
        incidence = self._ridge_incidence()
        ridge_ok = all(c <= 2 for c in incidence.values())
        boundary_facets = [r for r, c in incidence.items() if c == 1]
        if boundary_facets and self.n >= 2:
            euler_bd = Complex(frozenset(boundary_facets)).f_vector().euler_characteristic()
        else:
            euler_bd = 0
        return BallCheckReport(
            n=self.n,
            is_pure=True,
            ridge_incidence_ok=ridge_ok,
            has_boundary=bool(boundary_facets),
            dual_graph_connected=self._dual_connected(incidence),
            euler_char_ball=self.f_vector().euler_characteristic(),
            euler_char_boundary=euler_bd,
        )

    def _dual_connected(self, incidence: Counter[Face]) -> bool:
        by_ridge: dict[Face, list[Face]] = {r: [] for r in incidence}
        for facet in self.facets:
            for r in itertools.combinations(facet, self.n - 1):
                by_ridge[r].append(facet)
        adjacency: dict[Face, set[Face]] = {f: set() for f in self.facets}
        for group in by_ridge.values():
            for a, b in itertools.combinations(group, 2):
                adjacency[a].add(b)
                adjacency[b].add(a)
        start = next(iter(self.facets))
        seen = {start}
        queue = deque([start])
        while queue:
            for nb in adjacency[queue.popleft()]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return len(seen) == len(self.facets)

    def relabeled(self, mapping: dict[int, int]) -> "Complex":
        """The same complex with vertex ids replaced through ``mapping``."""
        return from_facets([[mapping[v] for v in f] for f in self.facets])


def from_facets(facet_lists: Iterable[Sequence[int]]) -> Complex:
    """Build a normalized complex from raw facet vertex lists.

    Vertices within each facet are sorted, duplicate facets collapse.
    Rejects empty input, facets of mixed sizes, repeated vertices inside a
    facet, and non-integer or negative vertex ids.
    """
    normalized: set[Face] = set()
    for raw in facet_lists:
        facet = tuple(sorted(raw))
        if not facet:
            raise EmptyInputError("empty facet")
        for v in facet:
            if type(v) is not int or v < 0:
                raise ComplexError(f"vertex ids must be nonnegative integers, got {v!r}")
        if len(set(facet)) != len(facet):
            raise DuplicateVertexError(f"facet {list(raw)} repeats a vertex")
        normalized.add(facet)
    if not normalized:
        raise EmptyInputError("no facets given")
    sizes = {len(f) for f in normalized}
    if len(sizes) != 1:
        raise NonPureError(f"facet sizes differ: {sorted(sizes)}")
    return Complex(frozenset(normalized))
