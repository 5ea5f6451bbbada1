"""Deterministic constructions of simplicial balls and spheres.

Every generator is reproducible byte for byte: fresh vertices always take
the smallest unused positive integer, and the only pseudo-randomness (the
ridge choice in ``stacked_ball``) comes from a fixed 64-bit linear
congruential generator, so the corpus is identical across platforms.

The families cover all interior regimes: ``simplex_ball`` and
``stacked_ball`` have no low-dimensional interior faces, cones have one
interior vertex, and ``sphere_minus_facet`` / ``barycentric_subdivision``
produce interior faces in every dimension.
"""

from __future__ import annotations

import itertools

from .complexes import Complex, ComplexError, from_facets

__all__ = [
    "SphereScreenError",
    "simplex_ball",
    "stacked_ball",
    "boundary_sphere",
    "cone_over_boundary",
    "sphere_minus_facet",
    "barycentric_subdivision",
]


class SphereScreenError(ComplexError):
    """The input failed the necessary conditions for being a sphere."""


class _Lcg:
    """64-bit linear congruential generator (Knuth's MMIX constants).

    state <- (MULT * state + INC) mod 2^64; indices come from the top 32
    bits.  Chosen over the stdlib RNG so the construction is pinned down
    exactly, independent of language or library version.
    """

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def below(self, bound: int) -> int:
        self.state = (self.state * self.MULT + self.INC) & self.MASK
        return (self.state >> 32) % bound


def simplex_ball(n: int) -> Complex:
    """The full (n-1)-simplex on vertices 1..n, the smallest (n-1)-ball."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return from_facets([range(1, n + 1)])


def _boundary_ridges(facets: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    counts: dict[tuple[int, ...], int] = {}
    for facet in facets:
        for r in itertools.combinations(facet, n - 1):
            counts[r] = counts.get(r, 0) + 1
    return sorted(r for r, c in counts.items() if c == 1)


def stacked_ball(n: int, m: int, seed: int) -> Complex:
    """A shellable (n-1)-ball with m facets, grown by stacking.

    Starts from the (n-1)-simplex; each of the m-1 growth steps picks a
    boundary ridge (pseudo-randomly, driven by ``seed``), adds a fresh
    vertex and glues the facet ridge + vertex onto it.  The interior faces
    are exactly the m-1 glued ridges and the m facets, so the interior
    f-vector is (0, ..., 0, m-1, m).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    rng = _Lcg(seed)
    facets = [tuple(range(1, n + 1))]
    for step in range(m - 1):
        ridges = _boundary_ridges(facets, n)
        ridge = ridges[rng.below(len(ridges))]
        fresh = n + step + 1
        facets.append(tuple(sorted(ridge + (fresh,))))
    return from_facets(facets)


def boundary_sphere(family: str, n: int) -> Complex:
    """A standard sphere: the boundary of a simplex or of a cross-polytope.

    ``simplex``: the (n-2)-sphere bounding the (n-1)-simplex on vertices
    1..n.  ``cross_polytope``: the (n-1)-sphere on n antipodal vertex
    pairs (2i-1, 2i), whose 2^n facets are all the sign choices.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if family == "simplex":
        return from_facets(itertools.combinations(range(1, n + 1), n - 1))
    if family == "cross_polytope":
        facets = []
        for signs in itertools.product((0, 1), repeat=n):
            facets.append(tuple(2 * i + 1 + s for i, s in enumerate(signs)))
        return from_facets(facets)
    raise ValueError(f"unknown sphere family {family!r}")


def _screen_sphere(S: Complex) -> None:
    """Necessary conditions for S to be a sphere; raises on failure."""
    report = S.ball_check()
    expected = 1 + (-1) ** (S.n - 1)
    problems = []
    if not report.ridge_incidence_ok:
        problems.append("a ridge lies in more than two facets")
    if report.has_boundary:
        problems.append("has boundary ridges")
    if not report.dual_graph_connected:
        problems.append("facet-adjacency graph is disconnected")
    if report.euler_char_ball != expected:
        problems.append(
            f"Euler characteristic {report.euler_char_ball} != {expected}"
        )
    if problems:
        raise SphereScreenError("; ".join(problems))


def cone_over_boundary(S: Complex) -> Complex:
    """The cone apex * S over a sphere S, with a fresh apex vertex.

    The result is a ball whose boundary is S and whose single interior
    vertex is the apex.  S must pass the sphere screen.
    """
    _screen_sphere(S)
    apex = max(S.vertices) + 1
    return from_facets([facet + (apex,) for facet in S.facets])


def sphere_minus_facet(S: Complex) -> Complex:
    """S with its lexicographically smallest facet removed.

    Removing one top face of a sphere leaves a ball with an unchanged face
    set below the top dimension: every ridge of the removed facet lies in
    exactly one other facet, so no lower face disappears.
    """
    _screen_sphere(S)
    doomed = min(S.facets)
    return Complex(S.facets - {doomed})


def barycentric_subdivision(C: Complex) -> Complex:
    """The flag complex of C: one vertex per face, one facet per maximal chain.

    New vertex ids are assigned 1, 2, ... in (dimension, lexicographic)
    order over the faces of C, so the output is reproducible.  Each facet
    of C yields n! chains, hence f_{n-1}(sd C) = n! * f_{n-1}(C).
    """
    vid: dict[tuple[int, ...], int] = {}
    for dim in range(C.n):
        for face in sorted(C.faces(dim)):
            vid[face] = len(vid) + 1
    new_facets = []
    for facet in C.facets:
        for order in itertools.permutations(facet):
            chain = [vid[tuple(sorted(order[:size]))] for size in range(1, C.n + 1)]
            new_facets.append(sorted(chain))
    return from_facets(new_facets)
