"""The built-in verification corpus: a fixed, deterministic grid of balls.

The default grid spans five families (simplices, stacked balls, cones,
spheres minus a facet, barycentric subdivisions) and is identical on every
run.  A custom grid can be loaded from a JSON file with the same field
names as :class:`CorpusGrid`; omitted fields keep their defaults, unknown
fields are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .complexes import Complex
from .generators import (
    barycentric_subdivision,
    boundary_sphere,
    cone_over_boundary,
    simplex_ball,
    sphere_minus_facet,
    stacked_ball,
)

__all__ = ["CorpusGrid", "DEFAULT_GRID", "grid_from_json", "corpus_balls"]


@dataclass(frozen=True)
class CorpusGrid:
    simplex_n: tuple[int, ...]
    stacked_n: tuple[int, ...]
    stacked_m: tuple[int, ...]
    stacked_seeds: tuple[int, ...]
    sphere_bases: tuple[str, ...]
    sphere_n: tuple[int, ...]
    barycentric_max_n: int


DEFAULT_GRID = CorpusGrid(
    simplex_n=tuple(range(2, 11)),
    stacked_n=tuple(range(3, 8)),
    stacked_m=(2, 5, 20),
    stacked_seeds=(1, 2, 3),
    sphere_bases=("simplex", "cross_polytope"),
    sphere_n=(3, 4, 5, 6),
    barycentric_max_n=4,
)


def grid_from_json(obj: dict) -> CorpusGrid:
    """A grid from a parsed JSON object, defaulting omitted fields."""
    if not isinstance(obj, dict):
        raise ValueError("corpus grid file must hold a JSON object")
    known = {f.name for f in fields(CorpusGrid)}
    unknown = set(obj) - known
    if unknown:
        raise ValueError(f"unknown corpus grid fields: {sorted(unknown)}")
    overrides = {
        key: tuple(value) if isinstance(value, list) else value
        for key, value in obj.items()
    }
    return replace(DEFAULT_GRID, **overrides)


def corpus_balls(
    grid: CorpusGrid = DEFAULT_GRID, max_n: int | None = None
) -> list[tuple[str, Complex]]:
    """All corpus balls as (name, complex) pairs, in fixed order.

    The subdivision entries subdivide every earlier ball whose ambient n
    is at most ``grid.barycentric_max_n``.  ``max_n`` filters the final
    list by ambient n.
    """
    balls: list[tuple[str, Complex]] = []
    for n in grid.simplex_n:
        balls.append((f"simplex-n{n}", simplex_ball(n)))
    for n in grid.stacked_n:
        for m in grid.stacked_m:
            for seed in grid.stacked_seeds:
                balls.append((f"stacked-n{n}-m{m}-s{seed}", stacked_ball(n, m, seed)))
    for base in grid.sphere_bases:
        for n in grid.sphere_n:
            sphere = boundary_sphere(base, n)
            balls.append((f"cone-{base}-n{n}", cone_over_boundary(sphere)))
    for base in grid.sphere_bases:
        for n in grid.sphere_n:
            sphere = boundary_sphere(base, n)
            balls.append((f"minus-facet-{base}-n{n}", sphere_minus_facet(sphere)))
    subdivided = [
        (f"sd-{name}", barycentric_subdivision(ball))
        for name, ball in balls
        if ball.n <= grid.barycentric_max_n
    ]
    balls.extend(subdivided)
    if max_n is not None:
        balls = [(name, ball) for name, ball in balls if ball.n <= max_n]
    return balls
