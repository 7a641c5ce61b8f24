"""Shared test utilities: seeded random tournaments and comparison helpers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from fairrank import (
    MatchRecord,
    PointSystem,
    THREE_ONE_ZERO,
    Tournament,
    build_tournament,
)


@dataclass(frozen=True)
class RandomInstance:
    """A generated tournament plus the indices of its planted 1-0 triangle.

    The triangle makes every instance non-bipartite (so the fixed point
    iteration converges) and is a ready-made reversible cycle whose
    matches share one scoreline, leaving every team's goal totals intact
    under reversal.
    """

    tournament: Tournament
    triangle: tuple[int, int, int]


def random_instance(
    rng: np.random.Generator,
    n_min: int = 4,
    n_max: int = 20,
    point_system: PointSystem = THREE_ONE_ZERO,
    with_rounds: bool = False,
) -> RandomInstance:
    """A connected random tournament with a planted three-team cycle.

    The construction starts from a random spanning tree (connectivity),
    plants one triangle of 1-0 results (non-bipartite plus a reversible
    cycle) and sprinkles extra fixtures, possibly repeating pairs.
    """
    n = int(rng.integers(n_min, n_max + 1))
    ids = [f"T{k:02d}" for k in range(1, n + 1)]

    pairs: list[tuple[int, int]] = []
    order = [int(x) for x in rng.permutation(n)]
    for pos in range(1, n):
        parent = order[int(rng.integers(0, pos))]
        pairs.append((order[pos], parent))
    extra = int(rng.integers(n // 2, 2 * n + 1))
    for _ in range(extra):
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        pairs.append((i, j))

    matches: list[MatchRecord] = []
    for i, j in pairs:
        home, away = (i, j) if rng.integers(0, 2) else (j, i)
        if rng.random() < 0.25:
            goals = int(rng.integers(0, 4))
            matches.append(MatchRecord(ids[home], ids[away], goals, goals))
        else:
            winner_goals = int(rng.integers(1, 6))
            loser_goals = int(rng.integers(0, winner_goals))
            if rng.integers(0, 2):
                matches.append(MatchRecord(ids[home], ids[away], winner_goals, loser_goals))
            else:
                matches.append(MatchRecord(ids[home], ids[away], loser_goals, winner_goals))

    a, b, c = (int(x) for x in rng.choice(n, size=3, replace=False))
    triangle_start = len(matches)
    matches.append(MatchRecord(ids[a], ids[b], 1, 0))
    matches.append(MatchRecord(ids[b], ids[c], 1, 0))
    matches.append(MatchRecord(ids[c], ids[a], 1, 0))

    if with_rounds:
        per_round = max(1, n // 2)
        matches = [
            MatchRecord(m.home, m.away, m.home_goals, m.away_goals, round=1 + idx // per_round)
            for idx, m in enumerate(matches)
        ]

    tournament = build_tournament(ids, matches, point_system)
    triangle = (triangle_start, triangle_start + 1, triangle_start + 2)
    return RandomInstance(tournament=tournament, triangle=triangle)


def balanced_round_robin(
    rng: np.random.Generator,
    n_min: int = 4,
    n_max: int = 12,
    k_max: int = 2,
    point_system: PointSystem = THREE_ONE_ZERO,
) -> Tournament:
    """A completed k-fold round robin with random results."""
    n = int(rng.integers(n_min, n_max + 1))
    k = int(rng.integers(1, k_max + 1))
    ids = [f"T{m:02d}" for m in range(1, n + 1)]
    matches = []
    for _ in range(k):
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.25:
                    goals = int(rng.integers(0, 4))
                    matches.append(MatchRecord(ids[i], ids[j], goals, goals))
                else:
                    winner_goals = int(rng.integers(1, 6))
                    loser_goals = int(rng.integers(0, winner_goals))
                    if rng.integers(0, 2):
                        matches.append(MatchRecord(ids[i], ids[j], winner_goals, loser_goals))
                    else:
                        matches.append(MatchRecord(ids[i], ids[j], loser_goals, winner_goals))
    return build_tournament(ids, matches, point_system)
