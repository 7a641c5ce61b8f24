"""Exact scoring: points, points-per-match quotients, zero-sum normalized scores.

Everything here stays in rational arithmetic. Values are converted to floats
only at the solver boundary, so score ties are detected exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .model import Tournament

__all__ = [
    "ScoreVector",
    "NormalizedScoreVector",
    "score_vector",
    "quotients",
    "normalized_scores",
]


@dataclass(frozen=True)
class ScoreVector:
    """Per-team points and matches played, in canonical team order."""

    team_ids: tuple[str, ...]
    points: tuple[Fraction, ...]
    matches: tuple[int, ...]

    def as_mapping(self) -> dict[str, Fraction]:
        return dict(zip(self.team_ids, self.points))


@dataclass(frozen=True)
class NormalizedScoreVector:
    """Average points per match, centered so the entries sum to zero exactly."""

    team_ids: tuple[str, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        total = sum(self.values, start=Fraction(0))
        if total != 0:
            raise ValueError(f"normalized scores must sum to zero, got {total}")

    def as_array(self) -> np.ndarray:
        return np.array([float(v) for v in self.values], dtype=np.float64)


def score_vector(t: Tournament) -> ScoreVector:
    """Total points per team under the tournament's point system.

    The venue plays no role: a win earns the same points home or away.
    """
    ps = t.point_system
    points = [Fraction(0)] * t.n_teams
    counts = [0] * t.n_teams
    for match in t.matches:
        i = t.index_of(match.home)
        j = t.index_of(match.away)
        counts[i] += 1
        counts[j] += 1
        if match.is_draw:
            points[i] += ps.draw
            points[j] += ps.draw
        elif match.winner == match.home:
            points[i] += ps.win
            points[j] += ps.loss
        else:
            points[i] += ps.loss
            points[j] += ps.win
    return ScoreVector(team_ids=t.team_ids, points=tuple(points), matches=tuple(counts))


def quotients(sv: ScoreVector) -> tuple[Fraction, ...]:
    """Points divided by matches played, the quotient rule's ranking key."""
    return tuple(p / m for p, m in zip(sv.points, sv.matches))


def normalized_scores(sv: ScoreVector) -> NormalizedScoreVector:
    """Center the quotients on their mean so they sum to zero exactly.

    This is the right-hand side used by both rating methods; centering
    removes the point system's offset so only relative strength remains.
    """
    quots = quotients(sv)
    mean = sum(quots, start=Fraction(0)) / len(quots)
    values = tuple(q - mean for q in quots)
    return NormalizedScoreVector(team_ids=sv.team_ids, values=values)
