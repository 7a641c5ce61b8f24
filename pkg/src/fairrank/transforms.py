"""Tournament transformations used to exercise the fairness axioms.

Each transform returns a new tournament; the input is never mutated.
reverse_cycle and swap_venues leave every team's points unchanged, so a
sound policy must rank the transformed tournament identically.
rescale_points applies an order-preserving change of point system, which
the quotient and rating policies cannot see at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import MatchRecord, ModelError, PointSystem, Tournament, build_tournament

__all__ = [
    "TransformError",
    "InvalidCycleError",
    "NonPositiveScaleError",
    "MissingRoundDataError",
    "CycleSpec",
    "reverse_cycle",
    "swap_venues",
    "rescale_points",
    "truncate_rounds",
]


class TransformError(ModelError):
    """A transformation was given arguments it cannot apply."""


class InvalidCycleError(TransformError):
    """The given matches do not form a reversible cycle of decided results."""


class NonPositiveScaleError(TransformError):
    """Point rescaling needs a strictly positive scale factor."""


class MissingRoundDataError(TransformError):
    """Truncation by round needs a round number on every match."""


@dataclass(frozen=True)
class CycleSpec:
    """Indices into ``Tournament.matches`` forming a cycle of decided results.

    The selected matches must chain winner to loser: the loser of each
    match is the winner of the next, and the last loser closes the cycle
    by being the first winner. At least three distinct teams are involved.
    """

    match_indices: tuple[int, ...]


def _cycle_matches(t: Tournament, spec: CycleSpec) -> list[MatchRecord]:
    indices = spec.match_indices
    if len(indices) < 3:
        raise InvalidCycleError("a reversible cycle needs at least three matches")
    if len(set(indices)) != len(indices):
        raise InvalidCycleError("a cycle cannot use the same match twice")
    selected = []
    for idx in indices:
        if not 0 <= idx < len(t.matches):
            raise InvalidCycleError(f"match index {idx} is out of range")
        match = t.matches[idx]
        if match.is_draw:
            raise InvalidCycleError(f"match {idx} is a draw and has no winner to reverse")
        selected.append(match)
    winners = [m.winner for m in selected]
    losers = [m.loser for m in selected]
    for k, loser in enumerate(losers):
        if loser != winners[(k + 1) % len(winners)]:
            raise InvalidCycleError(
                "selected matches do not chain winner to loser into a closed cycle"
            )
    if len(set(winners)) != len(winners):
        raise InvalidCycleError("a cycle cannot visit a team twice")
    return selected


def reverse_cycle(t: Tournament, spec: CycleSpec) -> Tournament:
    """Swap winner and loser in every match of a closed beating cycle.

    Goals are exchanged (2-1 becomes 1-2), so each cycle team trades one
    win for one loss and total points are preserved under any point
    system. Match counts never change, so neither do the scores the
    rating methods consume.
    """
    _cycle_matches(t, spec)
    chosen = set(spec.match_indices)
    new_matches = tuple(
        MatchRecord(
            home=m.home,
            away=m.away,
            home_goals=m.away_goals,
            away_goals=m.home_goals,
            round=m.round,
        )
        if i in chosen
        else m
        for i, m in enumerate(t.matches)
    )
    return Tournament(teams=t.teams, matches=new_matches, point_system=t.point_system)


def swap_venues(t: Tournament) -> Tournament:
    """Exchange home and away in every match, keeping each team's goals."""
    new_matches = tuple(
        MatchRecord(
            home=m.away,
            away=m.home,
            home_goals=m.away_goals,
            away_goals=m.home_goals,
            round=m.round,
        )
        for m in t.matches
    )
    return Tournament(teams=t.teams, matches=new_matches, point_system=t.point_system)


def rescale_points(
    t: Tournament,
    a: int | str | Fraction | float,
    b: int | str | Fraction | float = 0,
) -> Tournament:
    """Replace the point system by (a*win + b, a*draw + b, a*loss + b), a > 0.

    The map is order preserving, so win > draw > loss still holds. Total
    points become a*p + b*m, which changes quotients by the same affine
    map and leaves normalized scores scaled by a.
    """
    scale = Fraction(a)
    shift = Fraction(b)
    if scale <= 0:
        raise NonPositiveScaleError(f"scale must be positive, got {a!r}")
    ps = t.point_system
    rescaled = PointSystem(
        win=scale * ps.win + shift,
        draw=scale * ps.draw + shift,
        loss=scale * ps.loss + shift,
    )
    return Tournament(teams=t.teams, matches=t.matches, point_system=rescaled)


def truncate_rounds(t: Tournament, k: int) -> Tournament:
    """Keep only the matches from rounds 1 through k.

    Every match needs a round number. The truncated tournament is
    revalidated, so cutting deep enough to leave a team without matches
    raises IsolatedTeamError; a merely disconnected match graph is legal
    here and surfaces later as a connectivity report from the solver.
    """
    if k < 1:
        raise TransformError(f"cannot keep rounds up to {k}; k must be at least 1")
    missing = [i for i, m in enumerate(t.matches) if m.round is None]
    if missing:
        raise MissingRoundDataError(
            f"{len(missing)} matches have no round number (first at index {missing[0]})"
        )
    kept = tuple(m for m in t.matches if m.round <= k)
    return build_tournament(t.teams, kept, t.point_system)
