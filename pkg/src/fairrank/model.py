"""Core data model for partially played round-robin tournaments."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "ModelError",
    "UnknownTeamError",
    "IsolatedTeamError",
    "SelfMatchError",
    "Team",
    "MatchRecord",
    "PointSystem",
    "THREE_ONE_ZERO",
    "PLUS_MINUS_ONE",
    "Tournament",
    "MatchesMatrix",
    "GoalTotals",
    "build_tournament",
    "matches_matrix",
    "goal_totals",
]


class ModelError(ValueError):
    """Invalid tournament data."""


class UnknownTeamError(ModelError):
    """A match references a team id that is not in the team list."""


class IsolatedTeamError(ModelError):
    """A team has no matches at all, so no method can rate it."""


class SelfMatchError(ModelError):
    """A match pairs a team with itself."""


@dataclass(frozen=True, order=True)
class Team:
    """A participant. ``id`` is the stable identifier, ``name`` is for display."""

    id: str
    name: str = ""

    def __post_init__(self) -> None:
        if not self.id:
            raise ModelError("team id must be a non-empty string")
        if not self.name:
            object.__setattr__(self, "name", self.id)


@dataclass(frozen=True)
class MatchRecord:
    """One played match. The home/away split is the venue assignment."""

    home: str
    away: str
    home_goals: int
    away_goals: int
    round: int | None = None

    def __post_init__(self) -> None:
        if self.home == self.away:
            raise SelfMatchError(f"team {self.home!r} cannot play itself")
        for label, goals in (("home_goals", self.home_goals), ("away_goals", self.away_goals)):
            if not isinstance(goals, int) or isinstance(goals, bool) or goals < 0:
                raise ModelError(f"{label} must be a non-negative integer, got {goals!r}")
        if self.round is not None and (not isinstance(self.round, int) or self.round < 1):
            raise ModelError(f"round must be a positive integer when given, got {self.round!r}")

    @property
    def is_draw(self) -> bool:
        return self.home_goals == self.away_goals

    @property
    def winner(self) -> str | None:
        if self.is_draw:
            return None
        return self.home if self.home_goals > self.away_goals else self.away

    @property
    def loser(self) -> str | None:
        if self.is_draw:
            return None
        return self.away if self.home_goals > self.away_goals else self.home


def _exact(value: int | str | Fraction | float) -> Fraction:
    return Fraction(value)


@dataclass(frozen=True)
class PointSystem:
    """Points awarded per match outcome. Requires win > draw > loss."""

    win: Fraction
    draw: Fraction
    loss: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "win", _exact(self.win))
        object.__setattr__(self, "draw", _exact(self.draw))
        object.__setattr__(self, "loss", _exact(self.loss))
        if not (self.win > self.draw > self.loss):
            raise ModelError(
                f"point system must satisfy win > draw > loss, got "
                f"({self.win}, {self.draw}, {self.loss})"
            )

    @property
    def symmetric(self) -> bool:
        """True when the reward for a win mirrors the penalty for a loss."""
        return self.win - self.draw == self.draw - self.loss


THREE_ONE_ZERO = PointSystem(Fraction(3), Fraction(1), Fraction(0))
PLUS_MINUS_ONE = PointSystem(Fraction(1), Fraction(0), Fraction(-1))


@dataclass(frozen=True)
class Tournament:
    """An immutable set of teams and played matches under one point system.

    Teams are kept in canonical order (sorted by id) so that every vector
    and matrix derived from the tournament lines up the same way.
    """

    teams: tuple[Team, ...]
    matches: tuple[MatchRecord, ...]
    point_system: PointSystem
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {t.id: i for i, t in enumerate(self.teams)})

    @property
    def n_teams(self) -> int:
        return len(self.teams)

    @property
    def team_ids(self) -> tuple[str, ...]:
        return tuple(t.id for t in self.teams)

    def index_of(self, team_id: str) -> int:
        try:
            return self._index[team_id]
        except KeyError:
            raise UnknownTeamError(f"unknown team id {team_id!r}") from None

    def matches_played(self) -> tuple[int, ...]:
        """Number of matches each team has played, in canonical team order."""
        counts = [0] * self.n_teams
        for match in self.matches:
            counts[self.index_of(match.home)] += 1
            counts[self.index_of(match.away)] += 1
        return tuple(counts)


def build_tournament(
    teams: Iterable[Team | str],
    matches: Iterable[MatchRecord],
    point_system: PointSystem = THREE_ONE_ZERO,
) -> Tournament:
    """Validate raw teams and matches and assemble a Tournament.

    Raises UnknownTeamError for matches naming an unlisted team,
    SelfMatchError for a team paired with itself (raised on record
    construction) and IsolatedTeamError for a team with no matches.
    Duplicate fixtures between the same pair are allowed.
    """
    team_objs = [t if isinstance(t, Team) else Team(t) for t in teams]
    seen: set[str] = set()
    for team in team_objs:
        if team.id in seen:
            raise ModelError(f"duplicate team id {team.id!r}")
        seen.add(team.id)
    if len(team_objs) < 2:
        raise ModelError("a tournament needs at least two teams")

    ordered = tuple(sorted(team_objs, key=lambda t: t.id))
    match_tuple = tuple(matches)
    played: set[str] = set()
    for match in match_tuple:
        for team_id in (match.home, match.away):
            if team_id not in seen:
                raise UnknownTeamError(f"match references unknown team {team_id!r}")
            played.add(team_id)
    idle = seen - played
    if idle:
        names = ", ".join(sorted(idle))
        raise IsolatedTeamError(f"teams with no matches cannot be rated: {names}")

    return Tournament(teams=ordered, matches=match_tuple, point_system=point_system)


@dataclass(frozen=True, eq=False)
class MatchesMatrix:
    """Symmetric non-negative integer matrix of match counts between teams.

    counts[i, j] is how often team i met team j. The diagonal is zero and
    row i sums to the number of matches team i has played.
    """

    team_ids: tuple[str, ...]
    counts: np.ndarray

    def __post_init__(self) -> None:
        counts = np.asarray(self.counts, dtype=np.int64)
        object.__setattr__(self, "counts", counts)
        n = len(self.team_ids)
        if counts.shape != (n, n):
            raise ModelError(f"matches matrix must be {n}x{n}, got {counts.shape}")
        if (counts < 0).any():
            raise ModelError("match counts cannot be negative")
        if np.diag(counts).any():
            raise ModelError("the diagonal of a matches matrix must be zero")
        if (counts != counts.T).any():
            raise ModelError("a matches matrix must be symmetric")

    def row_sums(self) -> np.ndarray:
        return self.counts.sum(axis=1)


def matches_matrix(t: Tournament) -> MatchesMatrix:
    """Count matches between every pair of teams in canonical order."""
    n = t.n_teams
    counts = np.zeros((n, n), dtype=np.int64)
    for match in t.matches:
        i = t.index_of(match.home)
        j = t.index_of(match.away)
        counts[i, j] += 1
        counts[j, i] += 1
    return MatchesMatrix(team_ids=t.team_ids, counts=counts)


@dataclass(frozen=True)
class GoalTotals:
    """Per-team goal difference and goals scored, in canonical team order."""

    team_ids: tuple[str, ...]
    goal_diff: tuple[int, ...]
    goals_for: tuple[int, ...]


def goal_totals(t: Tournament) -> GoalTotals:
    """Aggregate goal difference and goals scored for every team."""
    diff = [0] * t.n_teams
    scored = [0] * t.n_teams
    for match in t.matches:
        i = t.index_of(match.home)
        j = t.index_of(match.away)
        diff[i] += match.home_goals - match.away_goals
        diff[j] += match.away_goals - match.home_goals
        scored[i] += match.home_goals
        scored[j] += match.away_goals
    return GoalTotals(team_ids=t.team_ids, goal_diff=tuple(diff), goals_for=tuple(scored))
