"""Ranking policies: points, quotient rule, generalized row sum, least squares.

A policy turns a tournament into a Ranking. Exact policies (points,
quotient) compare rational values, so ties are exact; rating policies
compare floats and declare adjacent ratings within tie_epsilon tied.
Ties then fall through a configurable ladder of tie-break criteria.
Teams still tied after the whole ladder share a rank (competition
ranking: 1, 2, 2, 4) unless strict total order is requested, in which
case the team id decides as a final backstop.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .model import Tournament, goal_totals, matches_matrix
from .scoring import normalized_scores, quotients, score_vector
from .solver import RatingVector, laplacian, solve_grs, solve_ls_direct

__all__ = [
    "TieBreak",
    "PolicyKind",
    "Policy",
    "RankEntry",
    "Ranking",
    "DEFAULT_POINTS_LADDER",
    "DEFAULT_QUOTIENT_LADDER",
    "DEFAULT_RATING_LADDER",
    "DEFAULT_TIE_EPSILON",
    "rank_by_points",
    "rank_by_quotient",
    "rank_by_rating",
    "apply_policy",
    "kendall_tau_distance",
]

DEFAULT_TIE_EPSILON = 1e-9


class TieBreak(enum.Enum):
    """Tie-break criteria, applied in ladder order until one separates."""

    FEWER_MATCHES_PLAYED = "fewer-matches-played"
    GOAL_DIFFERENCE = "goal-difference"
    GOALS_SCORED = "goals-scored"
    STRENGTH_OF_OPPONENTS = "strength-of-opponents"
    TEAM_ID_ORDER = "team-id-order"


DEFAULT_POINTS_LADDER = (
    TieBreak.FEWER_MATCHES_PLAYED,
    TieBreak.GOAL_DIFFERENCE,
    TieBreak.GOALS_SCORED,
    TieBreak.TEAM_ID_ORDER,
)
DEFAULT_QUOTIENT_LADDER = (
    TieBreak.GOAL_DIFFERENCE,
    TieBreak.GOALS_SCORED,
    TieBreak.TEAM_ID_ORDER,
)
DEFAULT_RATING_LADDER = DEFAULT_QUOTIENT_LADDER


class PolicyKind(enum.Enum):
    POINTS = "points"
    QUOTIENT = "quotient"
    GRS = "grs"
    LS = "ls"


@dataclass(frozen=True)
class Policy:
    """A ranking method plus its tie handling configuration."""

    kind: PolicyKind
    epsilon: float | None = None
    tie_epsilon: float = DEFAULT_TIE_EPSILON
    ladder: tuple[TieBreak, ...] | None = None
    strict: bool = False

    def __post_init__(self) -> None:
        if self.kind is PolicyKind.GRS and self.epsilon is None:
            raise ValueError("a grs policy needs an epsilon, for example grs:0.1")
        if self.kind is not PolicyKind.GRS and self.epsilon is not None:
            raise ValueError(f"policy {self.kind.value!r} does not take an epsilon")
        if self.ladder is not None:
            _validate_ladder(self.ladder)

    @classmethod
    def parse(cls, text: str) -> "Policy":
        """Parse a policy spelling like ``points``, ``quotient``, ``ls`` or ``grs:0.1``."""
        body = text.strip()
        if body.startswith("grs"):
            head, sep, eps_text = body.partition(":")
            if head != "grs" or not sep or not eps_text:
                raise ValueError(f"bad policy {text!r}: a grs policy is written grs:<epsilon>")
            try:
                eps = float(eps_text)
            except ValueError:
                raise ValueError(f"bad policy {text!r}: {eps_text!r} is not a number") from None
            return cls(kind=PolicyKind.GRS, epsilon=eps)
        try:
            kind = PolicyKind(body)
        except ValueError:
            known = ", ".join(k.value for k in PolicyKind)
            raise ValueError(f"unknown policy {text!r}; expected one of: {known}") from None
        return cls(kind=kind)

    @property
    def label(self) -> str:
        if self.kind is PolicyKind.GRS:
            return f"grs:{self.epsilon:g}"
        return self.kind.value


@dataclass(frozen=True)
class RankEntry:
    """One row of a ranking: competition rank, ranking value, tie-break trail.

    The trail lists the criteria consulted to separate this team from the
    one directly above it, deciding criterion last; it is empty for the
    top entry. ``tied`` marks teams sharing their rank with a neighbour.
    """

    team: str
    rank: int
    value: Fraction | float
    tiebreak_trail: tuple[str, ...] = ()
    tied: bool = False


@dataclass(frozen=True)
class Ranking:
    """An ordered ranking produced by one policy."""

    policy_label: str
    entries: tuple[RankEntry, ...]

    def order(self) -> tuple[str, ...]:
        return tuple(e.team for e in self.entries)

    def as_pairs(self) -> tuple[tuple[int, str], ...]:
        return tuple((e.rank, e.team) for e in self.entries)

    def rank_of(self, team: str) -> int:
        for entry in self.entries:
            if entry.team == team:
                return entry.rank
        raise KeyError(team)


def _validate_ladder(ladder: Sequence[TieBreak]) -> tuple[TieBreak, ...]:
    ladder = tuple(ladder)
    if not ladder:
        raise ValueError("tie-break ladder cannot be empty")
    if ladder[-1] is not TieBreak.TEAM_ID_ORDER:
        raise ValueError("the tie-break ladder must end with team-id-order")
    if len(set(ladder)) != len(ladder):
        raise ValueError("tie-break ladder cannot repeat a criterion")
    if TieBreak.TEAM_ID_ORDER in ladder[:-1]:
        raise ValueError("team-id-order can only be the final criterion")
    return ladder


def _ladder_keys(t: Tournament, ladder: tuple[TieBreak, ...]) -> list[tuple]:
    """Per-team sort keys for every ladder criterion except the id backstop."""
    totals = goal_totals(t)
    played = t.matches_played()
    strength = None
    if TieBreak.STRENGTH_OF_OPPONENTS in ladder:
        # Among teams level on the primary key, the least squares rating
        # separates them mainly through the opposition they faced, so the
        # criterion reads the tied team's own rating.
        rating = solve_ls_direct(normalized_scores(score_vector(t)), laplacian(matches_matrix(t)))
        strength = rating.values
    keys = []
    for i in range(t.n_teams):
        row = []
        for crit in ladder[:-1]:
            if crit is TieBreak.FEWER_MATCHES_PLAYED:
                row.append(played[i])
            elif crit is TieBreak.GOAL_DIFFERENCE:
                row.append(-totals.goal_diff[i])
            elif crit is TieBreak.GOALS_SCORED:
                row.append(-totals.goals_for[i])
            elif crit is TieBreak.STRENGTH_OF_OPPONENTS:
                row.append(-float(strength[i]))
        keys.append(tuple(row))
    return keys


def _build_ranking(
    t: Tournament,
    label: str,
    primary_name: str,
    primary_class: list[int],
    display_values: list[Fraction | float],
    ladder: tuple[TieBreak, ...],
    strict: bool,
) -> Ranking:
    """Order teams by (primary equivalence class, ladder, team id) and rank them.

    primary_class must already be ordered: a smaller class number means a
    better primary value. Two teams compare equal exactly when they share
    the class and every ladder key before the id backstop.
    """
    ladder = _validate_ladder(ladder)
    ladder_keys = _ladder_keys(t, ladder)
    ids = t.team_ids
    order = sorted(
        range(t.n_teams),
        key=lambda i: (primary_class[i], ladder_keys[i], ids[i]),
    )

    criterion_names = [primary_name] + [c.value for c in ladder[:-1]]
    entries: list[RankEntry] = []
    ranks: list[int] = []
    tied_flags = [False] * t.n_teams
    for pos, idx in enumerate(order):
        if pos == 0:
            ranks.append(1)
            trail: tuple[str, ...] = ()
        else:
            prev = order[pos - 1]
            prev_keys = [primary_class[prev], *ladder_keys[prev]]
            cur_keys = [primary_class[idx], *ladder_keys[idx]]
            consulted = []
            decided = False
            for name, a, b in zip(criterion_names, prev_keys, cur_keys):
                consulted.append(name)
                if a != b:
                    decided = True
                    break
            if decided:
                ranks.append(pos + 1)
            elif strict:
                consulted.append(TieBreak.TEAM_ID_ORDER.value)
                ranks.append(pos + 1)
            else:
                ranks.append(ranks[pos - 1])
                tied_flags[pos] = True
                tied_flags[pos - 1] = True
            trail = tuple(consulted)
        entries.append(
            RankEntry(
                team=ids[idx],
                rank=ranks[pos],
                value=display_values[idx],
                tiebreak_trail=trail,
            )
        )
    entries = [
        RankEntry(e.team, e.rank, e.value, e.tiebreak_trail, tied_flags[pos])
        for pos, e in enumerate(entries)
    ]
    return Ranking(policy_label=label, entries=tuple(entries))


def _exact_classes(values: Sequence[Fraction]) -> list[int]:
    """Equivalence classes for exact values, 0 for the best (largest)."""
    distinct = sorted(set(values), reverse=True)
    lookup = {v: c for c, v in enumerate(distinct)}
    return [lookup[v] for v in values]


def _clustered_classes(values: Sequence[float], tie_epsilon: float) -> list[int]:
    """Cluster ratings whose adjacent gaps are within tie_epsilon.

    Ratings are floats, so equality is read up to tie_epsilon: after
    sorting, a gap larger than tie_epsilon starts a new class.
    """
    order = sorted(range(len(values)), key=lambda i: -values[i])
    classes = [0] * len(values)
    cls = 0
    for pos, idx in enumerate(order):
        if pos > 0 and values[order[pos - 1]] - values[idx] > tie_epsilon:
            cls += 1
        classes[idx] = cls
    return classes


def rank_by_points(
    t: Tournament,
    ladder: tuple[TieBreak, ...] = DEFAULT_POINTS_LADDER,
    strict: bool = False,
    label: str = "points",
) -> Ranking:
    """Rank by total points; ignores that teams may have played unequal schedules."""
    sv = score_vector(t)
    return _build_ranking(
        t, label, "points", _exact_classes(sv.points), list(sv.points), ladder, strict
    )


def rank_by_quotient(
    t: Tournament,
    ladder: tuple[TieBreak, ...] = DEFAULT_QUOTIENT_LADDER,
    strict: bool = False,
    label: str = "quotient",
) -> Ranking:
    """Rank by points per match played, which corrects for missing matches only."""
    sv = score_vector(t)
    quots = quotients(sv)
    return _build_ranking(
        t, label, "quotient", _exact_classes(quots), list(quots), ladder, strict
    )


def rank_by_rating(
    t: Tournament,
    rating: RatingVector,
    tie_epsilon: float = DEFAULT_TIE_EPSILON,
    ladder: tuple[TieBreak, ...] = DEFAULT_RATING_LADDER,
    strict: bool = False,
    label: str | None = None,
) -> Ranking:
    """Rank by a solved rating vector, higher rating first."""
    if rating.team_ids != t.team_ids:
        raise ValueError("rating vector and tournament must cover the same teams")
    if label is None:
        label = rating.method if rating.epsilon is None else f"{rating.method}:{rating.epsilon:g}"
    values = [float(v) for v in rating.values]
    return _build_ranking(
        t, label, "rating", _clustered_classes(values, tie_epsilon), values, ladder, strict
    )


def apply_policy(t: Tournament, policy: Policy) -> Ranking:
    """Run one policy end to end on a tournament."""
    if policy.kind is PolicyKind.POINTS:
        ladder = policy.ladder or DEFAULT_POINTS_LADDER
        return rank_by_points(t, ladder=ladder, strict=policy.strict, label=policy.label)
    if policy.kind is PolicyKind.QUOTIENT:
        ladder = policy.ladder or DEFAULT_QUOTIENT_LADDER
        return rank_by_quotient(t, ladder=ladder, strict=policy.strict, label=policy.label)

    s = normalized_scores(score_vector(t))
    L = laplacian(matches_matrix(t))
    if policy.kind is PolicyKind.GRS:
        rating = solve_grs(s, L, policy.epsilon)
    else:
        rating = solve_ls_direct(s, L)
    ladder = policy.ladder or DEFAULT_RATING_LADDER
    return rank_by_rating(
        t,
        rating,
        tie_epsilon=policy.tie_epsilon,
        ladder=ladder,
        strict=policy.strict,
        label=policy.label,
    )


def kendall_tau_distance(a: Ranking, b: Ranking) -> int:
    """Number of team pairs the two rankings order differently.

    A pair tied in one ranking but split in the other counts as a clash.
    """
    ranks_a = {e.team: e.rank for e in a.entries}
    ranks_b = {e.team: e.rank for e in b.entries}
    if set(ranks_a) != set(ranks_b):
        raise ValueError("rankings must cover the same teams")
    teams = sorted(ranks_a)
    clashes = 0
    for i, s in enumerate(teams):
        for u in teams[i + 1 :]:
            da = ranks_a[s] - ranks_a[u]
            db = ranks_b[s] - ranks_b[u]
            if da * db < 0 or (da == 0) != (db == 0):
                clashes += 1
    return clashes
