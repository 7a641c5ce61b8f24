"""Command line interface: CSV ingestion, report building, output formats.

The pipeline is ingest -> rank under each requested policy -> emit. The
emitters are deterministic: the same input and configuration produce
byte-identical output on every run.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, TextIO

from .model import (
    MatchRecord,
    ModelError,
    PointSystem,
    THREE_ONE_ZERO,
    Tournament,
    build_tournament,
    goal_totals,
    matches_matrix,
)
from .policies import Policy, Ranking, RankEntry, apply_policy
from .scoring import normalized_scores, score_vector
from .solver import (
    DisconnectedGraphError,
    NoConvergenceError,
    SolverError,
    laplacian,
    solve_ls_iterative,
)

__all__ = [
    "ParseError",
    "UnsupportedFormatError",
    "LeagueConfig",
    "TeamRow",
    "StandingsReport",
    "DEFAULT_POLICIES",
    "ingest_csv",
    "run_report",
    "emit",
    "parse_report",
    "main",
]

log = logging.getLogger("fairrank.cli")

REQUIRED_COLUMNS = ("date", "home", "away", "home_goals", "away_goals")
OPTIONAL_COLUMNS = ("round",)
FORMATS = ("table", "csv", "json")

DEFAULT_POLICIES = (
    Policy.parse("points"),
    Policy.parse("quotient"),
    Policy.parse("grs:0.001"),
    Policy.parse("grs:0.1"),
    Policy.parse("ls"),
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SOLVER = 2
EXIT_IO = 3


class ParseError(ValueError):
    """A CSV cell or header that cannot be understood, with its location."""

    def __init__(self, reason: str, row: int | None = None, column: str | None = None) -> None:
        place = ""
        if row is not None:
            place = f" (row {row}" + (f", column {column!r})" if column else ")")
        super().__init__(f"{reason}{place}")
        self.row = row
        self.column = column
        self.reason = reason


class UnsupportedFormatError(ValueError):
    """An output format other than table, csv or json."""


def _parse_goals(cell: str, row: int, column: str) -> int:
    text = cell.strip()
    if not text.isdigit():
        raise ParseError(f"expected a non-negative integer, got {cell!r}", row, column)
    return int(text)


def ingest_csv(
    source: str | Path | TextIO,
    point_system: PointSystem = THREE_ONE_ZERO,
) -> Tournament:
    """Read a match list CSV into a tournament.

    The header must be date,home,away,home_goals,away_goals with an
    optional trailing round column. The date is audit information only.
    Row count and per-team match counts are echoed on the audit log.
    """
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as handle:
            return ingest_csv(handle, point_system=point_system)

    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty file: expected a header row") from None
    header = [cell.strip() for cell in header]
    expected = list(REQUIRED_COLUMNS)
    if header != expected and header != expected + list(OPTIONAL_COLUMNS):
        raise ParseError(
            "header must be date,home,away,home_goals,away_goals with optional round, "
            f"got {','.join(header)}",
            row=1,
        )
    has_round = len(header) == len(expected) + 1

    matches: list[MatchRecord] = []
    for line, cells in enumerate(reader, start=2):
        if not cells:
            continue
        if len(cells) != len(header):
            raise ParseError(f"expected {len(header)} cells, got {len(cells)}", row=line)
        home = cells[1].strip()
        away = cells[2].strip()
        if not home or not away:
            raise ParseError("team names cannot be empty", row=line, column="home/away")
        round_no: int | None = None
        if has_round:
            text = cells[5].strip()
            if not text.isdigit() or int(text) < 1:
                raise ParseError(f"expected a positive integer, got {cells[5]!r}", line, "round")
            round_no = int(text)
        try:
            matches.append(
                MatchRecord(
                    home=home,
                    away=away,
                    home_goals=_parse_goals(cells[3], line, "home_goals"),
                    away_goals=_parse_goals(cells[4], line, "away_goals"),
                    round=round_no,
                )
            )
        except ModelError as exc:
            raise ParseError(str(exc), row=line) from exc

    teams = sorted({m.home for m in matches} | {m.away for m in matches})
    if not matches:
        raise ParseError("no match rows found")
    tournament = build_tournament(teams, matches, point_system)
    log.info("ingested %d match rows, %d teams", len(matches), tournament.n_teams)
    for team, count in zip(tournament.team_ids, tournament.matches_played()):
        log.info("audit: %s played %d", team, count)
    return tournament


@dataclass(frozen=True)
class LeagueConfig:
    """Everything a report run needs besides the match data."""

    league: str = "league"
    point_system: PointSystem = THREE_ONE_ZERO
    policies: tuple[Policy, ...] = DEFAULT_POLICIES
    output_format: str = "table"
    strict_total_order: bool = False
    tie_epsilon: float = 1e-9
    show_iterates: bool = False

    def __post_init__(self) -> None:
        if self.output_format not in FORMATS:
            raise UnsupportedFormatError(
                f"unknown format {self.output_format!r}; expected one of: {', '.join(FORMATS)}"
            )
        if not self.policies:
            raise ValueError("at least one policy is required")
        if not self.tie_epsilon > 0:
            raise ValueError(f"tie_epsilon must be positive, got {self.tie_epsilon!r}")
        labels = [p.label for p in self.policies]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate policies requested: {', '.join(labels)}")

    @classmethod
    def from_file(cls, path: str | Path) -> "LeagueConfig":
        """Load a JSON config file; unknown keys are rejected."""
        with open(path, encoding="utf-8") as handle:
            try:
                raw = json.load(handle)
            except json.JSONDecodeError as exc:
                raise ValueError(f"config {path}: invalid JSON ({exc})") from exc
        if not isinstance(raw, dict):
            raise ValueError(f"config {path}: expected a JSON object")
        known = {
            "league",
            "point_system",
            "policies",
            "format",
            "strict_total_order",
            "tie_epsilon",
            "show_iterates",
        }
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"config {path}: unknown keys {sorted(unknown)}")
        kwargs: dict = {}
        if "league" in raw:
            kwargs["league"] = str(raw["league"])
        if "point_system" in raw:
            spec = raw["point_system"]
            if not isinstance(spec, dict) or set(spec) != {"win", "draw", "loss"}:
                raise ValueError("point_system needs exactly the keys win, draw, loss")
            kwargs["point_system"] = PointSystem(
                Fraction(str(spec["win"])), Fraction(str(spec["draw"])), Fraction(str(spec["loss"]))
            )
        if "policies" in raw:
            if not isinstance(raw["policies"], list):
                raise ValueError("policies must be a list of policy strings")
            kwargs["policies"] = tuple(Policy.parse(str(p)) for p in raw["policies"])
        if "format" in raw:
            kwargs["output_format"] = str(raw["format"])
        if "strict_total_order" in raw:
            kwargs["strict_total_order"] = bool(raw["strict_total_order"])
        if "tie_epsilon" in raw:
            kwargs["tie_epsilon"] = float(raw["tie_epsilon"])
        if "show_iterates" in raw:
            kwargs["show_iterates"] = bool(raw["show_iterates"])
        return cls(**kwargs)


@dataclass(frozen=True)
class TeamRow:
    id: str
    name: str
    points: Fraction
    matches: int
    goal_diff: int
    goals_for: int


@dataclass(frozen=True)
class StandingsReport:
    """Per-team standings data plus one ranking per requested policy."""

    league: str
    team_rows: tuple[TeamRow, ...]
    rankings: tuple[Ranking, ...]
    iterate_lines: tuple[str, ...] = ()

    def ranking(self, label: str) -> Ranking:
        for ranking in self.rankings:
            if ranking.policy_label == label:
                return ranking
        raise KeyError(label)

    def rank_spread(self, team: str) -> int:
        """How far the policies disagree about one team (0 means unanimous)."""
        ranks = [r.rank_of(team) for r in self.rankings]
        return max(ranks) - min(ranks)

    def to_dict(self) -> dict:
        return {
            "league": self.league,
            "teams": [
                {
                    "id": row.id,
                    "name": row.name,
                    "points": _number(row.points),
                    "matches": row.matches,
                    "goal_diff": row.goal_diff,
                    "goals_for": row.goals_for,
                }
                for row in self.team_rows
            ],
            "rankings": {
                ranking.policy_label: [
                    {"team": e.team, "rank": e.rank, "rating": float(e.value)}
                    for e in ranking.entries
                ]
                for ranking in self.rankings
            },
        }


def _number(value: Fraction) -> int | str:
    if value.denominator == 1:
        return int(value)
    return str(value)


def _iterate_lines(t: Tournament) -> tuple[str, ...]:
    """Render the first fixed-point iterates, or say why there are none."""
    s = normalized_scores(score_vector(t))
    L = laplacian(matches_matrix(t))
    try:
        rating = solve_ls_iterative(s, L)
    except NoConvergenceError as exc:
        flavour = "oscillates" if exc.oscillating else "does not converge"
        return (f"iteration {flavour}: {exc}",)
    except DisconnectedGraphError as exc:
        return (f"iteration unavailable: {exc}",)
    lines = []
    for k, vec in enumerate(rating.early_iterates):
        cells = ", ".join(f"{team}={v:+.6f}" for team, v in zip(rating.team_ids, vec))
        lines.append(f"q({k}): {cells}")
    lines.append(f"converged to the least squares rating after {rating.iterations} steps")
    return tuple(lines)


def run_report(t: Tournament, config: LeagueConfig) -> StandingsReport:
    """Rank the tournament under every configured policy."""
    sv = score_vector(t)
    totals = goal_totals(t)
    by_id = {team.id: team for team in t.teams}
    rows = tuple(
        TeamRow(
            id=team_id,
            name=by_id[team_id].name,
            points=sv.points[i],
            matches=sv.matches[i],
            goal_diff=totals.goal_diff[i],
            goals_for=totals.goals_for[i],
        )
        for i, team_id in enumerate(t.team_ids)
    )
    policies = tuple(
        dataclasses.replace(
            p, strict=config.strict_total_order, tie_epsilon=config.tie_epsilon
        )
        for p in config.policies
    )
    ranking_list = []
    for policy in policies:
        try:
            ranking_list.append(apply_policy(t, policy))
        except SolverError as exc:
            exc.args = (f"policy {policy.label}: {exc}",)
            raise
    rankings = tuple(ranking_list)
    iterate_lines = _iterate_lines(t) if config.show_iterates else ()
    return StandingsReport(
        league=config.league,
        team_rows=rows,
        rankings=rankings,
        iterate_lines=iterate_lines,
    )


def _emit_table(report: StandingsReport) -> str:
    rows_by_id = {row.id: row for row in report.team_rows}
    max_matches = max(row.matches for row in report.team_rows)
    first = report.rankings[0]
    ordered = [rows_by_id[team] for team in first.order()]

    header = ["team", "pts", "m", "gd", "gf"]
    header += [r.policy_label for r in report.rankings]
    header += ["spread"]
    body: list[list[str]] = []
    for row in ordered:
        mark = "*" if row.matches < max_matches else ""
        cells = [
            row.name + mark,
            str(row.points),
            str(row.matches),
            f"{row.goal_diff:+d}",
            str(row.goals_for),
        ]
        cells += [str(r.rank_of(row.id)) for r in report.rankings]
        cells += [str(report.rank_spread(row.id))]
        body.append(cells)

    widths = [max(len(header[c]), *(len(r[c]) for r in body)) for c in range(len(header))]
    lines = [report.league]
    lines.append("  ".join(h.ljust(widths[c]) for c, h in enumerate(header)).rstrip())
    lines.append("  ".join("-" * widths[c] for c in range(len(header))))
    for cells in body:
        lines.append(
            "  ".join(
                cells[c].ljust(widths[c]) if c == 0 else cells[c].rjust(widths[c])
                for c in range(len(cells))
            ).rstrip()
        )
    if any(row.matches < max_matches for row in report.team_rows):
        lines.append("* played fewer matches than the leaders of the schedule")
    for extra in report.iterate_lines:
        lines.append(extra)
    return "\n".join(lines) + "\n"


def _emit_csv(report: StandingsReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["team", "name", "points", "matches", "goal_diff", "goals_for"]
    header += [f"rank:{r.policy_label}" for r in report.rankings]
    writer.writerow(header)
    for row in report.team_rows:
        cells = [row.id, row.name, str(row.points), row.matches, row.goal_diff, row.goals_for]
        cells += [r.rank_of(row.id) for r in report.rankings]
        writer.writerow(cells)
    return buffer.getvalue()


def emit(report: StandingsReport, output_format: str) -> str:
    """Serialize a report as an aligned table, CSV or JSON."""
    if output_format == "table":
        return _emit_table(report)
    if output_format == "csv":
        return _emit_csv(report)
    if output_format == "json":
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"
    raise UnsupportedFormatError(
        f"unknown format {output_format!r}; expected one of: {', '.join(FORMATS)}"
    )


def parse_report(text: str) -> StandingsReport:
    """Rebuild a report from its JSON form; the inverse of emit(..., "json")."""
    raw = json.loads(text)
    rows = tuple(
        TeamRow(
            id=item["id"],
            name=item["name"],
            points=Fraction(str(item["points"])),
            matches=int(item["matches"]),
            goal_diff=int(item["goal_diff"]),
            goals_for=int(item["goals_for"]),
        )
        for item in raw["teams"]
    )
    rankings = []
    for label, entries in raw["rankings"].items():
        built = []
        for pos, item in enumerate(entries):
            tied_prev = pos > 0 and entries[pos - 1]["rank"] == item["rank"]
            tied_next = pos + 1 < len(entries) and entries[pos + 1]["rank"] == item["rank"]
            built.append(
                RankEntry(
                    team=item["team"],
                    rank=int(item["rank"]),
                    value=float(item["rating"]),
                    tied=tied_prev or tied_next,
                )
            )
        rankings.append(Ranking(policy_label=label, entries=tuple(built)))
    return StandingsReport(league=raw["league"], team_rows=rows, rankings=tuple(rankings))


def _resolve_input(text: str) -> str | Path | io.StringIO:
    if text.startswith("fixture:"):
        from . import leagues

        return io.StringIO(leagues.fixture_text(text.removeprefix("fixture:")))
    return Path(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fairrank",
        description=(
            "Rank an interrupted round-robin league fairly. Reads a CSV match list "
            "(date,home,away,home_goals,away_goals[,round]) or a bundled fixture "
            "(fixture:<name>) and reports standings under each requested policy."
        ),
    )
    parser.add_argument("--input", required=True, help="CSV path or fixture:<league>")
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument(
        "--policy",
        action="append",
        help="policy to apply: points, quotient, ls or grs:<epsilon>; repeatable",
    )
    parser.add_argument("--format", choices=FORMATS, help="output format (default table)")
    parser.add_argument(
        "--strict-total-order",
        action="store_true",
        help="break remaining ties by team id instead of sharing ranks",
    )
    parser.add_argument(
        "--show-iterates",
        action="store_true",
        help="include the first opponent-adjustment iterates in the table output",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    args = _build_parser().parse_args(argv)
    try:
        config = LeagueConfig.from_file(args.config) if args.config else LeagueConfig()
        overrides: dict = {}
        if args.policy:
            overrides["policies"] = tuple(Policy.parse(p) for p in args.policy)
        if args.format:
            overrides["output_format"] = args.format
        if args.strict_total_order:
            overrides["strict_total_order"] = True
        if args.show_iterates:
            overrides["show_iterates"] = True
        if args.input.startswith("fixture:") and "league" not in overrides and not args.config:
            from . import leagues

            overrides["league"] = leagues.league_title(args.input.removeprefix("fixture:"))
        config = dataclasses.replace(config, **overrides)
        source = _resolve_input(args.input)
        tournament = ingest_csv(source, point_system=config.point_system)
        report = run_report(tournament, config)
        output = emit(report, config.output_format)
    except (OSError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (ModelError, ParseError, UnsupportedFormatError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
