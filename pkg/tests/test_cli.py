"""CSV ingestion, config handling, report emission and exit codes."""

import io
import json
import logging
import textwrap
from fractions import Fraction

import pytest

from fairrank import (
    DisconnectedGraphError,
    Policy,
    build_tournament,
)
from fairrank.cli import (
    DEFAULT_POLICIES,
    EXIT_IO,
    EXIT_OK,
    EXIT_SOLVER,
    EXIT_VALIDATION,
    LeagueConfig,
    ParseError,
    StandingsReport,
    UnsupportedFormatError,
    emit,
    ingest_csv,
    main,
    parse_report,
    run_report,
)
from fairrank.model import MatchRecord, PointSystem

SAMPLE_CSV = textwrap.dedent(
    """\
    date,home,away,home_goals,away_goals
    2020-02-22,Hertha BSC,1. FC Köln,0,5
    2020-02-23,1. FC Köln,Schalke 04,3,0
    2020-02-24,Schalke 04,Hertha BSC,1,1
    """
)

DISCONNECTED_CSV = textwrap.dedent(
    """\
    date,home,away,home_goals,away_goals
    2020-01-01,A,B,1,0
    2020-01-02,C,D,2,2
    """
)


def source(text):
    return io.StringIO(text)


class TestIngest:
    def test_reads_rows_into_tournament(self):
        t = ingest_csv(source(SAMPLE_CSV))
        assert t.team_ids == ("1. FC Köln", "Hertha BSC", "Schalke 04")
        from fairrank import score_vector

        points = {"1. FC Köln": Fraction(6), "Hertha BSC": Fraction(1), "Schalke 04": Fraction(1)}
        assert dict(score_vector(t).as_mapping()) == points

    def test_round_column_is_optional_but_parsed(self):
        text = "date,home,away,home_goals,away_goals,round\n2020-01-01,A,B,2,0,4\n"
        t = ingest_csv(source(text))
        assert t.matches[0].round == 4

    def test_goal_cells_tolerate_surrounding_spaces(self):
        text = "date,home,away,home_goals,away_goals\n2020-01-01,A,B, 2 , 0 \n"
        t = ingest_csv(source(text))
        assert (t.matches[0].home_goals, t.matches[0].away_goals) == (2, 0)

    def test_blank_lines_are_skipped(self):
        t = ingest_csv(source(SAMPLE_CSV + "\n"))
        assert len(t.matches) == 3

    def test_empty_file(self):
        with pytest.raises(ParseError, match="empty file"):
            ingest_csv(source(""))

    def test_header_must_match(self):
        bad = "home,away,home_goals,away_goals\nA,B,1,0\n"
        with pytest.raises(ParseError, match="header must be") as info:
            ingest_csv(source(bad))
        assert info.value.row == 1

    def test_header_rejects_extra_columns(self):
        bad = "date,home,away,home_goals,away_goals,round,venue\n"
        with pytest.raises(ParseError, match="header must be"):
            ingest_csv(source(bad))

    def test_wrong_cell_count_reports_row(self):
        bad = "date,home,away,home_goals,away_goals\n2020-01-01,A,B,1\n"
        with pytest.raises(ParseError, match="expected 5 cells, got 4") as info:
            ingest_csv(source(bad))
        assert info.value.row == 2

    def test_non_numeric_goals_report_row_and_column(self):
        bad = SAMPLE_CSV + "2020-02-25,A,B,x,1\n"
        with pytest.raises(ParseError, match="expected a non-negative integer") as info:
            ingest_csv(source(bad))
        assert (info.value.row, info.value.column) == (5, "home_goals")

    def test_negative_goals_rejected(self):
        bad = "date,home,away,home_goals,away_goals\n2020-01-01,A,B,-1,0\n"
        with pytest.raises(ParseError, match="non-negative") as info:
            ingest_csv(source(bad))
        assert info.value.column == "home_goals"

    def test_bad_round_reports_location(self):
        bad = "date,home,away,home_goals,away_goals,round\n2020-01-01,A,B,1,0,zero\n"
        with pytest.raises(ParseError, match="positive integer") as info:
            ingest_csv(source(bad))
        assert (info.value.row, info.value.column) == (2, "round")

    def test_empty_team_name_rejected(self):
        bad = "date,home,away,home_goals,away_goals\n2020-01-01,,B,1,0\n"
        with pytest.raises(ParseError, match="team names cannot be empty") as info:
            ingest_csv(source(bad))
        assert info.value.row == 2

    def test_self_match_wrapped_with_row(self):
        bad = "date,home,away,home_goals,away_goals\n2020-01-01,A,A,1,0\n"
        with pytest.raises(ParseError, match="itself") as info:
            ingest_csv(source(bad))
        assert info.value.row == 2

    def test_no_data_rows(self):
        with pytest.raises(ParseError, match="no match rows"):
            ingest_csv(source("date,home,away,home_goals,away_goals\n"))

    def test_audit_log_counts_rows_and_appearances(self, caplog):
        with caplog.at_level(logging.INFO, logger="fairrank.cli"):
            ingest_csv(source(SAMPLE_CSV))
        messages = [r.getMessage() for r in caplog.records]
        assert "ingested 3 match rows, 3 teams" in messages
        counts = [int(m.rsplit(" ", 1)[1]) for m in messages if m.startswith("audit:")]
        # every match contributes two appearances
        assert sum(counts) == 2 * 3

    def test_reads_from_path(self, tmp_path):
        path = tmp_path / "league.csv"
        path.write_text(SAMPLE_CSV, encoding="utf-8")
        t = ingest_csv(path)
        assert len(t.matches) == 3

    def test_custom_point_system(self):
        two_one = PointSystem(2, 1, 0)
        t = ingest_csv(source(SAMPLE_CSV), point_system=two_one)
        from fairrank import score_vector

        assert score_vector(t).as_mapping()["1. FC Köln"] == Fraction(4)


class TestLeagueConfig:
    def test_defaults(self):
        config = LeagueConfig()
        assert config.output_format == "table"
        assert config.policies == DEFAULT_POLICIES
        assert config.tie_epsilon == pytest.approx(1e-9)

    def test_unknown_format_rejected(self):
        with pytest.raises(UnsupportedFormatError, match="unknown format"):
            LeagueConfig(output_format="yaml")

    def test_empty_policies_rejected(self):
        with pytest.raises(ValueError, match="at least one policy"):
            LeagueConfig(policies=())

    def test_duplicate_policies_rejected(self):
        pair = (Policy.parse("ls"), Policy.parse("ls"))
        with pytest.raises(ValueError, match="duplicate policies"):
            LeagueConfig(policies=pair)

    def test_tie_epsilon_must_be_positive(self):
        with pytest.raises(ValueError, match="tie_epsilon"):
            LeagueConfig(tie_epsilon=0.0)

    def test_from_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(
            json.dumps(
                {
                    "league": "Test League",
                    "point_system": {"win": 2, "draw": 1, "loss": 0},
                    "policies": ["points", "grs:0.5"],
                    "format": "json",
                    "strict_total_order": True,
                    "tie_epsilon": 1e-6,
                    "show_iterates": True,
                }
            ),
            encoding="utf-8",
        )
        config = LeagueConfig.from_file(path)
        assert config.league == "Test League"
        assert config.point_system.win == Fraction(2)
        assert [p.label for p in config.policies] == ["points", "grs:0.5"]
        assert config.output_format == "json"
        assert config.strict_total_order is True
        assert config.tie_epsilon == pytest.approx(1e-6)
        assert config.show_iterates is True

    def test_from_file_rejects_unknown_keys(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text('{"epsilon": 0.1}', encoding="utf-8")
        with pytest.raises(ValueError, match="unknown keys"):
            LeagueConfig.from_file(path)

    def test_from_file_rejects_bad_json(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ValueError, match="invalid JSON"):
            LeagueConfig.from_file(path)

    def test_from_file_rejects_non_object(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ValueError, match="expected a JSON object"):
            LeagueConfig.from_file(path)

    def test_point_system_needs_all_three_keys(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text('{"point_system": {"win": 3}}', encoding="utf-8")
        with pytest.raises(ValueError, match="win, draw, loss"):
            LeagueConfig.from_file(path)


def small_report(**config_kwargs):
    t = ingest_csv(source(SAMPLE_CSV))
    return run_report(t, LeagueConfig(league="Sample", **config_kwargs))


class TestRunReport:
    def test_one_ranking_per_policy(self):
        report = small_report()
        assert [r.policy_label for r in report.rankings] == [
            "points",
            "quotient",
            "grs:0.001",
            "grs:0.1",
            "ls",
        ]

    def test_rank_spread_zero_when_unanimous(self):
        report = small_report()
        assert report.rank_spread("1. FC Köln") == 0

    def test_ranking_lookup_by_label(self):
        report = small_report()
        assert report.ranking("ls").policy_label == "ls"
        with pytest.raises(KeyError):
            report.ranking("grs:7")

    def test_solver_failure_names_the_policy(self):
        # the generalized row sum stays solvable on a split graph, so the
        # least squares policy is the one that trips
        t = ingest_csv(source(DISCONNECTED_CSV))
        with pytest.raises(DisconnectedGraphError, match="policy ls:"):
            run_report(t, LeagueConfig())

    def test_points_only_policies_skip_the_solver(self):
        t = ingest_csv(source(DISCONNECTED_CSV))
        report = run_report(t, LeagueConfig(policies=(Policy.parse("points"),)))
        assert report.rank_spread("A") == 0

    def test_strict_flag_propagates(self):
        t = build_tournament(
            ["A", "B", "C"],
            [
                MatchRecord("A", "B", 1, 0),
                MatchRecord("B", "C", 1, 1),
                MatchRecord("C", "A", 2, 2),
            ],
        )
        loose = run_report(t, LeagueConfig(policies=(Policy.parse("points"),)))
        strict = run_report(
            t, LeagueConfig(policies=(Policy.parse("points"),), strict_total_order=True)
        )
        loose_ranks = [e.rank for e in loose.ranking("points").entries]
        strict_ranks = [e.rank for e in strict.ranking("points").entries]
        assert len(set(strict_ranks)) == 3
        assert len(set(loose_ranks)) < 3 or loose_ranks == strict_ranks

    def test_show_iterates_lines(self):
        t = build_tournament(
            ["A", "B", "C"],
            [
                MatchRecord("A", "B", 2, 0),
                MatchRecord("B", "C", 1, 1),
                MatchRecord("C", "A", 0, 1),
            ],
        )
        report = run_report(
            t, LeagueConfig(policies=(Policy.parse("ls"),), show_iterates=True)
        )
        assert report.iterate_lines[0].startswith("q(0): A=")
        assert report.iterate_lines[-1].startswith("converged to the least squares rating")

    def test_show_iterates_reports_oscillation(self):
        t = build_tournament(["A", "B"], [MatchRecord("A", "B", 1, 0)])
        report = run_report(
            t, LeagueConfig(policies=(Policy.parse("points"),), show_iterates=True)
        )
        assert report.iterate_lines[0].startswith("iteration oscillates:")

    def test_show_iterates_on_disconnected_data(self):
        t = ingest_csv(source(DISCONNECTED_CSV))
        report = run_report(
            t, LeagueConfig(policies=(Policy.parse("points"),), show_iterates=True)
        )
        assert report.iterate_lines[0].startswith("iteration unavailable:")


class TestEmit:
    def test_table_layout(self):
        report = small_report()
        text = emit(report, "table")
        lines = text.splitlines()
        assert lines[0] == "Sample"
        assert lines[1].startswith("team")
        assert "spread" in lines[1]
        # Köln leads every ranking, so it is the first body row
        assert lines[3].startswith("1. FC Köln")
        assert text.endswith("\n")

    def test_table_marks_teams_with_fewer_matches(self):
        t = build_tournament(
            ["A", "B", "C"],
            [
                MatchRecord("A", "B", 1, 0),
                MatchRecord("A", "C", 1, 0),
                MatchRecord("B", "A", 0, 2),
            ],
        )
        report = run_report(t, LeagueConfig(league="Short", policies=(Policy.parse("points"),)))
        text = emit(report, "table")
        assert "B*" in text and "C*" in text and "A*" not in text
        assert "* played fewer matches than the leaders of the schedule" in text

    def test_table_omits_footnote_when_counts_match(self):
        t = build_tournament(
            ["A", "B"], [MatchRecord("A", "B", 1, 0), MatchRecord("B", "A", 1, 0)]
        )
        report = run_report(t, LeagueConfig(policies=(Policy.parse("points"),)))
        assert "*" not in emit(report, "table")

    def test_csv_shape(self):
        report = small_report()
        lines = emit(report, "csv").splitlines()
        assert lines[0] == (
            "team,name,points,matches,goal_diff,goals_for,"
            "rank:points,rank:quotient,rank:grs:0.001,rank:grs:0.1,rank:ls"
        )
        assert len(lines) == 1 + 3
        assert lines[1].startswith("1. FC Köln,")

    def test_json_schema(self):
        report = small_report()
        data = json.loads(emit(report, "json"))
        assert data["league"] == "Sample"
        assert {t["id"] for t in data["teams"]} == {
            "1. FC Köln",
            "Hertha BSC",
            "Schalke 04",
        }
        first = data["teams"][0]
        assert set(first) == {"id", "name", "points", "matches", "goal_diff", "goals_for"}
        assert set(data["rankings"]) == {"points", "quotient", "grs:0.001", "grs:0.1", "ls"}
        entry = data["rankings"]["ls"][0]
        assert set(entry) == {"team", "rank", "rating"}
        assert isinstance(entry["rating"], float)

    def test_json_points_render_exactly(self):
        # fractional points survive as exact strings, integral ones as ints
        t = build_tournament(
            ["A", "B"], [MatchRecord("A", "B", 1, 1)], PointSystem(1, Fraction(1, 3), 0)
        )
        report = run_report(t, LeagueConfig(policies=(Policy.parse("points"),)))
        data = json.loads(emit(report, "json"))
        assert data["teams"][0]["points"] == "1/3"

    def test_emit_rejects_unknown_format(self):
        with pytest.raises(UnsupportedFormatError):
            emit(small_report(), "yaml")

    def test_emission_is_deterministic(self):
        for fmt in ("table", "csv", "json"):
            first = emit(small_report(), fmt)
            second = emit(small_report(), fmt)
            assert first == second

    def test_json_round_trip(self):
        report = small_report()
        text = emit(report, "json")
        rebuilt = parse_report(text)
        assert isinstance(rebuilt, StandingsReport)
        assert emit(rebuilt, "json") == text

    def test_round_trip_restores_tied_flags(self):
        t = build_tournament(
            ["A", "B", "C"],
            [
                MatchRecord("A", "B", 1, 0),
                MatchRecord("A", "C", 1, 0),
                MatchRecord("B", "C", 1, 1),
            ],
        )
        report = run_report(t, LeagueConfig(policies=(Policy.parse("points"),)))
        rebuilt = parse_report(emit(report, "json"))
        flags = {e.team: e.tied for e in rebuilt.ranking("points").entries}
        assert flags == {"A": False, "B": True, "C": True}


class TestMain:
    def run(self, argv, capsys):
        code = main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    def test_happy_path_json(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text(SAMPLE_CSV, encoding="utf-8")
        code, out, _ = self.run(["--input", str(path), "--format", "json"], capsys)
        assert code == EXIT_OK
        data = json.loads(out)
        assert len(data["teams"]) == 3

    def test_policy_flags_override_defaults(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text(SAMPLE_CSV, encoding="utf-8")
        code, out, _ = self.run(
            ["--input", str(path), "--policy", "points", "--policy", "grs:0.5", "--format", "csv"],
            capsys,
        )
        assert code == EXIT_OK
        assert out.splitlines()[0].endswith("rank:points,rank:grs:0.5")

    def test_flags_override_config(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text(SAMPLE_CSV, encoding="utf-8")
        config = tmp_path / "config.json"
        config.write_text('{"league": "Configured", "format": "json"}', encoding="utf-8")
        code, out, _ = self.run(
            ["--input", str(path), "--config", str(config), "--format", "csv"], capsys
        )
        assert code == EXIT_OK
        assert out.startswith("team,name,")

    def test_config_league_names_table(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text(SAMPLE_CSV, encoding="utf-8")
        config = tmp_path / "config.json"
        config.write_text('{"league": "Configured"}', encoding="utf-8")
        code, out, _ = self.run(["--input", str(path), "--config", str(config)], capsys)
        assert code == EXIT_OK
        assert out.splitlines()[0] == "Configured"

    def test_missing_input_is_io_error(self, tmp_path, capsys):
        code, _, err = self.run(["--input", str(tmp_path / "absent.csv")], capsys)
        assert code == EXIT_IO
        assert err.startswith("error:")

    def test_bad_policy_is_validation_error(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text(SAMPLE_CSV, encoding="utf-8")
        code, _, err = self.run(["--input", str(path), "--policy", "elo"], capsys)
        assert code == EXIT_VALIDATION
        assert "error:" in err

    def test_bad_csv_is_validation_error(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text("date,home,away,home_goals,away_goals\nx,A,B,one,0\n", encoding="utf-8")
        code, _, err = self.run(["--input", str(path)], capsys)
        assert code == EXIT_VALIDATION
        assert "home_goals" in err

    def test_unknown_config_key_is_validation_error(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text(SAMPLE_CSV, encoding="utf-8")
        config = tmp_path / "config.json"
        config.write_text('{"verbose": true}', encoding="utf-8")
        code, _, err = self.run(["--input", str(path), "--config", str(config)], capsys)
        assert code == EXIT_VALIDATION
        assert "unknown keys" in err

    def test_disconnected_is_solver_error(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text(DISCONNECTED_CSV, encoding="utf-8")
        code, _, err = self.run(["--input", str(path)], capsys)
        assert code == EXIT_SOLVER
        assert "policy ls" in err

    def test_unknown_fixture_is_validation_error(self, capsys):
        code, _, err = self.run(["--input", "fixture:atlantis"], capsys)
        assert code == EXIT_VALIDATION
        assert "unknown league" in err

    def test_show_iterates_flag(self, tmp_path, capsys):
        path = tmp_path / "league.csv"
        path.write_text(SAMPLE_CSV, encoding="utf-8")
        code, out, _ = self.run(
            ["--input", str(path), "--policy", "ls", "--show-iterates"], capsys
        )
        assert code == EXIT_OK
        assert "q(0):" in out
