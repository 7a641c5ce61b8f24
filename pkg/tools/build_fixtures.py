#!/usr/bin/env python3
"""Build the bundled league fixture files from the data blocks.

Reads the standings aggregates and pairing structure in ``league_data.py``,
synthesises a concrete match list per league (outcomes first, then
scorelines), verifies the result against the frozen aggregates and
cross-check totals, and writes the CSV fixtures plus ``MANIFEST.json``
into ``src/fairrank/fixtures/``.

The synthesis is deterministic: reruns reproduce the committed files
byte for byte.

Usage:
    python3 tools/build_fixtures.py            # write the fixtures
    python3 tools/build_fixtures.py --check    # verify committed files
"""

from __future__ import annotations

import argparse
import csv
import datetime as dt
import hashlib
import io
import json
import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
import league_data as data

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "src" / "fairrank" / "fixtures"

CSV_HEADER = ["date", "home", "away", "home_goals", "away_goals"]


def pair(a, b):
    return (a, b) if a < b else (b, a)


# ---------------------------------------------------------------------------
# pairing structure


def twice_from_rounds(rounds, once_overrides, aliases):
    """Twice-met pairs for a league whose early rounds were mirrored."""
    seen = set()
    for rnd in rounds:
        used = set()
        for a, b in rnd:
            p = pair(a, b)
            assert a in aliases and b in aliases, p
            assert p not in seen, f"pair listed twice: {p}"
            assert a not in used and b not in used, f"team doubled in round: {p}"
            used.add(a)
            used.add(b)
            seen.add(p)
    for a, b in once_overrides:
        p = pair(a, b)
        assert p in seen, f"override {p} not in listed rounds"
        seen.discard(p)
    return seen


def twice_from_remaining(remaining, aliases):
    """Twice-met pairs as the complement of the never-played schedule."""
    rest = set()
    for a, opps in remaining.items():
        assert len(set(opps)) == len(opps), f"duplicate opponent for {a}"
        for b in opps:
            rest.add(pair(a, b))
    for a, b in rest:
        assert b in remaining.get(a, ()) and a in remaining.get(b, ()), (
            f"remaining list not symmetric for {(a, b)}"
        )
    every = {pair(a, b) for a in aliases for b in aliases if a < b}
    return every - rest


def complete_twice(aliases, targets, hard_twice, hard_once, seed):
    """Complete a partially known twice-met graph to exact degrees.

    Known pairs are kept, known single meetings are never doubled, and the
    rest is filled greedily (largest remaining degree first) with seeded
    retries when the greedy wedges.
    """
    hard = {pair(a, b) for a, b in hard_twice}
    forbidden = {pair(a, b) for a, b in hard_once}
    clash = hard & forbidden
    assert not clash, f"pairs marked both twice and once: {sorted(clash)}"
    base = Counter()
    for a, b in hard:
        base[a] += 1
        base[b] += 1
    for t in aliases:
        assert base[t] <= targets[t], f"{t} pinned above its twice degree"
    for attempt in range(300):
        rng = random.Random(f"{seed}:complete:{attempt}")
        edges = set(hard)
        rem = {t: targets[t] - base[t] for t in aliases}
        wedged = False
        while True:
            open_teams = [t for t in aliases if rem[t] > 0]
            if not open_teams:
                return edges
            t = max(open_teams, key=lambda x: (rem[x], x))
            cands = [
                u
                for u in open_teams
                if u != t and pair(t, u) not in edges and pair(t, u) not in forbidden
            ]
            if not cands:
                wedged = True
                break
            best = max(rem[u] for u in cands)
            top = sorted(u for u in cands if rem[u] == best)
            u = top[0] if attempt == 0 else rng.choice(top)
            edges.add(pair(t, u))
            rem[t] -= 1
            rem[u] -= 1
        if wedged:
            continue
    raise RuntimeError(f"could not complete pairing structure for {seed}")


# ---------------------------------------------------------------------------
# outcome assignment


def select_draws(aliases, mult, demand, rng, deterministic):
    """Choose which match slots end level so each team draws its quota."""
    cap = dict(mult)
    rem = dict(demand)
    chosen = []
    while True:
        open_teams = [t for t in aliases if rem[t] > 0]
        if not open_teams:
            return chosen
        t = max(open_teams, key=lambda x: (rem[x], x))
        cands = [u for u in open_teams if u != t and cap.get(pair(t, u), 0) > 0]
        if not cands:
            return None
        best = max(rem[u] for u in cands)
        top = sorted(u for u in cands if rem[u] == best)
        u = top[0] if deterministic else rng.choice(top)
        p = pair(t, u)
        chosen.append(p)
        cap[p] -= 1
        rem[t] -= 1
        rem[u] -= 1


class _Dinic:
    """Small max-flow solver used to orient the decided matches."""

    def __init__(self, n):
        self.n = n
        self.adj = [[] for _ in range(n)]

    def add(self, u, v, cap):
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def maxflow(self, s, t):
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                for v, cap, _ in self.adj[u]:
                    if cap > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(u, limit):
                if u == t:
                    return limit
                while it[u] < len(self.adj[u]):
                    edge = self.adj[u][it[u]]
                    v, cap, rev = edge
                    if cap > 0 and level[v] == level[u] + 1:
                        pushed = dfs(v, min(limit, cap))
                        if pushed:
                            edge[1] -= pushed
                            self.adj[v][rev][1] += pushed
                            return pushed
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 30)
                if not pushed:
                    break
                flow += pushed


def orient_wins(aliases, decided, wins):
    """Pick a winner for every decided match so win totals come out exact."""
    idx = {t: i for i, t in enumerate(aliases)}
    m = len(decided)
    n = len(aliases)
    # node layout: source, m match nodes, n team nodes, sink
    net = _Dinic(1 + m + n + 1)
    sink = 1 + m + n
    for i, (a, b) in enumerate(decided):
        net.add(0, 1 + i, 1)
        net.add(1 + i, 1 + m + idx[a], 1)
        net.add(1 + i, 1 + m + idx[b], 1)
    for t in aliases:
        net.add(1 + m + idx[t], sink, wins[t])
    if net.maxflow(0, sink) != m:
        return None
    winners = []
    for i, (a, b) in enumerate(decided):
        winner = None
        for v, cap, _ in net.adj[1 + i]:
            if v != 0 and cap == 0:
                winner = aliases[v - 1 - m]
                break
        assert winner in (a, b)
        winners.append(winner)
    return winners


def assign_outcomes(aliases, rows, match_pairs, seed, round_no):
    """Split the match list into draws and decided matches with winners."""
    wins = {r[0]: r[2] for r in rows}
    draws_needed = {r[0]: r[3] for r in rows}
    mult = Counter(match_pairs)
    for attempt in range(200):
        rng = random.Random(f"{seed}:outcomes:{round_no}:{attempt}")
        deterministic = round_no == 0 and attempt == 0
        draws = select_draws(aliases, mult, draws_needed, rng, deterministic)
        if draws is None:
            continue
        left = mult - Counter(draws)
        decided = sorted(left.elements())
        winners = orient_wins(aliases, decided, wins)
        if winners is None:
            continue
        matches = [{"pair": p, "winner": None} for p in sorted(draws)]
        matches += [
            {"pair": p, "winner": w} for p, w in zip(decided, winners)
        ]
        return matches
    raise RuntimeError(f"could not assign outcomes for {seed}")


# ---------------------------------------------------------------------------
# scoreline assignment


def assign_goals(aliases, rows, matches, seed):
    """Give every match a scoreline hitting each team's exact goal totals.

    Starts from 1-0 wins and 1-1 draws, then routes the remaining goals one
    at a time: raising a winner's tally, raising both sides of a draw, or
    raising a loser's tally where the margin allows it.
    """
    gf = {r[0]: r[5] for r in rows}
    ga = {r[0]: r[6] for r in rows}
    for attempt in range(60):
        rng = random.Random(f"{seed}:goals:{attempt}")
        jitter = attempt > 0
        goals = []
        for m in matches:
            a, b = m["pair"]
            if m["winner"] is None:
                goals.append({"pair": m["pair"], "winner": None, a: 1, b: 1})
            else:
                loser = b if m["winner"] == a else a
                goals.append({"pair": m["pair"], "winner": m["winner"], m["winner"]: 1, loser: 0})
        need_for = dict(gf)
        need_against = dict(ga)
        for g in goals:
            a, b = g["pair"]
            need_for[a] -= g[a]
            need_for[b] -= g[b]
            need_against[a] -= g[b]
            need_against[b] -= g[a]

        def lower_draw(team):
            # a 1-1 back to 0-0 frees one scored and one conceded goal
            # on both sides
            opts = [
                g
                for g in goals
                if g["winner"] is None and team in g["pair"] and g[team] > 0
            ]
            if not opts:
                return False
            g = opts[0]
            a, b = g["pair"]
            g[a] -= 1
            g[b] -= 1
            for t in (a, b):
                need_for[t] += 1
                need_against[t] += 1
            return True

        stuck = False
        guard = 0
        while not stuck and any(
            v < 0 for v in list(need_for.values()) + list(need_against.values())
        ):
            guard += 1
            if guard > 10000:
                stuck = True
                break
            team = next(
                t for t in aliases if need_for[t] < 0 or need_against[t] < 0
            )
            if not lower_draw(team):
                stuck = True
        if stuck:
            continue

        def bump(g, scorer):
            a, b = g["pair"]
            other = b if scorer == a else a
            g[scorer] += 1
            need_for[scorer] -= 1
            need_against[other] -= 1

        while not stuck and any(v > 0 for v in need_for.values()):
            movers = [t for t in aliases if need_against[t] > 0]
            if jitter:
                rng.shuffle(movers)
            movers.sort(key=lambda t: -need_against[t])
            moved = False
            for j in movers:
                # a goal against j lands best in a match j lost
                lost = [
                    g
                    for g in goals
                    if g["winner"] not in (None, j)
                    and j in g["pair"]
                    and need_for[g["winner"]] > 0
                ]
                if lost:
                    lost.sort(
                        key=lambda g: (-need_for[g["winner"]], g[g["winner"]], g["pair"])
                    )
                    pick = rng.choice(lost[:3]) if jitter else lost[0]
                    bump(pick, pick["winner"])
                    moved = True
                    break
                # otherwise raise a loser's tally where j won by two or more
                won = []
                for g in goals:
                    if g["winner"] == j and j in g["pair"]:
                        a, b = g["pair"]
                        loser = b if j == a else a
                        if g[j] - g[loser] >= 2 and need_for[loser] > 0:
                            won.append((g, loser))
                if won:
                    won.sort(key=lambda gl: (-need_for[gl[1]], gl[0]["pair"]))
                    g, loser = rng.choice(won[:3]) if jitter else won[0]
                    bump(g, loser)
                    moved = True
                    break
                # or raise both sides of a draw when all budgets allow it
                level = [
                    g
                    for g in goals
                    if g["winner"] is None and j in g["pair"]
                ]
                for g in level:
                    a, b = g["pair"]
                    other = b if j == a else a
                    if (
                        need_for[a] > 0
                        and need_for[b] > 0
                        and need_against[other] > 0
                    ):
                        bump(g, a)
                        bump(g, b)
                        moved = True
                        break
                if moved:
                    break
            if not moved:
                stuck = True
        if stuck:
            continue
        if any(v != 0 for v in need_for.values()) or any(
            v != 0 for v in need_against.values()
        ):
            continue
        return goals
    return None


# ---------------------------------------------------------------------------
# assembly, audit, emission


def build_league(spec):
    aliases = sorted(spec["teams"])
    rows = spec["rows"]
    twice = spec["twice"]
    every = {pair(a, b) for a in aliases for b in aliases if a < b}
    assert twice <= every
    match_pairs = sorted(every) + sorted(twice)
    goals = None
    for round_no in range(40):
        outcomes = assign_outcomes(aliases, rows, match_pairs, spec["key"], round_no)
        goals = assign_goals(aliases, rows, outcomes, f"{spec['key']}:{round_no}")
        if goals is not None:
            break
    if goals is None:
        raise RuntimeError(f"could not synthesise matches for {spec['key']}")

    # venues: the two meetings of a doubled pair swap hosts; single
    # meetings pick a deterministic host
    rng = random.Random(f"{spec['key']}:venues")
    seen_once = set()
    fixtures = []
    for g in goals:
        a, b = g["pair"]
        if g["pair"] in twice:
            home, away = (a, b) if g["pair"] not in seen_once else (b, a)
            seen_once.add(g["pair"])
        else:
            home, away = (a, b) if rng.random() < 0.5 else (b, a)
        fixtures.append(
            {"home": home, "away": away, "hg": g[home], "ag": g[away], "pair": g["pair"]}
        )

    # synthetic calendar: first meetings weekly from the league start,
    # second meetings from mid January
    first_block = []
    second_block = []
    met = set()
    for f in fixtures:
        if f["pair"] in met:
            second_block.append(f)
        else:
            first_block.append(f)
            met.add(f["pair"])
    rng.shuffle(first_block)
    rng.shuffle(second_block)
    per_day = len(aliases) // 2
    start = dt.date.fromisoformat(spec["start"])
    resume = dt.date(2020, 1, 17)
    for i, f in enumerate(first_block):
        f["date"] = start + dt.timedelta(days=7 * (i // per_day))
    for i, f in enumerate(second_block):
        f["date"] = resume + dt.timedelta(days=5 * (i // per_day))
    ordered = sorted(first_block + second_block, key=lambda f: (f["date"], f["home"]))

    names = spec["teams"]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for f in ordered:
        writer.writerow(
            [f["date"].isoformat(), names[f["home"]], names[f["away"]], f["hg"], f["ag"]]
        )
    return out.getvalue(), ordered


def audit_league(spec, fixtures):
    aliases = sorted(spec["teams"])
    rows = {r[0]: r for r in spec["rows"]}
    played = Counter()
    wins = Counter()
    draws = Counter()
    losses = Counter()
    gf = Counter()
    ga = Counter()
    meet = Counter()
    for f in fixtures:
        h, a, hg, ag = f["home"], f["away"], f["hg"], f["ag"]
        played[h] += 1
        played[a] += 1
        gf[h] += hg
        ga[h] += ag
        gf[a] += ag
        ga[a] += hg
        meet[pair(h, a)] += 1
        if hg > ag:
            wins[h] += 1
            losses[a] += 1
        elif hg < ag:
            wins[a] += 1
            losses[h] += 1
        else:
            draws[h] += 1
            draws[a] += 1
    for t in aliases:
        _, m, w, d, lo, f_, a_ = rows[t]
        got = (played[t], wins[t], draws[t], losses[t], gf[t], ga[t])
        assert got == (m, w, d, lo, f_, a_), f"{spec['key']}: {t} aggregates {got} != {(m, w, d, lo, f_, a_)}"
    for p, c in meet.items():
        assert c in (1, 2), f"{spec['key']}: pair {p} met {c} times"
        assert (c == 2) == (p in spec["twice"]), f"{spec['key']}: pair {p} count mismatch"
    assert set(meet) >= {pair(a, b) for a in aliases for b in aliases if a < b}

    # every club must be linked to every other through played matches
    seen = {aliases[0]}
    frontier = [aliases[0]]
    adj = {t: set() for t in aliases}
    for a, b in meet:
        adj[a].add(b)
        adj[b].add(a)
    while frontier:
        t = frontier.pop()
        for u in adj[t]:
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    assert seen == set(aliases), f"{spec['key']}: schedule graph disconnected"

    points = {t: 3 * wins[t] + draws[t] for t in aliases}
    for team, expected in spec.get("future_points", {}).items():
        once = [u for u in aliases if u != team and meet[pair(team, u)] == 1]
        total = sum(points[u] for u in once)
        assert total == expected, (
            f"{spec['key']}: future-opponent points for {team}: {total} != {expected}"
        )
    return {
        "teams": len(aliases),
        "matches": sum(meet.values()),
        "counts": dict(Counter(played.values())),
    }


def league_specs():
    specs = []
    g_alias = sorted(data.GERMANY_TEAMS)
    specs.append(
        {
            "key": "germany",
            "title": "Bundesliga 2019/20 (play stopped after 25 rounds)",
            "teams": data.GERMANY_TEAMS,
            "rows": data.GERMANY_ROWS,
            "twice": twice_from_rounds(
                data.GERMANY_TWICE_ROUNDS, data.GERMANY_ONCE_OVERRIDES, set(g_alias)
            ),
            "future_points": data.GERMANY_FUTURE_POINTS,
            "start": "2019-08-16",
        }
    )
    specs.append(
        {
            "key": "italy",
            "title": "Serie A 2019/20 (play stopped after 26 rounds)",
            "teams": data.ITALY_TEAMS,
            "rows": data.ITALY_ROWS,
            "twice": twice_from_rounds(
                data.ITALY_TWICE_ROUNDS, data.ITALY_ONCE_OVERRIDES, set(data.ITALY_TEAMS)
            ),
            "start": "2019-08-24",
        }
    )
    specs.append(
        {
            "key": "england",
            "title": "Premier League 2019/20 (play stopped after 29 rounds)",
            "teams": data.ENGLAND_TEAMS,
            "rows": data.ENGLAND_ROWS,
            "twice": twice_from_remaining(data.ENGLAND_REMAINING, set(data.ENGLAND_TEAMS)),
            "start": "2019-08-09",
        }
    )
    es_targets = {r[0]: r[1] - 19 for r in data.SPAIN_ROWS}
    specs.append(
        {
            "key": "spain",
            "title": "La Liga 2019/20 (play stopped after 27 rounds)",
            "teams": data.SPAIN_TEAMS,
            "rows": data.SPAIN_ROWS,
            "twice": complete_twice(
                sorted(data.SPAIN_TEAMS),
                es_targets,
                data.SPAIN_HARD_TWICE,
                data.SPAIN_HARD_ONCE,
                "spain",
            ),
            "start": "2019-08-16",
        }
    )
    fr_targets = {r[0]: r[1] - 19 for r in data.FRANCE_ROWS}
    specs.append(
        {
            "key": "france",
            "title": "Ligue 1 2019/20 (play stopped after 28 rounds)",
            "teams": data.FRANCE_TEAMS,
            "rows": data.FRANCE_ROWS,
            "twice": complete_twice(
                sorted(data.FRANCE_TEAMS),
                fr_targets,
                data.FRANCE_HARD_TWICE,
                data.FRANCE_HARD_ONCE,
                "france",
            ),
            "future_points": data.FRANCE_FUTURE_POINTS,
            "start": "2019-08-09",
        }
    )
    nl_targets = {r[0]: r[1] - 17 for r in data.NETHERLANDS_ROWS}
    specs.append(
        {
            "key": "netherlands",
            "title": "Eredivisie 2019/20 (play stopped after 26 rounds)",
            "teams": data.NETHERLANDS_TEAMS,
            "rows": data.NETHERLANDS_ROWS,
            "twice": complete_twice(
                sorted(data.NETHERLANDS_TEAMS),
                nl_targets,
                data.NETHERLANDS_HARD_TWICE,
                data.NETHERLANDS_HARD_ONCE,
                "netherlands",
            ),
            "start": "2019-08-09",
        }
    )
    return specs


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--check", action="store_true", help="verify committed files")
    args = parser.parse_args(argv)

    manifest = {}
    outputs = {}
    for spec in league_specs():
        text, fixtures = build_league(spec)
        summary = audit_league(spec, fixtures)
        file_name = f"{spec['key']}.csv"
        outputs[file_name] = text
        manifest[spec["key"]] = {
            "file": file_name,
            "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
            "title": spec["title"],
            "teams": summary["teams"],
            "matches": summary["matches"],
            "note": "aggregates and pairing structure faithful; scorelines, venues and dates synthetic",
        }
        counts = ", ".join(f"{c}x{m}" for m, c in sorted(summary["counts"].items()))
        print(
            f"{spec['key']}: {summary['teams']} teams, {summary['matches']} matches "
            f"(per club: {counts})"
        )

    manifest_text = json.dumps(manifest, indent=2, ensure_ascii=False, sort_keys=True) + "\n"
    if args.check:
        bad = []
        for name, text in outputs.items():
            path = FIXTURES_DIR / name
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                bad.append(name)
        current = (FIXTURES_DIR / "MANIFEST.json").read_text(encoding="utf-8")
        if current != manifest_text:
            bad.append("MANIFEST.json")
        if bad:
            print(f"stale fixtures: {', '.join(bad)}", file=sys.stderr)
            return 1
        print("fixtures match the builder output")
        return 0
    FIXTURES_DIR.mkdir(parents=True, exist_ok=True)
    for name, text in outputs.items():
        (FIXTURES_DIR / name).write_text(text, encoding="utf-8")
    (FIXTURES_DIR / "MANIFEST.json").write_text(manifest_text, encoding="utf-8")
    print(f"wrote {len(outputs)} fixtures + MANIFEST.json to {FIXTURES_DIR}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
