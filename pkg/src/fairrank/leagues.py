"""Registry for the bundled league fixture files.

Fixture files live under ``fairrank/fixtures`` next to a manifest that
records a sha256 checksum and display metadata per file. Loading a
fixture verifies the checksum so silent data edits cannot go unnoticed.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources

from .model import PointSystem, THREE_ONE_ZERO, Tournament

__all__ = [
    "FixtureIntegrityError",
    "available_leagues",
    "league_title",
    "fixture_text",
    "load_league",
]


class FixtureIntegrityError(ValueError):
    """A bundled fixture does not match its recorded checksum."""


def _fixture_dir():
    return resources.files("fairrank").joinpath("fixtures")


def manifest() -> dict:
    """The fixture manifest: file name, checksum and title per league key."""
    text = _fixture_dir().joinpath("MANIFEST.json").read_text(encoding="utf-8")
    return json.loads(text)


def available_leagues() -> tuple[str, ...]:
    return tuple(sorted(manifest()))


def league_title(name: str) -> str:
    return _entry(name)["title"]


def _entry(name: str) -> dict:
    entries = manifest()
    if name not in entries:
        known = ", ".join(sorted(entries))
        raise KeyError(f"unknown league {name!r}; bundled leagues: {known}")
    return entries[name]


def fixture_text(name: str, verify: bool = True) -> str:
    """Raw CSV text of a bundled fixture, checksum-verified by default."""
    entry = _entry(name)
    raw = _fixture_dir().joinpath(entry["file"]).read_bytes()
    if verify:
        digest = hashlib.sha256(raw).hexdigest()
        if digest != entry["sha256"]:
            raise FixtureIntegrityError(
                f"fixture {entry['file']} is corrupted: sha256 {digest} != {entry['sha256']}"
            )
    return raw.decode("utf-8")


def load_league(
    name: str,
    point_system: PointSystem = THREE_ONE_ZERO,
    verify: bool = True,
) -> Tournament:
    """Load a bundled league fixture into a tournament."""
    import io

    from .cli import ingest_csv

    return ingest_csv(io.StringIO(fixture_text(name, verify=verify)), point_system=point_system)
