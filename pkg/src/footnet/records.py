"""Ingestion of historical match and country records.

Parses the delimited match/country files, applies the alias table that
resolves historical naming splits and mergers, and slices match lists by
time horizon. All functions are pure; records are immutable.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from datetime import date, timedelta
from pathlib import Path
from typing import IO, Iterable

log = logging.getLogger(__name__)

FIRST_MATCH_DATE = date(1872, 11, 30)

CONFEDERATIONS = ("UEFA", "CONMEBOL", "AFC", "CAF", "CONCACAF", "OFC")

MATCH_HEADER = [
    "Date", "Home", "Guest", "GoalsHome", "GoalsGuest", "Tournament",
    "Venue", "HomeRanking", "GuestRanking", "RankHome", "RankGuest",
    "ThirdPlace",
]

COUNTRY_HEADER = ["Name", "Latitude", "Longitude", "Continent", "Confederation"]


class IngestError(ValueError):
    """Malformed input row; carries the 1-based row number and field name."""

    def __init__(self, message: str, row: int | None = None, field: str | None = None):
        super().__init__(message)
        self.row = row
        self.field = field


@dataclass(frozen=True)
class MatchRecord:
    """One historical match between two national teams."""

    date: date
    home: str
    guest: str
    goals_home: int
    goals_guest: int
    tournament: str
    venue: str
    neutral_ground: bool

    def __post_init__(self):
        if self.home == self.guest:
            raise IngestError(f"match pairs a team with itself: {self.home}")
        if self.goals_home < 0 or self.goals_guest < 0:
            raise IngestError("negative goal count")

    @property
    def teams(self) -> tuple[str, str]:
        return (self.home, self.guest)


@dataclass(frozen=True)
class CountryRecord:
    """Canonical team identity with location and confederation."""

    name: str
    latitude: float
    longitude: float
    continent: str
    confederation: str

    def __post_init__(self):
        if not self.name:
            raise IngestError("empty country name")
        if not -90.0 <= self.latitude <= 90.0:
            raise IngestError(f"latitude out of range: {self.latitude}", field="Latitude")
        if not -180.0 <= self.longitude <= 180.0:
            raise IngestError(f"longitude out of range: {self.longitude}", field="Longitude")
        if self.confederation not in CONFEDERATIONS:
            raise IngestError(
                f"unknown confederation {self.confederation!r}", field="Confederation"
            )


def _open_text(source) -> IO[str]:
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8", newline="")
    if isinstance(source, bytes):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, io.RawIOBase | io.BufferedIOBase):
        return io.TextIOWrapper(source, encoding="utf-8", newline="")
    return source  # already a text stream


def _parse_date(text: str, row: int) -> date:
    try:
        y, m, d = text.split("-")
        parsed = date(int(y), int(m), int(d))
    except Exception as exc:
        raise IngestError(f"unknown date format {text!r}", row=row, field="Date") from exc
    if parsed < FIRST_MATCH_DATE:
        raise IngestError(
            f"date {parsed.isoformat()} precedes the first recorded match", row=row,
            field="Date",
        )
    return parsed


def parse_matches(source) -> list[MatchRecord]:
    """Parse the match file into records, preserving row order.

    ``source`` may be a path, a byte string, or an open byte/text stream.
    The header row must match the published twelve-column schema; ranking
    columns are accepted but ignored.
    """
    stream = _open_text(source)
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise IngestError("empty input: missing header row", row=1)
    if [h.strip() for h in header] != MATCH_HEADER:
        raise IngestError(f"unexpected match header: {header}", row=1)

    out: list[MatchRecord] = []
    for idx, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(MATCH_HEADER):
            raise IngestError(
                f"expected {len(MATCH_HEADER)} fields, got {len(row)}", row=idx
            )
        d = _parse_date(row[0].strip(), idx)
        try:
            goals_home = int(row[3])
            goals_guest = int(row[4])
        except ValueError as exc:
            raise IngestError(f"bad goal count in row {idx}", row=idx, field="Goals") from exc
        third = row[11].strip()
        if third not in ("True", "False"):
            raise IngestError(f"bad ThirdPlace flag {third!r}", row=idx, field="ThirdPlace")
        try:
            rec = MatchRecord(
                date=d,
                home=row[1].strip(),
                guest=row[2].strip(),
                goals_home=goals_home,
                goals_guest=goals_guest,
                tournament=row[5].strip(),
                venue=row[6].strip(),
                neutral_ground=(third == "True"),
            )
        except IngestError as exc:
            raise IngestError(str(exc), row=idx) from exc
        out.append(rec)
    return out


def parse_countries(source) -> list[CountryRecord]:
    """Parse the country file; names must be unique."""
    stream = _open_text(source)
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise IngestError("empty input: missing header row", row=1)
    if [h.strip() for h in header] != COUNTRY_HEADER:
        raise IngestError(f"unexpected country header: {header}", row=1)

    out: list[CountryRecord] = []
    seen: set[str] = set()
    for idx, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(COUNTRY_HEADER):
            raise IngestError(f"expected 5 fields, got {len(row)}", row=idx)
        name = row[0].strip()
        if name in seen:
            raise IngestError(f"duplicate country name {name!r}", row=idx, field="Name")
        seen.add(name)
        try:
            lat = float(row[1])
            lon = float(row[2])
        except ValueError as exc:
            raise IngestError(f"bad coordinate in row {idx}", row=idx) from exc
        try:
            rec = CountryRecord(name, lat, lon, row[3].strip(), row[4].strip())
        except IngestError as exc:
            raise IngestError(str(exc), row=idx, field=exc.field) from exc
        out.append(rec)
    return out


def load_aliases(source) -> dict[str, str]:
    """Load the alias table from ``alias = "canonical"`` lines.

    Blank lines and ``#`` comments are skipped. The returned map is made
    idempotent by adding an identity entry for every canonical target.
    """
    stream = _open_text(source)
    aliases: dict[str, str] = {}
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise IngestError(f"bad alias line {lineno}: {raw!r}", row=lineno)
        key, _, value = line.partition("=")
        alias = key.strip().strip('"')
        canonical = value.strip().strip('"')
        if not alias or not canonical:
            raise IngestError(f"bad alias line {lineno}: {raw!r}", row=lineno)
        aliases[alias] = canonical
    for canonical in list(aliases.values()):
        aliases.setdefault(canonical, canonical)
    return aliases


def unify(
    matches: Iterable[MatchRecord],
    aliases: dict[str, str],
    known_names: set[str] | None = None,
) -> list[MatchRecord]:
    """Rewrite team names to their canonical forms.

    Names absent from the alias map pass through unchanged; when
    ``known_names`` is given, unresolved names outside it are logged as
    warnings so unaffiliated teams stay visible.
    """
    out: list[MatchRecord] = []
    warned: set[str] = set()
    for m in matches:
        home = aliases.get(m.home, m.home)
        guest = aliases.get(m.guest, m.guest)
        if known_names is not None:
            for name in (home, guest):
                if name not in known_names and name not in warned:
                    warned.add(name)
                    log.warning("team %r has no country record; kept as unaffiliated", name)
        if home == m.home and guest == m.guest:
            out.append(m)
        else:
            out.append(
                MatchRecord(
                    m.date, home, guest, m.goals_home, m.goals_guest,
                    m.tournament, m.venue, m.neutral_ground,
                )
            )
    return out


def filter_horizon(
    matches: Iterable[MatchRecord], start: date, end: date
) -> list[MatchRecord]:
    """Keep matches with start <= date <= end, preserving order."""
    if start > end:
        raise ValueError(f"horizon start {start} is after end {end}")
    return [m for m in matches if start <= m.date <= end]


def next_day(d: date) -> date:
    return d + timedelta(days=1)
