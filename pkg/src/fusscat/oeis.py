"""Fetch OEIS sequences (or local fixtures) and compare them with computed terms.

Configuration comes from the environment unless passed explicitly:

``FUSSCAT_OEIS_BASE_URL``
    endpoint root, default ``https://oeis.org``; queried as
    ``<base>/search?q=id:<ID>&fmt=json``
``FUSSCAT_FIXTURE_DIR``
    directory of fixture files ``<ID>.txt`` (first line the id, second line
    comma-separated terms); defaults to the fixtures shipped with the package
``FUSSCAT_OEIS_TIMEOUT``
    seconds, default 10
"""

from __future__ import annotations

import enum
import json
import os
import re
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

DEFAULT_BASE_URL = "https://oeis.org"
DEFAULT_TIMEOUT = 10.0

_ID = re.compile(r"A\d{6}")


class OEISError(Exception):
    """Base class for lookup failures."""


class InvalidIdentifierError(OEISError):
    pass


class NetworkError(OEISError):
    pass


class NotFoundError(OEISError):
    pass


class MalformedResponseError(OEISError):
    pass


class Source(str, enum.Enum):
    NETWORK = "network"
    FIXTURE = "fixture"


@dataclass(frozen=True)
class SequenceRecord:
    id: str
    terms: tuple[int, ...]
    source: Source

    def __post_init__(self) -> None:
        validate_id(self.id)
        if not self.terms:
            raise ValueError(f"sequence {self.id} has no terms")


class Verdict(str, enum.Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    INSUFFICIENT = "insufficient-remote-terms"


@dataclass(frozen=True)
class CrossCheckReport:
    matched_prefix_length: int
    verdict: Verdict
    first_mismatch: tuple[int, int, int] | None = None

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.MISMATCH) != (self.first_mismatch is not None):
            raise ValueError("a mismatch report carries exactly one first_mismatch")

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict.value, "matched_prefix_length": self.matched_prefix_length}
        if self.first_mismatch is not None:
            i, local, remote = self.first_mismatch
            out["first_mismatch"] = {"index": i, "local": str(local), "remote": str(remote)}
        return out


def validate_id(identifier: str) -> str:
    if not isinstance(identifier, str) or not _ID.fullmatch(identifier):
        raise InvalidIdentifierError(f"{identifier!r} is not an OEIS id (expected 'A' and 6 digits)")
    return identifier


def parse_terms(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise MalformedResponseError(f"non-integer term in {text[:60]!r}") from None


@dataclass
class OEISClient:
    base_url: str = DEFAULT_BASE_URL
    timeout: float = DEFAULT_TIMEOUT
    fixture_dir: Path | None = None
    offline: bool = True

    @classmethod
    def from_env(cls, **overrides) -> OEISClient:
        env = os.environ
        settings = {
            "base_url": env.get("FUSSCAT_OEIS_BASE_URL", DEFAULT_BASE_URL),
            "timeout": float(env.get("FUSSCAT_OEIS_TIMEOUT", DEFAULT_TIMEOUT)),
            "fixture_dir": Path(env["FUSSCAT_FIXTURE_DIR"]) if env.get("FUSSCAT_FIXTURE_DIR") else None,
        }
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**settings)

    def fetch(self, identifier: str) -> SequenceRecord:
        validate_id(identifier)
        if self.offline:
            return self._from_fixture(identifier)
        return self._from_network(identifier)

    def _from_fixture(self, identifier: str) -> SequenceRecord:
        if self.fixture_dir is not None:
            path = Path(self.fixture_dir) / f"{identifier}.txt"
            if not path.is_file():
                raise NotFoundError(f"no fixture for {identifier} in {self.fixture_dir}")
            text = path.read_text(encoding="utf-8")
        else:
            res = resources.files("fusscat") / "data" / "oeis" / f"{identifier}.txt"
            if not res.is_file():
                raise NotFoundError(f"no bundled fixture for {identifier}")
            text = res.read_text(encoding="utf-8")
        return parse_fixture(text, identifier)

    def _from_network(self, identifier: str) -> SequenceRecord:
        query = urllib.parse.urlencode({"q": f"id:{identifier}", "fmt": "json"})
        url = f"{self.base_url.rstrip('/')}/search?{query}"
        try:
            with urllib.request.urlopen(url, timeout=self.timeout) as resp:
                body = resp.read()
        except urllib.error.HTTPError as exc:
            if exc.code == 404:
                raise NotFoundError(f"{identifier} not found at {self.base_url}") from None
            raise NetworkError(f"HTTP {exc.code} from {url}") from None
        except (urllib.error.URLError, OSError) as exc:
            raise NetworkError(f"cannot reach {url}: {exc}") from None
        return parse_search_response(body, identifier)


def fetch_sequence(identifier: str, client: OEISClient | None = None) -> SequenceRecord:
    return (client or OEISClient.from_env()).fetch(identifier)


def parse_fixture(text: str, identifier: str) -> SequenceRecord:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise MalformedResponseError(f"fixture for {identifier} needs an id line and a terms line")
    if lines[0] != identifier:
        raise MalformedResponseError(f"fixture id {lines[0]!r} does not match {identifier}")
    return SequenceRecord(identifier, parse_terms(lines[1]), Source.FIXTURE)


def parse_search_response(body: bytes | str, identifier: str) -> SequenceRecord:
    """Read the ``data`` field of the matching entry.

    Accepts both the bare list of results and the older
    ``{"results": [...]}`` envelope.
    """
    try:
        doc = json.loads(body)
    except (ValueError, UnicodeDecodeError):
        raise MalformedResponseError(f"response for {identifier} is not JSON") from None
    if isinstance(doc, dict):
        results = doc.get("results")
    else:
        results = doc
    if results is None or results == []:
        raise NotFoundError(f"{identifier} not found")
    if not isinstance(results, list):
        raise MalformedResponseError(f"unexpected results payload for {identifier}")
    number = int(identifier[1:])
    entry = next(
        (r for r in results if isinstance(r, dict) and r.get("number") == number),
        None,
    )
    if entry is None:
        entry = results[0] if len(results) == 1 and isinstance(results[0], dict) else None
    if entry is None:
        raise NotFoundError(f"{identifier} not among the returned results")
    data = entry.get("data")
    if not isinstance(data, str) or not data.strip():
        raise MalformedResponseError(f"entry for {identifier} has no 'data' term list")
    return SequenceRecord(identifier, parse_terms(data), Source.NETWORK)


def cross_check(local: Sequence[int], remote: SequenceRecord, offset: int = 0) -> CrossCheckReport:
    """Compare ``local[i]`` with ``remote.terms[i + offset]`` over the overlap."""
    if offset < 0:
        raise ValueError("offset must be nonnegative")
    available = remote.terms[offset:]
    matched = 0
    for i, (a, b) in enumerate(zip(local, available)):
        if a != b:
            return CrossCheckReport(matched, Verdict.MISMATCH, (i, a, b))
        matched += 1
    if len(local) > len(available):
        return CrossCheckReport(matched, Verdict.INSUFFICIENT)
    return CrossCheckReport(matched, Verdict.MATCH)
