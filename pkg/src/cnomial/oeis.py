"""Named integer sequences: built-in fixtures, OEIS b-files, comparisons.

The central-coefficient sequences for k = 1, 2, 3 carry OEIS identifiers
(A002426, A005191, A025012).  This module holds oracle-generated fixtures
for them, a small b-file client with an on-disk cache, and a comparison
routine that recomputes terms through both the trace and the spectral
paths.  Fixture terms are produced by the convolution oracle at lookup
time, never typed in by hand, so they cannot drift from the oracle.
"""
from __future__ import annotations

import json
import os
import re
import threading
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable

from .circulant import central_via_trace
from .exact import central_coefficient
from .params import Params
from .spectral import central_via_spectrum

#: k -> OEIS identifier for the central (2k+1)-nomial coefficient sequence.
OEIS_BY_K = {1: "A002426", 2: "A005191", 3: "A025012"}

#: OEIS identifier -> k, inverse of :data:`OEIS_BY_K`.
K_BY_OEIS = {oeis_id: k for k, oeis_id in OEIS_BY_K.items()}

#: Terms per built-in fixture (n = 0 .. FIXTURE_TERMS - 1).
FIXTURE_TERMS = 16

#: b-file resource for a given id; ids look like A002426, files like b002426.txt.
BFILE_URL = "https://oeis.org/{oeis_id}/b{digits}.txt"

_ID_PATTERN = re.compile(r"\AA\d{6}\Z")

HttpGet = Callable[[str], bytes]


class SequenceIdError(ValueError):
    """The OEIS identifier is not of the form 'A' followed by six digits."""


def validate_id(oeis_id: str) -> str:
    """Return the id unchanged, raising SequenceIdError when malformed."""
    if not _ID_PATTERN.match(oeis_id):
        raise SequenceIdError(f"expected 'A' plus six digits, got {oeis_id!r}")
    return oeis_id


class FetchError(RuntimeError):
    """No way to obtain the b-file: network failed and no cache exists."""


class BFileParseError(ValueError):
    """A b-file data line did not parse; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class SequenceRecord:
    """A named integer sequence plus where its terms came from.

    ``provenance`` is one of ``fixture`` (built-in, oracle-generated),
    ``fetched`` (b-file, possibly served from the on-disk cache, see
    ``cache_hit``), or ``computed`` (terms are M^(2k, offset+i) produced
    on demand).  ``offset`` is the index of the first term, following the
    OEIS convention.
    """

    oeis_id: str
    offset: int
    terms: tuple[int, ...]
    provenance: str
    k: int | None = None
    fetched_at: float | None = None
    cache_hit: bool = False

    def __post_init__(self) -> None:
        validate_id(self.oeis_id)
        if self.provenance not in ("fixture", "fetched", "computed"):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if not self.terms:
            raise ValueError("a sequence record needs at least one term")


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of checking recomputed terms against a sequence record.

    ``computed[i]`` is M^(2k, start_n + i) obtained from the trace path and
    cross-checked against the spectral path; ``matches[i]`` is True when
    both paths and the record agree.  Mismatches are report content, not
    errors.
    """

    oeis_id: str
    k: int
    start_n: int
    expected: tuple[int, ...]
    computed: tuple[int, ...]
    matches: tuple[bool, ...]
    paths: tuple[str, ...] = ("trace", "spectral")

    @property
    def count(self) -> int:
        return len(self.matches)

    @property
    def all_equal(self) -> bool:
        return all(self.matches)

    @property
    def first_mismatch(self) -> int | None:
        """Index n of the first disagreeing term, or None."""
        for i, ok in enumerate(self.matches):
            if not ok:
                return self.start_n + i
        return None


@lru_cache(maxsize=None)
def _fixture(k: int) -> SequenceRecord:
    terms = tuple(
        central_coefficient(Params(k, n)) for n in range(FIXTURE_TERMS)
    )
    return SequenceRecord(
        oeis_id=OEIS_BY_K[k],
        offset=0,
        terms=terms,
        provenance="fixture",
        k=k,
    )


def registered_sequences() -> list[SequenceRecord]:
    """The built-in fixtures for k = 1, 2, 3, oracle-generated on demand."""
    return [_fixture(k) for k in sorted(OEIS_BY_K)]


def fixture_for_k(k: int) -> SequenceRecord | None:
    """The built-in fixture for this k, or None when no id is registered."""
    if k in OEIS_BY_K:
        return _fixture(k)
    return None


def fixture_for_id(oeis_id: str) -> SequenceRecord | None:
    """The built-in fixture with this identifier, or None."""
    validate_id(oeis_id)
    k = K_BY_OEIS.get(oeis_id)
    return _fixture(k) if k is not None else None


def computed_sequence(k: int, count: int, start_n: int = 0) -> SequenceRecord:
    """M^(2k, n) for n = start_n .. start_n+count-1 from the exact oracle.

    Records carry OEIS identifiers, so only the registered k values (1,
    2, 3) can be materialized this way.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if k not in OEIS_BY_K:
        raise ValueError(f"no registered OEIS id for k={k}")
    terms = tuple(
        central_coefficient(Params(k, n)) for n in range(start_n, start_n + count)
    )
    return SequenceRecord(
        oeis_id=OEIS_BY_K[k],
        offset=start_n,
        terms=terms,
        provenance="computed",
        k=k,
    )


def cache_dir() -> Path:
    """On-disk cache location; CNOMIAL_CACHE_DIR overrides the default."""
    override = os.environ.get("CNOMIAL_CACHE_DIR")
    if override:
        return Path(override)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(
        os.path.expanduser("~"), ".cache"
    )
    return Path(base) / "cnomial"


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse b-file text into (index, value) pairs.

    Blank lines and '#' comments are ignored; data lines must be exactly
    two integer fields with consecutive indices.  Errors report the
    1-based line number.
    """
    pairs: list[tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(
                f"expected 'index value', got {raw.strip()!r}", line_number
            )
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(
                f"non-integer field in {raw.strip()!r}", line_number
            ) from None
        if pairs and index != pairs[-1][0] + 1:
            raise BFileParseError(
                f"index {index} does not follow {pairs[-1][0]}", line_number
            )
        pairs.append((index, value))
    if not pairs:
        raise BFileParseError("no data lines found", 1)
    return pairs


def _default_http_get(url: str) -> bytes:
    request = urllib.request.Request(url, headers={"User-Agent": "cnomial/0.1"})
    with urllib.request.urlopen(request, timeout=30.0) as response:
        return response.read()


# One writer per id; reads of a finished cache entry need no coordination.
_FETCH_LOCKS: dict[str, threading.Lock] = {}
_FETCH_LOCKS_GUARD = threading.Lock()


def _lock_for(oeis_id: str) -> threading.Lock:
    with _FETCH_LOCKS_GUARD:
        return _FETCH_LOCKS.setdefault(oeis_id, threading.Lock())


def _cache_paths(oeis_id: str, directory: Path) -> tuple[Path, Path]:
    return directory / f"{oeis_id}.txt", directory / f"{oeis_id}.meta.json"


def _write_cache(oeis_id: str, body: bytes, directory: Path) -> float:
    body_path, meta_path = _cache_paths(oeis_id, directory)
    directory.mkdir(parents=True, exist_ok=True)
    fetched_at = time.time()
    # Write-then-replace keeps a concurrent reader off half-written files.
    for target, payload in (
        (body_path, body),
        (
            meta_path,
            json.dumps(
                {"id": oeis_id, "fetched_at": fetched_at, "bytes": len(body)}
            ).encode(),
        ),
    ):
        tmp = target.with_suffix(target.suffix + ".tmp")
        tmp.write_bytes(payload)
        os.replace(tmp, target)
    return fetched_at


def _read_cache(oeis_id: str, directory: Path) -> tuple[str, float] | None:
    body_path, meta_path = _cache_paths(oeis_id, directory)
    if not body_path.exists():
        return None
    body = body_path.read_text()
    fetched_at = body_path.stat().st_mtime
    try:
        fetched_at = float(json.loads(meta_path.read_text())["fetched_at"])
    except (OSError, ValueError, KeyError):
        pass
    return body, fetched_at


def fetch_bfile(
    oeis_id: str,
    limit: int,
    *,
    offline: bool = False,
    http_get: HttpGet | None = None,
    directory: Path | None = None,
) -> SequenceRecord:
    """First ``limit`` terms of an OEIS sequence from its b-file.

    Performs one HTTP GET and caches the raw body on disk keyed by id; on
    any network failure a warm cache is served instead (``cache_hit``
    True).  ``offline`` skips the network entirely.  ``http_get`` is the
    transport, injectable for tests.
    """
    validate_id(oeis_id)
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    directory = directory if directory is not None else cache_dir()
    getter = http_get if http_get is not None else _default_http_get
    url = BFILE_URL.format(oeis_id=oeis_id, digits=oeis_id[1:])

    with _lock_for(oeis_id):
        body: str | None = None
        fetched_at: float | None = None
        cache_hit = False
        if not offline:
            try:
                raw = getter(url)
            except (urllib.error.URLError, OSError, TimeoutError):
                raw = None
            if raw is not None:
                body = raw.decode("utf-8", errors="replace")
                parsed = parse_bfile(body)  # validate before poisoning the cache
                fetched_at = _write_cache(oeis_id, raw, directory)
        if body is None:
            cached = _read_cache(oeis_id, directory)
            if cached is None:
                raise FetchError(
                    f"cannot fetch b-file for {oeis_id}: "
                    + ("offline requested" if offline else "network unavailable")
                    + " and no cache present"
                )
            body, fetched_at = cached
            cache_hit = True
            parsed = parse_bfile(body)

    parsed = parsed[:limit]
    return SequenceRecord(
        oeis_id=oeis_id,
        offset=parsed[0][0],
        terms=tuple(value for _, value in parsed),
        provenance="fetched",
        k=K_BY_OEIS.get(oeis_id),
        fetched_at=fetched_at,
        cache_hit=cache_hit,
    )


def compare(record: SequenceRecord, k: int, count: int) -> ComparisonReport:
    """Recompute ``count`` central coefficients for this k and diff them.

    Each term is computed through the exact trace path and the certified
    spectral path; an index matches only when both agree with the record.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count > len(record.terms):
        raise ValueError(
            f"count {count} exceeds the {len(record.terms)} available terms"
        )
    expected = record.terms[:count]
    computed: list[int] = []
    matches: list[bool] = []
    for i, want in enumerate(expected):
        params = Params(k, record.offset + i)
        via_trace = central_via_trace(params)
        via_spectrum = central_via_spectrum(params).value
        computed.append(via_trace)
        matches.append(via_trace == want and via_spectrum == want)
    return ComparisonReport(
        oeis_id=record.oeis_id,
        k=k,
        start_n=record.offset,
        expected=tuple(expected),
        computed=tuple(computed),
        matches=tuple(matches),
    )
