"""On-disk deck cache.

One line-oriented file per certificate format. The first line is a header;
each following line is one record::

    <graph certificate> TAB <checksum> TAB <card> TAB <card> ...

The checksum is the first 16 hex digits of SHA-256 over the certificate and
cards, so a hand-edited or truncated record is detected on load.
"""

from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from pathlib import Path

from .canon import CERT_VERSION
from .errors import CacheCorruptError

log = logging.getLogger(__name__)

CACHE_FORMAT = 1
HEADER = f"topodeck-deck-cache {CACHE_FORMAT} {CERT_VERSION}"
ENV_VAR = "TOPODECK_CACHE"


def checksum(cert: str, cards) -> str:
    h = hashlib.sha256(cert.encode())
    for c in cards:
        h.update(b"\0" + c.encode())
    return h.hexdigest()[:16]


def default_dir() -> Path | None:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


class DeckCache:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.path = self.directory / f"decks-{CERT_VERSION}-v{CACHE_FORMAT}.txt"

    def load(self) -> dict[str, tuple[str, ...]]:
        """Read all records; raises :class:`CacheCorruptError` on any bad line."""
        if not self.path.exists():
            return {}
        records: dict[str, tuple[str, ...]] = {}
        with self.path.open(encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n")
            if header != HEADER:
                raise CacheCorruptError(f"{self.path}: unexpected header {header!r}")
            for lineno, line in enumerate(fh, 2):
                fields = line.rstrip("\n").split("\t")
                if len(fields) < 2:
                    raise CacheCorruptError(f"{self.path}:{lineno}: truncated record")
                cert, digest, cards = fields[0], fields[1], tuple(fields[2:])
                if checksum(cert, cards) != digest:
                    raise CacheCorruptError(f"{self.path}:{lineno}: checksum mismatch for {cert}")
                records[cert] = cards
        return records

    def load_or_reset(self) -> dict[str, tuple[str, ...]]:
        """Like :meth:`load`, but a corrupt file is discarded so it gets regenerated."""
        try:
            return self.load()
        except CacheCorruptError as exc:
            log.warning("discarding deck cache: %s", exc)
            self.path.unlink(missing_ok=True)
            return {}

    def store(self, records: dict[str, tuple[str, ...]]) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        lines = [HEADER]
        for cert in sorted(records):
            cards = tuple(records[cert])
            lines.append("\t".join((cert, checksum(cert, cards)) + cards))
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".decks-", suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp, self.path)
