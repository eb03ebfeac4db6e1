"""
Optional on-disk cache of point counts.

One record per line: ``<curve-hash> <field-size> <count>``. The cache only
saves time; every result is the same with or without it.
"""
import logging
from pathlib import Path

from django.conf import settings

logger = logging.getLogger(__name__)


class PointCountCache:
    def __init__(self, path=None):
        self.path = Path(path) if path else None
        self._entries = {}
        self._dirty = False
        if self.path is not None and self.path.exists():
            self.load()

    @classmethod
    def from_settings(cls, override=None):
        """The cache named by --cache, else FERMATCHECK_POINT_CACHE, else None."""
        path = override or getattr(settings, 'FERMATCHECK_POINT_CACHE', None)
        return cls(path) if path else None

    def load(self):
        loaded = 0
        with self.path.open() as handle:
            for line_no, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    key, size, points = line.split()
                    self._entries[(key, int(size))] = int(points)
                    loaded += 1
                except ValueError:
                    logger.warning("ignoring malformed cache line %d in %s: %r", line_no, self.path, line)
        logger.info("loaded %d point counts from %s", loaded, self.path)

    def get(self, key, field_size):
        return self._entries.get((key, field_size))

    def put(self, key, field_size, points):
        if self._entries.get((key, field_size)) != points:
            self._entries[(key, field_size)] = points
            self._dirty = True

    def __len__(self):
        return len(self._entries)

    def save(self):
        if self.path is None or not self._dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"{key} {size} {points}\n" for (key, size), points in sorted(self._entries.items())]
        self.path.write_text(''.join(lines))
        self._dirty = False
        logger.info("saved %d point counts to %s", len(self._entries), self.path)
