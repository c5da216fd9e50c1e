"""Flat key = value configuration shared by the command-line tools."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ParameterError

_INT_KEYS = {
    "genus", "boundary", "strands", "max_chords", "max_beads",
    "window", "node_budget", "jobs",
}
_STR_KEYS = {"cache_dir"}


@dataclass(frozen=True)
class Config:
    genus: int = 1
    boundary: int = 1
    strands: int = 2
    max_chords: int = 2
    max_beads: int = 4
    window: int = 6
    node_budget: int = 10**6
    cache_dir: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.window < self.max_chords:
            raise ParameterError("window must be at least the chord truncation")
        if self.window < self.max_beads:
            raise ParameterError("window must be at least the bead truncation")
        if self.jobs < 1:
            raise ParameterError("jobs must be positive")
        if self.node_budget < 1:
            raise ParameterError("node budget must be positive")


def load_config(path) -> Config:
    """Read a flat ``key = value`` file; '#' starts a comment."""
    values: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in _INT_KEYS:
            try:
                values[key] = int(value)
            except ValueError as exc:
                raise ParameterError(f"{path}:{lineno}: {key} needs an integer") from exc
        elif key in _STR_KEYS:
            values[key] = value
        else:
            raise ParameterError(f"{path}:{lineno}: unknown key {key!r}")
    return Config(**values)


def override(cfg: Config, **kwargs) -> Config:
    """Apply non-None keyword overrides."""
    updates = {k: v for k, v in kwargs.items() if v is not None}
    return replace(cfg, **updates) if updates else cfg
