"""Run configuration and its ``key = value`` file format.

One setting per line; ``#`` starts a comment; blank lines are ignored. Keys are
the field names of :class:`Config` (dashes and underscores are interchangeable)::

    # nightly.cfg
    seed = 7
    threads = 4
    lift_cap = 1048576
    format = json

Command-line flags override values read from the file.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .graph import DEFAULT_SIGNING_CAP
from .partition import DEFAULT_ASSIGNMENT_CAP, DEFAULT_EXPANSION_CAP

FORMATS = ("json", "csv", "text")


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    assignment_cap: int = DEFAULT_ASSIGNMENT_CAP
    expansion_cap: int = DEFAULT_EXPANSION_CAP
    signing_cap: int = DEFAULT_SIGNING_CAP
    lift_cap: int = 2**20
    tol: float = 1e-12
    seed: int = 0
    threads: int = 1
    format: str = "text"

    def validate(self) -> "Config":
        for name in ("assignment_cap", "expansion_cap", "signing_cap", "lift_cap"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        if not 0 < self.tol <= 1e-3:
            raise ConfigError("tol must lie in (0, 1e-3]")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}")
        return self

    def updated(self, **overrides) -> "Config":
        clean = {k: v for k, v in overrides.items() if v is not None}
        return dataclasses.replace(self, **clean).validate()


def _coerce(field: dataclasses.Field, raw: str):
    kind = field.type if isinstance(field.type, str) else field.type.__name__
    try:
        if kind == "int":
            return int(float(raw)) if "e" in raw.lower() else int(raw)
        if kind == "float":
            return float(raw)
    except ValueError:
        raise ConfigError(f"{field.name}: cannot read {raw!r} as {kind}") from None
    return raw


def parse_config(text: str, base: Config | None = None) -> Config:
    fields = {f.name: f for f in dataclasses.fields(Config)}
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in fields:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = _coerce(fields[key], raw.strip("\"'"))
    return (base or Config()).updated(**values)


def load_config(path: str) -> Config:
    with open(path) as fh:
        return parse_config(fh.read())
