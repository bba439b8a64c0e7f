"""CLI configuration with documented precedence.

Precedence, lowest to highest: built-in defaults, then the config file
(simple ``key = value`` lines, ``#`` comments), then ``QRMAGIC_*``
environment variables, then explicit command-line flags.  The config
file path itself comes from ``--config`` or ``QRMAGIC_CONFIG``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

_ENV_PREFIX = "QRMAGIC_"

_KEYS = {
    "output_format": str,
    "mek_params_path": str,
    "bisection_tol": float,
    "exhaustive_limit": int,
    "parallel_degree": int,
    "server_url": str,
}


class ConfigError(ValueError):
    pass


@dataclass
class CliConfig:
    output_format: str = "text"          # text | json | csv
    mek_params_path: str | None = None
    bisection_tol: float = 1e-12
    exhaustive_limit: int = 25
    parallel_degree: int = 1
    server_url: str | None = None

    def validate(self) -> "CliConfig":
        if self.output_format not in ("text", "json", "csv"):
            raise ConfigError("output_format must be text, json or csv")
        if self.bisection_tol <= 0:
            raise ConfigError("bisection_tol must be positive")
        if not 1 <= self.exhaustive_limit <= 31:
            raise ConfigError("exhaustive_limit must be in [1, 31]")
        if self.parallel_degree < 1:
            raise ConfigError("parallel_degree must be at least 1")
        return self


def _parse_file(path: Path) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("%s:%d: expected key = value" % (path, lineno))
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KEYS:
            raise ConfigError("%s:%d: unknown key %r" % (path, lineno, key))
        out[key] = value
    return out


def load_config(
    config_path: str | None = None, env: dict[str, str] | None = None
) -> CliConfig:
    """Resolve defaults < config file < environment (flags layer on top)."""
    env = os.environ if env is None else env
    values: dict[str, object] = {}

    path = config_path or env.get(_ENV_PREFIX + "CONFIG")
    if path:
        file_path = Path(path)
        if not file_path.exists():
            raise ConfigError("config file %s does not exist" % path)
        values.update(_parse_file(file_path))

    for key in _KEYS:
        env_val = env.get(_ENV_PREFIX + key.upper())
        if env_val is not None:
            values[key] = env_val

    cfg = CliConfig()
    for f in fields(CliConfig):
        if f.name in values:
            raw = values[f.name]
            caster = _KEYS[f.name]
            try:
                setattr(cfg, f.name, caster(raw))
            except (TypeError, ValueError):
                raise ConfigError("bad value %r for %s" % (raw, f.name))
    return cfg.validate()
