"""Run configuration: flat ``key = value`` files with '#' comments.

The grammar is deliberately minimal: one assignment per line, keys from the
documented per-command set, floats in ordinary or scientific notation,
angles in radians, all quantities dimensionless (hbar defaults to 1).
Unknown keys, duplicates, bad numbers, and out-of-range values are rejected
with the offending line number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConfigError

COMMANDS = (
    "spectrum-sweep",
    "angle-sweep",
    "evolve",
    "entropy",
    "correlation",
    "design",
    "cool",
)

_FLOAT_KEYS = {
    "d": 1.0,
    "ab": 0.2,
    "alpha": 0.0,
    "q": 1.0,
    "ep1": 0.0,
    "ep2": 0.0,
    "ep1p": 0.0,
    "ep2p": 0.0,
    "ts1_re": 1.0,
    "ts1_im": 0.0,
    "ts2_re": 1.0,
    "ts2_im": 0.0,
    "vs": 0.0,
    "ts": 1.0,
    "sweep_start": None,
    "sweep_stop": None,
    "t0": 0.0,
    "t1": 10.0,
    "c1": 1.0,
    "c2": 0.0,
    "c3": 0.0,
    "c4": 0.0,
    "phi1": 0.0,
    "phi2": 0.0,
    "phi3": 0.0,
    "phi4": 0.0,
    "g1_re": 1.0,
    "g1_im": 0.0,
    "g2_re": 0.0,
    "g2_im": 0.0,
    "g3_re": 0.0,
    "g3_im": 0.0,
    "g4_re": 0.0,
    "g4_im": 0.0,
    "f_amplitude": 1e-3,
    "duration": 10.0,
    "hbar": 1.0,
}
_INT_KEYS = {"count": 256, "steps": 200}
# For 'cool' an unset steps means 0 = pick the step size automatically.
_INT_DEFAULT_OVERRIDES = {"cool": {"steps": 0}}
_ENUM_KEYS = {
    "command": COMMANDS,
    "geometry": ("parallel", "angled"),
    "design": ("symmetric", "angled", "antiswap"),
    "mode": ("cool", "heat"),
}

_KEYS_BY_COMMAND = {
    "spectrum-sweep": {
        "command", "ab", "q", "ep1", "ep2", "ep1p", "ep2p",
        "ts1_re", "ts1_im", "ts2_re", "ts2_im",
        "sweep_start", "sweep_stop", "count", "hbar",
    },
    "angle-sweep": {
        "command", "d", "ab", "q", "ep1", "ep2", "ep1p", "ep2p",
        "ts1_re", "ts1_im", "ts2_re", "ts2_im",
        "sweep_start", "sweep_stop", "count", "hbar",
    },
    "evolve": {
        "command", "geometry", "d", "ab", "alpha", "q",
        "ep1", "ep2", "ep1p", "ep2p", "ts1_re", "ts1_im", "ts2_re", "ts2_im",
        "g1_re", "g1_im", "g2_re", "g2_im", "g3_re", "g3_im", "g4_re", "g4_im",
        "t0", "t1", "steps", "hbar",
    },
    "correlation": {
        "command", "geometry", "d", "ab", "alpha", "q",
        "ep1", "ep2", "ep1p", "ep2p", "ts1_re", "ts1_im", "ts2_re", "ts2_im",
        "c1", "c2", "c3", "c4", "phi1", "phi2", "phi3", "phi4",
        "t0", "t1", "steps", "hbar",
    },
    "design": {"command", "design", "d", "ab", "alpha", "q", "ep1", "ep2", "ep2p"},
    "cool": {
        "command", "d", "ab", "q", "vs", "ts",
        "f_amplitude", "duration", "mode", "steps", "hbar",
    },
}
_KEYS_BY_COMMAND["entropy"] = _KEYS_BY_COMMAND["evolve"]

_REQUIRED = {
    "spectrum-sweep": {"sweep_start", "sweep_stop"},
    "angle-sweep": {"sweep_start", "sweep_stop"},
    "design": {"design"},
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    floats: dict = field(default_factory=dict)
    ints: dict = field(default_factory=dict)
    enums: dict = field(default_factory=dict)

    def __getitem__(self, key: str):
        for table in (self.floats, self.ints, self.enums):
            if key in table:
                return table[key]
        raise KeyError(key)

    def state(self):
        return [complex(self.floats[f"g{k}_re"], self.floats[f"g{k}_im"]) for k in (1, 2, 3, 4)]

    def amplitudes(self):
        c = [self.floats[f"c{k}"] for k in (1, 2, 3, 4)]
        phi = [self.floats[f"phi{k}"] for k in (1, 2, 3, 4)]
        return c, phi


def _parse_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, _, value = line.partition("=")
        yield lineno, key.strip(), value.strip()


def parse_config(text: str, command: str | None = None) -> RunConfig:
    """Parse a configuration; ``command`` (from the CLI subcommand) must
    agree with the file's ``command`` key when both are present."""
    seen: dict[str, int] = {}
    raw: dict[str, str] = {}
    lines: dict[str, int] = {}
    for lineno, key, value in _parse_lines(text):
        if key in seen:
            raise ConfigError(f"duplicate key {key!r} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        raw[key] = value
        lines[key] = lineno

    file_command = raw.pop("command", None)
    if file_command is not None and file_command not in COMMANDS:
        raise ConfigError(f"unknown command {file_command!r}", lines["command"])
    if command is None:
        command = file_command
    elif file_command is not None and file_command != command:
        raise ConfigError(
            f"config says command = {file_command!r} but {command!r} was requested",
            lines["command"],
        )
    if command is None:
        raise ConfigError("missing required key 'command'")

    allowed = _KEYS_BY_COMMAND[command]
    floats, ints, enums = {}, {}, {"command": command}
    for key, value in raw.items():
        if key not in allowed:
            raise ConfigError(f"unknown key {key!r} for command {command!r}", lines[key])
        if key in _INT_KEYS:
            try:
                ints[key] = int(value)
            except ValueError:
                raise ConfigError(f"{key!r} must be an integer, got {value!r}", lines[key])
        elif key in _ENUM_KEYS:
            if value not in _ENUM_KEYS[key]:
                raise ConfigError(
                    f"{key!r} must be one of {_ENUM_KEYS[key]}, got {value!r}", lines[key]
                )
            enums[key] = value
        else:
            try:
                floats[key] = float(value)
            except ValueError:
                raise ConfigError(f"{key!r} must be a number, got {value!r}", lines[key])
            if not math.isfinite(floats[key]):
                raise ConfigError(f"{key!r} must be finite", lines[key])

    for key in _REQUIRED.get(command, ()):
        if key not in floats and key not in ints and key not in enums:
            raise ConfigError(f"missing required key {key!r} for command {command!r}")

    overrides = _INT_DEFAULT_OVERRIDES.get(command, {})
    for key in allowed:
        if key in _FLOAT_KEYS and key not in floats and _FLOAT_KEYS[key] is not None:
            floats[key] = _FLOAT_KEYS[key]
        elif key in _INT_KEYS and key not in ints:
            ints[key] = overrides.get(key, _INT_KEYS[key])
        elif key in _ENUM_KEYS and key not in enums:
            enums[key] = _ENUM_KEYS[key][0]

    cfg = RunConfig(command=command, floats=floats, ints=ints, enums=enums)
    _validate_ranges(cfg, lines)
    return cfg


def _validate_ranges(cfg: RunConfig, lines: dict) -> None:
    def fail(key, msg):
        raise ConfigError(f"{key!r} {msg}", lines.get(key))

    f, i = cfg.floats, cfg.ints
    if "count" in i and i["count"] < 2:
        fail("count", "must be >= 2")
    min_steps = 0 if cfg.command == "cool" else 1
    if "steps" in i and i["steps"] < min_steps:
        fail("steps", f"must be >= {min_steps}")
    for key in ("d", "ab", "duration"):
        if key in f and not (f[key] > 0.0):
            fail(key, "must be > 0")
    if "hbar" in f and not (f["hbar"] > 0.0):
        fail("hbar", "must be > 0")
    if "alpha" in f and not (-math.pi < f["alpha"] <= math.pi):
        fail("alpha", "must lie in (-pi, pi]")
    if cfg.command == "spectrum-sweep" and not (f["sweep_start"] > 0.0 and f["sweep_stop"] > 0.0):
        fail("sweep_start", "distance sweep bounds must be > 0")
    if cfg.command == "angle-sweep":
        for key in ("sweep_start", "sweep_stop"):
            if not (-math.pi < f[key] <= math.pi):
                fail(key, "angle sweep bounds must lie in (-pi, pi]")
    if cfg.command in ("spectrum-sweep", "angle-sweep") and not f["sweep_stop"] > f["sweep_start"]:
        fail("sweep_stop", "must exceed sweep_start")
    if "t1" in f and not f["t1"] > f["t0"]:
        fail("t1", "must exceed t0")
    if cfg.command == "correlation":
        norm = sum(f[f"c{k}"] ** 2 for k in (1, 2, 3, 4))
        if norm <= 0.0:
            fail("c1", "amplitudes c1..c4 must not all vanish")
        scale = 1.0 / math.sqrt(norm)
        for k in (1, 2, 3, 4):
            f[f"c{k}"] *= scale
    if cfg.command == "evolve" or cfg.command == "entropy":
        norm = sum(abs(g) ** 2 for g in cfg.state())
        if norm <= 0.0:
            fail("g1_re", "state amplitudes must not all vanish")
        scale = 1.0 / math.sqrt(norm)
        for k in (1, 2, 3, 4):
            f[f"g{k}_re"] *= scale
            f[f"g{k}_im"] *= scale
