"""Flat key=value run configuration shared by the CLI and the presets.

The syntax is one `key = value` pair per line with `#` comments; later
occurrences of a key override earlier ones, and override pairs (command-line
flags) take precedence over file contents. Unknown keys are errors. Every
field has a documented default matching the published parameter set where
one exists.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .params import EvoParams, RaceParams
from .strategies import Scenario, make_scenario, without_commitments
from .sweep import OUTPUT_KINDS, SweepAxis, SweepSpec

REGIMES = ("none", "peer", "institutional")
FORMATS = ("csv", "json")

BOOL_KEYS = {"commitments", "fallback_safe", "compare"}
INT_KEYS = {"W", "Z", "steps", "burn_in", "seed"}
FLOAT_KEYS = {"b", "c", "s", "B", "p_r", "epsilon", "s_alpha", "s_beta",
              "beta", "mu"}
AXIS_KEYS = {"axis", "axis2"}
LIST_KEYS = {"outputs"}
STR_KEYS = {"regime", "format", "output"}


@dataclass(frozen=True)
class RunConfig:
    """One fully-specified run: scenario, parameters, grid, and output."""

    regime: str = "none"
    commitments: bool = False
    fallback_safe: bool = False
    compare: bool = False
    b: float = 4.0
    c: float = 1.0
    s: float = 1.5
    B: float = 1e4
    W: int = 100
    p_r: float = 0.5
    epsilon: float = 0.0
    s_alpha: float = 0.3
    s_beta: float = 1.0
    Z: int = 100
    beta: float = 1.0
    axis: SweepAxis | None = None
    axis2: SweepAxis | None = None
    outputs: tuple[str, ...] = ("stationary", "unsafe_frequency")
    format: str = "csv"
    output: str = "-"
    mu: float = 1e-3
    steps: int = 10**6
    burn_in: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise ValueError(
                f"regime must be one of {', '.join(REGIMES)} (got {self.regime!r})"
            )
        if self.format not in FORMATS:
            raise ValueError(
                f"format must be one of {', '.join(FORMATS)} (got {self.format!r})"
            )
        if self.compare and not self.commitments:
            raise ValueError("compare=true needs commitments=true")
        if self.axis2 is not None and self.axis is None:
            raise ValueError("axis2 needs axis to be set first")
        if not 0 < self.mu <= 1:
            raise ValueError(f"mu must lie in (0, 1] (got {self.mu})")
        if self.burn_in < 0:
            raise ValueError(f"burn_in must be nonnegative (got {self.burn_in})")
        if self.steps <= self.burn_in:
            raise ValueError(
                f"steps must exceed burn_in (got steps={self.steps}, "
                f"burn_in={self.burn_in})"
            )
        if self.seed < 0:
            raise ValueError(f"seed must be nonnegative (got {self.seed})")
        if not self.outputs:
            raise ValueError("at least one output kind is required")
        for kind in self.outputs:
            if kind not in OUTPUT_KINDS:
                raise ValueError(
                    f"unknown output kind {kind!r}; choose from {OUTPUT_KINDS}"
                )
        # materialize every derived object once so parsing fails eagerly
        # with the underlying field message
        self.race_params()
        self.evo_params()
        self.scenario()
        if self.axis is not None:
            self.sweep_spec()

    def scenario(self) -> Scenario:
        return make_scenario(self.regime, commitments_enabled=self.commitments,
                             fallback_safe=self.fallback_safe)

    def scenarios(self) -> tuple[Scenario, ...]:
        if self.compare:
            sc = self.scenario()
            return (sc, without_commitments(sc))
        return (self.scenario(),)

    def race_params(self) -> RaceParams:
        return RaceParams(b=self.b, c=self.c, s=self.s, B=self.B, W=self.W,
                          p_r=self.p_r, epsilon=self.epsilon,
                          s_alpha=self.s_alpha, s_beta=self.s_beta)

    def evo_params(self) -> EvoParams:
        return EvoParams(Z=self.Z, beta=self.beta)

    def sweep_spec(self) -> SweepSpec:
        if self.axis is None:
            raise ValueError("a sweep needs an axis (set axis=name:lo:hi:points)")
        axes = (self.axis,) if self.axis2 is None else (self.axis, self.axis2)
        return SweepSpec(scenarios=self.scenarios(), axes=axes,
                         params=self.race_params(), evo=self.evo_params(),
                         outputs=self.outputs)

    def abm_config(self):
        from .abm import AbmConfig
        return AbmConfig(scenario=self.scenario(), params=self.race_params(),
                         evo=self.evo_params(), mu=self.mu, steps=self.steps,
                         burn_in=self.burn_in, seed=self.seed)

    def to_pairs(self) -> dict[str, str]:
        """Canonical flat form; parse_config on it rebuilds this config."""
        pairs: dict[str, str] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name in AXIS_KEYS:
                if value is not None:
                    pairs[f.name] = _format_axis(value)
            elif f.name in BOOL_KEYS:
                pairs[f.name] = "true" if value else "false"
            elif f.name in LIST_KEYS:
                pairs[f.name] = ",".join(value)
            elif f.name in FLOAT_KEYS:
                pairs[f.name] = repr(float(value))
            elif f.name in INT_KEYS:
                pairs[f.name] = str(value)
            else:
                pairs[f.name] = value
        return pairs


KEY_ORDER = tuple(f.name for f in fields(RunConfig))


def _format_axis(axis: SweepAxis) -> str:
    return f"{axis.name}:{float(axis.lo)!r}:{float(axis.hi)!r}:{axis.points}"


def _parse_bool(key: str, raw: str) -> bool:
    low = raw.lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise ValueError(f"{key} expects true or false (got {raw!r})")


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{key} must be an integer (got {raw!r})") from None


def _parse_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{key} must be a number (got {raw!r})") from None


def _parse_axis(key: str, raw: str) -> SweepAxis:
    parts = raw.split(":")
    if len(parts) != 4:
        raise ValueError(f"{key} expects name:lo:hi:points (got {raw!r})")
    name, lo, hi, points = parts
    return SweepAxis(name, _parse_float(key, lo), _parse_float(key, hi),
                     _parse_int(key, points))


def _split_pairs(lines, pairs: dict[str, str]) -> None:
    for line in lines:
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ValueError(f"expected key=value (got {stripped!r})")
        key, _, raw = stripped.partition("=")
        key, raw = key.strip(), raw.strip()
        if not raw:
            raise ValueError(f"empty value for key {key!r}")
        if key not in KEY_ORDER:
            raise ValueError(f"unknown key {key!r}")
        pairs[key] = raw


def parse_config(text: str = "", overrides=()) -> RunConfig:
    """Build a validated RunConfig from config text plus override pairs.

    `overrides` are `key=value` strings applied after (on top of) the file
    contents. The first invalid field raises with its validity domain.
    """
    pairs: dict[str, str] = {}
    _split_pairs(text.splitlines(), pairs)
    _split_pairs(overrides, pairs)
    kwargs = {}
    for key in KEY_ORDER:
        if key not in pairs:
            continue
        raw = pairs[key]
        if key in BOOL_KEYS:
            kwargs[key] = _parse_bool(key, raw)
        elif key in INT_KEYS:
            kwargs[key] = _parse_int(key, raw)
        elif key in FLOAT_KEYS:
            kwargs[key] = _parse_float(key, raw)
        elif key in AXIS_KEYS:
            kwargs[key] = _parse_axis(key, raw)
        elif key in LIST_KEYS:
            kwargs[key] = tuple(x.strip() for x in raw.split(",") if x.strip())
        else:
            kwargs[key] = raw
    return RunConfig(**kwargs)
