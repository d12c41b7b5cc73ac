"""Deterministic parameter sweeps over the race and selection parameters.

A sweep evaluates the full analytic pipeline (payoffs, fixation chain,
stationary distribution, unsafe frequency) on an affine grid over one or two
parameters, optionally for a with/without-commitment scenario pair at once.
Grid points are independent, so evaluation may run concurrently; results are
assembled by grid index and are bitwise-identical to a serial run.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .analysis import classify_zone
from .evolution import evolve, unsafe_frequency
from .params import EvoParams, RaceParams
from .strategies import Scenario

# sweepable parameters and their validity domains (lo inclusive unless open)
AXIS_DOMAINS = {
    "p_r": (0.0, 1.0),
    "s": (1.0, float("inf")),
    "s_alpha": (0.0, float("inf")),
    "s_beta": (0.0, float("inf")),
    "beta": (0.0, float("inf")),
}
OPEN_LOWER = {"s"}

OUTPUT_KINDS = ("stationary", "unsafe_frequency", "zone")


@dataclass(frozen=True)
class SweepAxis:
    """An affine grid over one parameter: lo + (hi-lo) * i / (points-1)."""

    name: str
    lo: float
    hi: float
    points: int

    def __post_init__(self):
        if self.name not in AXIS_DOMAINS:
            raise ValueError(
                f"unknown sweep parameter {self.name!r}; choose from "
                f"{sorted(AXIS_DOMAINS)}"
            )
        if self.points < 2:
            raise ValueError(f"axis needs at least 2 points (got {self.points})")
        if not self.lo < self.hi:
            raise ValueError(f"axis needs lo < hi (got [{self.lo}, {self.hi}])")
        dlo, dhi = AXIS_DOMAINS[self.name]
        lo_ok = self.lo > dlo if self.name in OPEN_LOWER else self.lo >= dlo
        if not (lo_ok and self.hi <= dhi):
            bound = f"({dlo}" if self.name in OPEN_LOWER else f"[{dlo}"
            raise ValueError(
                f"{self.name} range [{self.lo}, {self.hi}] outside its "
                f"domain {bound}, {dhi}]"
            )

    def grid(self) -> tuple[float, ...]:
        span = self.hi - self.lo
        return tuple(self.lo + span * i / (self.points - 1)
                     for i in range(self.points))


@dataclass(frozen=True)
class SweepSpec:
    """One or two scenarios evaluated over a 1-D or 2-D parameter grid."""

    scenarios: tuple[Scenario, ...]
    axes: tuple[SweepAxis, ...]
    params: RaceParams = field(default_factory=RaceParams)
    evo: EvoParams = field(default_factory=EvoParams)
    outputs: tuple[str, ...] = ("stationary", "unsafe_frequency")

    def __post_init__(self):
        if not 1 <= len(self.scenarios) <= 2:
            raise ValueError("spec needs 1 scenario or a comparison pair")
        if not 1 <= len(self.axes) <= 2:
            raise ValueError("spec needs 1 or 2 axes")
        names = [ax.name for ax in self.axes]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate sweep axis {names[0]!r}")
        if not self.outputs:
            raise ValueError("at least one output kind is required")
        for kind in self.outputs:
            if kind not in OUTPUT_KINDS:
                raise ValueError(
                    f"unknown output kind {kind!r}; choose from {OUTPUT_KINDS}"
                )

    def coordinates(self) -> tuple[tuple[float, ...], ...]:
        """Row-major coordinate tuples of the full grid."""
        grids = [ax.grid() for ax in self.axes]
        if len(grids) == 1:
            return tuple((v,) for v in grids[0])
        return tuple((u, v) for u in grids[0] for v in grids[1])


@dataclass(frozen=True)
class SweepPoint:
    """Outputs at one grid point; `error` is set instead when a point fails."""

    coords: tuple[float, ...]
    stationary: tuple[tuple[float, ...], ...] | None = None
    unsafe: tuple[float, ...] | None = None
    zone: str | None = None
    error: str | None = None


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    points: tuple[SweepPoint, ...]


def _point_params(spec: SweepSpec,
                  coords: tuple[float, ...]) -> tuple[RaceParams, EvoParams]:
    race, evo = spec.params, spec.evo
    for ax, value in zip(spec.axes, coords):
        if ax.name == "beta":
            evo = dataclasses.replace(evo, beta=value)
        else:
            race = dataclasses.replace(race, **{ax.name: value})
    return race, evo


def _evaluate(spec: SweepSpec, coords: tuple[float, ...]) -> SweepPoint:
    try:
        race, evo = _point_params(spec, coords)
        stationary = []
        unsafe = []
        for sc in spec.scenarios:
            res = evolve(sc, race, evo)
            stationary.append(tuple(float(x) for x in res.stationary))
            unsafe.append(float(unsafe_frequency(res.stationary, sc)))
        zone = classify_zone(race.s, race.p_r).value
    except Exception as exc:
        return SweepPoint(coords=coords, error=f"{type(exc).__name__}: {exc}")
    return SweepPoint(
        coords=coords,
        stationary=tuple(stationary) if "stationary" in spec.outputs else None,
        unsafe=tuple(unsafe) if "unsafe_frequency" in spec.outputs else None,
        zone=zone if "zone" in spec.outputs else None,
    )


def run_sweep(spec: SweepSpec, workers: int | None = None) -> SweepResult:
    """Evaluate the sweep; `workers` > 1 enables concurrent evaluation.

    Results are keyed by grid index, so worker count and scheduling never
    change the output: parallel and serial runs are bitwise identical.
    """
    coords = spec.coordinates()
    if workers is not None and workers < 1:
        raise ValueError(f"workers must be positive (got {workers})")
    if workers is None or workers == 1:
        points = [_evaluate(spec, c) for c in coords]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(lambda c: _evaluate(spec, c), coords))
    return SweepResult(spec=spec, points=tuple(points))
