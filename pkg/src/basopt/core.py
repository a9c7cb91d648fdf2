"""Single-beetle antennae search, a derivative-free global minimizer.

One agent holds a position ``x`` in R^k. Each iteration it draws a random
unit direction ``b``, smells the objective at the two antenna tips
``x + d*b`` and ``x - d*b``, and steps (length ``delta``) toward the tip
with the lower value. The antenna length ``d`` and the step size ``delta``
shrink over time according to configurable decay schedules, so the search
explores widely at first and settles later.

Everything is driven by an explicit ``numpy.random.Generator``; a run is a
pure function of its config (including the seed), which the test suite
exploits for bit-exact reproducibility checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

Array = np.ndarray
ObjectiveFn = Callable[[Array], float]

# Schedule kinds.
GEOMETRIC_OFFSET = "geometric_offset"  # v <- rate * v + offset
GEOMETRIC = "geometric"                # v <- rate * v
CONSTANT = "constant"                  # v unchanged
_SCHEDULE_KINDS = (GEOMETRIC_OFFSET, GEOMETRIC, CONSTANT)

# Termination reasons reported in RunResult.
TERM_MAX_ITERS = "max_iters"
TERM_TARGET = "target_reached"
TERM_STALLED = "stalled"

_MIN_DIRECTION_NORM = 1e-12


class ObjectiveError(RuntimeError):
    """Raised when an objective evaluation produces a non-finite value."""

    def __init__(self, value: float, x: Array, iteration: Optional[int] = None):
        self.value = value
        self.x = np.asarray(x, dtype=float)
        self.iteration = iteration
        super().__init__(self._describe())

    def _describe(self) -> str:
        where = "" if self.iteration is None else f" at iteration {self.iteration}"
        return (f"objective returned non-finite value {self.value!r}{where} "
                f"for x={self.x.tolist()}")

    def with_iteration(self, iteration: int) -> "ObjectiveError":
        return ObjectiveError(self.value, self.x, iteration)


@dataclass(frozen=True)
class ScheduleSpec:
    """Decay rule applied once per iteration to a search parameter.

    kind            update                    long-run behaviour
    geometric_offset  v <- rate*v + offset    fixed point offset / (1 - rate)
    geometric         v <- rate*v             decays to 0 (rate < 1)
    constant          v <- v                  unchanged
    """

    kind: str
    rate: float = 0.95
    offset: float = 0.0

    def __post_init__(self):
        if self.kind not in _SCHEDULE_KINDS:
            raise ValueError(
                f"unknown schedule kind {self.kind!r}; expected one of {_SCHEDULE_KINDS}")
        if not 0.0 < self.rate <= 1.0:
            raise ValueError(f"schedule rate must be in (0, 1], got {self.rate}")
        if self.offset < 0.0:
            raise ValueError(f"schedule offset must be >= 0, got {self.offset}")
        if self.kind != GEOMETRIC_OFFSET and self.offset != 0.0:
            raise ValueError(f"offset is only meaningful for {GEOMETRIC_OFFSET!r}")

    def fixed_point(self) -> Optional[float]:
        """Limit of repeated application, when one exists."""
        if self.kind == GEOMETRIC_OFFSET and self.rate < 1.0:
            return self.offset / (1.0 - self.rate)
        if self.kind == GEOMETRIC and self.rate < 1.0:
            return 0.0
        return None


# Benchmark defaults: d decays toward 0.01/(1-0.95) = 0.2, delta decays to 0.
DEFAULT_D_SCHEDULE = ScheduleSpec(GEOMETRIC_OFFSET, rate=0.95, offset=0.01)
DEFAULT_DELTA_SCHEDULE = ScheduleSpec(GEOMETRIC, rate=0.95)


def advance_schedule(value: float, spec: ScheduleSpec) -> float:
    """Apply one step of the decay rule to ``value``."""
    if value < 0.0:
        raise ValueError(f"schedule value must be >= 0, got {value}")
    if spec.kind == GEOMETRIC_OFFSET:
        return spec.rate * value + spec.offset
    if spec.kind == GEOMETRIC:
        return spec.rate * value
    return value


def _as_point(value, dimension: int, name: str) -> tuple:
    arr = np.asarray(value, dtype=float)
    if arr.shape != (dimension,):
        raise ValueError(f"{name} must have shape ({dimension},), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite, got {arr.tolist()}")
    return tuple(float(v) for v in arr)


def _as_box(value, dimension: Optional[int], name: str) -> tuple:
    """Normalize per-axis (lo, hi) bounds to a tuple of pairs."""
    arr = np.asarray(value, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"{name} must be a sequence of (lo, hi) pairs, got shape {arr.shape}")
    if dimension is not None and arr.shape[0] != dimension:
        raise ValueError(f"{name} has {arr.shape[0]} axes, expected {dimension}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} bounds must be finite")
    if np.any(arr[:, 0] > arr[:, 1]):
        raise ValueError(f"{name} requires lo <= hi on every axis")
    return tuple((float(lo), float(hi)) for lo, hi in arr)


@dataclass(frozen=True)
class BasConfig:
    """Full parameterization of one search run.

    Exactly one of ``x0`` (explicit start) and ``init_box`` (uniform start,
    per-axis bounds) must be given. ``clamp_box`` optionally confines the
    iterate after each move; by default movement is unconstrained.
    ``target_value`` and ``stall_iters`` are optional early-stop criteria;
    when unset, ``max_iters`` alone ends the run.
    """

    dimension: int
    d0: float = 2.0
    delta0: float = 0.5
    d_schedule: ScheduleSpec = DEFAULT_D_SCHEDULE
    delta_schedule: ScheduleSpec = DEFAULT_DELTA_SCHEDULE
    max_iters: int = 100
    seed: int = 0
    x0: Optional[Sequence[float]] = None
    init_box: Optional[Sequence[Sequence[float]]] = None
    clamp_box: Optional[Sequence[Sequence[float]]] = None
    target_value: Optional[float] = None
    stall_iters: Optional[int] = None

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")
        if not self.d0 > 0.0:
            raise ValueError(f"d0 must be > 0, got {self.d0}")
        if not self.delta0 > 0.0:
            raise ValueError(f"delta0 must be > 0, got {self.delta0}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed}")
        if (self.x0 is None) == (self.init_box is None):
            raise ValueError("exactly one of x0 and init_box must be set")
        if self.x0 is not None:
            object.__setattr__(self, "x0", _as_point(self.x0, self.dimension, "x0"))
        if self.init_box is not None:
            object.__setattr__(self, "init_box", _as_box(self.init_box, self.dimension, "init_box"))
        if self.clamp_box is not None:
            object.__setattr__(self, "clamp_box", _as_box(self.clamp_box, self.dimension, "clamp_box"))
        if self.stall_iters is not None and self.stall_iters < 1:
            raise ValueError(f"stall_iters must be >= 1, got {self.stall_iters}")


@dataclass
class SearchState:
    """Mutable state of a run in flight.

    ``f_x`` caches the objective value at the current position so the run
    loop can record it without re-evaluating. ``f_bst`` is stored at the
    moment of evaluation, hence re-evaluating the objective at ``x_bst``
    reproduces it bit-exactly.
    """

    t: int
    x: Array
    d: float
    delta: float
    f_x: float
    x_bst: Array
    f_bst: float
    evals: int


@dataclass(frozen=True)
class IterationRecord:
    """One trajectory row; the layout the CLI serializes."""

    t: int
    f_x: float
    f_bst: float
    d: float
    delta: float
    x: tuple


@dataclass(frozen=True)
class RunResult:
    records: tuple
    x_bst: tuple
    f_bst: float
    evals: int
    termination: str


def sample_direction(k: int, rng: np.random.Generator) -> Array:
    """Draw a random unit direction in R^k.

    Components are i.i.d. uniform on [-1, 1]; draws whose norm falls below
    1e-12 are rejected and resampled before normalizing.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    while True:
        v = rng.uniform(-1.0, 1.0, size=k)
        norm = float(np.linalg.norm(v))
        if norm >= _MIN_DIRECTION_NORM:
            return v / norm


def antenna_probe(x: Array, d: float, b: Array) -> tuple[Array, Array]:
    """Antenna tips ``(x + d*b, x - d*b)`` around the current position."""
    x = np.asarray(x, dtype=float)
    b = np.asarray(b, dtype=float)
    if x.shape != b.shape:
        raise ValueError(f"position shape {x.shape} does not match direction shape {b.shape}")
    if d < 0.0:
        raise ValueError(f"antenna length must be >= 0, got {d}")
    offset = d * b
    return x + offset, x - offset


def detect_step(x: Array, delta: float, b: Array, f_r: float, f_l: float) -> Array:
    """Move from ``x`` toward the antenna with the lower objective value.

    Returns ``x - delta * b * sign(f_r - f_l)``; with sign(0) = 0 the
    equal-antennae case leaves ``x`` unchanged.
    """
    x = np.asarray(x, dtype=float)
    b = np.asarray(b, dtype=float)
    if x.shape != b.shape:
        raise ValueError(f"position shape {x.shape} does not match direction shape {b.shape}")
    if delta < 0.0:
        raise ValueError(f"step size must be >= 0, got {delta}")
    if not np.isfinite(f_r):
        raise ObjectiveError(f_r, x)
    if not np.isfinite(f_l):
        raise ObjectiveError(f_l, x)
    return x - delta * b * np.sign(f_r - f_l)


def init_position(config: BasConfig, rng: np.random.Generator) -> Array:
    """Starting position: the explicit ``x0``, or a uniform draw from ``init_box``."""
    if config.x0 is not None:
        return np.asarray(config.x0, dtype=float)
    box = np.asarray(config.init_box, dtype=float)
    return rng.uniform(box[:, 0], box[:, 1])


def _evaluate(objective: ObjectiveFn, x: Array) -> float:
    value = float(objective(x))
    if not np.isfinite(value):
        raise ObjectiveError(value, x)
    return value


def bas_iterate(state: SearchState, objective: ObjectiveFn,
                rng: np.random.Generator, config: BasConfig) -> SearchState:
    """Advance the search by one iteration (in place; also returns the state).

    Order: sample a direction, probe both antennae, step toward the better
    one, evaluate the new position, update the incumbent if it improved,
    then decay ``d`` and ``delta`` and bump ``t``. Costs exactly 3 objective
    evaluations. If the objective returns a non-finite value the state is
    left untouched.
    """
    b = sample_direction(config.dimension, rng)
    x_r, x_l = antenna_probe(state.x, state.d, b)
    f_r = _evaluate(objective, x_r)
    f_l = _evaluate(objective, x_l)
    x_new = detect_step(state.x, state.delta, b, f_r, f_l)
    if config.clamp_box is not None:
        box = np.asarray(config.clamp_box, dtype=float)
        x_new = np.clip(x_new, box[:, 0], box[:, 1])
    f_new = _evaluate(objective, x_new)

    state.x = x_new
    state.f_x = f_new
    state.evals += 3
    if f_new < state.f_bst:
        state.x_bst = x_new.copy()
        state.f_bst = f_new
    state.d = advance_schedule(state.d, config.d_schedule)
    state.delta = advance_schedule(state.delta, config.delta_schedule)
    state.t += 1
    return state


def run(config: BasConfig, objective: ObjectiveFn) -> RunResult:
    """Execute a full search and return its trajectory and incumbent.

    The incumbent starts at the initial position (1 evaluation), then each
    iteration appends one record with the antenna length and step size it
    used. The loop ends at ``max_iters``, or earlier when ``f_bst`` falls to
    ``target_value``, or after ``stall_iters`` consecutive iterations with
    no improvement of the incumbent.
    """
    rng = np.random.default_rng(config.seed)
    x = init_position(config, rng)
    try:
        f0 = _evaluate(objective, x)
    except ObjectiveError as err:
        raise err.with_iteration(0) from None
    state = SearchState(t=0, x=x, d=config.d0, delta=config.delta0,
                        f_x=f0, x_bst=x.copy(), f_bst=f0, evals=1)

    records = []
    termination = TERM_MAX_ITERS
    stall = 0
    for _ in range(config.max_iters):
        f_bst_before = state.f_bst
        d_used, delta_used = state.d, state.delta
        try:
            bas_iterate(state, objective, rng, config)
        except ObjectiveError as err:
            raise err.with_iteration(state.t + 1) from None
        records.append(IterationRecord(
            t=state.t, f_x=state.f_x, f_bst=state.f_bst,
            d=d_used, delta=delta_used, x=tuple(float(v) for v in state.x)))
        if config.target_value is not None and state.f_bst <= config.target_value:
            termination = TERM_TARGET
            break
        if config.stall_iters is not None:
            stall = 0 if state.f_bst < f_bst_before else stall + 1
            if stall >= config.stall_iters:
                termination = TERM_STALLED
                break

    return RunResult(records=tuple(records),
                     x_bst=tuple(float(v) for v in state.x_bst),
                     f_bst=state.f_bst,
                     evals=state.evals,
                     termination=termination)


def derive_trial_seed(master_seed: int, trial: int) -> int:
    """Independent per-trial seed from (master seed, trial index).

    Stable regardless of how many trials run or in what order, so campaigns
    can be parallelized or re-ordered without changing any single result.
    """
    return int(np.random.SeedSequence((master_seed, trial)).generate_state(1, np.uint64)[0])
