"""Request-driven mode selection with an onboard content cache.

The platform classifies each incoming request (communication, content
delivery, caching, task offloading), consults its cache and the per-mode
capacity models, and emits one ModeDecision per request. State is a
popularity-counting LRU cache; processing a trace is a deterministic
fold of handle_request over the requests.
"""

from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .modes import (
    Action,
    Mode,
    ModeConfigs,
    mode_capacity_bps_hz,
    mode_payload_power_W,
)
from .offload import (
    CloudConfig,
    ComputeTask,
    offload_latency,
    offload_path_m,
    transmission_latency,
)
from .optimizer import (
    ModeDecision,
    Objective,
    ObjectiveKind,
    rs_capacity_alpha_opt,
    select_mode_for_communication,
)
from .propagation import RadioParams, ScenarioGeometry, propagation_delay_s


class RequestKind(Enum):
    COMMUNICATION = "communication"
    CONTENT_DELIVERY = "content_delivery"
    CACHING = "caching"
    TASK_OFFLOADING = "task_offloading"


class RequestError(ValueError):
    """Malformed request; carries a human-readable diagnostic."""


@dataclass(frozen=True)
class Request:
    t: float
    kind: RequestKind
    content_id: Optional[str] = None
    size_bits: Optional[float] = None
    objective: Optional[Objective] = None
    qos_min_bps: Optional[float] = None


def validate_request(req: Request):
    """Reject structurally broken requests before any state is touched."""
    if not isinstance(req.kind, RequestKind):
        raise RequestError(f"unknown request kind {req.kind!r}")
    needs_content = req.kind in (RequestKind.CONTENT_DELIVERY, RequestKind.CACHING)
    if needs_content and not req.content_id:
        raise RequestError(f"{req.kind.value} request needs a content_id")
    if not needs_content and req.content_id:
        raise RequestError(f"{req.kind.value} request must not carry a content_id")
    if req.kind is RequestKind.TASK_OFFLOADING:
        if req.size_bits is None:
            raise RequestError("task_offloading request needs size_bits")
    if req.size_bits is not None and req.size_bits < 0:
        raise RequestError(f"size_bits cannot be negative, got {req.size_bits}")
    if req.qos_min_bps is not None and req.qos_min_bps <= 0:
        raise RequestError("qos_min_bps must be positive when given")


# =====================================================================
# Cache state
# =====================================================================

@dataclass
class CacheState:
    """LRU cache plus a cumulative per-id popularity counter.

    entries keeps insertion/use order (least recently used first);
    popularity counts every sighting of an id, cached or not. An id is
    promoted into the cache once its counter reaches popularity_threshold.
    """

    capacity: int = 16
    popularity_threshold: int = 3
    entries: "OrderedDict[str, None]" = field(default_factory=OrderedDict)
    popularity: dict = field(default_factory=dict)

    def copy(self):
        clone = CacheState(
            capacity=self.capacity,
            popularity_threshold=self.popularity_threshold,
        )
        clone.entries = OrderedDict(self.entries)
        clone.popularity = dict(self.popularity)
        return clone

    def contains(self, content_id):
        return content_id in self.entries

    def touch(self, content_id):
        # mark as most recently used
        self.entries.move_to_end(content_id)

    def insert(self, content_id):
        if content_id in self.entries:
            self.entries.move_to_end(content_id)
            return
        if self.capacity == 0:
            return
        while len(self.entries) >= self.capacity:
            self.entries.popitem(last=False)  # evict least recently used
        self.entries[content_id] = None

    def bump_popularity(self, content_id):
        count = self.popularity.get(content_id, 0) + 1
        self.popularity[content_id] = count
        return count

    @property
    def hit_candidates(self):
        return tuple(self.entries.keys())


# =====================================================================
# Engine context
# =====================================================================

@dataclass(frozen=True)
class EngineContext:
    """Everything handle_request needs besides the cache: where the
    platform sits and how each payload performs there."""

    geom: ScenarioGeometry
    radio: RadioParams
    configs: ModeConfigs
    cloud: CloudConfig = CloudConfig()
    cycles_per_bit: float = 4.0

    def capacity_bps(self, mode: Mode):
        if mode is Mode.RS:
            c_hz = rs_capacity_alpha_opt(self.geom, self.radio, self.configs.rs)
        else:
            c_hz = mode_capacity_bps_hz(mode, self.geom, self.radio, self.configs)
        return c_hz * self.radio.B

    def payload_power_W(self, mode: Mode):
        return mode_payload_power_W(mode, self.configs)

    def path_m(self, mode: Mode):
        return offload_path_m(mode, self.geom)


_DEFAULT_OBJECTIVE = Objective(ObjectiveKind.MAX_CAPACITY)


def _airtime_fields(ctx: EngineContext, mode: Mode, size_bits):
    """(latency_s, energy_J) for moving size_bits via mode, or Nones."""
    if size_bits is None:
        return None, None
    capacity = ctx.capacity_bps(mode)
    airtime = transmission_latency(size_bits, capacity)
    latency = propagation_delay_s(ctx.path_m(mode)) + airtime
    energy = ctx.payload_power_W(mode) * airtime
    return latency, energy


def _choose_forwarder(ctx: EngineContext, objective: Objective):
    """Best of the two forwarding payloads under the request's objective."""
    return select_mode_for_communication(
        objective, ctx.geom, ctx.radio, ctx.configs, enabled=(Mode.RIS, Mode.RS)
    )


# =====================================================================
# Request handling
# =====================================================================

def handle_request(req: Request, state: CacheState, ctx: EngineContext):
    """Process one request; returns (decision, new state).

    The input state is never mutated: errors leave it untouched and
    successful handling returns an updated copy.
    """
    validate_request(req)
    objective = req.objective or _DEFAULT_OBJECTIVE

    if req.kind is RequestKind.COMMUNICATION:
        decision = select_mode_for_communication(
            objective, ctx.geom, ctx.radio, ctx.configs
        )
        if decision.mode is not None:
            latency, energy = _airtime_fields(ctx, decision.mode, req.size_bits)
            decision = ModeDecision(
                decision.mode, decision.action, decision.objective_value,
                latency_s=latency, energy_J=energy,
            )
        return decision, state.copy()

    if req.kind is RequestKind.CONTENT_DELIVERY:
        new_state = state.copy()
        count = new_state.bump_popularity(req.content_id)
        if new_state.contains(req.content_id):
            new_state.touch(req.content_id)
            latency, energy = _airtime_fields(ctx, Mode.SMBS, req.size_bits)
            decision = ModeDecision(
                Mode.SMBS, Action.SERVE_DIRECT, ctx.capacity_bps(Mode.SMBS),
                latency_s=latency, energy_J=energy,
            )
            return decision, new_state
        forward = _choose_forwarder(ctx, objective)
        if forward.mode is None:  # no forwarder satisfies the constraint
            return forward, state.copy()
        action = Action.FORWARD_VIA_GATEWAY
        if count >= new_state.popularity_threshold:
            new_state.insert(req.content_id)
            action = Action.FORWARD_AND_CACHE
        latency, energy = _airtime_fields(ctx, forward.mode, req.size_bits)
        decision = ModeDecision(
            forward.mode, action, forward.objective_value,
            latency_s=latency, energy_J=energy,
        )
        return decision, new_state

    if req.kind is RequestKind.CACHING:
        new_state = state.copy()
        new_state.bump_popularity(req.content_id)
        forward = _choose_forwarder(ctx, objective)
        if forward.mode is None:
            return forward, state.copy()
        new_state.insert(req.content_id)
        latency, energy = _airtime_fields(ctx, forward.mode, req.size_bits)
        decision = ModeDecision(
            forward.mode, Action.FORWARD_AND_CACHE, forward.objective_value,
            latency_s=latency, energy_J=energy,
        )
        return decision, new_state

    if req.kind is RequestKind.TASK_OFFLOADING:
        return _handle_task(req, state, ctx)

    raise RequestError(f"unhandled request kind {req.kind!r}")


def _handle_task(req: Request, state: CacheState, ctx: EngineContext):
    task = ComputeTask(req.size_bits, ctx.cycles_per_bit)
    candidates = []
    for mode in (Mode.SMBS, Mode.RIS, Mode.RS):
        capacity = ctx.capacity_bps(mode)
        if req.qos_min_bps is not None and capacity < req.qos_min_bps:
            continue
        latency = offload_latency(
            mode, ctx.geom, ctx.radio, ctx.configs, task, ctx.cloud
        )
        candidates.append((latency, mode, capacity))
    if not candidates:
        return ModeDecision(None, Action.INFEASIBLE, 0.0), state.copy()
    latency, mode, capacity = min(candidates, key=lambda c: c[0])
    action = Action.COMPUTE_ONBOARD if mode is Mode.SMBS else Action.COMPUTE_AT_CLOUD
    airtime = transmission_latency(req.size_bits, capacity)
    energy = ctx.payload_power_W(mode) * airtime
    decision = ModeDecision(
        mode, action, latency, latency_s=latency, energy_J=energy
    )
    return decision, state.copy()


# =====================================================================
# Trace replay
# =====================================================================

@dataclass(frozen=True)
class ReplaySummary:
    mode_counts: dict
    total_energy_J: float
    cache_hit_rate: float
    requests: int


@dataclass(frozen=True)
class ReplayResult:
    decisions: tuple
    final_state: CacheState
    summary: ReplaySummary


def _forced_decision(req: Request, ctx: EngineContext, mode: Mode):
    # diagnostic path: serve everything through one payload, cache bypassed
    if req.kind is RequestKind.TASK_OFFLOADING:
        task = ComputeTask(req.size_bits, ctx.cycles_per_bit)
        latency = offload_latency(
            mode, ctx.geom, ctx.radio, ctx.configs, task, ctx.cloud
        )
        action = (
            Action.COMPUTE_ONBOARD if mode is Mode.SMBS else Action.COMPUTE_AT_CLOUD
        )
        airtime = transmission_latency(req.size_bits, ctx.capacity_bps(mode))
        return ModeDecision(
            mode, action, latency,
            latency_s=latency, energy_J=ctx.payload_power_W(mode) * airtime,
        )
    if mode is Mode.SMBS:
        action = Action.SERVE_DIRECT
    elif req.kind is RequestKind.CACHING:
        action = Action.FORWARD_AND_CACHE
    else:
        action = Action.FORWARD_VIA_GATEWAY
    latency, energy = _airtime_fields(ctx, mode, req.size_bits)
    return ModeDecision(
        mode, action, ctx.capacity_bps(mode), latency_s=latency, energy_J=energy
    )


def replay_trace(
    requests,
    initial_state: CacheState,
    ctx: EngineContext,
    force_mode: Optional[Mode] = None,
):
    """Fold handle_request over a request trace.

    Timestamps must be non-decreasing; the first malformed request aborts
    the replay with its index. force_mode routes every request through a
    single payload (no cache interaction), which exists for energy
    comparisons, not as a selection policy.
    """
    state = initial_state.copy()
    decisions = []
    mode_counts = {m.value: 0 for m in Mode}
    total_energy = 0.0
    hits = 0
    content_requests = 0
    last_t = None
    for index, req in enumerate(requests):
        try:
            validate_request(req)
            if last_t is not None and req.t < last_t:
                raise RequestError(
                    f"timestamps must be non-decreasing ({req.t} after {last_t})"
                )
        except RequestError as err:
            raise RequestError(f"request {index}: {err}") from None
        last_t = req.t
        if force_mode is not None:
            decision = _forced_decision(req, ctx, force_mode)
        else:
            decision, state = handle_request(req, state, ctx)
        decisions.append(decision)
        if decision.mode is not None:
            mode_counts[decision.mode.value] += 1
        if decision.energy_J is not None:
            total_energy += decision.energy_J
        if req.kind is RequestKind.CONTENT_DELIVERY:
            content_requests += 1
            if decision.action is Action.SERVE_DIRECT:
                hits += 1
    hit_rate = hits / content_requests if content_requests else 0.0
    summary = ReplaySummary(
        mode_counts=mode_counts,
        total_energy_J=total_energy,
        cache_hit_rate=hit_rate,
        requests=len(decisions),
    )
    return ReplayResult(tuple(decisions), state, summary)


# =====================================================================
# Trace text format
# =====================================================================

_OBJECTIVE_TOKENS = {
    "max_capacity": ObjectiveKind.MAX_CAPACITY,
    "max_energy_efficiency": ObjectiveKind.MAX_ENERGY_EFFICIENCY,
    "min_energy": ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS,
}

TRACE_COLUMNS = "t,kind,content_id,size_bits,objective,qos_bps"


def parse_trace_line(line, lineno=None):
    """One request per line: t,kind,content_id,size_bits,objective,qos_bps.

    Empty fields mean "not applicable". Returns None for comments and
    blank lines.
    """
    where = f"line {lineno}: " if lineno is not None else ""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    parts = [p.strip() for p in stripped.split(",")]
    if len(parts) != 6:
        raise RequestError(f"{where}expected 6 fields ({TRACE_COLUMNS}), got {len(parts)}")
    t_raw, kind_raw, content_id, size_raw, obj_raw, qos_raw = parts
    try:
        t = float(t_raw)
    except ValueError:
        raise RequestError(f"{where}bad timestamp {t_raw!r}") from None
    try:
        kind = RequestKind(kind_raw)
    except ValueError:
        raise RequestError(f"{where}unknown kind {kind_raw!r}") from None
    size_bits = None
    if size_raw:
        try:
            size_bits = float(size_raw)
        except ValueError:
            raise RequestError(f"{where}bad size_bits {size_raw!r}") from None
    qos = None
    if qos_raw:
        try:
            qos = float(qos_raw)
        except ValueError:
            raise RequestError(f"{where}bad qos_bps {qos_raw!r}") from None
    objective = None
    if obj_raw:
        kind_obj = _OBJECTIVE_TOKENS.get(obj_raw)
        if kind_obj is None:
            raise RequestError(f"{where}unknown objective {obj_raw!r}")
        if kind_obj is ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS:
            if qos is None:
                raise RequestError(f"{where}min_energy needs a qos_bps value")
            objective = Objective(kind_obj, qos)
        else:
            objective = Objective(kind_obj)
    req = Request(
        t=t,
        kind=kind,
        content_id=content_id or None,
        size_bits=size_bits,
        objective=objective,
        qos_min_bps=qos,
    )
    try:
        validate_request(req)
    except RequestError as err:
        raise RequestError(f"{where}{err}") from None
    return req


def load_trace(path):
    requests = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            req = parse_trace_line(line, lineno=lineno)
            if req is not None:
                requests.append(req)
    return requests


# =====================================================================
# Decision CSV
# =====================================================================

DECISION_CSV_HEADER = "t,kind,mode,action,objective_value,latency_s,energy_J"


def _fmt(value):
    # fixed 9-significant-digit scientific notation keeps files
    # byte-stable across platforms
    return "" if value is None else f"{value:.8e}"


def decisions_to_csv(requests, decisions):
    """Render replayed decisions in the documented CSV schema."""
    if len(requests) != len(decisions):
        raise ValueError("requests and decisions must align one-to-one")
    lines = [DECISION_CSV_HEADER]
    for req, dec in zip(requests, decisions):
        mode = dec.mode.value if dec.mode is not None else ""
        lines.append(
            ",".join(
                (
                    _fmt(req.t),
                    req.kind.value,
                    mode,
                    dec.action.value,
                    _fmt(dec.objective_value),
                    _fmt(dec.latency_s),
                    _fmt(dec.energy_J),
                )
            )
        )
    return "\n".join(lines) + "\n"
