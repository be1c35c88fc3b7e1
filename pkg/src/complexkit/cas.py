"""Agent-based engine for non-adaptive and adaptive complex systems.

Agents carry a type, attributes, a strategy, and an append-only memory of
(stimulus, response) events. A fixed strategy always applies its single
rule; an adaptive strategy draws among its rules proportionally to a
weight vector that is reinforced by received rewards. Ticks are
synchronous and two-phase: intended actions are computed from the time-t
state only, then committed atomically, with cell conflicts resolved by
lowest agent id. The whole trajectory is a pure function of (scenario,
seed).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, Sequence

from .complexity import coarse_grain
from .grid import Grid, Topology

Memory = tuple[tuple[float, float], ...]


class DegenerateStrategyError(ValueError):
    """Adaptive strategy whose weights are all zero cannot choose a rule."""


class FrameError(ValueError):
    """Observation frame refers to attributes no agent type declares."""


@dataclass(frozen=True)
class Rule:
    """A stimulus-response rule; ``apply(stimulus, memory) -> response``."""

    name: str
    apply: Callable[[float, Memory], float]


def linear_rule(gain: float) -> Rule:
    return Rule(f"linear[{gain}]", lambda s, mem: gain * s)


def double_on_second_rule() -> Rule:
    """No reaction to the first stimulus, twice its magnitude to the second,
    repeating that pair forever."""
    return Rule("double-on-second", lambda s, mem: 0.0 if len(mem) % 2 == 0 else 2.0 * s)


_RULE_BUILDERS = {
    "linear": lambda spec: linear_rule(float(spec.get("gain", 1.0))),
    "double_on_second": lambda spec: double_on_second_rule(),
}


def rule_from_spec(spec: Mapping) -> Rule:
    kind = spec.get("kind")
    if kind not in _RULE_BUILDERS:
        raise ValueError(f"unknown rule kind: {kind!r}")
    return _RULE_BUILDERS[kind](spec)


@dataclass(frozen=True)
class Strategy:
    """Fixed strategies hold exactly one rule and no weights; adaptive
    strategies hold a non-negative weight per rule."""

    rules: tuple[Rule, ...]
    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        if not self.rules:
            raise ValueError("a strategy needs at least one rule")
        if self.weights is None:
            if len(self.rules) != 1:
                raise ValueError("a fixed strategy has exactly one rule")
        else:
            if len(self.weights) != len(self.rules):
                raise ValueError("need one weight per rule")
            for w in self.weights:
                if not math.isfinite(w) or w < 0:
                    raise ValueError(f"weights must be finite and non-negative, got {w}")

    @property
    def adaptive(self) -> bool:
        return self.weights is not None


@dataclass(frozen=True)
class AgentType:
    name: str
    schema: tuple[tuple[str, str], ...] = ()  # (attribute, kind) pairs


@dataclass(frozen=True)
class Agent:
    id: int
    type_name: str
    strategy: Strategy
    attributes: Mapping[str, object] = field(default_factory=dict)
    memory: Memory = ()


@dataclass(frozen=True)
class Population:
    name: str
    agents: tuple[Agent, ...]


@dataclass(frozen=True)
class Environment:
    populations: tuple[Population, ...]
    seed: int
    time: int = 0
    space: Grid | None = None
    params: Mapping[str, object] = field(default_factory=dict)
    types: tuple[AgentType, ...] = ()

    def agents(self) -> list[Agent]:
        return [a for pop in self.populations for a in pop.agents]


@dataclass(frozen=True)
class Frame:
    """Observation scale and attribute projection; projection None means all."""

    scale: int = 1
    projection: frozenset[str] | None = None

    def __post_init__(self):
        if self.scale < 1:
            raise ValueError(f"scale must be >= 1, got {self.scale}")


@dataclass(frozen=True)
class Observation:
    time: int
    agents: tuple[tuple[int, str, tuple[tuple[str, object], ...]], ...]
    grid: Grid | None


def respond(agent: Agent, stimulus: float, rule_index: int | None = None) -> tuple[float, Agent]:
    """Apply the selected rule to (stimulus, memory); returns the response and
    the agent with the event appended to memory."""
    if not math.isfinite(stimulus):
        raise ValueError(f"stimulus must be finite, got {stimulus}")
    idx = 0 if rule_index is None else rule_index
    rule = agent.strategy.rules[idx]
    response = rule.apply(stimulus, agent.memory)
    updated = replace(agent, memory=agent.memory + ((stimulus, response),))
    return response, updated


def select_rule(agent: Agent, context: float, rng: random.Random) -> int:
    """Fixed strategies always pick rule 0; adaptive strategies draw an index
    proportionally to their current weights."""
    strategy = agent.strategy
    if not strategy.adaptive:
        return 0
    total = sum(strategy.weights)
    if total <= 0.0:
        raise DegenerateStrategyError(f"agent {agent.id} has an all-zero weight vector")
    u = rng.random() * total
    acc = 0.0
    for i, w in enumerate(strategy.weights):
        acc += w
        if u < acc:
            return i
    return len(strategy.weights) - 1


def reinforce(agent: Agent, rule_index: int, reward: float) -> Agent:
    """Add ``reward`` to the chosen rule's weight, floored at zero."""
    if not agent.strategy.adaptive:
        return agent
    weights = list(agent.strategy.weights)
    weights[rule_index] = max(0.0, weights[rule_index] + reward)
    return replace(agent, strategy=replace(agent.strategy, weights=tuple(weights)))


def _agent_stream(seed: int, time: int, agent_id: int) -> random.Random:
    # Per-agent stream keyed on (seed, time, id) so results never depend on
    # the order agents happen to be iterated in.
    return random.Random(((seed * 1_000_003 + time) * 1_000_003) + agent_id)


def tick(env: Environment) -> Environment:
    """One synchronous two-phase update of every agent.

    Phase 1 computes each agent's response and movement intent from the
    time-t environment; phase 2 commits all of it in ascending agent-id
    order, giving conflicting cell claims to the lowest id (losers stay
    put).
    """
    stimulus = float(env.params.get("stimulus", 1.0))
    intents: dict[int, tuple[Agent, tuple[int, int] | None]] = {}
    for agent in env.agents():
        rng = _agent_stream(env.seed, env.time, agent.id)
        idx = select_rule(agent, stimulus, rng)
        response, updated = respond(agent, stimulus, rule_index=idx)
        updated = reinforce(updated, idx, reward=response)
        target = None
        if env.space is not None and "position" in updated.attributes:
            x, y = updated.attributes["position"]
            dx, dy = env.space.topology.offsets[rng.randrange(env.space.topology.degree)]
            target = (x + dx, y + dy)
        intents[agent.id] = (updated, target)

    claimed: set[tuple[int, int]] = set()
    committed: dict[int, Agent] = {}
    for aid in sorted(intents):
        updated, target = intents[aid]
        if target is not None:
            if target in claimed:
                target = tuple(updated.attributes["position"])
            claimed.add(target)
            attrs = dict(updated.attributes)
            attrs["position"] = target
            updated = replace(updated, attributes=attrs)
        committed[aid] = updated

    populations = tuple(
        Population(
            name=pop.name,
            agents=tuple(sorted((committed[a.id] for a in pop.agents), key=lambda a: a.id)),
        )
        for pop in env.populations
    )
    space = env.space
    if space is not None:
        occupied = [
            a.attributes["position"] for a in committed.values() if "position" in a.attributes
        ]
        space = Grid(occupied, topology=space.topology)
    return replace(env, populations=populations, space=space, time=env.time + 1)


def observe(env: Environment, frame: Frame) -> Observation:
    """Project the environment through a frame: only the projected attributes
    are visible, and spatial state is coarse-grained by the frame's scale."""
    known = {name for t in env.types for name, _ in t.schema}
    if not env.types:
        known = {name for a in env.agents() for name in a.attributes}
    if frame.projection is not None:
        unknown = frame.projection - known
        if unknown:
            raise FrameError(f"projection names unknown attributes: {sorted(unknown)}")
    agents = []
    for a in sorted(env.agents(), key=lambda a: a.id):
        attrs = tuple(
            sorted(
                (k, v)
                for k, v in a.attributes.items()
                if frame.projection is None or k in frame.projection
            )
        )
        agents.append((a.id, a.type_name, attrs))
    grid = None
    if env.space is not None:
        grid = coarse_grain(env.space, frame.scale)
    return Observation(time=env.time, agents=tuple(agents), grid=grid)


def snapshot(env: Environment) -> tuple:
    """Canonical structural snapshot for trajectory-equality comparisons;
    independent of agent list order."""
    agents = tuple(
        sorted(
            (
                a.id,
                a.type_name,
                tuple(sorted(a.attributes.items())),
                a.strategy.weights,
                a.memory,
            )
            for a in env.agents()
        )
    )
    space = None
    if env.space is not None:
        space = frozenset(env.space.cells.items())
    return (env.time, agents, space)
