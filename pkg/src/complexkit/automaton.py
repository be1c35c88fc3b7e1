"""Generalized cellular-automaton engine: rules, synchronous stepping,
history runs, and pattern classification.

Rules are count-based birth/survival sets over the grid topology's
neighborhood, with an optional number of live "colors" (states >= 2).
The update is synchronous: generation t+1 is a pure function of
generation t.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .grid import Coordinate, Grid, Topology

History = list[Grid]


class RuleError(ValueError):
    """Invalid or unsupported rule set."""


_RULE_RE = re.compile(r"^B(\d*)/S(\d*)$")


@dataclass(frozen=True)
class RuleSet:
    """Birth/survival neighbor-count rule with ``states`` cell states.

    ``states`` counts the dead state, so states=2 is a classic two-state
    rule; Conway Life is B3/S23 with states=2.
    """

    birth: frozenset[int]
    survival: frozenset[int]
    states: int = 2

    def __post_init__(self):
        object.__setattr__(self, "birth", frozenset(self.birth))
        object.__setattr__(self, "survival", frozenset(self.survival))
        if self.states < 2:
            raise RuleError(f"states must be >= 2, got {self.states}")
        for count in self.birth | self.survival:
            if not isinstance(count, int) or count < 0:
                raise RuleError(f"neighbor counts must be non-negative ints, got {count!r}")
        if 0 in self.birth:
            # Birth on zero neighbors would light up the whole unbounded lattice.
            raise RuleError("rules with 0 in the birth set are not supported")

    @classmethod
    def parse(cls, text: str, states: int = 2) -> "RuleSet":
        """Parse a rule string like ``B3/S23``."""
        m = _RULE_RE.match(text.strip())
        if m is None:
            raise RuleError(f"malformed rule string: {text!r}")
        birth = frozenset(int(ch) for ch in m.group(1))
        survival = frozenset(int(ch) for ch in m.group(2))
        return cls(birth=birth, survival=survival, states=states)

    def __str__(self) -> str:
        b = "".join(str(n) for n in sorted(self.birth))
        s = "".join(str(n) for n in sorted(self.survival))
        return f"B{b}/S{s}"


CONWAY_LIFE = RuleSet(birth=frozenset({3}), survival=frozenset({2, 3}))


@dataclass(frozen=True)
class PatternClass:
    """Classification of a pattern's long-run behavior.

    kind is one of "still-life", "oscillator", "spaceship", "unresolved".
    period is set for oscillators and spaceships; displacement only for
    spaceships and is never (0, 0).
    """

    kind: str
    period: int | None = None
    displacement: Coordinate | None = None

    def __str__(self) -> str:
        if self.kind == "oscillator":
            return f"oscillator p={self.period}"
        if self.kind == "spaceship":
            dx, dy = self.displacement
            return f"spaceship p={self.period} d=({dx},{dy})"
        return self.kind


def _validate_rule(rule: RuleSet, topology: Topology) -> None:
    degree = topology.degree
    for count in rule.birth | rule.survival:
        if count > degree:
            raise RuleError(
                f"neighbor count {count} exceeds {topology.value} degree {degree}"
            )


def _newborn_state(coord: Coordinate, cells, offsets, states: int) -> int:
    if states == 2:
        return 1
    # Majority color among live neighbors; ties go to the smallest color.
    x, y = coord
    tally = Counter()
    for dx, dy in offsets:
        s = cells.get((x + dx, y + dy), 0)
        if s:
            tally[s] += 1
    best = max(tally.values())
    return min(c for c, n in tally.items() if n == best)


def step(grid: Grid, rule: RuleSet = CONWAY_LIFE) -> Grid:
    """Advance one generation synchronously.

    Only live cells and their neighbors are candidates; with 0 excluded
    from the birth set (enforced by RuleSet) no other cell can change.
    """
    _validate_rule(rule, grid.topology)
    cells = grid.cells
    offsets = grid.topology.offsets
    counts = Counter(
        (x + dx, y + dy) for (x, y) in cells for dx, dy in offsets
    )
    birth = rule.birth
    survival = rule.survival
    nxt: dict[Coordinate, int] = {}
    for coord, count in counts.items():
        state = cells.get(coord, 0)
        if state:
            if count in survival:
                nxt[coord] = state
        elif count in birth:
            nxt[coord] = _newborn_state(coord, cells, offsets, rule.states)
    if 0 in survival:
        # Isolated live cells never appear in the neighbor-count map.
        for coord, state in cells.items():
            if coord not in counts:
                nxt[coord] = state
    return Grid(nxt, topology=grid.topology)


def run(grid: Grid, rule: RuleSet = CONWAY_LIFE, generations: int = 0) -> History:
    """Run ``generations`` steps and return all snapshots, generation 0 first."""
    if generations < 0:
        raise ValueError(f"generation count must be >= 0, got {generations}")
    history = [grid]
    current = grid
    for _ in range(generations):
        current = step(current, rule)
        history.append(current)
    return history


def classify_pattern(grid: Grid, rule: RuleSet = CONWAY_LIFE, horizon: int = 64) -> PatternClass:
    """Classify a pattern by stepping up to ``horizon`` generations.

    Matches are modulo translation only. A pattern that returns to itself
    after one step is a still life, never a period-1 oscillator.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    start_canon = grid.canonicalize()
    start_box = grid.bounding_box()
    current = grid
    for k in range(1, horizon + 1):
        current = step(current, rule)
        if k == 1 and current == grid:
            return PatternClass(kind="still-life")
        if current.canonicalize() == start_canon:
            if current == grid:
                return PatternClass(kind="oscillator", period=k)
            cur_box = current.bounding_box()
            if start_box is None or cur_box is None:
                continue  # empty matching non-empty cannot happen here
            d = (cur_box[0][0] - start_box[0][0], cur_box[0][1] - start_box[0][1])
            if d != (0, 0):
                return PatternClass(kind="spaceship", period=k, displacement=d)
    return PatternClass(kind="unresolved")
