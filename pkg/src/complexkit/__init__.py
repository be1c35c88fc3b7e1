"""complexkit: complex-systems simulation toolkit.

Sparse unbounded cellular automata, an agent-based complex-adaptive-system
engine, a genetic algorithm with a co-evolution hook, information-vs-scale
complexity profiles, and iterative-map chaos diagnostics, behind a library
API and the ``complexkit`` batch CLI.
"""

from .automaton import CONWAY_LIFE, PatternClass, RuleError, RuleSet, classify_pattern, run, step
from .cas import (
    Agent,
    AgentType,
    DegenerateStrategyError,
    Environment,
    Frame,
    FrameError,
    Observation,
    Population,
    Rule,
    Strategy,
    double_on_second_rule,
    linear_rule,
    observe,
    reinforce,
    respond,
    select_rule,
    snapshot,
    tick,
)
from .complexity import (
    ComplexityProfile,
    StateCensus,
    coarse_grain,
    complexity_profile,
    info_bits,
    theoretical_bits,
)
from .coevolve import episode_fitness, weights_from_genome
from .dynamics import (
    Branch,
    DivergenceError,
    IterativeMap,
    Trajectory,
    divergence_rate,
    divergence_rate_two_trajectory,
    identity_map,
    iterate,
    logistic_map,
)
from .evolution import (
    EvaluationError,
    EvolutionConfig,
    GenerationStats,
    Genome,
    Individual,
    crossover,
    evolve,
    mutate,
    select,
)
from .grid import Coordinate, Grid, Topology, neighbors
from .patterns import PatternFormatError, UnsupportedFormatError, decode_pattern, encode_pattern
from .scenario import ScenarioError, build_environment, run_scenario

__version__ = "0.1.0"
