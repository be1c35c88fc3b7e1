"""Genetic algorithm over fixed-length genomes.

Generational loop with tournament selection, single-point crossover,
per-symbol mutation, and elitism. All randomness flows from the config
seed, so runs are fully reproducible. Ties break everywhere toward the
lowest population index.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

Genome = tuple[str, ...]

UNEVALUATED = None


class EvaluationError(ValueError):
    """Fitness function returned a non-finite value for a genome."""

    def __init__(self, genome: Genome, value: float):
        super().__init__(f"non-finite fitness {value!r} for genome {''.join(genome)!r}")
        self.genome = genome


@dataclass
class Individual:
    genome: Genome
    fitness: float | None = UNEVALUATED


@dataclass(frozen=True)
class EvolutionConfig:
    genome_length: int
    population_size: int = 100
    generations: int = 100
    mutation_rate: float = 0.01
    crossover_rate: float = 0.9
    tournament_size: int = 3
    elitism: int = 1
    seed: int = 0
    alphabet: str = "01"
    # Stop as soon as some individual reaches this fitness; None runs all
    # generations.
    target_fitness: float | None = None

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population size must be >= 2")
        if self.generations < 0:
            raise ValueError("generations must be >= 0")
        if not (0.0 <= self.mutation_rate <= 1.0 and 0.0 <= self.crossover_rate <= 1.0):
            raise ValueError("rates must lie in [0, 1]")
        if self.tournament_size < 1 or self.tournament_size > self.population_size:
            raise ValueError("tournament size must lie in [1, population size]")
        if not (0 <= self.elitism < self.population_size):
            raise ValueError("elitism count must lie in [0, population size)")
        if self.genome_length < 1:
            raise ValueError("genome length must be >= 1")
        if len(self.alphabet) < 2 or len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet needs >= 2 distinct symbols")


def random_genome(length: int, alphabet: str, rng: random.Random) -> Genome:
    return tuple(rng.choice(alphabet) for _ in range(length))


def select(
    population: Sequence[Individual],
    k: int,
    tournament_size: int,
    rng: random.Random,
) -> list[Individual]:
    """Pick ``k`` winners, each the fittest of a uniformly drawn tournament."""
    if k < 1:
        raise ValueError("must select at least one individual")
    for ind in population:
        if ind.fitness is UNEVALUATED:
            raise ValueError("cannot select from a population with unevaluated fitness")
    winners = []
    indices = range(len(population))
    for _ in range(k):
        entrants = rng.sample(indices, tournament_size)
        best = min(entrants, key=lambda i: (-population[i].fitness, i))
        winners.append(population[best])
    return winners


def crossover(
    a: Genome,
    b: Genome,
    point: int | None = None,
    rng: random.Random | None = None,
) -> tuple[Genome, Genome]:
    """Single-point crossover; the cut point is drawn uniformly if absent."""
    if len(a) != len(b):
        raise ValueError(f"genome lengths differ: {len(a)} vs {len(b)}")
    length = len(a)
    if length < 2:
        raise ValueError("crossover needs genomes of length >= 2")
    if point is None:
        if rng is None:
            raise ValueError("need a random stream to draw the cut point")
        point = rng.randint(1, length - 1)
    if not (1 <= point <= length - 1):
        raise ValueError(f"cut point must lie in [1, {length - 1}], got {point}")
    return a[:point] + b[point:], b[:point] + a[point:]


def mutate(genome: Genome, rate: float, rng: random.Random, alphabet: str = "01") -> Genome:
    """Replace each symbol, independently with probability ``rate``, by a
    uniformly chosen different symbol."""
    if not (0.0 <= rate <= 1.0):
        raise ValueError(f"mutation rate must lie in [0, 1], got {rate}")
    if rate == 0.0:
        return genome
    out = list(genome)
    for i, sym in enumerate(out):
        if rng.random() < rate:
            others = [s for s in alphabet if s != sym]
            out[i] = others[0] if len(others) == 1 else rng.choice(others)
    return tuple(out)


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    best: float
    mean: float


def evolve(
    cfg: EvolutionConfig,
    fitness: Callable[[Genome], float],
) -> tuple[Individual, list[GenerationStats]]:
    """Run the generational loop and return the overall best plus stats.

    Each generation: evaluate, record stats, copy elites, then fill the
    population with tournament winners recombined by crossover (with
    probability crossover_rate, otherwise cloned) and mutated.
    """
    rng = random.Random(cfg.seed)
    population = [
        Individual(random_genome(cfg.genome_length, cfg.alphabet, rng))
        for _ in range(cfg.population_size)
    ]

    def evaluate(pop: list[Individual]) -> None:
        cache: dict[Genome, float] = {}
        for ind in pop:
            if ind.fitness is not UNEVALUATED:
                continue
            if ind.genome in cache:
                ind.fitness = cache[ind.genome]
                continue
            value = float(fitness(ind.genome))
            if not math.isfinite(value):
                raise EvaluationError(ind.genome, value)
            cache[ind.genome] = value
            ind.fitness = value

    stats: list[GenerationStats] = []
    overall_best: Individual | None = None

    def record(generation: int) -> None:
        nonlocal overall_best
        values = [ind.fitness for ind in population]
        best_i = min(range(len(values)), key=lambda i: (-values[i], i))
        stats.append(
            GenerationStats(generation=generation, best=values[best_i], mean=sum(values) / len(values))
        )
        if overall_best is None or values[best_i] > overall_best.fitness:
            best = population[best_i]
            overall_best = Individual(best.genome, best.fitness)

    evaluate(population)
    record(0)
    for generation in range(1, cfg.generations + 1):
        if cfg.target_fitness is not None and overall_best.fitness >= cfg.target_fitness:
            break
        ranked = sorted(
            range(len(population)), key=lambda i: (-population[i].fitness, i)
        )
        next_pop = [
            Individual(population[i].genome, population[i].fitness)
            for i in ranked[: cfg.elitism]
        ]
        while len(next_pop) < cfg.population_size:
            pa, pb = select(population, 2, cfg.tournament_size, rng)
            if rng.random() < cfg.crossover_rate and cfg.genome_length >= 2:
                ca, cb = crossover(pa.genome, pb.genome, rng=rng)
            else:
                ca, cb = pa.genome, pb.genome
            for child in (ca, cb):
                if len(next_pop) >= cfg.population_size:
                    break
                next_pop.append(
                    Individual(mutate(child, cfg.mutation_rate, rng, cfg.alphabet))
                )
        population = next_pop
        evaluate(population)
        record(generation)
    return overall_best, stats
