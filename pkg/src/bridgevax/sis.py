"""Seeded susceptible-infected-susceptible simulation with vaccination.

States are the module constants ``SUSCEPTIBLE`` (0), ``INFECTED`` (1)
and ``VACCINATED`` (2); vaccination is absorbing.  Each round runs two
phases in sequence: recovery (each infected node recovers with
probability mu) and infection (each node still infected after recovery
exposes each neighbor that entered the phase susceptible, one Bernoulli
draw per link, success probability beta).  Newly infected nodes do not
transmit until the next round.  A round only counts if at least one
node is still infected after the recovery phase; otherwise the
simulation stops without counting it.

Draw discipline (what makes seeded runs replayable):

* Initialization draws one number per non-vaccinated node, ascending
  node ID; the node starts infected iff the draw is <= beta.
  Vaccinated nodes draw nothing.
* Recovery draws one number per infected node, ascending node ID;
  the node recovers iff the draw is <= mu.  Nobody else draws.
* Infection iterates infected nodes ascending, and for each one its
  susceptible-at-entry neighbors ascending, one draw per link -- even
  for a neighbor an earlier link already infected this phase.

With draws on [0, 1) and the "<=" rule, beta = 0 is a null event (a
draw of exactly 0.0 has probability 2**-53) and beta = 1 or mu = 1 are
certain events.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .graphs import Graph
from .rng import MASK64, RandomStream, substream_seed

SUSCEPTIBLE = 0
INFECTED = 1
VACCINATED = 2

#: Called as observer(round_index, states) with round 0 = post-initialization
#: and round r >= 1 after phase-ii of each counted round.
Observer = Callable[[int, tuple[int, ...]], None]


@dataclass(frozen=True)
class SimConfig:
    """One simulation's parameters."""

    beta: float
    mu: float
    max_rounds: int
    seed: int

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must be in [0, 1], got {self.beta}")
        if not 0.0 <= self.mu <= 1.0:
            raise ValueError(f"mu must be in [0, 1], got {self.mu}")
        if self.max_rounds < 1:
            raise ValueError(f"max_rounds must be >= 1, got {self.max_rounds}")
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class SimResult:
    """Outcome of one simulation.

    ``per_round_infected`` holds the infected count after phase-ii of
    each counted round; ``final_states`` is the state vector when the
    simulation stopped.
    """

    per_round_infected: tuple[int, ...]
    final_states: tuple[int, ...]

    @property
    def rounds_executed(self) -> int:
        return len(self.per_round_infected)

    @property
    def total_infected(self) -> int:
        return sum(self.per_round_infected)

    @property
    def avg_infected_per_round(self) -> float:
        if not self.per_round_infected:
            return 0.0
        return self.total_infected / len(self.per_round_infected)


def initialize(
    g: Graph, vaccinees: Iterable[int], beta: float, rng: RandomStream
) -> list[int]:
    """Initial state vector: vaccinees fixed, everyone else draws once."""
    vacc = set(vaccinees)
    n = g.node_count
    for v in vacc:
        if not 0 <= v < n:
            raise ValueError(f"vaccinee {v} out of range for {n} nodes")
    states = []
    for v in range(n):
        if v in vacc:
            states.append(VACCINATED)
        elif rng.next_float() <= beta:
            states.append(INFECTED)
        else:
            states.append(SUSCEPTIBLE)
    return states


def phase_recovery(states: list[int], mu: float, rng: RandomStream) -> list[int]:
    """Recovery phase; mutates and returns ``states``."""
    for v, s in enumerate(states):
        if s == INFECTED and rng.next_float() <= mu:
            states[v] = SUSCEPTIBLE
    return states


def phase_infection(
    g: Graph, states: list[int], beta: float, rng: RandomStream
) -> list[int]:
    """Infection phase; mutates and returns ``states``.

    Only nodes infected at entry transmit, and only neighbors
    susceptible at entry can be hit; both snapshots are taken before
    any draw.
    """
    adjacency = g.adjacency
    entry_susceptible = [s == SUSCEPTIBLE for s in states]
    newly_infected = []
    for u, s in enumerate(states):
        if s != INFECTED:
            continue
        for w in adjacency[u]:
            if entry_susceptible[w] and rng.next_float() <= beta:
                newly_infected.append(w)
    for w in newly_infected:
        states[w] = INFECTED
    return states


def run_simulation(
    g: Graph,
    config: SimConfig,
    vaccinees: Iterable[int],
    observer: Observer | None = None,
) -> SimResult:
    """Run one seeded simulation to its stopping rule.

    Deterministic: (graph, config, vaccinees) fully determines the
    result.  The average counts only executed rounds; a run that never
    sustains an infection past a recovery phase reports 0 rounds and an
    average of 0.0.
    """
    rng = RandomStream(config.seed)
    states = initialize(g, vaccinees, config.beta, rng)
    if observer is not None:
        observer(0, tuple(states))
    per_round: list[int] = []
    while len(per_round) < config.max_rounds:
        phase_recovery(states, config.mu, rng)
        if INFECTED not in states:
            break
        phase_infection(g, states, config.beta, rng)
        per_round.append(states.count(INFECTED))
        if observer is not None:
            observer(len(per_round), tuple(states))
    return SimResult(
        per_round_infected=tuple(per_round), final_states=tuple(states)
    )


def run_trials(
    g: Graph,
    vaccinees: Iterable[int],
    *,
    beta: float,
    mu: float,
    max_rounds: int,
    n_trials: int,
    base_seed: int,
    observer: Observer | None = None,
) -> list[SimResult]:
    """Independent repeated simulations.

    Trial ``t`` runs on the substream ``t`` of ``base_seed``, so trials
    are self-contained and their results do not depend on execution
    order.
    """
    if n_trials < 1:
        raise ValueError(f"n_trials must be >= 1, got {n_trials}")
    vacc = frozenset(vaccinees)
    results = []
    for t in range(n_trials):
        config = SimConfig(
            beta=beta, mu=mu, max_rounds=max_rounds,
            seed=substream_seed(base_seed, t),
        )
        results.append(run_simulation(g, config, vacc, observer=observer))
    return results
