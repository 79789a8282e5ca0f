"""Bridge-node centrality tuples, node ranking, and vaccinee selection.

A node's centrality tuple is (neighborhood component count, neighborhood
algebraic connectivity ratio, degree).  Nodes rank higher with more
neighborhood components, then with a *sparser* connected neighborhood
(lower ACR), then with larger degree; nodes equal on all three entries
share a rank.  Degree centrality is provided as the baseline strategy.

Conventions for small neighborhoods (the tuple definition is silent on
them): a degree-0 node gets (0, 0.0, 0) and ranks below everything; a
degree-1 node has a single-vertex neighborhood, one component, and ACR
0.0 by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, connected_components, neighborhood_graph
from .spectral import acr as spectral_acr

#: ACR values are compared on a 1e-9 grid.  Snapping to the grid keeps
#: near-equal floating-point spectra in one rank class while preserving
#: transitivity, which a plain tolerance comparison would break.
_ACR_QUANTUM = 1e-9


class Strategy(Enum):
    """Vaccinee ranking strategy."""

    NBNC = "NBNC"
    DEG = "DEG"


@dataclass(frozen=True)
class NbncTuple:
    """Per-node centrality tuple (components, acr, degree)."""

    components: int
    acr: float
    degree: int


@dataclass(frozen=True)
class Ranking:
    """Total order over node IDs, highest rank first.

    ``order`` breaks ties by ascending node ID; ``tie_groups`` preserves
    the true equal-rank classes, in rank order.
    """

    order: tuple[int, ...]
    tie_groups: tuple[tuple[int, ...], ...]


def _acr_key(value: float) -> int:
    return round(value / _ACR_QUANTUM)


def nbnc_tuple(g: Graph, v: int) -> NbncTuple:
    """Centrality tuple of node ``v``."""
    ng = neighborhood_graph(g, v)
    degree = ng.node_count
    components = connected_components(ng).component_count
    if components == 1 and degree >= 2:
        ratio = spectral_acr(ng)
    else:
        ratio = 0.0
    return NbncTuple(components=components, acr=ratio, degree=degree)


def all_nbnc_tuples(g: Graph) -> list[NbncTuple]:
    """Centrality tuples for every node."""
    return [nbnc_tuple(g, v) for v in range(g.node_count)]


def compare_nbnc(a: NbncTuple, b: NbncTuple) -> int:
    """Rank comparison: > 0 if ``a`` ranks higher, < 0 if ``b`` does, 0 if equal.

    Criteria, in order: more neighborhood components wins; lower ACR
    wins; larger degree wins; otherwise equal.
    """
    if a.components != b.components:
        return 1 if a.components > b.components else -1
    qa, qb = _acr_key(a.acr), _acr_key(b.acr)
    if qa != qb:
        return 1 if qa < qb else -1
    if a.degree != b.degree:
        return 1 if a.degree > b.degree else -1
    return 0


def degree_centrality(g: Graph) -> list[int]:
    """Degree of every node."""
    return [len(nbrs) for nbrs in g.adjacency]


def _rank_key(g: Graph, strategy: Strategy, v: int, tuples: list[NbncTuple]):
    if strategy is Strategy.NBNC:
        t = tuples[v]
        return (-t.components, _acr_key(t.acr), -t.degree)
    return (-len(g.adjacency[v]),)


def rank_nodes(g: Graph, strategy: Strategy) -> Ranking:
    """Rank all nodes under ``strategy``, highest first.

    Nodes with equal keys form one tie group; within a group (and at
    any selection cutoff) the lower node ID comes first.
    """
    tuples = all_nbnc_tuples(g) if strategy is Strategy.NBNC else []
    order = sorted(range(g.node_count), key=lambda v: (_rank_key(g, strategy, v, tuples), v))
    groups: list[tuple[int, ...]] = []
    current: list[int] = []
    current_key = None
    for v in order:
        key = _rank_key(g, strategy, v, tuples)
        if current and key != current_key:
            groups.append(tuple(current))
            current = []
        current.append(v)
        current_key = key
    if current:
        groups.append(tuple(current))
    return Ranking(order=tuple(order), tie_groups=tuple(groups))


def vaccinee_count(node_count: int, fraction: float) -> int:
    """Round-half-up node budget for a vaccination fraction."""
    if not 0.0 <= fraction <= 1.0:
        raise ValueError(f"vaccination fraction must be in [0, 1], got {fraction}")
    return min(node_count, int(fraction * node_count + 0.5))


def select_vaccinees(g: Graph, strategy: Strategy, fraction: float) -> frozenset[int]:
    """Top-ranked nodes covering ``fraction`` of the graph.

    The budget is round-half-up of fraction * node_count; the set is
    a prefix of :func:`rank_nodes` order, so budgets for nested
    fractions are nested sets.
    """
    k = vaccinee_count(g.node_count, fraction)
    return frozenset(rank_nodes(g, strategy).order[:k])
