"""Safe components, normalization and the component graph."""
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, FrozenSet, Tuple

import networkx as nx

from .automaton import TNCW, Transition

if TYPE_CHECKING:
    from .minimizer import HRelation

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SafeDecomposition:
    """Partition of the states into the SCCs of the ᾱ-transition graph.

    Component ids follow a topological order of the component DAG, ties
    broken by smallest member state.
    """
    component_of: Tuple[int, ...]
    components: Tuple[Tuple[int, ...], ...]
    dag_edges: FrozenSet[Tuple[int, int]]

    def __len__(self) -> int:
        return len(self.components)

    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.components)


def safe_graph(a: TNCW) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(a.states)
    graph.add_edges_from((t.src, t.dst) for t in a.sorted_transitions() if not t.in_alpha)
    return graph


def safe_components(a: TNCW) -> SafeDecomposition:
    dag = nx.condensation(safe_graph(a))
    order = list(nx.lexicographical_topological_sort(dag, key=lambda c: min(dag.nodes[c]["members"])))
    renumber = {c: i for i, c in enumerate(order)}
    components = tuple(tuple(sorted(dag.nodes[c]["members"])) for c in order)
    component_of = [0] * a.num_states
    for i, members in enumerate(components):
        for q in members:
            component_of[q] = i
    dag_edges = frozenset((renumber[u], renumber[v]) for u, v in dag.edges)
    return SafeDecomposition(tuple(component_of), components, dag_edges)


def _crossing(a: TNCW, d: SafeDecomposition):
    return [
        t for t in a.transitions
        if not t.in_alpha and d.component_of[t.src] != d.component_of[t.dst]
    ]


def is_normal(a: TNCW) -> bool:
    """No ᾱ-transition connects two different safe components."""
    return not _crossing(a, safe_components(a))


def normalize(a: TNCW) -> TNCW:
    """Move every component-crossing ᾱ-transition into α, until stable."""
    while True:
        crossing = _crossing(a, safe_components(a))
        if not crossing:
            return a
        log.debug("Reclassifying %d component-crossing transitions as α", len(crossing))
        moved = frozenset(Transition(t.src, t.symbol, t.dst, True) for t in crossing)
        a = TNCW(a.alphabet, a.num_states, a.initial, (a.transitions - frozenset(crossing)) | moved)


def ergodic_components(d: SafeDecomposition, h: "HRelation") -> FrozenSet[int]:
    """One representative component per ergodic SCC of the graph of H over components.

    The representative is the component holding the smallest state id.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(d)))
    rows, cols = h.matrix.nonzero()
    graph.add_edges_from((int(i), int(j)) for i, j in zip(rows, cols))
    return frozenset(
        min(scc, key=lambda c: d.components[c][0])
        for scc in nx.attracting_components(graph)
    )
