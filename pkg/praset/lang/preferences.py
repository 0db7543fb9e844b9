"""Validation of the preference order over rules."""

from typing import FrozenSet, List, Tuple

import networkx as nx

from praset.error_handling import PreferenceCycle, UnknownRuleInPrefer
from praset.lang.syntax import PrioritizedProgram

Order = FrozenSet[Tuple[str, str]]


def preference_graph(program: PrioritizedProgram) -> nx.DiGraph:
    """Directed graph with an edge ``less -> more`` per declared pair."""
    graph = nx.DiGraph()
    graph.add_nodes_from(program.names)
    for less, more in sorted(program.prefers):
        for name in (less, more):
            if name not in graph:
                raise UnknownRuleInPrefer(name)
        graph.add_edge(less, more)
    return graph


def validate_preferences(program: PrioritizedProgram) -> Order:
    """Return the transitive closure of the declared preferences.

    Raises:
        UnknownRuleInPrefer: If a pair names a missing rule
        PreferenceCycle: If the closure is not irreflexive
    """
    graph = preference_graph(program)
    closure = nx.transitive_closure(graph, reflexive=False)
    if any(u == v for u, v in closure.edges):
        raise PreferenceCycle(_shortest_cycle(graph))
    return frozenset(closure.edges)


def _shortest_cycle(graph: nx.DiGraph) -> List[str]:
    cycle = min(nx.simple_cycles(graph), key=lambda c: (len(c), sorted(c)))
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def less_preferred(order: Order, name: str) -> FrozenSet[str]:
    """Names of the rules strictly below ``name``."""
    return frozenset(less for less, more in order if more == name)
