"""
Eliminability of generalized patterns.

A generalized pattern is eliminable if its non-hole entries can be ordered
so that every entry comes before all other non-hole entries of its row, or
before all other non-hole entries of its column. Such patterns have the
quasirandom density 1/m! in every Latinon, quasirandom or not.

The decision labels each entry R (first in its row) or C (first in its
column), with at most one R per row and one C per column, and looks for a
labelling whose precedence digraph is acyclic.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from src.core.errors import InvalidPattern
from src.core.patterns import AnyPattern, GeneralizedPattern, as_generalized

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class EliminabilityResult:
    """
    witness: entry values in elimination order (None if not eliminable)
    labels: entry value -> "R" or "C" (None if not eliminable)
    """
    eliminable: bool
    witness: Optional[Tuple[int, ...]] = None
    labels: Optional[Dict[int, str]] = None


def _cells(gp: GeneralizedPattern) -> Dict[Cell, int]:
    return {
        (i, j): v
        for i, row in enumerate(gp.entries)
        for j, v in enumerate(row)
        if v is not None
    }


def _labellings(gp: GeneralizedPattern, cells: Dict[Cell, int]) -> Iterator[Dict[Cell, str]]:
    """Labellings with at most one R per row and at most one C per column."""
    per_row = [[c for c in cells if c[0] == i] for i in range(gp.k)]
    for r_choice in product(*([None] + row for row in per_row)):
        r_cells = {c for c in r_choice if c is not None}
        c_cols = [c[1] for c in cells if c not in r_cells]
        if len(c_cols) != len(set(c_cols)):
            continue
        yield {c: ("R" if c in r_cells else "C") for c in cells}


def precedence_graph(cells: Dict[Cell, int], labels: Dict[Cell, str]) -> nx.DiGraph:
    """Arcs from each entry to the entries it must precede under the labelling."""
    graph = nx.DiGraph()
    graph.add_nodes_from(cells.values())
    for cell, label in labels.items():
        axis = 0 if label == "R" else 1
        for other in cells:
            if other != cell and other[axis] == cell[axis]:
                graph.add_edge(cells[cell], cells[other])
    return graph


def is_eliminable(pattern: AnyPattern) -> EliminabilityResult:
    """
    Decide eliminability by label search.

    The witness is the lexicographically smallest topological order of
    the first acyclic labelling found.
    """
    gp = as_generalized(pattern)
    cells = _cells(gp)
    tried = 0
    for labels in _labellings(gp, cells):
        tried += 1
        graph = precedence_graph(cells, labels)
        if nx.is_directed_acyclic_graph(graph):
            witness = tuple(nx.lexicographical_topological_sort(graph))
            return EliminabilityResult(
                True, witness, {cells[c]: lab for c, lab in sorted(labels.items())}
            )
    logger.debug("no acyclic labelling among %d for\n%s", tried, gp)
    return EliminabilityResult(False)


def verify_elimination_order(pattern: AnyPattern, order: Sequence[int]) -> bool:
    """Check an ordering of the entry values directly against the definition."""
    gp = as_generalized(pattern)
    cells = _cells(gp)
    if sorted(order) != sorted(cells.values()):
        return False
    position = {v: i for i, v in enumerate(order)}
    for (i, j), v in cells.items():
        row_mates = [w for (a, _), w in cells.items() if a == i and w != v]
        col_mates = [w for (_, b), w in cells.items() if b == j and w != v]
        first_in_row = all(position[w] > position[v] for w in row_mates)
        first_in_col = all(position[w] > position[v] for w in col_mates)
        if not (first_in_row or first_in_col):
            return False
    return True


def is_eliminable_bruteforce(pattern: AnyPattern) -> EliminabilityResult:
    """Try every ordering of the entries; exponential, for cross-checking only."""
    gp = as_generalized(pattern)
    values = sorted(_cells(gp).values())
    for order in permutations(values):
        if verify_elimination_order(gp, order):
            return EliminabilityResult(True, tuple(order))
    return EliminabilityResult(False)


def _covering_cell_sets(k: int, l: int, m: int) -> Iterator[Tuple[Cell, ...]]:
    grid = [(i, j) for i in range(k) for j in range(l)]
    for chosen in combinations(grid, m):
        if {c[0] for c in chosen} == set(range(k)) and {c[1] for c in chosen} == set(range(l)):
            yield chosen


def enumerate_small_generalized_patterns(
    max_entries: int = 4, max_side: int = 4
) -> Iterator[GeneralizedPattern]:
    """
    Every generalized pattern with at most max_entries non-hole entries,
    at most max_side rows and columns, and no all-hole row or column.
    """
    if max_entries < 1 or max_side < 1:
        raise InvalidPattern("max_entries and max_side must be positive")
    for k in range(1, max_side + 1):
        for l in range(1, max_side + 1):
            for m in range(max(k, l), min(max_entries, k * l) + 1):
                for chosen in _covering_cell_sets(k, l, m):
                    for values in permutations(range(1, m + 1)):
                        grid: List[List[Optional[int]]] = [[None] * l for _ in range(k)]
                        for (i, j), v in zip(chosen, values):
                            grid[i][j] = v
                        yield GeneralizedPattern.from_rows(grid)
