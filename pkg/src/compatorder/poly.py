"""Polynomial-time procedures: topological sort, the k=1 solver, and the
single-pair trivial-yes scan for general k.

A single-pair instance is solvable exactly when the union of A_1 and B_1
is acyclic, and the reverse of a topological order of that union (all
labels 1) is then a witness.  For general k, any pair (A_l, B_l) with an
acyclic union yields a uniform-label witness the same way; when no pair
qualifies the instance is NOT thereby decided.
"""

from __future__ import annotations

import heapq

from .model import Digraph, InputError, Instance, LabeledOrdering, union_graph


def topo_order(g: Digraph) -> list[str] | None:
    """Kahn's algorithm; None when the graph has a directed cycle.

    Ready vertices are processed in declaration order, so the output is
    deterministic.
    """
    n = len(g.vertices)
    index = {v: i for i, v in enumerate(g.vertices)}
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for t, h in g.arcs:
        out[index[t]].append(index[h])
        indeg[index[h]] += 1
    for lst in out:
        lst.sort()
    # min-heap on declaration index: among ready vertices the earliest
    # declared one is emitted first
    ready = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(ready)
    result: list[int] = []
    while ready:
        i = heapq.heappop(ready)
        result.append(i)
        for j in out[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(result) != n:
        return None
    return [g.vertices[i] for i in result]


def solve_k1(inst: Instance) -> LabeledOrdering | None:
    """Decide a k=1 instance in O(n + m).

    Yes iff the union of A_1 and B_1 is acyclic; the witness is the
    reversed topological order of the union with all labels 1.
    """
    if inst.k != 1:
        raise InputError(f"solve_k1 needs k=1, got k={inst.k}")
    a, b = inst.pairs[0]
    topo = topo_order(union_graph([a, b]))
    if topo is None:
        return None
    order = list(reversed(topo))
    return LabeledOrdering(order, [1] * len(order))


def find_trivial_pair(inst: Instance) -> tuple[int, LabeledOrdering] | None:
    """Scan labels 1..k for a pair whose union is acyclic.

    Returns (label, witness) for the smallest qualifying label, where the
    witness orders all vertices by the reversed topological order of that
    pair's union with the uniform label.  None means no pair qualifies;
    the instance may still be solvable with mixed labels, so callers must
    fall through to a complete solver.
    """
    for label in range(1, inst.k + 1):
        a, b = inst.pairs[label - 1]
        topo = topo_order(union_graph([a, b]))
        if topo is not None:
            order = list(reversed(topo))
            return label, LabeledOrdering(order, [label] * len(order))
    return None
