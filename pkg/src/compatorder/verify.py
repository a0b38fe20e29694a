"""Solution checking: direct sink/source scan and the residual-graph route.

A labeled ordering solves an instance when every vertex s_i with label l
has no out-neighbor in A_l among {s_i, ..., s_n} and no in-neighbor in B_l
among {s_1, ..., s_i}.  Equivalently, every arc of the residual graph
(arc u->v kept iff u->v is in A_{label(u)} or in B_{label(v)}) points from
a later position to an earlier one, i.e. the reversed ordering is a
topological order of the residual graph.  Both routes are implemented and
cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Arc, Digraph, InputError, Instance, LabeledOrdering, induced_instance


@dataclass(frozen=True)
class Violation:
    """First reason a labeled ordering fails, in position order.

    kind is one of MissingVertex, DuplicateVertex, LabelOutOfRange,
    SinkViolation, SourceViolation.  SinkViolation carries an arc
    s_i -> s_j with j > i in A_{l_i}; SourceViolation carries an arc
    s_j -> s_i with j < i in B_{l_i}.  MissingVertex reports a vertex
    absent from the instance or, with require_full, an instance vertex
    absent from the ordering (position is then len(order)).
    """

    kind: str
    vertex: str
    witness_arc: Arc | None = None
    position: int = 0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertex": self.vertex,
            "witness_arc": list(self.witness_arc) if self.witness_arc else None,
            "position": self.position,
        }


def verify_direct(
    inst: Instance, sol: LabeledOrdering, require_full: bool = True
) -> Violation | None:
    """Check a labeled ordering against the sink/source definition.

    Returns None when valid, else the first Violation in position order
    (structural before constraint checks at a position; at one position a
    sink violation is reported before a source violation, ties among
    witness arcs broken lexicographically).

    With require_full=False the constraints range only over the vertices
    present in the ordering (the instance is induced on them), matching
    the bounded variant.
    """
    pos: dict[str, int] = {}
    for i, v in enumerate(sol.order):
        if not inst.has_vertex(v):
            return Violation("MissingVertex", v, None, i)
        if v in pos:
            return Violation("DuplicateVertex", v, None, i)
        pos[v] = i
    for i, label in enumerate(sol.labels):
        if not 1 <= label <= inst.k:
            return Violation("LabelOutOfRange", sol.order[i], None, i)

    for i, (v, label) in enumerate(zip(sol.order, sol.labels)):
        a = inst.a_graph(label)
        b = inst.b_graph(label)
        sink_witness: Arc | None = None
        for w in a.out_neighbors(v):
            j = pos.get(w)
            if j is None:
                continue  # outside the ordering: never binds (full variant fails
                # the permutation check below instead)
            if j > i:
                arc = (v, w)
                if sink_witness is None or arc < sink_witness:
                    sink_witness = arc
        if sink_witness is not None:
            return Violation("SinkViolation", v, sink_witness, i)
        source_witness: Arc | None = None
        for w in b.in_neighbors(v):
            j = pos.get(w)
            if j is not None and j < i:
                arc = (w, v)
                if source_witness is None or arc < source_witness:
                    source_witness = arc
        if source_witness is not None:
            return Violation("SourceViolation", v, source_witness, i)

    if require_full and len(sol.order) != len(inst.vertices):
        for v in inst.vertices:
            if v not in pos:
                return Violation("MissingVertex", v, None, len(sol.order))
    return None


def residual_graph(inst: Instance, sol: LabeledOrdering) -> Digraph:
    """Digraph keeping arc s_i -> s_j iff it lies in A_{l_i} or in B_{l_j}.

    Defined for full labeled orderings of the instance's vertices.
    """
    _require_full_wellformed(inst, sol)
    label_of = dict(zip(sol.order, sol.labels))
    arcs = []
    for v, label in label_of.items():
        for w in inst.a_graph(label).out_neighbors(v):
            arcs.append((v, w))
        for u in inst.b_graph(label).in_neighbors(v):
            arcs.append((u, v))
    return Digraph(inst.vertices, arcs)


def verify_residual(inst: Instance, sol: LabeledOrdering) -> bool:
    """Check a labeled ordering via the residual graph.

    Valid iff every residual arc points from a later position to an
    earlier one, i.e. the reversed ordering is a topological order of
    the residual graph (which in particular is then acyclic).
    """
    res = residual_graph(inst, sol)
    pos = {v: i for i, v in enumerate(sol.order)}
    return all(pos[h] < pos[t] for t, h in res.arcs)


def _require_full_wellformed(inst: Instance, sol: LabeledOrdering) -> None:
    if len(sol.order) != len(inst.vertices) or set(sol.order) != set(inst.vertices):
        raise InputError("residual characterization needs a full ordering of the vertex set")
    if len(set(sol.order)) != len(sol.order):
        raise InputError("ordering repeats a vertex")
    for label in sol.labels:
        if not 1 <= label <= inst.k:
            raise InputError(f"label {label} out of range 1..{inst.k}")


def verify(inst: Instance, sol: LabeledOrdering, require_full: bool = True) -> Violation | None:
    """Alias for verify_direct, the primary checking route."""
    return verify_direct(inst, sol, require_full=require_full)
