"""Complete search for general k, plus the bounded-subset variant and a
solution enumerator used as the project-wide oracle.

The ordering is built front to back.  A candidate (v, l) may take the
next position exactly when all A_l out-neighbors of v are already placed
and no B_l in-neighbor of v is already placed; prefixes built under this
rule are precisely the prefixes of valid labeled orderings, so the search
is sound and complete.  Whether a prefix can be completed depends only on
the SET of placed vertices, which allows memoizing dead sets without
changing the first witness found.

Two propagation rules prune the search up front:
  * a label l is impossible for v when some w has v->w in A_l and
    w->v in B_l (both constraints cannot hold at once);
  * w must precede v whenever the arc v->w lies in all k A graphs or in
    all k B graphs (every label choice for the bound endpoint forces it).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import InputError, Instance, LabeledOrdering
from .verify import verify_direct


class SearchBudgetExceeded(Exception):
    """Raised when a node cutoff stops the search before an answer is known."""


@dataclass(frozen=True)
class PropagationFacts:
    forbidden_labels: dict[str, frozenset[int]]
    forced_precedences: frozenset[tuple[str, str]]  # (must-come-first, must-come-later)
    infeasible: bool = False


def propagate(inst: Instance) -> PropagationFacts:
    """Derive forbidden labels and forced precedences from the arc structure."""
    forbidden: dict[str, set[int]] = {v: set() for v in inst.vertices}
    for label in range(1, inst.k + 1):
        a, b = inst.pairs[label - 1]
        b_arcs = b.arcs
        for v, w in a.arcs:
            if (w, v) in b_arcs:
                forbidden[v].add(label)

    forced: set[tuple[str, str]] = set()
    common_a = set(inst.pairs[0][0].arcs)
    common_b = set(inst.pairs[0][1].arcs)
    for a, b in inst.pairs[1:]:
        common_a &= a.arcs
        common_b &= b.arcs
    for v, w in common_a | common_b:
        forced.add((w, v))

    infeasible = any(len(f) == inst.k for f in forbidden.values())
    if not infeasible and forced:
        infeasible = _precedence_cycle(inst, forced)
    return PropagationFacts(
        {v: frozenset(f) for v, f in forbidden.items()}, frozenset(forced), infeasible
    )


def _precedence_cycle(inst: Instance, forced: set[tuple[str, str]]) -> bool:
    indeg = {v: 0 for v in inst.vertices}
    out: dict[str, list[str]] = {v: [] for v in inst.vertices}
    for first, later in forced:
        out[first].append(later)
        indeg[later] += 1
    ready = [v for v in inst.vertices if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen != len(inst.vertices)


@dataclass
class _SearchState:
    inst: Instance
    facts: PropagationFacts | None
    max_nodes: int | None
    nodes: int = 0
    dead: set[frozenset[str]] = field(default_factory=set)

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SearchBudgetExceeded(f"node budget {self.max_nodes} exhausted")


def _legal(inst: Instance, v: str, label: int, placed: set[str]) -> bool:
    a = inst.a_graph(label)
    b = inst.b_graph(label)
    for w in a.out_neighbors(v):
        if w not in placed:
            return False
    for u in b.in_neighbors(v):
        if u in placed:
            return False
    return True


def solve_exact(
    inst: Instance,
    max_nodes: int | None = None,
    use_propagation: bool = True,
) -> LabeledOrdering | None:
    """Complete, deterministic solver.

    Returns the first witness in search order (vertices by declaration
    index, labels ascending, positions front to back) or None.  Raises
    SearchBudgetExceeded when max_nodes decision nodes are exceeded.
    """
    facts = propagate(inst) if use_propagation else None
    if facts is not None and facts.infeasible:
        return None

    blockers: dict[str, list[str]] = {v: [] for v in inst.vertices}
    if facts is not None:
        for first, later in facts.forced_precedences:
            blockers[later].append(first)

    state = _SearchState(inst, facts, max_nodes)
    order: list[str] = []
    labels: list[int] = []
    placed: set[str] = set()

    def extend() -> bool:
        if len(order) == len(inst.vertices):
            return True
        key = frozenset(placed)
        if key in state.dead:
            return False
        for v in inst.vertices:
            if v in placed:
                continue
            if any(b not in placed for b in blockers[v]):
                continue
            forb = state.facts.forbidden_labels[v] if state.facts else ()
            for label in range(1, inst.k + 1):
                if label in forb:
                    continue
                if not _legal(inst, v, label, placed):
                    continue
                state.tick()
                order.append(v)
                labels.append(label)
                placed.add(v)
                if extend():
                    return True
                placed.remove(v)
                order.pop()
                labels.pop()
        state.dead.add(key)
        return False

    if extend():
        return LabeledOrdering(order, labels)
    return None


def enumerate_solutions(inst: Instance, cap: int) -> list[LabeledOrdering]:
    """All solutions in deterministic search order, truncated at cap.

    Intended for small instances; the output order matches solve_exact's
    exploration order, so the first element equals solve_exact's witness.
    """
    if cap < 1:
        raise InputError(f"cap must be at least 1, got {cap}")
    found: list[LabeledOrdering] = []
    order: list[str] = []
    labels: list[int] = []
    placed: set[str] = set()

    def extend() -> bool:
        if len(order) == len(inst.vertices):
            found.append(LabeledOrdering(order, labels))
            return len(found) >= cap
        for v in inst.vertices:
            if v in placed:
                continue
            for label in range(1, inst.k + 1):
                if not _legal(inst, v, label, placed):
                    continue
                order.append(v)
                labels.append(label)
                placed.add(v)
                stop = extend()
                placed.remove(v)
                order.pop()
                labels.pop()
                if stop:
                    return True
        return False

    extend()
    return found


def solve_bounded(inst: Instance, b: int) -> LabeledOrdering | None:
    """Find a labeled ordering of some vertex subset with length >= b.

    Constraints only concern vertices inside the ordering.  Placing (v, l)
    requires: no already-placed B_l in-neighbor, and no already-placed
    vertex u whose own label put v among its pending A out-neighbors; the
    A out-neighbors of v that are still unplaced must simply never be
    added later, which the search tracks as a blocked set.  First solution
    in deterministic order; nothing is maximized.
    """
    if b < 0:
        raise InputError(f"bound must be nonnegative, got {b}")
    n = len(inst.vertices)
    if b > n:
        return None
    if b == 0:
        return LabeledOrdering([], [])

    order: list[str] = []
    labels: list[int] = []
    placed: set[str] = set()
    dead: set[tuple[frozenset[str], frozenset[str]]] = set()

    def extend(blocked: frozenset[str]) -> bool:
        if len(order) >= b:
            return True
        key = (frozenset(placed), blocked)
        if key in dead:
            return False
        available = [v for v in inst.vertices if v not in placed and v not in blocked]
        if len(order) + len(available) < b:
            dead.add(key)
            return False
        for v in available:
            for label in range(1, inst.k + 1):
                a = inst.a_graph(label)
                bg = inst.b_graph(label)
                if any(u in placed for u in bg.in_neighbors(v)):
                    continue
                # placed A out-neighbors are fine (they are earlier); the
                # unplaced ones must stay out of the ordering
                newly_blocked = frozenset(
                    w for w in a.out_neighbors(v) if w not in placed
                )
                order.append(v)
                labels.append(label)
                placed.add(v)
                if extend(blocked | newly_blocked):
                    return True
                placed.remove(v)
                order.pop()
                labels.pop()
        dead.add(key)
        return False

    if extend(frozenset()):
        sol = LabeledOrdering(order, labels)
        assert verify_direct(inst, sol, require_full=False) is None
        return sol
    return None
