"""Core domain types: instances, labeled orderings, graph operators, JSON formats.

An instance is a vertex set together with k pairs of directed graphs
(A_1, B_1), ..., (A_k, B_k), all sharing that vertex set.  A candidate
solution is a labeled ordering: a sequence of vertices with one label in
[1..k] per position.

All types are immutable values after construction.  Iteration order is
always vertex declaration order, so every algorithm built on top of them
is deterministic.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence


class InputError(ValueError):
    """Malformed input: bad file contents, invalid construction arguments."""


Arc = tuple[str, str]


def _check_vertices(vertices: Sequence[str]) -> tuple[str, ...]:
    verts = tuple(vertices)
    seen = set()
    for v in verts:
        if not isinstance(v, str) or not v:
            raise InputError(f"vertex ids must be nonempty strings, got {v!r}")
        if v in seen:
            raise InputError(f"duplicate vertex id {v!r}")
        seen.add(v)
    return verts


class Digraph:
    """A directed graph on an ordered vertex list.

    Self-loops are rejected.  Parallel duplicate arcs collapse to one;
    digons (both uv and vu) are allowed and meaningful.
    """

    __slots__ = ("vertices", "arcs", "_index", "_out", "_in")

    def __init__(self, vertices: Sequence[str], arcs: Iterable[Arc]):
        self.vertices = _check_vertices(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        arcset = set()
        for arc in arcs:
            t, h = arc
            if t not in self._index or h not in self._index:
                raise InputError(f"arc ({t!r}, {h!r}) has an endpoint outside the vertex set")
            if t == h:
                raise InputError(f"self-loop on {t!r} is rejected")
            arcset.add((t, h))
        self.arcs = frozenset(arcset)
        self._out: dict[str, tuple[str, ...]] | None = None
        self._in: dict[str, tuple[str, ...]] | None = None

    def _build_adj(self) -> None:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        inn: dict[str, list[str]] = {v: [] for v in self.vertices}
        idx = self._index
        for t, h in sorted(self.arcs, key=lambda a: (idx[a[0]], idx[a[1]])):
            out[t].append(h)
            inn[h].append(t)
        self._out = {v: tuple(ns) for v, ns in out.items()}
        self._in = {v: tuple(ns) for v, ns in inn.items()}

    def out_neighbors(self, v: str) -> tuple[str, ...]:
        if self._out is None:
            self._build_adj()
        return self._out[v]

    def in_neighbors(self, v: str) -> tuple[str, ...]:
        if self._in is None:
            self._build_adj()
        return self._in[v]

    def index_of(self, v: str) -> int:
        return self._index[v]

    def sorted_arcs(self) -> list[Arc]:
        """Arcs in the canonical serialization order (lexicographic tail, head)."""
        return sorted(self.arcs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph({len(self.vertices)} vertices, {len(self.arcs)} arcs)"


class Instance:
    """A vertex set plus k pairs of directed graphs (A_i, B_i) on it."""

    __slots__ = ("k", "vertices", "pairs", "_index")

    def __init__(self, k: int, vertices: Sequence[str], pairs: Sequence[tuple[Digraph, Digraph]]):
        if not isinstance(k, int) or k < 1:
            raise InputError(f"k must be a positive integer, got {k!r}")
        self.vertices = _check_vertices(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        pairs = tuple((a, b) for a, b in pairs)
        if len(pairs) != k:
            raise InputError(f"expected {k} graph pairs, got {len(pairs)}")
        for i, (a, b) in enumerate(pairs, start=1):
            if a.vertices != self.vertices or b.vertices != self.vertices:
                raise InputError(f"graph pair {i} does not share the instance vertex list")
        self.k = k
        self.pairs = pairs

    @property
    def n(self) -> int:
        return len(self.vertices)

    def a_graph(self, label: int) -> Digraph:
        return self.pairs[label - 1][0]

    def b_graph(self, label: int) -> Digraph:
        return self.pairs[label - 1][1]

    def index_of(self, v: str) -> int:
        return self._index[v]

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Instance)
            and self.k == other.k
            and self.vertices == other.vertices
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return hash((self.k, self.vertices, self.pairs))

    def __repr__(self) -> str:
        return f"Instance(k={self.k}, n={len(self.vertices)})"


class LabeledOrdering:
    """A sequence of vertices with one label per position.

    Construction only checks shape (equal lengths, integer labels).
    Semantic invariants (no repeated vertex, labels in [1..k]) are checked
    by the verifier, which reports them as structural violations.
    """

    __slots__ = ("order", "labels")

    def __init__(self, order: Sequence[str], labels: Sequence[int]):
        self.order = tuple(order)
        self.labels = tuple(labels)
        if len(self.order) != len(self.labels):
            raise InputError(
                f"order has {len(self.order)} vertices but labels has {len(self.labels)} entries"
            )
        for v in self.order:
            if not isinstance(v, str) or not v:
                raise InputError(f"ordering entries must be nonempty strings, got {v!r}")
        for l in self.labels:
            if not isinstance(l, int) or isinstance(l, bool):
                raise InputError(f"labels must be integers, got {l!r}")

    def __len__(self) -> int:
        return len(self.order)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LabeledOrdering)
            and self.order == other.order
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.order, self.labels))

    def __repr__(self) -> str:
        return f"LabeledOrdering(order={self.order!r}, labels={self.labels!r})"


class LabeledDigraph:
    """A digraph whose arcs carry nonempty tag sets like {"A1", "B2"}."""

    __slots__ = ("vertices", "arcs", "_index")

    def __init__(self, vertices: Sequence[str], arcs: Mapping[Arc, Iterable[str]]):
        self.vertices = _check_vertices(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        built: dict[Arc, frozenset[str]] = {}
        for (t, h), tags in arcs.items():
            if t not in self._index or h not in self._index:
                raise InputError(f"arc ({t!r}, {h!r}) has an endpoint outside the vertex set")
            if t == h:
                raise InputError(f"self-loop on {t!r} is rejected")
            tagset = frozenset(tags)
            if not tagset:
                raise InputError(f"arc ({t!r}, {h!r}) carries an empty label set")
            built[(t, h)] = tagset
        self.arcs = built

    def index_of(self, v: str) -> int:
        return self._index[v]

    def strip_labels(self) -> Digraph:
        return Digraph(self.vertices, self.arcs.keys())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LabeledDigraph)
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __repr__(self) -> str:
        return f"LabeledDigraph({len(self.vertices)} vertices, {len(self.arcs)} arcs)"


def label_tag(kind: str, label: int) -> str:
    """Tag for membership of an arc in A_label or B_label, e.g. ("A", 2) -> "A2"."""
    if kind not in ("A", "B"):
        raise InputError(f"tag kind must be 'A' or 'B', got {kind!r}")
    return f"{kind}{label}"


def parse_tag(tag: str) -> tuple[str, int]:
    """Inverse of label_tag: "B2" -> ("B", 2)."""
    if len(tag) < 2 or tag[0] not in ("A", "B") or not tag[1:].isdigit():
        raise InputError(f"bad arc label tag {tag!r}")
    label = int(tag[1:])
    if label < 1:
        raise InputError(f"bad arc label tag {tag!r}")
    return tag[0], label


# ---------------------------------------------------------------------------
# Operators


def induced_instance(inst: Instance, subset: Sequence[str]) -> Instance:
    """Restrict an instance to an ordered vertex subset.

    Each A_i/B_i keeps exactly the arcs with both endpoints in the subset;
    k is unchanged.
    """
    sub = _check_vertices(subset)
    for v in sub:
        if not inst.has_vertex(v):
            raise InputError(f"vertex {v!r} is not in the instance")
    keep = set(sub)
    pairs = []
    for a, b in inst.pairs:
        ra = Digraph(sub, (arc for arc in a.arcs if arc[0] in keep and arc[1] in keep))
        rb = Digraph(sub, (arc for arc in b.arcs if arc[0] in keep and arc[1] in keep))
        pairs.append((ra, rb))
    return Instance(inst.k, sub, pairs)


def union_graph(graphs: Sequence[Digraph], directed: bool = True) -> Digraph:
    """Union of graphs on a shared vertex list.

    With directed=False the result is symmetric: whenever uv or vu occurs
    in any operand, both uv and vu are present.
    """
    if not graphs:
        raise InputError("union of an empty graph list is undefined")
    verts = graphs[0].vertices
    for g in graphs[1:]:
        if g.vertices != verts:
            raise InputError("union operands must share one vertex list")
    arcs: set[Arc] = set()
    for g in graphs:
        arcs |= g.arcs
    if not directed:
        arcs |= {(h, t) for t, h in arcs}
    return Digraph(verts, arcs)


def labeled_union(inst: Instance) -> LabeledDigraph:
    """Union of all 2k graphs, each arc tagged by the graphs containing it."""
    arcs: dict[Arc, set[str]] = {}
    for label in range(1, inst.k + 1):
        for kind, g in (("A", inst.a_graph(label)), ("B", inst.b_graph(label))):
            tag = label_tag(kind, label)
            for arc in g.arcs:
                arcs.setdefault(arc, set()).add(tag)
    return LabeledDigraph(inst.vertices, arcs)


def reverse_graph(g: Digraph) -> Digraph:
    """Flip every arc; vertices unchanged."""
    return Digraph(g.vertices, ((h, t) for t, h in g.arcs))


# ---------------------------------------------------------------------------
# JSON formats
#
# Writers emit keys in the documented order and sort arcs lexicographically
# (tail, then head) so outputs are byte-stable.  Parsers reject unknown keys.


def _require_keys(obj: Mapping, allowed: Sequence[str], what: str) -> None:
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object")
    unknown = set(obj) - set(allowed)
    if unknown:
        raise InputError(f"unknown fields in {what}: {sorted(unknown)}")


def _parse_arc_list(raw, what: str) -> list[Arc]:
    if not isinstance(raw, list):
        raise InputError(f"{what} must be a list of [tail, head] pairs")
    arcs = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise InputError(f"{what} entries must be 2-element arrays, got {item!r}")
        t, h = item
        if not isinstance(t, str) or not isinstance(h, str):
            raise InputError(f"{what} endpoints must be strings, got {item!r}")
        arcs.append((t, h))
    return arcs


def instance_to_dict(inst: Instance) -> dict:
    return {
        "k": inst.k,
        "vertices": list(inst.vertices),
        "pairs": [
            {"A": [list(a) for a in pa.sorted_arcs()], "B": [list(a) for a in pb.sorted_arcs()]}
            for pa, pb in inst.pairs
        ],
    }


def instance_from_dict(obj) -> Instance:
    _require_keys(obj, ("k", "vertices", "pairs"), "instance")
    for key in ("k", "vertices", "pairs"):
        if key not in obj:
            raise InputError(f"instance is missing field {key!r}")
    k = obj["k"]
    if not isinstance(k, int) or isinstance(k, bool):
        raise InputError("instance field 'k' must be an integer")
    vertices = obj["vertices"]
    if not isinstance(vertices, list):
        raise InputError("instance field 'vertices' must be a list")
    raw_pairs = obj["pairs"]
    if not isinstance(raw_pairs, list):
        raise InputError("instance field 'pairs' must be a list")
    pairs = []
    for i, rp in enumerate(raw_pairs, start=1):
        _require_keys(rp, ("A", "B"), f"pair {i}")
        if "A" not in rp or "B" not in rp:
            raise InputError(f"pair {i} must have fields 'A' and 'B'")
        a = Digraph(vertices, _parse_arc_list(rp["A"], f"pair {i} A arcs"))
        b = Digraph(vertices, _parse_arc_list(rp["B"], f"pair {i} B arcs"))
        pairs.append((a, b))
    return Instance(k, vertices, pairs)


def ordering_to_dict(sol: LabeledOrdering) -> dict:
    return {"order": list(sol.order), "labels": list(sol.labels)}


def ordering_from_dict(obj) -> LabeledOrdering:
    _require_keys(obj, ("order", "labels"), "labeled ordering")
    for key in ("order", "labels"):
        if key not in obj:
            raise InputError(f"labeled ordering is missing field {key!r}")
    if not isinstance(obj["order"], list) or not isinstance(obj["labels"], list):
        raise InputError("labeled ordering fields must be lists")
    return LabeledOrdering(obj["order"], obj["labels"])


def digraph_to_dict(g: Digraph) -> dict:
    return {"vertices": list(g.vertices), "arcs": [list(a) for a in g.sorted_arcs()]}


def digraph_from_dict(obj) -> Digraph:
    _require_keys(obj, ("vertices", "arcs"), "digraph")
    for key in ("vertices", "arcs"):
        if key not in obj:
            raise InputError(f"digraph is missing field {key!r}")
    return Digraph(obj["vertices"], _parse_arc_list(obj["arcs"], "digraph arcs"))


def dump_json(obj: dict) -> str:
    """Canonical JSON text: preserves key insertion order, UTF-8 friendly."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ": "), indent=None) + "\n"


def load_json(text: str, what: str = "input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} is not valid JSON: {exc}") from exc
