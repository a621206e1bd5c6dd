"""The 168-vertex oriented graph on ordered pencils.

An arc carries one of the labels 1, 2, 0 (that cyclic order).  The arc
with label i keeps slot i of the source line, replaces the other two
slots by their companion points, and moves the base to the companion of
slot i.  Out-lists are stored in label order, so slot k of an out-list is
the arc with label LABELS[k].
"""

from __future__ import annotations

import json

import numpy as np

from .golden import ADJACENCY_ROWS, ROW_ORDER
from .pencils import DVertex, compact, enumerate_vertices, vertex_index

LABELS = (1, 2, 0)


def step(v: DVertex, label: int) -> DVertex:
    """The unique out-neighbor of v along the arc with the given label."""
    p = LABELS.index(label)
    th = v.thirds
    newline = tuple(v.line[k] if k == p else th[k] for k in range(3))
    return DVertex(th[p], newline)


def arc_label(u: DVertex, v: DVertex) -> int | None:
    """The label making all seven arc equations hold, or None.

    Slot successors follow the label order 1 -> 2 -> 0 -> 1: with p the
    slot of the label, s and r are the next and previous slots.
    """
    tu, tv = u.thirds, v.thirds
    for p, lab in enumerate(LABELS):
        s, r = (p + 1) % 3, (p + 2) % 3
        if (
            u.base == tv[p]
            and v.base == tu[p]
            and v.line[p] == u.line[p]
            and v.line[s] == tu[s]
            and v.line[r] == tu[r]
            and tv[s] == u.line[r]
            and tv[r] == u.line[s]
        ):
            return lab
    return None


class Digraph:
    """Immutable adjacency structure: ordered out-lists, derived in-lists."""

    __slots__ = ("n", "out", "inn")

    def __init__(self, out_lists):
        self.out = tuple(tuple(row) for row in out_lists)
        self.n = len(self.out)
        incoming = [[] for _ in range(self.n)]
        for u, row in enumerate(self.out):
            for w in row:
                incoming[w].append(u)
        self.inn = tuple(tuple(sorted(r)) for r in incoming)

    def arcs(self):
        for u, row in enumerate(self.out):
            for w in row:
                yield u, w

    def arc_count(self) -> int:
        return sum(len(row) for row in self.out)

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.out == other.out

    def __hash__(self):
        return hash(self.out)


def build_d() -> Digraph:
    """The full digraph on the 168 canonical vertices."""
    verts = enumerate_vertices()
    return Digraph(
        [tuple(vertex_index(step(v, lab)) for lab in LABELS) for v in verts]
    )


def adjacency_matrix(d: Digraph) -> np.ndarray:
    a = np.zeros((d.n, d.n), dtype=np.int8)
    for u, w in d.arcs():
        a[u, w] = 1
    return a


def with_retargeted_arc(d: Digraph, u: int, slot: int, target: int) -> Digraph:
    """Copy of d with one out-entry replaced; the fault-injection helper."""
    rows = [list(row) for row in d.out]
    rows[u][slot] = target
    return Digraph(rows)


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.inn)


def induced_subgraph(d: Digraph, vertices) -> Digraph:
    """Subgraph on the given vertices, reindexed in the order supplied."""
    keep = {v: i for i, v in enumerate(vertices)}
    return Digraph(
        [tuple(keep[w] for w in d.out[v] if w in keep) for v in vertices]
    )


def relabel(d: Digraph, mapping) -> Digraph:
    """Image of d under a vertex bijection, preserving out-list order."""
    rows = [None] * d.n
    for u, row in enumerate(d.out):
        rows[mapping[u]] = tuple(mapping[w] for w in row)
    return Digraph(rows)


def _reachable(out_lists, start: int) -> int:
    seen = bytearray(len(out_lists))
    seen[start] = 1
    frontier = [start]
    count = 1
    while frontier:
        nxt = []
        for u in frontier:
            for w in out_lists[u]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    nxt.append(w)
        frontier = nxt
    return count


def strongly_connected(d: Digraph) -> bool:
    """True iff the digraph has a single strong component."""
    if d.n == 0:
        return False
    return _reachable(d.out, 0) == d.n and _reachable(d.inn, 0) == d.n


def check_no_short_circuits(d: Digraph) -> bool:
    """Direct search: no directed circuits of length 1, 2 or 3."""
    for u, row in enumerate(d.out):
        for a in row:
            if a == u or u in d.out[a]:
                return False
            for b in d.out[a]:
                if b != u and u in d.out[b]:
                    return False
    return True


def short_circuit_matrix_check(d: Digraph) -> bool:
    """Independent oracle: traces of the first three adjacency powers vanish."""
    a = adjacency_matrix(d).astype(np.int64)
    a2 = a @ a
    return (
        int(np.trace(a)) == 0
        and int(np.trace(a2)) == 0
        and int(np.trace(a2 @ a)) == 0
    )


def canonical_cycle(cyc) -> tuple[int, int, int, int]:
    """Rotation of an oriented 4-cycle placing its minimal vertex first."""
    i = cyc.index(min(cyc))
    return tuple(cyc[i:]) + tuple(cyc[:i])


def enumerate_4cycles(d: Digraph) -> tuple[tuple[int, int, int, int], ...]:
    """Depth-first census of all oriented 4-cycles, canonically rotated.

    Makes no use of the label structure, so it doubles as an oracle for
    the orbit decomposition of the three label maps.
    """
    out = d.out
    found = []
    for v0 in range(d.n):
        for v1 in out[v0]:
            if v1 <= v0:
                continue
            for v2 in out[v1]:
                if v2 <= v0 or v2 == v1:
                    continue
                for v3 in out[v2]:
                    if v3 <= v0 or v3 == v1 or v3 == v2:
                        continue
                    if v0 in out[v3]:
                        found.append((v0, v1, v2, v3))
    return tuple(sorted(found))


def label_permutations(d: Digraph) -> dict[int, tuple[int, ...]]:
    """The map v -> out-neighbor for each label slot."""
    return {
        lab: tuple(row[k] for row in d.out) for k, lab in enumerate(LABELS)
    }


def step_orbit_cycles(d: Digraph) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Orbits of each label map, as canonically rotated vertex tuples.

    Orbits of any length are returned; callers check they all have
    length 4.
    """
    result = {}
    for lab, perm in label_permutations(d).items():
        if sorted(perm) != list(range(d.n)):
            raise ValueError(f"label {lab} map is not a permutation")
        seen = bytearray(d.n)
        orbits = []
        for v in range(d.n):
            if seen[v]:
                continue
            orb = [v]
            seen[v] = 1
            w = perm[v]
            while w != v:
                seen[w] = 1
                orb.append(w)
                w = perm[w]
            orbits.append(canonical_cycle(tuple(orb)) if len(orb) == 4 else tuple(orb))
        result[lab] = tuple(sorted(orbits))
    return result


def cycle_arc_cover(d: Digraph, cycles):
    """How often each arc is used by the given cycles.

    Returns (ok, witnesses): ok iff every arc of d is used exactly once
    and no cycle uses a non-arc; witnesses lists offending arcs.
    """
    counts = {arc: 0 for arc in d.arcs()}
    bad = []
    for cyc in cycles:
        for k in range(4):
            arc = (cyc[k], cyc[(k + 1) % 4])
            if arc in counts:
                counts[arc] += 1
            else:
                bad.append(arc)
    bad.extend(arc for arc, c in counts.items() if c != 1)
    return (not bad), sorted(set(bad))


def generated_rows() -> list[tuple[str, tuple[str, str, str]]]:
    """The base-0 adjacency rows computed from the arc rule."""
    rows = []
    for v in enumerate_vertices()[:24]:
        rows.append(
            (compact(v), tuple(compact(step(v, lab)) for lab in LABELS))
        )
    return rows


def _base_rows(d: Digraph | None):
    if d is None:
        return generated_rows()
    verts = enumerate_vertices()
    return [
        (compact(verts[i]), tuple(compact(verts[w]) for w in d.out[i]))
        for i in range(24)
    ]


def golden_sublist_diff(d: Digraph | None = None):
    """Differences between the generated base-0 rows and the golden table.

    Each entry is (row symbol, position, expected, got).  When a digraph
    is supplied its out-lists are diffed instead of the raw arc rule, so
    injected faults are located.
    """
    diffs = []
    for sym, entries in _base_rows(d):
        expected = ADJACENCY_ROWS[sym]
        for pos, (e, g) in enumerate(zip(expected, entries)):
            if e != g:
                diffs.append((sym, pos, e, g))
    return diffs


def golden_sublist_check(d: Digraph | None = None) -> bool:
    assert tuple(sym for sym, _ in generated_rows()) == ROW_ORDER
    return not golden_sublist_diff(d)


def format_table(d: Digraph | None = None) -> str:
    """The base-0 adjacency rows rendered one per line."""
    lines = [
        f"{sym} : {', '.join(entries)}"
        for sym, entries in _base_rows(d)
    ]
    return "\n".join(lines)


def to_json_dict(d: Digraph) -> dict:
    """JSON form: compact vertex symbols, labeled arcs, the 4-cycle census."""
    verts = enumerate_vertices()
    syms = [compact(v) for v in verts]
    arcs = [
        {"from": u, "to": w, "label": LABELS[k]}
        for u, row in enumerate(d.out)
        for k, w in enumerate(row)
    ]
    cycles = [[syms[v] for v in cyc] for cyc in enumerate_4cycles(d)]
    return {"vertices": syms, "arcs": arcs, "cycles": cycles}


def to_json(d: Digraph) -> str:
    return json.dumps(to_json_dict(d), indent=2) + "\n"


def to_dot(d: Digraph) -> str:
    verts = enumerate_vertices()
    lines = ["digraph pencils {"]
    for i, v in enumerate(verts):
        lines.append(f'  {i} [label="{compact(v)}"];')
    for u, row in enumerate(d.out):
        for k, w in enumerate(row):
            lines.append(f"  {u} -> {w} [label={LABELS[k]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
