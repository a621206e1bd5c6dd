"""Automorphisms, partial-map extension, and cycle homogeneity checks.

Automorphisms here are arc-preserving vertex bijections; arc labels are
not required to be preserved (and one generator rotates them).  The
group search is a standard individualization-refinement enumeration
with a numpy colour refinement, small enough here that every leaf is
visited and verified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .digraph import Digraph, adjacency_matrix, enumerate_4cycles, cycle_arc_cover
from .pencils import DVertex, enumerate_vertices, vertex_index

Perm = tuple[int, ...]


def is_automorphism(d: Digraph, perm) -> bool:
    if sorted(perm) != list(range(d.n)):
        return False
    return all(
        sorted(perm[w] for w in d.out[u]) == sorted(d.out[perm[u]])
        for u in range(d.n)
    )


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)[i] = p[q[i]]: apply q first."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def lift_vertex_map(fn) -> Perm:
    """Index permutation of the 168 ordered pencils induced by a
    DVertex -> DVertex bijection."""
    return tuple(vertex_index(fn(v)) for v in enumerate_vertices())


def induced_automorphism(point_perm) -> Perm:
    """Lift a permutation of the 7 points (a collineation) to vertices."""
    s = tuple(point_perm)

    def fn(v: DVertex) -> DVertex:
        return DVertex(s[v.base], tuple(s[q] for q in v.line))

    return lift_vertex_map(fn)


def rotate_slots(v: DVertex) -> DVertex:
    """Cyclic shift of the written order of a pencil; an automorphism
    that rotates arc labels rather than fixing them."""
    return DVertex(v.base, (v.line[1], v.line[2], v.line[0]))


def swap_slots(v: DVertex) -> DVertex:
    """Transpose the last two entries; with rotate_slots this realizes
    the full symmetric group on slots inside the automorphism group."""
    return DVertex(v.base, (v.line[0], v.line[2], v.line[1]))


# ---------------------------------------------------------------------------
# colour refinement and group enumeration


def _refine(colors: np.ndarray, src: np.ndarray, dst: np.ndarray, n: int):
    """Stable colouring refined by in/out colour counts.

    The returned labels are canonical for the signature matrix (sorted
    row order), so two sides of a paired search stay comparable.
    """
    while True:
        k = int(colors.max()) + 1
        mout = np.zeros((n, k), dtype=np.int32)
        np.add.at(mout, (src, colors[dst]), 1)
        minn = np.zeros((n, k), dtype=np.int32)
        np.add.at(minn, (dst, colors[src]), 1)
        sig = np.concatenate([colors[:, None].astype(np.int32), mout, minn], axis=1)
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.astype(np.int64)
        if int(new.max()) + 1 == k:
            return new
        colors = new


@dataclass(frozen=True)
class AutGroup:
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    order: int


def _closure(gens, n: int) -> set:
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = compose(g, h)
                if x not in elems:
                    elems.add(x)
                    nxt.append(x)
        frontier = nxt
    return elems


@lru_cache(maxsize=8)
def automorphism_group(d: Digraph) -> AutGroup:
    """Enumerate every automorphism by individualization-refinement.

    Each automorphism corresponds to exactly one leaf of the search
    tree (the branch choice at depth i is the image of the i-th base
    vertex), and every leaf candidate is verified against the adjacency
    matrix before being kept.  Cached per digraph: the group is reused
    by every verification suite in a session.
    """
    n = d.n
    src = np.fromiter((u for u, row in enumerate(d.out) for _ in row), np.int64)
    dst = np.fromiter((w for row in d.out for w in row), np.int64)
    a = adjacency_matrix(d).astype(bool)
    found: set[Perm] = set()

    def leaf(cd: np.ndarray, ci: np.ndarray):
        pos = np.empty(n, np.int64)
        pos[ci] = np.arange(n)
        perm = pos[cd]
        if np.array_equal(a[perm][:, perm], a):
            found.add(tuple(int(x) for x in perm))

    def search(cd: np.ndarray, ci: np.ndarray):
        counts = np.bincount(cd)
        if not np.array_equal(counts, np.bincount(ci)):
            return
        big = np.flatnonzero(counts > 1)
        if big.size == 0:
            leaf(cd, ci)
            return
        c = int(big[np.argmin(counts[big])])
        v = int(np.flatnonzero(cd == c)[0])
        fresh = int(cd.max()) + 1
        cd2 = cd.copy()
        cd2[v] = fresh
        cd2 = _refine(cd2, src, dst, n)
        for w in np.flatnonzero(ci == c):
            ci2 = ci.copy()
            ci2[int(w)] = fresh
            search(cd2, _refine(ci2, src, dst, n))

    base = _refine(np.zeros(n, np.int64), src, dst, n)
    search(base, base)

    elements = tuple(sorted(found))
    gens: list[Perm] = []
    closed = {tuple(range(n))}
    for e in elements:
        if e not in closed:
            gens.append(e)
            closed = _closure(gens, n)
    if len(closed) != len(elements) or closed != found:
        raise AssertionError("found permutations do not form a group")
    return AutGroup(tuple(gens), elements, len(elements))


def vertex_orbits(group: AutGroup, n: int) -> tuple[tuple[int, ...], ...]:
    seen = [False] * n
    orbits = []
    for v in range(n):
        if seen[v]:
            continue
        orb = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in group.generators:
                y = g[x]
                if y not in orb:
                    orb.add(y)
                    frontier.append(y)
        for x in orb:
            seen[x] = True
        orbits.append(tuple(sorted(orb)))
    return tuple(orbits)


def arc_orbits(d: Digraph, group: AutGroup) -> tuple[tuple, ...]:
    seen = set()
    orbits = []
    for arc in d.arcs():
        if arc in seen:
            continue
        orb = {arc}
        frontier = [arc]
        while frontier:
            u, w = frontier.pop()
            for g in group.generators:
                img = (g[u], g[w])
                if img not in orb:
                    orb.add(img)
                    frontier.append(img)
        seen |= orb
        orbits.append(tuple(sorted(orb)))
    return tuple(orbits)


def stabilizer_order(group: AutGroup, v: int) -> int:
    return sum(1 for g in group.elements if g[v] == v)


# ---------------------------------------------------------------------------
# partial-map extension


def extend_isomorphism(d: Digraph, pins: dict) -> Perm | None:
    """Grow a partial vertex map of d into itself to an automorphism.

    Constraint propagation: once u -> w is pinned, the out- and
    in-neighbourhoods of u and w must correspond bijectively, so
    singleton leftovers force further assignments.  Ambiguities (the
    degrees here are 3, so leftovers of size 2) are resolved by
    depth-first branching.  Returns None when no extension exists.
    """
    n = d.n
    tgt = [-1] * n
    src = [-1] * n

    def assign(u: int, w: int, trail: list) -> bool:
        if tgt[u] >= 0:
            return tgt[u] == w
        if src[w] >= 0:
            return False
        tgt[u] = w
        src[w] = u
        trail.append(u)
        queue = [(u, w)]
        while queue:
            x, y = queue.pop()
            for (xs, ys) in ((d.out[x], d.out[y]), (d.inn[x], d.inn[y])):
                free_x = []
                free_y = set()
                for q in xs:
                    if tgt[q] < 0:
                        free_x.append(q)
                    elif tgt[q] not in ys:
                        return False
                for q in ys:
                    if src[q] < 0:
                        free_y.add(q)
                    elif src[q] not in xs:
                        return False
                if len(free_x) != len(free_y):
                    return False
                if len(free_x) == 1:
                    q = free_x[0]
                    r = free_y.pop()
                    if src[r] >= 0 or tgt[q] >= 0:
                        if tgt[q] != r:
                            return False
                        continue
                    tgt[q] = r
                    src[r] = q
                    trail.append(q)
                    queue.append((q, r))
        return True

    def undo(trail: list, mark: int):
        while len(trail) > mark:
            u = trail.pop()
            src[tgt[u]] = -1
            tgt[u] = -1

    trail: list[int] = []
    for u, w in pins.items():
        if not assign(u, w, trail):
            return None

    def candidates(u: int):
        opts = None
        for q in d.inn[u]:
            if tgt[q] >= 0:
                s = {x for x in d.out[tgt[q]] if src[x] < 0}
                opts = s if opts is None else opts & s
        for q in d.out[u]:
            if tgt[q] >= 0:
                s = {x for x in d.inn[tgt[q]] if src[x] < 0}
                opts = s if opts is None else opts & s
        if opts is None:
            opts = {x for x in range(n) if src[x] < 0}
        return sorted(opts)

    def dfs() -> bool:
        pick = None
        pick_opts = None
        for u in range(n):
            if tgt[u] >= 0:
                continue
            opts = candidates(u)
            if not opts:
                return False
            if pick_opts is None or len(opts) < len(pick_opts):
                pick, pick_opts = u, opts
                if len(opts) == 1:
                    break
        if pick is None:
            return True
        for w in pick_opts:
            mark = len(trail)
            if assign(pick, w, trail) and dfs():
                return True
            undo(trail, mark)
        return False

    if not dfs():
        return None
    perm = tuple(tgt)
    return perm if is_automorphism(d, perm) else None


# ---------------------------------------------------------------------------
# oriented-4-cycle homogeneity


@dataclass(frozen=True)
class UHReport:
    passed: bool
    aut_order: int
    failures: tuple[tuple[int, int, int], ...]
    direct_checked: int
    flag_transitive: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "pass": self.passed,
            "aut_order": self.aut_order,
            "failures": [
                {"cycle": c, "cycle2": c2, "rotation": r}
                for (c, c2, r) in self.failures
            ],
        }


def _cycle_triple_map(cycles, perm):
    """Where each cycle index goes under perm, with the rotation that
    aligns position 0."""
    index = {cyc: i for i, cyc in enumerate(cycles)}
    out = []
    for i, cyc in enumerate(cycles):
        img = tuple(perm[v] for v in cyc)
        m = img.index(min(img))
        canon = img[m:] + img[:m]
        j = index[canon]
        r = canon.index(img[0])
        out.append((i, j, r))
    return out


def _pin_map(cycles, i: int, j: int, r: int) -> dict:
    c, c2 = cycles[i], cycles[j]
    return {c[k]: c2[(k + r) % 4] for k in range(4)}


FAILURE_CAP = 20


def verify_c4uh(
    d: Digraph,
    sample: int = 100,
    seed: int = 0,
    group: AutGroup | None = None,
    cycles=None,
) -> UHReport:
    """Check that every rotation-aligned map between oriented 4-cycles
    extends to an automorphism.

    The cycles partition the arcs, so cycle-with-rotation pairs biject
    with arcs and the property is equivalent to arc-transitivity of the
    automorphism group; that equivalence is the fast certificate.  On
    top of it, `sample` random pairs are extended directly (seeded), or
    with sample=0 every pair is covered: each extension found settles
    one aligned image per source cycle, so uncovered triples trigger at
    most one search each.
    """
    if cycles is None:
        cycles = enumerate_4cycles(d)
    if group is None:
        group = automorphism_group(d)
    notes = []
    ok_structure = True
    if len(cycles) != 126:
        ok_structure = False
        notes.append(f"{len(cycles)} oriented 4-cycles, expected 126")
    cover_ok, bad = cycle_arc_cover(d, cycles)
    if not cover_ok:
        ok_structure = False
        notes.append(f"cycles do not partition the arcs ({len(bad)} witnesses)")
    orbits = arc_orbits(d, group)
    flag_transitive = len(orbits) == 1 and len(orbits[0]) == d.arc_count()
    if not flag_transitive:
        notes.append(f"{len(orbits)} arc orbits")

    failures: list[tuple[int, int, int]] = []
    checked = 0
    m = len(cycles)
    if not ok_structure:
        return UHReport(
            False, group.order, (), 0, flag_transitive, "; ".join(notes)
        )

    if sample > 0:
        rng = random.Random(seed)
        for _ in range(sample):
            i = rng.randrange(m)
            j = rng.randrange(m)
            r = rng.randrange(4)
            checked += 1
            if extend_isomorphism(d, _pin_map(cycles, i, j, r)) is None:
                failures.append((i, j, r))
                if len(failures) >= FAILURE_CAP:
                    break
    else:
        covered = [[False] * 4 for _ in range(m * m)]
        for i in range(m):
            for j in range(m):
                row = covered[i * m + j]
                for r in range(4):
                    if row[r]:
                        continue
                    checked += 1
                    perm = extend_isomorphism(d, _pin_map(cycles, i, j, r))
                    if perm is None:
                        failures.append((i, j, r))
                        if len(failures) >= FAILURE_CAP:
                            break
                        continue
                    for (a, b, rr) in _cycle_triple_map(cycles, perm):
                        covered[a * m + b][rr] = True
                if failures and len(failures) >= FAILURE_CAP:
                    break
            if failures and len(failures) >= FAILURE_CAP:
                break

    passed = ok_structure and flag_transitive and not failures
    if not notes and not failures:
        mode = "exhaustive" if sample == 0 else f"sampled {checked}"
        notes.append(f"arc-transitive; {mode} direct extensions all succeeded")
    return UHReport(
        passed,
        group.order,
        tuple(failures),
        checked,
        flag_transitive,
        "; ".join(notes),
    )
