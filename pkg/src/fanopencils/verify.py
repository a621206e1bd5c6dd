"""Named verification suites over the pencil digraph and its relatives.

Each check is a timed pass/fail with a short detail string; suites can
run alone or all together while sharing the expensive artifacts (the
digraph, the cycle census, the automorphism group).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property

from . import autos, coxeter, digraph, golden, voltage
from .pencils import compact, format_long, parse_compact, symbol_grid, vertex_index

SELECTORS = ("all", "digraph", "cycles", "uh", "voltage", "coxeter")
SUITE_ORDER = ("digraph", "cycles", "uh", "voltage", "coxeter")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    ms: int


@dataclass
class VerificationReport:
    selector: str
    checks: tuple[CheckResult, ...]
    uh_report: autos.UHReport | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "selector": self.selector,
            "pass": self.passed,
            "checks": [
                {"name": c.name, "pass": c.passed, "detail": c.detail, "ms": c.ms}
                for c in self.checks
            ],
        }

    def format_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"CHECK {c.name}: {status} ({c.ms}ms)")
            if not c.passed and c.detail:
                lines.append(f"  {c.detail}")
        lines.append(f"OVERALL: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


class Artifacts:
    """Lazily built shared objects, one instance per verification run."""

    def __init__(
        self,
        d: digraph.Digraph | None = None,
        cox: coxeter.Graph | None = None,
    ):
        self._d = d
        self._cox = cox

    @cached_property
    def d(self) -> digraph.Digraph:
        return self._d if self._d is not None else digraph.build_d()

    @cached_property
    def cycles(self):
        return digraph.enumerate_4cycles(self.d)

    @cached_property
    def group(self) -> autos.AutGroup:
        return autos.automorphism_group(self.d)

    @cached_property
    def action(self) -> voltage.GroupAction:
        return voltage.z7_action(self.d)

    @cached_property
    def cox(self) -> coxeter.Graph:
        return self._cox if self._cox is not None else coxeter.build_coxeter()


def _check_digraph_counts(a: Artifacts):
    d = a.d
    ok = d.n == 168 and d.arc_count() == 504
    return ok, f"{d.n} vertices, {d.arc_count()} arcs"


def _check_digraph_degrees(a: Artifacts):
    d = a.d
    bad = [
        v
        for v in range(d.n)
        if len(d.out[v]) != 3
        or len(set(d.out[v])) != 3
        or len(d.inn[v]) != 3
        or len(set(d.inn[v])) != 3
    ]
    return not bad, f"{len(bad)} vertices off degree 3" if bad else "in = out = 3"


def _check_digraph_golden(a: Artifacts):
    diffs = digraph.golden_sublist_diff(a.d)
    if diffs:
        shown = "; ".join(f"{s} slot {p}: {e} != {g}" for s, p, e, g in diffs[:6])
        return False, f"{len(diffs)} mismatches: {shown}"
    return True, "24 base-0 rows match the embedded table"


def _check_digraph_connected(a: Artifacts):
    return digraph.strongly_connected(a.d), "forward and reverse search reach all"


def _check_digraph_short(a: Artifacts):
    return digraph.check_no_short_circuits(a.d), "no 1-, 2- or 3-circuits"


def _check_digraph_trace(a: Artifacts):
    return digraph.short_circuit_matrix_check(a.d), "tr A = tr A^2 = tr A^3 = 0"


def _check_digraph_grid(a: Artifacts):
    got = symbol_grid()
    ok = got == golden.SYMBOL_GRID
    return ok, "24 translation classes labelled as expected" if ok else "grid mismatch"


def _check_cycles_count(a: Artifacts):
    return len(a.cycles) == 126, f"{len(a.cycles)} oriented 4-cycles"


def _check_cycles_partition(a: Artifacts):
    ok, bad = digraph.cycle_arc_cover(a.d, a.cycles)
    detail = "each arc on exactly one cycle" if ok else f"witnesses: {bad[:6]}"
    return ok, detail


def _check_cycles_orbits(a: Artifacts):
    per_label = digraph.step_orbit_cycles(a.d)
    sizes = {lab: len(orbs) for lab, orbs in per_label.items()}
    all_len4 = all(
        len(c) == 4 for orbs in per_label.values() for c in orbs
    )
    union = sorted(c for orbs in per_label.values() for c in orbs)
    ok = all_len4 and sizes == {0: 42, 1: 42, 2: 42} and union == sorted(a.cycles)
    return ok, f"orbit counts per label {sizes}, census agreement {union == sorted(a.cycles)}"


def _check_cycles_example(a: Artifacts):
    idx = [vertex_index(parse_compact(s)) for s in golden.EXAMPLE_CYCLE]
    canon = digraph.canonical_cycle(tuple(idx))
    present = canon in set(a.cycles)
    long_ok = tuple(
        format_long(parse_compact(s)) for s in golden.EXAMPLE_CYCLE
    ) == golden.EXAMPLE_CYCLE_LONG
    ok = present and long_ok
    return ok, f"known cycle present {present}, long-form rendering {long_ok}"


def _check_cycles_incidence(a: Artifacts):
    per_vertex = [0] * a.d.n
    for cyc in a.cycles:
        for v in cyc:
            per_vertex[v] += 1
    ok = set(per_vertex) == {3}
    return ok, "every vertex on exactly 3 cycles" if ok else f"counts {sorted(set(per_vertex))}"


def _check_uh_order(a: Artifacts):
    ok = a.group.order % 504 == 0
    return ok, f"automorphism group order {a.group.order} (reported; 504 must divide it)"


def _check_uh_lifts(a: Artifacts):
    from .fano import collineations
    from .pencils import translate

    elems = set(a.group.elements)
    missing = sum(
        1 for s in collineations() if autos.induced_automorphism(s) not in elems
    )
    shifts = sum(
        1
        for t in range(7)
        if autos.lift_vertex_map(lambda v: translate(v, t)) in elems
    )
    rot = autos.lift_vertex_map(autos.rotate_slots)
    ok = missing == 0 and shifts == 7 and rot in elems
    return ok, (
        f"{168 - missing} of 168 collineation lifts present, {shifts} of 7 "
        f"translations, slot rotation {'present' if rot in elems else 'absent'}"
    )


def _check_uh_vertex_transitive(a: Artifacts):
    orbits = autos.vertex_orbits(a.group, a.d.n)
    return len(orbits) == 1, f"{len(orbits)} vertex orbits"


def _make_uh_extension_check(report_slot: dict, sample: int, seed: int):
    def run(a: Artifacts):
        rep = autos.verify_c4uh(
            a.d, sample=sample, seed=seed, group=a.group, cycles=a.cycles
        )
        report_slot["report"] = rep
        ok = rep.passed and not rep.failures
        which = "exhaustive" if sample == 0 else f"{rep.direct_checked} sampled"
        detail = f"{which} cycle-to-cycle extensions, {len(rep.failures)} failures"
        if rep.failures:
            detail += f"; first: {rep.failures[0]}"
        if not rep.passed and rep.detail:
            detail += f"; {rep.detail}"
        return ok, detail

    return run


def _check_uh_flags(a: Artifacts):
    orbits = autos.arc_orbits(a.d, a.group)
    ok = len(orbits) == 1 and len(orbits[0]) == a.d.arc_count()
    return ok, f"{len(orbits)} arc orbits (flag-regular iff 1 of size 504)"


def _check_voltage_action(a: Artifacts):
    try:
        a.action
    except voltage.InvalidAction as e:
        return False, str(e)
    return True, "translation is a free order-7 automorphism"


def _check_voltage_shape(a: Artifacts):
    vg = voltage.quotient(a.d, a.action)
    degs_ok = all(
        vg.out_degree(i) == 3 and vg.in_degree(i) == 3 for i in range(len(vg.reps))
    )
    src = vg.reps.index("124_0")
    tgt = vg.reps.index(compact(_rep_of_symbol(a, "165_3")))
    example = (src, tgt, 3) in vg.arcs
    ok = len(vg.reps) == 24 and len(vg.arcs) == 72 and degs_ok and example
    return ok, (
        f"{len(vg.reps)} reps, {len(vg.arcs)} arcs, regular {degs_ok}, "
        f"arc 124_0 -> orbit of 165_3 at voltage 3: {example}"
    )


def _rep_of_symbol(a: Artifacts, sym: str):
    from .pencils import translate

    v = parse_compact(sym)
    return translate(v, (-v.base) % 7)


def _check_voltage_round_trip(a: Artifacts):
    lifted = voltage.derive_canonical(a.d, a.action)
    same = lifted == a.d
    loop = voltage.derive(voltage.VoltageGraph(("o",), ((0, 0, 1),)))
    loop_ok = loop.out == tuple((((m + 1) % 7),) for m in range(7))
    ok = same and loop_ok
    return ok, f"derived graph equals original {same}, single loop lifts to a 7-cycle {loop_ok}"


def _check_voltage_sums(a: Artifacts):
    sums = voltage.projected_voltage_sums(a.d, a.cycles, a.action)
    bad = [i for i, s in enumerate(sums) if s != 0]
    return not bad, (
        "all 126 projected cycles close at voltage 0"
        if not bad
        else f"{len(bad)} cycles with nonzero sum"
    )


def _check_voltage_orbits(a: Artifacts):
    orbs = voltage.cycle_orbits(a.cycles, a.action)
    sizes = sorted(len(o) for o in orbs)
    ok = len(orbs) == 18 and sizes == [7] * 18
    return ok, f"{len(orbs)} translation orbits of cycles, sizes {sorted(set(sizes))}"


def _check_cox_counts(a: Artifacts):
    g = a.cox
    edges = len(g.edges())
    return g.n == 28 and edges == 42, f"{g.n} vertices, {edges} edges"


def _check_cox_cubic_connected(a: Artifacts):
    g = a.cox
    cubic = all(len(r) == 3 for r in g.nbrs)
    conn = coxeter.connected(g)
    return cubic and conn, f"cubic {cubic}, connected {conn}"


def _check_cox_girth(a: Artifacts):
    girth, witness = coxeter.girth_with_witness(a.cox)
    return girth == 7, f"girth {girth}, witness {witness}"


def _check_cox_dr(a: Artifacts):
    arr = coxeter.distance_regular_array(a.cox)
    return arr == coxeter.EXPECTED_ARRAY, f"intersection array {arr}"


def _check_cox_aut(a: Artifacts):
    group = autos.automorphism_group(a.cox.to_digraph())
    orbits = autos.vertex_orbits(group, a.cox.n)
    ok = group.order == 336 and len(orbits) == 1
    return ok, f"order {group.order}, {len(orbits)} vertex orbits"


def _check_cox_consistency(a: Artifacts):
    g = a.cox
    mismatch = 0
    for i, p in enumerate(g.vertices):
        for j, q in enumerate(g.vertices):
            if i < j and coxeter.cox_adjacent(p, q) != (j in g.nbrs[i]):
                mismatch += 1
    return mismatch == 0, (
        "alignment adjacency equals closed form on all 378 pairs"
        if mismatch == 0
        else f"{mismatch} disagreeing pairs"
    )


def _suites(sample: int, seed: int, uh_slot: dict):
    return {
        "digraph": [
            ("digraph.counts", _check_digraph_counts),
            ("digraph.degrees", _check_digraph_degrees),
            ("digraph.golden_rows", _check_digraph_golden),
            ("digraph.strongly_connected", _check_digraph_connected),
            ("digraph.no_short_circuits", _check_digraph_short),
            ("digraph.trace_oracle", _check_digraph_trace),
            ("digraph.symbol_grid", _check_digraph_grid),
        ],
        "cycles": [
            ("cycles.count", _check_cycles_count),
            ("cycles.arc_partition", _check_cycles_partition),
            ("cycles.label_orbits", _check_cycles_orbits),
            ("cycles.known_example", _check_cycles_example),
            ("cycles.vertex_incidence", _check_cycles_incidence),
        ],
        "uh": [
            ("uh.aut_order", _check_uh_order),
            ("uh.known_subgroups", _check_uh_lifts),
            ("uh.vertex_transitive", _check_uh_vertex_transitive),
            ("uh.flag_regular", _check_uh_flags),
            ("uh.extensions", _make_uh_extension_check(uh_slot, sample, seed)),
        ],
        "voltage": [
            ("voltage.action", _check_voltage_action),
            ("voltage.quotient_shape", _check_voltage_shape),
            ("voltage.round_trip", _check_voltage_round_trip),
            ("voltage.closure", _check_voltage_sums),
            ("voltage.cycle_orbits", _check_voltage_orbits),
        ],
        "coxeter": [
            ("coxeter.counts", _check_cox_counts),
            ("coxeter.cubic_connected", _check_cox_cubic_connected),
            ("coxeter.girth", _check_cox_girth),
            ("coxeter.distance_regular", _check_cox_dr),
            ("coxeter.automorphisms", _check_cox_aut),
            ("coxeter.alignment_consistency", _check_cox_consistency),
        ],
    }


def run_verification(
    selector: str = "all",
    sample: int = 100,
    seed: int = 0,
    d: digraph.Digraph | None = None,
    cox: coxeter.Graph | None = None,
) -> VerificationReport:
    """Run one suite or all of them and collect timed check results.

    `sample` controls the homogeneity extension check: n sampled
    cycle-to-cycle maps, or 0 for exhaustive coverage of all 63504.
    `d` and `cox` substitute prebuilt (or deliberately damaged) graphs.
    """
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}")
    uh_slot: dict = {}
    suites = _suites(sample, seed, uh_slot)
    names = SUITE_ORDER if selector == "all" else (selector,)
    arts = Artifacts(d, cox)
    results = []
    for suite in names:
        for name, fn in suites[suite]:
            t0 = time.perf_counter()
            try:
                ok, detail = fn(arts)
            except Exception as e:
                ok, detail = False, f"raised {type(e).__name__}: {e}"
            ms = int(round((time.perf_counter() - t0) * 1000))
            results.append(CheckResult(name, bool(ok), detail, ms))
    return VerificationReport(selector, tuple(results), uh_slot.get("report"))
