"""End-to-end acceptance: the headline structural claims, each as one
exact check, plus a mutation pass showing every suite catches a single
retargeted arc with a located witness."""


from fanopencils import coxeter as cox_mod
from fanopencils.autos import (
    induced_automorphism,
    lift_vertex_map,
    verify_c4uh,
)
from fanopencils.digraph import (
    check_no_short_circuits,
    cycle_arc_cover,
    golden_sublist_diff,
    label_permutations,
    short_circuit_matrix_check,
    step_orbit_cycles,
    strongly_connected,
    with_retargeted_arc,
)
from fanopencils.fano import collineations
from fanopencils.golden import ADJACENCY_ROWS, EXAMPLE_CYCLE
from fanopencils.pencils import enumerate_vertices, parse_compact, translate, vertex_index
from fanopencils.digraph import canonical_cycle
from fanopencils.verify import run_verification
from fanopencils.voltage import cycle_orbits, derive_canonical, quotient


def _ok(n, name):
    print(f"criterion {n} ({name}): PASS")


def test_criterion_01_vertex_arc_census(d):
    assert d.n == 168
    assert d.arc_count() == 504
    assert all(len(d.out[v]) == 3 and len(set(d.out[v])) == 3 for v in range(d.n))
    assert all(len(d.inn[v]) == 3 and len(set(d.inn[v])) == 3 for v in range(d.n))
    _ok(1, "168 vertices, 504 arcs, in = out = 3")


def test_criterion_02_golden_table(d):
    assert len(ADJACENCY_ROWS) == 24
    assert all(len(row) == 3 for row in ADJACENCY_ROWS.values())
    assert golden_sublist_diff() == []
    assert golden_sublist_diff(d) == []
    _ok(2, "base-0 sub-list matches the published table, order included")


def test_criterion_03_no_short_circuits(d):
    assert check_no_short_circuits(d)
    assert short_circuit_matrix_check(d)
    _ok(3, "no 2- or 3-circuits, direct search and trace oracle")


def test_criterion_04_strong_connectivity(d):
    assert strongly_connected(d)
    _ok(4, "single strong component")


def test_criterion_05_cycle_census(d, cycles):
    assert len(cycles) == 126
    ok, witnesses = cycle_arc_cover(d, cycles)
    assert ok, witnesses
    per_label = step_orbit_cycles(d)
    union = sorted(c for orbs in per_label.values() for c in orbs)
    assert union == sorted(cycles)
    example = canonical_cycle(
        tuple(vertex_index(parse_compact(s)) for s in EXAMPLE_CYCLE)
    )
    assert example in set(cycles)
    _ok(5, "126 arc-disjoint oriented 4-cycles, census = orbit decomposition")


def test_criterion_06_step_permutation_law(d):
    per_label = step_orbit_cycles(d)
    for lab, perm in label_permutations(d).items():
        assert sorted(perm) == list(range(d.n))
        assert len(per_label[lab]) == 42
        assert all(len(c) == 4 for c in per_label[lab])
    _ok(6, "each label map is a permutation with 42 orbits of length 4")


def test_criterion_07_ultrahomogeneity(d, cycles, group):
    sampled = verify_c4uh(d, sample=120, seed=0, group=group, cycles=cycles)
    assert sampled.passed
    assert sampled.flag_transitive
    assert sampled.failures == ()
    assert sampled.direct_checked >= 100
    exhaustive = verify_c4uh(d, sample=0, group=group, cycles=cycles)
    assert exhaustive.passed
    assert exhaustive.failures == ()
    _ok(7, "every cycle-to-cycle rotation extends to an automorphism")


def test_criterion_08_symmetry_floor(d, group):
    assert group.order % 504 == 0
    elems = set(group.elements)
    for s in collineations():
        assert induced_automorphism(s) in elems
    for t in range(7):
        assert lift_vertex_map(lambda v: translate(v, t)) in elems
    _ok(8, f"|Aut| = {group.order}, a multiple of 504, with all known lifts")


def test_criterion_09_voltage_round_trip(d, cycles, action):
    vg = quotient(d, action)
    assert len(vg.reps) == 24
    assert len(vg.arcs) == 72
    assert derive_canonical(d, action) == d
    orbs = cycle_orbits(cycles, action)
    assert len(orbs) == 18
    assert all(len(o) == 7 for o in orbs)
    _ok(9, "quotient 24/72, derived graph identical, 18 cycle orbits of 7")


def test_criterion_10_coxeter_validation(cox, cox_group):
    assert cox.n == 28
    assert len(cox.edges()) == 42
    assert all(len(r) == 3 for r in cox.nbrs)
    assert cox_mod.connected(cox)
    girth, witness = cox_mod.girth_with_witness(cox)
    assert girth == 7 and len(witness) == 7
    assert cox_mod.distance_regular_array(cox) == ((3, 2, 2, 1), (1, 1, 1, 2))
    assert cox_group.order == 336
    report = cox_mod.validate_coxeter(cox)
    assert report.passed, [c.name for c in report.failures()]
    _ok(10, "28/42 cubic, connected, girth 7, DR {3,2,2,1;1,1,1,2}, |Aut| 336")


def test_criterion_11_fault_injection(d, cox):
    target = 0 if d.out[2][0] != 0 else 1
    broken = with_retargeted_arc(d, 2, 0, target)
    row_sym = "".join(map(str, enumerate_vertices()[2].line)) + "_0"

    rep = run_verification("digraph", d=broken)
    assert not rep.passed
    golden = next(c for c in rep.checks if c.name == "digraph.golden_rows")
    assert not golden.passed and row_sym in golden.detail

    rep = run_verification("cycles", d=broken)
    assert not rep.passed
    part = next(c for c in rep.checks if c.name == "cycles.arc_partition")
    count = next(c for c in rep.checks if c.name == "cycles.count")
    assert not (part.passed and count.passed)
    assert part.detail or count.detail

    rep = run_verification("uh", sample=4, d=broken)
    assert not rep.passed
    flag = next(c for c in rep.checks if c.name == "uh.flag_regular")
    assert not flag.passed and "arc orbits" in flag.detail

    rep = run_verification("voltage", d=broken)
    assert not rep.passed
    act = next(c for c in rep.checks if c.name == "voltage.action")
    assert not act.passed and "automorphism" in act.detail

    rows = [list(r) for r in cox.nbrs]
    rows[3][1] = 0 if rows[3][1] != 0 else 1
    broken_cox = cox_mod.Graph(cox.vertices, rows)
    rep = run_verification("coxeter", cox=broken_cox)
    assert not rep.passed
    align = next(c for c in rep.checks if c.name == "coxeter.alignment_consistency")
    failed = [c for c in rep.checks if not c.passed]
    assert failed
    assert not align.passed or any(c.detail for c in failed)
    _ok(11, "every suite fails with a located witness on one retargeted arc")
