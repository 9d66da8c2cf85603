"""Acceptance suite: every exit criterion, at its stated tolerance and
runtime budget, with one printed pass/fail line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
All comparisons are exact (integer or rational arithmetic); the only
tolerances are the runtime ceilings.
"""

import random
import time

from orbitkit.embedcheck import (
    dimension_gap_exceptions,
    principal_table,
    rank2_cases_report,
)
from orbitkit.lndcalc import (
    MultiPoly,
    apply_derivation,
    delta_degree,
    preserves_relations,
    sl2_coordinate_ring,
    sl2_standard_derivations,
    verify_compatibility_condition2,
    verify_invariant_hypersurface,
    verify_semicompatibility_witness,
)
from orbitkit.orbits import (
    centralizer_dimension_oracle,
    nilpotent_orbit_count,
    subregular_partition,
)
from orbitkit.partitions import (
    Partition,
    conjugate_partition,
    count_partitions,
    enumerate_partitions,
    is_orthogonal_partition,
    is_symplectic_partition,
)
from orbitkit.rootsys import LieType

T = LieType.from_string


def _report(label: str, failures: list, elapsed: float, budget: float | None):
    within = budget is None or elapsed <= budget
    ok = not failures and within
    line = f"{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.2f}s"
    line += f" / budget {budget:.0f}s)" if budget is not None else ")"
    print(line)
    assert not failures, f"{label}: {failures[:5]}"
    assert within, f"{label}: took {elapsed:.2f}s, budget {budget}s"


def test_orbit_count_anchors():
    t0 = time.monotonic()
    failures = []
    expected = {"A3": 5, "B2": 4, "G2": 5, "F4": 16, "E6": 21, "E7": 45, "E8": 70}
    for label, want in expected.items():
        got = nilpotent_orbit_count(T(label)).count
        if got != want:
            failures.append((label, got, want))
    _report("orbit counts (a3, b2, exceptional table)", failures,
            time.monotonic() - t0, 1.0)


def test_inequality_sweep():
    t0 = time.monotonic()
    failures = []

    def count(label):
        return nilpotent_orbit_count(T(label)).count

    if not (count("A4") > count("A3") == 5 > count("B2") == 4):
        failures.append("case (1)")
    for label in ("B3", "D4", "A6"):
        if not count(label) > 5:
            failures.append(f"case (2) at {label}")
    for l in range(3, 51):
        if not count(f"A{2*l}") > count(f"B{l}"):
            failures.append(f"case (3) at l={l}")
        if not count(f"A{2*l-1}") > count(f"C{l}"):
            failures.append(f"case (4) at l={l}")
    for l in range(4, 51):
        if not count(f"D{l}") > count(f"B{l-1}"):
            failures.append(f"case (5) at l={l}")
    if not count("E6") > count("F4"):
        failures.append("case (6)")
    # the report helper must agree and raise on nothing
    assert all(v.holds for v in rank2_cases_report(50))
    _report("inequality sweep, cases (1)-(6), l <= 50", failures,
            time.monotonic() - t0, 10.0)


def test_principal_table_reproduction():
    t0 = time.monotonic()
    failures = []
    rows = {(str(r.case.g_type), str(r.case.r_type)): r for r in principal_table(50)}

    fixed = {("B3", "G2"): (6, 7), ("D4", "G2"): (7, 14),
             ("A6", "G2"): (9, 34), ("E6", "F4"): (9, 26)}
    for pair, (c3, gap) in fixed.items():
        row = rows.get(pair)
        if row is None or (row.rank_plus_3, row.dim_gap) != (c3, gap):
            failures.append(("fixed row", pair))

    for l in range(2, 51):
        row = rows[(f"A{2*l-1}", f"C{l}" if l > 2 else "B2")]
        if (row.rank_plus_3, row.dim_gap) != (2 * l + 2, l * (2 * l - 1) - 1):
            failures.append(("A-odd row", l))
        row = rows[(f"A{2*l}", f"B{l}")]
        if (row.rank_plus_3, row.dim_gap) != (2 * l + 3, 2 * l * l + 3 * l):
            failures.append(("A-even row", l))
    for l in range(4, 51):
        row = rows[(f"D{l}", f"B{l-1}")]
        if (row.rank_plus_3, row.dim_gap) != (l + 3, 2 * l - 1):
            failures.append(("D row", l))

    exceptions = {(str(c.g_type), str(c.r_type)) for c in dimension_gap_exceptions(50)}
    if exceptions != {("A3", "B2"), ("D4", "B3")}:
        failures.append(("exceptions", exceptions))
    _report("principal table rows and the two gap exceptions", failures,
            time.monotonic() - t0, 5.0)


def test_subregular_partition_suite():
    t0 = time.monotonic()
    failures = []
    for r in range(2, 22):
        p = subregular_partition(T(f"A{r}"))
        if tuple(p) != (r, 1):
            failures.append(("A partition", r))
        if r % 2 == 1 and is_symplectic_partition(p):
            failures.append(("symplectic should fail", r))
        if r % 2 == 0 and is_orthogonal_partition(p):
            failures.append(("orthogonal should fail", r))
    for l in range(4, 21):
        p = subregular_partition(T(f"D{l}"))
        if tuple(p) != (2 * l - 3, 3) or p.multiplicity(1) != 0:
            failures.append(("D partition", l))
    if tuple(subregular_partition(T("B3"))) != (5, 1, 1):
        failures.append("B3 partition")
    _report("subregular partition suite", failures, time.monotonic() - t0, None)


def test_type_a_dimension_oracle():
    t0 = time.monotonic()
    failures = []
    for k in range(1, 7):
        for p in enumerate_partitions(k):
            oracle = centralizer_dimension_oracle(p)
            formula = sum(q * q for q in conjugate_partition(p))
            if oracle != formula:
                failures.append(("centralizer", tuple(p), oracle, formula))
    for n in range(1, 6):
        # codimension in sl_{n+1} equals centralizer dimension minus 1
        principal = centralizer_dimension_oracle(Partition((n + 1,))) - 1
        if principal != n:
            failures.append(("principal codim", n, principal))
        if n >= 2:
            subregular = centralizer_dimension_oracle(Partition((n, 1))) - 1
            if subregular != n + 2:
                failures.append(("subregular codim", n, subregular))
    _report("type-A centralizer oracle vs conjugate-partition formula", failures,
            time.monotonic() - t0, 30.0)


def test_sl2_derivation_suite():
    t0 = time.monotonic()
    failures = []
    ring = sl2_coordinate_ring()
    d1, d2 = sl2_standard_derivations()

    if not (preserves_relations(ring, d1) and preserves_relations(ring, d2)):
        failures.append("determinant relation not preserved")
    for d in (d1, d2):
        for name in ring.gens:
            try:
                delta_degree(ring, d, ring.generator(name), cap=4)
            except Exception:
                failures.append(("nilpotence cap 4", name))

    witness = verify_semicompatibility_witness(
        ring, d1, d2,
        [ring.generator("a1"), ring.generator("a2")],
        [ring.generator("b1"), ring.generator("b2")])
    if not witness.found or witness.found_degree > 2:
        failures.append(("witness", witness.equation()))
    if witness.equation() != "1 = a1*b2 - a2*b1":
        failures.append(("witness equation", witness.equation()))

    a = ring.element("a1*b2")
    if delta_degree(ring, d1, a) != 1 or delta_degree(ring, d2, a) != 1:
        failures.append("degrees of a1*b2")
    if not verify_compatibility_condition2(ring, d1, d2, a):
        failures.append("compatibility condition")
    if not verify_invariant_hypersurface():
        failures.append("hypersurface identity or sign flip")
    _report("SL2 derivation suite", failures, time.monotonic() - t0, 1.0)


def test_property_suites():
    t0 = time.monotonic()
    failures = []

    # Euler's pentagonal recurrence, written here independently
    memo = {0: 1}

    def pentagonal(n):
        if n in memo:
            return memo[n]
        total, k = 0, 1
        while k * (3 * k - 1) // 2 <= n:
            sign = 1 if k % 2 else -1
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g <= n:
                    total += sign * pentagonal(n - g)
            k += 1
        memo[n] = total
        return total

    for n in range(41):
        if not pentagonal(n) == count_partitions(n) == len(enumerate_partitions(n)):
            failures.append(("pentagonal", n))

    for n in range(21):
        for p in enumerate_partitions(n):
            q = conjugate_partition(p)
            if conjugate_partition(q) != p or q.total != n:
                failures.append(("involution", tuple(p)))

    ring = sl2_coordinate_ring()
    d1, d2 = sl2_standard_derivations()
    rng = random.Random(20260811)

    def sample(max_terms=4, max_exp=2):
        terms = {tuple(rng.randint(0, max_exp) for _ in ring.gens): rng.randint(-3, 3)
                 for _ in range(rng.randint(1, max_terms))}
        return ring.normal_form(MultiPoly(ring.gens, terms))

    leibniz_checked = 0
    for _ in range(60):
        f, g = sample(), sample()
        for d in (d1, d2):
            lhs = apply_derivation(ring, d, ring.normal_form(f * g))
            rhs = ring.normal_form(
                apply_derivation(ring, d, f) * g + f * apply_derivation(ring, d, g))
            if lhs != rhs:
                failures.append(("leibniz", str(f), str(g)))
            leibniz_checked += 1
    if leibniz_checked < 100:
        failures.append("not enough leibniz samples")

    additivity_checked = 0
    while additivity_checked < 50:
        f, g = sample(3, 1), sample(3, 1)
        fg = ring.normal_form(f * g)
        if f.is_zero() or g.is_zero() or fg.is_zero():
            continue
        if delta_degree(ring, d1, fg) != \
                delta_degree(ring, d1, f) + delta_degree(ring, d1, g):
            failures.append(("additivity", str(f), str(g)))
        additivity_checked += 1

    _report("property suites (pentagonal, involution, Leibniz, additivity)",
            failures, time.monotonic() - t0, None)
