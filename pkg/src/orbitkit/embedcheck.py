"""Case analysis for principal reductive embeddings R < G.

Three computable criteria decide, pair by pair, that some SL2-subgroup
of G meets every conjugate of R badly enough:

  orbit-count           fewer nilpotent orbits in r than in g
  dimension-gap         dim G - dim R strictly exceeds rank G + 3, the
                        centralizer dimension bound for the subregular
                        semisimple element
  subregular-partition  the subregular Jordan type is incompatible with
                        the invariant form or fixed vector defining R

Pairs settled in the literature by triality or by sl2-triple lifting
tables are reported with criterion "cited-only" and an explanatory
citation string; nothing is recomputed for them.

The rank >= 2 case list and the seven-row principal table are fixed
data; sweeps re-derive every tabulated number from root systems and
partition counts and fail loudly on any mismatch.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .orbits import nilpotent_orbit_count, subregular_partition
from .partitions import Partition, is_orthogonal_partition, is_symplectic_partition
from .rootsys import LieType, group_dimension

__all__ = [
    "Criterion",
    "Witness",
    "EmbeddingCase",
    "CaseVerdict",
    "PrincipalRow",
    "UnsupportedCaseError",
    "InconsistencyError",
    "SUPPORTED_CASES",
    "orbit_count_criterion",
    "rank2_cases_report",
    "principal_table",
    "dimension_gap_check",
    "dimension_gap_exceptions",
    "subregular_membership_check",
    "regular_case_dimension",
    "embedding_verdict",
]

DEFAULT_L_MAX = 50


class Criterion(Enum):
    ORBIT_COUNT = "orbit-count"
    DIMENSION_GAP = "dimension-gap"
    SUBREGULAR_PARTITION = "subregular-partition"
    CITED_ONLY = "cited-only"


class Witness(Enum):
    PRINCIPAL = "principal"
    SUBREGULAR = "subregular"
    NONE = "none"


class UnsupportedCaseError(ValueError):
    """The pair is outside the analyzed case list; no verdict is extended
    to it."""


class InconsistencyError(RuntimeError):
    """A tabulated value disagrees with its recomputation, or a check
    that must always hold failed; indicates an implementation bug."""


SUPPORTED_CASES = (
    "G=A3 or A4, R=B2 (=C2)",
    "G=B3, D4 or A6, R=G2",
    "G=A2l (l>=2), R=Bl",
    "G=A2l-1 (l>=2), R=Cl",
    "G=Dl (l>=4), R=Bl-1",
    "G=E6, R=F4",
)


@dataclass(frozen=True)
class EmbeddingCase:
    """A labeled pair of types.  Identical labels are representable so
    that the orbit-count comparator can report "equal counts" instead of
    raising; the analyzed case list never contains such pairs."""

    g_type: LieType
    r_type: LieType
    family_parameter: int | None = None

    def __str__(self):
        return f"{self.g_type} > {self.r_type}"


@dataclass(frozen=True)
class CaseVerdict:
    case: EmbeddingCase
    criterion: Criterion
    witness: Witness
    holds: bool
    numbers: Mapping[str, int] = field(default_factory=dict)
    partition: Partition | None = None
    citation: str | None = None
    note: str | None = None

    def __post_init__(self):
        if self.witness is Witness.NONE and self.holds and self.criterion is not Criterion.CITED_ONLY:
            raise ValueError("a holding verdict must name a witness subgroup kind")


@dataclass(frozen=True)
class PrincipalRow:
    """One row of the principal-embedding table: the subgroup R is
    principal in G, and the columns compare dim G - dim R with the
    subregular centralizer bound rank G + 3."""

    case: EmbeddingCase
    rank_plus_3: int
    dim_gap: int
    alias_note: str | None = None

    @property
    def gap_exceeds(self) -> bool:
        return self.dim_gap > self.rank_plus_3


# Parametrized principal families: (g builder, r builder, closed form for
# rank G + 3, closed form for dim G - dim R, smallest parameter).
_FAMILIES = {
    "A-odd": (lambda l: LieType("A", 2 * l - 1), lambda l: LieType("C", l),
              lambda l: 2 * l + 2, lambda l: l * (2 * l - 1) - 1, 2),
    "A-even": (lambda l: LieType("A", 2 * l), lambda l: LieType("B", l),
               lambda l: 2 * l + 3, lambda l: 2 * l * l + 3 * l, 2),
    "D": (lambda l: LieType("D", l), lambda l: LieType("B", l - 1),
          lambda l: l + 3, lambda l: 2 * l - 1, 4),
}

_FIXED_ROWS = (
    (LieType("B", 3), LieType("G", 2), 6, 7),
    (LieType("D", 4), LieType("G", 2), 7, 14),
    (LieType("A", 6), LieType("G", 2), 9, 34),
    (LieType("E", 6), LieType("F", 4), 9, 26),
)

_TRIALITY_CITATION = (
    "G2 is the triality-fixed subgroup of SO8; the subregular Jordan types"
    " (5,1,1) of so7 (extending to (5,1,1,1) in so8) and (5,3) of so8 are"
    " not triality-invariant, so no conjugate of the subregular SL2 lies in G2")

_A6_CITATION = (
    "the subregular Jordan type (6,1) of sl7 is not orthogonal, so no"
    " conjugate of the subregular SL2 of SL7 lies in SO7, and G2 sits inside SO7")

_E6_CITATION = (
    "by the sl2-triple lifting tables, conjugacy classes of triples in f4 lift"
    " uniquely to e6 and the largest non-principal e6 orbit meeting f4 has"
    " codimension 10; the subregular e6 orbit has codimension 8, so no"
    " conjugate of the subregular SL2 of E6 lies in F4")

_CITED_PAIRS = {
    (LieType("B", 3), LieType("G", 2)): _TRIALITY_CITATION,
    (LieType("D", 4), LieType("G", 2)): _TRIALITY_CITATION,
    (LieType("A", 6), LieType("G", 2)): _A6_CITATION,
    (LieType("E", 6), LieType("F", 4)): _E6_CITATION,
}


def _identify(g: LieType, r: LieType) -> tuple[EmbeddingCase, str | None, bool]:
    """(case, family key or None, whether the subregular table route
    applies).  Raises UnsupportedCaseError outside the case list."""
    if (g, r) in _CITED_PAIRS:
        return EmbeddingCase(g, r), None, True
    for key, (gf, rf, _, _, l_min) in _FAMILIES.items():
        # invert g to the parameter and confirm r matches
        if key == "A-odd" and g.family == "A" and g.rank % 2 == 1:
            l = (g.rank + 1) // 2
        elif key == "A-even" and g.family == "A" and g.rank % 2 == 0:
            l = g.rank // 2
        elif key == "D" and g.family == "D":
            l = g.rank
        else:
            continue
        if l >= l_min and gf(l) == g and rf(l) == r:
            # the l = 2 coincidences A3 > C2, A4 > B2 are the rank-2 cases
            # settled by orbit counts alone
            table_route = l >= (3 if key.startswith("A") else 4)
            return EmbeddingCase(g, r, l), key, table_route
    raise UnsupportedCaseError(
        f"no verdict is recorded for {g} > {r}; supported cases: "
        + "; ".join(SUPPORTED_CASES))


def orbit_count_criterion(g: LieType, r: LieType) -> CaseVerdict:
    """Holds when r has strictly fewer nilpotent orbits than g, so some
    sl2-conjugacy class of g misses every conjugate of r."""
    count_g = nilpotent_orbit_count(g).count
    count_r = nilpotent_orbit_count(r).count
    holds = count_r < count_g
    case = EmbeddingCase(g, r)
    return CaseVerdict(
        case=case,
        criterion=Criterion.ORBIT_COUNT,
        witness=Witness.PRINCIPAL if holds else Witness.NONE,
        holds=holds,
        numbers={"orbit_count_g": count_g, "orbit_count_r": count_r},
    )


def rank2_cases_report(l_max: int = DEFAULT_L_MAX) -> list[CaseVerdict]:
    """Orbit-count verdicts for the six rank >= 2 principal-subgroup
    cases; parametrized families run over 3 <= l <= l_max (the D family
    over 4 <= l <= l_max).  Every verdict must hold."""
    if l_max < 4:
        raise ValueError(f"l_max must be at least 4, got {l_max}")
    pairs: list[tuple[int, LieType, LieType, int | None]] = [
        (1, LieType("A", 3), LieType("B", 2), None),
        (1, LieType("A", 4), LieType("B", 2), None),
        (2, LieType("B", 3), LieType("G", 2), None),
        (2, LieType("D", 4), LieType("G", 2), None),
        (2, LieType("A", 6), LieType("G", 2), None),
    ]
    pairs += [(3, LieType("A", 2 * l), LieType("B", l), l) for l in range(3, l_max + 1)]
    pairs += [(4, LieType("A", 2 * l - 1), LieType("C", l), l) for l in range(3, l_max + 1)]
    pairs += [(5, LieType("D", l), LieType("B", l - 1), l) for l in range(4, l_max + 1)]
    pairs.append((6, LieType("E", 6), LieType("F", 4), None))

    verdicts = []
    for index, g, r, l in pairs:
        v = orbit_count_criterion(g, r)
        if not v.holds:
            raise InconsistencyError(
                f"case ({index}) fails at {g} > {r}: orbit counts"
                f" {v.numbers['orbit_count_g']} vs {v.numbers['orbit_count_r']}")
        numbers = dict(v.numbers)
        numbers["case"] = index
        if l is not None:
            numbers["l"] = l
        verdicts.append(CaseVerdict(
            case=EmbeddingCase(g, r, l), criterion=v.criterion,
            witness=v.witness, holds=v.holds, numbers=numbers))
    return verdicts


def _row(g: LieType, r: LieType, parameter: int | None,
         expected_rank_plus_3: int, expected_gap: int,
         alias_note: str | None = None) -> PrincipalRow:
    rank_plus_3 = g.rank + 3
    gap = group_dimension(g) - group_dimension(r)
    if (rank_plus_3, gap) != (expected_rank_plus_3, expected_gap):
        raise InconsistencyError(
            f"table row {g} > {r}: closed form ({expected_rank_plus_3},"
            f" {expected_gap}) vs root-system values ({rank_plus_3}, {gap})")
    return PrincipalRow(EmbeddingCase(g, r, parameter), rank_plus_3, gap, alias_note)


def principal_table(l_max: int = DEFAULT_L_MAX) -> list[PrincipalRow]:
    """The seven-row table of principal embeddings, parametrized rows
    swept up to l_max.  The closed-form columns are cross-checked
    against dimensions recomputed from root systems."""
    if l_max < 4:
        raise ValueError(f"l_max must be at least 4, got {l_max}")
    rows = [_row(g, r, None, c3, gap) for g, r, c3, gap in _FIXED_ROWS]
    for key in ("A-odd", "A-even", "D"):
        gf, rf, c3f, gapf, l_min = _FAMILIES[key]
        for l in range(l_min, l_max + 1):
            alias = "R is C2, canonicalized to B2" if key == "A-odd" and l == 2 else None
            rows.append(_row(gf(l), rf(l), l, c3f(l), gapf(l), alias))
    return rows


def dimension_gap_check(g: LieType, r: LieType) -> CaseVerdict:
    """Compare dim G - dim R with rank G + 3.  A strict excess rules out
    a degenerate fixed-point-free action of the subregular SL2 on G/R,
    so the subregular witness works; otherwise the verdict defers to the
    subregular-partition criterion."""
    case, key, _ = _identify(g, r)
    if key is None:
        expected = next((row[2], row[3]) for row in _FIXED_ROWS if row[:2] == (g, r))
    else:
        _, _, c3f, gapf, _ = _FAMILIES[key]
        expected = (c3f(case.family_parameter), gapf(case.family_parameter))
    row = _row(g, r, case.family_parameter, *expected)
    holds = row.gap_exceeds
    return CaseVerdict(
        case=case,
        criterion=Criterion.DIMENSION_GAP,
        witness=Witness.SUBREGULAR if holds else Witness.NONE,
        holds=holds,
        numbers={
            "dim_g": group_dimension(g), "dim_r": group_dimension(r),
            "gap": row.dim_gap, "rank_g": g.rank, "bound": row.rank_plus_3,
        },
        note=None if holds else "gap does not exceed the bound; deferred to"
                                " the subregular-partition criterion",
    )


def dimension_gap_exceptions(l_max: int = DEFAULT_L_MAX) -> list[EmbeddingCase]:
    """Rows of the principal table whose dimension gap does not exceed
    rank G + 3; these need the refined subregular argument."""
    return [row.case for row in principal_table(l_max) if not row.gap_exceeds]


def subregular_membership_check(g: LieType, r: LieType) -> CaseVerdict:
    """Decide that no conjugate of the subregular SL2 of G lies in R.

    For the classical rows this is a partition computation: Jordan type
    (r,1) of sl_{r+1} is not symplectic for odd r and not orthogonal for
    even r, and Jordan type (2l-3,3) of so_{2l} fixes no line.  The G2
    and F4 rows rest on cited triality/lifting facts."""
    case, key, _ = _identify(g, r)
    citation = _CITED_PAIRS.get((g, r))
    if citation is not None:
        return CaseVerdict(
            case=case, criterion=Criterion.CITED_ONLY, witness=Witness.SUBREGULAR,
            holds=True, citation=citation,
            partition=subregular_partition(g) if g.family in "ABD" else None)
    p = subregular_partition(g)
    numbers: dict[str, int] = {"l": case.family_parameter}
    if key == "A-odd":
        holds = not is_symplectic_partition(p)
        note = f"Jordan type {p} is not symplectic, so it preserves no symplectic form"
    elif key == "A-even":
        holds = not is_orthogonal_partition(p)
        note = f"Jordan type {p} is not orthogonal, so it preserves no orthogonal form"
    else:
        holds = p.multiplicity(1) == 0
        note = (f"Jordan type {p} has no part 1, so the subregular SL2 fixes"
                " no line and misses every conjugate of the stabilizer")
    return CaseVerdict(
        case=case, criterion=Criterion.SUBREGULAR_PARTITION,
        witness=Witness.SUBREGULAR if holds else Witness.NONE,
        holds=holds, numbers=numbers, partition=p, note=note)


def regular_case_dimension(g: LieType, r: LieType) -> int:
    """dim G - rank G + rank R - 2: the dimension R is forced to have
    when a fixed-point-free degenerate SL2-action on G/R comes from a
    triple with regular semisimple element."""
    return group_dimension(g) - g.rank + r.rank - 2


def embedding_verdict(g: LieType, r: LieType) -> CaseVerdict:
    """Full verdict for one analyzed pair.

    The orbit-count criterion runs first and settles the rank-2
    coincidences (A3 or A4 over B2).  Every other analyzed pair is a
    principal-table row: the dimension gap is compared with the
    subregular bound, then the subregular-partition or cited argument
    pins the witness.  The returned numbers collect every quantity used.
    """
    case, _, table_route = _identify(g, r)
    oc = orbit_count_criterion(g, r)
    numbers = dict(oc.numbers)
    if case.family_parameter is not None:
        numbers["l"] = case.family_parameter
    if not table_route and oc.holds:
        return CaseVerdict(
            case=case, criterion=Criterion.ORBIT_COUNT, witness=Witness.PRINCIPAL,
            holds=True, numbers=numbers)
    gap = dimension_gap_check(g, r)
    membership = subregular_membership_check(g, r)
    numbers.update(gap.numbers)
    numbers.update(membership.numbers)
    return CaseVerdict(
        case=case,
        criterion=membership.criterion,
        witness=Witness.SUBREGULAR if membership.holds else Witness.NONE,
        holds=membership.holds,
        numbers=numbers,
        partition=membership.partition,
        citation=membership.citation,
        note=gap.note if not gap.holds else membership.note,
    )
