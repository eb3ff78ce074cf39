"""Counting in transitive tournaments, composition scans, and cross-checks.

Ties the recurrence engine to actual path counts: a type's count in the
transitive tournament is the path-function value of its block lengths,
halved when the type is symmetric (a symmetric path is met once per
enumeration direction).  On top of that sit a full scan of all compositions
of a total with ranking, the observation checker for the all-ones maximum,
exhaustive inequality suites, and a differential check against the
permutation oracle.
"""

import json
from dataclasses import dataclass, field
from math import factorial
from multiprocessing import Pool

from .engine import MemoTable, f_two_block, f_value
from .errors import ScanTooLarge, TheoremViolation, TypeOrderMismatch
from .oracle import CENSUS_LIMIT, census, make_nearly_transitive, make_random, make_transitive, complement
from .types import (
    canonical_key,
    compositions,
    format_entries,
    is_symmetric,
    parse_composition,
    signed_lift,
    unsigned,
)

__all__ = [
    "DEFAULT_SCAN_LIMIT",
    "tt_count",
    "ScanReport",
    "scan",
    "ConjectureVerdict",
    "check_conjecture",
    "FamilyResult",
    "PropertySuiteReport",
    "run_property_suite",
    "Discrepancy",
    "OracleDiffReport",
    "verify_against_oracle",
    "verify_tournament_invariants",
    "report_to_json",
    "report_from_json",
]

DEFAULT_SCAN_LIMIT = 18


def tt_count(n: int, a, memo: MemoTable | None = None) -> int:
    """Paths of type ``a`` in the transitive tournament on ``n`` vertices.

    Equals the path-function value of the block lengths, halved for
    symmetric types.  The halving must be exact; an odd value there would
    mean the engine or the halving rule is broken.
    """
    a = tuple(a)
    total = sum(abs(e) for e in a)
    if total != n - 1:
        raise TypeOrderMismatch(
            f"type {a} has total block length {total}, need {n - 1}"
        )
    value = f_value(unsigned(a), memo)
    if is_symmetric(a):
        if value % 2:
            raise TheoremViolation(
                f"symmetric type {a} has odd path-function value {value}"
            )
        return value // 2
    return value


# ---------------------------------------------------------------------------
# scan and ranking


@dataclass
class ScanReport:
    """Every composition of ``p`` with its path-function value.

    ``rows`` ascend by value (ties broken by composition); ``max_row`` is the
    last row, ``runner_up_row`` the best row whose composition is not the
    all-ones one.
    """

    p: int
    rows: list[tuple[tuple[int, ...], int]]
    max_row: tuple[tuple[int, ...], int]
    runner_up_row: tuple[tuple[int, ...], int]

    def to_csv_lines(self) -> list[str]:
        return [f"{format_entries(c)};{v}" for c, v in self.rows]

    def to_json_dict(self) -> dict:
        return {
            "report": "scan",
            "p": self.p,
            "rows": [
                {"composition": format_entries(c), "value": str(v)}
                for c, v in self.rows
            ],
            "max": {
                "composition": format_entries(self.max_row[0]),
                "value": str(self.max_row[1]),
            },
            "runner_up": {
                "composition": format_entries(self.runner_up_row[0]),
                "value": str(self.runner_up_row[1]),
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ScanReport":
        def row(entry):
            return (parse_composition(entry["composition"]), int(entry["value"]))

        return cls(
            p=data["p"],
            rows=[row(entry) for entry in data["rows"]],
            max_row=row(data["max"]),
            runner_up_row=row(data["runner_up"]),
        )


def _scan_chunk(comps):
    memo = MemoTable()
    return [(c, f_value(c, memo)) for c in comps]


def _scan_values(p: int, memo: MemoTable, jobs: int):
    comps = list(compositions(p))
    if jobs <= 1:
        return [(c, f_value(c, memo)) for c in comps]
    chunks = [comps[i::jobs] for i in range(jobs)]
    pairs = []
    with Pool(jobs) as pool:
        for part in pool.map(_scan_chunk, chunks):
            pairs.extend(part)
    return pairs


def scan(
    p: int,
    memo: MemoTable | None = None,
    *,
    limit: int | None = DEFAULT_SCAN_LIMIT,
    jobs: int = 1,
) -> ScanReport:
    """Evaluate the path-function on all ``2**(p-1)`` compositions of ``p``.

    ``limit`` guards against accidental huge scans; pass ``None`` (or a
    bigger value) to override.  Parallel evaluation changes nothing in the
    report: rows are fully sorted.
    """
    if p < 2:
        raise ValueError(f"scan needs p >= 2, got {p}")
    if limit is not None and p > limit:
        raise ScanTooLarge(f"scan of p={p} exceeds the limit {limit}")
    if memo is None:
        memo = MemoTable()
    pairs = _scan_values(p, memo, jobs)
    rows = sorted(pairs, key=lambda r: (r[1], r[0]))
    all_ones = (1,) * p
    runner_up = max(
        (r for r in rows if r[0] != all_ones), key=lambda r: (r[1], r[0])
    )
    return ScanReport(p=p, rows=rows, max_row=rows[-1], runner_up_row=runner_up)


# ---------------------------------------------------------------------------
# the all-ones maximum observation


@dataclass
class ConjectureVerdict:
    """Outcome of the maximality observation at one total ``p``.

    ``all_ones_is_max``: the all-ones composition is the unique maximum.
    ``runner_up_is_1_2_ones``: the second-best value is attained exactly by
    (1,2,1,...,1) and its reverse.
    ``runner_up_exceeds_half_max``: twice the runner-up value beats the
    all-ones value.  ``witnesses`` lists the offending compositions, if any.
    """

    p: int
    all_ones_is_max: bool
    runner_up_is_1_2_ones: bool
    runner_up_exceeds_half_max: bool
    witnesses: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.all_ones_is_max
            and self.runner_up_is_1_2_ones
            and self.runner_up_exceeds_half_max
        )

    def to_json_dict(self) -> dict:
        return {
            "report": "conjecture",
            "p": self.p,
            "all_ones_is_max": self.all_ones_is_max,
            "runner_up_is_1_2_ones": self.runner_up_is_1_2_ones,
            "runner_up_exceeds_half_max": self.runner_up_exceeds_half_max,
            "witnesses": [format_entries(c) for c in self.witnesses],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ConjectureVerdict":
        return cls(
            p=data["p"],
            all_ones_is_max=data["all_ones_is_max"],
            runner_up_is_1_2_ones=data["runner_up_is_1_2_ones"],
            runner_up_exceeds_half_max=data["runner_up_exceeds_half_max"],
            witnesses=[parse_composition(c) for c in data["witnesses"]],
        )


def runner_up_pattern(p: int) -> tuple[int, ...]:
    """The expected second-place composition (1, 2, 1, ..., 1) of total p."""
    if p < 3:
        raise ValueError(f"runner-up pattern needs p >= 3, got {p}")
    return (1, 2) + (1,) * (p - 3)


def check_conjecture(
    p: int,
    memo: MemoTable | None = None,
    *,
    limit: int | None = DEFAULT_SCAN_LIMIT,
    jobs: int = 1,
) -> ConjectureVerdict:
    """Scan ``p`` and judge the three maximality observations.

    Violations are findings, not errors: the verdict carries them as
    witnesses and ``ok`` turns false.
    """
    if p < 3:
        raise ValueError(f"conjecture check needs p >= 3, got {p}")
    report = scan(p, memo, limit=limit, jobs=jobs)
    values = dict(report.rows)
    all_ones = (1,) * p
    ones_value = values[all_ones]
    others = {c: v for c, v in values.items() if c != all_ones}
    runner_value = max(others.values())
    attainers = sorted(c for c, v in others.items() if v == runner_value)
    pattern = runner_up_pattern(p)
    expected = sorted({pattern, pattern[::-1]})

    all_ones_is_max = ones_value > runner_value
    runner_is_pattern = attainers == expected
    exceeds_half = 2 * runner_value > ones_value

    witnesses: list[tuple[int, ...]] = []
    if not all_ones_is_max:
        witnesses.extend(c for c, v in sorted(others.items()) if v >= ones_value)
    if not runner_is_pattern:
        witnesses.extend(c for c in attainers if c not in expected)
    if not exceeds_half:
        witnesses.extend(attainers)
    seen = set()
    witnesses = [c for c in witnesses if not (c in seen or seen.add(c))]

    return ConjectureVerdict(
        p=p,
        all_ones_is_max=all_ones_is_max,
        runner_up_is_1_2_ones=runner_is_pattern,
        runner_up_exceeds_half_max=exceeds_half,
        witnesses=witnesses,
    )


# ---------------------------------------------------------------------------
# inequality families


@dataclass
class FamilyResult:
    name: str
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class PropertySuiteReport:
    limit: int
    families: list[FamilyResult]

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.families)

    def family(self, name: str) -> FamilyResult:
        for f in self.families:
            if f.name == name:
                return f
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "report": "properties",
            "limit": self.limit,
            "families": [
                {"name": f.name, "checked": f.checked, "failures": list(f.failures)}
                for f in self.families
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PropertySuiteReport":
        return cls(
            limit=data["limit"],
            families=[
                FamilyResult(f["name"], f["checked"], list(f["failures"]))
                for f in data["families"]
            ],
        )


def _check_two_block_value(limit, F, fam):
    for q in range(2, limit + 1):
        for m in range(1, q):
            n = q - m
            fam.checked += 1
            if F((m, n)) != f_two_block(m, n):
                fam.failures.append(f"F({m},{n}) != C({q},{m})")


def _check_two_block_order(limit, F, fam):
    for q in range(2, limit + 1):
        for m in range(1, q):
            n = q - m
            for mp in range(1, q):
                np_ = q - mp
                fam.checked += 1
                got = F((m, n)) < F((mp, np_))
                want = m * n < mp * np_
                if got != want:
                    fam.failures.append(f"F({m},{n}) vs F({mp},{np_})")


def _check_block_split(limit, F, fam):
    # two blocks (a, t) against every three-block refinement (a, m, n), t = m+n
    for total in range(4, limit + 1):
        for a in range(1, total - 1):
            t = total - a
            for m in range(1, t):
                n = t - m
                fam.checked += 1
                if not F((a, t)) < F((a, m, n)):
                    fam.failures.append(f"F({a},{t}) !< F({a},{m},{n})")


def _check_three_block_prefix(limit, F, fam):
    # F(a,m,n) < F(a,m',n')  iff  mn < m'n', or the primed pair is the
    # swap (n, m) with m < n (equal products and tuples otherwise tie)
    for total in range(3, limit + 1):
        for a in range(1, total - 1):
            r = total - a
            for m in range(1, r):
                n = r - m
                for mp in range(1, r):
                    np_ = r - mp
                    fam.checked += 1
                    got = F((a, m, n)) < F((a, mp, np_))
                    want = m * n < mp * np_ or ((mp, np_) == (n, m) and m < n)
                    if got != want:
                        fam.failures.append(
                            f"F({a},{m},{n}) vs F({a},{mp},{np_})"
                        )


def _check_three_block_middle(limit, F, fam):
    for total in range(3, limit + 1):
        for a in range(1, total - 1):
            r = total - a
            for m in range(1, r):
                n = r - m
                for mp in range(1, r):
                    np_ = r - mp
                    fam.checked += 1
                    got = F((m, a, n)) < F((mp, a, np_))
                    want = m * n < mp * np_
                    if got != want:
                        fam.failures.append(
                            f"F({m},{a},{n}) vs F({mp},{a},{np_})"
                        )


def _check_four_block_swap(limit, F, fam):
    for total in range(6, limit + 1):
        for m in range(1, total - 2):
            for n in range(m + 1, total - 2):
                for a in range(1, total - m - n):
                    b = total - m - n - a
                    if b <= a:
                        continue
                    fam.checked += 1
                    if not F((m, a, b, n)) > F((m, b, a, n)):
                        fam.failures.append(
                            f"F({m},{a},{b},{n}) !> F({m},{b},{a},{n})"
                        )


# exact relations quoted for the refuted general claims; each line is
# (composition, relation, composition-or-value)
_PRINTED_RELATIONS = [
    ((3, 3), "==", 20),
    ((1, 1, 4), "==", 20),
    ((3, 4), "==", 35),
    ((1, 1, 5), "==", 27),
    ((3, 4), ">", (1, 1, 5)),
    ((1, 2, 4), "==", 85),
    ((3, 1, 3), "==", 69),
    ((1, 2, 4), ">", (3, 1, 3)),
    ((2, 11, 5), "==", 637924),
    ((11, 3, 4), "==", 631787),
    ((2, 11, 5), ">", (11, 3, 4)),
    ((2, 12, 5), "==", 1015988),
    ((12, 3, 4), "==", 984503),
    ((2, 12, 5), ">", (12, 3, 4)),
    ((6, 7, 3), "==", 835549),
    ((4, 4, 8), "==", 614823),
    ((6, 7, 3), ">", (4, 4, 8)),
    ((1, 3, 1), "==", 19),
    ((2, 1, 2), "==", 19),
    ((1, 2, 3, 1), "==", 315),
    ((2, 1, 2, 2), "==", 315),
    ((2, 4, 2), "==", 379),
    ((3, 2, 3), "==", 379),
]


def _check_printed_relations(limit, F, fam):
    for left, rel, right in _PRINTED_RELATIONS:
        lhs = F(left)
        rhs = F(right) if isinstance(right, tuple) else right
        fam.checked += 1
        holds = lhs == rhs if rel == "==" else lhs > rhs
        if not holds:
            fam.failures.append(f"F{left} {rel} {right} is false ({lhs} vs {rhs})")


def run_property_suite(limit: int = 16, memo: MemoTable | None = None) -> PropertySuiteReport:
    """Exhaustively check the known inequality families up to ``limit`` total.

    Failures are report content, not exceptions: a false instance lands in
    the family's failure list.
    """
    if memo is None:
        memo = MemoTable()

    def F(comp):
        return f_value(comp, memo)

    checks = [
        ("two_block_value", _check_two_block_value),
        ("two_block_order", _check_two_block_order),
        ("block_split", _check_block_split),
        ("three_block_prefix", _check_three_block_prefix),
        ("three_block_middle", _check_three_block_middle),
        ("four_block_swap", _check_four_block_swap),
        ("printed_relations", _check_printed_relations),
    ]
    families = []
    for name, fn in checks:
        fam = FamilyResult(name=name, checked=0)
        fn(limit, F, fam)
        families.append(fam)
    return PropertySuiteReport(limit=limit, families=families)


# ---------------------------------------------------------------------------
# differential verification against the brute-force oracle


@dataclass(frozen=True)
class Discrepancy:
    n: int
    type_key: str
    oracle: int
    expected: int
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "type": self.type_key,
            "oracle": str(self.oracle),
            "expected": str(self.expected),
            "note": self.note,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Discrepancy":
        return cls(
            n=data["n"],
            type_key=data["type"],
            oracle=int(data["oracle"]),
            expected=int(data["expected"]),
            note=data.get("note", ""),
        )


@dataclass
class OracleDiffReport:
    kind: str
    max_n: int
    seed: int | None
    checks: int
    discrepancies: list[Discrepancy]

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_json_dict(self) -> dict:
        return {
            "report": "verify",
            "kind": self.kind,
            "max_n": self.max_n,
            "seed": self.seed,
            "checks": self.checks,
            "discrepancies": [d.to_json_dict() for d in self.discrepancies],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "OracleDiffReport":
        return cls(
            kind=data["kind"],
            max_n=data["max_n"],
            seed=data["seed"],
            checks=data["checks"],
            discrepancies=[
                Discrepancy.from_json_dict(d) for d in data["discrepancies"]
            ],
        )


def verify_against_oracle(
    max_n: int,
    memo: MemoTable | None = None,
    *,
    jobs: int = 1,
    census_limit: int | None = CENSUS_LIMIT,
) -> OracleDiffReport:
    """Compare the recurrence route with the permutation census on every
    transitive tournament up to ``max_n``, key for key."""
    if max_n < 3:
        raise ValueError(f"verification needs max_n >= 3, got {max_n}")
    if memo is None:
        memo = MemoTable()
    checks = 0
    discrepancies = []
    for n in range(3, max_n + 1):
        cen = census(make_transitive(n), limit=census_limit, jobs=jobs)
        expected: dict[tuple[int, ...], int] = {}
        for comp in compositions(n - 1):
            for lead in (True, False):
                key = canonical_key(signed_lift(comp, lead))
                if key not in expected:
                    expected[key] = tt_count(n, key, memo)
        for key in sorted(set(cen.counts) | set(expected)):
            got = cen.counts.get(key, 0)
            want = expected.get(key, 0)
            checks += 1
            if got != want:
                discrepancies.append(
                    Discrepancy(n, format_entries(key), got, want, "transitive-census")
                )
    return OracleDiffReport(
        kind="transitive",
        max_n=max_n,
        seed=None,
        checks=checks,
        discrepancies=discrepancies,
    )


def verify_tournament_invariants(
    kind: str,
    max_n: int,
    seed: int = 0,
    *,
    jobs: int = 1,
    census_limit: int | None = CENSUS_LIMIT,
) -> OracleDiffReport:
    """Self-checks for non-transitive tournaments.

    For every order up to ``max_n``: the census must partition all n!/2
    paths, and the complement must show the same count for every type.  The
    nearly-transitive family additionally pins its directed-path count to
    2^(n-2) + 1.
    """
    if kind not in ("nearly", "random"):
        raise ValueError(f"unknown tournament kind: {kind!r}")
    if max_n < 3:
        raise ValueError(f"verification needs max_n >= 3, got {max_n}")
    checks = 0
    discrepancies = []
    for n in range(3, max_n + 1):
        t = make_nearly_transitive(n) if kind == "nearly" else make_random(n, seed)
        cen = census(t, limit=census_limit, jobs=jobs)
        comp_cen = census(complement(t), limit=census_limit, jobs=jobs)

        checks += 1
        total = cen.total()
        want_total = factorial(n) // 2
        if total != want_total:
            discrepancies.append(
                Discrepancy(n, "(total)", total, want_total, "partition")
            )
        for key in sorted(set(cen.counts) | set(comp_cen.counts)):
            checks += 1
            got = cen.counts.get(key, 0)
            mirrored = comp_cen.counts.get(key, 0)
            if got != mirrored:
                discrepancies.append(
                    Discrepancy(n, format_entries(key), got, mirrored, "complement")
                )
        if kind == "nearly":
            checks += 1
            directed = cen.counts.get(canonical_key((n - 1,)), 0)
            want = 2 ** (n - 2) + 1
            if directed != want:
                discrepancies.append(
                    Discrepancy(n, format_entries((n - 1,)), directed, want, "directed-count")
                )
    return OracleDiffReport(
        kind=kind,
        max_n=max_n,
        seed=seed if kind == "random" else None,
        checks=checks,
        discrepancies=discrepancies,
    )


# ---------------------------------------------------------------------------
# report (de)serialization

_REPORT_CLASSES = {
    "scan": ScanReport,
    "conjecture": ConjectureVerdict,
    "properties": PropertySuiteReport,
    "verify": OracleDiffReport,
}


def report_to_json(report) -> str:
    """JSON text for any report object; counts travel as decimal strings."""
    return json.dumps(report.to_json_dict(), indent=2)


def report_from_json(text: str):
    """Inverse of :func:`report_to_json`."""
    data = json.loads(text)
    try:
        cls = _REPORT_CLASSES[data["report"]]
    except KeyError:
        raise ValueError(f"unknown report kind in JSON: {data.get('report')!r}") from None
    return cls.from_json_dict(data)
