"""Cross-validating sweeps over a fully enumerated semigroup.

A survey runs every fast decider against the brute-force oracle: witness
constructions are verified by composition, the membership-level predicates
are compared element by element, and the Green's deciders are compared
with the ideal-definition answers on every ordered pair.  Anything that
disagrees lands in the discrepancy list, which must come back empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import greens, regularity
from .core import Member, Partition
from .oracle import DEFAULT_CAP, SemigroupTable, enumerate_semigroup


@dataclass
class SurveyReport:
    blocks: tuple[tuple[int, ...], ...]
    size: int
    class_counts: dict[str, int]
    regular_count: int
    unit_regular_count: int
    discrepancies: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def as_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "size": self.size,
            "class_counts": dict(self.class_counts),
            "regular_count": self.regular_count,
            "unit_regular_count": self.unit_regular_count,
            "discrepancies": list(self.discrepancies),
        }


@dataclass
class ConjectureRow:
    """One size-profile class: its conjecture data and its class sizes.

    Every element with this profile shares the consecutive pair, the
    exceptional-set size, and the two-sided class, so reporting per profile
    covers every element without repeating |B| near-identical lines.
    """

    profile: tuple[tuple[int, int], ...]
    element_count: int
    representative: tuple[int, ...]
    lambda1: int
    lambda2: int
    exceptional_blocks: tuple[int, ...]
    two_consecutive: bool
    d_class_size: int
    j_class_size: int

    @property
    def d_equals_j(self) -> bool:
        return self.d_class_size == self.j_class_size

    def as_dict(self) -> dict:
        return {
            "profile": [list(pair) for pair in self.profile],
            "element_count": self.element_count,
            "representative": list(self.representative),
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "exceptional_blocks": list(self.exceptional_blocks),
            "exceptional_count": len(self.exceptional_blocks),
            "two_consecutive": self.two_consecutive,
            "d_class_size": self.d_class_size,
            "j_class_size": self.j_class_size,
            "d_equals_j": self.d_equals_j,
        }


@dataclass
class ConjectureReport:
    blocks: tuple[tuple[int, ...], ...]
    size: int
    rows: list[ConjectureRow]
    two_consecutive_elements: int

    @property
    def d_equals_j(self) -> bool:
        return all(row.d_equals_j for row in self.rows)

    def as_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "size": self.size,
            "rows": [row.as_dict() for row in self.rows],
            "two_consecutive_elements": self.two_consecutive_elements,
            "d_equals_j": self.d_equals_j,
        }


def _oracle_class_counts(table: SemigroupTable) -> dict[str, int]:
    """Class counts straight from the ideal structure.

    D-classes are the connected components of the incidence between
    L-classes and R-classes, which is exactly what composing the two
    equivalences produces.
    """
    lids, rids = table.l_class_ids, table.r_class_ids
    parent: dict[tuple[str, int], tuple[str, int]] = {}

    def find(node):
        root = node
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[node] != root:
            parent[node], node = root, parent[node]
        return root

    for k in range(table.size):
        a, b = find(("L", lids[k])), find(("R", rids[k]))
        if a != b:
            parent[a] = b

    return {
        "L": len(set(lids)),
        "R": len(set(rids)),
        "H": len({(lids[k], rids[k]) for k in range(table.size)}),
        "D": len({find(("L", lids[k])) for k in range(table.size)}),
        "J": len(set(table.j_class_ids)),
    }


def _decider_class_counts(members: list[Member]) -> dict[str, int]:
    """The same counts from the per-element keys the deciders compare."""
    l_keys = [tuple(sorted(tuple(sorted(s)) for s in m.image_sets)) for m in members]
    r_keys = [m.kernel for m in members]
    profiles = [m.profile for m in members]
    return {
        "L": len(set(l_keys)),
        "R": len(set(r_keys)),
        "H": len(set(zip(l_keys, r_keys))),
        "D": len(set(profiles)),
        "J": len(set(profiles)),
    }


def _check_element(
    member: Member,
    p: Partition,
    table: SemigroupTable,
    problems: list[str],
) -> tuple[bool, bool]:
    """Regularity checks for one element: (regular, unit-regular)."""
    from .oracle import oracle_regular, oracle_unit_regular

    t = member.transformation
    label = list(t.image)

    regular = oracle_regular(t, table)
    if not regular:
        problems.append(f"element {label}: no inner inverse found by search")
    witness = regularity.regular_witness(member, p)
    if not regularity.witness_is_valid(member, witness, p):
        problems.append(f"element {label}: regular witness failed verification")

    fast = regularity.is_unit_regular(member, p)
    slow = oracle_unit_regular(t, table)
    if fast != slow:
        problems.append(
            f"element {label}: unit-regularity decider says {fast}, search says {slow}"
        )
    if fast:
        uw = regularity.unit_regular_witness(member, p)
        if not regularity.witness_is_valid(member, uw, p):
            problems.append(f"element {label}: unit witness failed verification")
    return regular, fast


def _check_pair(
    a: Member,
    b: Member,
    p: Partition,
    table: SemigroupTable,
    problems: list[str],
) -> None:
    from . import oracle as o

    ta, tb = a.transformation, b.transformation
    label = f"pair ({list(ta.image)}, {list(tb.image)})"

    checks = [
        ("leq_L", greens.leq_L(a, b, p), o.oracle_leq_L(ta, tb, table)),
        ("eq_L", greens.eq_L(a, b, p), o.oracle_eq_L(ta, tb, table)),
        ("leq_R", greens.leq_R(a, b, p), o.oracle_leq_R(ta, tb, table)),
        ("eq_R", greens.eq_R(a, b, p), o.oracle_eq_R(ta, tb, table)),
        ("eq_D", greens.eq_D(a, b, p), o.oracle_eq_D(ta, tb, table)),
        ("leq_J", greens.leq_J(a, b, p), o.oracle_leq_J(ta, tb, table)),
        ("eq_J", greens.eq_J(a, b, p), o.oracle_eq_J(ta, tb, table)),
        ("eq_H", greens.eq_H(a, b, p), o.oracle_eq_H(ta, tb, table)),
    ]
    for name, fast, slow in checks:
        holds = fast if isinstance(fast, bool) else fast is not None
        if holds != slow:
            problems.append(f"{label}: {name} decider says {holds}, ideals say {slow}")
        if isinstance(fast, greens.GreensWitness) and not greens.verify_witness(
            fast, a, b, p
        ):
            problems.append(f"{label}: {name} witness failed substitution")

    matched = greens.eq_D_by_matching(a, b, p)
    profiled = greens.eq_D(a, b, p)
    if (matched is None) != (profiled is None):
        problems.append(f"{label}: eq_D matching and profile routes disagree")
    if matched is not None and not greens.verify_witness(matched, a, b, p):
        problems.append(f"{label}: eq_D matching witness failed substitution")


def run_survey(
    p: Partition, cap: int = DEFAULT_CAP, table: SemigroupTable | None = None
) -> SurveyReport:
    if table is None:
        table = enumerate_semigroup(p, cap)
    members = [Member(p, t) for t in table.elements]
    problems: list[str] = []

    regular = 0
    unit_regular = 0
    for member in members:
        is_reg, is_ureg = _check_element(member, p, table, problems)
        regular += is_reg
        unit_regular += is_ureg

    for a in members:
        for b in members:
            _check_pair(a, b, p, table, problems)

    counts = _oracle_class_counts(table)
    recounts = _decider_class_counts(members)
    for name, value in counts.items():
        if recounts[name] != value:
            problems.append(
                f"class count {name}: ideals give {value},"
                f" per-element keys give {recounts[name]}"
            )
    if counts["D"] != counts["J"]:
        problems.append(
            f"D-class count {counts['D']} differs from J-class count {counts['J']}"
        )

    return SurveyReport(
        blocks=p.blocks,
        size=table.size,
        class_counts=counts,
        regular_count=regular,
        unit_regular_count=unit_regular,
        discrepancies=problems,
    )


def run_conjecture(
    p: Partition, cap: int = DEFAULT_CAP, table: SemigroupTable | None = None
) -> ConjectureReport:
    if table is None:
        table = enumerate_semigroup(p, cap)
    members = [Member(p, t) for t in table.elements]

    by_profile: dict = {}
    for k, member in enumerate(members):
        by_profile.setdefault(member.profile, []).append(k)

    lids, rids = table.l_class_ids, table.r_class_ids
    pairs = table.lr_pairs
    rows: list[ConjectureRow] = []
    flagged = 0
    for profile in sorted(by_profile, key=lambda pr: pr.counts):
        indices = by_profile[profile]
        rep = members[indices[0]]
        lam1, lam2, exceptional = greens.conjecture_condition(rep, p)
        consecutive = greens.two_consecutive_condition(rep, p) is not None
        d_size = sum(
            1
            for g in range(table.size)
            if (lids[indices[0]], rids[g]) in pairs
        )
        j_ideal = table.twosided_ideals[indices[0]]
        j_size = sum(
            1 for g in range(table.size) if table.twosided_ideals[g] == j_ideal
        )
        if consecutive:
            flagged += len(indices)
        rows.append(
            ConjectureRow(
                profile=profile.counts,
                element_count=len(indices),
                representative=rep.transformation.image,
                lambda1=lam1,
                lambda2=lam2,
                exceptional_blocks=exceptional,
                two_consecutive=consecutive,
                d_class_size=d_size,
                j_class_size=j_size,
            )
        )

    return ConjectureReport(
        blocks=p.blocks,
        size=table.size,
        rows=rows,
        two_consecutive_elements=flagged,
    )
