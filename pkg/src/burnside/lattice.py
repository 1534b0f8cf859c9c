"""Full subgroup lattices: enumeration, conjugacy classes, and family selection.

The class order is canonical so that everything indexed by it (ghost
vectors, tables of marks) is byte-stable across runs: ascending subgroup
order, ties broken by descending class size, then by the representative's
sorted element list. Class 0 is the trivial subgroup and the last class
is the whole group.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .arith import prime_power
from .groups import (
    CapExceededError,
    FiniteGroup,
    Subgroup,
    conjugate_subgroup,
    generated_subgroup,
)

DEFAULT_ENUMERATION_CAP = 256


class SubgroupFamily(Enum):
    """Conjugation-invariant families of subgroups used for indicator vectors."""

    ELEMENTARY_ABELIAN = "ea"
    CYCLIC = "cyclic"
    ALL = "all"


class SubgroupClass:
    """One conjugacy class of subgroups with its structural flags."""

    __slots__ = (
        "class_index",
        "representative",
        "members",
        "order",
        "is_cyclic",
        "is_elementary_abelian",
        "is_normal",
    )

    def __init__(
        self,
        class_index: int,
        members: tuple[Subgroup, ...],
        *,
        is_cyclic: bool,
        is_elementary_abelian: bool,
    ) -> None:
        self.class_index = class_index
        self.members = members
        self.representative = members[0]
        self.order = members[0].order
        self.is_cyclic = is_cyclic
        self.is_elementary_abelian = is_elementary_abelian
        self.is_normal = len(members) == 1

    def __repr__(self) -> str:
        return (
            f"SubgroupClass(index={self.class_index}, order={self.order}, "
            f"size={len(self.members)})"
        )


class SubgroupLattice:
    """All subgroups of a group, partitioned into conjugacy classes."""

    __slots__ = (
        "group",
        "all_subgroups",
        "classes",
        "_class_by_set",
        "_marks",
        "_solver_rows",
        "_congruences",
        "_cyclic_census",
        "_join_cache",
    )

    def __init__(self, group: FiniteGroup, classes: tuple[SubgroupClass, ...]) -> None:
        self.group = group
        self.classes = classes
        subs: list[Subgroup] = []
        by_set: dict[frozenset[int], int] = {}
        for cls in classes:
            for member in cls.members:
                subs.append(member)
                by_set[member.member_set] = cls.class_index
        self.all_subgroups = tuple(sorted(subs))
        self._class_by_set = by_set
        self._marks = None
        self._solver_rows = None
        self._congruences = None
        self._cyclic_census = None
        self._join_cache: dict = {}

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_index_of(self, sub: Subgroup | Iterable[int]) -> int:
        key = sub.member_set if isinstance(sub, Subgroup) else frozenset(sub)
        try:
            return self._class_by_set[key]
        except KeyError:
            raise ValueError("subgroup does not belong to this lattice") from None

    def __repr__(self) -> str:
        return (
            f"SubgroupLattice({self.group.name!r}, subgroups={len(self.all_subgroups)}, "
            f"classes={self.class_count})"
        )


def _cyclic_subgroup_sets(group: FiniteGroup) -> list[tuple[frozenset[int], int]]:
    """Distinct cyclic subgroups as (element set, canonical generator) pairs."""
    table = group.mul_table
    seen: set[frozenset[int]] = set()
    out: list[tuple[frozenset[int], int]] = []
    for g in group.elements():
        elems = {0}
        y = g
        while y != 0:
            elems.add(y)
            y = table[y][g]
        fs = frozenset(elems)
        if fs not in seen:
            seen.add(fs)
            out.append((fs, g))
    return out


def _closure_of_generators(group: FiniteGroup, gens: tuple[int, ...]) -> frozenset[int]:
    return generated_subgroup(group, gens).member_set


def enumerate_subgroups(
    group: FiniteGroup, *, cap: int | None = None
) -> SubgroupLattice:
    """Enumerate every subgroup of the group and classify up to conjugacy.

    Layered construction: all cyclic subgroups first, then repeated joins
    of known subgroups with cyclic subgroups until nothing new appears.
    Every subgroup is the join of its own cyclic subgroups, so the layers
    exhaust the lattice. Groups larger than the cap are rejected.
    """
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if group.order > limit:
        raise CapExceededError(
            f"group order {group.order} exceeds the enumeration cap {limit}"
        )
    cyclics = _cyclic_subgroup_sets(group)
    # Track a small generating set per subgroup; joins then only need to
    # close over generators instead of whole element sets.
    gens_of: dict[frozenset[int], tuple[int, ...]] = {}
    for fs, g in cyclics:
        gens_of.setdefault(fs, (g,) if len(fs) > 1 else ())
    trivial = frozenset({0})
    gens_of.setdefault(trivial, ())
    frontier = list(gens_of)
    while frontier:
        fresh: list[frozenset[int]] = []
        for current in frontier:
            base_gens = gens_of[current]
            for cyc_set, cyc_gen in cyclics:
                if cyc_set <= current:
                    continue
                joined = _closure_of_generators(group, base_gens + (cyc_gen,))
                if joined not in gens_of:
                    gens_of[joined] = base_gens + (cyc_gen,)
                    fresh.append(joined)
        frontier = fresh

    abelian = group.is_abelian()
    remaining = set(gens_of)
    orbits: list[list[frozenset[int]]] = []
    for fs in sorted(remaining, key=lambda s: (len(s), sorted(s))):
        if fs not in remaining:
            continue
        if abelian:
            orbit = {fs}
        else:
            sub = Subgroup(fs)
            orbit = {
                conjugate_subgroup(group, sub, g).member_set for g in group.elements()
            }
        remaining -= orbit
        orbits.append(sorted(orbit, key=sorted))

    staged = []
    for orbit in orbits:
        members = tuple(Subgroup(fs) for fs in orbit)
        rep = members[0]
        is_cyclic = any(
            group.element_order(x) == rep.order for x in rep.elements
        )
        staged.append(
            (
                rep.order,
                -len(members),
                rep.elements,
                members,
                is_cyclic,
                is_elementary_abelian(group, rep),
            )
        )
    staged.sort(key=lambda item: item[:3])
    classes = tuple(
        SubgroupClass(
            idx,
            members,
            is_cyclic=is_cyc,
            is_elementary_abelian=is_ea,
        )
        for idx, (_, _, _, members, is_cyc, is_ea) in enumerate(staged)
    )
    if classes[0].order != 1 or classes[-1].order != group.order:
        raise RuntimeError("subgroup enumeration lost the trivial subgroup or the group")
    return SubgroupLattice(group, classes)


def normalizer(group: FiniteGroup, sub: Subgroup) -> Subgroup:
    """The largest subgroup in which ``sub`` is normal; always contains ``sub``."""
    target = sub.member_set
    table = group.mul_table
    inv = group.inv_table
    members = []
    for g in group.elements():
        grow = table[g]
        gi = inv[g]
        if all(table[grow[u]][gi] in target for u in sub.elements):
            members.append(g)
    return Subgroup(members)


def is_elementary_abelian(group: FiniteGroup, sub: Subgroup) -> bool:
    """True iff the subgroup is abelian of prime exponent (or trivial).

    Subgroups of non-prime-power order are never elementary abelian.
    """
    if sub.order == 1:
        return True
    pp = prime_power(sub.order)
    if pp is None:
        return False
    p = pp[0]
    table = group.mul_table
    for x in sub.elements:
        if group.power(x, p) != 0:
            return False
    elems = sub.elements
    for i, a in enumerate(elems):
        row = table[a]
        for b in elems[i + 1 :]:
            if row[b] != table[b][a]:
                return False
    return True


def maximal_elementary_abelian(group: FiniteGroup) -> Subgroup:
    """For an abelian p-group, the subgroup of all elements of order dividing p."""
    if not group.is_abelian():
        raise ValueError(
            "maximal elementary abelian subgroup is only defined here for abelian groups"
        )
    if group.order == 1:
        return Subgroup([0])
    pp = prime_power(group.order)
    if pp is None:
        raise ValueError(f"group order {group.order} is not a prime power")
    p = pp[0]
    return Subgroup(x for x in group.elements() if group.power(x, p) == 0)


def select_family(lattice: SubgroupLattice, family: SubgroupFamily) -> frozenset[int]:
    """Class indices whose members lie in the family.

    The predicates are conjugation-invariant, so membership of the
    representative decides the whole class.
    """
    if family is SubgroupFamily.ALL:
        return frozenset(range(lattice.class_count))
    if family is SubgroupFamily.CYCLIC:
        return frozenset(c.class_index for c in lattice.classes if c.is_cyclic)
    if family is SubgroupFamily.ELEMENTARY_ABELIAN:
        return frozenset(
            c.class_index for c in lattice.classes if c.is_elementary_abelian
        )
    raise ValueError(f"unknown family {family!r}")
