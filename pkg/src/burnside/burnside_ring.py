"""Marks, tables of marks, and exact membership tests for the Burnside ring.

A ghost vector assigns one integer to each subgroup conjugacy class. It
comes from an actual virtual G-set exactly when it satisfies the Dress
congruences; independently, the triangular table of marks can be solved
exactly over the rationals and membership read off from integrality of
the coefficients. Both routes are implemented in full and are expected
to agree on every input; that agreement is part of the test suite.

All arithmetic is exact (Python ints and fractions); nothing here uses
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .arith import prime_power
from .groups import FiniteGroup, Subgroup, generated_subgroup
from .lattice import SubgroupLattice, normalizer


class GhostVector:
    """One integer per subgroup class, in the lattice's canonical class order."""

    __slots__ = ("lattice", "values")

    def __init__(self, lattice: SubgroupLattice, values: Iterable[int]) -> None:
        vals = tuple(int(v) for v in values)
        if len(vals) != lattice.class_count:
            raise ValueError(
                f"expected {lattice.class_count} values, got {len(vals)}"
            )
        self.lattice = lattice
        self.values = vals

    def __mul__(self, n: int) -> "GhostVector":
        return GhostVector(self.lattice, (n * v for v in self.values))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GhostVector)
            and other.lattice is self.lattice
            and other.values == self.values
        )

    def __hash__(self) -> int:
        return hash((id(self.lattice), self.values))

    def __repr__(self) -> str:
        return f"GhostVector({self.values})"


class BurnsideElement:
    """Integer coordinates in the transitive-set basis, one per subgroup class."""

    __slots__ = ("lattice", "coefficients")

    def __init__(self, lattice: SubgroupLattice, coefficients: Iterable[int]) -> None:
        coeffs = tuple(int(c) for c in coefficients)
        if len(coeffs) != lattice.class_count:
            raise ValueError(
                f"expected {lattice.class_count} coefficients, got {len(coeffs)}"
            )
        self.lattice = lattice
        self.coefficients = coeffs

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BurnsideElement)
            and other.lattice is self.lattice
            and other.coefficients == self.coefficients
        )

    def __hash__(self) -> int:
        return hash((id(self.lattice), self.coefficients))

    def __repr__(self) -> str:
        return f"BurnsideElement({self.coefficients})"


class TableOfMarks:
    """Square matrix entries[i][j] = number of cosets in G/U_j fixed by U_i.

    Nonzero entries need U_i conjugate into U_j, so under the canonical
    class order an entry survives only when i <= j; row 0 holds the
    indices |G : U_j| and the diagonal holds |N(U_j) : U_j|.
    """

    __slots__ = ("lattice", "entries")

    def __init__(self, lattice: SubgroupLattice, entries: Sequence[Sequence[int]]) -> None:
        self.lattice = lattice
        self.entries = tuple(tuple(int(v) for v in row) for row in entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __repr__(self) -> str:
        return f"TableOfMarks({len(self.entries)}x{len(self.entries)})"


@dataclass(frozen=True)
class CongruenceViolation:
    """One failed Dress congruence: the coset sum for (U, V) misses divisibility."""

    u_class: int
    v_class: int
    index: int
    lhs_sum: int
    residue: int


@dataclass(frozen=True)
class CongruenceCertificate:
    """Outcome of the full Dress congruence system; holds iff no violations."""

    holds: bool
    violations: tuple[CongruenceViolation, ...]


@dataclass(frozen=True)
class Congruence:
    """One congruence: sum over cosets vU in V/U of x(class of <v, U>) mod (V:U).

    ``terms`` aggregates the cosets by the class of the generated
    subgroup, as (class_index, coset_count) pairs.
    """

    u_class: int
    v_class: int
    index: int
    terms: tuple[tuple[int, int], ...]


def fixed_coset_count(group: FiniteGroup, u: Subgroup, v: Subgroup) -> int:
    """Number of cosets gV in G/V with U contained in g V g^-1, by direct scan."""
    table = group.mul_table
    inv = group.inv_table
    uset = u.member_set
    seen = bytearray(group.order)
    count = 0
    for g in group.elements():
        if seen[g]:
            continue
        grow = table[g]
        coset = [grow[x] for x in v.elements]
        for c in coset:
            seen[c] = 1
        gi = inv[g]
        conj = frozenset(table[grow[x]][gi] for x in v.elements)
        if uset <= conj:
            count += 1
    return count


def mark(lattice: SubgroupLattice, i: int, j: int) -> int:
    """The mark of class i on the transitive set of class j.

    Counts cosets fixed by the class-i representative; the count does not
    depend on which representative is used.
    """
    classes = lattice.classes
    return fixed_coset_count(
        lattice.group, classes[i].representative, classes[j].representative
    )


def table_of_marks(lattice: SubgroupLattice) -> TableOfMarks:
    """The full table of marks, computed once per lattice and cached.

    Equivalent to coset-by-coset fixed point counting: the cosets of G/V
    fall into groups of |N(V)|/|V| sharing the same conjugate of V, so
    each conjugate containing U_i contributes that many fixed cosets.
    """
    if lattice._marks is not None:
        return lattice._marks
    classes = lattice.classes
    n = len(classes)
    order = lattice.group.order
    entries = [[0] * n for _ in range(n)]
    reps = [c.representative.member_set for c in classes]
    for j, cls_j in enumerate(classes):
        per_conjugate = order // (len(cls_j.members) * cls_j.order)
        for member in cls_j.members:
            mset = member.member_set
            for i in range(j + 1):
                if classes[i].order > cls_j.order:
                    break
                if reps[i] <= mset:
                    entries[i][j] += per_conjugate
    result = TableOfMarks(lattice, entries)
    lattice._marks = result
    return result


def _solver_rows(lattice: SubgroupLattice):
    """Sparse row view of the marks matrix for exact triangular solving."""
    if lattice._solver_rows is not None:
        return lattice._solver_rows
    entries = table_of_marks(lattice).entries
    n = len(entries)
    rows = []
    for i in range(n):
        row = entries[i]
        rows.append((row[i], tuple((j, row[j]) for j in range(i + 1, n) if row[j])))
    lattice._solver_rows = tuple(rows)
    return lattice._solver_rows


def ghost_of(lattice: SubgroupLattice, element: BurnsideElement) -> GhostVector:
    """Image of a Burnside element under the mark homomorphisms."""
    if element.lattice is not lattice:
        raise ValueError("element is indexed by a different lattice")
    entries = table_of_marks(lattice).entries
    coeffs = element.coefficients
    return GhostVector(
        lattice,
        (sum(row[j] * coeffs[j] for j in range(len(coeffs))) for row in entries),
    )


def _check_vector(lattice: SubgroupLattice, x: GhostVector) -> None:
    if x.lattice is not lattice or len(x.values) != lattice.class_count:
        raise ValueError("ghost vector does not match this lattice")


def _class_of_join(lattice: SubgroupLattice, base: Subgroup, rep: int) -> int:
    """Class index of <rep, base>, memoized per (base, coset) on the lattice."""
    key = (base.member_set, rep)
    cached = lattice._join_cache.get(key)
    if cached is None:
        joined = generated_subgroup(lattice.group, base.elements + (rep,))
        cached = lattice.class_index_of(joined)
        lattice._join_cache[key] = cached
    return cached


def dress_congruences(lattice: SubgroupLattice) -> tuple[Congruence, ...]:
    """All Dress congruences for the lattice, one per conjugacy class of pairs.

    Pairs (U, V) with U normal in V and (V : U) a prime power above 1 are
    enumerated with V running over class representatives and U over the
    subgroups of V, deduplicated by conjugacy under the normalizer of V;
    simultaneously conjugate pairs yield identical congruences.
    """
    if lattice._congruences is not None:
        return lattice._congruences
    group = lattice.group
    table = group.mul_table
    inv = group.inv_table
    abelian = group.is_abelian()
    out: list[Congruence] = []
    for cls in lattice.classes:
        v_rep = cls.representative
        if v_rep.order == 1:
            continue
        vset = v_rep.member_set
        velems = v_rep.elements
        nv_elems = () if abelian else normalizer(group, v_rep).elements
        seen_orbit: set[frozenset[int]] = set()
        for sub in lattice.all_subgroups:
            if sub.order >= v_rep.order:
                continue
            if prime_power(v_rep.order // sub.order) is None:
                continue
            sset = sub.member_set
            if not sset <= vset:
                continue
            if sset in seen_orbit:
                continue
            if not abelian:
                normal_in_v = True
                for v in velems:
                    vrow = table[v]
                    vi = inv[v]
                    if any(table[vrow[s]][vi] not in sset for s in sub.elements):
                        normal_in_v = False
                        break
                if not normal_in_v:
                    continue
                for g in nv_elems:
                    grow = table[g]
                    gi = inv[g]
                    seen_orbit.add(frozenset(table[grow[s]][gi] for s in sub.elements))
            else:
                seen_orbit.add(sset)
            counts: dict[int, int] = {}
            covered = set()
            for v in velems:
                if v in covered:
                    continue
                coset = [table[v][s] for s in sub.elements]
                covered.update(coset)
                cls_idx = _class_of_join(lattice, sub, min(coset))
                counts[cls_idx] = counts.get(cls_idx, 0) + 1
            out.append(
                Congruence(
                    u_class=lattice.class_index_of(sub),
                    v_class=cls.class_index,
                    index=v_rep.order // sub.order,
                    terms=tuple(sorted(counts.items())),
                )
            )
    lattice._congruences = tuple(out)
    return lattice._congruences


def dress_membership(lattice: SubgroupLattice, x: GhostVector) -> CongruenceCertificate:
    """Decide membership by checking every Dress congruence.

    The certificate lists every violated congruence in the deterministic
    enumeration order; it holds exactly when the list is empty.
    """
    _check_vector(lattice, x)
    values = x.values
    violations = []
    for cong in dress_congruences(lattice):
        total = sum(count * values[cls] for cls, count in cong.terms)
        residue = total % cong.index
        if residue:
            violations.append(
                CongruenceViolation(
                    u_class=cong.u_class,
                    v_class=cong.v_class,
                    index=cong.index,
                    lhs_sum=total,
                    residue=residue,
                )
            )
    return CongruenceCertificate(holds=not violations, violations=tuple(violations))


def marks_membership(
    lattice: SubgroupLattice, x: GhostVector
) -> tuple[bool, tuple[Fraction, ...]]:
    """Decide membership by exact triangular solve of marks * c = x.

    Returns (is_member, coefficients); the vector is a member exactly
    when every coefficient is an integer. The matrix is always
    invertible because the diagonal is positive.
    """
    _check_vector(lattice, x)
    rows = _solver_rows(lattice)
    n = len(rows)
    coeffs: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        diag, tail = rows[i]
        acc = Fraction(x.values[i])
        for j, m in tail:
            acc -= m * coeffs[j]
        coeffs[i] = acc / diag
    return all(c.denominator == 1 for c in coeffs), tuple(coeffs)


def _cyclic_census(lattice: SubgroupLattice) -> tuple[int, ...]:
    """counts[k] = number of group elements generating a class-k cyclic subgroup."""
    if lattice._cyclic_census is not None:
        return lattice._cyclic_census
    group = lattice.group
    table = group.mul_table
    counts = [0] * lattice.class_count
    for g in group.elements():
        elems = {0}
        y = g
        while y != 0:
            elems.add(y)
            y = table[y][g]
        counts[lattice.class_index_of(elems)] += 1
    lattice._cyclic_census = tuple(counts)
    return lattice._cyclic_census


def cfb_check(lattice: SubgroupLattice, x: GhostVector) -> bool:
    """Cauchy-Frobenius-Burnside relation: the cyclic-subgroup sum over all
    group elements must vanish mod |G|. Necessary for membership, not sufficient."""
    _check_vector(lattice, x)
    census = _cyclic_census(lattice)
    total = sum(c * v for c, v in zip(census, x.values))
    return total % lattice.group.order == 0


def minimal_multiplier(lattice: SubgroupLattice, x: GhostVector) -> int:
    """Least n >= 1 with n*x in the Burnside ring.

    Read off as the least common multiple of the coefficient denominators
    from the exact marks solve. Rejects the zero vector.
    """
    _check_vector(lattice, x)
    if not any(x.values):
        raise ValueError("minimal multiplier of the zero vector is not defined")
    _, coeffs = marks_membership(lattice, x)
    return lcm(*(c.denominator for c in coeffs))
