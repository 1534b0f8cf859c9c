"""Concrete finite groups backed by full multiplication tables.

Elements are integer ids in ``range(order)`` and id 0 is always the
identity. Groups, subgroups, and everything derived from them are
immutable after construction, so instances can be shared freely between
threads.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

DEFAULT_PERM_ORDER_CAP = 1024

IDENTITY = 0


class CapExceededError(ValueError):
    """A computation would exceed a configured order cap."""


class FiniteGroup:
    """Finite group defined by a complete multiplication table.

    The table is validated for shape, identity behaviour, and
    cancellation (each row and column is a permutation). Associativity
    is not checked here because it is cubic in the order; use
    :func:`verify_group_axioms` when that guarantee is needed.
    """

    __slots__ = ("name", "order", "mul_table", "inv_table", "generators", "_abelian")

    def __init__(
        self,
        name: str,
        mul_table: Sequence[Sequence[int]],
        *,
        generators: Sequence[int] | None = None,
    ) -> None:
        order = len(mul_table)
        if order == 0:
            raise ValueError("multiplication table is empty")
        table = tuple(tuple(int(v) for v in row) for row in mul_table)
        full = frozenset(range(order))
        for i, row in enumerate(table):
            if len(row) != order:
                raise ValueError(f"row {i} has length {len(row)}, expected {order}")
            if frozenset(row) != full:
                raise ValueError(f"row {i} is not a permutation of the elements")
        for j in range(order):
            if frozenset(row[j] for row in table) != full:
                raise ValueError(f"column {j} is not a permutation of the elements")
        for x in range(order):
            if table[0][x] != x or table[x][0] != x:
                raise ValueError("element 0 does not act as the identity")
        inv = [0] * order
        for x in range(order):
            for y in range(order):
                if table[x][y] == IDENTITY:
                    inv[x] = y
                    break
        for x in range(order):
            if table[inv[x]][x] != IDENTITY:
                raise ValueError(f"element {x} has no two-sided inverse")
        self.name = str(name)
        self.order = order
        self.mul_table = table
        self.inv_table = tuple(inv)
        self.generators = None if generators is None else tuple(int(g) for g in generators)
        self._abelian: bool | None = None

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def conjugate(self, g: int, x: int) -> int:
        """Return g*x*g^-1."""
        return self.mul_table[self.mul_table[g][x]][self.inv_table[g]]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x = self.inv_table[x]
            k = -k
        acc = IDENTITY
        for _ in range(k):
            acc = self.mul_table[acc][x]
        return acc

    def element_order(self, x: int) -> int:
        n = 1
        y = x
        while y != IDENTITY:
            y = self.mul_table[y][x]
            n += 1
        return n

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        if self._abelian is None:
            table = self.mul_table
            self._abelian = all(
                table[a][b] == table[b][a]
                for a in range(self.order)
                for b in range(a + 1, self.order)
            )
        return self._abelian

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


class Subgroup:
    """A subgroup stored as its sorted element ids plus a hash set."""

    __slots__ = ("elements", "member_set")

    def __init__(self, elements: Iterable[int]) -> None:
        elems = tuple(sorted({int(x) for x in elements}))
        self.elements = elems
        self.member_set = frozenset(elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    def issubset(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subgroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __lt__(self, other: "Subgroup") -> bool:
        return (self.order, self.elements) < (other.order, other.elements)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, elements={self.elements})"


def generated_subgroup(group: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup of ``group`` containing ``seed``.

    The empty seed yields the trivial subgroup. Closure is a word search
    over the generators; inverses come for free in a finite group.
    """
    table = group.mul_table
    gens = sorted({int(g) for g in seed})
    for g in gens:
        if not 0 <= g < group.order:
            raise ValueError(f"element id {g} out of range")
    found = [IDENTITY]
    seen = {IDENTITY}
    for g in gens:
        if g not in seen:
            seen.add(g)
            found.append(g)
    i = 0
    while i < len(found):
        x = found[i]
        row = table[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                found.append(y)
        i += 1
    return Subgroup(seen)


def conjugate_subgroup(group: FiniteGroup, sub: Subgroup, g: int) -> Subgroup:
    """The subgroup g*U*g^-1; always has the same order as U."""
    table = group.mul_table
    gi = group.inv_table[g]
    grow = table[g]
    return Subgroup(table[grow[u]][gi] for u in sub.elements)


def is_closed_subset(group: FiniteGroup, elements: Iterable[int]) -> bool:
    """True iff the set contains the identity and is closed under products."""
    elems = frozenset(elements)
    if IDENTITY not in elems:
        return False
    table = group.mul_table
    for a in elems:
        row = table[a]
        for b in elems:
            if row[b] not in elems:
                return False
    return True


def subgroup_from_elements(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """Build a Subgroup after checking closure; raises ValueError otherwise."""
    elems = frozenset(int(x) for x in elements) | {IDENTITY}
    if not is_closed_subset(group, elems):
        raise ValueError("element set is not closed under the group operation")
    return Subgroup(elems)


def verify_group_axioms(group: FiniteGroup, *, generators: Sequence[int] | None = None) -> None:
    """Check associativity exhaustively, or via Light's test when generators are given.

    Light's test only needs the triples (a, g, b) with g a generator,
    provided the generators actually generate the group; that closure is
    checked first. Raises ValueError on any failure.
    """
    table = group.mul_table
    n = group.order
    if generators is not None:
        gen = generated_subgroup(group, generators)
        if gen.order != n:
            raise ValueError("given generators do not generate the group")
        probes: Iterable[int] = generators
    else:
        probes = range(n)
    for g in probes:
        grow = table[g]
        for a in range(n):
            ag = table[a][g]
            arow = table[a]
            agrow = table[ag]
            for b in range(n):
                if agrow[b] != arow[grow[b]]:
                    raise ValueError(f"associativity fails at ({a}, {g}, {b})")


def direct_product(g1: FiniteGroup, g2: FiniteGroup, *, name: str | None = None) -> FiniteGroup:
    """Direct product with element ids packed as a*|G2| + b."""
    o1, o2 = g1.order, g2.order
    t1, t2 = g1.mul_table, g2.mul_table
    n = o1 * o2
    table = [[0] * n for _ in range(n)]
    for a1 in range(o1):
        r1 = t1[a1]
        for b1 in range(o2):
            row = table[a1 * o2 + b1]
            r2 = t2[b1]
            for a2 in range(o1):
                base = r1[a2] * o2
                col = a2 * o2
                for b2 in range(o2):
                    row[col + b2] = base + r2[b2]
    gens: list[int] = []
    for g in g1.generators or ():
        gens.append(g * o2)
    for g in g2.generators or ():
        gens.append(g)
    return FiniteGroup(
        name or f"{g1.name}x{g2.name}",
        table,
        generators=gens or None,
    )


_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_DEGREE_RE = re.compile(r"degree\s+(\d+)\s*$")


def parse_permutation(text: str, degree: int) -> tuple[int, ...]:
    """Parse one permutation in zero-based disjoint-cycle notation, e.g. ``(0 1 2)(3 4)``."""
    stripped = text.strip()
    rest = _CYCLE_RE.sub("", stripped)
    if rest.strip():
        raise ValueError(f"unexpected text {rest.strip()!r} in permutation {stripped!r}")
    perm = list(range(degree))
    used: set[int] = set()
    for m in _CYCLE_RE.finditer(stripped):
        points = [int(tok) for tok in m.group(1).split()]
        if not points:
            continue
        for p in points:
            if not 0 <= p < degree:
                raise ValueError(f"point {p} out of range for degree {degree}")
            if p in used:
                raise ValueError(f"point {p} repeated; cycles must be disjoint")
            used.add(p)
        for i, p in enumerate(points):
            perm[p] = points[(i + 1) % len(points)]
    return tuple(perm)


def parse_permutation_file(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Parse a generator file: first line ``degree n``, then one cycle expression per line."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty generator file")
    m = _DEGREE_RE.match(lines[0].strip())
    if not m:
        raise ValueError(f"first line must be 'degree n', got {lines[0].strip()!r}")
    degree = int(m.group(1))
    if degree < 1:
        raise ValueError("degree must be at least 1")
    gens = [parse_permutation(ln, degree) for ln in lines[1:]]
    return degree, gens


def group_from_perm_generators(
    degree: int,
    generators: Sequence[Sequence[int]],
    *,
    order_cap: int = DEFAULT_PERM_ORDER_CAP,
    name: str | None = None,
) -> FiniteGroup:
    """Close a set of permutations of ``{0..degree-1}`` into a multiplication table.

    Element ids follow the breadth-first closure order from the
    generators in input order, with the identity first, so tables are
    reproducible. Raises CapExceededError if the closure would exceed
    ``order_cap``.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    gens: list[tuple[int, ...]] = []
    for k, g in enumerate(generators):
        perm = tuple(int(x) for x in g)
        if len(perm) != degree or sorted(perm) != list(range(degree)):
            raise ValueError(f"generator {k} is not a bijection on 0..{degree - 1}")
        gens.append(perm)
    identity = tuple(range(degree))
    perms: list[tuple[int, ...]] = [identity]
    index: dict[tuple[int, ...], int] = {identity: 0}
    pos = 0
    while pos < len(perms):
        base = perms[pos]
        for g in gens:
            nxt = tuple(base[p] for p in g)
            if nxt not in index:
                if len(perms) >= order_cap:
                    raise CapExceededError(
                        f"closure exceeds the order cap {order_cap}"
                    )
                index[nxt] = len(perms)
                perms.append(nxt)
        pos += 1
    n = len(perms)
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(perms):
        row = table[i]
        for j, q in enumerate(perms):
            row[j] = index[tuple(p[x] for x in q)]
    return FiniteGroup(
        name or f"perm-group(degree {degree})",
        table,
        generators=[index[g] for g in gens],
    )


def load_permutation_group(
    path: str,
    *,
    order_cap: int = DEFAULT_PERM_ORDER_CAP,
    name: str | None = None,
) -> FiniteGroup:
    """Read a generator file (see :func:`parse_permutation_file`) and close it."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read generator file {path!r}: {exc}") from exc
    degree, gens = parse_permutation_file(text)
    return group_from_perm_generators(
        degree, gens, order_cap=order_cap, name=name or f"perm:{path}"
    )
