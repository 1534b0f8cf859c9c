"""Constructions for the named finite groups the tool reasons about.

Each family is realized through an explicit normal form (for the
two-generator 2-groups: g^a h^b with the defining relations applied as
rewrite rules), then materialized as a multiplication table. A small
grammar turns CLI text such as ``C(2^3)``, ``Q8`` or ``C4xC2`` into
:class:`GroupSpec` values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .arith import factorize, is_prime, partitions, prime_power
from .groups import (
    DEFAULT_PERM_ORDER_CAP,
    FiniteGroup,
    direct_product,
    load_permutation_group,
)


class SpecParseError(ValueError):
    """A group-spec string could not be parsed or has invalid parameters."""


KINDS = frozenset(
    {
        "cyclic",
        "elementary_abelian",
        "abelian_product",
        "dihedral",
        "quaternion",
        "semidihedral",
        "modular",
        "extraspecial_plus",
        "extraspecial_minus",
        "direct_product",
        "perm",
    }
)


@dataclass(frozen=True)
class GroupSpec:
    """Symbolic description of a catalog group; build with :func:`build_group`."""

    kind: str
    params: tuple = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise SpecParseError(f"unknown group kind {self.kind!r}")
        self._validate()

    def _validate(self) -> None:
        kind, params = self.kind, self.params
        if kind == "cyclic":
            p, n = params
            if not is_prime(p) or n < 0:
                raise SpecParseError(f"cyclic group needs a prime base, got C({p}^{n})")
        elif kind == "elementary_abelian":
            p, k = params
            if not is_prime(p) or k < 1:
                raise SpecParseError(f"invalid elementary abelian parameters ({p},{k})")
        elif kind == "abelian_product":
            for m in params:
                if m < 2 or prime_power(m) is None:
                    raise SpecParseError(
                        f"abelian product factors must be prime powers, got {m}"
                    )
        elif kind in ("dihedral", "quaternion"):
            pp = prime_power(params[0])
            if pp is None or pp[0] != 2 or pp[1] < 3:
                raise SpecParseError(
                    f"{kind} groups are defined for orders 2^n with n >= 3, got {params[0]}"
                )
        elif kind in ("semidihedral", "modular"):
            pp = prime_power(params[0])
            if pp is None or pp[0] != 2 or pp[1] < 4:
                raise SpecParseError(
                    f"{kind} groups are defined for orders 2^n with n >= 4, got {params[0]}"
                )
        elif kind in ("extraspecial_plus", "extraspecial_minus"):
            p = params[0]
            if not is_prime(p) or p == 2:
                raise SpecParseError(
                    f"extraspecial kinds need an odd prime, got {p}; "
                    "the order-8 cases are D(8) and Q(8)"
                )
        elif kind == "direct_product":
            a, b = params
            if not isinstance(a, GroupSpec) or not isinstance(b, GroupSpec):
                raise SpecParseError("direct product factors must be GroupSpecs")
        elif kind == "perm":
            if not params or not params[0]:
                raise SpecParseError("perm spec needs a file path")

    # convenience constructors

    @classmethod
    def cyclic(cls, p: int, n: int) -> "GroupSpec":
        return cls("cyclic", (p, n))

    @classmethod
    def trivial(cls) -> "GroupSpec":
        return cls("cyclic", (2, 0))

    @classmethod
    def elementary_abelian(cls, p: int, k: int) -> "GroupSpec":
        return cls("elementary_abelian", (p, k))

    @classmethod
    def abelian_product(cls, orders: Sequence[int]) -> "GroupSpec":
        return cls("abelian_product", tuple(int(m) for m in orders))

    @classmethod
    def dihedral(cls, order: int) -> "GroupSpec":
        return cls("dihedral", (order,))

    @classmethod
    def quaternion(cls, order: int) -> "GroupSpec":
        return cls("quaternion", (order,))

    @classmethod
    def semidihedral(cls, order: int) -> "GroupSpec":
        return cls("semidihedral", (order,))

    @classmethod
    def modular(cls, order: int) -> "GroupSpec":
        return cls("modular", (order,))

    @classmethod
    def extraspecial_plus(cls, p: int) -> "GroupSpec":
        return cls("extraspecial_plus", (p,))

    @classmethod
    def extraspecial_minus(cls, p: int) -> "GroupSpec":
        return cls("extraspecial_minus", (p,))

    @classmethod
    def direct(cls, a: "GroupSpec", b: "GroupSpec") -> "GroupSpec":
        return cls("direct_product", (a, b))

    @classmethod
    def perm_file(cls, path: str) -> "GroupSpec":
        return cls("perm", (path,))

    def order(self) -> int | None:
        """Nominal order, or None for perm-file specs (unknown before closure)."""
        kind, params = self.kind, self.params
        if kind == "cyclic":
            return params[0] ** params[1]
        if kind == "elementary_abelian":
            return params[0] ** params[1]
        if kind == "abelian_product":
            n = 1
            for m in params:
                n *= m
            return n
        if kind in ("dihedral", "quaternion", "semidihedral", "modular"):
            return params[0]
        if kind in ("extraspecial_plus", "extraspecial_minus"):
            return params[0] ** 3
        if kind == "direct_product":
            a = params[0].order()
            b = params[1].order()
            return None if a is None or b is None else a * b
        return None

    def text(self) -> str:
        """Canonical spelling in the CLI grammar."""
        kind, params = self.kind, self.params
        if kind == "cyclic":
            p, n = params
            return "C1" if n == 0 else f"C({p}^{n})"
        if kind == "elementary_abelian":
            return f"EA({params[0]},{params[1]})"
        if kind == "abelian_product":
            return "x".join(f"C{m}" for m in params) if params else "C1"
        if kind == "dihedral":
            return f"D({params[0]})"
        if kind == "quaternion":
            return f"Q({params[0]})"
        if kind == "semidihedral":
            return f"SD({params[0]})"
        if kind == "modular":
            return f"M({params[0]})"
        if kind == "extraspecial_plus":
            return f"ES+({params[0]})"
        if kind == "extraspecial_minus":
            return f"ES-({params[0]})"
        if kind == "direct_product":
            return f"{params[0].text()}x{params[1].text()}"
        return f"perm:{params[0]}"


def _cyclic_group(m: int, name: str) -> FiniteGroup:
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    gens = [1] if m > 1 else []
    return FiniteGroup(name, table, generators=gens)


def _abelian_product_group(orders: Sequence[int], name: str) -> FiniteGroup:
    if not orders:
        return _cyclic_group(1, name)
    group = _cyclic_group(orders[0], name)
    for m in orders[1:]:
        group = direct_product(group, _cyclic_group(m, f"C{m}"), name=name)
    return group


def _two_generator_2group(kind: str, order: int, name: str) -> FiniteGroup:
    # Normal form g^a h^b with a mod M, b mod 2, where M = order/2.
    # The conjugation relation h g h^-1 = g^r folds into (a,b)(c,d) =
    # (a + r^b c [+ M/2 for the quaternion h^2 correction], b + d).
    m = order // 2
    if kind in ("dihedral", "quaternion"):
        r = m - 1
    elif kind == "modular":
        r = m // 2 + 1
    else:  # semidihedral
        r = m // 2 - 1
    quaternion = kind == "quaternion"
    n = order
    table = [[0] * n for _ in range(n)]
    for a in range(m):
        for b in range(2):
            row = table[a + m * b]
            for c in range(m):
                for d in range(2):
                    t = (a + (c if b == 0 else (c * r) % m)) % m
                    e = b + d
                    if quaternion and e == 2:
                        t = (t + m // 2) % m
                    row[c + m * d] = t + m * (e % 2)
    return FiniteGroup(name, table, generators=[1, m])


def _extraspecial_plus_group(p: int, name: str) -> FiniteGroup:
    # Upper unitriangular 3x3 matrices over F_p, exponent p for odd p.
    n = p ** 3

    def enc(x: int, y: int, z: int) -> int:
        return (x * p + y) * p + z

    table = [[0] * n for _ in range(n)]
    for x1 in range(p):
        for y1 in range(p):
            for z1 in range(p):
                row = table[enc(x1, y1, z1)]
                for x2 in range(p):
                    for y2 in range(p):
                        for z2 in range(p):
                            row[enc(x2, y2, z2)] = enc(
                                (x1 + x2) % p,
                                (y1 + y2) % p,
                                (z1 + z2 + x1 * y2) % p,
                            )
    return FiniteGroup(name, table, generators=[enc(1, 0, 0), enc(0, 1, 0)])


def _extraspecial_minus_group(p: int, name: str) -> FiniteGroup:
    # Normal form g^a h^b with g of order p^2, h of order p, h g h^-1 = g^(1+p).
    p2 = p * p
    n = p2 * p
    r = 1 + p
    rpow = [pow(r, b, p2) for b in range(p)]
    table = [[0] * n for _ in range(n)]
    for a in range(p2):
        for b in range(p):
            row = table[a + p2 * b]
            rb = rpow[b]
            for c in range(p2):
                t = (a + c * rb) % p2
                for d in range(p):
                    row[c + p2 * d] = t + p2 * ((b + d) % p)
    return FiniteGroup(name, table, generators=[1, p2])


def build_group(spec: GroupSpec, *, perm_order_cap: int = DEFAULT_PERM_ORDER_CAP) -> FiniteGroup:
    """Realize a GroupSpec as a FiniteGroup whose order equals the nominal order."""
    kind, params = spec.kind, spec.params
    name = spec.text()
    if kind == "cyclic":
        return _cyclic_group(params[0] ** params[1], name)
    if kind == "elementary_abelian":
        return _abelian_product_group([params[0]] * params[1], name)
    if kind == "abelian_product":
        return _abelian_product_group(params, name)
    if kind in ("dihedral", "quaternion", "semidihedral", "modular"):
        return _two_generator_2group(kind, params[0], name)
    if kind == "extraspecial_plus":
        return _extraspecial_plus_group(params[0], name)
    if kind == "extraspecial_minus":
        return _extraspecial_minus_group(params[0], name)
    if kind == "direct_product":
        return direct_product(
            build_group(params[0], perm_order_cap=perm_order_cap),
            build_group(params[1], perm_order_cap=perm_order_cap),
            name=name,
        )
    return load_permutation_group(params[0], order_cap=perm_order_cap, name=name)


class MaximalCyclicType(Enum):
    """Outcome of classifying a 2-group with an element of half the group order."""

    QUATERNION = "quaternion"
    DIHEDRAL = "dihedral"
    MODULAR = "modular"
    SEMIDIHEDRAL = "semidihedral"
    CYCLIC = "cyclic"
    NOT_MAXIMAL_CYCLIC = "not-maximal-cyclic"


def classify_maximal_cyclic_2group(group: FiniteGroup) -> MaximalCyclicType:
    """Identify which of the four two-generator relation sets a 2-group satisfies.

    Cyclic groups report CYCLIC. A nonabelian group of order 2^n with an
    element g of order 2^(n-1) is matched against the quaternion,
    dihedral, modular, and semidihedral relations over all candidate
    (g, h) pairs. Everything else is NOT_MAXIMAL_CYCLIC. Groups of odd
    order are rejected.
    """
    n = group.order
    if n == 1:
        return MaximalCyclicType.CYCLIC
    pp = prime_power(n)
    if pp is None or pp[0] != 2:
        raise ValueError(f"classification needs a group of 2-power order, got {n}")
    orders = [group.element_order(x) for x in group.elements()]
    if max(orders) == n:
        return MaximalCyclicType.CYCLIC
    if group.is_abelian():
        return MaximalCyclicType.NOT_MAXIMAL_CYCLIC
    exp = pp[1]
    half = n // 2
    quarter = half // 2
    table = group.mul_table
    for g in group.elements():
        if orders[g] != half:
            continue
        powers = [0] * half
        y = 0
        for k in range(1, half):
            y = table[y][g]
            powers[k] = y
        in_cyc = frozenset(powers)
        g_inv = powers[half - 1]
        g_quarter = powers[quarter]
        g_mod = powers[(1 + quarter) % half]
        g_semi = powers[(quarter - 1) % half]
        for h in group.elements():
            if h in in_cyc:
                continue
            hh = table[h][h]
            conj = table[table[h][g]][group.inv_table[h]]
            if hh == g_quarter and conj == g_inv:
                return MaximalCyclicType.QUATERNION
            if hh == 0 and conj == g_inv:
                return MaximalCyclicType.DIHEDRAL
            if exp >= 4 and hh == 0 and conj == g_mod:
                return MaximalCyclicType.MODULAR
            if exp >= 4 and hh == 0 and conj == g_semi:
                return MaximalCyclicType.SEMIDIHEDRAL
    return MaximalCyclicType.NOT_MAXIMAL_CYCLIC


_ATOM_RES: tuple[tuple[re.Pattern[str], str], ...] = (
    (re.compile(r"EA\((\d+),(\d+)\)$"), "ea"),
    (re.compile(r"ES\+\((\d+)\)$"), "es+"),
    (re.compile(r"ES-\((\d+)\)$"), "es-"),
    (re.compile(r"C\((\d+)\^(\d+)\)$"), "cyclic_pow"),
    (re.compile(r"C\((\d+)\)$"), "cyclic_order"),
    (re.compile(r"C(\d+)$"), "cyclic_order"),
    (re.compile(r"D\((\d+)\)$"), "dihedral"),
    (re.compile(r"D(\d+)$"), "dihedral"),
    (re.compile(r"Q\((\d+)\)$"), "quaternion"),
    (re.compile(r"Q(\d+)$"), "quaternion"),
    (re.compile(r"SD\((\d+)\)$"), "semidihedral"),
    (re.compile(r"SD(\d+)$"), "semidihedral"),
    (re.compile(r"M\((\d+)\)$"), "modular"),
    (re.compile(r"M(\d+)$"), "modular"),
)


def _cyclic_factors(m: int) -> tuple[int, ...]:
    # Primary decomposition, largest prime power first, so C6 -> C3xC2.
    if m == 1:
        return ()
    return tuple(sorted((p ** k for p, k in factorize(m)), reverse=True))


def _parse_atom(atom: str, pos: int) -> GroupSpec:
    for pattern, tag in _ATOM_RES:
        m = pattern.match(atom)
        if not m:
            continue
        try:
            if tag == "ea":
                return GroupSpec.elementary_abelian(int(m.group(1)), int(m.group(2)))
            if tag == "es+":
                return GroupSpec.extraspecial_plus(int(m.group(1)))
            if tag == "es-":
                return GroupSpec.extraspecial_minus(int(m.group(1)))
            if tag == "cyclic_pow":
                return GroupSpec.cyclic(int(m.group(1)), int(m.group(2)))
            if tag == "cyclic_order":
                order = int(m.group(1))
                if order == 1:
                    return GroupSpec.trivial()
                pp = prime_power(order)
                if pp is not None:
                    return GroupSpec.cyclic(*pp)
                return GroupSpec.abelian_product(_cyclic_factors(order))
            if tag == "dihedral":
                return GroupSpec.dihedral(int(m.group(1)))
            if tag == "quaternion":
                return GroupSpec.quaternion(int(m.group(1)))
            if tag == "semidihedral":
                return GroupSpec.semidihedral(int(m.group(1)))
            if tag == "modular":
                return GroupSpec.modular(int(m.group(1)))
        except SpecParseError as exc:
            raise SpecParseError(f"at position {pos}: {exc}") from None
    raise SpecParseError(f"cannot parse group spec atom {atom!r} at position {pos}")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the CLI grammar: named families, bare aliases (Q8), products with 'x',
    and ``perm:<path>`` for a permutation generator file."""
    stripped = text.strip()
    if not stripped:
        raise SpecParseError("empty group spec")
    if stripped.lower().startswith("perm:"):
        path = stripped[5:].strip()
        if not path:
            raise SpecParseError("perm spec needs a file path")
        return GroupSpec.perm_file(path)
    compact = re.sub(r"\s+", "", stripped)
    atoms: list[tuple[str, int]] = []
    pos = 0
    for part in re.split(r"[xX]", compact):
        if not part:
            raise SpecParseError(f"empty factor at position {pos} in {text!r}")
        atoms.append((part.upper(), pos))
        pos += len(part) + 1
    specs = [_parse_atom(atom, p) for atom, p in atoms]
    cyclic_like = all(s.kind in ("cyclic", "abelian_product") for s in specs)
    if cyclic_like:
        factors: list[int] = []
        for s in specs:
            if s.kind == "cyclic":
                if s.params[1] > 0:
                    factors.append(s.params[0] ** s.params[1])
            else:
                factors.extend(s.params)
        if len(specs) == 1:
            return specs[0]
        return GroupSpec.abelian_product(factors)
    result = specs[0]
    for s in specs[1:]:
        result = GroupSpec.direct(result, s)
    return result


def standard_catalog(max_order: int = 64) -> tuple[GroupSpec, ...]:
    """Concrete witnesses of prime-power order up to ``max_order``.

    Contains the trivial group, cyclic p-groups for p in {2, 3, 5}, every
    abelian type up to order 32, rank-two abelian types above that, the
    dihedral, quaternion, semidihedral, and modular 2-groups, and both
    extraspecial groups of order p^3 for odd p. The abelian cut-off keeps
    subgroup lattices at a size where full enumeration stays fast.
    """
    specs: list[GroupSpec] = []
    if max_order >= 1:
        specs.append(GroupSpec.trivial())
    for p in (2, 3, 5):
        n = 1
        while p ** n <= max_order:
            specs.append(GroupSpec.cyclic(p, n))
            n += 1
        for n in range(2, 64):
            order = p ** n
            if order > max_order:
                break
            for shape in partitions(n):
                if len(shape) < 2:
                    continue
                if order > 32 and len(shape) > 2:
                    continue
                if all(part == 1 for part in shape):
                    specs.append(GroupSpec.elementary_abelian(p, n))
                else:
                    specs.append(GroupSpec.abelian_product([p ** e for e in shape]))
    for order in (8, 16, 32, 64, 128):
        if order > max_order:
            break
        specs.append(GroupSpec.dihedral(order))
        specs.append(GroupSpec.quaternion(order))
        if order >= 16:
            specs.append(GroupSpec.semidihedral(order))
            specs.append(GroupSpec.modular(order))
    for p in (3, 5):
        if p ** 3 <= max_order:
            specs.append(GroupSpec.extraspecial_plus(p))
            specs.append(GroupSpec.extraspecial_minus(p))
    return tuple(sorted(specs, key=lambda s: (s.order(), s.text())))
