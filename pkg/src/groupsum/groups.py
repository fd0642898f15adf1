"""Finite groups as dense Cayley tables, with constructions and subgroup machinery.

A group of order n is an n x n table of element indices plus the index of
the identity.  Tables are validated on construction: closure, identity,
inverses, and associativity.  Associativity is verified with the
generator-translation test (find a generating set under the operation,
then compare the two bracketings against each generator), which is a
complete check at cost O(g * n^2) instead of O(n^3).

Groups are immutable after validation and safe to share across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import numtheory

DEFAULT_ORDER_CAP = 2000


class GroupValidationError(ValueError):
    """A Cayley table failed one of the group axioms."""


class NotClosedError(GroupValidationError):
    def __init__(self, i, j, value, order):
        self.witness = (i, j)
        super().__init__(
            f"not closed: table[{i}][{j}] = {value} outside [0, {order})"
        )


class NoIdentityError(GroupValidationError):
    def __init__(self, identity, witness):
        self.witness = witness
        super().__init__(
            f"element {identity} is not a two-sided identity (fails at {witness})"
        )


class NoInverseError(GroupValidationError):
    def __init__(self, element):
        self.witness = element
        super().__init__(f"element {element} has no inverse")


class NotAssociativeError(GroupValidationError):
    def __init__(self, i, j, k):
        self.witness = (i, j, k)
        super().__init__(
            f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})"
        )


class OrderCapError(ValueError):
    def __init__(self, order, cap):
        super().__init__(f"order {order} exceeds cap {cap}")


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise OrderCapError(order, cap)


# --- table validation ---


def _closure_of(arr: np.ndarray, seed: Sequence[int]) -> np.ndarray:
    """Sorted element closure of `seed` under the table (seed must contain
    the identity, so the closure only grows)."""
    cur = np.unique(np.asarray(seed, dtype=np.intp))
    while True:
        prods = np.unique(arr[np.ix_(cur, cur)])
        if prods.size == cur.size:
            return cur
        cur = prods


def _validate_table(arr: np.ndarray, identity: int) -> None:
    n = arr.shape[0]
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise GroupValidationError(f"table must be square, got shape {arr.shape}")
    if not (0 <= identity < n):
        raise NoIdentityError(identity, "index out of range")

    bad = (arr < 0) | (arr >= n)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise NotClosedError(i, j, int(arr[i, j]), n)

    idx = np.arange(n)
    if not (np.array_equal(arr[identity], idx) and np.array_equal(arr[:, identity], idx)):
        row_bad = np.nonzero(arr[identity] != idx)[0]
        col_bad = np.nonzero(arr[:, identity] != idx)[0]
        witness = int(row_bad[0]) if row_bad.size else int(col_bad[0])
        raise NoIdentityError(identity, witness)

    has_right = (arr == identity).any(axis=1)
    has_left = (arr == identity).any(axis=0)
    missing = np.nonzero(~(has_right & has_left))[0]
    if missing.size:
        raise NoInverseError(int(missing[0]))

    # Associativity by the generator-translation test: grow a generating
    # set greedily, then check both bracketings against each generator.
    gens: list[int] = []
    closed = _closure_of(arr, [identity])
    while closed.size < n:
        in_closure = np.zeros(n, dtype=bool)
        in_closure[closed] = True
        g = int(np.nonzero(~in_closure)[0][0])
        gens.append(g)
        closed = _closure_of(arr, [identity, *gens])
    for g in gens:
        left = arr[arr[:, g], :]   # (x*g)*y
        right = arr[:, arr[g, :]]  # x*(g*y)
        if not np.array_equal(left, right):
            x, y = map(int, np.argwhere(left != right)[0])
            raise NotAssociativeError(x, g, y)


# --- the group itself ---


class FiniteGroup:
    """An immutable finite group given by its multiplication table."""

    __slots__ = ("name", "identity", "labels", "_rows", "_orders", "_inverses")

    def __init__(
        self,
        table: Union[Sequence[Sequence[int]], np.ndarray],
        identity: int = 0,
        name: str = "G",
        labels: Optional[Sequence[str]] = None,
    ):
        raw = np.asarray(table)
        if raw.ndim != 2 or raw.shape[0] == 0:
            raise GroupValidationError(f"table must be a nonempty square, got {raw.shape}")
        if not np.issubdtype(raw.dtype, np.integer):
            raise GroupValidationError(f"table entries must be integers, got {raw.dtype}")
        arr = raw.astype(np.int32)
        _validate_table(arr, identity)
        self._rows: tuple[tuple[int, ...], ...] = tuple(
            tuple(row) for row in arr.tolist()
        )
        self.identity = identity
        self.name = name
        n = len(self._rows)
        if labels is not None:
            if len(labels) != n:
                raise ValueError("need one label per element")
            self.labels = tuple(str(s) for s in labels)
        else:
            self.labels = tuple(str(i) for i in range(n))
        self._orders: Optional[tuple[int, ...]] = None
        self._inverses: Optional[tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __len__(self) -> int:
        return len(self._rows)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def mul(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def _check_index(self, g: int) -> None:
        if not (0 <= g < self.order):
            raise IndexError(f"element index {g} out of range for order {self.order}")

    def inverse(self, g: int) -> int:
        self._check_index(g)
        if self._inverses is None:
            e = self.identity
            self._inverses = tuple(row.index(e) for row in self._rows)
        return self._inverses[g]

    def power(self, g: int, k: int) -> int:
        """g**k for any integer k (negative via the inverse)."""
        self._check_index(g)
        if k < 0:
            g, k = self.inverse(g), -k
        acc = self.identity
        base = g
        while k:
            if k & 1:
                acc = self._rows[acc][base]
            base = self._rows[base][base]
            k >>= 1
        return acc

    def element_order(self, g: int) -> int:
        """Smallest m >= 1 with g^m = identity; divides the group order."""
        self._check_index(g)
        e = self.identity
        row = None
        x = g
        m = 1
        while x != e:
            if row is None:
                row = [r[g] for r in self._rows]  # right-multiplication by g
            x = row[x]
            m += 1
        return m

    def element_orders(self) -> tuple[int, ...]:
        """Orders of all elements (computed once, then cached)."""
        if self._orders is None:
            e = self.identity
            rows = self._rows
            orders = [0] * self.order
            orders[e] = 1
            for g in range(self.order):
                if orders[g]:
                    continue
                # walk the cycle of g, assigning orders to all its powers
                powers = [g]
                x = rows[g][g]
                while x != e:
                    powers.append(x)
                    x = rows[x][g]
                m = len(powers) + 1
                for idx, y in enumerate(powers, start=1):
                    if not orders[y]:
                        d = m // math.gcd(m, idx)
                        orders[y] = d
            self._orders = tuple(orders)
        return self._orders

    def cyclic_subgroup(self, g: int) -> tuple[int, ...]:
        """The powers of g: (g, g^2, ..., identity)."""
        self._check_index(g)
        e = self.identity
        rows = self._rows
        out = [g]
        x = rows[g][g]
        while x != g:
            out.append(x)
            x = rows[x][g]
        return tuple(out)

    def phi(self) -> int:
        """The totient-sum invariant: sum of phi(order(g)) over all g."""
        tot_cache: dict[int, int] = {}
        total = 0
        for o in self.element_orders():
            t = tot_cache.get(o)
            if t is None:
                t = tot_cache[o] = numtheory.totient(o)
            total += t
        return total

    def is_cyclic(self) -> bool:
        """True iff some element has order equal to the group order."""
        n = self.order
        return any(o == n for o in self.element_orders())

    def is_abelian(self) -> bool:
        rows = self._rows
        n = self.order
        return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))

    # --- subgroups ---

    def generated_subgroup(self, gens: Iterable[int]) -> "Subgroup":
        """Smallest subgroup containing `gens` (closure under products)."""
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        for g in gens:
            self._check_index(g)
        rows = self._rows
        seen = {self.identity}
        elems = [self.identity]
        for g in gens:
            if g not in seen:
                seen.add(g)
                elems.append(g)
        i = 0
        while i < len(elems):
            x = elems[i]
            j = 0
            while j < len(elems):
                y = elems[j]
                for z in (rows[x][y], rows[y][x]):
                    if z not in seen:
                        seen.add(z)
                        elems.append(z)
                j += 1
            i += 1
        return Subgroup(self, elems)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.order))

    def centralizer(self, sub: "Subgroup") -> "Subgroup":
        """Elements commuting with every member of `sub`."""
        self._own(sub)
        rows = self._rows
        members = [
            g
            for g in range(self.order)
            if all(rows[g][h] == rows[h][g] for h in sub.members)
        ]
        return Subgroup(self, members)

    def center(self) -> "Subgroup":
        return self.centralizer(self.full_subgroup())

    def normalizer(self, sub: "Subgroup") -> "Subgroup":
        """Elements g with g * sub * g^-1 == sub."""
        self._own(sub)
        rows = self._rows
        hset = sub.member_set
        members = []
        for g in range(self.order):
            gi = self.inverse(g)
            if all(rows[rows[g][h]][gi] in hset for h in sub.members):
                members.append(g)
        return Subgroup(self, members)

    def is_normal(self, sub: "Subgroup") -> bool:
        self._own(sub)
        rows = self._rows
        hset = sub.member_set
        for g in range(self.order):
            gi = self.inverse(g)
            for h in sub.members:
                if rows[rows[g][h]][gi] not in hset:
                    return False
        return True

    def _own(self, sub: "Subgroup") -> None:
        if sub.parent is not self:
            raise ValueError("subgroup belongs to a different group")

    # --- Sylow machinery ---

    def sylow_subgroup(self, q: int) -> "Subgroup":
        """A Sylow q-subgroup: full q-part of the order.

        Found by normalizer-guided growth: start from the cyclic subgroup
        of a maximal-order q-element; while the current q-subgroup H is too
        small, some q-element of N(H) outside H extends H to a strictly
        larger q-subgroup (guaranteed to exist, so the loop terminates at
        the full q-part).  Returns the trivial subgroup when q does not
        divide the order.
        """
        if not numtheory.is_prime(q):
            raise ValueError(f"{q} is not prime")
        n = self.order
        q_part = 1
        m = n
        while m % q == 0:
            q_part *= q
            m //= q
        if q_part == 1:
            return self.trivial_subgroup()

        orders = self.element_orders()

        def is_q_power(o: int) -> bool:
            while o % q == 0:
                o //= q
            return o == 1

        seed = max(
            (g for g in range(n) if is_q_power(orders[g])),
            key=lambda g: orders[g],
        )
        current = self.generated_subgroup([seed])
        while len(current) < q_part:
            normalizer = self.normalizer(current)
            hset = current.member_set
            extension = None
            for x in normalizer.members:
                if x not in hset and is_q_power(orders[x]):
                    extension = x
                    break
            if extension is None:
                raise AssertionError(
                    f"Sylow growth stalled at order {len(current)} < {q_part}"
                )
            grown = self.generated_subgroup([*current.members, extension])
            if not (len(grown) > len(current) and q_part % len(grown) == 0):
                raise AssertionError("Sylow growth produced a non-q-subgroup")
            current = grown
        return current

    def count_sylow(self, q: int) -> int:
        """Number of Sylow q-subgroups, as the index of one's normalizer.

        Checks the classical constraints: congruent to 1 mod q and divides
        the q-free part of the order.
        """
        if not numtheory.is_prime(q):
            raise ValueError(f"{q} is not prime")
        if self.order % q != 0:
            raise ValueError(f"{q} does not divide the group order {self.order}")
        p_subgroup = self.sylow_subgroup(q)
        count = self.order // len(self.normalizer(p_subgroup))
        q_free = self.order // len(p_subgroup)
        if count % q != 1 or q_free % count != 0:
            raise AssertionError(f"Sylow count {count} violates the counting laws")
        return count

    # --- JSON wire format ---

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "identity": self.identity,
            "table": [list(row) for row in self._rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteGroup":
        try:
            table = data["table"]
            identity = data["identity"]
        except KeyError as exc:
            raise GroupValidationError(f"missing field {exc} in group JSON") from exc
        group = cls(table, identity, name=data.get("name", "G"))
        if group.order != data.get("order", group.order):
            raise GroupValidationError("declared order does not match the table")
        return group

    @classmethod
    def from_json(cls, text: str) -> "FiniteGroup":
        return cls.from_json_dict(json.loads(text))


class Subgroup:
    """A validated subgroup: sorted member indices of a parent group."""

    __slots__ = ("parent", "members", "member_set")

    def __init__(self, parent: FiniteGroup, members: Iterable[int]):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self.member_set = frozenset(self.members)
        if not self.members:
            raise ValueError("a subgroup cannot be empty")
        if parent.identity not in self.member_set:
            raise ValueError("subgroup must contain the identity")
        rows = parent._rows
        for x in self.members:
            for y in self.members:
                if rows[x][y] not in self.member_set:
                    raise ValueError(
                        f"not closed: {x}*{y} = {rows[x][y]} escapes the subgroup"
                    )
        if parent.order % len(self.members) != 0:
            raise AssertionError("subgroup order must divide the group order")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.member_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.member_set == self.member_set
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.member_set))

    def __repr__(self) -> str:
        return f"Subgroup(order={len(self)} of {self.parent.name!r})"

    def is_cyclic(self) -> bool:
        orders = self.parent.element_orders()
        return any(orders[g] == len(self) for g in self.members)

    def index(self) -> int:
        return self.parent.order // len(self)


# --- module-level operation aliases ---


def from_cayley(
    table,
    identity: int = 0,
    name: str = "G",
    labels: Optional[Sequence[str]] = None,
) -> FiniteGroup:
    """Validate a raw Cayley table into a FiniteGroup."""
    return FiniteGroup(table, identity, name=name, labels=labels)


def element_order(group: FiniteGroup, g: int) -> int:
    return group.element_order(g)


def phi_of_group(group: FiniteGroup) -> int:
    """Sum of phi(order(g)) over the group's elements."""
    return group.phi()


def is_cyclic(group: FiniteGroup) -> bool:
    return group.is_cyclic()


# --- constructions ---


def cyclic(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """The cyclic group of order n, written additively on 0..n-1."""
    if n < 1:
        raise ValueError("order must be positive")
    _check_cap(n, cap)
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, 0, name=f"cyclic:{n}")


def _combine_tables(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    """Componentwise product table on pairs, indexed i1 * n2 + i2."""
    n2 = t2.shape[0]
    return (
        t1[:, None, :, None].astype(np.int64) * n2 + t2[None, :, None, :]
    ).reshape(t1.shape[0] * n2, t1.shape[0] * n2)


def abelian(factors: Sequence[int], cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Direct product of cyclic groups C_d1 x C_d2 x ... """
    factors = [int(d) for d in factors]
    if not factors or any(d < 1 for d in factors):
        raise ValueError("need positive cyclic factors")
    n = math.prod(factors)
    _check_cap(n, cap)
    table = np.zeros((1, 1), dtype=np.int64)
    for d in factors:
        idx = np.arange(d)
        table = _combine_tables(table, (idx[:, None] + idx[None, :]) % d)
    name = "abelian:" + "x".join(str(d) for d in factors)
    labels = _pair_labels(factors)
    return FiniteGroup(table, 0, name=name, labels=labels)


def _pair_labels(factors: Sequence[int]) -> list[str]:
    labels = [""]
    for d in factors:
        labels = [
            (f"{a},{i}" if a else str(i)) for a in labels for i in range(d)
        ]
    return [f"({s})" if "," in s else s for s in labels]


def dihedral(m: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Symmetries of the regular m-gon, order 2m.

    Element r + m*s is rotation^r * flip^s; flips conjugate rotations to
    their inverses.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    _check_cap(2 * m, cap)
    n = 2 * m
    table = np.zeros((n, n), dtype=np.int64)
    for s1 in (0, 1):
        for r1 in range(m):
            i = r1 + m * s1
            for s2 in (0, 1):
                for r2 in range(m):
                    j = r2 + m * s2
                    r = (r1 - r2) % m if s1 else (r1 + r2) % m
                    table[i, j] = r + m * ((s1 + s2) % 2)
    labels = [f"r{r}" for r in range(m)] + [f"sr{r}" for r in range(m)]
    return FiniteGroup(table, 0, name=f"dihedral:{m}", labels=labels)


def dicyclic(m: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """The dicyclic group of order 4m; dicyclic(2) is the quaternion group.

    Presentation a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1; element
    r + 2m*s is a^r * b^s.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    _check_cap(4 * m, cap)
    two_m = 2 * m
    n = 4 * m
    table = np.zeros((n, n), dtype=np.int64)
    for s1 in (0, 1):
        for r1 in range(two_m):
            i = r1 + two_m * s1
            for s2 in (0, 1):
                for r2 in range(two_m):
                    j = r2 + two_m * s2
                    r = (r1 - r2) % two_m if s1 else (r1 + r2) % two_m
                    s = s1 + s2
                    if s == 2:
                        r = (r + m) % two_m
                        s = 0
                    table[i, j] = r + two_m * s
    labels = [f"a{r}" for r in range(two_m)] + [f"ba{r}" for r in range(two_m)]
    return FiniteGroup(table, 0, name=f"dicyclic:{m}", labels=labels)


def _perm_parity(perm: Sequence[int]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inversions % 2


def _perm_group(perms: list[tuple[int, ...]], name: str, cap: int) -> FiniteGroup:
    _check_cap(len(perms), cap)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = [
        [index[tuple(p[q[x]] for x in range(len(p)))] for q in perms]
        for p in perms
    ]
    labels = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, index[tuple(range(len(perms[0])))], name=name, labels=labels)


def symmetric(k: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """All permutations of k points (k <= 6)."""
    if not 1 <= k <= 6:
        raise ValueError("supported for 1 <= k <= 6")
    perms = sorted(_permutations(range(k)))
    return _perm_group(perms, f"sym:{k}", cap)


def alternating(k: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Even permutations of k points (k <= 6)."""
    if not 1 <= k <= 6:
        raise ValueError("supported for 1 <= k <= 6")
    perms = sorted(p for p in _permutations(range(k)) if _perm_parity(p) == 0)
    return _perm_group(perms, f"alt:{k}", cap)


def direct_product(
    g1: FiniteGroup, g2: FiniteGroup, cap: int = DEFAULT_ORDER_CAP
) -> FiniteGroup:
    """Componentwise product on pairs, indexed i1 * |g2| + i2.

    Checks the order law o((u,t)) = o(u) o(t) / gcd(o(u), o(t)) on the
    result.
    """
    n = g1.order * g2.order
    _check_cap(n, cap)
    t1 = np.asarray(g1.table, dtype=np.int64)
    t2 = np.asarray(g2.table, dtype=np.int64)
    table = _combine_tables(t1, t2)
    identity = g1.identity * g2.order + g2.identity
    labels = [f"({a},{b})" for a in g1.labels for b in g2.labels]
    product = FiniteGroup(
        table, identity, name=f"prod:{g1.name},{g2.name}", labels=labels
    )
    orders1 = g1.element_orders()
    orders2 = g2.element_orders()
    orders = product.element_orders()
    for i1 in range(g1.order):
        for i2 in range(g2.order):
            o1, o2 = orders1[i1], orders2[i2]
            if orders[i1 * g2.order + i2] != o1 * o2 // math.gcd(o1, o2):
                raise AssertionError(
                    f"order law fails at ({i1},{i2}) in {product.name}"
                )
    return product


@dataclass(frozen=True)
class SemidirectSpec:
    """Parameters for a cyclic-by-cyclic semidirect product.

    `r` must be a unit mod `a` with r^b = 1 (mod a), so that t -> (u -> r^t u)
    is an action of the order-b cyclic group on the order-a one.  r = 1 (any
    r = 1 mod a) gives the direct product.
    """

    a: int
    b: int
    r: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("need a, b >= 1")
        r = self.r % self.a if self.a > 1 else 1
        if math.gcd(r, self.a) != 1:
            raise ValueError(f"r={self.r} is not a unit modulo {self.a}")
        if self.a > 1 and pow(r, self.b, self.a) != 1:
            raise ValueError(f"r={self.r}: r^{self.b} is not 1 modulo {self.a}")

    @property
    def is_direct(self) -> bool:
        return self.a == 1 or self.r % self.a == 1

    @property
    def coprime(self) -> bool:
        return math.gcd(self.a, self.b) == 1


def semidirect_cyclic(spec: SemidirectSpec, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """C_a acted on by C_b through multiplication by r.

    Elements are pairs (u, t) indexed u * b + t, with
    (u1, t1) * (u2, t2) = (u1 + r^t1 * u2 mod a, t1 + t2 mod b).
    """
    a, b = spec.a, spec.b
    n = a * b
    _check_cap(n, cap)
    r_pow = np.ones(b, dtype=np.int64)
    for t in range(1, b):
        r_pow[t] = (r_pow[t - 1] * spec.r) % a if a > 1 else 0
    u = np.arange(a, dtype=np.int64)
    t = np.arange(b, dtype=np.int64)
    u1, t1, u2, t2 = np.ix_(u, t, u, t)
    new_u = (u1 + r_pow[t1] * u2) % a
    new_t = (t1 + t2) % b
    table = (new_u * b + new_t).reshape(n, n)
    labels = [f"({uu},{tt})" for uu in range(a) for tt in range(b)]
    return FiniteGroup(table, 0, name=f"sdp:{a}:{b}:{spec.r}", labels=labels)


def enumerate_semidirect_units(a: int, b: int) -> list[int]:
    """All r in [1, a) acting validly (unit mod a with r^b = 1 mod a).

    Always contains r = 1; for a == 1 that is the only (trivial) action.
    """
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    if a == 1:
        return [1]
    return [
        r for r in range(1, a) if math.gcd(r, a) == 1 and pow(r, b, a) == 1
    ]


# --- the construction catalog ---


def _partitions(k: int, largest: Optional[int] = None):
    """Partitions of k as descending tuples, largest part first."""
    if k == 0:
        yield ()
        return
    cap_part = min(k, largest if largest is not None else k)
    for first in range(cap_part, 0, -1):
        for rest in _partitions(k - first, first):
            yield (first, *rest)


def abelian_invariant_factor_lists(n: int) -> list[list[int]]:
    """One invariant-factor list per abelian group of order n.

    The first entry is always [n] (the cyclic group); factors are returned
    ascending and each divides the next.
    """
    fact = numtheory.factorize(n)
    per_prime = [
        [(p, part) for part in _partitions(a)] for p, a in fact.factors
    ]
    combos = [[]]
    for options in per_prime:
        combos = [combo + [opt] for combo in combos for opt in options]
    results = []
    for combo in combos:
        depth = max((len(part) for _, part in combo), default=0)
        invariant = []
        for layer in range(depth):
            d = 1
            for p, part in combo:
                if layer < len(part):
                    d *= p ** part[layer]
            invariant.append(d)
        results.append(sorted(invariant) if invariant else [1])
    return results


def catalog(n: int, cap: int = DEFAULT_ORDER_CAP) -> list[FiniteGroup]:
    """Constructible groups of order n, deduplicated by name.

    Covers every abelian group of order n, dihedral and dicyclic groups
    when the order permits, the symmetric and alternating groups on up to
    six points when their order is exactly n, and every cyclic-by-cyclic
    semidirect product over coprime factorizations n = a*b (a, b >= 2).
    This is catalog coverage, not a classification of all groups of
    order n.
    """
    if n < 1:
        raise ValueError("order must be positive")
    _check_cap(n, cap)
    groups: list[FiniteGroup] = []
    for invariant in abelian_invariant_factor_lists(n):
        if invariant == [n] or n == 1:
            groups.append(cyclic(n, cap))
        else:
            groups.append(abelian(invariant, cap))
    if n % 2 == 0 and n >= 6:
        groups.append(dihedral(n // 2, cap))
    if n % 4 == 0 and n >= 8:
        groups.append(dicyclic(n // 4, cap))
    for k in (3, 4, 5, 6):
        if math.factorial(k) == n:
            groups.append(symmetric(k, cap))
        if math.factorial(k) // 2 == n:
            groups.append(alternating(k, cap))
    for a in numtheory.divisors(n):
        b = n // a
        if a < 2 or b < 2 or math.gcd(a, b) != 1:
            continue
        for r in enumerate_semidirect_units(a, b):
            groups.append(semidirect_cyclic(SemidirectSpec(a, b, r), cap))
    seen = set()
    unique = []
    for group in groups:
        if group.name not in seen:
            seen.add(group.name)
            unique.append(group)
    return unique
