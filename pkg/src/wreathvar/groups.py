"""Concrete finite groups on integer-indexed elements.

Every group has elements ``0 .. order-1`` with ``0`` the identity. Small
groups (order up to ``CAPS.table``) get a materialized multiplication
table on first use; larger ones multiply through the functional rule of
their constructor.

Wreath products are regular: ``A wr B`` has elements ``(f, b)`` with
``f: B -> A`` and multiplication

    (f1, b1)(f2, b2) = (x -> f1(x) * f2(x * b1), b1 * b2)

i.e. the top group acts on coordinates by right translation.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from sympy import factorint

from .abelian import AbelianFE, normalize
from .errors import CapExceeded, NotAbelian, NotFinite


@dataclass
class Caps:
    order: int = 10**6
    table: int = 2048

    @classmethod
    def from_env(cls) -> Caps:
        caps = cls()
        if "WREATHVAR_ORDER_CAP" in os.environ:
            caps.order = int(os.environ["WREATHVAR_ORDER_CAP"])
        if "WREATHVAR_TABLE_CAP" in os.environ:
            caps.table = int(os.environ["WREATHVAR_TABLE_CAP"])
        return caps


CAPS = Caps.from_env()


@dataclass(frozen=True)
class GroupInvariants:
    """``nilpotency_class`` / ``derived_length`` are None for non-nilpotent / non-soluble groups."""

    order: int
    exponent: int
    nilpotency_class: Optional[int]
    derived_length: Optional[int]
    is_abelian: bool


class ConcreteGroup:
    """Base class; subclasses supply ``_mul``, ``_inv`` and generators."""

    def __init__(self, order: int, gens: Sequence[int], label: str):
        if order > CAPS.order:
            raise CapExceeded(f"{label} has order {order} > order cap {CAPS.order}")
        self.order = order
        self.gens = tuple(g for g in gens if g != 0)
        self.label = label
        self._rows: Optional[list[list[int]]] = None

    def __repr__(self):
        return f"<{type(self).__name__} {self.label} of order {self.order}>"

    def __len__(self):
        return self.order

    identity = 0

    def _mul(self, x: int, y: int) -> int:
        raise NotImplementedError

    def _inv(self, x: int) -> int:
        raise NotImplementedError

    def _table_array(self) -> np.ndarray:
        n = self.order
        return np.array([[self._mul(x, y) for y in range(n)] for x in range(n)], dtype=np.int64)

    @property
    def has_table(self) -> bool:
        return self.order <= CAPS.table

    @cached_property
    def table(self) -> np.ndarray:
        if not self.has_table:
            raise CapExceeded(f"{self.label}: order {self.order} > table cap {CAPS.table}")
        t = self._table_array()
        self._rows = t.tolist()
        return t

    def mul(self, x: int, y: int) -> int:
        rows = self._rows
        if rows is None:
            if not self.has_table:
                return self._mul(x, y)
            self.table
            rows = self._rows
        return rows[x][y]

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.array([self._inv(x) for x in range(self.order)], dtype=np.int64)

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def commutator(self, x: int, y: int) -> int:
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        result = 0
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            k += 1
        return k

    @cached_property
    def element_orders(self) -> list[int]:
        return [self.element_order(x) for x in range(self.order)]

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.element_orders)

    # subgroups are frozensets of element indices

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        gens = [g for g in set(gens) if g != 0]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def normal_closure(self, elems: Iterable[int], within: Sequence[int]) -> tuple[frozenset[int], list[int]]:
        """Normal closure of ``elems`` in the subgroup generated by ``within``.

        Returns the element set together with a generating list.
        """
        gens: list[int] = []
        sub = frozenset([0])
        queue = list(elems)
        while queue:
            x = queue.pop()
            if x in sub:
                continue
            gens.append(x)
            sub = self.closure(gens)
            for t in within:
                queue.append(self.mul(self.mul(self.inv(t), x), t))
        return sub, gens

    def lower_central_series(self) -> list[frozenset[int]]:
        """Terms ``G = g_1 > g_2 > ...`` until trivial or stationary."""
        series = [frozenset(range(self.order))]
        gens = list(self.gens)
        for _ in range(self.order):
            if len(series[-1]) == 1:
                break
            comms = [self.commutator(a, t) for a in gens for t in self.gens]
            sub, gens = self.normal_closure(comms, self.gens)
            if len(sub) == len(series[-1]):
                break
            series.append(sub)
        return series

    def derived_series(self) -> list[frozenset[int]]:
        series = [frozenset(range(self.order))]
        gens = list(self.gens)
        for _ in range(self.order):
            if len(series[-1]) == 1:
                break
            comms = [self.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
            sub, gens = self.normal_closure(comms, gens)
            if len(sub) == len(series[-1]):
                break
            series.append(sub)
        return series

    @cached_property
    def nilpotency_class(self) -> Optional[int]:
        s = self.lower_central_series()
        return len(s) - 1 if len(s[-1]) == 1 else None

    @cached_property
    def derived_length(self) -> Optional[int]:
        s = self.derived_series()
        return len(s) - 1 if len(s[-1]) == 1 else None

    @property
    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for a in self.gens for b in self.gens)

    def invariants(self) -> GroupInvariants:
        return GroupInvariants(self.order, self.exponent, self.nilpotency_class,
                               self.derived_length, self.is_abelian)

    def check_axioms(self) -> None:
        """Exhaustively verify closure, identity, inverses and associativity (table groups only)."""
        t = self.table
        n = self.order
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise AssertionError(f"{self.label}: table not closed")
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise AssertionError(f"{self.label}: 0 is not a two-sided identity")
        inv = self.inverses
        if not (np.all(t[ar, inv] == 0) and np.all(t[inv, ar] == 0)):
            raise AssertionError(f"{self.label}: inverses wrong")
        for a in range(n):
            # (a*b)*c == a*(b*c) for all b, c
            if not np.array_equal(t[t[a]], t[a][t]):
                raise AssertionError(f"{self.label}: associativity fails at {a}")


class TableGroup(ConcreteGroup):
    """Group given by an explicit Cayley table with identity 0."""

    def __init__(self, table: Sequence[Sequence[int]], gens: Sequence[int], label: str):
        arr = np.asarray(table, dtype=np.int64)
        super().__init__(arr.shape[0], gens, label)
        self._given = arr

    def _table_array(self):
        return self._given

    def _mul(self, x, y):
        return int(self._given[x, y])

    def _inv(self, x):
        return int(np.flatnonzero(self._given[x] == 0)[0])


class Cyclic(ConcreteGroup):
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("cyclic group order must be positive")
        super().__init__(n, [1 % n], f"C{n}")
        self.n = n

    def _mul(self, x, y):
        return (x + y) % self.n

    def _inv(self, x):
        return -x % self.n

    def _table_array(self):
        ar = np.arange(self.n)
        return (ar[:, None] + ar[None, :]) % self.n

    @cached_property
    def element_orders(self):
        return [self.n // gcd(x, self.n) for x in range(self.n)]


class DirectProduct(ConcreteGroup):
    """``g x h`` with element ``(i, j)`` stored as ``i * |h| + j``."""

    def __init__(self, g: ConcreteGroup, h: ConcreteGroup):
        n = g.order * h.order
        if n > CAPS.order:
            raise CapExceeded(f"{g.label} x {h.label} has order {n} > order cap {CAPS.order}")
        m = h.order
        gens = [a * m for a in g.gens] + list(h.gens)
        super().__init__(n, gens, f"{g.label} x {_paren(h.label, 'x')}")
        self.g, self.h = g, h

    def _mul(self, x, y):
        m = self.h.order
        a, b = divmod(x, m)
        c, d = divmod(y, m)
        return self.g.mul(a, c) * m + self.h.mul(b, d)

    def _inv(self, x):
        a, b = divmod(x, self.h.order)
        return self.g.inv(a) * self.h.order + self.h.inv(b)

    def _table_array(self):
        if self.g.has_table and self.h.has_table:
            m = self.h.order
            tg, th = self.g.table, self.h.table
            t = tg[:, None, :, None] * m + th[None, :, None, :]
            return t.reshape(self.order, self.order)
        return super()._table_array()

    @cached_property
    def element_orders(self):
        og, oh = self.g.element_orders, self.h.element_orders
        return [lcm(a, b) for a in og for b in oh]


class Wreath(ConcreteGroup):
    """Regular wreath product ``a wr b``.

    Element ``(f, t)`` is stored as ``t + |b| * sum(f[x] * |a|**x)``.
    """

    def __init__(self, a: ConcreteGroup, b: ConcreteGroup):
        n = a.order ** b.order * b.order
        if n > CAPS.order:
            raise CapExceeded(f"{a.label} wr {b.label} has order {n} > order cap {CAPS.order}")
        self.a, self.b = a, b
        nb = b.order
        gens = [self.encode(_point(a, nb, g), 0) for g in a.gens] + [self.encode((0,) * nb, t) for t in b.gens]
        super().__init__(n, gens, f"{_paren(a.label, 'x')} wr {_paren(b.label, 'x', 'wr')}")

    def encode(self, f: Sequence[int], t: int) -> int:
        na = self.a.order
        code = 0
        for v in reversed(f):
            code = code * na + v
        return t + self.b.order * code

    def decode(self, x: int) -> tuple[list[int], int]:
        code, t = divmod(x, self.b.order)
        f = []
        for _ in range(self.b.order):
            code, v = divmod(code, self.a.order)
            f.append(v)
        return f, t

    def _mul(self, x, y):
        f1, t1 = self.decode(x)
        f2, t2 = self.decode(y)
        a, b = self.a, self.b
        f = [a.mul(f1[i], f2[b.mul(i, t1)]) for i in range(b.order)]
        return self.encode(f, b.mul(t1, t2))

    def _inv(self, x):
        f, t = self.decode(x)
        a, b = self.a, self.b
        ti = b.inv(t)
        return self.encode([a.inv(f[b.mul(i, ti)]) for i in range(b.order)], ti)

    def _table_array(self):
        a, b = self.a, self.b
        if not (a.has_table and b.has_table):
            return super()._table_array()
        n, na, nb = self.order, a.order, b.order
        ta, tb = a.table, b.table
        idx = np.arange(n)
        tops = idx % nb
        codes = idx // nb
        F = np.empty((n, nb), dtype=np.int64)
        c = codes.copy()
        for i in range(nb):
            c, F[:, i] = np.divmod(c, na)
        weights = na ** np.arange(nb, dtype=np.int64)
        out = np.empty((n, n), dtype=np.int64)
        for x in range(n):
            t1 = tops[x]
            shifted = F[:, tb[:, t1]]          # f2(i * t1)
            f = ta[F[x][None, :], shifted]     # f1(i) * f2(i * t1)
            out[x] = tb[t1, tops] + nb * (f @ weights)
        return out


def _point(a: ConcreteGroup, nb: int, g: int) -> tuple[int, ...]:
    # g at the coordinate of the identity of the top group, 1 elsewhere
    return (g,) + (0,) * (nb - 1)


def _paren(label: str, *ops: str) -> str:
    return f"({label})" if any(f" {op} " in label for op in ops) else label


def cyclic(n: int) -> ConcreteGroup:
    if n > CAPS.order:
        raise CapExceeded(f"C{n} exceeds order cap {CAPS.order}")
    return Cyclic(n)


def trivial() -> ConcreteGroup:
    return Cyclic(1)


def direct(g: ConcreteGroup, h: ConcreteGroup) -> ConcreteGroup:
    return DirectProduct(g, h)


def wreath(a: ConcreteGroup, b: ConcreteGroup) -> ConcreteGroup:
    return Wreath(a, b)


def from_function(elements: Sequence, mul: Callable, gens: Sequence, label: str) -> TableGroup:
    """Tabulate a group from an element list (identity first) and a product rule."""
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(x, y)] for y in elements] for x in elements]
    return TableGroup(table, [index[g] for g in gens], label)


_QUAT_UNITS = {
    # (u, v) -> (sign, w) with u*v = sign * w, units 0=1, 1=i, 2=j, 3=k
    (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
}


def quaternion8() -> TableGroup:
    def mul(x, y):
        (s, u), (t, v) = x, y
        if u == 0:
            return (s * t, v)
        if v == 0:
            return (s * t, u)
        sign, w = _QUAT_UNITS[(u, v)]
        return (s * t * sign, w)

    elements = [(s, u) for s in (1, -1) for u in range(4)]
    return from_function(elements, mul, [(1, 1), (1, 2)], "Q8")


def m27() -> TableGroup:
    """``<a, b | a^9 = b^3 = 1, b^-1 a b = a^4>``, elements ``a^i b^j``.

    From the relation, ``b^j a^k = a^(k * 7^j) b^j`` (7 is 4 inverse mod 9).
    """
    def mul(x, y):
        (i, j), (k, l) = x, y
        return ((i + k * pow(7, j, 9)) % 9, (j + l) % 3)

    elements = [(i, j) for j in range(3) for i in range(9)]
    return from_function(elements, mul, [(1, 0), (0, 1)], "M27")


def dihedral(n: int) -> TableGroup:
    """Symmetries of the n-gon, order 2n: elements ``r^i s^j``."""
    def mul(x, y):
        (i, j), (k, l) = x, y
        return ((i + (-k if j else k)) % n, (j + l) % 2)

    elements = [(i, j) for j in range(2) for i in range(n)]
    return from_function(elements, mul, [(1, 0), (0, 1)], f"D{2 * n}")


def subgroup(g: ConcreteGroup, gens: Iterable[int], label: str = "") -> TableGroup:
    """The subgroup generated by ``gens`` as a standalone group."""
    elems = sorted(g.closure(gens))
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[g.mul(x, y)] for y in elems] for x in elems]
    gens = [index[x] for x in gens]
    return TableGroup(table, gens, label or f"<{len(gens)} gens in {g.label}>")


def abelian_decomposition(g: ConcreteGroup) -> AbelianFE:
    """Cyclic p-group decomposition of an abelian group from element-order counts.

    If ``c_i = log_p #{x : x^(p^i) = 1}`` then ``c_i - c_(i-1)`` counts the
    cyclic p-factors of exponent at least ``p^i``.
    """
    if not g.is_abelian:
        raise NotAbelian(f"{g.label} is not abelian")
    orders = g.element_orders
    raw = []
    for p, top in _factor(g.exponent).items():
        logs = []
        for i in range(top + 2):
            count = sum(1 for o in orders if (p ** i) % o == 0)
            logs.append(_ilog(count, p))
        at_least = [logs[i] - logs[i - 1] for i in range(1, top + 2)] + [0]
        for u in range(1, top + 1):
            m = at_least[u - 1] - at_least[u]
            if m:
                raw.append((p, u, m))
    return normalize(raw)


def _factor(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in factorint(n).items()}


def _ilog(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n, r = divmod(n, p)
        assert r == 0
        k += 1
    return k


def from_abelian(b: AbelianFE) -> ConcreteGroup:
    """Build the finite abelian group with decomposition ``b`` as a product of cyclics."""
    if not b.is_finite:
        raise NotFinite(f"{b} has an infinite multiplicity")
    g: Optional[ConcreteGroup] = None
    for p, u, m in b.raw():
        for _ in range(m.value):
            c = cyclic(p ** u)
            g = c if g is None else direct(g, c)
    return g if g is not None else trivial()
