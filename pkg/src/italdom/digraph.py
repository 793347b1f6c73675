"""Finite simple digraphs, directed cycles and paths, and their products."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, TextIO


class InvalidDigraphError(ValueError):
    """Raised when a digraph would violate simplicity or vertex bounds."""


class SelfLoopError(InvalidDigraphError):
    pass


class DuplicateArcError(InvalidDigraphError):
    pass


class Digraph:
    """Immutable simple digraph on vertices ``0 .. order-1``.

    In- and out-neighbor tuples are precomputed at construction since the
    domination verifier walks in-neighborhoods for every vertex.
    """

    __slots__ = ("order", "arcs", "_in", "_out")

    def __init__(self, order: int, arcs: Iterable[tuple[int, int]] = ()):
        if order < 1:
            raise InvalidDigraphError(f"order must be positive, got {order}")
        seen: set[tuple[int, int]] = set()
        ins: list[list[int]] = [[] for _ in range(order)]
        outs: list[list[int]] = [[] for _ in range(order)]
        for u, v in arcs:
            u, v = int(u), int(v)
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidDigraphError(f"arc {u}->{v} out of range for order {order}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise DuplicateArcError(f"duplicate arc {u}->{v}")
            seen.add((u, v))
            outs[u].append(v)
            ins[v].append(u)
        self.order = order
        self.arcs = frozenset(seen)
        self._in = tuple(tuple(sorted(x)) for x in ins)
        self._out = tuple(tuple(sorted(x)) for x in outs)

    def __repr__(self) -> str:
        return f"Digraph(order={self.order}, arcs={len(self.arcs)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.order == other.order and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.order, self.arcs))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise IndexError(f"vertex {v} not in digraph of order {self.order}")

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._in[v]

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._out[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @property
    def in_adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._in

    @property
    def out_adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._out


def in_neighbors(d: Digraph, v: int) -> set[int]:
    return set(d.in_neighbors(v))


def max_out_degree(d: Digraph) -> int:
    return max(len(x) for x in d.out_adjacency)


def max_in_degree(d: Digraph) -> int:
    return max(len(x) for x in d.in_adjacency)


def directed_cycle(m: int) -> Digraph:
    """Directed cycle ``0 -> 1 -> ... -> m-1 -> 0``.

    ``m = 1`` is rejected: the only 1-cycle is a loop.
    """
    if m < 2:
        raise InvalidDigraphError(f"directed cycle needs at least 2 vertices, got {m}")
    return Digraph(m, ((i, (i + 1) % m) for i in range(m)))


def directed_path(m: int) -> Digraph:
    if m < 1:
        raise InvalidDigraphError(f"directed path needs at least 1 vertex, got {m}")
    return Digraph(m, ((i, i + 1) for i in range(m - 1)))


def _product(d1: Digraph, d2: Digraph, diagonal: bool) -> Digraph:
    n2 = d2.order
    arcs = []
    for x1 in range(d1.order):
        for x2, y2 in d2.arcs:
            arcs.append((x1 * n2 + x2, x1 * n2 + y2))
    for x1, y1 in d1.arcs:
        for x2 in range(n2):
            arcs.append((x1 * n2 + x2, y1 * n2 + x2))
        if diagonal:
            for x2, y2 in d2.arcs:
                arcs.append((x1 * n2 + x2, y1 * n2 + y2))
    return Digraph(d1.order * n2, arcs)


def cartesian_product(d1: Digraph, d2: Digraph) -> Digraph:
    """Cartesian product; vertex ``(x1, x2)`` has id ``x1 * d2.order + x2``."""
    return _product(d1, d2, diagonal=False)


def strong_product(d1: Digraph, d2: Digraph) -> Digraph:
    """Strong product: cartesian arcs plus arcs moving along both factors at once."""
    return _product(d1, d2, diagonal=True)


class ProductKind(enum.Enum):
    CARTESIAN = "cartesian"
    STRONG = "strong"

    @classmethod
    def parse(cls, text: str) -> "ProductKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown product kind {text!r}; expected 'cartesian' or 'strong'") from None


@dataclass(frozen=True)
class ProductInstance:
    """Symbolic ``C_m x C_n`` for one of the two product kinds.

    Rows ``i`` index the first factor C_m, columns ``j`` the second factor
    C_n; the vertex id of ``(i, j)`` is ``i * n + j`` and all coordinates
    are 0-based and taken modulo m and n.
    """

    kind: ProductKind
    m: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.kind, ProductKind):
            object.__setattr__(self, "kind", ProductKind.parse(str(self.kind)))
        if self.m < 2 or self.n < 2:
            raise InvalidDigraphError(f"cycle products need m, n >= 2, got m={self.m}, n={self.n}")

    @property
    def order(self) -> int:
        return self.m * self.n

    def vertex(self, i: int, j: int) -> int:
        return (i % self.m) * self.n + (j % self.n)

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n)

    def transposed(self) -> "ProductInstance":
        return ProductInstance(self.kind, self.n, self.m)

    @cached_property
    def digraph(self) -> Digraph:
        c1, c2 = directed_cycle(self.m), directed_cycle(self.n)
        if self.kind is ProductKind.CARTESIAN:
            return cartesian_product(c1, c2)
        return strong_product(c1, c2)

    def __str__(self) -> str:
        op = "x" if self.kind is ProductKind.CARTESIAN else "*"
        return f"C{self.m} {op} C{self.n} ({self.kind.value})"


def write_edge_list(d: Digraph, fh: TextIO) -> None:
    """Write ``order`` then one ``u v`` line per arc, sorted, 0-based."""
    fh.write(f"{d.order}\n")
    for u, v in sorted(d.arcs):
        fh.write(f"{u} {v}\n")


def format_edge_list(d: Digraph) -> str:
    lines = [str(d.order)] + [f"{u} {v}" for u, v in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Digraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InvalidDigraphError("empty edge list")
    order = int(lines[0])
    arcs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InvalidDigraphError(f"bad arc line {ln!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    return Digraph(order, arcs)
