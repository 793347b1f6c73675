"""Italian dominating functions: labelings, verification, weights, bounds.

A labeling assigns 0, 1 or 2 to every vertex.  It is Italian dominating
when every 0-labeled vertex either has an in-neighbor labeled 2 or at
least two in-neighbors labeled 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .digraph import (
    Digraph,
    ProductInstance,
    ProductKind,
    max_in_degree,
    max_out_degree,
)


class LabelingError(ValueError):
    """Labeling does not fit the digraph it is applied to."""


class GridParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Labeling:
    """Flat labeling indexed by vertex id, one byte per label."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        vals = bytes(int(x) for x in values)
        bad = [x for x in vals if x > 2]
        if bad:
            raise LabelingError(f"labels must be in {{0, 1, 2}}, got {bad[0]}")
        self.values = vals

    @classmethod
    def constant(cls, order: int, label: int) -> "Labeling":
        return cls([label] * order)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Labeling({list(self.values)})"

    def preimage(self, label: int) -> frozenset[int]:
        """The vertex class V_label."""
        return frozenset(v for v, x in enumerate(self.values) if x == label)

    def transposed(self, m: int, n: int) -> "Labeling":
        """Relabel an ``m x n`` row-major grid as the ``n x m`` grid via (i, j) -> (j, i)."""
        if len(self.values) != m * n:
            raise LabelingError(f"labeling of size {len(self)} is not {m}x{n}")
        return Labeling(self.values[i * n + j] for j in range(n) for i in range(m))


def _check_domain(d: Digraph, f: Labeling) -> None:
    if len(f) != d.order:
        raise LabelingError(f"labeling has {len(f)} values but digraph has order {d.order}")


# Sum form of the domination test.  Labels are at most 2, so for a 0-labeled
# vertex v the in-neighbor label sum S(v) >= 2 holds exactly when either some
# in-neighbor carries 2 (it alone contributes 2) or, with no 2 present, every
# contributing in-neighbor carries 1 and S(v) counts them, so S(v) >= 2 means
# at least two 1-labeled in-neighbors.  Conversely either case gives S(v) >= 2.
def undominated_vertices(d: Digraph, f: Labeling) -> list[int]:
    _check_domain(d, f)
    vals = f.values
    ins = d.in_adjacency
    return [v for v in range(d.order) if vals[v] == 0 and sum(vals[u] for u in ins[v]) < 2]


def first_undominated(d: Digraph, f: Labeling) -> Optional[int]:
    _check_domain(d, f)
    vals = f.values
    ins = d.in_adjacency
    for v in range(d.order):
        if vals[v] == 0 and sum(vals[u] for u in ins[v]) < 2:
            return v
    return None


def is_idf(d: Digraph, f: Labeling) -> bool:
    return first_undominated(d, f) is None


def is_idf_literal(d: Digraph, f: Labeling) -> bool:
    """The two-case definition, checked literally.  Kept as a test oracle."""
    _check_domain(d, f)
    for v in range(d.order):
        if f[v] != 0:
            continue
        labels = [f[u] for u in d.in_neighbors(v)]
        if not (labels.count(1) >= 2 or 2 in labels):
            return False
    return True


def weight(f: Labeling) -> int:
    return sum(f.values)


@dataclass(frozen=True)
class ColumnProfile:
    """Label sums of the columns ``{(i, k) : 0 <= i < m}``, one per k."""

    column_weights: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.column_weights)

    def consecutive_sums(self) -> list[int]:
        """``a_k + a_{k+1}`` for every k, cyclically."""
        a = self.column_weights
        return [a[k] + a[(k + 1) % len(a)] for k in range(len(a))]


def column_profile(inst: ProductInstance, f: Labeling) -> ColumnProfile:
    if len(f) != inst.order:
        raise LabelingError(f"labeling has {len(f)} values but {inst} has order {inst.order}")
    m, n = inst.m, inst.n
    vals = f.values
    return ColumnProfile(tuple(sum(vals[i * n + k] for i in range(m)) for k in range(n)))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def general_lower_bound(d: Digraph) -> int:
    """``ceil(2n / (2 + max out-degree))``, valid for every digraph."""
    return _ceil_div(2 * d.order, 2 + max_out_degree(d))


def order_upper_bound_is_tight(d: Digraph) -> bool:
    """True iff the minimum IDF weight equals the order, i.e. all degrees are at most 1."""
    return max_out_degree(d) <= 1 and max_in_degree(d) <= 1


def strong_column_lower_bound(inst: ProductInstance) -> int:
    """``ceil(mn / 2)`` for strong products of cycles.

    Each column plus its successor must carry weight at least m, since a
    column is dominated only from itself and the previous column.
    """
    if inst.kind is not ProductKind.STRONG:
        raise ValueError("the column bound only holds for strong products")
    return _ceil_div(inst.m * inst.n, 2)


class LowerSource(enum.Enum):
    GENERAL_DEGREE_BOUND = "GeneralDegreeBound"
    STRONG_COLUMN_BOUND = "StrongColumnBound"
    TRIVIAL = "Trivial"


class UpperSource(enum.Enum):
    ORDER_BOUND = "OrderBound"
    CERTIFICATE = "Certificate"


@dataclass(frozen=True)
class BoundReport:
    lower: int
    upper: int
    lower_source: LowerSource
    upper_source: UpperSource

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"inconsistent bounds {self.lower} > {self.upper}")


def bound_report(
    target: Union[Digraph, ProductInstance],
    certificate_weight: Optional[int] = None,
) -> BoundReport:
    """Best available lower and upper bounds on the Italian domination number.

    ``Trivial`` marks the degree-at-most-one case where the order is both
    bounds.  An explicit certificate weight replaces the order as upper
    bound when it is smaller.
    """
    if isinstance(target, ProductInstance):
        d = target.digraph
        inst: Optional[ProductInstance] = target
    else:
        d, inst = target, None

    if order_upper_bound_is_tight(d):
        lower, lsrc = d.order, LowerSource.TRIVIAL
    else:
        lower, lsrc = general_lower_bound(d), LowerSource.GENERAL_DEGREE_BOUND
        if inst is not None and inst.kind is ProductKind.STRONG:
            col = strong_column_lower_bound(inst)
            if col > lower:
                lower, lsrc = col, LowerSource.STRONG_COLUMN_BOUND

    if certificate_weight is not None and certificate_weight < d.order:
        upper, usrc = certificate_weight, UpperSource.CERTIFICATE
    else:
        upper, usrc = d.order, UpperSource.ORDER_BOUND
    return BoundReport(lower, upper, lsrc, usrc)


# Grid text format: m lines of n digits, row i of the product per line.
# Lines starting with '#' are comments.

def format_grid(f: Labeling, m: int, n: int) -> str:
    if len(f) != m * n:
        raise LabelingError(f"labeling of size {len(f)} is not {m}x{n}")
    rows = ("".join(str(f[i * n + j]) for j in range(n)) for i in range(m))
    return "\n".join(rows) + "\n"


def parse_grid(text: str, m: int, n: int) -> Labeling:
    values: list[int] = []
    rows = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows += 1
        if rows > m:
            raise GridParseError(f"expected {m} rows, found more", lineno)
        if len(line) != n:
            raise GridParseError(f"expected {n} digits, found {len(line)}", lineno)
        for col, ch in enumerate(line, start=1):
            if ch not in "012":
                raise GridParseError(f"invalid label {ch!r} at column {col}; labels are 0, 1, 2", lineno)
            values.append(int(ch))
    if rows != m:
        raise GridParseError(f"expected {m} rows, found {rows}")
    return Labeling(values)


def labeling_from_grid(rows: Sequence[Sequence[int]]) -> Labeling:
    return Labeling(x for row in rows for x in row)
