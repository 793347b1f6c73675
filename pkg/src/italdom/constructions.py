"""Explicit optimal labelings for cycle products, and the known exact values.

All coordinates are 0-based: row ``i`` is vertex ``i+1`` of C_m and column
``j`` is vertex ``j+1`` of C_n in 1-based notation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from .digraph import ProductInstance, ProductKind
from .idf import Labeling, first_undominated, weight


class ConstructionError(RuntimeError):
    """A construction produced a labeling that fails verification."""


class CertificateSource(enum.Enum):
    CARTESIAN_EVEN_EVEN = "cartesian-even-even"
    CARTESIAN_2_ODD = "cartesian-2-odd"
    CARTESIAN_3_MOD0 = "cartesian-3-mod0"
    CARTESIAN_3_MOD1 = "cartesian-3-mod1"
    CARTESIAN_3_MOD2 = "cartesian-3-mod2"
    STRONG_EVEN = "strong-even"
    STRONG_ODD_ODD = "strong-odd-odd"


@dataclass(frozen=True)
class Certificate:
    instance: ProductInstance
    labeling: Labeling
    claimed_weight: int
    source: CertificateSource

    def verify(self) -> None:
        """Raise ConstructionError unless the labeling is an IDF of the claimed weight."""
        w = weight(self.labeling)
        if w != self.claimed_weight:
            raise ConstructionError(f"{self.source.value}: weight {w} != claimed {self.claimed_weight}")
        bad = first_undominated(self.instance.digraph, self.labeling)
        if bad is not None:
            i, j = self.instance.coords(bad)
            raise ConstructionError(f"{self.source.value}: vertex ({i},{j}) undominated on {self.instance}")

    def header(self) -> str:
        inst = self.instance
        return f"# {inst.kind.value} {inst.m} {inst.n} {self.claimed_weight} {self.source.value}"


def _grid(m: int, n: int, ones: Callable[[int, int], bool]) -> Labeling:
    return Labeling(1 if ones(i, j) else 0 for i in range(m) for j in range(n))


def _certified(inst: ProductInstance, f: Labeling, claimed: int, source: CertificateSource) -> Certificate:
    cert = Certificate(inst, f, claimed, source)
    cert.verify()
    return cert


def construct_cartesian_even_even(r: int, s: int) -> Certificate:
    """C_{2r} x C_{2s}: ones where row and column have equal parity."""
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    m, n = 2 * r, 2 * s
    inst = ProductInstance(ProductKind.CARTESIAN, m, n)
    f = _grid(m, n, lambda i, j: i % 2 == j % 2)
    return _certified(inst, f, m * n // 2, CertificateSource.CARTESIAN_EVEN_EVEN)


def construct_cartesian_2_odd(n: int) -> Certificate:
    """C_2 x C_n for odd n: row 0 on even columns, row 1 on odd columns and the last one."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 3, got {n}")
    inst = ProductInstance(ProductKind.CARTESIAN, 2, n)
    f = _grid(2, n, lambda i, j: (j % 2 == 0) if i == 0 else (j % 2 == 1 or j == n - 1))
    return _certified(inst, f, n + 1, CertificateSource.CARTESIAN_2_ODD)


# Rows carrying a 1 in column j of the C_3 x C_n pattern, by j mod 3.
_C3_PATTERN = ({0, 1}, {1, 2}, {0, 2})


def construct_cartesian_3_any(n: int) -> Certificate:
    """C_3 x C_n with two ones per column.

    The first ``3 * (n // 3)`` columns cycle through the row pairs {0,1},
    {1,2}, {0,2}.  For n = 1 mod 3 the last column uses {1,2}; for
    n = 2 mod 3 the last two columns use {0,1} then {0,2}.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    columns = [_C3_PATTERN[j % 3] for j in range(3 * (n // 3))]
    tail = n % 3
    if tail == 1:
        columns.append({1, 2})
    elif tail == 2:
        columns.extend([{0, 1}, {0, 2}])
    source = (
        CertificateSource.CARTESIAN_3_MOD0,
        CertificateSource.CARTESIAN_3_MOD1,
        CertificateSource.CARTESIAN_3_MOD2,
    )[tail]
    inst = ProductInstance(ProductKind.CARTESIAN, 3, n)
    f = _grid(3, n, lambda i, j: i in columns[j])
    return _certified(inst, f, 2 * n, source)


def construct_strong_even(m: int, s: int) -> Certificate:
    """C_m (x) C_{2s}: every vertex of every even column gets 1."""
    if m < 2 or s < 1:
        raise ValueError("need m >= 2 and s >= 1")
    n = 2 * s
    inst = ProductInstance(ProductKind.STRONG, m, n)
    f = _grid(m, n, lambda i, j: j % 2 == 0)
    return _certified(inst, f, m * n // 2, CertificateSource.STRONG_EVEN)


def construct_strong_odd_odd(r: int, s: int) -> Certificate:
    """C_{2r+1} (x) C_{2s+1}: ones where row and column have equal parity."""
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    m, n = 2 * r + 1, 2 * s + 1
    inst = ProductInstance(ProductKind.STRONG, m, n)
    f = _grid(m, n, lambda i, j: i % 2 == j % 2)
    return _certified(inst, f, (r + 1) * (s + 1) + r * s, CertificateSource.STRONG_ODD_ODD)


def _transpose(cert: Certificate) -> Certificate:
    inst = cert.instance
    return _certified(
        inst.transposed(),
        cert.labeling.transposed(inst.m, inst.n),
        cert.claimed_weight,
        cert.source,
    )


def certificate_for(inst: ProductInstance) -> Optional[Certificate]:
    """The explicit optimal labeling for ``inst``, or None if the case is open.

    Constructions stated for one factor order are transposed when needed.
    """
    m, n = inst.m, inst.n
    if inst.kind is ProductKind.STRONG:
        if n % 2 == 0:
            return construct_strong_even(m, n // 2)
        if m % 2 == 0:
            return _transpose(construct_strong_even(n, m // 2))
        return construct_strong_odd_odd(m // 2, n // 2)

    if m % 2 == 0 and n % 2 == 0:
        return construct_cartesian_even_even(m // 2, n // 2)
    if m == 2:
        return construct_cartesian_2_odd(n)
    if n == 2:
        return _transpose(construct_cartesian_2_odd(m))
    if m == 3:
        return construct_cartesian_3_any(n)
    if n == 3:
        return _transpose(construct_cartesian_3_any(m))
    return None


def closed_form_gamma(inst: ProductInstance) -> Optional[int]:
    """Exact Italian domination number where it is known in closed form."""
    m, n = inst.m, inst.n
    if inst.kind is ProductKind.STRONG:
        return -(-m * n // 2)
    if m % 2 == 0 and n % 2 == 0:
        return m * n // 2
    lo, hi = min(m, n), max(m, n)
    if lo == 2:
        return hi + 1
    if lo == 3:
        return 2 * hi
    return None
