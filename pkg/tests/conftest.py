import itertools

import pytest

from italdom.digraph import ProductInstance, ProductKind

ACCEPTANCE_LINES: list[str] = []


def small_products(max_order: int, kinds=tuple(ProductKind)):
    """Every cycle product with m, n >= 2 and m * n <= max_order."""
    out = []
    for kind in kinds:
        for m in range(2, max_order // 2 + 1):
            for n in range(2, max_order // m + 1):
                out.append(ProductInstance(kind, m, n))
    return out


def reference_product_arcs(d1, d2, strong):
    """Arc set of a product enumerated straight from the coordinate rules."""
    arcs = set()
    for (x1, x2), (y1, y2) in itertools.product(
        itertools.product(range(d1.order), range(d2.order)), repeat=2
    ):
        a1, a2 = d1.has_arc(x1, y1), d2.has_arc(x2, y2)
        if (x1 == y1 and a2) or (a1 and x2 == y2) or (strong and a1 and a2):
            arcs.add((x1 * d2.order + x2, y1 * d2.order + y2))
    return arcs


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def cartesian_4x4():
    return ProductInstance(ProductKind.CARTESIAN, 4, 4)
