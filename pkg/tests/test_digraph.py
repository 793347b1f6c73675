import io

import pytest

from conftest import reference_product_arcs
from italdom.digraph import (
    Digraph,
    DuplicateArcError,
    InvalidDigraphError,
    ProductInstance,
    ProductKind,
    SelfLoopError,
    cartesian_product,
    directed_cycle,
    directed_path,
    format_edge_list,
    in_neighbors,
    max_in_degree,
    max_out_degree,
    parse_edge_list,
    strong_product,
    write_edge_list,
)


def test_cycle_arcs():
    assert directed_cycle(2).arcs == {(0, 1), (1, 0)}
    assert directed_cycle(3).arcs == {(0, 1), (1, 2), (2, 0)}
    c5 = directed_cycle(5)
    assert c5.order == 5 and len(c5.arcs) == 5
    assert all(len(c5.in_neighbors(v)) == 1 == len(c5.out_neighbors(v)) for v in range(5))


@pytest.mark.parametrize("m", [1, 0, -3])
def test_cycle_rejects_short(m):
    with pytest.raises(InvalidDigraphError):
        directed_cycle(m)


def test_paths():
    assert directed_path(1).order == 1 and directed_path(1).arcs == frozenset()
    assert directed_path(2).arcs == {(0, 1)}
    p4 = directed_path(4)
    assert len(p4.arcs) == 3
    assert max_out_degree(p4) == max_in_degree(p4) == 1
    with pytest.raises(InvalidDigraphError):
        directed_path(0)


def test_construction_rejects_loops_and_multi_arcs():
    with pytest.raises(SelfLoopError):
        Digraph(3, [(0, 1), (2, 2)])
    with pytest.raises(DuplicateArcError):
        Digraph(3, [(0, 1), (0, 1)])
    with pytest.raises(InvalidDigraphError):
        Digraph(3, [(0, 3)])
    assert not issubclass(SelfLoopError, DuplicateArcError)


def test_c2_box_c2_by_hand():
    d = cartesian_product(directed_cycle(2), directed_cycle(2))
    # ids 2i + j: column moves 0<->1, 2<->3; row moves 0<->2, 1<->3
    assert d.arcs == {(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (2, 0), (1, 3), (3, 1)}
    assert all(len(d.in_neighbors(v)) == 2 == len(d.out_neighbors(v)) for v in range(4))
    assert in_neighbors(d, 0) == {2, 1}


def test_arc_counts():
    c3, c4 = directed_cycle(3), directed_cycle(4)
    assert len(cartesian_product(c3, c4).arcs) == 3 * 4 + 4 * 3 == 24
    s33 = strong_product(c3, c3)
    assert s33.order == 9 and len(s33.arcs) == 27
    for m in range(2, 6):
        for n in range(2, 6):
            assert len(strong_product(directed_cycle(m), directed_cycle(n)).arcs) == 3 * m * n


def test_strong_c2_c2_in_neighbors():
    inst = ProductInstance(ProductKind.STRONG, 2, 2)
    assert set(inst.digraph.in_neighbors(inst.vertex(0, 0))) == {
        inst.vertex(1, 0), inst.vertex(0, 1), inst.vertex(1, 1)
    }


@pytest.mark.parametrize("kind", list(ProductKind))
@pytest.mark.parametrize("m,n", [(2, 2), (2, 5), (3, 4), (5, 3), (4, 4)])
def test_products_match_definition(kind, m, n):
    c1, c2 = directed_cycle(m), directed_cycle(n)
    inst = ProductInstance(kind, m, n)
    assert inst.digraph.arcs == reference_product_arcs(c1, c2, strong=kind is ProductKind.STRONG)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 4), (5, 5), (4, 2)])
def test_cycle_product_in_neighborhoods(m, n):
    box = ProductInstance(ProductKind.CARTESIAN, m, n)
    strong = ProductInstance(ProductKind.STRONG, m, n)
    for i in range(m):
        for j in range(n):
            v = box.vertex(i, j)
            expect = {box.vertex(i - 1, j), box.vertex(i, j - 1)}
            assert set(box.digraph.in_neighbors(v)) == expect
            assert set(strong.digraph.in_neighbors(v)) == expect | {box.vertex(i - 1, j - 1)}


def test_degrees():
    assert max_out_degree(directed_cycle(5)) == 1 == max_in_degree(directed_cycle(5))
    assert max_out_degree(ProductInstance(ProductKind.CARTESIAN, 3, 4).digraph) == 2
    assert max_out_degree(ProductInstance(ProductKind.STRONG, 3, 4).digraph) == 3
    assert max_out_degree(Digraph(3)) == 0


def test_uniform_degrees_all_products():
    for m in range(2, 6):
        for n in range(2, 6):
            for kind, deg in ((ProductKind.CARTESIAN, 2), (ProductKind.STRONG, 3)):
                d = ProductInstance(kind, m, n).digraph
                assert {len(x) for x in d.in_adjacency} == {deg} == {len(x) for x in d.out_adjacency}


def test_in_neighbors_examples():
    assert in_neighbors(directed_cycle(3), 0) == {2}
    assert in_neighbors(directed_path(3), 0) == set()
    with pytest.raises(IndexError):
        directed_cycle(3).in_neighbors(3)


def test_transpose_is_isomorphism():
    for kind in ProductKind:
        for m in range(2, 6):
            for n in range(2, 6):
                a = ProductInstance(kind, m, n)
                b = a.transposed()
                mapped = set()
                for u, v in a.digraph.arcs:
                    (i, j), (k, l) = a.coords(u), a.coords(v)
                    mapped.add((b.vertex(j, i), b.vertex(l, k)))
                assert mapped == b.digraph.arcs


def test_strong_contains_cartesian():
    for m in range(2, 6):
        for n in range(2, 6):
            box = ProductInstance(ProductKind.CARTESIAN, m, n).digraph
            strong = ProductInstance(ProductKind.STRONG, m, n).digraph
            assert box.arcs <= strong.arcs


def test_product_instance_validation():
    with pytest.raises(InvalidDigraphError):
        ProductInstance(ProductKind.CARTESIAN, 1, 4)
    inst = ProductInstance("strong", 3, 4)
    assert inst.kind is ProductKind.STRONG
    assert inst.vertex(2, 3) == 11 and inst.coords(11) == (2, 3)
    assert inst.vertex(-1, 4) == inst.vertex(2, 0)


def test_edge_list_round_trip():
    d = ProductInstance(ProductKind.STRONG, 3, 2).digraph
    text = format_edge_list(d)
    assert text.splitlines()[0] == "6"
    assert parse_edge_list(text) == d
    buf = io.StringIO()
    write_edge_list(d, buf)
    assert buf.getvalue() == text
