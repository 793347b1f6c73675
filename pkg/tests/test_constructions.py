import pytest

from italdom.constructions import (
    CertificateSource,
    ConstructionError,
    Certificate,
    certificate_for,
    closed_form_gamma,
    construct_cartesian_2_odd,
    construct_cartesian_3_any,
    construct_cartesian_even_even,
    construct_strong_even,
    construct_strong_odd_odd,
)
from italdom.digraph import ProductInstance, ProductKind
from italdom.idf import Labeling, column_profile, format_grid, is_idf, weight
from italdom.solver import solve_profile_dp

COVERED = [
    ProductInstance(kind, m, n)
    for kind in ProductKind
    for m in range(2, 7)
    for n in range(2, 13)
    if closed_form_gamma(ProductInstance(kind, m, n)) is not None
]


@pytest.mark.parametrize("r,s,w", [(1, 1, 2), (2, 2, 8), (1, 3, 6)])
def test_cartesian_even_even(r, s, w):
    cert = construct_cartesian_even_even(r, s)
    assert cert.claimed_weight == weight(cert.labeling) == w
    assert cert.source is CertificateSource.CARTESIAN_EVEN_EVEN


@pytest.mark.parametrize("n,w", [(3, 4), (5, 6), (9, 10)])
def test_cartesian_2_odd(n, w):
    cert = construct_cartesian_2_odd(n)
    assert weight(cert.labeling) == w
    assert is_idf(cert.instance.digraph, cert.labeling)


def test_cartesian_2_odd_layout():
    # row 0: columns 1, 3, 5 (1-based); row 1: columns 2, 4 and the last
    assert format_grid(construct_cartesian_2_odd(5).labeling, 2, 5) == "10101\n01011\n"


@pytest.mark.parametrize("n", [4, 6, 2, 1])
def test_cartesian_2_odd_rejects(n):
    with pytest.raises(ValueError):
        construct_cartesian_2_odd(n)


@pytest.mark.parametrize(
    "n,source",
    [(3, CertificateSource.CARTESIAN_3_MOD0), (4, CertificateSource.CARTESIAN_3_MOD1),
     (5, CertificateSource.CARTESIAN_3_MOD2)],
)
def test_cartesian_3_cases(n, source):
    cert = construct_cartesian_3_any(n)
    assert cert.source is source
    assert weight(cert.labeling) == 2 * n
    assert column_profile(cert.instance, cert.labeling).column_weights == (2,) * n


def test_cartesian_3_layouts():
    assert format_grid(construct_cartesian_3_any(4).labeling, 3, 4) == "1010\n1101\n0111\n"
    assert format_grid(construct_cartesian_3_any(5).labeling, 3, 5) == "10111\n11010\n01101\n"


@pytest.mark.parametrize("m,s,w", [(2, 1, 2), (3, 2, 6), (5, 1, 5)])
def test_strong_even(m, s, w):
    assert weight(construct_strong_even(m, s).labeling) == w


@pytest.mark.parametrize("r,s,w", [(1, 1, 5), (1, 2, 8), (2, 2, 13)])
def test_strong_odd_odd(r, s, w):
    cert = construct_strong_odd_odd(r, s)
    inst = cert.instance
    assert weight(cert.labeling) == w == -(-inst.m * inst.n // 2)


def test_closed_form_examples():
    assert closed_form_gamma(ProductInstance(ProductKind.CARTESIAN, 3, 7)) == 14
    assert closed_form_gamma(ProductInstance(ProductKind.STRONG, 4, 6)) == 12
    assert closed_form_gamma(ProductInstance(ProductKind.CARTESIAN, 5, 5)) is None
    assert closed_form_gamma(ProductInstance(ProductKind.CARTESIAN, 4, 7)) is None
    assert certificate_for(ProductInstance(ProductKind.CARTESIAN, 4, 5)) is None


@pytest.mark.parametrize("inst", COVERED, ids=str)
def test_every_certificate_verifies_at_closed_form(inst):
    cert = certificate_for(inst)
    assert cert is not None and cert.instance == inst
    assert is_idf(inst.digraph, cert.labeling)
    assert weight(cert.labeling) == cert.claimed_weight == closed_form_gamma(inst)


def test_closed_form_symmetric():
    for kind in ProductKind:
        for m in range(2, 10):
            for n in range(2, 10):
                a = ProductInstance(kind, m, n)
                assert closed_form_gamma(a) == closed_form_gamma(a.transposed())


def test_strong_even_by_odd_is_transposed():
    cert = certificate_for(ProductInstance(ProductKind.STRONG, 4, 3))
    assert cert.source is CertificateSource.STRONG_EVEN
    assert format_grid(cert.labeling, 4, 3) == "111\n000\n111\n000\n"


@pytest.mark.parametrize("inst", [i for i in COVERED if i.m * i.n <= 36], ids=str)
def test_certificates_are_optimal(inst):
    assert solve_profile_dp(inst).gamma == certificate_for(inst).claimed_weight


def test_verify_catches_bad_certificates():
    inst = ProductInstance(ProductKind.CARTESIAN, 2, 2)
    with pytest.raises(ConstructionError):
        Certificate(inst, Labeling([1, 0, 0, 1]), 3, CertificateSource.CARTESIAN_EVEN_EVEN).verify()
    with pytest.raises(ConstructionError):
        Certificate(inst, Labeling([1, 0, 0, 0]), 1, CertificateSource.CARTESIAN_EVEN_EVEN).verify()


def test_header_line():
    cert = construct_cartesian_even_even(2, 2)
    assert cert.header() == "# cartesian 4 4 8 cartesian-even-even"
