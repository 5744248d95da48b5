import pytest

from nearfactor.equivalence import (
    build_equivalence_report,
    crt_vertex_map,
    map_factor_index,
    verify_factor_equality,
)
from nearfactor.factors import build_modular_factorization
from nearfactor.numtheory import gcd, totient
from nearfactor.pairing import count_perfect_pairs
from nearfactor.product import count_perfect_product_pairs


def test_crt_vertex_map_examples():
    assert crt_vertex_map(7, 3, 5) == (1, 2)
    assert crt_vertex_map(14, 3, 5) == (2, 4)
    with pytest.raises(ValueError):
        crt_vertex_map(15, 3, 5)
    with pytest.raises(ValueError, match="moduli not coprime"):
        crt_vertex_map(0, 3, 9)


def test_crt_vertex_map_is_bijection():
    for s, t in ((3, 5), (5, 7), (9, 11), (13, 15)):
        images = {crt_vertex_map(v, s, t) for v in range(s * t)}
        assert len(images) == s * t


def test_map_factor_index_example():
    assert map_factor_index(11, 3, 7) == (2, 4)
    assert map_factor_index(0, 3, 5) == (0, 0)


def test_verify_factor_equality_3x5():
    for p in range(15):
        assert verify_factor_equality(p, 3, 5)


def test_equivalence_report_values():
    report = build_equivalence_report(3, 5)
    assert report.n == 15
    assert report.direct_bound == 60
    assert report.product_bound == 60
    assert report.bounds_equal
    assert report.all_edge_sets_equal
    assert report.failures == ()
    assert len(report.index_map) == 15
    assert len({(k, l) for _, k, l in report.index_map}) == 15

    assert build_equivalence_report(3, 7).direct_bound == 126
    assert build_equivalence_report(5, 7).product_bound == 420


def test_equivalence_report_rejects_bad_moduli():
    with pytest.raises(ValueError, match="moduli not coprime"):
        build_equivalence_report(3, 9)
    with pytest.raises(ValueError):
        build_equivalence_report(3, 4)


def test_report_json_shape():
    report = build_equivalence_report(3, 5)
    data = report.to_dict()
    assert data["s"] == 3 and data["t"] == 5 and data["n"] == 15
    assert data["failures"] == []
    assert data["index_map"][7] == [7, 1, 2]
    assert data["all_edge_sets_equal"] is True
    assert data["bounds_equal"] is True


def test_bound_identity_small():
    for s in range(3, 30, 2):
        for t in range(3, 30, 2):
            if gcd(s, t) != 1:
                continue
            n = s * t
            assert n * totient(n) // 2 == 2 * (s * totient(s) // 2) * (
                t * totient(t) // 2
            )


def test_count_transfer_through_the_correspondence():
    # the direct count on K_{st} and the product-family count coincide
    for s, t in ((3, 5), (3, 7), (5, 7), (5, 9), (7, 9)):
        direct = count_perfect_pairs(build_modular_factorization(s * t))
        assert direct == count_perfect_product_pairs(s, t)
        assert direct == s * t * totient(s * t) // 2
