import itertools
import random

import pytest

from surfsig.catalog import named_groups
from surfsig.groups import (
    GroupError,
    compose,
    cyclic,
    dihedral,
    dihedral_generators,
    direct_product,
    identity_perm,
    perm_power,
)
from surfsig.signature import Signature, format_signature, required_group_order
from surfsig.vectors import (
    GeneratingVector,
    SearchInconclusive,
    breuer_abelian,
    exhaustive_search,
    kulkarni,
    omnipersistent,
    search,
    vector_from_json,
    vector_to_json,
    verify,
)


def all_triples_via_verify(group, sig):
    """Every elliptic triple, judged by verify alone."""
    return [v for v in (GeneratingVector(group, (), t)
                        for t in itertools.product(group.elements, repeat=3))
            if verify(group, v, sig)]


def cyclic_gen(n):
    g = cyclic(n)
    return g, g.elements[g.generators[0]]


@pytest.mark.parametrize("genus", range(2, 51))
def test_dihedral_one_two_two(genus):
    d = dihedral(genus - 1)
    _, x, y = dihedral_generators(genus - 1)
    e = identity_perm(d.degree)
    vec = GeneratingVector(d, ((x, e),), (y, y))
    assert verify(d, vec, Signature(1, (2, 2)))


def test_trivial_group_surface_vector():
    g = cyclic(1)
    e = identity_perm(1)
    assert verify(g, GeneratingVector(g, ((e, e), (e, e)), ()), Signature(2))


def test_six_involutions_vector():
    for n in (1, 2, 5, 9):
        d = dihedral(n)
        _, x, y = dihedral_generators(n)
        xy = compose(x, y)
        vec = GeneratingVector(d, (), (y, y, xy, xy, y, y))
        assert verify(d, vec, Signature(0, (2,) * 6))


def test_verify_reports_wrong_order():
    g, x = cyclic_gen(10)
    vec = GeneratingVector(g, (), (perm_power(x, 5), perm_power(x, 4), perm_power(x, 2)))
    result = verify(g, vec, Signature(0, (2, 5, 10)))
    assert not result
    assert result.condition == 2
    assert "c_3 has order 5" in result.detail


def test_verify_reports_generation_and_product():
    g, x = cyclic_gen(10)
    x2 = perm_power(x, 2)
    r = verify(g, GeneratingVector(g, (), (x2, x2, perm_power(x, 6))), Signature(0, (5, 5, 5)))
    assert r.condition == 1 and "order 5" in r.detail
    r = verify(g, GeneratingVector(g, (), (perm_power(x, 5), perm_power(x, 2), x)),
               Signature(0, (2, 5, 10)))
    assert r.condition == 3


def test_verify_rejects_bad_input():
    g, x = cyclic_gen(4)
    with pytest.raises(ValueError, match="shape"):
        verify(g, GeneratingVector(g, (), (x,)), Signature(0, (4, 4)))
    with pytest.raises(GroupError):
        verify(g, GeneratingVector(g, (), ((1, 0, 2, 3), x)), Signature(0, (2, 4)))


def test_d6_has_no_266_vector():
    d6 = dihedral(6)
    sig = Signature(0, (2, 6, 6))
    assert all_triples_via_verify(d6, sig) == []
    assert search(d6, sig) is None
    assert exhaustive_search(d6, sig) is None


def test_c10_2510():
    g, x = cyclic_gen(10)
    sig = Signature(0, (2, 5, 10))
    assert all_triples_via_verify(g, sig)
    vec = search(g, sig)
    assert vec is not None and verify(g, vec, sig)
    closed = GeneratingVector(g, (), (perm_power(x, 5), perm_power(x, 4), x))
    assert verify(g, closed, sig)


def test_hurwitz_triple_in_psl27():
    psl = named_groups().of_order(168)[0]
    sig = Signature(0, (2, 3, 7))
    vec = search(psl, sig)
    assert vec is not None and verify(psl, vec, sig)
    assert required_group_order(sig, 3) == psl.order


def test_search_respects_divisibility():
    for g in (cyclic(12), dihedral(6), direct_product(cyclic(2), cyclic(6))):
        assert search(g, Signature(0, (2, 5, 10))) is None
        assert search(g, Signature(0, (8, 8, 8))) is None


def test_search_is_deterministic():
    g = named_groups().of_order(60)[0]
    sig = Signature(0, (2, 5, 5))
    assert search(g, sig) == search(g, sig)


def test_inconclusive_guard():
    d6 = dihedral(6)
    with pytest.raises(SearchInconclusive) as info:
        search(d6, Signature(0, (2, 6, 6)), node_limit=3)
    assert info.value.nodes == 4


@pytest.mark.parametrize("sig", [Signature(2), Signature(3), Signature(1, (2,)),
                                 Signature(2, (2,)), Signature(1, (3, 3))],
                         ids=format_signature)
def test_higher_genus_quotients_agree_with_exhaustive(sig):
    for g in (cyclic(1), cyclic(2), cyclic(3), dihedral(2), dihedral(3), dihedral(4)):
        if g.order ** (2 * sig.orbit_genus) > 10**5:
            continue
        pruned = search(g, sig)
        assert (pruned is None) == (exhaustive_search(g, sig) is None), g.name
        if pruned:
            assert verify(g, pruned, sig)


def test_kulkarni_closed_form():
    g, sig, vec = kulkarni(2)
    assert g.name == "C10" and sig == Signature(0, (2, 5, 10))
    x = g.elements[g.generators[0]]
    assert vec.elliptic == (perm_power(x, 5), perm_power(x, 4), x)
    g, sig, vec = kulkarni(3)
    x = g.elements[g.generators[0]]
    assert g.order == 14 and vec.elliptic == (perm_power(x, 7), perm_power(x, 6), x)
    for genus in range(2, 101):
        g, sig, vec = kulkarni(genus)
        assert verify(g, vec, sig)


def test_breuer_abelian():
    g, sig, vec = breuer_abelian(2)
    assert g.order == 12 and sig == Signature(0, (2, 6, 6))
    assert verify(g, vec, sig)
    g, sig, _ = breuer_abelian(3)
    assert g.order == 16 and sig == Signature(0, (2, 8, 8))


@pytest.mark.parametrize("genus, orders", [(2, [1, 2, 2, 4]), (7, [6, 12, 12, 24])])
def test_omnipersistent_orders(genus, orders):
    built = omnipersistent(genus)
    assert [g.order for g, _, _ in built] == orders
    assert [s for _, s, _ in built] == [Signature(2), Signature(1, (2, 2)),
                                        Signature(0, (2,) * 6), Signature(0, (2,) * 5)]
    for g, sig, vec in built:
        assert verify(g, vec, sig)
        assert required_group_order(sig, genus) == g.order


def test_conjugation_invariance():
    rng = random.Random(7)
    cases = [(named_groups().of_order(168)[0], Signature(0, (2, 3, 7))),
             (dihedral(5), Signature(0, (2, 2, 2, 2))),
             (named_groups().of_order(24)[0], Signature(0, (2, 3, 4)))]
    for g, sig in cases:
        vec = search(g, sig)
        assert vec is not None
        for _ in range(50):
            assert verify(g, vec.conjugate(rng.choice(g.elements)), sig)


def test_witness_json_round_trip():
    psl = named_groups().of_order(168)[0]
    sig = Signature(0, (2, 3, 7))
    vec = search(psl, sig)
    data = vector_to_json(vec, sig)
    assert data["group"] == "PSL(2,7)" and data["signature"] == "(0; 2,3,7)"
    assert sorted(data["vector"]["elliptic"][0]) == list(range(1, 8))
    back, back_sig = vector_from_json(data, psl)
    assert back == vec and back_sig == sig and verify(psl, back, back_sig)
    with pytest.raises(ValueError):
        vector_from_json(data, cyclic(7))
