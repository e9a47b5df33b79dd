import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_axioms
from gengroup.catalogue import cyclic_group, klein_group, left_zero, right_zero, symmetric_group_3, trivial_group
from gengroup.core import (
    FiniteGroup,
    component_elements,
    direct_product,
    from_cayley_doc,
    generalized_subgroup_check,
    group_component,
    idempotents,
    inverse,
    is_abelian,
    is_group,
    is_normal,
    local_identity,
    make_finite_gg,
    subgroup_closure,
    to_cayley_doc,
    verify_axioms,
)
from gengroup.errors import ClosureViolation, MalformedTable, NoInverse, NotAssociative, NoUniqueLocalIdentity
from gengroup.hom import find_isomorphism
from gengroup.rees import ReesSpec, random_rees, rees_build

RZ = [[0, 1], [0, 1]]


def test_trivial_group_is_valid():
    G = make_finite_gg(["e"], [[0]])
    assert G.order == 1
    assert local_identity(G, 0) == 0
    assert inverse(G, 0) == 0


def test_right_zero_two():
    assert brute_axioms(RZ) == (True, {0: [0], 1: [1]}, {0: [0], 1: [1]})
    G = make_finite_gg(["a", "b"], RZ)
    assert [local_identity(G, x) for x in range(2)] == [0, 1]


def test_broken_z2_rejected():
    _, cands, _ = brute_axioms([[0, 1], [1, 1]])
    assert cands[1] == [0, 1]
    with pytest.raises((NoUniqueLocalIdentity, NoInverse)) as info:
        make_finite_gg(["0", "1"], [[0, 1], [1, 1]])
    assert info.value.report.verdict is False


def test_non_associative_rejected_with_witness():
    table = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]
    with pytest.raises(NotAssociative) as info:
        make_finite_gg("abc", table)
    x, y, z = info.value.witness
    assert table[table[x][y]][z] != table[x][table[y][z]]


@pytest.mark.parametrize("table", [[], [[0, 1]], [[0, 2], [1, 0]], [[0, -1], [0, 0]], "xx"])
def test_malformed_tables(table):
    with pytest.raises(MalformedTable):
        verify_axioms(table)


def test_verify_z3():
    report = verify_axioms([[(a + b) % 3 for b in range(3)] for a in range(3)])
    assert report.verdict and report.associative
    assert not report.local_identity_failures and not report.inverse_failures


def test_verify_left_zero_three():
    table = [[x] * 3 for x in range(3)]
    assert brute_axioms(table)[0]
    assert verify_axioms(table).verdict


def test_verify_null_semigroup_collects_all_failures():
    table = [[0, 0], [0, 0]]
    assoc, cands, _ = brute_axioms(table)
    report = verify_axioms(table)
    assert report.associative == assoc is True
    assert report.verdict is False
    failures = dict(report.local_identity_failures)
    assert failures[1] == tuple(cands[1]) == ()
    assert failures[0] == (0, 1)


def test_inverse_examples():
    z4 = cyclic_group(4)
    assert inverse(z4, 1) == 3
    assert inverse(right_zero(3), 2) == 2


def test_idempotents():
    assert idempotents(symmetric_group_3()) == {0}
    assert idempotents(right_zero(4)) == {0, 1, 2, 3}
    spec = ReesSpec(cyclic_group(2), 2, 3, [[0, 1], [1, 1], [0, 0]])
    G = rees_build(spec)
    brute = {x for x in range(G.order) if G.table[x][x] == x}
    assert idempotents(G) == brute and len(brute) == 6


def _brute_normal(G):
    e = [G.e(x) for x in range(G.order)]
    return all(e[G.table[x][y]] == G.table[e[x]][e[y]] for x in range(G.order) for y in range(G.order))


def test_is_normal():
    assert is_normal(symmetric_group_3())
    assert is_normal(right_zero(3)) and _brute_normal(right_zero(3))
    G = rees_build(ReesSpec(cyclic_group(2), 2, 2, [[0, 0], [0, 1]]))
    # closed form over Z/2: normal iff p[l][i] - p[l][j] - p[m][i] + p[m][j] == 0 for all indices
    assert is_normal(G) is _brute_normal(G) is False
    H = rees_build(ReesSpec(cyclic_group(2), 2, 2, [[1, 1], [1, 1]]))
    assert is_normal(H) is _brute_normal(H) is True


def test_abelian_and_group_predicates():
    assert is_abelian(cyclic_group(5)) and is_abelian(klein_group())
    assert not is_abelian(symmetric_group_3())
    rz = right_zero(2)
    assert not is_abelian(rz) and rz.table[0][1] != rz.table[1][0]
    assert is_group(trivial_group()) and not is_group(rz)
    for seed in range(10):
        spec = random_rees(seed, (1, 1))
        assert is_group(rees_build(spec))


def test_group_component():
    S3 = symmetric_group_3()
    comp = group_component(S3, 4)
    assert comp.order == 6 and comp.table == S3.table
    for a in range(3):
        c = group_component(right_zero(3), a)
        assert c.order == 1 and c.names == (f"r{a}",)
    G = rees_build(ReesSpec(cyclic_group(2), 2, 2, [[0, 0], [0, 1]]))
    comp = group_component(G, 0)
    assert isinstance(comp, FiniteGroup) and comp.order == 2
    assert comp.names[comp.identity] == G.names[G.e(0)]


def test_restrict_detects_non_closure():
    from gengroup.core import restrict

    with pytest.raises(ClosureViolation):
        restrict(cyclic_group(4), [0, 1])


def test_direct_product():
    z2 = cyclic_group(2)
    G = right_zero(2)
    P = direct_product(G, trivial_group())
    assert find_isomorphism(P, G) is not None
    P = direct_product(G, z2)
    assert verify_axioms(P.table).verdict
    assert len(idempotents(P)) == 2
    for x in range(P.order):
        a, b = divmod(x, 2)
        assert divmod(P.e(x), 2) == (G.e(a), z2.e(b))
    assert find_isomorphism(direct_product(z2, cyclic_group(3)), cyclic_group(6)) is not None


def test_generalized_subgroup_check():
    z4 = cyclic_group(4)
    assert generalized_subgroup_check(z4, range(4))
    assert not generalized_subgroup_check(z4, [0, 1])
    assert generalized_subgroup_check(z4, [0, 2])
    G = rees_build(random_rees(3, (3, 3)))
    for a in range(G.order):
        assert generalized_subgroup_check(G, subgroup_closure(G, [a]))
        assert generalized_subgroup_check(G, component_elements(G, a))


def test_cayley_doc_roundtrip():
    G = symmetric_group_3()
    doc = to_cayley_doc(G)
    H = from_cayley_doc(doc)
    assert H.table == G.table and H.names == G.names


@st.composite
def rees_instances(draw):
    seed = draw(st.integers(0, 10_000))
    return rees_build(random_rees(seed, (3, 3)))


@settings(max_examples=60, deadline=None)
@given(rees_instances())
def test_derived_identities(G):
    for x in range(G.order):
        assert G.e(G.e(x)) == G.e(x)
        assert G.inv(G.inv(x)) == x
        assert G.e(G.inv(x)) == G.e(x)
    assert idempotents(G) == {G.e(x) for x in range(G.order)}
    if is_abelian(G):
        assert is_group(G)


@settings(max_examples=40, deadline=None)
@given(rees_instances(), st.sampled_from([trivial_group(), cyclic_group(2), right_zero(2), left_zero(2)]))
def test_product_idempotent_count(G, H):
    P = direct_product(G, H)
    assert verify_axioms(P.table).verdict
    assert len(idempotents(P)) == len(idempotents(G)) * len(idempotents(H))


@settings(max_examples=40, deadline=None)
@given(rees_instances())
def test_components_are_groups(G):
    for a in range(G.order):
        comp = group_component(G, a)
        e = comp.identity
        assert all(comp.table[e][x] == x == comp.table[x][e] for x in range(comp.order))
        assert len(idempotents(comp)) == 1
