import pytest
from hypothesis import given, settings, strategies as st

from conftest import load_fixture
from gengroup.catalogue import BASE_GROUPS, cyclic_group, right_zero, trivial_group
from gengroup.core import group_component, idempotents, verify_axioms
from gengroup.errors import IndexOutOfRange, MalformedSpec
from gengroup.hom import HomTable, find_isomorphism, is_isomorphism
from gengroup.rees import ReesSpec, random_rees, rees_build, rees_idempotent, spec_from_doc, spec_to_doc


def test_degenerate_rees_is_base_group():
    z2 = cyclic_group(2)
    G = rees_build(ReesSpec(z2, 1, 1, [[0]]))
    assert G.names == ("0:0:0", "0:1:0")
    assert find_isomorphism(G, z2) is not None


def test_trivial_base_gives_right_zero():
    G = rees_build(ReesSpec(trivial_group(), 1, 3, [[0], [0], [0]]))
    assert G.table == right_zero(3).table
    assert is_isomorphism(HomTable(G, right_zero(3), (0, 1, 2)))


def test_z2_two_by_two():
    G = rees_build(ReesSpec(cyclic_group(2), 2, 2, [[0, 0], [0, 1]]))
    assert G.order == 8
    assert sum(G.table[x][x] == x for x in range(8)) == 4


def test_multiplication_rule():
    # (i,g,l)(j,h,m) = (i, g + P[l][j] + h, m) over Z/3
    spec = ReesSpec(cyclic_group(3), 2, 2, [[0, 1], [2, 1]])
    G = rees_build(spec)
    for x in range(G.order):
        i, g, lam = spec.triple(x)
        for y in range(G.order):
            j, h, mu = spec.triple(y)
            assert spec.triple(G.table[x][y]) == (i, (g + spec.sandwich[lam][j] + h) % 3, mu)


def test_rees_idempotent_examples():
    z2 = cyclic_group(2)
    spec = ReesSpec(z2, 1, 1, [[0]])
    assert rees_idempotent(spec, 0, 0) == 0
    spec = ReesSpec(trivial_group(), 1, 3, [[0], [0], [0]])
    assert [rees_idempotent(spec, 0, lam) for lam in range(3)] == [0, 1, 2]
    spec = ReesSpec(cyclic_group(3), 1, 1, [[1]])
    x = rees_idempotent(spec, 0, 0)
    assert spec.triple(x) == (0, 2, 0)
    G = rees_build(spec)
    assert G.table[x][x] == x
    with pytest.raises(IndexOutOfRange):
        rees_idempotent(spec, 1, 0)


def test_random_rees_frozen_fixture():
    assert spec_to_doc(random_rees(0, (2, 2))) == load_fixture("rees-seed0-caps2x2.spec.json")


def test_random_rees_determinism_and_caps():
    assert random_rees(17, (3, 2)) == random_rees(17, (3, 2))
    spec = random_rees(5, (1, 1), groups=["trivial"])
    assert rees_build(spec).order == 1
    for seed in range(50):
        s = random_rees(seed, (2, 3))
        assert 1 <= s.i_size <= 2 and 1 <= s.lambda_size <= 3


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(i_size=0, lambda_size=1, sandwich=[]),
        dict(i_size=1, lambda_size=1, sandwich=[[2]]),
        dict(i_size=2, lambda_size=1, sandwich=[[0]]),
        dict(i_size=1, lambda_size=2, sandwich=[[0]]),
    ],
)
def test_malformed_spec(kwargs):
    with pytest.raises(MalformedSpec):
        ReesSpec(cyclic_group(2), **kwargs)


def test_spec_doc_roundtrip():
    doc = load_fixture("rees-z2-2x2.spec.json")
    spec = spec_from_doc(doc)
    assert spec_to_doc(spec) == doc
    with pytest.raises(MalformedSpec):
        spec_from_doc({"group": doc["group"]})


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 100_000))
def test_rees_invariants(seed):
    spec = random_rees(seed, (3, 3))
    G = rees_build(spec)
    assert verify_axioms(G.table).verdict
    assert len(idempotents(G)) == spec.i_size * spec.lambda_size
    for x in range(G.order):
        i, _, lam = spec.triple(x)
        assert G.e(x) == rees_idempotent(spec, i, lam)
    for z in idempotents(G):
        assert find_isomorphism(group_component(G, z), spec.base_group) is not None


def test_catalogue_covers_expected_groups():
    assert sorted(BASE_GROUPS) == sorted(["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3"])
