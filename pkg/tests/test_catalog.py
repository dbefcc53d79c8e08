import pytest

from nlie import frattini as fr
from nlie.algebra import NLieAlgebra, whole
from nlie.catalog import STANDARD_NAMES, audit, build, example_3_1, get_entry, nilpotent_family
from nlie.linalg import Field
from nlie.structure import derivation_algebra, derivation_residuals, derived_subalgebra, is_simple


def test_names_resolve():
    for name in STANDARD_NAMES:
        assert get_entry(name).name == name
    assert build("abelian:2:3", Field.gf(2)) == NLieAlgebra.abelian(2, 3, Field.gf(2))
    assert nilpotent_family(3, 4, Field.gf(3)) == example_3_1(Field.gf(3))


@pytest.mark.parametrize("bad", ["simple:1", "simple", "abelian:1:3", "nilpotent:3:3", "lie:3", "example_3_3", "simple:x"])
def test_bad_names(bad):
    with pytest.raises(ValueError):
        get_entry(bad)


def test_direct_sum_names(qq):
    a = build("simple:2+abelian:2:1", qq)
    assert a.dim == 4 and a.arity == 2


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("spec", ["q", "gf:3", "gf:5"])
def test_simple_family_invariants(n, spec):
    f = Field.from_spec(spec)
    a = build(f"simple:{n}", f)
    assert derived_subalgebra(a) == whole(a)
    assert is_simple(a).simple
    assert all(not derivation_residuals(a, m) for m in derivation_algebra(a).basis)
    if f.is_finite and f.modulus % 2:
        assert fr.frattini(a).F.dim == 0


def test_example_3_1_audit_matches(gf3):
    rep = audit("example_3_1", gf3)
    assert [r.status for r in rep.results] == ["match"] * 4


def test_example_3_2_audit_has_one_mismatch(gf2):
    rep = audit("example_3_2", gf2)
    assert len(rep.mismatches) == 1
    bad = rep.mismatches[0]
    assert bad.key == "F" and bad.expected == [] and bad.computed == [["1", "0", "0", "0", "0"], ["0", "1", "0", "0", "0"]]
    assert rep.notes


def test_simple_audit_over_gf5(gf5):
    rep = audit("simple:2", gf5)
    assert {r.key: r.status for r in rep.results} == {"simple": "match", "F": "match", "elementary": "match"}


def test_simple_audit_char_two_deviation(gf2):
    rep = audit("simple:2", gf2)
    statuses = {r.key: r.status for r in rep.results}
    assert statuses["F"] == "char-p-deviation"
    assert not rep.mismatches


def test_audit_over_q_undecided(qq):
    rep = audit("simple:2", qq)
    statuses = {r.key: r.status for r in rep.results}
    assert statuses["simple"] == "match"
    assert statuses["F"].startswith("undecided:")


def test_nilpotent_audit(gf3):
    rep = audit("nilpotent:2:3", gf3)
    assert all(r.status == "match" for r in rep.results)
    assert all(r.source == "derived" for r in rep.results)


def test_audit_is_deterministic(gf2):
    assert audit("example_3_2", gf2) == audit("example_3_2", gf2)
    assert audit("abelian:3:4", gf2).results == audit("abelian:3:4", gf2).results
