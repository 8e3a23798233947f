import json

import pytest

import sanlib


def test_small_groups_and_lattices():
    assert sanlib.cyclic(12).order == 12
    assert len(sanlib.all_subgroups(sanlib.symmetric(3))) == 6
    assert len(sanlib.all_subgroups(sanlib.generalized_quaternion(8))) == 6


def test_san_and_t_predicates():
    holds, witness = sanlib.is_san(sanlib.sl23())
    assert not holds
    assert witness.order == 4
    assert sanlib.is_san(sanlib.sl23(), "fast")[0] is False
    assert sanlib.is_san(sanlib.dihedral(6)) == (True, None)
    # D24 has a subnormal S3 that is not normal, yet every abelian
    # subnormal subgroup is normal.
    assert sanlib.is_san(sanlib.dihedral(24))[0]
    assert not sanlib.is_t_group(sanlib.dihedral(24))[0]


def test_dedekind_kinds():
    assert sanlib.dedekind_kind(sanlib.cyclic(6)) == "abelian"
    assert sanlib.dedekind_kind(sanlib.generalized_quaternion(8)) == "hamiltonian"
    assert sanlib.dedekind_kind(sanlib.dihedral(8)) == "not-dedekind"


def test_radicals():
    g = sanlib.symmetric(4)
    assert sanlib.baer_radical(g).order == 4
    assert sanlib.fitting_subgroup(g) == sanlib.baer_radical(g)
    assert sanlib.nilpotent_residual(g).order == 12


def test_reports_are_plain_python():
    rep = sanlib.theorem_a_report(sanlib.dihedral(6))
    json.dumps(rep)
    assert rep["applicable"] is True
    assert all(item["verdict"] != "fail" for item in rep["items"])
    cls = sanlib.classify(sanlib.sl23())
    assert cls["is_san"] is False


def test_json_round_trip():
    g = sanlib.metacyclic(7, 3, 2)
    h = sanlib.group_from_json(sanlib.group_to_json(g))
    assert h.order == 21
    assert sanlib.is_isomorphic(g, h)


def test_bad_table_is_rejected():
    with pytest.raises(ValueError):
        sanlib.from_table("bad", [[0, 1], [1, 1]])


def test_sweep_matches_across_jobs():
    groups = sanlib.catalog(16)
    one = sanlib.sweep(groups, "san-equivalence", 1)
    two = sanlib.sweep(groups, "san-equivalence", 2)
    assert one == two
    assert all(r["ok"] for r in one)


def test_algebras():
    h = sanlib.heisenberg()
    assert sanlib.check_identities(h) is None
    assert sanlib.bracket(h, ["1", "0", "0"], ["0", "1", "0"]) == ["0", "0", "1"]
    assert sanlib.nilpotency_class(h) == 2
    assert sanlib.unique_abelian_certificate(sanlib.example_2_3_build(5))
    dec = sanlib.theorem_b_decompose(sanlib.scalar_extension_model(2, "3/2"))
    assert dec["outcome"] == "decomposed"
    assert dec["beta"] == "3/2"
    assert dec["round_trip"]
    with pytest.raises(ValueError, match="not solvable"):
        sanlib.theorem_b_decompose(sanlib.sl2())
