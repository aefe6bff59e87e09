"""Operator constructors and symmetry-algebra verification (unit scale).

The full N in {2,3} x flavor sweep lives in the acceptance suite; here the
builders' structural identities are checked plus one complete dimension.
"""

from fractions import Fraction

import pytest

from darboux3.algebra import (
    OperatorExpr,
    build_angular_invariants,
    build_fradkin,
    build_hamiltonian,
    conformal_potential_identity,
    corrupt_fradkin,
    parse,
    potential_u1,
    potential_u2,
    potential_v1,
    potential_v2,
    similarity_checks,
    sl2_generators,
    verify_theorem,
)


def test_hamiltonian_text_form():
    h = build_hamiltonian("schrodinger", 2)
    assert h == parse("(1/(2*D))*(p1^2+p2^2) + (omega^2/(2*D))*(q1^2+q2^2)", 2)


def test_lb_equals_schrodinger_only_at_n2():
    assert build_hamiltonian("lb", 2) == build_hamiltonian("schrodinger", 2)
    assert build_hamiltonian("lb", 3) != build_hamiltonian("schrodinger", 3)
    assert potential_u1(2).is_zero()
    assert potential_u2(2).is_zero()
    assert not potential_v1(2).is_zero()  # PDM corrections survive at N=2
    assert not potential_v2(2).is_zero()


def test_flavor_decompositions():
    for nq in (2, 3):
        h = build_hamiltonian("schrodinger", nq)
        assert build_hamiltonian("lb", nq) == h + potential_u1(nq)
        assert build_hamiltonian("tlb", nq) == h + potential_u1(nq) + potential_u2(nq)
        assert build_hamiltonian("pdm", nq) == h + potential_v1(nq)
        assert build_hamiltonian("tpdm", nq) == h + potential_v1(nq) + potential_v2(nq)
        # tlb minus schrodinger minus U1 is exactly U2
        assert build_hamiltonian("tlb", nq) - h - potential_u1(nq) == potential_u2(nq)
    with pytest.raises(ValueError):
        build_hamiltonian("weyl", 3)


def test_tlb_flat_limit_is_flat_oscillator():
    flat = build_hamiltonian("tlb", 3).substitute_lambda_zero()
    assert flat == parse("(1/2)*(p1^2+p2^2+p3^2) + (omega^2/2)*(q1^2+q2^2+q3^2)", 3)


def test_angular_invariant_counts_and_n2_form():
    inv2 = build_angular_invariants(2)
    assert set(inv2) == {"C^(2)", "C_(2)"}
    assert inv2["C^(2)"] == inv2["C_(2)"]  # single distinct operator at N=2
    assert inv2["C^(2)"] == parse("(q1*p2-q2*p1)^2", 2)
    inv3 = build_angular_invariants(3)
    distinct = {str(v) for v in inv3.values()}
    assert len(distinct) == 3  # 2N-3 with C^(3) = C_(3)
    assert inv3["C^(3)"] == inv3["C_(3)"]


def test_fradkin_flat_limit_and_trace():
    for flavor in ("schrodinger", "tlb", "tpdm"):
        t = build_fradkin(flavor, 2)
        flat = t[0][1].substitute_lambda_zero()
        assert flat == parse("p1*p2 + omega^2*q1*q2", 2)
        # trace identity
        h2 = build_hamiltonian(flavor, 2)
        assert t[0][0] + t[1][1] == h2 + h2
    t3 = build_fradkin("schrodinger", 3)
    h3 = build_hamiltonian("schrodinger", 3)
    assert t3[0][0] + t3[1][1] + t3[2][2] == h3 + h3
    with pytest.raises(ValueError):
        build_fradkin("lb", 3)


def test_tlb_fradkin_reduces_to_direct_form_at_n2():
    # the (N-2) factors vanish, leaving the direct-quantization tensor shape
    t = build_fradkin("tlb", 2)
    h = build_hamiltonian("tlb", 2)
    direct = parse("p1*p2", 2) + h.scale(parse("-2*lambda*q1*q2", 2).terms[(0, 0)]) \
        + parse("omega^2*q1*q2", 2)
    assert t[0][1] == direct


def test_sl2_relations():
    for nq in (2, 3):
        jp, jm, j3 = sl2_generators(nq)
        ih = parse("i*hbar", nq)
        assert j3.commutator(jp) == (ih * jp) * 2
        assert j3.commutator(jm) == -((ih * jm) * 2)
        assert jm.commutator(jp) == (ih * j3) * 4
        # J3 = q.p - i*hbar*N/2 in normal order
        qp = sum(
            (parse(f"q{i}*p{i}", nq) for i in range(1, nq + 1)),
            OperatorExpr.zero(nq),
        )
        assert j3 == qp - parse("i*hbar", nq).scale(Fraction(nq, 2))


def test_intermediate_flavors_keep_angular_symmetry():
    # lb and pdm (without their central corrections) still commute with the
    # full angular ladder; only the Fradkin tensor needs the transformed forms
    for flavor in ("lb", "pdm"):
        h = build_hamiltonian(flavor, 3)
        for c in build_angular_invariants(3).values():
            assert h.commutator(c).is_zero()


def test_verify_theorem_full_n2_all_flavors():
    for flavor in ("schrodinger", "tlb", "tpdm"):
        rep = verify_theorem(flavor, 2)
        assert rep.all_zero, [c.lhs for c in rep.failures()]
        assert len(rep.checks) > 0


def test_verify_theorem_spot_n3():
    rep = verify_theorem("tpdm", 3, parts=("i",))
    assert rep.all_zero


def test_verify_theorem_rejects_bad_args():
    with pytest.raises(ValueError):
        verify_theorem("lb", 2)
    with pytest.raises(ValueError):
        verify_theorem("schrodinger", 2, parts=("iv",))


def test_corrupted_invariant_reports_residual():
    fradkin = corrupt_fradkin(build_fradkin("tlb", 3), "I11")
    rep = verify_theorem("tlb", 3, parts=("i",), fradkin=fradkin)
    assert not rep.all_zero
    fails = rep.failures()
    assert any("I_11" in c.lhs for c in fails)
    assert all(c.residual_terms > 0 and c.residual for c in fails)
    with pytest.raises(ValueError):
        corrupt_fradkin(build_fradkin("tlb", 3), "I14")
    with pytest.raises(ValueError):
        corrupt_fradkin(build_fradkin("tlb", 3), "X11")


def test_conformal_potential_identity_dimensions():
    for nq in (2, 3, 5):
        assert conformal_potential_identity(nq)


def test_similarity_checks_n2_n3():
    for nq in (2, 3):
        checks = similarity_checks(nq)
        assert all(c.commutator_zero for c in checks), [
            (c.lhs, c.rhs) for c in checks if not c.commutator_zero
        ]


def test_report_json_shape():
    rep = verify_theorem("schrodinger", 2, parts=("sl2",))
    body = rep.to_json()
    assert body["flavor"] == "schrodinger"
    assert body["N"] == 2
    assert body["all_zero"] is True
    for check in body["checks"]:
        assert set(check) >= {"lhs", "rhs", "commutator_zero", "residual_terms"}
