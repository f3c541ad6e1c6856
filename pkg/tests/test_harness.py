"""Verification harness: suites, report plumbing, generators, scans."""

import json

import pytest

from thetalab import (
    IntPoly,
    PreconditionError,
    barycentric,
    boundary_subcomplex,
    cycle,
    example_5_2_ball,
    example_5_4_ball,
    identity,
    octahedron,
    path,
    simplex,
    theta,
)
from thetalab.harness import (
    InstanceGenerator,
    VerificationReport,
    check_conjecture_5_3,
    check_link_conjecture,
    corpus,
    failures,
    nested_ball_pairs,
    remark_4_7_instance,
    run_suite,
    scan_reports,
    scan_theta_zero,
    subdivision_kinds,
    summarize,
    theta_verified,
    verified_boundary,
    verify_kms,
    verify_locality,
    verify_monotonicity_a,
    verify_monotonicity_b,
    verify_monotonicity_c,
    verify_theta_formula,
)

P = IntPoly


# ----------------------------------------------------------------- reports


def test_report_json_round_trip():
    r = VerificationReport("Eq3.3", "sd(octahedron)", "1 + x", "1 + x", True)
    data = json.loads(r.to_json())
    assert data == {
        "identity": "Eq3.3",
        "instance": "sd(octahedron)",
        "lhs": "1 + x",
        "rhs": "1 + x",
        "passed": True,
        "kind": "identity",
        "applicable": True,
        "detail": "",
    }


def test_report_rejects_unknown_kind():
    with pytest.raises(PreconditionError):
        VerificationReport("X", "i", "", "", True, kind="hunch")


def test_failures_filters_by_kind_and_applicability():
    bad_identity = VerificationReport("A", "i", "1", "2", False)
    bad_theorem = VerificationReport("B", "i", "1", "2", False, kind="theorem")
    bad_conjecture = VerificationReport("C", "i", "1", "2", False, kind="conjecture")
    skipped = VerificationReport("D", "i", "", "", False, kind="identity",
                                 applicable=False)
    out = failures([bad_identity, bad_theorem, bad_conjecture, skipped])
    assert [r.identity for r in out] == ["A", "B"]


def test_summarize_counts():
    reports = [
        VerificationReport("A", "x", "1", "1", True),
        VerificationReport("A", "y", "", "", True, applicable=False, detail="skip"),
        VerificationReport("B", "z", "1", "2", False, kind="conjecture"),
    ]
    text = summarize(reports)
    assert "A" in text and "passed 1/1" in text and "+1 inapplicable" in text
    assert text.strip().endswith("3 reports, 0 identity/theorem failures")


# ------------------------------------------------------------- fixed inputs


def test_corpus_names_are_unique():
    names = [name for name, _ in corpus()]
    assert len(names) == len(set(names))
    assert "octahedron" in names and "ball_5_4" in names


def test_subdivision_kinds_all_build():
    base = simplex("abc")
    for name, maker in subdivision_kinds():
        tri = maker(base)
        assert tri.base == base, name


def test_verified_boundary_and_theta_verified():
    assert verified_boundary(octahedron()) is None
    assert verified_boundary(simplex("abc")) is not None
    assert theta_verified(example_5_2_ball()) == P((0, 1, 0, 1))
    with pytest.raises(PreconditionError):
        theta_verified(octahedron())


# ------------------------------------------------------------- single checks


def test_verify_locality_identity_case():
    tri = barycentric(simplex("abc"))
    r = verify_locality(tri, instance="sd(triangle)", kind="sd")
    assert r.passed and r.identity == "Thm2.1"


def test_verify_theta_formula():
    tri = barycentric(path(3))
    r = verify_theta_formula(tri, instance="sd(path3)", kind="sd")
    assert r.passed and r.identity == "Eq3.3"


def test_verify_kms_needs_simplex_base():
    r = verify_kms(barycentric(simplex("abc")), instance="sd", kind="sd")
    assert r.passed and r.identity == "Eq3.4"
    with pytest.raises(PreconditionError):
        verify_kms(barycentric(path(2)))


def test_monotonicity_a():
    ball = cycle(4).cone("c")
    r = verify_monotonicity_a(ball, barycentric(ball), "sd(cone)", kind="sd")
    assert r.passed and r.kind == "theorem"
    # a simplex has no interior vertex
    with pytest.raises(PreconditionError):
        verify_monotonicity_a(simplex("abc"), barycentric(simplex("abc")))


def test_monotonicity_a_rejects_foreign_triangulation():
    with pytest.raises(PreconditionError):
        verify_monotonicity_a(cycle(4).cone("c"), barycentric(simplex("abc")))


def test_monotonicity_b():
    ball = cycle(4).cone("c")
    r = verify_monotonicity_b(ball, barycentric(ball), "sd(cone)", kind="sd")
    assert r.passed and r.identity == "Thm4.2"
    # the identity triangulation of a simplex has negative restriction thetas
    with pytest.raises(PreconditionError):
        verify_monotonicity_b(simplex("abc"), identity(simplex("abc")))


def test_monotonicity_c_gap_identity():
    outer, inner, vertex = remark_4_7_instance()
    assert vertex == "a:4"
    r = verify_monotonicity_c(outer, inner, "edgewise corner",
                              expected_gap=P.monomial(2))
    assert r.passed and r.identity == "Rem4.7"
    assert theta(inner) == theta(outer) + P.monomial(2)


def test_monotonicity_c_preconditions():
    outer, inner, _ = remark_4_7_instance()
    with pytest.raises(PreconditionError):
        verify_monotonicity_c(inner, outer)  # not a subcomplex this way round
    with pytest.raises(PreconditionError):
        verify_monotonicity_c(outer, simplex("abc"))  # dimension mismatch


def test_conjecture_5_3_applicable_case():
    ball = cycle(5).cone("c")  # flag 2-ball with induced boundary
    r = check_conjecture_5_3(ball, "cone over pentagon")
    assert r.applicable and r.passed and r.kind == "conjecture"


def test_conjecture_5_3_flags_example_5_4_inapplicable():
    r = check_conjecture_5_3(example_5_4_ball(), "ball_5_4")
    assert not r.applicable and r.passed
    assert "boundary is not induced" in r.detail
    assert "x + x^3" in r.detail  # the offending theta is recorded


def test_conjecture_5_3_non_flag():
    r = check_conjecture_5_3(example_5_2_ball(), "ball_5_2")
    assert not r.applicable
    assert "not flag" in r.detail


def test_link_conjecture():
    r = check_link_conjecture(octahedron(), "x1", "octahedron/x1")
    assert r.passed
    r = check_link_conjecture(cycle(6), "v0", "cycle6/v0")
    assert r.passed


# ------------------------------------------------------------------- scans


def test_scan_theta_zero_membership():
    hits = dict(scan_theta_zero(corpus()))
    assert "cone_cycle4" in hits and "cone_octahedron" in hits
    assert "ball_5_2" not in hits
    assert "octahedron" not in hits  # not a ball at all


def test_scan_reports_theta_zero():
    reports = scan_reports("theta-zero", seed=0, max_dim=2, samples=1)
    assert reports and all(r.identity == "Q3.10" for r in reports)
    assert all(r.kind == "evidence" for r in reports)
    details = {r.detail for r in reports}
    assert any("vanishes" in d for d in details)


def test_scan_reports_bad_kind():
    with pytest.raises(PreconditionError):
        scan_reports("everything")


# -------------------------------------------------------------- generators


def test_instance_generator_reproducible():
    a = InstanceGenerator(7, "ball", max_dim=2).instances(2)
    b = InstanceGenerator(7, "ball", max_dim=2).instances(2)
    assert [(n, c) for n, c in a] == [(n, c) for n, c in b]
    c = InstanceGenerator(8, "ball", max_dim=2).instances(2)
    assert [x for _, x in a] != [x for _, x in c]


def test_instance_generator_classes():
    for klass, check in [
        ("ball", lambda c: verified_boundary(c) is not None),
        ("sphere", lambda c: c.reduced_euler() in (1, -1)),
        ("flag-ball", lambda c: c.is_flag()),
    ]:
        for _, c in InstanceGenerator(3, klass, max_dim=2).instances(1):
            assert check(c), klass
    with pytest.raises(PreconditionError):
        InstanceGenerator(0, "widget")._one(1, 0)


def test_nested_ball_pairs():
    from thetalab import is_subcomplex

    pairs = nested_ball_pairs(seed=1, max_dim=2, count=2)
    assert pairs
    for _, inner, outer in pairs:
        assert is_subcomplex(inner, outer)
        assert inner.dim == outer.dim


# ------------------------------------------------------------------ suites


def test_run_suite_all_small():
    reports = run_suite("all", seed=0, max_dim=2, samples=2)
    assert not failures(reports)
    idents = {r.identity for r in reports}
    for required in ("Thm2.1", "Eq3.3", "Eq3.4", "Thm4.1", "Thm4.2",
                     "Prop3.2", "Eq5.1", "Conj5.3", "Prop5.5ii"):
        assert required in idents, required


def test_run_suite_deterministic_across_threads():
    one = run_suite("theta", seed=2, max_dim=2, samples=1, threads=1)
    many = run_suite("theta", seed=2, max_dim=2, samples=1, threads=4)
    assert one == many


def test_run_suite_seed_reproducible():
    again = run_suite("locality", seed=3, max_dim=1, samples=2)
    assert again == run_suite("locality", seed=3, max_dim=1, samples=2)


def test_run_suite_validation():
    with pytest.raises(PreconditionError):
        run_suite("everything")
    with pytest.raises(PreconditionError):
        run_suite("all", max_dim=0)
    with pytest.raises(PreconditionError):
        run_suite("locality", threads=0)


def test_thread_env_parsing(monkeypatch):
    monkeypatch.setenv("THETA_LAB_THREADS", "2")
    reports = run_suite("locality", seed=0, max_dim=1, samples=1)
    assert reports
    monkeypatch.setenv("THETA_LAB_THREADS", "two")
    with pytest.raises(PreconditionError):
        run_suite("locality", seed=0, max_dim=1, samples=1)
