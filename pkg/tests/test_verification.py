from fractions import Fraction

from hierpower import (
    HierNet,
    beta_measure,
    check_axioms,
    classify,
    degree_measure,
    gately_measure,
    generate_random,
    proportional_measure,
    restricted_egalitarian,
    shapley_oracle_agrees,
    verify_theorems,
)
from hierpower.verification import PASS, SKIP

F = Fraction


def axiom_suite(*figs) -> list[HierNet]:
    return list(figs) + [generate_random(5, F(1, 2), seed=500 + k) for k in range(40)]


class TestCheckAxioms:
    def test_gately_measure_satisfies_all_three(self, fig1, fig2, fig3):
        report = check_axioms(gately_measure, axiom_suite(fig1, fig2, fig3))
        assert report.all_pass
        assert report.witness is None

    def test_beta_fails_only_restricted_proportionality(self, fig1, fig2, fig3):
        report = check_axioms(beta_measure, axiom_suite(fig1, fig2, fig3))
        assert report.normalisation and report.normality
        assert not report.restricted_proportionality
        # the witness network must actually be principal
        nets = axiom_suite(fig1, fig2, fig3)
        assert classify(nets[report.witness.net_index]).principal

    def test_egalitarian_fails_only_restricted_proportionality(self, fig1, fig2, fig3):
        report = check_axioms(restricted_egalitarian, axiom_suite(fig1, fig2, fig3))
        assert report.normalisation and report.normality
        assert not report.restricted_proportionality

    def test_proportional_fails_only_normality(self, fig1, fig2, fig3):
        report = check_axioms(proportional_measure, axiom_suite(fig1, fig2, fig3))
        assert report.normalisation and report.restricted_proportionality
        assert not report.normality

    def test_degree_fails_only_normalisation(self, fig1, fig2, fig3):
        report = check_axioms(degree_measure, axiom_suite(fig1, fig2, fig3))
        assert not report.normalisation
        assert report.normality and report.restricted_proportionality


def clause_status(report, name: str) -> str:
    (clause,) = [c for c in report.clauses if c.name == name]
    return clause.status


class TestVerifyTheorems:
    def test_fig1_report(self, fig1):
        report = verify_theorems(fig1)
        assert report.passed
        assert clause_status(report, "duality") == PASS
        assert clause_status(report, "beta-core") == PASS
        assert clause_status(report, "gately-identity") == PASS
        assert clause_status(report, "gately-core-small") == SKIP
        assert clause_status(report, "gately-core-weakly-regular") == SKIP
        # outside the Core, but no theorem clause demanded membership
        (core_clause,) = [c for c in report.clauses if c.name == "gately-core"]
        assert core_clause.status == SKIP
        assert "permitted" in core_clause.detail

    def test_fig2_report(self, fig2):
        report = verify_theorems(fig2)
        assert report.passed
        assert clause_status(report, "gately-core-small") == PASS
        assert clause_status(report, "gately-core-weakly-regular") == SKIP
        assert clause_status(report, "gately-beta-weakly-regular") == SKIP
        assert clause_status(report, "gately-core") == PASS

    def test_fig3_report(self, fig3):
        report = verify_theorems(fig3)
        assert report.passed
        assert clause_status(report, "gately-core-weakly-regular") == PASS
        assert clause_status(report, "gately-beta-weakly-regular") == PASS

    def test_simple_network_clause(self, chain2):
        report = verify_theorems(chain2)
        assert report.passed
        assert clause_status(report, "simple-unique-core") == PASS

    def test_random_networks_all_pass(self):
        for k in range(60):
            net = generate_random(3 + k % 5, F(1, 2), seed=7000 + k)
            report = verify_theorems(net)
            assert report.passed, report.failures()

    def test_failures_listed(self, fig1):
        report = verify_theorems(fig1)
        assert report.failures() == ()


class TestShapleyOracle:
    def test_agreement_on_random_networks(self):
        for k in range(10):
            net = generate_random(5, F(1, 2), seed=8000 + k)
            assert shapley_oracle_agrees(net)
