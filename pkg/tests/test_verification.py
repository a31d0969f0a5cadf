"""The verification engine: strategies, reports, case counts, rechecks."""

import json

import pytest

import semifuzz as sf
from semifuzz import verification


@pytest.fixture
def chain2():
    return sf.make_chain(2)


class TestStrategyAndDispatch:
    def test_unknown_theorem(self, null2, chain2):
        with pytest.raises(ValueError, match="unknown theorem"):
            sf.verify_theorem(null2, "assoc", sf.Exhaustive(chain2))

    def test_invalid_chain(self):
        with pytest.raises(ValueError, match="positive"):
            sf.make_chain(0)
        with pytest.raises(ValueError, match="start at 0"):
            sf.Chain((sf.parse_value("1/2"), sf.parse_value("1")))

    def test_sample_count_must_be_positive(self, chain2):
        with pytest.raises(ValueError, match="positive"):
            sf.Sampled(chain2, 0)

    def test_strategy_type_checked(self, null2, chain2):
        with pytest.raises(TypeError):
            sf.verify_theorem(null2, "star-assoc", chain2)
        with pytest.raises(TypeError, match="not a chain"):
            sf.Exhaustive((0, 1))
        with pytest.raises(TypeError, match="not a chain"):
            sf.Sampled([0, 1], 5)

    @pytest.mark.parametrize("theorem", sf.THEOREMS)
    def test_every_theorem_passes_on_small_instances(self, theorem, null2, mono31, z2,
                                                     left_zero2, chain2):
        for sg in (null2, mono31, z2, left_zero2):
            report = sf.verify_theorem(sg, theorem, sf.Exhaustive(sf.make_chain(1)))
            assert report.passed, report.counterexample
            report = sf.verify_theorem(sg, theorem, sf.Sampled(chain2, 25, seed=3))
            assert report.passed, report.counterexample


class TestCaseCounts:
    def test_star_assoc_exhaustive_count(self, null2, chain2):
        # sum over base elements of (chain size ** divisor count) cubed:
        # 9**3 for base 0 (both elements divide 0) plus 3**3 for base a
        report = sf.verify_theorem(null2, "star-assoc", sf.Exhaustive(chain2))
        assert report.passed and report.cases_checked == 756

    def test_delta_congruence_exhaustive_count(self, null2, chain2):
        # related pairs: all 9x9 at base 0 (agreement everywhere) gives 9,
        # agreement only at a gives 27; quadruples are their squares
        report = sf.verify_theorem(null2, "delta-congruence", sf.Exhaustive(chain2))
        assert report.passed and report.cases_checked == 81 + 729

    def test_distributivity_exhaustive_count(self, null2, chain2):
        # value lists of width 1..3 over the chain, times the spare operand
        report = sf.verify_theorem(null2, "distributivity", sf.Exhaustive(chain2))
        assert report.passed and report.cases_checked == (3 + 9 + 27) * 3

    def test_sampled_budget_is_respected(self, mono31, chain2):
        report = sf.verify_theorem(mono31, "star-assoc", sf.Sampled(chain2, 40, seed=1))
        assert report.cases_checked == 40

    def test_kernel_criterion_includes_cross_validation(self, mono31, chain2):
        report = sf.verify_theorem(mono31, "kernel-criterion", sf.Exhaustive(chain2))
        assert report.cases_checked == mono31.order + 1


class TestReports:
    def test_report_fields(self, null2, chain2):
        report = sf.verify_theorem(null2, "subdirect", sf.Exhaustive(chain2))
        assert report.theorem == "subdirect"
        assert report.strategy == "exhaustive"
        assert report.seed is None
        assert report.counterexample is None
        assert report.instance["order"] == 2
        assert report.instance["chain"] == ["0", "1/2", "1"]
        assert report.instance["semigroup"]["elements"] == ["0", "a"]

    def test_report_json_round_trips(self, null2, chain2):
        report = sf.verify_theorem(null2, "phi-embedding", sf.Exhaustive(chain2))
        blob = report.to_json()
        assert json.loads(json.dumps(blob)) == blob
        assert blob["verdict"] == "pass"
        assert set(blob) == {"theorem", "instance", "strategy", "seed", "verdict",
                             "cases_checked", "counterexample"}

    def test_sampled_runs_are_reproducible(self, mono31, chain2):
        first = sf.verify_theorem(mono31, "quotient-iso", sf.Sampled(chain2, 60, seed=11))
        second = sf.verify_theorem(mono31, "quotient-iso", sf.Sampled(chain2, 60, seed=11))
        assert first == second
        assert first.seed == 11 and first.strategy == "sampled"

    def test_summary_line(self, null2, chain2):
        report = sf.verify_theorem(null2, "distributivity", sf.Sampled(chain2, 10, seed=2))
        assert "distributivity" in report.summary()
        assert "PASS" in report.summary()
        assert "seed 2" in report.summary()


class TestCoreCriterionEdges:
    def test_singleton_semigroup(self, chain2):
        sg = sf.build_semigroup(["x"], [["x"]])
        report = sf.verify_theorem(sg, "core-criterion", sf.Exhaustive(chain2))
        assert report.passed and report.cases_checked == 1

    def test_coreless_semigroup(self, chain2):
        # two non-trivial principal ideals meeting only in the zero:
        # no core, so no non-zero element may have a small non-divisor set
        sg = sf.catalog("null", 3)
        assert sg.core() is None
        report = sf.verify_theorem(sg, "core-criterion", sf.Exhaustive(chain2))
        assert report.passed

    def test_zero_divides_everything(self, mono31, chain2):
        _, rest = mono31.divisor_partition(mono31.zero_element())
        assert len(rest) == 0
        report = sf.verify_theorem(mono31, "core-criterion", sf.Exhaustive(chain2))
        assert report.passed


class TestRecheck:
    def test_fabricated_star_assoc_payload_rejected(self, mono31):
        flat = {"base": "c2", "values": {"c": "0", "c2": "0"}}
        payload = {"base": "c2", "f": flat, "g": flat, "h": flat, "lhs": {}, "rhs": {}}
        assert not sf.recheck_counterexample(mono31, "star-assoc", payload)

    def test_fabricated_delta_payload_with_false_hypotheses_rejected(self, null2):
        payload = {
            "base": "a",
            "f1": {"0": "0", "a": "1"}, "g1": {"0": "0", "a": "0"},
            "f2": {"0": "0", "a": "0"}, "g2": {"0": "0", "a": "0"},
        }
        assert not sf.recheck_counterexample(null2, "delta-congruence", payload)

    def test_fabricated_embedding_payload_rejected(self, null2):
        payload = {"property": "homomorphism", "s": "a", "t": "a", "lhs": {}, "rhs": {}}
        assert not sf.recheck_counterexample(null2, "phi-embedding", payload)
        payload = {"property": "injectivity", "s": "0", "t": "a"}
        assert not sf.recheck_counterexample(null2, "phi-embedding", payload)

    def test_fabricated_rees_payload_rejected(self, mono31):
        payload = {"base": "c2", "s": "c3", "t": "c3"}
        assert not sf.recheck_counterexample(mono31, "restriction-rees", payload)

    def test_fabricated_kernel_payload_rejected(self, mono31):
        assert not sf.recheck_counterexample(
            mono31, "kernel-criterion", {"element": "c3", "divisor_count": 3, "in_kernel": True})
        assert not sf.recheck_counterexample(
            mono31, "kernel-criterion",
            {"property": "cross-validation", "kernel": ["c3"], "least_ideal": ["c3"]})

    def test_fabricated_core_payload_rejected(self, mono31):
        assert not sf.recheck_counterexample(
            mono31, "core-criterion", {"element": "c", "nondivisor_count": 2, "in_core": False})
        assert not sf.recheck_counterexample(
            mono31, "core-criterion",
            {"property": "cross-validation", "core": ["c2", "c3"],
             "least_nontrivial_ideal": ["c2", "c3"]})

    def test_fabricated_distributivity_payload_rejected(self, null2):
        payload = {"law": "meet-over-join", "values": ["1/2", "1"], "b": "1/3"}
        assert not sf.recheck_counterexample(null2, "distributivity", payload)

    def test_verifier_refuses_unconfirmed_counterexamples(self, null2, chain2, monkeypatch):
        def lying_checker(sg, chain, rng, count):
            return 1, {"law": "meet-over-join", "values": ["1"], "b": "1"}

        monkeypatch.setitem(verification._CHECKERS, "distributivity", lying_checker)
        with pytest.raises(RuntimeError, match="recheck"):
            sf.verify_theorem(null2, "distributivity", sf.Exhaustive(chain2))

    def test_failing_report_carries_counterexample(self, null2, chain2, monkeypatch):
        # a genuinely violating payload cannot arise from the real checks, so
        # fabricate a checker whose payload the recheck does confirm: break
        # the distributivity payload by inverting the roles in the claim
        def checker(sg, chain, rng, count):
            return 5, {"law": "join-over-meet", "values": ["0", "1"], "b": "1/2"}

        def confirm(sg, theorem, payload):
            return True

        monkeypatch.setitem(verification._CHECKERS, "distributivity", checker)
        monkeypatch.setattr(verification, "recheck_counterexample", confirm)
        report = sf.verify_theorem(null2, "distributivity", sf.Exhaustive(chain2))
        assert not report.passed
        assert report.verdict == "fail"
        assert report.cases_checked == 5
        assert report.counterexample["values"] == ["0", "1"]
        blob = report.to_json()
        assert json.loads(json.dumps(blob))["counterexample"] == report.counterexample

    def test_unknown_theorem_recheck(self, null2):
        with pytest.raises(ValueError, match="unknown theorem"):
            sf.recheck_counterexample(null2, "nope", {})
