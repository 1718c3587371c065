import numpy as np
import pytest
import qsspy as qs
from pytest import fixture, mark
from qsspy.tools._verifier._report import _verdict


@fixture(scope="module")
def five_qubit_report(five_qubit_scheme):
    return qs.tl.subset_report(five_qubit_scheme, qs.tl.Tolerance())


@fixture
def teleported():
    scheme, _, _ = qs.tl.teleport_protocol(3, qs.tl.SecretSpec.uniform(2), forced_outcome=(0, 0))
    return scheme


def _rowless_msp():
    # player 2 owns no row
    return qs.tl.MSP.from_rows(3, [[1]], [1], n_players=2)


def _build_scheme(name):
    qubit = qs.tl.SecretSpec.uniform(2)
    skewed = qs.tl.SecretSpec(2, [0.2, 0.8])
    builders = {
        "five_qubit": lambda: qs.tl.encode_stabilizer_qts(qs.dt.five_qubit_code(), qubit),
        "skewed_stabilizer": lambda: qs.tl.encode_stabilizer_qts(qs.dt.five_qubit_code(), skewed),
        "repetition": lambda: qs.tl.encode_stabilizer_qts(qs.dt.repetition_code(), qubit),
        "vandermonde": lambda: qs.tl.encode_msp(qs.dt.shamir_msp(2, 3, 5), qs.tl.SecretSpec.uniform(5)),
        "weighted": lambda: qs.tl.encode_msp(qs.dt.weighted_threshold_msp(), qubit),
        "rowless": lambda: qs.tl.encode_msp(_rowless_msp(), qs.tl.SecretSpec.uniform(3)),
        "ghz": lambda: qs.tl.encode_ghz_direct(3, qubit),
        "teleport": lambda: qs.tl.teleport_protocol(3, qubit, forced_outcome=(1, 0))[0],
    }
    return builders[name]()


class TestTolerance:
    def test_default(self, monkeypatch):
        monkeypatch.delenv("QSS_TOL", raising=False)
        assert qs.tl.Tolerance.resolve().eps == 1e-6

    def test_environment_variable(self, monkeypatch):
        monkeypatch.setenv("QSS_TOL", "1e-8")
        assert qs.tl.Tolerance.resolve().eps == 1e-8
        assert qs.tl.Tolerance.resolve(1e-4).eps == 1e-4

    @mark.parametrize("eps", [0.0, -1e-6, 1e-2, 0.5])
    def test_rejects_out_of_range(self, eps):
        with pytest.raises(ValueError):
            qs.tl.Tolerance(eps)

    def test_rejects_malformed_environment(self, monkeypatch):
        monkeypatch.setenv("QSS_TOL", "tiny")
        with pytest.raises(ValueError, match="QSS_TOL"):
            qs.tl.Tolerance.resolve()


class TestSubsetReport:
    def test_five_qubit_threshold(self, five_qubit_report):
        assert len(five_qubit_report.results) == 31
        for result in five_qubit_report.results:
            expected = 2.0 if len(result.players) >= 3 else 0.0
            assert result.mutual_info_bits == pytest.approx(expected, abs=1e-6)
        assert five_qubit_report.verdict.kind == "PERFECT"
        assert five_qubit_report.verdict.structure == qs.tl.threshold_structure(3, 5)

    def test_subset_order(self, five_qubit_report):
        assert [r.players for r in five_qubit_report.results[:6]] == [(1,), (2,), (3,), (4,), (5,), (1, 2)]
        assert five_qubit_report.results[-1].players == (1, 2, 3, 4, 5)

    def test_zero_information_is_exact(self, five_qubit_report):
        assert five_qubit_report.result_for([4, 2]).mutual_info_bits == 0.0

    def test_to_df(self, five_qubit_report):
        df = five_qubit_report.to_df()
        assert list(df.columns) == ["players", "size", "entropy", "mutual_info", "class"]
        assert (df.groupby("size")["class"].first() == ["ZERO", "ZERO", "FULL", "FULL", "FULL"]).all()

    def test_to_dict(self, five_qubit_report):
        content = five_qubit_report.to_dict()
        assert content["verdict"] == "PERFECT"
        assert content["reference_mutual"] == 2.0
        assert content["structure"]["n"] == 5
        assert content["subsets"][0] == {"players": [1], "entropy": 1.0, "mutual_info": 0.0, "class": "ZERO"}

    def test_teleported_ghz_is_not_perfect(self, teleported):
        report = qs.tl.subset_report(teleported)
        assert report.verdict.kind == "NON_PERFECT"
        assert report.verdict.structure is None
        assert report.verdict.witnesses[0].describe() == "{1}: PARTIAL I=1.0"
        for result in report.results:
            expected = 2.0 if len(result.players) == 3 else 1.0
            assert result.mutual_info_bits == pytest.approx(expected)

    @mark.parametrize("n", [2, 3])
    def test_direct_ghz_partial_information(self, n):
        report = qs.tl.subset_report(qs.tl.encode_ghz_direct(n, qs.tl.SecretSpec.uniform(2)))
        proper = [r for r in report.results if len(r.players) < n]
        assert all(r.classification == "PARTIAL" for r in proper)
        assert all(r.mutual_info_bits == pytest.approx(1.0) for r in proper)

    def test_msp_scheme(self, vandermonde_scheme):
        report = qs.tl.subset_report(vandermonde_scheme)
        assert report.verdict.kind == "PERFECT"
        assert report.verdict.structure == qs.tl.threshold_structure(2, 3)
        assert report.reference_mutual_bits == pytest.approx(2 * np.log2(5))

    def test_weighted_msp_scheme(self):
        msp = qs.dt.weighted_threshold_msp()
        report = qs.tl.subset_report(qs.tl.encode_msp(msp, qs.tl.SecretSpec.uniform(2)))
        assert report.verdict.kind == "PERFECT"
        assert report.verdict.structure == qs.tl.msp_structure(msp)

    def test_degenerate_secret(self, five_qubit_code):
        scheme = qs.tl.encode_stabilizer_qts(five_qubit_code, qs.tl.SecretSpec.deterministic(2))
        report = qs.tl.subset_report(scheme)
        assert all(r.classification == "FULL" for r in report.results)
        assert report.verdict.kind == "PERFECT"
        assert report.verdict.structure.maximal_unauthorized == [()]

    def test_mixed_scheme_after_discard(self, five_qubit_scheme):
        mixed = qs.tl.discard_share(five_qubit_scheme, "share_5")
        report = qs.tl.subset_report(mixed)
        assert report.players == (1, 2, 3, 4)
        assert report.reference_mutual_bits == pytest.approx(2.0)
        assert report.verdict.kind == "PERFECT"
        assert report.verdict.structure == qs.tl.threshold_structure(3, 4)

    @mark.parametrize(
        "classes,pure,kind",
        [
            ({(1,): "ZERO", (2,): "FULL", (1, 2): "ZERO"}, True, "INVALID"),
            ({(1,): "ZERO", (2,): "ZERO", (1, 2): "FULL"}, True, "INVALID"),
            ({(1,): "ZERO", (2,): "ZERO", (1, 2): "FULL"}, False, "PERFECT"),
            ({(1,): "ZERO", (2,): "FULL", (1, 2): "FULL"}, True, "PERFECT"),
        ],
    )
    def test_verdict_rules(self, classes, pure, kind):
        results = [
            qs.tl.SubsetResult(players, 0.0, 0.0, label, label == "FULL", label == "ZERO")
            for players, label in classes.items()
        ]
        verdict = _verdict(results, (1, 2), pure, degenerate=False)
        assert verdict.kind == kind
        if kind == "INVALID":
            assert verdict.diagnostics

    def test_progressbar(self, vandermonde_scheme):
        report = qs.tl.subset_report(vandermonde_scheme, show_progressbar=True)
        assert len(report.results) == 7

    def test_players_without_rows(self):
        msp = _rowless_msp()
        report = qs.tl.subset_report(_build_scheme("rowless"))
        assert report.players == (1, 2)
        assert [r.players for r in report.results] == [(1,), (2,), (1, 2)]
        idle = report.result_for([2])
        assert (idle.entropy_bits, idle.mutual_info_bits, idle.classification) == (0.0, 0.0, "ZERO")
        assert report.result_for([1]).classification == "FULL"
        assert report.verdict.kind == "PERFECT"
        assert report.verdict.structure == qs.tl.msp_structure(msp)
        assert qs.tl.verify_against(report, qs.tl.msp_structure(msp)).passed


class TestVerifyAgainst:
    def test_threshold_passes(self, five_qubit_report):
        result = qs.tl.verify_against(five_qubit_report, qs.tl.threshold_structure(3, 5))
        assert result.passed
        assert result.witness is None

    def test_wrong_threshold_fails(self, five_qubit_report):
        result = qs.tl.verify_against(five_qubit_report, qs.tl.threshold_structure(2, 5))
        assert not result.passed
        assert result.witness.players == (1, 2)
        assert result.expected == "FULL"
        assert result.message == "{1, 2}: ZERO I=0.0 (expected FULL)"

    def test_teleport_fails_threshold(self, teleported):
        result = qs.tl.verify_against(qs.tl.subset_report(teleported), qs.tl.threshold_structure(3, 3))
        assert not result.passed
        assert result.witness.describe() == "{1}: PARTIAL I=1.0"
        assert result.expected == "ZERO"

    def test_player_count_mismatch(self, five_qubit_report):
        with pytest.raises(ValueError):
            qs.tl.verify_against(five_qubit_report, qs.tl.threshold_structure(2, 3))

    def test_relabels_remaining_players(self, five_qubit_scheme):
        report = qs.tl.subset_report(qs.tl.discard_share(five_qubit_scheme, "share_1"))
        assert report.players == (2, 3, 4, 5)
        assert qs.tl.verify_against(report, qs.tl.threshold_structure(3, 4)).passed


class TestErasure:
    def test_matches_zero_information(self, five_qubit_scheme, five_qubit_report):
        for result in five_qubit_report.results:
            labels = five_qubit_scheme.shares_of(result.players)
            assert qs.tl.erasure_correctable(five_qubit_scheme.state, labels) == result.is_zero

    def test_empty_erasure(self, five_qubit_scheme):
        assert qs.tl.erasure_correctable(five_qubit_scheme.state, [])

    def test_rejects_reference(self, five_qubit_scheme):
        with pytest.raises(ValueError):
            qs.tl.erasure_correctable(five_qubit_scheme.state, ["R", "share_1"])

    @mark.parametrize(
        "name",
        ["five_qubit", "skewed_stabilizer", "repetition", "vandermonde", "weighted", "rowless", "ghz", "teleport"],
    )
    def test_correctable_exactly_when_information_vanishes(self, name):
        scheme = _build_scheme(name)
        bridge = qs.tl.Verifier().erasure_bridge(scheme)
        assert len(bridge) == 2 ** len(scheme.players) - 1
        assert bridge["passed"].all()

    @mark.parametrize("name", ["five_qubit", "vandermonde", "weighted", "rowless"])
    def test_discarded_schemes(self, name):
        scheme = _build_scheme(name)
        mixed = qs.tl.discard_share(scheme, scheme.share_labels[-1])
        assert qs.tl.Verifier().erasure_bridge(mixed)["passed"].all()


class TestDuality:
    @mark.parametrize("fixture_name", ["five_qubit_scheme", "vandermonde_scheme"])
    def test_schemes(self, request, fixture_name):
        result = qs.tl.check_pure_duality(request.getfixturevalue(fixture_name))
        assert result.passed
        n = len(request.getfixturevalue(fixture_name).players)
        assert len(result.table) == 2 ** (n - 1) - 1
        assert (result.table["A"].map(lambda a: 1 in a)).all()

    def test_teleported(self, teleported):
        assert qs.tl.check_pure_duality(teleported).passed

    @mark.parametrize(
        "name", ["five_qubit", "skewed_stabilizer", "repetition", "vandermonde", "weighted", "ghz", "teleport"]
    )
    def test_identity_holds_tightly(self, name):
        assert qs.tl.Verifier(tol=1e-8).check_duality(_build_scheme(name)).passed

    @mark.slow
    @mark.parametrize("n", [6, 7, 8])
    def test_large_ghz_schemes(self, n):
        scheme = qs.tl.encode_ghz_direct(n, qs.tl.SecretSpec(2, [0.3, 0.7]))
        result = qs.tl.check_pure_duality(scheme)
        assert result.passed
        assert len(result.table) == 2 ** (n - 1) - 1

    def test_random_tripartite_states(self, rng):
        layout = qs.tl.SystemLayout.from_pairs([("R", 2), ("share_1", 2), ("share_2", 3)])
        for _ in range(100):
            assert qs.tl.check_pure_duality(qs.tl.random_state(layout, rng)).passed

    def test_players_without_rows(self):
        result = qs.tl.check_pure_duality(_build_scheme("rowless"))
        assert result.passed
        assert len(result.table) == 1
        assert result.table.iloc[0]["I_B"] == 0.0

    def test_rejects_mixed_scheme(self, five_qubit_scheme):
        with pytest.raises(ValueError):
            qs.tl.check_pure_duality(qs.tl.discard_share(five_qubit_scheme, "share_5"))


class TestAudits:
    def test_stabilizer_uniform(self, five_qubit_scheme):
        result = qs.tl.audit_stabilizer_entropies(five_qubit_scheme)
        assert result.passed
        assert result.failures.empty
        entropies = result.table[result.table["quantity"] == "entropy"]
        assert len(entropies) == 31
        assert len(result.table[result.table["quantity"] == "spectrum"]) == 10

    def test_stabilizer_skewed_secret(self, five_qubit_code):
        scheme = qs.tl.encode_stabilizer_qts(five_qubit_code, qs.tl.SecretSpec(2, [0.25, 0.75]))
        assert qs.tl.audit_stabilizer_entropies(scheme).passed

    def test_stabilizer_audit_needs_stabilizer_scheme(self, vandermonde_scheme):
        with pytest.raises(ValueError):
            qs.tl.audit_stabilizer_entropies(vandermonde_scheme)

    def test_msp_vandermonde(self, vandermonde_scheme):
        result = qs.tl.audit_msp_entropies(vandermonde_scheme)
        assert result.passed
        row = result.table[result.table["A"].map(lambda a: a == (1, 2))].iloc[0]
        assert (row["l"], row["m"], row["offset"]) == (2, 1, 1)
        assert row["S_A"] == pytest.approx(2 * np.log2(5), abs=1e-6)
        assert row["S_B"] == pytest.approx(np.log2(5), abs=1e-6)

    def test_msp_weighted(self, rng):
        msp = qs.dt.weighted_threshold_msp()
        scheme = qs.tl.encode_msp(msp, qs.tl.SecretSpec.random(2, rng))
        result = qs.tl.audit_msp_entropies(scheme, msp)
        assert result.passed
        assert len(result.table) == 8

    def test_msp_audit_needs_msp_scheme(self, five_qubit_scheme):
        with pytest.raises(ValueError):
            qs.tl.audit_msp_entropies(five_qubit_scheme)

    def test_msp_players_without_rows(self):
        result = qs.tl.audit_msp_entropies(_build_scheme("rowless"))
        assert result.passed
        assert list(result.table["A"]) == [(1,), (1, 2)]

    @mark.parametrize("name,passes", [("five_qubit", True), ("repetition", False)])
    def test_audit_agrees_with_threshold_classification(self, name, passes):
        scheme = _build_scheme(name)
        n = scheme.params["n"]
        matches = qs.tl.verify_against(qs.tl.subset_report(scheme), qs.tl.threshold_structure((n + 1) // 2, n))
        assert qs.tl.audit_stabilizer_entropies(scheme).passed is passes
        assert matches.passed is passes


class TestVerifier:
    def test_holds_configuration(self, monkeypatch):
        monkeypatch.setenv("QSS_TOL", "1e-8")
        assert qs.tl.Verifier().tol.eps == 1e-8
        assert qs.tl.Verifier(1e-5).tol.eps == 1e-5
        verifier = qs.tl.Verifier(qs.tl.Tolerance(1e-7), show_progressbar=True)
        assert verifier.tol.eps == 1e-7
        assert verifier.show_progressbar

    def test_rejects_invalid_tolerance(self):
        with pytest.raises(ValueError):
            qs.tl.Verifier(0.5)

    def test_call_matches_subset_report(self, vandermonde_scheme):
        report = qs.tl.Verifier(1e-8)(vandermonde_scheme)
        assert report.tolerance.eps == 1e-8
        assert report.to_dict()["subsets"] == qs.tl.subset_report(vandermonde_scheme).to_dict()["subsets"]

    def test_compare(self, five_qubit_scheme):
        verifier = qs.tl.Verifier()
        report = verifier(five_qubit_scheme)
        assert verifier.compare(report, qs.tl.threshold_structure(3, 5)).passed
        assert not verifier.compare(report, qs.tl.threshold_structure(2, 5)).passed

    def test_erasure_bridge_columns(self, five_qubit_scheme):
        bridge = qs.tl.Verifier(show_progressbar=True).erasure_bridge(five_qubit_scheme)
        assert list(bridge.columns) == ["players", "is_zero", "correctable", "passed"]
        assert bridge["correctable"].sum() == 15

    @mark.parametrize("fixture_name,rows", [("five_qubit_scheme", 41), ("vandermonde_scheme", 4)])
    def test_audit_dispatches_on_kind(self, request, fixture_name, rows):
        result = qs.tl.Verifier().audit(request.getfixturevalue(fixture_name))
        assert result.passed
        assert len(result.table) == rows

    def test_audit_rejects_ghz_schemes(self, teleported):
        with pytest.raises(ValueError, match="No entropy audit"):
            qs.tl.Verifier().audit(teleported)

    def test_check_duality(self, teleported):
        assert qs.tl.Verifier().check_duality(teleported).passed
