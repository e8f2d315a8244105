import math

import numpy as np
import pytest

from skelgest.evaluation import (
    CHI2_CRITICAL_05,
    BinaryCounts,
    ConfusionMatrix,
    binary_reduce,
    class_metrics,
    confusion,
    evaluate,
    friedman,
    friedman_table,
    macro_average,
    rank_algorithms,
)

# score grid ordering four algorithms into the reference rank pattern
FOUR_ALGO_SCORES = [
    [0.9, 0.9, 0.9],
    [0.5, 0.5, 0.5],
    [0.7, 0.7, 0.6],
    [0.6, 0.6, 0.7],
]
FOUR_ALGO_RANKS = [[1, 1, 1], [4, 4, 4], [2, 2, 3], [3, 3, 2]]


def random_confusion(rng, k=4, high=20):
    return ConfusionMatrix(
        [f"c{i}" for i in range(k)], rng.integers(0, high, size=(k, k))
    )


class TestConfusion:
    def test_perfect_predictions_are_diagonal(self):
        y = ["a", "b", "c", "a", "b", "c"]
        cm = confusion(y, y)
        assert np.array_equal(cm.counts, 2 * np.eye(3, dtype=int))

    def test_everything_predicted_as_one_class(self):
        cm = confusion(["a", "b", "c"], ["a", "a", "a"])
        assert cm.counts[:, 0].tolist() == [1, 1, 1]
        assert cm.counts[:, 1:].sum() == 0

    def test_random_case_against_pairwise_tally(self):
        rng = np.random.default_rng(80)
        labels = [f"k{i}" for i in range(5)]
        y_true = [labels[i] for i in rng.integers(0, 5, size=200)]
        y_pred = [labels[i] for i in rng.integers(0, 5, size=200)]
        cm = confusion(y_true, y_pred, labels)
        for i, ti in enumerate(labels):
            for j, pj in enumerate(labels):
                want = sum(1 for t, p in zip(y_true, y_pred) if t == ti and p == pj)
                assert cm.counts[i, j] == want

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            confusion(["a"], ["a", "b"])

    def test_unknown_label(self):
        with pytest.raises(ValueError):
            confusion(["a"], ["z"], labels=["a", "b"])

    def test_row_sums_are_class_support(self):
        y_true = ["a"] * 7 + ["b"] * 3
        y_pred = ["a", "b"] * 5
        cm = confusion(y_true, y_pred)
        assert cm.counts.sum() == 10
        assert cm.counts[0].sum() == 7 and cm.counts[1].sum() == 3


class TestBinaryReduce:
    def test_two_class_direct_read(self):
        cm = ConfusionMatrix(["x", "y"], [[5, 1], [2, 4]])
        b = binary_reduce(cm, "x")
        assert (b.tp, b.fn, b.fp, b.tn) == (5, 1, 2, 4)

    def test_diagonal_matrix_has_no_errors(self):
        cm = ConfusionMatrix(["a", "b", "c"], np.diag([3, 4, 5]))
        for lab in cm.labels:
            b = binary_reduce(cm, lab)
            assert b.fp == 0 and b.fn == 0

    def test_counts_sum_to_total_on_random_matrices(self):
        rng = np.random.default_rng(81)
        for _ in range(100):
            cm = random_confusion(rng)
            for lab in cm.labels:
                assert binary_reduce(cm, lab).total == cm.total


class TestClassMetrics:
    def test_worked_example(self):
        m = class_metrics(BinaryCounts(tp=5, fn=1, fp=2, tn=4))
        assert m.precision == pytest.approx(5 / 7, abs=1e-9)
        assert m.recall == pytest.approx(5 / 6, abs=1e-9)
        assert m.accuracy == pytest.approx(0.75, abs=1e-9)
        assert m.error_rate == pytest.approx(0.25, abs=1e-9)
        assert m.f1 == pytest.approx(10 / 13, abs=1e-9)
        assert m.specificity == pytest.approx(2 / 3, abs=1e-9)
        assert m.npv == pytest.approx(4 / 5, abs=1e-9)
        assert not m.degenerate

    def test_all_true_positives(self):
        m = class_metrics(BinaryCounts(tp=9, fn=0, fp=0, tn=0))
        assert (m.precision, m.recall, m.accuracy, m.f1) == (1.0, 1.0, 1.0, 1.0)
        assert m.error_rate == 0.0

    def test_zero_over_zero_convention(self):
        m = class_metrics(BinaryCounts(tp=0, fn=0, fp=0, tn=5))
        assert m.precision == 0.0 and m.recall == 0.0 and m.f1 == 0.0
        assert m.degenerate

    def test_empty_counts_rejected(self):
        with pytest.raises(ValueError):
            class_metrics(BinaryCounts(0, 0, 0, 0))

    def test_accuracy_plus_error_is_exactly_one(self):
        rng = np.random.default_rng(82)
        for _ in range(100):
            cm = random_confusion(rng)
            if cm.total == 0:
                continue
            for lab in cm.labels:
                m = class_metrics(binary_reduce(cm, lab))
                assert m.accuracy + m.error_rate == 1.0

    def test_alias_names_are_the_same_values(self):
        m = class_metrics(BinaryCounts(3, 2, 1, 4))
        assert m.ppv is m.precision
        assert m.sensitivity is m.recall

    def test_f1_equals_precision_when_balanced(self):
        m = class_metrics(BinaryCounts(tp=6, fn=2, fp=2, tn=5))
        assert m.precision == m.recall
        assert abs(m.f1 - m.precision) < 1e-12


class TestMacro:
    def test_unweighted_mean(self):
        cm = ConfusionMatrix(["a", "b"], [[5, 1], [2, 4]])
        per = [class_metrics(binary_reduce(cm, lab)) for lab in cm.labels]
        macro = macro_average(per)
        assert macro.accuracy == pytest.approx((per[0].accuracy + per[1].accuracy) / 2)

    def test_report_round_trip(self):
        y_true = ["a", "a", "b", "b", "c", "c"]
        y_pred = ["a", "b", "b", "b", "c", "a"]
        report = evaluate(y_true, y_pred)
        assert set(report.per_class) == {"a", "b", "c"}
        csv = report.to_csv().splitlines()
        assert csv[0] == "class,precision,recall,specificity,npv,accuracy,error_rate,f1"
        assert len(csv) == 5
        assert report.summary() == evaluate(y_true, y_pred).summary()


class TestRanking:
    def test_reference_rank_pattern(self):
        ranks = rank_algorithms(FOUR_ALGO_SCORES)
        assert ranks.tolist() == FOUR_ALGO_RANKS

    def test_ties_share_average_rank(self):
        ranks = rank_algorithms([[0.8], [0.8]])
        assert ranks.tolist() == [[1.5], [1.5]]

    def test_single_dataset_strict_order_is_permutation(self):
        ranks = rank_algorithms([[0.1], [0.9], [0.5]])
        assert sorted(ranks[:, 0].tolist()) == [1.0, 2.0, 3.0]
        assert ranks[1, 0] == 1.0

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            rank_algorithms([[1.0]])


class TestFriedman:
    def test_reference_statistic(self):
        result = friedman(np.array(FOUR_ALGO_RANKS, dtype=float))
        assert result.chi_squared == pytest.approx(8.2000, abs=1e-3)
        assert result.critical_value == 7.815
        assert result.reject_null
        np.testing.assert_allclose(result.avg_ranks, [1.0, 4.0, 7 / 3, 8 / 3])

    def test_equal_ranks_give_zero(self):
        ranks = np.tile([[2.5]], (4, 3))
        result = friedman(ranks)
        assert result.chi_squared == pytest.approx(0.0, abs=1e-12)
        assert not result.reject_null

    def test_formula_reevaluation_on_random_matrices(self):
        rng = np.random.default_rng(83)
        for _ in range(50):
            c = int(rng.integers(2, 8))
            d = int(rng.integers(1, 6))
            ranks = rank_algorithms(rng.normal(size=(c, d)))
            result = friedman(ranks)
            # direct transcription of the statistic with plain python
            avg = [sum(ranks[i]) / d for i in range(c)]
            want = (12 * d) / (c * (c + 1)) * (
                math.fsum(r * r for r in avg) - c * (c + 1) ** 2 / 4
            )
            assert abs(result.chi_squared - want) < 1e-9

    def test_invariant_under_algorithm_relabeling(self):
        rng = np.random.default_rng(84)
        ranks = rank_algorithms(rng.normal(size=(5, 4)))
        base = friedman(ranks).chi_squared
        perm = rng.permutation(5)
        assert friedman(ranks[perm]).chi_squared == pytest.approx(base, abs=1e-12)

    def test_zero_iff_all_average_ranks_equal(self):
        ranks = np.array([[1.0, 2.0], [2.0, 1.0]])  # averages equal
        assert friedman(ranks).chi_squared == pytest.approx(0.0, abs=1e-12)

    def test_critical_table(self):
        assert CHI2_CRITICAL_05[1] == 3.841
        assert CHI2_CRITICAL_05[3] == 7.815
        assert len(CHI2_CRITICAL_05) == 10

    def test_table_rendering(self):
        ranks = np.array(FOUR_ALGO_RANKS, dtype=float)
        text = friedman_table(friedman(ranks), ranks, ["SVM", "kNN", "EDT", "LMA-NN"])
        assert "8.2000" in text
        assert "reject" in text and "fail to reject" not in text
