import math
import random
import warnings

import numpy as np
import pytest
from mpmath import mp, mpf

from stoprake.corpus import Corpus, Document
from stoprake.termstats import (
    R_MAX,
    FitBoundaryWarning,
    FitError,
    OccurrenceModel,
    TermStats,
    TermStatsTable,
    compute_term_stats,
    expected_df,
    expected_df_array,
    fit_negbin,
    fit_negbin_r,
    golden_section,
    model_curve,
    randomness_ratio,
)

from synthetic import negbin_corpus, poisson_table


def mp_poisson(N, cf):
    with mp.workdps(50):
        return N * (1 - mp.exp(-mpf(cf) / N))


def mp_negbin(N, r, cf):
    with mp.workdps(50):
        r = mpf(r)
        return N * (1 - mp.power(1 + mpf(cf) / (N * r), -r))


class TestComputeTermStats:
    def test_direct_count(self):
        c = Corpus([Document("doc1", "a b a"), Document("doc2", "a c")])
        t = compute_term_stats(c)
        assert t.N == 2
        assert {e.word: (e.cf, e.df) for e in t} == {"a": (3, 2), "b": (1, 1), "c": (1, 1)}

    def test_single_empty_document(self):
        t = compute_term_stats(Corpus([Document("x", "")]))
        assert len(t) == 0 and t.N == 1

    def test_case_folded(self):
        t = compute_term_stats(Corpus.from_texts(["Izba izba IZBA", "izbą"]))
        assert (t["izba"].cf, t["izba"].df) == (3, 1)
        assert "izbą" in t

    def test_permutation_invariant(self):
        texts = [f"w{i % 7} x y{i % 3} z" * (i % 4 + 1) for i in range(40)]
        docs = [Document(f"d{i:02d}", t) for i, t in enumerate(texts)]
        shuffled = docs[:]
        random.Random(3).shuffle(shuffled)
        a = compute_term_stats(Corpus(docs))
        b = compute_term_stats(Corpus(shuffled))
        assert a.entries == b.entries

    def test_parallel_matches_serial(self):
        c = Corpus.from_texts([f"alfa beta{i % 5} gamma{i % 11}. delta" for i in range(60)])
        assert compute_term_stats(c, workers=3).entries == compute_term_stats(c).entries

    def test_totals(self):
        c = Corpus.from_texts(["a b, c. d", "a a a", "", "e"])
        t = compute_term_stats(c)
        assert t.total_tokens == 8
        t.validate()

    def test_from_counts_validates(self):
        with pytest.raises(ValueError):
            TermStatsTable.from_counts({"a": (2, 3)}, 10)
        with pytest.raises(ValueError):
            TermStatsTable.from_counts({"a": (20, 12)}, 10)


class TestOccurrenceModel:
    def test_negbin_requires_positive_r(self):
        for bad in (None, 0.0, -1.0, float("inf"), float("nan")):
            with pytest.raises(ValueError):
                OccurrenceModel("negbin", 10, bad)

    def test_poisson_rejects_r(self):
        with pytest.raises(ValueError):
            OccurrenceModel("poisson", 10, 1.0)

    def test_n_positive(self):
        with pytest.raises(ValueError):
            OccurrenceModel.poisson(0)


class TestExpectedDf:
    @pytest.mark.parametrize(
        "model", [OccurrenceModel.poisson(50), OccurrenceModel.negbin(50, 0.42), OccurrenceModel.negbin(1, 3.0)]
    )
    def test_zero(self, model):
        assert expected_df(model, 0) == 0

    def test_poisson_value(self):
        # 11000 * (1 - e^-1), mpmath at 40 digits: 6953.326147114134...
        got = expected_df(OccurrenceModel.poisson(11000), 11000)
        assert got == pytest.approx(6953.326147114134, rel=1e-14)

    def test_negbin_value(self):
        # 11000 * (1 - (1 + 1/0.42)^-0.42), mpmath: 4405.281190853030...
        got = expected_df(OccurrenceModel.negbin(11000, 0.42), 11000)
        assert got == pytest.approx(4405.28119085303, rel=1e-14)

    @pytest.mark.parametrize("N", [1, 100, 11000])
    @pytest.mark.parametrize("r", [0.001, 0.42, 1.0, 10.0, 1e4])
    def test_against_mpmath(self, N, r):
        for cf in np.logspace(-3, 6, 37):
            nb = expected_df(OccurrenceModel.negbin(N, r), cf)
            assert nb == pytest.approx(float(mp_negbin(N, r, cf)), rel=1e-12)
        for cf in np.logspace(-3, 6, 37):
            po = expected_df(OccurrenceModel.poisson(N), cf)
            assert po == pytest.approx(float(mp_poisson(N, cf)), rel=1e-12)

    def test_negative_cf(self):
        with pytest.raises(ValueError):
            expected_df(OccurrenceModel.poisson(10), -1)
        with pytest.raises(ValueError):
            expected_df_array(OccurrenceModel.poisson(10), [1.0, -0.5])

    def test_array_matches_scalar(self):
        cf = np.logspace(0, 5, 50)
        for m in (OccurrenceModel.poisson(300), OccurrenceModel.negbin(300, 0.7)):
            np.testing.assert_allclose(expected_df_array(m, cf), [expected_df(m, x) for x in cf], rtol=1e-15)

    def test_poisson_limit(self):
        N = 11000
        for cf in (1, N, 10 * N):
            nb = expected_df(OccurrenceModel.negbin(N, 1e6), cf)
            po = expected_df(OccurrenceModel.poisson(N), cf)
            assert abs(nb - po) / po < 1e-4

    def test_negbin_below_poisson(self):
        # extra variance -> more zero-count documents -> fewer documents hit
        for cf in (1, 10, 1000):
            assert expected_df(OccurrenceModel.negbin(100, 0.5), cf) < expected_df(OccurrenceModel.poisson(100), cf)


class TestRandomnessRatio:
    def test_on_curve(self):
        m = OccurrenceModel.negbin(1000, 0.42)
        df = expected_df(m, 500)
        # an exact on-curve df need not be an integer; the ratio is still defined
        assert randomness_ratio(TermStats("x", 500, df), m) == pytest.approx(1.0)

    def test_value(self):
        # (100 * (1 - e^-1)) / 80, mpmath: 0.790150698535697...
        r = randomness_ratio(TermStats("x", 100, 80), OccurrenceModel.poisson(100))
        assert r == pytest.approx(0.790150698535697, rel=1e-14)

    def test_clustered_word_above_threshold(self):
        # 400 occurrences packed into 20 of 1000 documents
        m = OccurrenceModel.negbin(1000, 0.42)
        assert randomness_ratio(TermStats("x", 400, 20), m) > 1.6

    def test_zero_df(self):
        with pytest.raises(ValueError):
            randomness_ratio(TermStats("x", 3, 0), OccurrenceModel.poisson(10))


class TestGoldenSection:
    def test_quadratic(self):
        x, fx = golden_section(lambda x: (x - 1.234) ** 2, -10, 10, 1e-9)
        assert x == pytest.approx(1.234, abs=1e-8)
        assert fx == pytest.approx(0, abs=1e-15)

    def test_brute_force_agreement(self):
        f = lambda x: math.cosh(x - 0.3) + 0.1 * x
        grid = np.linspace(-3, 3, 600001)
        best = grid[np.argmin([f(g) for g in grid])]
        x, _ = golden_section(f, -3, 3, 1e-10)
        assert x == pytest.approx(best, abs=2e-5)


class TestFit:
    def test_recovers_planted_r(self):
        t = compute_term_stats(negbin_corpus(seed=11, n_docs=1000, n_words=300))
        fit = fit_negbin(t)
        assert 0.32 <= fit.model.r <= 0.52
        assert not fit.at_bound
        assert fit.n_words == len(t)

    def test_poisson_data_hits_upper_bound(self):
        t = poisson_table(100000, np.logspace(1, 6, 60))
        fit = fit_negbin(t)
        assert fit.at_bound
        assert fit.model.r == R_MAX
        with pytest.warns(FitBoundaryWarning):
            fit_negbin_r(t)

    def test_objective_brute_force(self):
        t = compute_term_stats(negbin_corpus(seed=5, n_docs=400, n_words=150))
        fit = fit_negbin(t)
        cf, df = t.arrays()

        def obj(r):
            m = OccurrenceModel.negbin(t.N, r)
            return sum((math.log(expected_df(m, c)) - math.log(d)) ** 2 for c, d in zip(cf, df))

        grid = np.exp(np.linspace(math.log(1e-3), math.log(1e3), 4001))
        best = grid[int(np.argmin([obj(r) for r in grid]))]
        assert fit.model.r == pytest.approx(best, rel=5e-3)
        assert fit.objective <= obj(best) + 1e-12

    def test_single_word(self):
        t = TermStatsTable.from_counts({"a": (5, 3)}, 10)
        fit = fit_negbin(t)
        assert 1e-3 <= fit.model.r <= 1e3

    def test_single_word_unreachable(self):
        # cf == df is above every model curve: boundary, not a crash
        t = TermStatsTable.from_counts({"a": (1, 1)}, 10)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", FitBoundaryWarning)
            m = fit_negbin_r(t)
        assert m.r == R_MAX

    def test_empty(self):
        with pytest.raises(FitError):
            fit_negbin(TermStatsTable({}, 5))

    def test_deterministic(self):
        t = compute_term_stats(negbin_corpus(seed=2, n_docs=300, n_words=100))
        assert fit_negbin(t).model.r == fit_negbin(t).model.r


class TestModelCurve:
    def test_shape(self):
        cf, (po, nb) = model_curve([OccurrenceModel.poisson(100), OccurrenceModel.negbin(100, 0.42)], 5000)
        assert len(cf) == 200
        assert cf[0] == pytest.approx(1.0) and cf[-1] == pytest.approx(5000.0)
        ratios = cf[1:] / cf[:-1]
        np.testing.assert_allclose(ratios, ratios[0])
        # Poisson saturates to exactly N in float64 long before cf = 50 N
        assert np.all(np.diff(po) >= 0) and np.all(np.diff(nb) > 0)

    def test_degenerate_max(self):
        cf, _ = model_curve([OccurrenceModel.poisson(3)], 1)
        np.testing.assert_allclose(cf, 1.0)
