import math

import numpy as np
import pytest

import ucbde


def test_sobol_first_dimension():
    pts = ucbde.sobol_points(1, 4, skip=0)
    assert [p[0] for p in pts] == [0.0, 0.5, 0.75, 0.25]


def test_gp_interpolates():
    obs = ucbde.ObservationSet(1)
    for x in (0.1, 0.4, 0.9):
        obs.add(np.array([x]), math.sin(5 * x))
    model = ucbde.GpModel.fit(obs)
    mean, var = model.posterior(np.array([0.4]))
    assert mean == pytest.approx(obs.std_outputs[1], abs=1e-2)
    assert 0.0 < var < 1e-2
    assert len(model) == 3


def test_pool_and_de():
    pool = ucbde.CandidatePool([np.array([0.1]), np.array([0.5]), np.array([0.9])])
    pool.update([np.array([0.0]), np.array([1.0])])
    assert pool.min_sq_dist(1) == pytest.approx(0.25)
    batch = ucbde.fill_batch_de(ucbde.CandidatePool.sobol(2, 64), np.array([0.5, 0.5]), 4)
    assert len(batch["points"]) == 4
    assert batch["roles"][0] == "ucb"


def test_benchmarks():
    branin = ucbde.make_benchmark("branin")
    assert branin(np.array([math.pi, 2.275])) == pytest.approx(-0.397887, abs=1e-5)
    assert "hartmann6" in ucbde.benchmark_names()
    with pytest.raises(ucbde.UcbdeError):
        ucbde.make_benchmark("nope")


def test_propose_batch_counts():
    obs = ucbde.ObservationSet(2)
    rng = np.random.default_rng(0)
    for x in rng.random((8, 2)):
        obs.add(x, float(np.sin(3 * x).sum()))
    model = ucbde.GpModel.fit(obs)
    p = ucbde.propose_batch("bucb", model, obs, 3, seed=2)
    assert p["inner_optimizer_calls"] == 3
    pool = ucbde.CandidatePool.sobol(2, 100)
    p = ucbde.propose_batch("ucb-de", model, obs, 3, seed=2, pool=pool)
    assert p["inner_optimizer_calls"] == 1
    assert set(ucbde.policy_names()) >= {"random", "ucb-rand", "bucb", "cl", "ucb-de"}


def test_run_experiment_deterministic():
    settings = {"function": "branin", "T": 2, "B": 2, "n_init": 3, "repeats": 1, "seed": 4}
    a = ucbde.run_experiment(settings)
    b = ucbde.run_experiment(settings)
    assert len(a["rows"]) == 3
    assert [r["best_observed_value"] for r in a["rows"]] == [r["best_observed_value"] for r in b["rows"]]
    assert a["summary"]["completed_repeats"] == 1
    csv = ucbde.runs_to_csv(settings)
    assert csv.splitlines()[0].startswith("repeat_id,t,cumulative_evals")
