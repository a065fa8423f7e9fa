"""Experiment harness: seed derivation, config validation, sweeps, output."""

import dataclasses
import io
import json
import statistics

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circlematch.harness import (
    CSV_FIELDS,
    ExperimentConfig,
    ExperimentResult,
    derive_seed,
    fig1_config,
    fig2_config,
    fig36_config,
    results_to_csv,
    results_to_json,
    run_cell,
    run_cell_full,
    summarize,
    sweep,
    table2_config,
)
from circlematch.market import is_stable


# ---------------------------------------------------------------- seed paths

def test_derive_seed_frozen_values():
    assert derive_seed(0, "market") == 3277477078762024996
    assert derive_seed(0, "graph:ncn") == 9360982360406156925
    assert derive_seed(1, "market") == 8406375969572046061
    assert derive_seed(42, "graph:ba") == 255471660425262569


@given(st.integers(0, 2**62), st.text(max_size=20))
def test_derive_seed_is_deterministic_and_bounded(master, label):
    a = derive_seed(master, label)
    assert a == derive_seed(master, label)
    assert 0 <= a < 2**64


def test_derive_seed_separates_labels_and_masters():
    assert derive_seed(0, "market") != derive_seed(0, "graph:ncn")
    assert derive_seed(0, "market") != derive_seed(1, "market")


# -------------------------------------------------------------------- config

def test_config_normalizes_sequences():
    cfg = ExperimentConfig(models=["ncn"], n_values=[20], k_values=[2], seeds=[1, 2])
    assert cfg.models == ("ncn",)
    assert cfg.seeds == (1, 2)


@pytest.mark.parametrize("kwargs", [
    dict(models=("grid",), n_values=(20,), k_values=(2,), seeds=(0,)),
    dict(models=("ncn",), n_values=(21,), k_values=(2,), seeds=(0,)),
    dict(models=("ncn",), n_values=(2,), k_values=(2,), seeds=(0,)),
    dict(models=("ncn",), n_values=(20,), k_values=(3,), seeds=(0,)),
    dict(models=("ncn",), n_values=(20,), k_values=(20,), seeds=(0,)),
    dict(models=("ncn",), n_values=(20,), k_values=(2,), seeds=()),
    dict(models=("ncn",), n_values=(20,), k_values=(2,), seeds=(0,), dep=0),
    dict(models=("ncn",), n_values=(20,), k_values=(2,), seeds=(0,), p_rewire=1.5),
])
def test_config_rejects_bad_parameters(kwargs):
    with pytest.raises(ValueError):
        ExperimentConfig(**kwargs)


def test_replicated_builds_consecutive_seeds():
    cfg = ExperimentConfig.replicated(("er",), (20,), (2,), 100, 5)
    assert cfg.seeds == (100, 101, 102, 103, 104)


def test_presets_cover_their_grids():
    t2 = table2_config(replications=3)
    assert t2.models == ("ncn", "er", "ws", "ba")
    assert t2.n_values == (20, 40, 60, 80, 100)
    assert t2.k_values == (2,)
    assert len(t2.seeds) == 3
    assert fig1_config(replications=3) == t2
    assert fig2_config().n_values == (60,)
    assert fig2_config().k_values == (2, 4, 8, 16)
    assert fig36_config().n_values == (100,)
    assert fig36_config().k_values == (2, 4, 6, 8, 10, 12)


# --------------------------------------------------------------------- cells

def test_run_cell_is_deterministic_up_to_runtime():
    a = run_cell("ba", 20, 2, seed=9)
    b = run_cell("ba", 20, 2, seed=9)
    strip = lambda r: dataclasses.replace(r, runtime_ms=0.0)
    assert strip(a) == strip(b)
    assert a.model == "ba" and a.n == 20 and a.k == 2
    assert 0 <= a.matched_pairs <= 10
    assert 0.0 <= a.connectivity <= 1.0


def test_run_cell_market_does_not_depend_on_model():
    runs = {model: run_cell_full(model, 16, 2, seed=4) for model in ("ncn", "ba")}
    assert runs["ncn"].market == runs["ba"].market
    assert runs["ncn"].graph.edges != runs["ba"].graph.edges


def test_run_cell_full_is_internally_consistent():
    run = run_cell_full("ws", 20, 4, seed=2)
    assert is_stable(run.market, run.circle, run.matching)
    assert run.result.matched_pairs == len(run.matching.pairs)
    assert run.result.apl is not None


def test_sweep_covers_the_cross_product_in_order():
    cfg = ExperimentConfig(models=("ncn", "er"), n_values=(8, 12),
                           k_values=(2,), seeds=(0, 1, 2))
    rows = sweep(cfg)
    assert len(rows) == 2 * 2 * 1 * 3
    assert [r.model for r in rows[:6]] == ["ncn"] * 6
    assert [r.seed for r in rows[:3]] == [0, 1, 2]
    assert [r.n for r in rows[:6]] == [8, 8, 8, 12, 12, 12]


# ------------------------------------------------------------------ summaries

def test_summarize_means_and_spread():
    cfg = ExperimentConfig(models=("er",), n_values=(12,), k_values=(2,),
                           seeds=tuple(range(6)))
    rows = sweep(cfg)
    summary = summarize(rows, ["model", "n"])
    assert len(summary) == 1
    entry = summary[0]
    assert entry["model"] == "er" and entry["n"] == 12
    assert entry["count"] == 6
    expected = statistics.fmean(r.average_utility for r in rows)
    assert entry["mean_average_utility"] == pytest.approx(expected)
    assert entry["std_average_utility"] >= 0.0


def test_summarize_single_row_has_zero_spread():
    rows = [run_cell("ncn", 10, 2, seed=0)]
    entry = summarize(rows, ["model"])[0]
    assert entry["std_average_utility"] == 0.0
    assert entry["count"] == 1


def test_summarize_drops_undefined_path_lengths():
    base = run_cell("ncn", 10, 2, seed=0)
    broken = dataclasses.replace(base, apl=None)
    entry = summarize([base, broken], ["model"])[0]
    assert entry["mean_apl"] == pytest.approx(base.apl)
    only_broken = summarize([broken], ["model"])[0]
    assert only_broken["mean_apl"] is None
    assert only_broken["std_apl"] is None


def test_summarize_validates_inputs():
    with pytest.raises(ValueError):
        summarize([], ["model"])
    with pytest.raises(ValueError):
        summarize([run_cell("ncn", 10, 2)], ["average_utility"])


# -------------------------------------------------------------------- output

def _tiny_results():
    return [
        ExperimentResult(model="ncn", n=10, k=2, dep=3, p_rewire=0.1, seed=0,
                         average_utility=5.5, apl=2.5, connectivity=0.9,
                         matched_pairs=4, runtime_ms=1.25),
        ExperimentResult(model="er", n=10, k=2, dep=3, p_rewire=0.1, seed=1,
                         average_utility=4.0, apl=None, connectivity=0.0,
                         matched_pairs=0, runtime_ms=0.75),
    ]


def test_csv_output_frozen():
    buf = io.StringIO()
    results_to_csv(_tiny_results(), buf)
    assert buf.getvalue() == (
        "model,n,k,dep,p_rewire,seed,average_utility,apl,connectivity,matched_pairs\n"
        "ncn,10,2,3,0.1,0,5.5,2.5,0.9,4\n"
        "er,10,2,3,0.1,1,4.0,,0.0,0\n"
    )


def test_csv_excludes_runtime():
    assert "runtime" not in ",".join(CSV_FIELDS)


def test_json_output_includes_runtime_and_parses():
    payload = results_to_json(_tiny_results())
    text = json.dumps(payload)
    back = json.loads(text)
    assert back[0]["runtime_ms"] == 1.25
    assert back[1]["apl"] is None
    assert back[0]["model"] == "ncn"


def test_sweep_csv_identical_across_runs():
    cfg = ExperimentConfig(models=("ws", "ba"), n_values=(10,), k_values=(2,),
                           seeds=(0, 1, 2, 3))
    first, second = io.StringIO(), io.StringIO()
    results_to_csv(sweep(cfg), first)
    results_to_csv(sweep(cfg), second)
    assert first.getvalue() == second.getvalue()
