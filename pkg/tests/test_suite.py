import json

import pytest

from kadditive.games import pair_game
from kadditive.suite import RunConfig, default_corpus, render_human, render_json, run, run_on_game, summarize


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(suite="th9")
    with pytest.raises(ValueError):
        RunConfig(budget_fm=0)
    with pytest.raises(ValueError):
        RunConfig(n=7)


def test_default_corpus_is_reproducible():
    a = default_corpus(3, 4, 2)
    b = default_corpus(3, 4, 2)
    assert [name for name, _ in a] == [name for name, _ in b]
    assert [v.values for _, v in a] == [v.values for _, v in b]
    assert [name for name, _ in a][:4] == ["additive", "unanimity-12", "pair", "square"]
    assert len(a) == 4 + 3 * 2


def test_reports_are_byte_identical_and_order_stable():
    config = RunConfig(suite="remark1", seed=2, random_games=2)
    first = render_json(config, run(config))
    assert first == render_json(config, run(config))
    doc = json.loads(first)
    assert doc["config"]["seed"] == 2
    assert [r["instance"]["name"] for r in doc["reports"]][:2] == ["additive", "unanimity-12"]
    assert all("elapsed" not in r for r in doc["reports"])


def test_parallel_run_matches_serial():
    serial = RunConfig(suite="c2", random_games=2)
    parallel = RunConfig(suite="c2", random_games=2, jobs=2)
    assert render_json(serial, run(serial)) == render_json(serial, run(parallel))


def test_render_human_and_summary():
    config = RunConfig(suite="th1")
    reports = run_on_game(config, "pair", pair_game(3))
    assert summarize(reports) == {"holds": 2, "fails": 0, "skipped": 0}
    text = render_human(config, reports)
    assert text.splitlines()[0] == "suite=th1 n=3 seed=0"
    assert text.splitlines()[-1] == "holds=2 fails=0 skipped=0"
