# Copyright 2026 The tablescene authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import numpy as np
import pytest
from tablescene.cli import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_PROVIDER_ERROR,
    load_cli_config,
    main,
)
from tablescene.corrupt import perturb_geometry
from tablescene.layout import layout_to_dict, random_layout
from tablescene.relations import build_scene_graph, serialize_graph
from utils import box, layout_json, make_layout

SERVE_COFFEE = {
    "Environment": "A dining table with a tray",
    "Task": "Serve coffee",
    "Goal": ["Pick up the mug", "Place the mug on the tray"],
    "Action Sequence": ["Pick(Mug)", "PlaceOn(Tray)"],
    "Objects cluster": ["Mug", "Tray"],
}

CATALOG = [
    {"asset_id": "pen-blue", "Category": "Pen", "Description": "blue pen", "Size": [14.0, 1.2, 1.2]},
    {"asset_id": "mug-blue", "Category": "Mug", "Description": "blue coffee mug", "Size": [8.0, 8.0, 10.0]},
    {"asset_id": "mug-red-2", "Category": "Mug", "Description": "red coffee mug", "Size": [8.0, 8.0, 10.0]},
    {"asset_id": "cup-tall", "Category": "Cup", "Description": "tall coffee cup", "Size": [5.0, 5.0, 20.0]},
    {"asset_id": "mug-red", "Category": "Mug", "Description": "red coffee mug", "Size": [8.0, 8.0, 10.0]},
    {
        "asset_id": "chair-red",
        "Category": "Chair",
        "Description": "red coffee chair",
        "Size": [45.0, 50.0, 90.0],
        "OnTable": False,
    },
]


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for key in list(os.environ):
        if key.startswith("TABLESCENE_"):
            monkeypatch.delenv(key)


def _write_lines(path, items) -> str:
    path.write_text("".join(item + "\n" for item in items), encoding="utf-8")
    return str(path)


def _layouts(n: int, seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    return [random_layout(rng, 6) for _ in range(n)]


def test_extract_graph(tmp_path) -> None:
    layouts = _layouts(3)
    src = _write_lines(tmp_path / "layouts.jsonl", [layout_json(x) for x in layouts])
    out = tmp_path / "graphs.jsonl"
    assert main(["extract-graph", src, "-o", str(out)]) == EXIT_OK
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    for line, layout in zip(lines, layouts):
        assert json.loads(line) == serialize_graph(build_scene_graph(layout))

    first = out.read_bytes()
    assert main(["extract-graph", src, "-o", str(out)]) == EXIT_OK
    assert out.read_bytes() == first


def test_extract_graph_to_stdout(tmp_path, capsys) -> None:
    layout = make_layout(box("Cup", 30, 50), box("Bowl", 60, 50))
    src = _write_lines(tmp_path / "layouts.jsonl", [layout_json(layout)])
    assert main(["extract-graph", src]) == EXIT_OK
    graph_text = json.loads(capsys.readouterr().out)
    assert "(Cup, left of, Bowl)" in graph_text.split("\n")


def test_extract_graph_malformed_line(tmp_path, capsys) -> None:
    good = layout_json(_layouts(1)[0])
    src = _write_lines(tmp_path / "layouts.jsonl", [good, "{oops", good])
    out = tmp_path / "graphs.jsonl"
    out.write_text("previous\n", encoding="utf-8")
    assert main(["extract-graph", src, "-o", str(out)]) == EXIT_INPUT_ERROR
    assert "line 2" in capsys.readouterr().err
    # failed runs leave the output untouched
    assert out.read_text(encoding="utf-8") == "previous\n"


def _dpo_records(n: int) -> list[str]:
    lines = []
    for i, layout in enumerate(_layouts(n, seed=1)):
        record = {
            "prompt": f"Arrange the table for task {i}.",
            "reasoning": "Keep the table tidy.",
            "layout": layout_to_dict(layout),
            "task_relevant_ids": layout.object_ids()[:2],
        }
        lines.append(json.dumps(record))
    return lines


def test_build_dpo(tmp_path, capsys) -> None:
    src = _write_lines(tmp_path / "records.jsonl", _dpo_records(10))
    out = tmp_path / "dpo.jsonl"
    assert main(["--seed", "7", "build-dpo", src, "-o", str(out)]) == EXIT_OK
    pairs = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert len(pairs) == 20
    assert all(list(p) == ["prompt", "chosen", "rejected", "tag", "seed"] for p in pairs)
    err_lines = capsys.readouterr().err.splitlines()
    summary = json.loads([line for line in err_lines if line.startswith('{"pairs"')][-1])
    assert summary["pairs"] == 20
    assert summary["skipped"] == []
    assert sum(summary["tags"].values()) == 20

    first = out.read_bytes()
    assert main(["--seed", "7", "build-dpo", src, "-o", str(out)]) == EXIT_OK
    assert out.read_bytes() == first
    assert main(["--seed", "7", "--workers", "2", "build-dpo", src, "-o", str(out)]) == EXIT_OK
    assert out.read_bytes() == first
    assert main(["--seed", "8", "build-dpo", src, "-o", str(out)]) == EXIT_OK
    assert out.read_bytes() != first


def test_build_dpo_bad_record(tmp_path, capsys) -> None:
    lines = _dpo_records(2)
    lines.append(json.dumps({"prompt": "p", "layout": {"objects": []}}))
    src = _write_lines(tmp_path / "records.jsonl", lines)
    assert main(["build-dpo", src, "-o", str(tmp_path / "dpo.jsonl")]) == EXIT_INPUT_ERROR
    assert "line 3" in capsys.readouterr().err
    assert not (tmp_path / "dpo.jsonl").exists()


def _sft_lines() -> list[str]:
    layout = make_layout(
        box("Mug-0", 30, 50, w=8, d=8, h=10),
        box("Tray-0", 60, 50, w=30, d=20, h=3),
        box("Book-0", 45, 80),
    )
    return [
        json.dumps(
            {"layout": layout_to_dict(layout), "task_relevant_ids": ["Mug-0"], "instruction": "Serve coffee"}
        ),
        json.dumps(
            {
                "layout": layout_to_dict(layout),
                "task_relevant_ids": ["Mug-0", "Tray-0"],
                "task_info": SERVE_COFFEE,
                "scene_description": "A small dining table.",
            }
        ),
    ]


def test_build_sft_with_stub(tmp_path) -> None:
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"stub_responses": {"Serve coffee": json.dumps(SERVE_COFFEE)}}))
    src = _write_lines(tmp_path / "scenes.jsonl", _sft_lines())
    out = tmp_path / "sft.jsonl"
    assert main(["--config", str(config), "build-sft", src, "-o", str(out)]) == EXIT_OK
    records = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert len(records) == 2
    assert all(list(r) == ["prompt", "completion"] for r in records)
    assert records[0]["completion"].startswith("Core Task Objects:\n- Mug: 1\n")
    assert "A small dining table." in records[1]["completion"]
    assert json.loads(records[0]["prompt"].split("\n")[1]) == SERVE_COFFEE

    first = out.read_bytes()
    assert main(["--config", str(config), "build-sft", src, "-o", str(out)]) == EXIT_OK
    assert out.read_bytes() == first


def test_build_sft_without_fixture(tmp_path, capsys) -> None:
    src = _write_lines(tmp_path / "scenes.jsonl", _sft_lines())
    assert main(["build-sft", src, "-o", str(tmp_path / "sft.jsonl")]) == EXIT_PROVIDER_ERROR
    assert "provider error" in capsys.readouterr().err
    assert not (tmp_path / "sft.jsonl").exists()


def test_build_sft_bad_task_info(tmp_path, capsys) -> None:
    line = json.loads(_sft_lines()[1])
    line["task_info"] = dict(SERVE_COFFEE, **{"Action Sequence": ["Teleport(Mug)"]})
    missing = {"layout": line["layout"]}
    src = _write_lines(tmp_path / "scenes.jsonl", [json.dumps(line), json.dumps(missing)])
    assert main(["build-sft", src]) == EXIT_INPUT_ERROR
    err = capsys.readouterr().err
    assert "line 1" in err
    assert "line 2" in err


def test_eval_report(tmp_path) -> None:
    layouts = _layouts(4, seed=2)
    completion = (
        "Scene Graph:\n"
        + serialize_graph(build_scene_graph(layouts[0]))
        + "\n\nLayout:\n"
        + layout_json(layouts[0])
    )
    lines = [layout_json(x) for x in layouts[1:]] + [json.dumps(completion), "not a layout"]
    src = _write_lines(tmp_path / "outputs.jsonl", lines)
    out = tmp_path / "report.json"
    assert main(["eval", src, "-o", str(out)]) == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    aggregate = report["aggregate"]
    assert aggregate["n_total"] == 5
    assert aggregate["n_success"] == 4
    assert aggregate["success_rate"] == 0.8
    assert aggregate["failures"]["malformed_syntax"] == 1
    assert aggregate["collision_rate"] == 0.0
    assert aggregate["relations_checked"] == aggregate["relations_holding"] > 0
    rows = report["outputs"]
    assert [r["line"] for r in rows] == [1, 2, 3, 4, 5]
    assert rows[4] == {"line": 5, "success": False, "error": "malformed_syntax"}
    assert rows[3]["n_objects"] == len(layouts[0].objects)

    first = out.read_bytes()
    assert main(["eval", src, "-o", str(out)]) == EXIT_OK
    assert out.read_bytes() == first


def test_eval_table(tmp_path, capsys) -> None:
    src = _write_lines(tmp_path / "outputs.jsonl", [layout_json(x) for x in _layouts(2)])
    assert main(["eval", src, "--format", "table"]) == EXIT_OK
    table = capsys.readouterr().out
    assert table.splitlines()[0].split() == ["line", "ok", "objects", "collide", "rate", "relations"]
    assert "success rate 1.000 (2/2)" in table


def test_eval_perturbed_corpus(tmp_path) -> None:
    perturbed = [perturb_geometry(x, i) for i, x in enumerate(_layouts(30, seed=3))]
    src = _write_lines(tmp_path / "outputs.jsonl", [layout_json(x) for x in perturbed])
    out = tmp_path / "report.json"
    assert main(["eval", src, "-o", str(out)]) == EXIT_OK
    assert json.loads(out.read_text(encoding="utf-8"))["aggregate"]["collision_rate"] > 0


def test_eval_empty_file(tmp_path, capsys) -> None:
    src = tmp_path / "outputs.jsonl"
    src.write_text("\n\n", encoding="utf-8")
    assert main(["eval", str(src)]) == EXIT_INPUT_ERROR
    assert "no outputs" in capsys.readouterr().err


def test_retrieve(tmp_path) -> None:
    catalog = _write_lines(tmp_path / "catalog.jsonl", [json.dumps(a) for a in CATALOG])
    targets = _write_lines(
        tmp_path / "targets.jsonl",
        [json.dumps({"description": "red coffee mug", "size": [8.0, 8.0, 10.0]})],
    )
    out = tmp_path / "retrieved.jsonl"

    assert main(["--top-k", "10", "retrieve", catalog, targets, "-o", str(out)]) == EXIT_OK
    (line,) = [json.loads(x) for x in out.read_text(encoding="utf-8").splitlines()]
    assert line["description"] == "red coffee mug"
    assert line["size"] == [8.0, 8.0, 10.0]
    ids = [r["asset_id"] for r in line["results"]]
    assert ids == ["mug-red", "mug-red-2", "mug-blue", "chair-red", "cup-tall", "pen-blue"]
    top = line["results"][0]
    assert list(top) == ["asset_id", "T", "S", "R", "scale", "scaled_size"]
    assert top["T"] == 1.0
    assert top["scale"] == 1.0
    assert top["scaled_size"] == [8.0, 8.0, 10.0]
    first = out.read_bytes()

    assert main(["--top-k", "10", "retrieve", catalog, targets, "-o", str(out), "--on-table", "true"]) == EXIT_OK
    (line,) = [json.loads(x) for x in out.read_text(encoding="utf-8").splitlines()]
    assert "chair-red" not in [r["asset_id"] for r in line["results"]]
    assert len(line["results"]) == 5

    assert main(["--top-k", "10", "retrieve", catalog, targets, "-o", str(out)]) == EXIT_OK
    assert out.read_bytes() == first

    assert main(["retrieve", catalog, targets, "-o", str(out), "--category", "Mug"]) == EXIT_OK
    (line,) = [json.loads(x) for x in out.read_text(encoding="utf-8").splitlines()]
    assert [r["asset_id"] for r in line["results"]] == ["mug-red", "mug-red-2", "mug-blue"]


def test_retrieve_top_k_from_env(tmp_path, monkeypatch) -> None:
    catalog = _write_lines(tmp_path / "catalog.jsonl", [json.dumps(a) for a in CATALOG])
    targets = _write_lines(
        tmp_path / "targets.jsonl",
        [json.dumps({"description": "blue pen", "size": [14.0, 1.2, 1.2]})],
    )
    out = tmp_path / "retrieved.jsonl"
    monkeypatch.setenv("TABLESCENE_TOP_K", "1")
    assert main(["retrieve", catalog, targets, "-o", str(out)]) == EXIT_OK
    (line,) = [json.loads(x) for x in out.read_text(encoding="utf-8").splitlines()]
    assert [r["asset_id"] for r in line["results"]] == ["pen-blue"]


def test_retrieve_errors(tmp_path, capsys) -> None:
    catalog = _write_lines(tmp_path / "catalog.jsonl", [json.dumps(a) for a in CATALOG])
    targets = _write_lines(
        tmp_path / "targets.jsonl",
        [json.dumps({"description": "mug", "size": [8.0, -1.0, 10.0]})],
    )
    assert main(["retrieve", catalog, targets]) == EXIT_INPUT_ERROR
    assert "line 1" in capsys.readouterr().err

    good = _write_lines(
        tmp_path / "good.jsonl", [json.dumps({"description": "mug", "size": [8.0, 8.0, 10.0]})]
    )
    assert main(["retrieve", catalog, good, "--category", "Sofa"]) == EXIT_INPUT_ERROR

    broken = _write_lines(tmp_path / "broken.jsonl", [json.dumps(CATALOG[0]), json.dumps(CATALOG[0])])
    assert main(["retrieve", broken, good]) == EXIT_INPUT_ERROR
    assert "duplicate" in capsys.readouterr().err


def test_config_precedence(tmp_path) -> None:
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"seed": 1, "top_k": 3, "alpha": 0.7}))
    env = {"TABLESCENE_SEED": "2", "TABLESCENE_ALPHA": "0.6", "TABLESCENE_LOG_LEVEL": "info"}

    cfg = load_cli_config(config, {"seed": 3, "alpha": None}, env)
    assert cfg.seed == 3
    assert cfg.top_k == 3
    assert cfg.alpha == 0.6
    assert cfg.log_level == "INFO"

    cfg = load_cli_config(config, {}, env)
    assert cfg.seed == 2

    cfg = load_cli_config(config, {}, {})
    assert (cfg.seed, cfg.alpha, cfg.beta) == (1, 0.7, 0.1)

    defaults = load_cli_config(None, None, {})
    assert defaults.provider == "stub"
    assert defaults.z_epsilon == 1.0


def test_config_errors(tmp_path, capsys) -> None:
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"sed": 1}))
    with pytest.raises(ValueError):
        load_cli_config(config, {}, {})
    with pytest.raises(ValueError):
        load_cli_config(None, {"seed": 2**64}, {})
    with pytest.raises(ValueError):
        load_cli_config(None, {}, {"TABLESCENE_WORKERS": "0"})

    src = _write_lines(tmp_path / "layouts.jsonl", [layout_json(_layouts(1)[0])])
    assert main(["--config", str(config), "extract-graph", src]) == EXIT_INPUT_ERROR
    assert "configuration error" in capsys.readouterr().err
    assert main(["--config", str(tmp_path / "missing.json"), "extract-graph", src]) == EXIT_INPUT_ERROR


def test_workers_keep_input_order(tmp_path) -> None:
    layouts = _layouts(12, seed=5)
    graphs = _write_lines(tmp_path / "layouts.jsonl", [layout_json(x) for x in layouts])
    outputs = _write_lines(
        tmp_path / "outputs.jsonl",
        [layout_json(x) for x in layouts] + ["not a layout"] + [layout_json(layouts[0])],
    )
    catalog = _write_lines(tmp_path / "catalog.jsonl", [json.dumps(a) for a in CATALOG])
    targets = _write_lines(
        tmp_path / "targets.jsonl",
        [
            json.dumps({"description": d, "size": s})
            for d, s in [
                ("red coffee mug", [8.0, 8.0, 10.0]),
                ("blue pen", [14.0, 1.2, 1.2]),
                ("tall coffee cup", [5.0, 5.0, 20.0]),
                ("red chair", [45.0, 50.0, 90.0]),
            ]
        ],
    )
    commands = [
        ["extract-graph", graphs],
        ["eval", outputs],
        ["retrieve", catalog, targets],
    ]
    for command in commands:
        serial = tmp_path / "serial.out"
        parallel = tmp_path / "parallel.out"
        assert main([*command, "-o", str(serial)]) == EXIT_OK
        assert main(["--workers", "4", *command, "-o", str(parallel)]) == EXIT_OK
        assert parallel.read_bytes() == serial.read_bytes()

    lines = (tmp_path / "parallel.out").read_text(encoding="utf-8").splitlines()
    assert [json.loads(x)["description"] for x in lines] == [
        "red coffee mug",
        "blue pen",
        "tall coffee cup",
        "red chair",
    ]


def test_workers_report_every_bad_line(tmp_path, capsys) -> None:
    good = layout_json(_layouts(1)[0])
    src = _write_lines(tmp_path / "layouts.jsonl", [good, "{oops", good, "[]", good])
    assert main(["--workers", "3", "extract-graph", src]) == EXIT_INPUT_ERROR
    err = capsys.readouterr().err
    assert err.index("line 2") < err.index("line 4")
