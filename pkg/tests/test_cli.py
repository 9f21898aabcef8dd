import csv
import io
import json

import pytest

from twolift import catalog
from twolift import verify as vf
from twolift.cli import EXIT_CAP, EXIT_NOT_FOUND, EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_VIOLATION, main
from twolift.config import Config, ConfigError, parse_config
from twolift.graph import parse_graph
from twolift.models import widom_rowlinson


@pytest.fixture
def files(tmp_path):
    (tmp_path / "c4.edges").write_text(catalog.cycle(4).to_text())
    (tmp_path / "k2.edges").write_text(catalog.complete(2).to_text())
    (tmp_path / "bad.edges").write_text("2 1\n0 5\n")
    (tmp_path / "wr.json").write_text(json.dumps(widom_rowlinson().to_json()))
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_z_examples(files, capsys):
    assert run(capsys, "z", "--graph", files / "c4.edges", "--model", "ind")[:2] == (EXIT_OK, "7")
    assert run(capsys, "z", "--graph", files / "k2.edges", "--rc", "--q", "2", "--w", "1")[:2] == (EXIT_OK, "6")
    assert run(capsys, "z", "--named", "C4", "--model", "coloring:q=3", "--hom")[:2] == (EXIT_OK, "18")


def test_classify_example(files, capsys, validate_schema):
    code, payload = run_json(capsys, "classify", "--model", files / "wr.json")
    assert code == EXIT_OK and payload["verdict"] == "ClassA_certified"
    validate_schema(payload, "classify.schema.json")


def test_error_codes(files, capsys):
    assert run(capsys, "z", "--graph", files / "missing.edges", "--model", "ind")[0] == EXIT_NOT_FOUND
    assert run(capsys, "z", "--graph", files / "bad.edges", "--model", "ind")[0] == EXIT_PARSE
    assert run(capsys, "z", "--named", "Petersen", "--model", "wr", "--assignment-cap", "100")[0] == EXIT_CAP
    assert run(capsys, "z", "--named", "C4")[0] == EXIT_USAGE
    code, _, err = run(capsys, "z", "--named", "C4", "--model", "nosuchmodel")
    assert code == EXIT_PARSE and err.startswith("error:")
    with pytest.raises(SystemExit) as exc:
        main(["z", "--format", "xml"])
    assert exc.value.code == EXIT_USAGE


def test_lift_round_trip(files, capsys, validate_schema):
    code, text, _ = run(capsys, "lift", "--named", "K4", "--signing", "+-+-+-")
    assert code == EXIT_OK
    g = parse_graph(text)
    assert parse_graph(g.to_text()).edges == g.edges and g.n == 8
    code, payload = run_json(capsys, "lift", "--named", "K4", "--index", "5")
    validate_schema(payload, "lift.schema.json")
    assert run(capsys, "lift", "--named", "K4", "--signing", "++")[0] == EXIT_USAGE


def test_lift_enumerate_and_extremal(capsys):
    code, payload = run_json(capsys, "lift", "--named", "K3", "--enumerate")
    assert code == EXIT_OK and len(payload["lifts"]) == 8
    assert [x["index"] for x in payload["lifts"]] == list(range(8))
    code, payload = run_json(capsys, "lift", "--named", "K3", "--extremal", "--model", "ind")
    # every odd-minus signing of a triangle gives C6; ties go to the smallest index
    assert payload["signing"] == "++-" and payload["value"] == "18"


def test_girth_boost(tmp_path, capsys):
    out = tmp_path / "boosted.edges"
    code, text, _ = run(capsys, "girth-boost", "--named", "K4", "--target", "6", "--out-graph", out)
    assert code == EXIT_OK and text.startswith("reached")
    from twolift.graph import girth, load_graph

    assert girth(load_graph(str(out))) >= 6
    assert run(capsys, "girth-boost", "--named", "K3", "--target", "30", "--budget", "2")[0] == EXIT_VIOLATION


def test_counts(capsys):
    code, payload = run_json(capsys, "counts", "--named", "C4", "--lam", "1/2")
    assert payload["i_k"] == [1, 4, 2] and payload["m_k"] == [1, 4, 2] and payload["I"] == "7/2"
    code, text, _ = run(capsys, "counts", "--named", "C4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["k", "i_k", "m_k"] and rows[1:] == [["0", "1", "1"], ["1", "4", "4"], ["2", "2", "2"]]


def test_bethe_json(capsys, validate_schema):
    code, payload = run_json(capsys, "bethe", "--lam", "1", "--d", "3", "--restarts", "5")
    assert code == EXIT_OK
    validate_schema(payload, "bethe.schema.json")
    entry = payload["results"][0]
    assert abs(entry["value"] - entry["closed_form"]) <= 1e-8
    code, payload = run_json(capsys, "bethe", "--beta", "0.3,1", "--B", "0", "--restarts", "5")
    assert [abs(e["h_star"]) > 1e-6 for e in payload["results"]] == [False, True]


def test_z_json_schema(capsys, validate_schema):
    code, payload = run_json(capsys, "z", "--named", "K3", "--model", "ising:beta=1/2,B=1/5")
    validate_schema(payload, "z.schema.json")
    assert payload["kind"] == "partition_value"


def test_verify_json_and_csv(tmp_path, capsys, validate_schema):
    out = tmp_path / "report.json"
    code, payload = run_json(capsys, "verify", "--suite", "counts", "--out", out)
    assert code == EXIT_OK and payload["ok"]
    validate_schema(payload, "verify_report.schema.json")
    assert json.loads(out.read_text()) == payload
    code, text, _ = run(capsys, "verify", "--suite", "counts", "--format", "csv")
    header = next(csv.reader(io.StringIO(text)))
    assert header == ["suite", "graph", "model", "claim", "scanned", "exhaustive", "margin", "status"]


def test_verify_catalog_file_and_cap(tmp_path, capsys):
    cat = tmp_path / "cat.json"
    cat.write_text(json.dumps({"K3": catalog.complete(3).to_json()}))
    code, payload = run_json(capsys, "verify", "--suite", "lifts", "--catalog", cat, "--cap", "4", "--seed", "1")
    assert code == EXIT_OK
    assert {r["exhaustive"] for r in payload["suites"]["lifts"]} == {False}
    assert vf.EXHAUSTIVE_LIFT_CAP == 2**20


def test_output_is_deterministic(capsys):
    a = run(capsys, "verify", "--suite", "klift", "--seed", "3", "--format", "csv")[1]
    b = run(capsys, "verify", "--suite", "klift", "--seed", "3", "--format", "csv")[1]
    assert a == b


# -- config ----------------------------------------------------------------------


def test_parse_config():
    cfg = parse_config("# run settings\nseed = 7\nlift-cap = 1024  # small\nformat = json\ntol = 1e-10\n")
    assert (cfg.seed, cfg.lift_cap, cfg.format, cfg.tol) == (7, 1024, "json", 1e-10)
    assert parse_config("") == Config()


@pytest.mark.parametrize("text", ["tol = 0.5", "threads = 0", "seed 3", "colour = red", "format = xml", "seed = x"])
def test_config_errors(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_flags_override_config(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("format = json\nassignment_cap = 4\n")
    assert run(capsys, "z", "--named", "K3", "--model", "ind", "--config", cfg)[0] == EXIT_CAP
    code, text, _ = run(capsys, "z", "--named", "K3", "--model", "ind", "--config", cfg, "--assignment-cap", "100")
    assert code == EXIT_OK and json.loads(text)["value"] == "4"
    (tmp_path / "bad.cfg").write_text("tol = 2\n")
    assert run(capsys, "z", "--named", "K3", "--model", "ind", "--config", tmp_path / "bad.cfg")[0] == EXIT_PARSE
