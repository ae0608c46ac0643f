import json
from pathlib import Path

import pytest

from scriptboard.cli import main
from scriptboard.config import Config, load_config
from scriptboard.errors import InputError
from scriptboard.lexmap import EmbeddingTable, Lexicon
from scriptboard.pipeline import run_pipeline

from conftest import DATA, FIXTURES

PIPE = FIXTURES / "pipeline"


@pytest.fixture(scope="module")
def kb():
    return (Lexicon.load(DATA / "lexicon.json"),
            EmbeddingTable.load(DATA / "embeddings.vec"))


def run_board(kb, **config_kwargs):
    lexicon, embeddings = kb
    return run_pipeline((PIPE / "script.txt").read_text(),
                        (PIPE / "parses.conllx").read_text(),
                        json.loads((PIPE / "manifest.json").read_text()),
                        None, lexicon, embeddings,
                        Config(paper_compat=True, **config_kwargs))


class TestRunPipeline:
    def test_matches_golden_storyboard(self, kb):
        golden = json.loads((PIPE / "golden_storyboard.json").read_text())
        assert run_board(kb).to_dict() == golden

    def test_deterministic_byte_identical(self, kb):
        assert run_board(kb).to_json() == run_board(kb).to_json()

    def test_actions_sorted_within_scene(self, kb):
        board = run_board(kb)
        for scene in board.scenes:
            keys = [(a.start_time, a.partial_start_time) for a in scene.actions]
            assert keys == sorted(keys)

    def test_unmappable_action_warning_present(self, kb):
        board = run_board(kb)
        codes = {w["code"] for w in board.warnings}
        assert "unmappable_action" in codes
        assert all("sentence_index" in w for w in board.warnings)

    def test_zero_description_script(self, kb):
        lexicon, embeddings = kb
        board = run_pipeline("INT. EMPTY - DAY\n\nCUT TO:", "",
                             {"entries": []}, None, lexicon, embeddings, Config())
        assert board.scenes[0].actions == []
        assert board.warnings == []

    def test_manifest_sentence_count_mismatch(self, kb):
        lexicon, embeddings = kb
        manifest = json.loads((PIPE / "manifest.json").read_text())
        manifest["entries"] = manifest["entries"][:1]
        with pytest.raises(InputError, match="sentence index"):
            run_pipeline((PIPE / "script.txt").read_text(),
                         (PIPE / "parses.conllx").read_text(),
                         manifest, None, lexicon, embeddings,
                         Config(paper_compat=True))

    def test_manifest_wrong_block_kind(self, kb):
        lexicon, embeddings = kb
        manifest = json.loads((PIPE / "manifest.json").read_text())
        for entry in manifest["entries"]:
            entry["block_index"] = 0  # the Heading block
        with pytest.raises(InputError, match="Heading"):
            run_pipeline((PIPE / "script.txt").read_text(),
                         (PIPE / "parses.conllx").read_text(),
                         manifest, None, lexicon, embeddings,
                         Config(paper_compat=True))

    def test_provenance_hashes_present(self, kb):
        prov = run_board(kb).provenance
        assert len(prov["input_sha256"]) == 64
        assert len(prov["config_sha256"]) == 64
        assert prov["tool_version"]

    def test_ownerless_action_gets_warning(self, kb):
        lexicon, embeddings = kb
        script = "INT. A - DAY\n\n     Close the door."
        parses = ("1\tClose\tclose\tVERB\tVB\tROOT\t0\t_\t_\t_\n"
                  "2\tthe\tthe\tDET\tDT\tdet\t3\t_\t_\t_\n"
                  "3\tdoor\tdoor\tNOUN\tNN\tdobj\t1\t_\t_\t_\n"
                  "4\t.\t.\tPUNCT\t.\tpunct\t1\t_\t_\t_\n")
        manifest = {"entries": [{"block_index": 1, "sentence_index": 0,
                                 "char_span": [0, 14]}]}
        board = run_pipeline(script, parses, manifest, None, lexicon,
                             embeddings, Config())
        assert any(w["code"] == "missing_owner" for w in board.warnings)
        assert board.scenes[0].actions[0].owner == ""


class TestConfig:
    def test_defaults_round_trip(self):
        cfg = Config()
        assert cfg.hash() == Config().hash()

    def test_json_config_overrides(self, tmp_path):
        path = tmp_path / "conf.json"
        path.write_text(json.dumps({"tau_act": 0.7, "paper_compat": True}))
        cfg = load_config(path)
        assert cfg.tau_act == 0.7
        assert cfg.paper_compat is True
        assert cfg.hash() != Config().hash()

    def test_unknown_key_rejected(self, tmp_path):
        path = tmp_path / "conf.json"
        path.write_text(json.dumps({"no_such_key": 1}))
        with pytest.raises(InputError, match="no_such_key"):
            load_config(path)

    def test_unknown_analyzer_rejected(self, tmp_path):
        path = tmp_path / "conf.json"
        path.write_text(json.dumps({"analyzer_order": ["coordination", "zap"]}))
        with pytest.raises(InputError, match="zap"):
            load_config(path)

    def test_missing_file_rejected(self):
        with pytest.raises(InputError, match="not found"):
            load_config("/nonexistent/conf.json")


class TestCli:
    def test_segment_jsonl(self, capsys, script_corpus):
        assert main(["segment", str(script_corpus[0])]) == 0
        out = capsys.readouterr().out.strip().split("\n")
        blocks = [json.loads(line) for line in out]
        assert blocks[0]["kind"] == "Heading"
        assert set(blocks[0]) == {"kind", "text", "indent", "start_line",
                                  "end_line", "scene_index"}

    def test_simplify_jsonl(self, capsys):
        parses = FIXTURES / "parses" / "gold_coordination.conllx"
        assert main(["simplify", str(parses)]) == 0
        out = [json.loads(l) for l in capsys.readouterr().out.strip().split("\n")]
        assert {o["text"] for o in out} == {"She laughs.", "She gives Kevin a kiss."}
        assert all(set(o) == {"source_sentence_index", "text", "temporal_id"}
                   for o in out)

    def test_extract_emits_arf_records_and_warning(self, capsys):
        parses = FIXTURES / "parses" / "arf_demo.conllx"
        frames = FIXTURES / "frames" / "arf_demo_frames.json"
        assert main(["extract", str(parses), "--frames", str(frames),
                     "--paper-compat"]) == 0
        captured = capsys.readouterr()
        record = json.loads(captured.out.strip())
        assert record["owner"] == "James"
        assert record["target"] == "a red ball"
        assert record["prop"] == "to Alice"

    def test_extract_default_mode_swaps(self, capsys):
        parses = FIXTURES / "parses" / "arf_demo.conllx"
        frames = FIXTURES / "frames" / "arf_demo_frames.json"
        assert main(["extract", str(parses), "--frames", str(frames)]) == 0
        record = json.loads(capsys.readouterr().out.strip())
        assert record["target"] == "to Alice"
        assert record["prop"] == "a red ball"

    def test_storyboard_matches_golden(self, capsys):
        assert main(["storyboard", str(PIPE / "script.txt"),
                     "--parses", str(PIPE / "parses.conllx"),
                     "--manifest", str(PIPE / "manifest.json"),
                     "--paper-compat"]) == 0
        board = json.loads(capsys.readouterr().out)
        golden = json.loads((PIPE / "golden_storyboard.json").read_text())
        assert board == golden

    def test_eval_command(self, tmp_path, capsys):
        hyp = tmp_path / "hyp.jsonl"
        hyp.write_text('{"text": "the doctor explains"}\n')
        for i in range(1, 4):
            (tmp_path / f"ref{i}.jsonl").write_text(
                '{"text": "the doctor explains"}\n')
        assert main(["eval", str(hyp)] +
                    [str(tmp_path / f"ref{i}.jsonl") for i in range(1, 4)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["bleu"] == pytest.approx(100.0)

    def test_stats_command(self, capsys, script_corpus):
        assert main(["stats", str(script_corpus[0])]) == 0
        stats = json.loads(capsys.readouterr().out)
        assert stats["descriptions"] >= 2
        assert stats["action_sentences"] >= 1

    def test_missing_input_exits_1(self, capsys):
        assert main(["segment", "/nonexistent/script.txt"]) == 1
        err = capsys.readouterr().err
        assert "input_error" in err

    def test_unknown_flag_exits_1(self, capsys):
        assert main(["segment", "--bogus"]) == 1

    def test_contract_violation_exits_2(self, tmp_path, capsys):
        conf = tmp_path / "conf.json"
        conf.write_text(json.dumps({"push_budget": 0}))
        parses = FIXTURES / "parses" / "gold_coordination.conllx"
        assert main(["--config", str(conf), "simplify", str(parses)]) == 2
        assert "contract_violation" in capsys.readouterr().err

    def test_version_flag(self, capsys):
        assert main(["--version"]) == 0
        assert "scriptboard" in capsys.readouterr().out

    def test_output_file_option(self, tmp_path, script_corpus):
        out = tmp_path / "blocks.jsonl"
        assert main(["segment", str(script_corpus[0]), "-o", str(out)]) == 0
        assert out.exists()
        assert json.loads(out.read_text().split("\n")[0])["kind"] == "Heading"

    def test_byte_identical_storyboards(self, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        for out in (out1, out2):
            assert main(["storyboard", str(PIPE / "script.txt"),
                         "--parses", str(PIPE / "parses.conllx"),
                         "--manifest", str(PIPE / "manifest.json"),
                         "--paper-compat", "-o", str(out)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
