import json
import threading
import time

import httpx
import pytest
from fastapi.testclient import TestClient

from scriptboard.service.app import create_app

from conftest import FIXTURES

PIPE = FIXTURES / "pipeline"


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestEndpoints:
    def test_health_and_version(self, client):
        assert client.get("/v1/health").json() == {"status": "ok"}
        version = client.get("/v1/version").json()
        assert version["schema_version"] == 1

    def test_segment(self, client, script_corpus):
        resp = client.post("/v1/segment", json={"text": script_corpus[0].read_text()})
        assert resp.status_code == 200
        body = resp.json()
        assert body["blocks"][0]["kind"] == "Heading"
        assert body["unclassified_ratio"] == 0.0

    def test_simplify(self, client):
        parses = (FIXTURES / "parses" / "gold_coordination.conllx").read_text()
        resp = client.post("/v1/simplify", json={"parses": parses})
        assert resp.status_code == 200
        texts = {s["text"] for s in resp.json()["sentences"]}
        assert texts == {"She laughs.", "She gives Kevin a kiss."}

    def test_simplify_analyzer_override(self, client):
        parses = (FIXTURES / "parses" / "gold_preconj.conllx").read_text()
        resp = client.post("/v1/simplify", json={
            "parses": parses, "config": {"analyzer_order": ["preconj"]}})
        texts = [s["text"] for s in resp.json()["sentences"]]
        assert texts == ["It 's followed by another squad car, with sirens blaring."]

    def test_extract_with_frames(self, client):
        parses = (FIXTURES / "parses" / "arf_demo.conllx").read_text()
        frames = json.loads((FIXTURES / "frames" / "arf_demo_frames.json").read_text())
        resp = client.post("/v1/extract", json={
            "parses": parses, "frames": frames["frames"],
            "config": {"paper_compat": True}})
        assert resp.status_code == 200
        record = resp.json()["records"][0]
        assert record["owner"] == "James"
        assert record["target"] == "a red ball"

    def test_storyboard(self, client):
        resp = client.post("/v1/storyboard", json={
            "script": (PIPE / "script.txt").read_text(),
            "parses": (PIPE / "parses.conllx").read_text(),
            "manifest": json.loads((PIPE / "manifest.json").read_text()),
            "config": {"paper_compat": True}})
        assert resp.status_code == 200
        body = resp.json()
        golden = json.loads((PIPE / "golden_storyboard.json").read_text())
        assert body["scenes"] == golden["scenes"]
        assert body["warnings"] == golden["warnings"]

    def test_eval(self, client):
        resp = client.post("/v1/eval", json={
            "hypotheses": ["the doctor explains"],
            "references": [["the doctor explains"],
                           ["the doctor is talking."],
                           ["the doctor explains"]],
            "max_n": 2})
        assert resp.status_code == 200
        assert resp.json()["bleu"] == pytest.approx(100.0)

    def test_stats(self, client, script_corpus):
        resp = client.post("/v1/stats", json={"text": script_corpus[8].read_text()})
        body = resp.json()
        assert body["descriptions"] == 2
        assert body["action_sentences"] >= 2

    def test_bad_parse_is_422(self, client):
        resp = client.post("/v1/simplify", json={"parses": "not\tenough\tcolumns\n"})
        assert resp.status_code == 422
        assert "columns" in resp.json()["detail"]

    def test_bad_manifest_is_422(self, client):
        resp = client.post("/v1/storyboard", json={
            "script": (PIPE / "script.txt").read_text(),
            "parses": (PIPE / "parses.conllx").read_text(),
            "manifest": {"entries": []},
            "config": {"paper_compat": True}})
        assert resp.status_code == 422


class TestCliThinClient:
    def test_cli_talks_to_live_server(self, tmp_path, unused_tcp_port_factory=None):
        import uvicorn

        from scriptboard.cli import main

        port = 8941
        server = uvicorn.Server(uvicorn.Config(create_app(), host="127.0.0.1",
                                               port=port, log_level="error"))
        thread = threading.Thread(target=server.run, daemon=True)
        thread.start()
        try:
            deadline = time.time() + 10
            url = f"http://127.0.0.1:{port}"
            while time.time() < deadline:
                try:
                    if httpx.get(url + "/v1/health", timeout=1.0).status_code == 200:
                        break
                except httpx.HTTPError:
                    time.sleep(0.05)
            else:
                pytest.skip("local HTTP server did not come up")
            out = tmp_path / "blocks.jsonl"
            script = FIXTURES / "scripts" / "01_basic.txt"
            code = main(["--server", url, "segment", str(script), "-o", str(out)])
            assert code == 0
            blocks = [json.loads(l) for l in out.read_text().strip().split("\n")]
            assert blocks[0]["kind"] == "Heading"
            # thin client and in-process path agree byte for byte
            local = tmp_path / "local.jsonl"
            assert main(["segment", str(script), "-o", str(local)]) == 0
            assert local.read_text() == out.read_text()
        finally:
            server.should_exit = True
            thread.join(timeout=5)
