"""FastAPI service wrapping the pipeline; the CLI calls the same handlers.

The knowledge base (lexicon + embedding table) loads once at startup from
paths given to create_app (falling back to the bundled resources), so many
clients can share one warm process.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from fastapi import FastAPI, HTTPException

from .. import __version__, SCHEMA_VERSION
from ..arf import SrlFrame, extract
from ..config import Config, load_config
from ..deptree import load_parsed
from ..errors import ContractViolation, InputError, ScriptboardError
from ..evalkit import align, corpus_bleu, evaluate_arfs, sari
from ..lexmap import EmbeddingTable, Lexicon
from ..pipeline import run_pipeline
from ..script_parser import UNCLASSIFIED, corpus_stats, segment
from ..simplifier import normalize_text, simplify
from . import models


def _bundled(name: str) -> Path:
    return Path(str(resources.files("scriptboard").joinpath("data", name)))


@dataclass
class AppState:
    config: Config
    lexicon: Lexicon
    embeddings: EmbeddingTable

    @classmethod
    def load(cls, config_path=None, lexicon_path=None, embeddings_path=None) -> "AppState":
        return cls(
            config=load_config(config_path),
            lexicon=Lexicon.load(lexicon_path or _bundled("lexicon.json")),
            embeddings=EmbeddingTable.load(embeddings_path or _bundled("embeddings.vec")),
        )

    def config_with(self, overrides: models.ConfigOverrides) -> Config:
        patch = overrides.to_overrides()
        return replace(self.config, **patch) if patch else self.config


# -- handlers (shared by HTTP routes and the in-process CLI) -------------


def handle_segment(state: AppState, req: models.SegmentRequest) -> models.SegmentResponse:
    config = state.config_with(req.config)
    blocks = segment(req.text, config)
    ratio = (sum(b.kind == UNCLASSIFIED for b in blocks) / len(blocks)) if blocks else 0.0
    resolved: dict[int, str] = {}
    if req.resolved:
        from ..pipeline import resolved_descriptions
        resolved = dict(resolved_descriptions(blocks, config))
    return models.SegmentResponse(
        blocks=[models.BlockModel(**b.to_dict(), resolved_text=resolved.get(i))
                for i, b in enumerate(blocks)],
        unclassified_ratio=round(ratio, 4),
    )


def handle_simplify(state: AppState, req: models.SimplifyRequest) -> models.SimplifyResponse:
    config = state.config_with(req.config)
    sentences = []
    for index, tree in enumerate(load_parsed(req.parses)):
        for simple in simplify(tree, config):
            sentences.append(models.SimplifiedModel(
                source_sentence_index=index, text=simple.text,
                temporal_id=simple.temporal_id))
    return models.SimplifyResponse(sentences=sentences)


def _frame_table(frames: list[models.SentenceFramesModel]) -> dict[str, list[SrlFrame]]:
    return {normalize_text(item.text):
            [SrlFrame(verb_index=f.verb_index, roles=dict(f.roles)) for f in item.frames]
            for item in frames}


def handle_extract(state: AppState, req: models.ExtractRequest) -> models.ExtractResponse:
    config = state.config_with(req.config)
    frame_table = _frame_table(req.frames)
    records, warnings = [], []
    for index, tree in enumerate(load_parsed(req.parses)):
        for simple in simplify(tree, config):
            frames = frame_table.get(normalize_text(simple.text), [])
            try:
                record = extract(simple, frames, state.lexicon, state.embeddings, config)
            except InputError as exc:
                warnings.append(models.WarningModel(code="extraction_failed",
                                                    sentence_index=index, detail=str(exc)))
                continue
            for code in record.warnings:
                detail = record.action if code == "unmappable_action" else simple.text
                warnings.append(models.WarningModel(code=code, sentence_index=index,
                                                    detail=detail))
            records.append(models.ActionRecordModel(**record.to_dict()))
    return models.ExtractResponse(records=records, warnings=warnings)


def handle_storyboard(state: AppState, req: models.StoryboardRequest) -> models.StoryboardResponse:
    config = state.config_with(req.config)
    frames_data = {"frames": [item.model_dump() for item in req.frames]} if req.frames else None
    board = run_pipeline(req.script, req.parses, req.manifest, frames_data,
                         state.lexicon, state.embeddings, config)
    data = board.to_dict()
    return models.StoryboardResponse(
        schema_version=data["schema_version"], provenance=data["provenance"],
        scenes=[models.SceneModel(**scene) for scene in data["scenes"]],
        warnings=[models.WarningModel(**w) for w in data["warnings"]],
    )


def handle_eval(state: AppState, req: models.EvalRequest) -> models.EvalResponse:
    pairs = align(req.hypotheses, req.references)
    bleu_value = corpus_bleu(pairs, max_n=req.max_n, smoothing=req.smoothing)
    sari_value = None
    if req.sources is not None:
        per_sentence_refs = [list(p.references) for p in pairs]
        sari_value = sari(req.sources, req.hypotheses, per_sentence_refs)
    per_field, prf = {}, {}
    if req.arf_system or req.arf_gold:
        per_field, prf = evaluate_arfs(req.arf_system, req.arf_gold)
    return models.EvalResponse(
        bleu=bleu_value, sari=sari_value, per_field_bleu1=per_field,
        boolean_field_prf={k: models.PrfModel(precision=p, recall=r, f1=f)
                           for k, (p, r, f) in prf.items()})


def handle_stats(state: AppState, req: models.StatsRequest) -> models.StatsResponse:
    config = state.config_with(req.config)
    blocks = segment(req.text, config)
    stats = corpus_stats(blocks, state.lexicon.known_actions)
    ratio = (sum(b.kind == UNCLASSIFIED for b in blocks) / len(blocks)) if blocks else 0.0
    return models.StatsResponse(**stats.to_dict(), unclassified_ratio=round(ratio, 4))


# -- app factory -----------------------------------------------------------


def create_app(config_path=None, lexicon_path=None, embeddings_path=None) -> FastAPI:
    state = AppState.load(config_path, lexicon_path, embeddings_path)
    app = FastAPI(title="scriptboard", version=__version__)
    app.state.scriptboard = state

    def guard(handler, request):
        try:
            return handler(state, request)
        except InputError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except ContractViolation as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        except ScriptboardError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.get("/v1/health")
    def health():
        return {"status": "ok"}

    @app.get("/v1/version", response_model=models.VersionResponse)
    def version():
        return models.VersionResponse(tool_version=__version__,
                                      schema_version=SCHEMA_VERSION)

    @app.post("/v1/segment", response_model=models.SegmentResponse)
    def post_segment(req: models.SegmentRequest):
        return guard(handle_segment, req)

    @app.post("/v1/simplify", response_model=models.SimplifyResponse)
    def post_simplify(req: models.SimplifyRequest):
        return guard(handle_simplify, req)

    @app.post("/v1/extract", response_model=models.ExtractResponse)
    def post_extract(req: models.ExtractRequest):
        return guard(handle_extract, req)

    @app.post("/v1/storyboard", response_model=models.StoryboardResponse)
    def post_storyboard(req: models.StoryboardRequest):
        return guard(handle_storyboard, req)

    @app.post("/v1/eval", response_model=models.EvalResponse)
    def post_eval(req: models.EvalRequest):
        return guard(handle_eval, req)

    @app.post("/v1/stats", response_model=models.StatsResponse)
    def post_stats(req: models.StatsRequest):
        return guard(handle_stats, req)

    return app
