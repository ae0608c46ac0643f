"""Command-line interface: a thin client over the service handlers.

Each subcommand builds the same request model the HTTP service accepts,
then either runs the handler in-process (default) or POSTs it to a
running service (--server URL). Data goes to stdout (or -o), logs and
warnings to stderr. Exit codes: 0 ok, 1 input error, 2 contract violation.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import __version__
from .errors import ContractViolation, InputError
from .service import models
from .service.app import (
    AppState, handle_eval, handle_extract, handle_segment, handle_simplify,
    handle_stats, handle_storyboard,
)

_HANDLERS = {
    "segment": (handle_segment, models.SegmentResponse),
    "simplify": (handle_simplify, models.SimplifyResponse),
    "extract": (handle_extract, models.ExtractResponse),
    "storyboard": (handle_storyboard, models.StoryboardResponse),
    "eval": (handle_eval, models.EvalResponse),
    "stats": (handle_stats, models.StatsResponse),
}


def _dispatch(ctx_obj: dict, endpoint: str, request) -> object:
    handler, response_model = _HANDLERS[endpoint]
    server = ctx_obj.get("server")
    if server:
        import httpx

        resp = httpx.post(f"{server.rstrip('/')}/v1/{endpoint}",
                          json=request.model_dump(), timeout=120.0)
        if resp.status_code == 422:
            raise InputError(str(resp.json().get("detail", resp.text)))
        resp.raise_for_status()
        return response_model.model_validate(resp.json())
    state = ctx_obj.get("state")
    if state is None:
        state = ctx_obj["state"] = AppState.load(
            ctx_obj.get("config_path"), ctx_obj.get("lexicon_path"),
            ctx_obj.get("embeddings_path"))
    return handler(state, request)


def _emit(text: str, output: str | None):
    if output and output != "-":
        Path(output).write_text(text + ("" if text.endswith("\n") else "\n"),
                                encoding="utf-8")
    else:
        click.echo(text)


def _warn(payload: dict):
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def _read(path: str) -> str:
    p = Path(path)
    if not p.exists():
        raise InputError(f"input file not found: {path}")
    return p.read_text(encoding="utf-8")


def _overrides(paper_compat: bool, analyzers: str | None) -> models.ConfigOverrides:
    return models.ConfigOverrides(
        paper_compat=True if paper_compat else None,
        analyzer_order=analyzers.split(",") if analyzers else None,
    )


@click.group()
@click.version_option(version=__version__, message=f"scriptboard {__version__} (schema 1)")
@click.option("--config", "config_path", type=str, default=None,
              help="JSON (or TOML on 3.11+) config file")
@click.option("--lexicon", "lexicon_path", type=str, default=None,
              help="animation lexicon JSON (default: bundled)")
@click.option("--embeddings", "embeddings_path", type=str, default=None,
              help="word-vector file (default: bundled)")
@click.option("--server", type=str, default=None,
              help="route the command through a running scriptboard service")
@click.pass_context
def cli(ctx, config_path, lexicon_path, embeddings_path, server):
    ctx.obj = {"config_path": config_path, "lexicon_path": lexicon_path,
               "embeddings_path": embeddings_path, "server": server}


@cli.command()
@click.argument("script", type=str)
@click.option("-o", "--output", type=str, default=None)
@click.option("--resolved", is_flag=True, default=False,
              help="add mention-resolved text to Description blocks")
@click.option("--paper-compat", is_flag=True, default=False)
@click.pass_obj
def segment(obj, script, output, resolved, paper_compat):
    """Segment a screenplay into labeled blocks (JSON Lines)."""
    req = models.SegmentRequest(text=_read(script), resolved=resolved,
                                config=_overrides(paper_compat, None))
    resp = _dispatch(obj, "segment", req)
    _emit("\n".join(json.dumps(b.model_dump(), ensure_ascii=False)
                    for b in resp.blocks), output)
    _warn({"info": "unclassified_ratio", "value": resp.unclassified_ratio})


@cli.command()
@click.argument("parses", type=str)
@click.option("-o", "--output", type=str, default=None)
@click.option("--analyzers", type=str, default=None,
              help="comma-separated analyzer order override")
@click.pass_obj
def simplify(obj, parses, output, analyzers):
    """Simplify parsed sentences (JSON Lines)."""
    req = models.SimplifyRequest(parses=_read(parses),
                                 config=_overrides(False, analyzers))
    resp = _dispatch(obj, "simplify", req)
    _emit("\n".join(json.dumps(s.model_dump(), ensure_ascii=False)
                    for s in resp.sentences), output)


def _load_frames_file(path: str | None) -> list[models.SentenceFramesModel]:
    if not path:
        return []
    data = json.loads(_read(path))
    return [models.SentenceFramesModel.model_validate(item)
            for item in data.get("frames", [])]


@cli.command()
@click.argument("parses", type=str)
@click.option("--frames", type=str, default=None, help="SRL frames JSON")
@click.option("--paper-compat", is_flag=True, default=False,
              help="reproduce the published target/prop and mention behavior")
@click.option("-o", "--output", type=str, default=None)
@click.pass_obj
def extract(obj, parses, frames, paper_compat, output):
    """Simplify and extract action records (JSON Lines, one record per line)."""
    req = models.ExtractRequest(parses=_read(parses),
                                frames=_load_frames_file(frames),
                                config=_overrides(paper_compat, None))
    resp = _dispatch(obj, "extract", req)
    _emit("\n".join(json.dumps(r.model_dump(), ensure_ascii=False)
                    for r in resp.records), output)
    for warning in resp.warnings:
        payload = {"warning": warning.code, "sentence_index": warning.sentence_index}
        if warning.code == "unmappable_action":
            payload["lemma"] = warning.detail
        elif warning.detail:
            payload["detail"] = warning.detail
        _warn(payload)


@cli.command()
@click.argument("script", type=str)
@click.option("--parses", type=str, required=True, help="interchange parse file")
@click.option("--manifest", type=str, required=True, help="sentence-index manifest JSON")
@click.option("--frames", type=str, default=None, help="SRL frames JSON")
@click.option("--paper-compat", is_flag=True, default=False)
@click.option("-o", "--output", type=str, default=None)
@click.pass_obj
def storyboard(obj, script, parses, manifest, frames, paper_compat, output):
    """Run the whole pipeline and emit the storyboard JSON."""
    req = models.StoryboardRequest(
        script=_read(script), parses=_read(parses),
        manifest=json.loads(_read(manifest)),
        frames=_load_frames_file(frames),
        config=_overrides(paper_compat, None))
    resp = _dispatch(obj, "storyboard", req)
    _emit(json.dumps(resp.model_dump(), indent=2, sort_keys=True,
                     ensure_ascii=False), output)
    for warning in resp.warnings:
        _warn({"warning": warning.code, "sentence_index": warning.sentence_index,
               "detail": warning.detail})


def _read_jsonl_texts(path: str) -> list[str]:
    texts = []
    for line in _read(path).splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        texts.append(obj["text"] if isinstance(obj, dict) else str(obj))
    return texts


def _read_jsonl_records(path: str) -> list[dict]:
    return [json.loads(line) for line in _read(path).splitlines() if line.strip()]


@cli.command(name="eval")
@click.argument("hypotheses", type=str)
@click.argument("references", type=str, nargs=3)
@click.option("--sources", type=str, default=None,
              help="source sentences JSONL (enables SARI)")
@click.option("--arf-system", type=str, default=None, help="system ARF JSONL")
@click.option("--arf-gold", type=str, default=None, help="gold ARF JSONL")
@click.option("--max-n", type=int, default=4, show_default=True)
@click.option("--smoothing", is_flag=True, default=False,
              help="add-one smoothing for tiny corpora")
@click.option("-o", "--output", type=str, default=None)
@click.pass_obj
def eval_cmd(obj, hypotheses, references, sources, arf_system, arf_gold,
             max_n, smoothing, output):
    """Align hypotheses to three annotator reference files and score them."""
    req = models.EvalRequest(
        hypotheses=_read_jsonl_texts(hypotheses),
        references=[_read_jsonl_texts(r) for r in references],
        sources=_read_jsonl_texts(sources) if sources else None,
        max_n=max_n, smoothing=smoothing,
        arf_system=_read_jsonl_records(arf_system) if arf_system else [],
        arf_gold=_read_jsonl_records(arf_gold) if arf_gold else [])
    resp = _dispatch(obj, "eval", req)
    _emit(json.dumps(resp.model_dump(), indent=2, sort_keys=True), output)
    lines = [f"{'BLEU':<20}{resp.bleu:10.2f}"]
    if resp.sari is not None:
        lines.append(f"{'SARI':<20}{resp.sari:10.2f}")
    for name, value in resp.per_field_bleu1.items():
        lines.append(f"{'BLEU1 ' + name:<20}{value:10.2f}")
    for name, prf in resp.boolean_field_prf.items():
        lines.append(f"{name:<20}P {prf.precision:6.2f}  R {prf.recall:6.2f}  "
                     f"F1 {prf.f1:6.2f}")
    print("\n".join(lines), file=sys.stderr)


@cli.command()
@click.argument("script", type=str)
@click.option("-o", "--output", type=str, default=None)
@click.pass_obj
def stats(obj, script, output):
    """Corpus statistics over Description blocks (JSON)."""
    resp = _dispatch(obj, "stats", models.StatsRequest(text=_read(script)))
    _emit(json.dumps(resp.model_dump(), indent=2, sort_keys=True), output)


@cli.command()
@click.option("--host", type=str, default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8940, show_default=True)
@click.pass_obj
def serve(obj, host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    app = create_app(obj.get("config_path"), obj.get("lexicon_path"),
                     obj.get("embeddings_path"))
    uvicorn.run(app, host=host, port=port, log_level="warning")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except ContractViolation as exc:
        _warn({"error": "contract_violation", "detail": str(exc)})
        return 2
    except InputError as exc:
        _warn({"error": "input_error", "detail": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
