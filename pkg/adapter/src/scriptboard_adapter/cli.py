"""scriptboard-adapter: offline parse/SRL/lexicon export CLI."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import __version__
from .backends import BackendError, resolve_backend
from .heuristic import SENTENCE_SPLIT
from .lexicon_export import export_lexicon
from .srl import frames_for_sentence


def split_with_spans(text: str) -> list[tuple[str, int, int]]:
    """Sentences with inclusive character spans into the source text."""
    spans = []
    start = 0
    for match in SENTENCE_SPLIT.finditer(text):
        chunk = text[start:match.start()]
        if chunk.strip():
            spans.append((chunk.strip(), start, match.start() - 1))
        start = match.end()
    tail = text[start:]
    if tail.strip():
        spans.append((tail.strip(), start, len(text) - 1))
    return spans


def _clean_text(block: dict) -> str:
    if block.get("resolved_text"):
        return block["resolved_text"]
    return " ".join(line.strip() for line in block.get("text", "").split("\n")
                    if line.strip())


def _rows_to_conllx(rows: list[tuple]) -> str:
    lines = ["\t".join([str(r[0]), r[1], r[2], r[3], r[4], r[5], str(r[6]),
                        "_", "_", "_"]) for r in rows]
    return "\n".join(lines) + "\n"


@click.group()
@click.version_option(version=__version__, prog_name="scriptboard-adapter")
def cli():
    """Offline preprocessing for the scriptboard pipeline."""


@cli.command()
@click.option("--blocks", "blocks_path", required=True,
              help="block JSONL produced by the core's segment command")
@click.option("-o", "--output", "output_path", required=True,
              help="interchange parse file to write")
@click.option("--manifest", "manifest_path", required=True,
              help="sentence-index manifest JSON to write")
@click.option("--backend", type=click.Choice(["auto", "spacy", "heuristic"]),
              default="auto", show_default=True)
@click.option("--model", default="en_core_web_sm", show_default=True)
def parse(blocks_path, output_path, manifest_path, backend, model):
    """Parse every Description sentence; emit parses plus the manifest."""
    backend_name, parse_fn, model_used = resolve_backend(backend, model)
    blocks = [json.loads(line) for line in
              Path(blocks_path).read_text(encoding="utf-8").splitlines()
              if line.strip()]
    sentences = []
    entries = []
    sentence_index = 0
    for block_index, block in enumerate(blocks):
        if block.get("kind") != "Description":
            continue
        text = _clean_text(block)
        for sentence, start, end in split_with_spans(text):
            sentences.append(sentence)
            entries.append({"block_index": block_index,
                            "sentence_index": sentence_index,
                            "char_span": [start, end]})
            sentence_index += 1
    parsed = [_rows_to_conllx(parse_fn(s)) for s in sentences]
    Path(output_path).write_text("\n".join(parsed), encoding="utf-8")
    manifest = {"tool": "scriptboard-adapter", "version": __version__,
                "backend": backend_name, "model": model_used, "entries": entries}
    Path(manifest_path).write_text(json.dumps(manifest, indent=2) + "\n",
                                   encoding="utf-8")
    click.echo(f"parsed {len(sentences)} sentences from {sum(1 for b in blocks if b.get('kind') == 'Description')} "
               f"Description blocks with the {backend_name} backend", err=True)


@cli.command()
@click.option("--simplified", "simplified_path", required=True,
              help="simplified-sentence JSONL from the core's simplify command")
@click.option("-o", "--output", "output_path", required=True,
              help="frames JSON to write")
@click.option("--backend", type=click.Choice(["auto", "spacy", "heuristic"]),
              default="auto", show_default=True)
@click.option("--model", default="en_core_web_sm", show_default=True)
def srl(simplified_path, output_path, backend, model):
    """Derive role frames for each simplified sentence."""
    _name, parse_fn, _model = resolve_backend(backend, model)
    items = []
    seen = set()
    for line in Path(simplified_path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        text = obj["text"] if isinstance(obj, dict) else str(obj)
        if text in seen:
            continue
        seen.add(text)
        items.append({"text": text, "frames": frames_for_sentence(parse_fn(text))})
    Path(output_path).write_text(json.dumps({"frames": items}, indent=2) + "\n",
                                 encoding="utf-8")
    click.echo(f"wrote frames for {len(items)} sentences", err=True)


@cli.command()
@click.option("--animations", "animations_path", required=True,
              help="JSON list of canonical animation lemmas")
@click.option("-o", "--output", "output_path", required=True)
@click.option("--source", type=click.Choice(["auto", "wordnet", "bundled"]),
              default="auto", show_default=True)
def lexicon(animations_path, output_path, source):
    """Export the lexical-resource JSON (synonyms/antonyms/hypernyms/holonyms)."""
    result = export_lexicon(animations_path, output_path, source)
    click.echo(f"lexicon written from the {result['source']} dictionary "
               f"({len(result['animations'])} animations, "
               f"{len(result['synonyms'])} synonyms)", err=True)


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except BackendError as exc:
        print(json.dumps({"error": "backend", "detail": str(exc)}), file=sys.stderr)
        return 1
    except (OSError, RuntimeError, ValueError) as exc:
        print(json.dumps({"error": "input", "detail": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
