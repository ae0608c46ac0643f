"""End-to-end pipeline: screenplay text + parse files -> storyboard JSON.

segment -> prepend cues -> resolve mentions -> simplify -> map to the
knowledge base -> extract action records -> sequence the scene clock.
Deterministic given identical inputs and config; all warnings are
machine-readable and carry the offending sentence index.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import __version__, SCHEMA_VERSION
from .arf import ActionRecord, SrlFrame, extract, sequence_clock
from .config import Config
from .deptree import DepTree, load_parsed
from .errors import InputError
from .lexmap import EmbeddingTable, Lexicon
from .script_parser import (
    CHARACTER_CUE, DESCRIPTION, HEADING, ScriptBlock, character_registry,
    cue_name, resolve_mentions, segment, split_sentences,
)
from .simplifier import normalize_text, simplify


@dataclass
class ManifestEntry:
    block_index: int
    sentence_index: int
    char_span: tuple[int, int]


@dataclass
class Manifest:
    entries: list[ManifestEntry]
    header: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict) -> "Manifest":
        entries = []
        for raw in data.get("entries", []):
            span = raw.get("char_span", [0, 0])
            entries.append(ManifestEntry(int(raw["block_index"]),
                                         int(raw["sentence_index"]),
                                         (int(span[0]), int(span[1]))))
        entries.sort(key=lambda e: e.sentence_index)
        header = {k: v for k, v in data.items() if k != "entries"}
        return cls(entries, header)


@dataclass
class SceneActions:
    scene_index: int
    heading_text: str
    actions: list[ActionRecord] = field(default_factory=list)


@dataclass
class Storyboard:
    scenes: list[SceneActions]
    warnings: list[dict]
    provenance: dict

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "provenance": self.provenance,
            "scenes": [{
                "scene_index": scene.scene_index,
                "heading_text": scene.heading_text,
                "actions": [a.to_dict() for a in scene.actions],
            } for scene in self.scenes],
            "warnings": self.warnings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def resolved_descriptions(blocks: list[ScriptBlock], config: Config) -> list[tuple[int, str]]:
    """(block_index, mention-resolved clean text) for every Description."""
    registry = character_registry(blocks)
    style = "bare" if config.paper_compat else "clitic"
    out = []
    for idx, block in enumerate(blocks):
        if block.kind != DESCRIPTION:
            continue
        cue = ""
        for prev in reversed(blocks[:idx]):
            if prev.scene_index != block.scene_index:
                break
            if prev.kind == CHARACTER_CUE:
                cue = cue_name(prev.text)
                break
        out.append((idx, resolve_mentions(block.clean_text(), cue, registry,
                                          possessive_style=style)))
    return out


def load_frames(data: dict | None) -> dict[str, list[SrlFrame]]:
    """Frames keyed by normalized simplified-sentence text."""
    table: dict[str, list[SrlFrame]] = {}
    if not data:
        return table
    for item in data.get("frames", []):
        frames = [SrlFrame.from_dict(f) for f in item.get("frames", [])]
        table[normalize_text(item["text"])] = frames
    return table


def _validate_manifest(manifest: Manifest, blocks: list[ScriptBlock],
                       descriptions: list[tuple[int, str]],
                       trees: list[DepTree]) -> None:
    expected_idx = 0
    for entry in manifest.entries:
        if entry.sentence_index != expected_idx:
            raise InputError(f"manifest mismatch at sentence index {expected_idx}: "
                             f"found {entry.sentence_index}")
        expected_idx += 1
        if not 0 <= entry.block_index < len(blocks):
            raise InputError(f"manifest sentence {entry.sentence_index} names "
                             f"unknown block {entry.block_index}")
        if blocks[entry.block_index].kind != DESCRIPTION:
            raise InputError(f"manifest sentence {entry.sentence_index} maps to a "
                             f"{blocks[entry.block_index].kind} block")
    if len(manifest.entries) != len(trees):
        raise InputError(f"manifest mismatch at sentence index "
                         f"{min(len(manifest.entries), len(trees))}: manifest has "
                         f"{len(manifest.entries)} sentences, parse file has {len(trees)}")
    per_block: dict[int, int] = {}
    for entry in manifest.entries:
        per_block[entry.block_index] = per_block.get(entry.block_index, 0) + 1
    for block_index, text in descriptions:
        want = len(split_sentences(text))
        have = per_block.get(block_index, 0)
        if want != have:
            first = next(e.sentence_index for e in manifest.entries
                         if e.block_index == block_index) if have else -1
            raise InputError(f"manifest mismatch for block {block_index} (first "
                             f"sentence index {first}): block has {want} sentences, "
                             f"manifest lists {have}")


def run_pipeline(script_text: str, parses_text: str, manifest_data: dict,
                 frames_data: dict | None, lexicon: Lexicon, table: EmbeddingTable,
                 config: Config | None = None) -> Storyboard:
    config = config or Config()
    blocks = segment(script_text, config)
    descriptions = resolved_descriptions(blocks, config)
    trees = load_parsed(parses_text)
    manifest = Manifest.from_dict(manifest_data)
    _validate_manifest(manifest, blocks, descriptions, trees)
    frame_table = load_frames(frames_data)

    warnings: list[dict] = []
    scene_blocks: dict[int, SceneActions] = {}
    for block in blocks:
        if block.kind == HEADING and block.scene_index not in scene_blocks:
            scene_blocks[block.scene_index] = SceneActions(block.scene_index,
                                                           block.clean_text())
    scene_clocks: dict[int, float] = {}
    by_block: dict[int, list[int]] = {}
    for entry in manifest.entries:
        by_block.setdefault(entry.block_index, []).append(entry.sentence_index)

    for block_index, _text in descriptions:
        sentence_indexes = by_block.get(block_index, [])
        block = blocks[block_index]
        scene = scene_blocks.setdefault(block.scene_index,
                                        SceneActions(block.scene_index, ""))
        records: list[ActionRecord] = []
        for sentence_index in sentence_indexes:
            for simple in simplify(trees[sentence_index], config):
                frames = frame_table.get(normalize_text(simple.text), [])
                try:
                    record = extract(simple, frames, lexicon, table, config)
                except InputError as exc:
                    warnings.append({"code": "extraction_failed",
                                     "sentence_index": sentence_index,
                                     "detail": str(exc)})
                    continue
                for code in record.warnings:
                    detail = record.action if code == "unmappable_action" else simple.text
                    warnings.append({"code": code, "sentence_index": sentence_index,
                                     "detail": detail})
                if not record.owner:
                    warnings.append({"code": "missing_owner",
                                     "sentence_index": sentence_index,
                                     "detail": simple.text})
                records.append(record)
        clock = scene_clocks.get(block.scene_index, 0.0)
        scene_clocks[block.scene_index] = sequence_clock(records, clock)
        scene.actions.extend(records)

    for scene in scene_blocks.values():
        scene.actions.sort(key=lambda r: (r.start_time, r.partial_start_time))
    scenes = [scene_blocks[k] for k in sorted(scene_blocks)]
    provenance = {
        "input_sha256": hashlib.sha256(script_text.encode("utf-8")).hexdigest(),
        "config_sha256": config.hash(),
        "tool_version": __version__,
    }
    return Storyboard(scenes=scenes, warnings=warnings, provenance=provenance)
