"""Map verbs/nouns onto the animation knowledge base.

Cascade for actions: exact -> synonym -> embedding similarity (antonyms
excluded) -> verb+prep / verb+object compound keys -> hypernym chain ->
unmapped. Objects: exact -> similarity -> holonym chain -> unmapped.
Unmapped is a value, not an error; the pipeline turns it into a warning.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InputError

EXACT = "exact"
SYNONYM = "synonym"
SIMILARITY = "similarity"
VERB_PLUS_PREP = "verb_plus_prep"
VERB_PLUS_OBJECT = "verb_plus_object"
HYPERNYM = "hypernym"
HOLONYM = "holonym"
UNMAPPED = "unmapped"


class EmbeddingTable:
    """Word vectors in the text format: header "<count> <dim>", then rows."""

    def __init__(self, vectors: dict[str, np.ndarray], dim: int):
        self.vectors = vectors
        self.dim = dim
        for word, vec in vectors.items():
            if vec.shape != (dim,):
                raise InputError(f"vector for {word!r} has dimension {vec.shape}, expected {dim}")
            if not np.linalg.norm(vec) > 0:
                raise InputError(f"vector for {word!r} has zero norm")

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    @classmethod
    def load(cls, path: str | Path) -> "EmbeddingTable":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not lines:
            raise InputError(f"empty embedding file: {path}")
        try:
            count, dim = map(int, lines[0].split())
        except ValueError as exc:
            raise InputError(f"bad embedding header {lines[0]!r} in {path}") from exc
        vectors = {}
        for line in lines[1:]:
            if not line.strip():
                continue
            parts = line.split()
            word, values = parts[0], parts[1:]
            if len(values) != dim:
                raise InputError(f"vector for {word!r} has {len(values)} values, expected {dim}")
            vectors[word] = np.asarray([float(v) for v in values], dtype=np.float64)
        if len(vectors) != count:
            raise InputError(f"embedding header promised {count} words, file has {len(vectors)}")
        return cls(vectors, dim)

    @classmethod
    def empty(cls, dim: int = 50) -> "EmbeddingTable":
        return cls({}, dim)


def similarity(w1: str, w2: str, table: EmbeddingTable) -> float:
    """Cosine similarity; 0.0 for out-of-vocabulary words."""
    if w1 not in table or w2 not in table:
        return 0.0
    a, b = table.vectors[w1], table.vectors[w2]
    value = float(np.dot(a, b) / (np.linalg.norm(a) * np.linalg.norm(b)))
    return max(-1.0, min(1.0, value))


@dataclass
class Lexicon:
    animations: set[str] = field(default_factory=set)
    synonyms: dict[str, str] = field(default_factory=dict)
    antonyms: dict[str, set[str]] = field(default_factory=dict)
    hypernyms: dict[str, list[str]] = field(default_factory=dict)
    holonyms: dict[str, list[str]] = field(default_factory=dict)
    objects: set[str] = field(default_factory=set)

    def __post_init__(self):
        for src, dst in self.synonyms.items():
            if dst not in self.animations:
                raise InputError(f"synonym {src!r} -> {dst!r} targets a non-animation")
        for word, opposites in self.antonyms.items():
            for opp in opposites:
                if word not in self.antonyms.get(opp, set()):
                    raise InputError(f"antonym relation not symmetric: {word!r} / {opp!r}")

    @property
    def known_actions(self) -> set[str]:
        """The expanded action vocabulary (animations plus synonym keys)."""
        return self.animations | set(self.synonyms)

    @classmethod
    def load(cls, path: str | Path) -> "Lexicon":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid lexicon JSON {path}: {exc}") from exc
        return cls(
            animations=set(data.get("animations", [])),
            synonyms=dict(data.get("synonyms", {})),
            antonyms={k: set(v) for k, v in data.get("antonyms", {}).items()},
            hypernyms={k: list(v) for k, v in data.get("hypernyms", {}).items()},
            holonyms={k: list(v) for k, v in data.get("holonyms", {}).items()},
            objects=set(data.get("objects", [])),
        )


@dataclass
class MappingResult:
    query: str
    matched: str | None
    score: float
    method: str

    def to_dict(self) -> dict:
        return {"query": self.query, "matched": self.matched,
                "score": self.score, "method": self.method}


def _nearest(query: str, candidates: set[str], table: EmbeddingTable,
             threshold: float) -> tuple[str, float] | None:
    best: tuple[float, str] | None = None
    for cand in sorted(candidates):  # lexicographic tie-break
        score = similarity(query, cand, table)
        if best is None or score > best[0] + 1e-12:
            best = (score, cand)
    if best is not None and best[0] >= threshold and not math.isclose(best[0], 0.0):
        return best[1], best[0]
    return None


def _score_for(query: str, matched: str, table: EmbeddingTable, default: float = 1.0) -> float:
    if query in table and matched in table:
        return similarity(query, matched, table)
    return default


def map_action(verb: str, prep: str | None, obj: str | None,
               lexicon: Lexicon, table: EmbeddingTable,
               tau_act: float = 0.55) -> MappingResult:
    verb = verb.lower()
    banned = lexicon.antonyms.get(verb, set())

    if verb in lexicon.animations and verb not in banned:
        return MappingResult(verb, verb, 1.0, EXACT)
    syn = lexicon.synonyms.get(verb)
    if syn is not None and syn not in banned:
        return MappingResult(verb, syn, _score_for(verb, syn, table), SYNONYM)
    hit = _nearest(verb, lexicon.animations - banned, table, tau_act)
    if hit is not None:
        return MappingResult(verb, hit[0], hit[1], SIMILARITY)
    for extra, method in ((prep, VERB_PLUS_PREP), (obj, VERB_PLUS_OBJECT)):
        if not extra:
            continue
        compound = f"{verb}_{extra.lower()}"
        if compound in lexicon.animations:
            return MappingResult(verb, compound, 1.0, method)
        syn = lexicon.synonyms.get(compound)
        if syn is not None and syn not in banned:
            return MappingResult(verb, syn, _score_for(compound, syn, table), method)
        hit = _nearest(compound, lexicon.animations - banned, table, tau_act)
        if hit is not None:
            return MappingResult(verb, hit[0], hit[1], method)
    for hyper in lexicon.hypernyms.get(verb, []):
        if hyper in banned:
            continue
        if hyper in lexicon.animations:
            return MappingResult(verb, hyper, _score_for(verb, hyper, table), HYPERNYM)
        syn = lexicon.synonyms.get(hyper)
        if syn is not None and syn not in banned:
            return MappingResult(verb, syn, _score_for(verb, syn, table), HYPERNYM)
    return MappingResult(verb, None, 0.0, UNMAPPED)


def map_object(noun: str, lexicon: Lexicon, table: EmbeddingTable,
               tau_obj: float = 0.55) -> MappingResult:
    noun = noun.lower()
    if noun in lexicon.objects:
        return MappingResult(noun, noun, 1.0, EXACT)
    hit = _nearest(noun, lexicon.objects, table, tau_obj)
    if hit is not None:
        return MappingResult(noun, hit[0], hit[1], SIMILARITY)
    for holo in lexicon.holonyms.get(noun, []):
        if holo in lexicon.objects:
            return MappingResult(noun, holo, _score_for(noun, holo, table), HOLONYM)
    return MappingResult(noun, None, 0.0, UNMAPPED)
