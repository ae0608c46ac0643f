"""Recursive simplification controller: BFS queue with a seen-hash set.

Pops a sentence, lets the first matching analyzer perform one transform,
tense-corrects and re-queues the outputs, and emits sentences no analyzer
matches. Results are deduplicated, filtered, and ordered by temporal id.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .analyzers import ANALYZERS, temporal_shift  # noqa: F401  (re-exported)
from .config import Config
from .deptree import DepTree, correct_verb_tense
from .errors import ContractViolation

_TERMINAL_PUNCT = ".!?,;:"


def normalize_text(text: str) -> str:
    """Seen-hash / dedup key: lowercase, collapse whitespace, strip terminal punctuation."""
    text = text.strip().lower()
    text = re.sub(r"\s+", " ", text)
    return text.rstrip(_TERMINAL_PUNCT + " ")


@dataclass
class SimplifiedSentence:
    text: str
    tree: DepTree
    temporal_id: int


def _tense_corrected(tree: DepTree) -> DepTree:
    root = tree.tokens[tree.root_id]
    if root.coarse_pos in ("VERB", "AUX"):
        return correct_verb_tense(tree, tree.root_id)
    return tree


def _has_content(tree: DepTree) -> bool:
    """A non-copular verb, or a complement (object/attribute) on some token."""
    attached = [tree.tokens[i] for i in tree.subtree_ids(tree.root_id)]
    for tok in attached:
        if tok.coarse_pos == "VERB" and (tok.lemma or tok.text).lower() != "be":
            return True
    for tok in attached:
        if tok.dep in ("attr", "acomp", "dobj", "prep", "ccomp", "xcomp"):
            return True
    return False


_REALIZED_TOKEN = re.compile(r"[\w'&-]+|[.,!?;:]")


def filter_sentences(sentences: list[SimplifiedSentence]) -> list[SimplifiedSentence]:
    """Drop degenerate outputs: too short (counting tokens of the realized
    sentence, terminal punctuation included), contentless, or duplicated."""
    kept = []
    seen: set[str] = set()
    for sent in sentences:
        if len(_REALIZED_TOKEN.findall(sent.text)) < 3:
            continue
        if not _has_content(sent.tree):
            continue
        key = normalize_text(sent.text)
        if key in seen:
            continue
        seen.add(key)
        kept.append(sent)
    return kept


def simplify(sentence: DepTree, config: Config | None = None,
             temporal_id: int = 0) -> list[SimplifiedSentence]:
    """Reduce one parsed sentence to simple sentences with temporal ids."""
    config = config or Config()
    analyzers = [(name, *ANALYZERS[name]) for name in config.analyzer_order]
    queue: deque[tuple[DepTree, int]] = deque()
    seen: set[str] = set()
    results: list[tuple[DepTree, int]] = []
    pushes = 0
    queue.append((sentence, temporal_id))
    while queue:
        tree, tid = queue.popleft()
        key = normalize_text(tree.realize())
        if key in seen:
            results.append((tree, tid))
            continue
        seen.add(key)
        transformed = False
        for _name, identify, transform in analyzers:
            if not transformed and identify(tree):
                transformed = True
                outputs = transform(tree)
                if not outputs:  # defensive: never lose the sentence
                    transformed = False
                    continue
                for out_tree, delta in outputs:
                    out_tree = _tense_corrected(out_tree)
                    pushes += 1
                    if pushes > config.push_budget:
                        raise ContractViolation(
                            f"simplification exceeded the push budget "
                            f"({config.push_budget}) on: {sentence.realize()!r}")
                    queue.append((out_tree, tid + delta))
        if not transformed:
            results.append((tree, tid))
    sentences = [SimplifiedSentence(tree.realize(), tree, tid) for tree, tid in results]
    sentences = filter_sentences(sentences)
    sentences.sort(key=lambda s: s.temporal_id)  # stable: emission order breaks ties
    return sentences
