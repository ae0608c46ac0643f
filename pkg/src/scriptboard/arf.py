"""Action Representation Field extraction from simplified sentences.

Role frames (when the adapter supplies them) drive the textual fields;
otherwise dependency labels do. Timing, motion, and emotion fields come
from configured word lists and embedding similarity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import Config
from .deptree import DepTree
from .errors import InputError
from .lexmap import EmbeddingTable, Lexicon, MappingResult, map_action, similarity
from .simplifier import SimplifiedSentence

ARF_FIELDS = [
    "owner", "target", "prop", "action", "origin_action", "manner",
    "modifier_location", "modifier_direction", "start_time", "duration",
    "speed", "translation", "rotation", "emotion", "partial_start_time",
]


@dataclass
class SrlFrame:
    verb_index: int
    roles: dict[str, tuple[int, int]]

    @classmethod
    def from_dict(cls, data: dict) -> "SrlFrame":
        roles = {}
        for label, span in data.get("roles", {}).items():
            if not (isinstance(span, (list, tuple)) and len(span) == 2 and span[0] <= span[1]):
                raise InputError(f"bad role span for {label}: {span!r}")
            roles[label] = (int(span[0]), int(span[1]))
        return cls(verb_index=int(data["verb_index"]), roles=roles)


@dataclass
class ActionRecord:
    owner: str = ""
    target: str = ""
    prop: str = ""
    action: str = ""
    origin_action: str = ""
    manner: str = ""
    modifier_location: str = ""
    modifier_direction: str = ""
    start_time: float = 0.0
    duration: int = 2
    speed: float = 1.0
    translation: bool = False
    rotation: bool = False
    emotion: str | None = None
    partial_start_time: int = 0
    # not part of the ARF field list; carried for the storyboard layer
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in ARF_FIELDS}


def duration_of(lemmas: list[str], config: Config) -> int:
    """1s for fast-list words, 4s for slow-list words (fast wins), else 2s."""
    words = {w.lower() for w in lemmas}
    if words & set(config.duration_fast):
        return 1
    if words & set(config.duration_slow):
        return 4
    return 2


def speed_of(lemmas: list[str], config: Config) -> float:
    words = {w.lower() for w in lemmas}
    if words & set(config.speed_fast):
        return 2.0
    if words & set(config.speed_slow):
        return 0.5
    return 1.0


def motion_flags(action: str, config: Config) -> tuple[bool, bool]:
    return action in config.translation_verbs, action in config.rotation_verbs


def emotion_of(lemmas: list[str], emotion_words: list[str],
               table: EmbeddingTable, threshold: float) -> str | None:
    """Best (sentence word, emotion word) cosine; None below threshold."""
    best_word, best_score = None, 0.0
    for emotion in emotion_words:
        for lemma in lemmas:
            lemma = lemma.lower()
            score = 1.0 if lemma == emotion else similarity(lemma, emotion, table)
            if score > best_score + 1e-12:
                best_word, best_score = emotion, score
    if best_word is not None and best_score >= threshold:
        return best_word
    return None


def _span_text(tree: DepTree, span: tuple[int, int]) -> str:
    ids = [i for i in sorted(tree.tokens) if span[0] <= i <= span[1]]
    return " ".join(tree.tokens[i].text for i in ids)


def _subtree_text(tree: DepTree, tid: int) -> str:
    return " ".join(tree.tokens[i].text for i in tree.subtree_ids(tid)
                    if tree.tokens[i].coarse_pos != "PUNCT")


def _find_verb(tree: DepTree) -> int | None:
    root = tree.tokens[tree.root_id]
    if root.coarse_pos in ("VERB", "AUX"):
        return root.id
    for tid in tree.subtree_ids(tree.root_id):
        if tree.tokens[tid].coarse_pos == "VERB":
            return tid
    return None


def _content_lemmas(tree: DepTree) -> list[str]:
    return [(t.lemma or t.text).lower()
            for t in tree.tokens.values() if t.coarse_pos != "PUNCT"]


def _assign_target_prop(record: ActionRecord, patient: str, recipient: str,
                        paper_compat: bool):
    """Patient (ARG1/dobj) and recipient (ARG2/first prep complement).

    Paper-compat keeps the printed assignment (patient -> target); the
    corrected default swaps them when both are present, so the recipient
    is the target and the manipulated thing the prop.
    """
    if paper_compat or not recipient:
        record.target, record.prop = patient, recipient
    else:
        record.target, record.prop = recipient, patient


def extract(sentence: SimplifiedSentence, frames: list[SrlFrame],
            lexicon: Lexicon, table: EmbeddingTable, config: Config | None = None,
            scene_clock: float = 0.0) -> ActionRecord:
    """Populate one ActionRecord from a fixpoint sentence."""
    config = config or Config()
    tree = sentence.tree
    verb_id = _find_verb(tree)
    if verb_id is None:
        raise InputError(f"no verb in simplified sentence: {sentence.text!r} "
                         "(escaped the filter)")
    record = ActionRecord(partial_start_time=sentence.temporal_id, start_time=scene_clock)
    verb = tree.tokens[verb_id]
    record.origin_action = verb.text

    patient = recipient = ""
    if frames:
        frame = next((f for f in frames if f.verb_index == verb_id), frames[0])
        roles = frame.roles
        record.owner = _span_text(tree, roles["ARG0"]) if "ARG0" in roles else ""
        patient = _span_text(tree, roles["ARG1"]) if "ARG1" in roles else ""
        recipient = _span_text(tree, roles["ARG2"]) if "ARG2" in roles else ""
        record.manner = _span_text(tree, roles["ARGM-MNR"]) if "ARGM-MNR" in roles else ""
        record.modifier_location = _span_text(tree, roles["ARGM-LOC"]) if "ARGM-LOC" in roles else ""
        record.modifier_direction = _span_text(tree, roles["ARGM-DIR"]) if "ARGM-DIR" in roles else ""
    else:
        subj = tree.child_by_dep(verb_id, "nsubj", "nsubjpass")
        if subj is not None:
            record.owner = _subtree_text(tree, subj)
        obj = tree.child_by_dep(verb_id, "dobj")
        if obj is not None:
            patient = _subtree_text(tree, obj)
        for kid in tree.children(verb_id):
            tok = tree.tokens[kid]
            if tok.dep == "advmod" and tok.coarse_pos == "ADV" and not record.manner:
                record.manner = tok.text
            if tok.dep != "prep":
                continue
            phrase = _subtree_text(tree, kid)
            lemma = (tok.lemma or tok.text).lower()
            if lemma in config.locative_preps and not record.modifier_location:
                record.modifier_location = phrase
            elif lemma in config.directional_preps and not record.modifier_direction:
                record.modifier_direction = phrase
            elif not recipient:
                recipient = phrase
    _assign_target_prop(record, patient, recipient, config.paper_compat)

    prep_kid = tree.child_by_dep(verb_id, "prep")
    prep_lemma = (tree.tokens[prep_kid].lemma if prep_kid is not None else None)
    obj_kid = tree.child_by_dep(verb_id, "dobj")
    obj_lemma = (tree.tokens[obj_kid].lemma if obj_kid is not None else None)
    mapping: MappingResult = map_action((verb.lemma or verb.text).lower(), prep_lemma,
                                        obj_lemma, lexicon, table, config.tau_act)
    if mapping.matched is None:
        record.action = (verb.lemma or verb.text).lower()
        record.warnings.append("unmappable_action")
    else:
        record.action = mapping.matched

    lemmas = _content_lemmas(tree)
    record.duration = duration_of(lemmas, config)
    record.speed = speed_of(lemmas, config)
    record.translation, record.rotation = motion_flags(record.action, config)
    record.emotion = emotion_of(lemmas, config.emotion_words, table,
                                config.emotion_threshold)
    return record


def sequence_clock(records: list[ActionRecord], scene_clock: float = 0.0) -> float:
    """Fill start_time: equal temporal ids run in parallel; each later id
    starts when the longest action of the previous id ends. Returns the
    clock after the last group (for accumulating across Descriptions)."""
    if not records:
        return scene_clock
    ordered = sorted(records, key=lambda r: r.partial_start_time)
    clock = scene_clock
    group_id = ordered[0].partial_start_time
    group_end = clock
    for record in ordered:
        if record.partial_start_time != group_id:
            clock = group_end
            group_id = record.partial_start_time
        record.start_time = clock
        group_end = max(group_end, clock + record.duration)
    return group_end
