"""Screenplay segmentation: FSM over paragraphs, cue prepending, mention resolution.

A paragraph is one or more consecutive non-blank lines sharing an
indentation class; a blank line or an indentation change starts a new
paragraph. Every paragraph receives exactly one component kind; nothing
is ever dropped (unmatched uppercase structure lines become Unclassified).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .config import Config
from .deptree import derive_lemma
from .errors import ContractViolation

# component kinds
HEADING = "Heading"
DESCRIPTION = "Description"
CHARACTER_CUE = "CharacterCue"
DIALOG = "Dialog"
SLUG_LINE = "SlugLine"
TRANSITION = "Transition"
UNCLASSIFIED = "Unclassified"

KINDS = {HEADING, DESCRIPTION, CHARACTER_CUE, DIALOG, SLUG_LINE, TRANSITION, UNCLASSIFIED}

# FSM states: the kinds plus Start and End
START = "Start"
END = "End"


@dataclass
class ScriptBlock:
    text: str
    kind: str
    indent: int
    start_line: int
    end_line: int
    scene_index: int

    def clean_text(self) -> str:
        return " ".join(line.strip() for line in self.text.split("\n") if line.strip())

    def to_dict(self) -> dict:
        return {"kind": self.kind, "text": self.text, "indent": self.indent,
                "start_line": self.start_line, "end_line": self.end_line,
                "scene_index": self.scene_index}


@dataclass
class FsmContext:
    most_frequent_indent: int = 0
    last_indent: int = 0
    open_parenthetical: bool = False
    config: Config = field(default_factory=Config)


def _indent_of(line: str) -> int:
    count = 0
    for ch in line:
        if ch == " ":
            count += 1
        elif ch == "\t":
            count += 4
        else:
            break
    return count


def _is_upper(text: str) -> bool:
    stripped = text.strip()
    return any(ch.isalpha() for ch in stripped) and stripped.upper() == stripped


def _contains_keyword(text: str, keywords: list[str]) -> bool:
    for kw in keywords:
        if re.search(r"(?<![A-Za-z])" + re.escape(kw) + r"(?![A-Za-z])", text):
            return True
    return False


def rule_fires(rule_id: int, paragraph: str, context: FsmContext) -> bool:
    """Pure transition-rule predicate, rules 1..7."""
    cfg = context.config
    text = paragraph.strip()
    if rule_id == 1:
        return _is_upper(text) and _contains_keyword(text, cfg.heading_words)
    if rule_id == 2:
        if not _is_upper(text):
            return False
        return (_contains_keyword(text, cfg.character_markers)
                or _indent_of(paragraph) > context.most_frequent_indent)
    if rule_id == 3:
        return text.startswith("(")
    if rule_id == 4:
        return text.endswith(")")
    if rule_id == 5:
        return abs(context.last_indent - _indent_of(paragraph)) < 3
    if rule_id == 6:
        return _is_upper(text) and _contains_keyword(text, cfg.transition_words)
    if rule_id == 7:
        return text == "THE END"
    raise ContractViolation(f"unknown FSM rule id {rule_id}")


def _next_state(state: str, paragraph: str, context: FsmContext) -> str:
    """Total transition function; keyword rules before the indent rule.

    Rule 2's marker clause also fires on cue lines like "MARTHA (CONT'D)"
    that rule 3 would misread, so cue detection precedes the parenthetical
    rules. Rule 4 only continues an unclosed multi-paragraph parenthetical.
    """
    if rule_fires(7, paragraph, context):
        return END
    if rule_fires(1, paragraph, context):
        return HEADING
    if rule_fires(6, paragraph, context):
        return TRANSITION
    if rule_fires(2, paragraph, context):
        return CHARACTER_CUE
    if rule_fires(3, paragraph, context):
        return SLUG_LINE
    if state == SLUG_LINE and context.open_parenthetical and rule_fires(4, paragraph, context):
        return SLUG_LINE
    if state in (CHARACTER_CUE, SLUG_LINE):
        return DIALOG
    if state == DIALOG and rule_fires(5, paragraph, context):
        return DIALOG
    if _is_upper(paragraph):
        return UNCLASSIFIED
    return DESCRIPTION


_STATE_TO_KIND = {HEADING: HEADING, DESCRIPTION: DESCRIPTION, CHARACTER_CUE: CHARACTER_CUE,
                  DIALOG: DIALOG, SLUG_LINE: SLUG_LINE, TRANSITION: TRANSITION,
                  UNCLASSIFIED: UNCLASSIFIED, END: TRANSITION}


def split_paragraphs(raw_text: str) -> list[tuple[str, int, int, int]]:
    """(text, indent, start_line, end_line) per paragraph, 1-based lines."""
    paragraphs = []
    current: list[str] = []
    start = indent = 0
    for lineno, line in enumerate(raw_text.split("\n"), start=1):
        stripped = line.rstrip()
        if not stripped.strip():
            if current:
                paragraphs.append(("\n".join(current), indent, start, lineno - 1))
                current = []
            continue
        line_indent = _indent_of(line)
        if current and line_indent != indent:
            paragraphs.append(("\n".join(current), indent, start, lineno - 1))
            current = []
        if not current:
            start = lineno
            indent = line_indent
        current.append(stripped)
    if current:
        paragraphs.append(("\n".join(current), indent, start,
                           start + len(current) - 1))
    return paragraphs


def segment(raw_text: str, config: Config | None = None) -> list[ScriptBlock]:
    """Segment a screenplay into kind-labeled blocks via the transition FSM."""
    config = config or Config()
    paragraphs = split_paragraphs(raw_text)
    if not paragraphs:
        return []
    indents = [p[1] for p in paragraphs]
    counts = Counter(indents)
    top = max(counts.values())
    most_frequent = min(i for i, c in counts.items() if c == top)
    context = FsmContext(most_frequent_indent=most_frequent, config=config)
    blocks = []
    state = START
    scenes_started = 0
    for text, indent, start_line, end_line in paragraphs:
        state = _next_state(state, text, context)
        kind = _STATE_TO_KIND[state]
        if kind == HEADING:
            scenes_started += 1
        blocks.append(ScriptBlock(text=text, kind=kind, indent=indent,
                                  start_line=start_line, end_line=end_line,
                                  scene_index=max(0, scenes_started - 1)))
        context.last_indent = indent
        if kind == SLUG_LINE:
            context.open_parenthetical = text.count("(") > text.count(")")
        else:
            context.open_parenthetical = False
    return blocks


_PAREN_RE = re.compile(r"\([^)]*\)")


def cue_name(cue_text: str) -> str:
    """Normalize a CharacterCue block to a bare character name."""
    name = _PAREN_RE.sub("", cue_text.replace("\n", " "))
    for marker in ("CONT'D", "CONT.", "CONTD"):
        name = name.replace(marker, "")
    return " ".join(name.split()).strip(" :.")


def prepend_character_cues(blocks: list[ScriptBlock]) -> list[tuple[str, str]]:
    """Pair each Description with the nearest preceding cue in its scene."""
    pairs = []
    for i, block in enumerate(blocks):
        if block.kind != DESCRIPTION:
            continue
        cue = ""
        for prev in reversed(blocks[:i]):
            if prev.scene_index != block.scene_index:
                break
            if prev.kind == CHARACTER_CUE:
                cue = cue_name(prev.text)
                break
        pairs.append((block.clean_text(), cue))
    return pairs


def character_registry(blocks: list[ScriptBlock]) -> set[str]:
    return {cue_name(b.text) for b in blocks if b.kind == CHARACTER_CUE} - {""}


_SUBJECT_PRONOUNS = r"he|she|they"
_POSSESSIVE_PRONOUNS = r"his|her|their"


def _name_casing(name: str, text: str) -> str:
    """Prefer the casing the text itself uses for the name, else the cue's."""
    match = re.search(r"\b" + re.escape(name) + r"\b", text, flags=re.IGNORECASE)
    return match.group(0) if match else name


def resolve_mentions(description_text: str, cue: str,
                     character_registry: set[str] | None = None,
                     possessive_style: str = "clitic") -> str:
    """Replace third-person pronouns with the character the cue names.

    Only substitutes when exactly one candidate is in scope: the cue when
    present, else the single registry name mentioned in the text. "her" is
    read as possessive when a word follows it. possessive_style "clitic"
    appends " 's"; "bare" substitutes the plain name (compat mode). Ambiguous cases are left unresolved.
    """
    name = cue.strip() if cue else ""
    if not name and character_registry:
        mentioned = [n for n in sorted(character_registry)
                     if re.search(r"\b" + re.escape(n) + r"\b", description_text, re.IGNORECASE)]
        if len(mentioned) == 1:
            name = mentioned[0]
    if not name:
        return description_text
    name = _name_casing(name, description_text)
    possessive = name if possessive_style == "bare" else name + " 's"

    def _sub_subject(match: re.Match) -> str:
        return name

    def _sub_possessive(match: re.Match) -> str:
        return possessive

    text = re.sub(r"\b(" + _SUBJECT_PRONOUNS + r")\b", _sub_subject,
                  description_text, flags=re.IGNORECASE)
    text = re.sub(r"\b(his|their)\b", _sub_possessive, text, flags=re.IGNORECASE)
    text = re.sub(r"\bher\b(?=\s+[A-Za-z])", _sub_possessive, text, flags=re.IGNORECASE)
    text = re.sub(r"\bher\b", _sub_subject, text, flags=re.IGNORECASE)
    return text


_SENTENCE_SPLIT = re.compile(r"(?<=[.!?])\s+")
_WORD_RE = re.compile(r"[A-Za-z']+")


def split_sentences(text: str) -> list[str]:
    return [s.strip() for s in _SENTENCE_SPLIT.split(text) if s.strip()]


@dataclass
class CorpusStats:
    descriptions: int = 0
    sentences: int = 0
    descriptions_with_action: int = 0
    action_sentences: int = 0
    mean_sentence_length: float = 0.0

    def to_dict(self) -> dict:
        return {"descriptions": self.descriptions, "sentences": self.sentences,
                "descriptions_with_action": self.descriptions_with_action,
                "action_sentences": self.action_sentences,
                "mean_sentence_length": self.mean_sentence_length}


def _has_action_verb(words: list[str], verbs: set[str]) -> bool:
    return any(w.lower() in verbs or derive_lemma(w.lower()) in verbs for w in words)


def corpus_stats(blocks: list[ScriptBlock], animation_verbs: set[str]) -> CorpusStats:
    stats = CorpusStats()
    total_words = 0
    for block in blocks:
        if block.kind != DESCRIPTION:
            continue
        stats.descriptions += 1
        block_has_action = False
        for sentence in split_sentences(block.clean_text()):
            words = _WORD_RE.findall(sentence)
            stats.sentences += 1
            total_words += len(words)
            if _has_action_verb(words, animation_verbs):
                stats.action_sentences += 1
                block_has_action = True
        if block_has_action:
            stats.descriptions_with_action += 1
    if stats.sentences:
        stats.mean_sentence_length = round(total_words / stats.sentences, 2)
    return stats
