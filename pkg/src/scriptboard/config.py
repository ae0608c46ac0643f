"""Pipeline configuration: keyword lists, analyzer order, thresholds, word lists.

Defaults live here; a JSON (or, on Python 3.11+, TOML) config file merges
over them. The effective config is hashable for storyboard provenance.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, asdict
from pathlib import Path

from .errors import InputError

ANALYZER_ORDER = [
    "coordination",
    "preconj",
    "appositive",
    "relative",
    "advcl",
    "inverted_csubj",
    "ccomp",
    "passive",
    "xcomp",
    "acl",
]

HEADING_WORDS = ["INT", "EXT", "INT./EXT", "I/E"]
TRANSITION_WORDS = ["DISSOLVE", "CUT TO", "FADE IN", "FADE OUT", "SMASH CUT", "MATCH CUT"]
CHARACTER_MARKERS = ["CONT.", "CONT'D", "(O.S)", "(O.S.)", "(V.O)", "(V.O.)"]

# Word lists for the heuristic ARF fields. The defaults seed every example
# named in the source material; all lists are config-extensible.
DURATION_FAST = ["run", "fast", "quickly", "dash", "sprint", "rush", "hurry"]
DURATION_SLOW = ["slowly", "slow", "gradually", "leisurely"]
SPEED_FAST = ["angrily", "furiously", "hastily", "frantically"]
SPEED_SLOW = ["carefully", "cautiously", "softly", "gingerly"]
TRANSLATION_VERBS = ["go", "walk", "run", "enter", "exit", "climb", "crawl", "dash", "sprint"]
ROTATION_VERBS = ["turn", "sit", "spin", "rotate"]
EMOTION_WORDS = ["angry", "happy", "sad", "scared", "surprised", "calm", "excited", "nervous"]
LOCATIVE_PREPS = ["in", "at", "on", "inside", "near"]
DIRECTIONAL_PREPS = ["from", "toward", "towards", "into", "through"]


@dataclass
class Config:
    heading_words: list[str] = field(default_factory=lambda: list(HEADING_WORDS))
    transition_words: list[str] = field(default_factory=lambda: list(TRANSITION_WORDS))
    character_markers: list[str] = field(default_factory=lambda: list(CHARACTER_MARKERS))
    analyzer_order: list[str] = field(default_factory=lambda: list(ANALYZER_ORDER))
    tau_act: float = 0.55
    tau_obj: float = 0.55
    emotion_threshold: float = 0.60
    duration_fast: list[str] = field(default_factory=lambda: list(DURATION_FAST))
    duration_slow: list[str] = field(default_factory=lambda: list(DURATION_SLOW))
    speed_fast: list[str] = field(default_factory=lambda: list(SPEED_FAST))
    speed_slow: list[str] = field(default_factory=lambda: list(SPEED_SLOW))
    translation_verbs: list[str] = field(default_factory=lambda: list(TRANSLATION_VERBS))
    rotation_verbs: list[str] = field(default_factory=lambda: list(ROTATION_VERBS))
    emotion_words: list[str] = field(default_factory=lambda: list(EMOTION_WORDS))
    locative_preps: list[str] = field(default_factory=lambda: list(LOCATIVE_PREPS))
    directional_preps: list[str] = field(default_factory=lambda: list(DIRECTIONAL_PREPS))
    # Paper-compat mode: literal mention substitution (bare name for
    # possessive pronouns) and the printed target/prop assignment.
    paper_compat: bool = False
    bleu_smoothing: bool = False
    push_budget: int = 64

    def to_dict(self) -> dict:
        return asdict(self)

    def hash(self) -> str:
        payload = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def load_config(path: str | Path | None = None, overrides: dict | None = None) -> Config:
    """Build the effective config: defaults <- file <- explicit overrides."""
    data: dict = {}
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise InputError(f"config file not found: {path}")
        if path.suffix.lower() == ".toml":
            try:
                import tomllib  # Python 3.11+
            except ImportError as exc:
                raise InputError(
                    "TOML config requires Python 3.11+; use a JSON config on this interpreter"
                ) from exc
            data = tomllib.loads(path.read_text(encoding="utf-8"))
        else:
            try:
                data = json.loads(path.read_text(encoding="utf-8"))
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid JSON config {path}: {exc}") from exc
    if overrides:
        data.update({k: v for k, v in overrides.items() if v is not None})
    cfg = Config()
    valid = set(cfg.to_dict())
    for key, value in data.items():
        if key not in valid:
            raise InputError(f"unknown config key: {key!r}")
        setattr(cfg, key, value)
    unknown = [a for a in cfg.analyzer_order if a not in ANALYZER_ORDER]
    if unknown:
        raise InputError(f"unknown analyzers in analyzer_order: {unknown}")
    return cfg
