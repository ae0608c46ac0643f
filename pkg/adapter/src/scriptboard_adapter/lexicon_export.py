"""Export the lexical-resource JSON the core's mapping module consumes.

Relations come from WordNet when an installation is importable, otherwise
from the bundled mini dictionary. Antonym symmetry is enforced on export;
synonyms targeting words outside the animation list are dropped.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path


def _bundled_dictionary() -> dict:
    path = resources.files("scriptboard_adapter").joinpath("data", "mini_dictionary.json")
    return json.loads(path.read_text(encoding="utf-8"))


def _wordnet_relations(words: list[str]) -> dict | None:
    try:
        from nltk.corpus import wordnet as wn
        wn.synsets("look")  # force the corpus load; raises if absent
    except Exception:
        return None
    synonyms, antonyms, hypernyms, holonyms = {}, {}, {}, {}
    for word in words:
        syns = wn.synsets(word)
        for synset in syns:
            for lemma in synset.lemmas():
                name = lemma.name().lower().replace("_", " ")
                if name != word and name.isalpha():
                    synonyms.setdefault(name, word)
                for ant in lemma.antonyms():
                    antonyms.setdefault(word, set()).add(ant.name().lower())
            for hyper in synset.hypernyms():
                for lemma in hyper.lemmas():
                    hypernyms.setdefault(word, []).append(lemma.name().lower())
            for holo in synset.member_holonyms() + synset.part_holonyms():
                for lemma in holo.lemmas():
                    holonyms.setdefault(word, []).append(lemma.name().lower())
    return {"synonyms": synonyms,
            "antonyms": {k: sorted(v) for k, v in antonyms.items()},
            "hypernyms": hypernyms, "holonyms": holonyms,
            "objects": [], "emotion_words": []}


def build_lexicon(animations: list[str], source: str = "auto") -> dict:
    """Assemble the lexicon JSON structure for a given animation list."""
    relations = None
    used = "bundled"
    if source in ("auto", "wordnet"):
        relations = _wordnet_relations(animations)
        if relations is not None:
            used = "wordnet"
        elif source == "wordnet":
            raise RuntimeError("WordNet requested but not importable/installed")
    if relations is None:
        relations = _bundled_dictionary()
    animation_set = set(animations)
    synonyms = {src: dst for src, dst in relations.get("synonyms", {}).items()
                if dst in animation_set and src not in animation_set}
    antonyms: dict[str, set] = {}
    for word, opposites in relations.get("antonyms", {}).items():
        for opp in opposites:
            antonyms.setdefault(word, set()).add(opp)
            antonyms.setdefault(opp, set()).add(word)  # enforce symmetry
    return {
        "source": used,
        "animations": sorted(animation_set),
        "synonyms": dict(sorted(synonyms.items())),
        "antonyms": {k: sorted(v) for k, v in sorted(antonyms.items())},
        "hypernyms": {k: list(v) for k, v in
                      sorted(relations.get("hypernyms", {}).items())},
        "holonyms": {k: list(v) for k, v in
                     sorted(relations.get("holonyms", {}).items())},
        "objects": sorted(relations.get("objects", [])),
        "emotion_words": sorted(relations.get("emotion_words", [])),
    }


def export_lexicon(animations_path: str | Path, output_path: str | Path,
                   source: str = "auto") -> dict:
    animations = json.loads(Path(animations_path).read_text(encoding="utf-8"))
    if isinstance(animations, dict):
        animations = animations["animations"]
    lexicon = build_lexicon(list(animations), source)
    Path(output_path).write_text(json.dumps(lexicon, indent=2, sort_keys=True) + "\n",
                                 encoding="utf-8")
    return lexicon
