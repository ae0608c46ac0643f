"""Parser backends: pretrained spaCy when available, heuristic otherwise.

Both produce the same row shape: (id, text, lemma, coarse, fine, dep, head).
Backend "auto" prefers spaCy and falls back silently; asking for spaCy
explicitly fails loudly when the model cannot load (nonzero exit upstream).
"""

from __future__ import annotations

from . import heuristic

# aliases applied to spaCy output so labels match the interchange inventory
LABEL_ALIASES = {"acl:relcl": "relcl", "obj": "dobj", "obl": "pobj"}


class BackendError(RuntimeError):
    pass


def parse_heuristic(sentence: str) -> list[tuple]:
    toks = heuristic.parse(heuristic.tokenize(sentence))
    return [(t.id, t.text, t.lemma, t.coarse, t.fine, t.dep, t.head) for t in toks]


def parse_spacy(sentence: str, model: str = "en_core_web_sm") -> list[tuple]:
    nlp = _load_spacy(model)
    doc = nlp(sentence)
    rows = []
    for token in doc:
        head = 0 if token.head is token else token.head.i + 1
        dep = "ROOT" if head == 0 else LABEL_ALIASES.get(token.dep_, token.dep_)
        rows.append((token.i + 1, token.text, token.lemma_.lower(), token.pos_,
                     token.tag_, dep, head))
    return rows


_SPACY_CACHE: dict[str, object] = {}


def _load_spacy(model: str):
    if model in _SPACY_CACHE:
        return _SPACY_CACHE[model]
    try:
        import spacy
    except ImportError as exc:
        raise BackendError(
            "spaCy backend requested but spacy is not installed; "
            "install scriptboard-adapter[spacy] or use --backend heuristic") from exc
    try:
        nlp = spacy.load(model)
    except OSError as exc:
        raise BackendError(
            f"spaCy model {model!r} failed to load: {exc}; download it or "
            "use --backend heuristic") from exc
    _SPACY_CACHE[model] = nlp
    return nlp


def resolve_backend(name: str, model: str = "en_core_web_sm"):
    """Returns (backend_name, parse_fn, model_or_none)."""
    if name == "heuristic":
        return "heuristic", parse_heuristic, None
    if name == "spacy":
        _load_spacy(model)  # fail now, loudly
        return "spacy", lambda s: parse_spacy(s, model), model
    if name == "auto":
        try:
            _load_spacy(model)
            return "spacy", lambda s: parse_spacy(s, model), model
        except BackendError:
            return "heuristic", parse_heuristic, None
    raise BackendError(f"unknown backend {name!r} (expected spacy, heuristic, or auto)")
