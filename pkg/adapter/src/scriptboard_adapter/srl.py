"""Role frames derived from dependency parses.

A stand-in for a pretrained labeller: ARG0/ARG1 from subject/object
subtrees, ARG2 from the first non-spatial prepositional complement, and
ARGM fields from adverbs and the spatial preposition lists.
"""

from __future__ import annotations

LOCATIVE = {"in", "at", "on", "inside", "near"}
DIRECTIONAL = {"from", "toward", "towards", "into", "through"}


def _children(rows: list[tuple], head_id: int) -> list[tuple]:
    return [r for r in rows if r[6] == head_id]


def _subtree_span(rows: list[tuple], node_id: int) -> tuple[int, int]:
    ids = [node_id]
    frontier = [node_id]
    while frontier:
        nxt = [r[0] for r in rows if r[6] in frontier]
        frontier = nxt
        ids.extend(nxt)
    return min(ids), max(ids)


def frames_for_sentence(rows: list[tuple]) -> list[dict]:
    """One frame per verb that governs a subject; roles as id spans."""
    frames = []
    for row in rows:
        tid, _text, _lemma, coarse, _fine, dep, _head = row
        if coarse not in ("VERB", "AUX"):
            continue
        kids = _children(rows, tid)
        roles: dict[str, list[int]] = {}
        subj = next((k for k in kids if k[5] in ("nsubj", "nsubjpass")), None)
        if subj is None and dep != "ROOT":
            continue
        if subj is not None:
            roles["ARG0"] = list(_subtree_span(rows, subj[0]))
        obj = next((k for k in kids if k[5] == "dobj"), None)
        if obj is not None:
            roles["ARG1"] = list(_subtree_span(rows, obj[0]))
        for kid in kids:
            if kid[5] == "advmod" and kid[1].lower().endswith("ly") \
                    and "ARGM-MNR" not in roles:
                roles["ARGM-MNR"] = [kid[0], kid[0]]
        for kid in kids:
            if kid[5] not in ("prep", "agent"):
                continue
            span = list(_subtree_span(rows, kid[0]))
            lemma = kid[2].lower()
            if lemma in LOCATIVE and "ARGM-LOC" not in roles:
                roles["ARGM-LOC"] = span
            elif lemma in DIRECTIONAL and "ARGM-DIR" not in roles:
                roles["ARGM-DIR"] = span
            elif "ARG2" not in roles:
                roles["ARG2"] = span
        if roles:
            frames.append({"verb_index": tid, "roles": roles})
    return frames
