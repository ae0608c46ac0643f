"""The ten syntactic analyzers: identify/transform pairs over dependency trees.

Each transform returns standalone sentence trees paired with a temporal-id
delta relative to the sentence it came from (0 = simultaneous). Transforms
never mutate their input; they work on clones and extract re-indexed
sentence trees.
"""

from __future__ import annotations

from .deptree import (
    DepTree, DepToken, FIRST_LEFT, FIRST_RIGHT, LAST_LEFT, LAST_RIGHT,
    WH_TAGS, inflect_present, subject_number,
)

VERBAL = ("VERB", "AUX")

OBJECTIVE_CASE = {"i": "me", "he": "him", "she": "her", "we": "us",
                  "they": "them", "who": "whom"}
NOMINATIVE_CASE = {"me": "I", "him": "he", "her": "she", "us": "we",
                   "them": "they", "whom": "who"}


def _attached(tree: DepTree) -> list[DepToken]:
    return [tree.tokens[i] for i in tree.subtree_ids(tree.root_id)]


def _first_with_dep(tree: DepTree, *deps: str) -> DepToken | None:
    for dep in deps:
        ids = tree.find(dep)
        if ids:
            return tree.tokens[ids[0]]
    return None


def _nominal_left_child(tree: DepTree, tid: int, prefer_subject=True) -> int | None:
    if prefer_subject:
        sid = tree.child_by_dep(tid, "nsubj", "nsubjpass")
        if sid is not None:
            return sid
    for kid in tree.lefts(tid):
        if tree.tokens[kid].is_nominal():
            return kid
    return None


def _single_root_tree(text: str, lemma: str, coarse: str, fine: str) -> DepTree:
    return DepTree.from_rows([(1, text, lemma, coarse, fine, "ROOT", 0)])


def temporal_shift(marker: str, marker_kind: str, current: int) -> tuple[bool, int]:
    """Temporal-id update for an adverbial marker being removed.

    prep markers flip the sign relative to mark markers; "as" flags a
    change without moving the id (simultaneous clauses).
    """
    sign = -1 if marker_kind == "prep" else 1
    word = marker.lower()
    if word == "as":
        return True, current
    if word in ("until", "till"):
        return True, current + sign
    if word == "after":
        return True, current - sign
    if word == "before":
        return True, current + sign
    return False, current


# -- coordination -------------------------------------------------------


def coordination_identify(tree: DepTree) -> bool:
    return bool(tree.find("conj"))


def coordination_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    """Split coordinations: verb conjuncts become new roots (sharing the
    subject, borrowing the main verb's object when they lack one); other
    conjuncts replace their sibling under the shared head."""
    work = tree.clone()
    first_conj = work.tokens[work.find("conj")[0]]
    main = work.tokens[first_conj.head_id]
    conj_ids = [k for k in work.children(main.id) if work.tokens[k].dep == "conj"]
    for k in [k for k in work.children(main.id) if work.tokens[k].dep == "cc"]:
        work._detach(k)
    for k in conj_ids:
        work._detach(k)
    outputs = [(work.extract_sentence(work.root_id), 0)]
    shared_count = 0
    for conj_id in conj_ids:
        conj = work.tokens[conj_id]
        if conj.coarse_pos in VERBAL and main.coarse_pos in VERBAL:
            branch = work.clone()
            if branch.child_by_dep(conj_id, "nsubj", "nsubjpass") is None:
                subject = _nominal_left_child(branch, main.id)
                if subject is None and main.id != branch.root_id:
                    subject = _nominal_left_child(branch, branch.root_id)
                if subject is not None:
                    branch._graft(branch, subject, conj_id, FIRST_LEFT, dep="nsubj")
                    shared_count += 1
            if branch.child_by_dep(conj_id, "dobj") is None:
                main_obj = branch.child_by_dep(main.id, "dobj")
                if main_obj is not None:
                    branch._graft(branch, main_obj, conj_id, FIRST_RIGHT, dep="dobj")
            outputs.append((branch.extract_sentence(conj_id), shared_count))
        else:
            branch = work.clone()
            head_id = main.head_id if main.head_id else branch.root_id
            if main.id == branch.root_id:
                branch.root_id = conj_id  # degenerate: coordinated root nominal
                outputs.append((branch.extract_sentence(conj_id), 0))
            else:
                branch._attach(conj_id, head_id, "replace", anchor_id=main.id,
                               dep=main.dep)
                outputs.append((branch.extract_sentence(branch.root_id), 0))
    return outputs


# -- pre-correlative conjugation ----------------------------------------


def preconj_identify(tree: DepTree) -> bool:
    return bool(tree.find("preconj"))


def preconj_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    work = tree.clone()
    work._detach(work.find("preconj")[0])
    return [(work.extract_sentence(work.root_id), 0)]


# -- appositive clause ----------------------------------------------------


def appositive_identify(tree: DepTree) -> bool:
    for tid in tree.find("appos"):
        if tree.tokens[tree.tokens[tid].head_id].is_nominal():
            return True
    return False


def appositive_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    """Main clause without the appositive, plus "<head NP> be <appositive NP>"."""
    work = tree.clone()
    anchor = next(t for t in (work.tokens[i] for i in work.find("appos"))
                  if work.tokens[t.head_id].is_nominal())
    head = work.tokens[anchor.head_id]
    work._detach(anchor.id)
    sent1 = work.extract_sentence(work.root_id)

    number = subject_number(work, head.id)
    be = _single_root_tree(inflect_present("be", number), "be", "AUX",
                           "VBZ" if number == "3sg" else "VBP")
    subj = be._graft(work, head.id, 1, FIRST_LEFT, dep="nsubj")
    det = be.child_by_dep(subj, "det")
    if det is not None and be.tokens[det].lemma in ("a", "an"):
        be.tokens[det].text = "the"
        be.tokens[det].lemma = "the"
    be._graft(work, anchor.id, 1, LAST_RIGHT, dep="attr")
    return [(sent1, 0), (be.extract_sentence(be.root_id), 0)]


# -- relative clause -------------------------------------------------------


def relative_identify(tree: DepTree) -> bool:
    return bool(tree.find("relcl"))


def _wh_token(tree: DepTree, anchor_id: int) -> DepToken | None:
    for tid in tree.subtree_ids(anchor_id):
        if tid != anchor_id and tree.tokens[tid].fine_tag in WH_TAGS:
            return tree.tokens[tid]
    return None


def _relativized_np(tree: DepTree, head: DepToken) -> int:
    # A copular predicate stands for the copula's subject ("Kim is the
    # sexpot Peter saw ..." reuses Kim, not "the sexpot").
    if head.dep == "attr" and head.head_id:
        subj = tree.child_by_dep(head.head_id, "nsubj")
        if subj is not None:
            return subj
    return head.id


def relative_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    work = tree.clone()
    anchor = work.tokens[work.find("relcl")[0]]
    head = work.tokens[anchor.head_id]
    wh = _wh_token(work, anchor.id)
    work._detach(anchor.id)
    sent1 = work.extract_sentence(work.root_id)

    if wh is None:
        np = _relativized_np(work, head)
        work._graft(work, np, anchor.id, FIRST_RIGHT, dep="dobj")
    elif wh.dep == "pobj":
        # the head NP goes after the preposition (covers stranded preps:
        # "the cove where he came from" -> "from the cove")
        prep_id = wh.head_id
        work._detach(wh.id)
        work._graft(work, head.id, prep_id, LAST_RIGHT, dep="pobj")
    elif wh.dep in ("nsubj", "nsubjpass"):
        work._graft(work, head.id, wh.head_id, "replace", anchor_id=wh.id, dep="nsubj")
    elif wh.dep == "poss":
        np = work._graft(work, head.id, wh.head_id, "replace", anchor_id=wh.id, dep="poss")
        work._add_token("'s", "'s", "PART", "POS", "case", np, LAST_RIGHT)
    elif wh.dep == "advmod":
        work._detach(wh.id)
        at = work._add_token("at", "at", "ADP", "IN", "prep", anchor.id, LAST_RIGHT)
        work._graft(work, head.id, at, LAST_RIGHT, dep="pobj")
    else:  # dobj and anything else: head NP takes the object slot
        work._detach(wh.id)
        work._graft(work, head.id, anchor.id, FIRST_RIGHT, dep="dobj")
    return [(sent1, 0), (work.extract_sentence(anchor.id), 0)]


# -- adverbial clause ------------------------------------------------------


def advcl_identify(tree: DepTree) -> bool:
    return bool(tree.find("advcl"))


def advcl_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    work = tree.clone()
    anchor = work.tokens[work.find("advcl")[0]]
    father = work.tokens[anchor.head_id]
    if father.coarse_pos not in VERBAL:
        father.coarse_pos = "VERB"  # tagger error correction
    subject_src = None
    if work.child_by_dep(anchor.id, "nsubj", "nsubjpass") is None:
        subject_src = _nominal_left_child(work, father.id)
        if subject_src is None and father.id != work.root_id:
            subject_src = _nominal_left_child(work, work.root_id)
    work._detach(anchor.id)
    changed = False
    delta = 0
    for kid in list(work.children(anchor.id)):
        tok = work.tokens[kid]
        is_mark = tok.dep == "mark"
        is_left_prep = tok.dep == "prep" and kid in work.lefts(anchor.id)
        if not (is_mark or is_left_prep):
            continue
        if not changed:
            changed, new_id = temporal_shift(tok.lemma or tok.text, "mark" if is_mark else "prep", 0)
            delta = new_id
        work._detach(kid)
    if subject_src is not None:
        work._graft(work, subject_src, anchor.id, FIRST_LEFT, dep="nsubj")
    sent1 = work.extract_sentence(work.root_id)
    sent2 = work.extract_sentence(anchor.id)
    return [(sent1, 0), (sent2, delta)]


# -- inverted clausal subject ---------------------------------------------


def inverted_csubj_identify(tree: DepTree) -> bool:
    for tid in tree.find("csubj"):
        tok = tree.tokens[tid]
        head = tree.tokens[tok.head_id]
        if tok.fine_tag in ("VBN", "VBG") and (head.lemma or head.text).lower() == "be":
            if any(tree.tokens[k].dep == "attr" for k in tree.rights(head.id)):
                return True
    return False


def inverted_csubj_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    work = tree.clone()
    verb = next(work.tokens[tid] for tid in work.find("csubj")
                if work.tokens[tid].fine_tag in ("VBN", "VBG")
                and (work.tokens[work.tokens[tid].head_id].lemma or "").lower() == "be")
    be = work.tokens[verb.head_id]
    attr = next(work.tokens[k] for k in work.rights(be.id) if work.tokens[k].dep == "attr")
    trailing = [k for k in work.rights(be.id) if work.tokens[k].coarse_pos == "PUNCT"]
    work._detach(verb.id)
    work._attach(attr.id, verb.id, FIRST_LEFT, dep="nsubj")
    for k in trailing:
        work._attach(k, verb.id, LAST_RIGHT)
    return [(work.extract_sentence(verb.id), 0)]


# -- clausal complement -----------------------------------------------------


def ccomp_identify(tree: DepTree) -> bool:
    return bool(tree.find("ccomp"))


def ccomp_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    work = tree.clone()
    anchor = work.tokens[work.find("ccomp")[0]]
    main = work.tokens[anchor.head_id]
    work._detach(anchor.id)
    for kid in list(work.children(anchor.id)):
        if work.tokens[kid].dep == "mark":
            work._detach(kid)
    subject = work.child_by_dep(anchor.id, "nsubj", "nsubjpass")
    if subject is None:
        src = _nominal_left_child(work, main.id)
        if src is not None:
            work._graft(work, src, anchor.id, FIRST_LEFT, dep="nsubj")
    elif work.tokens[subject].coarse_pos == "DET" or work.tokens[subject].fine_tag in ("DT", "WDT"):
        obj = work.child_by_dep(main.id, "dobj")
        if obj is not None:
            work._graft(work, obj, anchor.id, "replace", anchor_id=subject, dep="nsubj")
    sent1 = work.extract_sentence(anchor.id)
    sent2 = work.extract_sentence(work.root_id)
    return [(sent1, 0), (sent2, 0)]


# -- passive voice -----------------------------------------------------------


def passive_identify(tree: DepTree) -> bool:
    return bool(tree.find("nsubjpass") or tree.find("csubjpass"))


def passive_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    """Passive subject moves to object position; the by-agent (or
    "Somebody") becomes the subject; the verb turns active present."""
    work = tree.clone()
    subj = _first_with_dep(work, "nsubjpass", "csubjpass")
    verb = work.tokens[subj.head_id]
    for kid in list(work.children(verb.id)):
        if work.tokens[kid].dep == "auxpass":
            work._detach(kid)
    work._detach(subj.id)
    if subj.coarse_pos == "PRON":
        subj.text = OBJECTIVE_CASE.get(subj.text.lower(), subj.text)
    work._attach(subj.id, verb.id, FIRST_RIGHT, dep="dobj")
    by = None
    for kid in work.children(verb.id):
        tok = work.tokens[kid]
        if tok.dep in ("agent", "prep") and tok.text.lower() == "by":
            by = tok
            break
    if by is not None:
        agent_np = work.child_by_dep(by.id, "pobj")
        work._detach(by.id)
        if agent_np is not None:
            work._detach(agent_np)
            agent = work.tokens[agent_np]
            if agent.coarse_pos == "PRON":
                agent.text = NOMINATIVE_CASE.get(agent.text.lower(), agent.text)
            work._attach(agent_np, verb.id, LAST_LEFT, dep="nsubj")
    else:
        work._add_token("Somebody", "somebody", "PRON", "NN", "nsubj", verb.id, LAST_LEFT)
    return [(work.extract_sentence(work.root_id), 0)]


# -- open clausal complement --------------------------------------------------


def xcomp_identify(tree: DepTree) -> bool:
    return any(tree.tokens[tid].coarse_pos in VERBAL for tid in tree.find("xcomp"))


def xcomp_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    work = tree.clone()
    xverb = next(work.tokens[tid] for tid in work.find("xcomp")
                 if work.tokens[tid].coarse_pos in VERBAL)
    main = work.tokens[xverb.head_id]
    aux = work.child_by_dep(xverb.id, "aux")
    subject = work.child_by_dep(xverb.id, "nsubj") or _nominal_left_child(work, main.id)
    if aux is None:
        work._detach(xverb.id)
        if subject is not None and work.child_by_dep(xverb.id, "nsubj") is None:
            work._graft(work, subject, xverb.id, FIRST_LEFT, dep="nsubj")
        return [(work.extract_sentence(xverb.id), 0),
                (work.extract_sentence(work.root_id), 0)]
    work._detach(aux)
    work._detach(xverb.id)
    if main.id == work.root_id:
        if subject is not None:
            work._detach(subject)
            work._attach(subject, xverb.id, FIRST_LEFT, dep="nsubj")
        for k in [k for k in work.rights(main.id) if work.tokens[k].coarse_pos == "PUNCT"]:
            work._attach(k, xverb.id, LAST_RIGHT)
        return [(work.extract_sentence(xverb.id), 0)]
    work._attach(xverb.id, main.head_id, "replace", anchor_id=main.id, dep=main.dep)
    return [(work.extract_sentence(work.root_id), 0)]


# -- adjective (acl) clause ----------------------------------------------------


def acl_identify(tree: DepTree) -> bool:
    for tid in tree.find("acl"):
        tok = tree.tokens[tid]
        if tok.coarse_pos in VERBAL and tree.tokens[tok.head_id].is_nominal():
            return True
    return False


def acl_transform(tree: DepTree) -> list[tuple[DepTree, int]]:
    work = tree.clone()
    anchor = next(work.tokens[tid] for tid in work.find("acl")
                  if work.tokens[tid].coarse_pos in VERBAL
                  and work.tokens[work.tokens[tid].head_id].is_nominal())
    head = work.tokens[anchor.head_id]
    work._detach(anchor.id)
    sent1 = work.extract_sentence(work.root_id)
    for kid in list(work.children(anchor.id)):
        if work.tokens[kid].dep == "aux":
            work._detach(kid)
    needs_be = anchor.fine_tag == "VBN" and any(
        work.tokens[k].text.lower() == "by" and work.tokens[k].dep in ("agent", "prep")
        for k in work.rights(anchor.id))
    if needs_be:
        number = subject_number(work, head.id)
        work._add_token(inflect_present("be", number), "be", "AUX",
                        "VBZ" if number == "3sg" else "VBP", "aux", anchor.id, FIRST_LEFT)
    work._graft(work, head.id, anchor.id, FIRST_LEFT, dep="nsubj")
    return [(sent1, 0), (work.extract_sentence(anchor.id), 0)]


ANALYZERS: dict[str, tuple] = {
    "coordination": (coordination_identify, coordination_transform),
    "preconj": (preconj_identify, preconj_transform),
    "appositive": (appositive_identify, appositive_transform),
    "relative": (relative_identify, relative_transform),
    "advcl": (advcl_identify, advcl_transform),
    "inverted_csubj": (inverted_csubj_identify, inverted_csubj_transform),
    "ccomp": (ccomp_identify, ccomp_transform),
    "passive": (passive_identify, passive_transform),
    "xcomp": (xcomp_identify, xcomp_transform),
    "acl": (acl_identify, acl_transform),
}
