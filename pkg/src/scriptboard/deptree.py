"""Dependency-tree data model, interchange I/O, tree surgery, and realization.

Interchange format: 10 tab-separated columns per token
    id  form  lemma  coarse_pos  fine_tag  dep  head_id  _  _  _
one token per line, blank line between sentences, `#` lines ignored.
Head id 0 marks the root. Unknown dependency labels are kept verbatim
(never an error); a few Universal Dependencies aliases are normalized on
load (acl:relcl -> relcl, obj -> dobj, obl -> pobj).

Trees are immutable from the caller's perspective: the public surgery
functions (cut_edge, attach, correct_verb_tense) return updated copies.
Analyzers inside this package use the underscore mutators on clones.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace as dc_replace

from ._irregular import IRREGULAR_PAST
from .errors import ContractViolation, ParseFileError, TreeError

COARSE_POS = {
    "VERB", "NOUN", "PRON", "ADJ", "ADV", "ADP", "DET", "AUX", "PART",
    "PROPN", "NUM", "PUNCT", "OTHER",
}

_COARSE_ALIASES = {
    "CCONJ": "OTHER", "CONJ": "OTHER", "SCONJ": "ADP", "INTJ": "OTHER",
    "SYM": "OTHER", "X": "OTHER", "SPACE": "OTHER",
}

KNOWN_LABELS = {
    "ROOT", "cc", "conj", "preconj", "appos", "relcl", "advcl", "acl",
    "ccomp", "xcomp", "csubj", "csubjpass", "nsubj", "nsubjpass",
    "auxpass", "aux", "agent", "dobj", "pobj", "prep", "mark", "attr",
    "advmod", "poss", "det", "compound", "amod",
}

_LABEL_ALIASES = {"acl:relcl": "relcl", "obj": "dobj", "obl": "pobj", "root": "ROOT"}

WH_TAGS = {"WDT", "WP", "WP$", "WRB"}
NOMINAL_POS = {"NOUN", "PROPN", "PRON"}
MODAL_LEMMAS = {"will", "would", "can", "could", "shall", "should", "may", "might", "must", "do"}

# attach positions; "left-most"/"right-most" aliases are accepted.
FIRST_LEFT = "first_left"
LAST_LEFT = "last_left"
FIRST_RIGHT = "first_right"
LAST_RIGHT = "last_right"

_POSITION_ALIASES = {
    "left-most": FIRST_LEFT, "leftmost": FIRST_LEFT,
    "right-most": LAST_RIGHT, "rightmost": LAST_RIGHT,
}


@dataclass
class DepToken:
    id: int
    text: str
    lemma: str
    coarse_pos: str
    fine_tag: str
    dep: str
    head_id: int

    def is_nominal(self) -> bool:
        return self.coarse_pos in NOMINAL_POS


def normalize_label(label: str) -> str:
    label = _LABEL_ALIASES.get(label, label)
    return label


def normalize_coarse(pos: str) -> str:
    pos = pos.upper()
    pos = _COARSE_ALIASES.get(pos, pos)
    return pos if pos in COARSE_POS else "OTHER"


class DepTree:
    """A rooted dependency tree over one sentence (plus detached subtrees)."""

    def __init__(self):
        self.tokens: dict[int, DepToken] = {}
        self._lefts: dict[int, list[int]] = {}
        self._rights: dict[int, list[int]] = {}
        self.root_id: int = 0
        self.detached: set[int] = set()
        self._next_id: int = 1

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: list[tuple]) -> "DepTree":
        """rows: (id, text, lemma, coarse, fine, dep, head_id), id-ordered."""
        tree = cls()
        for row in rows:
            tid, text, lemma, coarse, fine, dep, head = row
            tree.tokens[tid] = DepToken(
                id=tid, text=text, lemma=lemma, coarse_pos=normalize_coarse(coarse),
                fine_tag=fine, dep=normalize_label(dep), head_id=head,
            )
        tree._next_id = max(tree.tokens, default=0) + 1
        tree._rebuild_children()
        tree.validate()
        return tree

    def _rebuild_children(self):
        self._lefts = {tid: [] for tid in self.tokens}
        self._rights = {tid: [] for tid in self.tokens}
        roots = []
        for tok in sorted(self.tokens.values(), key=lambda t: t.id):
            if tok.head_id == 0:
                roots.append(tok.id)
            elif tok.id < tok.head_id:
                self._lefts[tok.head_id].append(tok.id)
            else:
                self._rights[tok.head_id].append(tok.id)
        if roots:
            self.root_id = roots[0]

    def clone(self) -> "DepTree":
        other = DepTree()
        other.tokens = {tid: dc_replace(tok) for tid, tok in self.tokens.items()}
        other._lefts = {tid: list(kids) for tid, kids in self._lefts.items()}
        other._rights = {tid: list(kids) for tid, kids in self._rights.items()}
        other.root_id = self.root_id
        other.detached = set(self.detached)
        other._next_id = self._next_id
        return other

    # -- invariants ---------------------------------------------------

    def validate(self):
        roots = [t for t in self.tokens.values() if t.head_id == 0 and t.id not in self.detached]
        if len(roots) != 1:
            raise TreeError(f"expected exactly one root, found {len(roots)}")
        if roots[0].dep != "ROOT":
            raise TreeError(f"root token {roots[0].id} has dep {roots[0].dep!r}, expected ROOT")
        for tok in self.tokens.values():
            if tok.head_id == tok.id:
                raise TreeError(f"token {tok.id} is its own head")
            if tok.head_id and tok.head_id not in self.tokens:
                raise TreeError(f"token {tok.id} has unknown head {tok.head_id}")
        # acyclicity: walk up from every token
        for tok in self.tokens.values():
            seen = [tok.id]
            cur = tok
            while cur.head_id:
                cur = self.tokens[cur.head_id]
                if cur.id in seen:
                    cycle = seen[seen.index(cur.id):] + [cur.id]
                    raise TreeError("head cycle: " + " -> ".join(map(str, cycle)))
                seen.append(cur.id)
        # children index consistent with head fields
        for head, kids in list(self._lefts.items()) + list(self._rights.items()):
            for kid in kids:
                if self.tokens[kid].head_id != head:
                    raise TreeError(f"children index out of sync at token {kid}")

    # -- traversal ----------------------------------------------------

    def children(self, tid: int) -> list[int]:
        return self._lefts.get(tid, []) + self._rights.get(tid, [])

    def lefts(self, tid: int) -> list[int]:
        return list(self._lefts.get(tid, []))

    def rights(self, tid: int) -> list[int]:
        return list(self._rights.get(tid, []))

    def subtree_ids(self, tid: int) -> list[int]:
        """In-order traversal: left children, head, right children."""
        out = []
        for kid in self._lefts.get(tid, []):
            out.extend(self.subtree_ids(kid))
        out.append(tid)
        for kid in self._rights.get(tid, []):
            out.extend(self.subtree_ids(kid))
        return out

    def find(self, dep: str) -> list[int]:
        """Ids of attached tokens with the given dependency label, id-ordered."""
        reachable = set(self.subtree_ids(self.root_id))
        return [t.id for t in sorted(self.tokens.values(), key=lambda t: t.id)
                if t.dep == dep and t.id in reachable]

    def child_by_dep(self, tid: int, *deps: str) -> int | None:
        for kid in self.children(tid):
            if self.tokens[kid].dep in deps:
                return kid
        return None

    # -- surgery (underscore mutators; public wrappers return copies) --

    def _detach(self, child_id: int):
        tok = self.tokens[child_id]
        if tok.head_id == 0:
            raise TreeError(f"cannot cut the root (token {child_id})")
        for sibs in (self._lefts[tok.head_id], self._rights[tok.head_id]):
            if child_id in sibs:
                sibs.remove(child_id)
        tok.head_id = 0
        self.detached.add(child_id)

    def _place(self, child_id: int, head_id: int, position, anchor_id: int | None = None):
        position = _POSITION_ALIASES.get(position, position)
        lefts, rights = self._lefts[head_id], self._rights[head_id]
        if position == FIRST_LEFT:
            lefts.insert(0, child_id)
        elif position == LAST_LEFT:
            lefts.append(child_id)
        elif position == FIRST_RIGHT:
            rights.insert(0, child_id)
        elif position == LAST_RIGHT:
            rights.append(child_id)
        elif position == "replace":
            if anchor_id in lefts:
                lefts[lefts.index(anchor_id)] = child_id
            elif anchor_id in rights:
                rights[rights.index(anchor_id)] = child_id
            else:
                raise TreeError(f"replace anchor {anchor_id} is not a child of {head_id}")
            self.tokens[anchor_id].head_id = 0
            self.detached.add(anchor_id)
        else:
            raise TreeError(f"unknown attach position {position!r}")

    def _attach(self, child_id: int, head_id: int, position, anchor_id=None, dep=None):
        if head_id in set(self.subtree_ids(child_id)):
            raise TreeError(f"attaching {child_id} under {head_id} would create a cycle")
        tok = self.tokens[child_id]
        if tok.head_id:
            self._detach(child_id)
        self.detached.discard(child_id)
        tok.head_id = head_id
        if dep is not None:
            tok.dep = dep
        self._place(child_id, head_id, position, anchor_id)

    def _add_token(self, text, lemma, coarse, fine, dep, head_id, position, anchor_id=None) -> int:
        tid = self._next_id
        self._next_id += 1
        self.tokens[tid] = DepToken(tid, text, lemma, normalize_coarse(coarse), fine,
                                    normalize_label(dep), head_id)
        self._lefts[tid] = []
        self._rights[tid] = []
        self._place(tid, head_id, position, anchor_id)
        return tid

    def _graft(self, src: "DepTree", src_root: int, head_id: int, position,
               anchor_id=None, dep=None, drop_top_punct=True) -> int:
        """Copy a subtree (possibly from this same tree) under head_id.

        Top-level punct children of the copied root are dropped so commas
        framing a clause do not travel with reused noun phrases.
        """
        order = src.subtree_ids(src_root)
        rows = [src.tokens[i] for i in order]
        if drop_top_punct:
            skip = set()
            for p in src.children(src_root):
                if src.tokens[p].coarse_pos == "PUNCT":
                    skip.update(src.subtree_ids(p))
            rows = [t for t in rows if t.id not in skip]
        mapping = {}
        for tok in rows:
            tid = self._next_id
            self._next_id += 1
            mapping[tok.id] = tid
            self.tokens[tid] = DepToken(tid, tok.text, tok.lemma, tok.coarse_pos,
                                        tok.fine_tag, tok.dep, 0)
            self._lefts[tid] = []
            self._rights[tid] = []
        for tok in rows:
            new_id = mapping[tok.id]
            if tok.id == src_root:
                continue
            new_head = mapping.get(tok.head_id)
            if new_head is None:
                continue
            self.tokens[new_id].head_id = new_head
            if tok.id in src._lefts.get(tok.head_id, []):
                self._lefts[new_head].append(new_id)
            else:
                self._rights[new_head].append(new_id)
        new_root = mapping[src_root]
        self.tokens[new_root].head_id = head_id
        if dep is not None:
            self.tokens[new_root].dep = dep
        self._place(new_root, head_id, position, anchor_id)
        return new_root

    # -- extraction and serialization ----------------------------------

    def extract_sentence(self, root_id: int | None = None) -> "DepTree":
        """Materialize the subtree at root_id as a standalone tree.

        Tokens are renumbered 1..n in linear (traversal) order so the
        result serializes and round-trips through the interchange format.
        """
        root_id = self.root_id if root_id is None else root_id
        order = self.subtree_ids(root_id)
        mapping = {old: new for new, old in enumerate(order, start=1)}
        tree = DepTree()
        for old in order:
            tok = self.tokens[old]
            new_head = mapping.get(tok.head_id, 0) if old != root_id else 0
            dep = tok.dep if old != root_id else "ROOT"
            tree.tokens[mapping[old]] = DepToken(mapping[old], tok.text, tok.lemma,
                                                 tok.coarse_pos, tok.fine_tag, dep, new_head)
        tree._next_id = len(order) + 1
        tree._rebuild_children()
        tree.validate()
        return tree

    def to_conllx(self) -> str:
        order = self.subtree_ids(self.root_id)
        if order != sorted(order):
            raise ContractViolation(
                "serializing a surgically reordered tree; extract_sentence() first")
        lines = []
        for tid in order:
            tok = self.tokens[tid]
            lines.append("\t".join([str(tok.id), tok.text, tok.lemma, tok.coarse_pos,
                                    tok.fine_tag, tok.dep, str(tok.head_id), "_", "_", "_"]))
        return "\n".join(lines) + "\n"

    # -- realization ----------------------------------------------------

    def realize(self, root_id: int | None = None) -> str:
        root_id = self.root_id if root_id is None else root_id
        if root_id not in self.tokens:
            raise TreeError(f"unknown token id {root_id}")
        toks = [self.tokens[i] for i in self.subtree_ids(root_id)]
        while toks and toks[0].coarse_pos == "PUNCT":
            toks.pop(0)
        if not toks:
            return ""
        words = []
        for idx, tok in enumerate(toks):
            word = tok.text
            keep_case = (tok.coarse_pos in ("PROPN", "PUNCT", "NUM")
                         or tok.fine_tag == "POS" or word == "I" or word.startswith("I'"))
            if idx == 0:
                if not keep_case:
                    word = word.lower()
                if word and word[0].isalpha():
                    word = word[0].upper() + word[1:]
            elif not keep_case:
                word = word.lower()
            words.append(word)
        text = " ".join(words)
        text = re.sub(r"\s+([.,!?;:])", r"\1", text)
        text = re.sub(r",+(?=[.!?])", "", text)
        text = re.sub(r",{2,}", ",", text)
        text = text.rstrip(" ,;")
        if not text.endswith((".", "!", "?")):
            text += "."
        return text


# -- module-level operations (functional surface) -----------------------


def load_parsed(content: str) -> list[DepTree]:
    """Parse interchange-format content into one DepTree per sentence block."""
    trees = []
    rows: list[tuple] = []
    for lineno, raw in enumerate(content.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.startswith("#"):
            continue
        if not line.strip():
            if rows:
                trees.append(_tree_from_rows(rows))
                rows = []
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ParseFileError(f"expected 10 tab-separated columns, got {len(cols)}",
                                 line=lineno, column=len(cols))
        try:
            tid = int(cols[0])
        except ValueError:
            raise ParseFileError(f"non-integer token id {cols[0]!r}", line=lineno, column=1)
        try:
            head = int(cols[6])
        except ValueError:
            raise ParseFileError(f"non-integer head id {cols[6]!r}", line=lineno, column=7)
        rows.append(((tid, cols[1], cols[2], cols[3], cols[4], cols[5], head), lineno))
    if rows:
        trees.append(_tree_from_rows(rows))
    return trees


def _tree_from_rows(rows: list[tuple]) -> DepTree:
    try:
        return DepTree.from_rows([r for r, _ in rows])
    except TreeError as exc:
        raise ParseFileError(str(exc), line=rows[0][1]) from exc


def dump_parsed(trees: list[DepTree]) -> str:
    return "\n".join(tree.to_conllx() for tree in trees)


def cut_edge(tree: DepTree, child_id: int) -> DepTree:
    """Detach child_id; it becomes the root of a detached subtree."""
    out = tree.clone()
    out._detach(child_id)
    out.validate()
    return out


def attach(tree: DepTree, child_id: int, new_head: int, position, anchor_id=None) -> DepTree:
    """(Re-)attach child_id under new_head at the requested position."""
    out = tree.clone()
    out._attach(child_id, new_head, position, anchor_id=anchor_id)
    out.validate()
    return out


def realize(tree: DepTree, root_id: int | None = None) -> str:
    return tree.realize(root_id)


# -- verb tense ---------------------------------------------------------


def derive_lemma(surface: str) -> str:
    word = surface.lower()
    if word in IRREGULAR_PAST:
        return IRREGULAR_PAST[word]
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("es") and word[:-2].endswith(("s", "x", "z", "ch", "sh", "o")):
        return word[:-2]
    if word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    if word.endswith("ing") and len(word) > 4:
        stem = word[:-3]
        if len(stem) > 2 and stem[-1] == stem[-2]:
            return stem[:-1]
        return stem
    if word.endswith("ed") and len(word) > 3:
        stem = word[:-2]
        if len(stem) > 2 and stem[-1] == stem[-2]:
            return stem[:-1]
        if stem.endswith(("v", "s", "z", "c", "g")):
            return stem + "e"
        if stem.endswith("at") and not stem.endswith(("eat", "oat")):
            return stem + "e"  # illuminated -> illuminate, created -> create
        return stem
    return word


def inflect_present(lemma: str, number: str) -> str:
    if lemma == "be":
        return {"3sg": "is", "1sg": "am"}.get(number, "are")
    if number != "3sg":
        return lemma
    if lemma == "have":
        return "has"
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in "aeiou":
        return lemma[:-1] + "ies"
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        return lemma + "es"
    return lemma + "s"


def find_subject(tree: DepTree, verb_id: int) -> int | None:
    sid = tree.child_by_dep(verb_id, "nsubj", "nsubjpass")
    if sid is not None:
        return sid
    for kid in reversed(tree.lefts(verb_id)):
        if tree.tokens[kid].is_nominal():
            return kid
    return None


def subject_number(tree: DepTree, subject_id: int | None) -> str:
    if subject_id is None:
        return "3sg"
    tok = tree.tokens[subject_id]
    lemma = (tok.lemma or tok.text).lower()
    if lemma == "i":
        return "1sg"
    if lemma in ("they", "we", "you"):
        return "pl"
    if tok.fine_tag in ("NNS", "NNPS"):
        return "pl"
    if any(tree.tokens[k].dep == "conj" for k in tree.children(subject_id)):
        return "pl"
    return "3sg"


def _correct_verb_tense_inplace(tree: DepTree, verb_id: int):
    verb = tree.tokens[verb_id]
    if verb.coarse_pos not in ("VERB", "AUX"):
        raise ContractViolation(
            f"correct_verb_tense called on {verb.coarse_pos} token {verb_id}")
    collapsible = [
        k for k in tree.children(verb_id)
        if tree.tokens[k].dep in ("aux", "auxpass")
        and (tree.tokens[k].lemma or tree.tokens[k].text).lower() in MODAL_LEMMAS | {"be", "have"}
    ]
    # passive periphrasis (be + VBN) is the passive analyzer's business
    if verb.fine_tag == "VBN" and any(
            (tree.tokens[k].lemma or tree.tokens[k].text).lower() == "be" for k in collapsible):
        return
    for k in collapsible:
        tree._detach(k)
    subject = find_subject(tree, verb_id)
    number = subject_number(tree, subject)
    expected = "VBZ" if number == "3sg" else "VBP"
    if not collapsible and verb.fine_tag == expected:
        return  # already finite and agreeing; keep the surface (contractions included)
    lemma = verb.lemma if verb.lemma and verb.lemma != "_" else derive_lemma(verb.text)
    verb.text = inflect_present(lemma, number)
    verb.fine_tag = expected


def correct_verb_tense(tree: DepTree, verb_id: int) -> DepTree:
    """Rewrite the verb to simple present agreeing with its subject."""
    out = tree.clone()
    _correct_verb_tense_inplace(out, verb_id)
    return out
