"""Deterministic tokenizer / tagger / dependency attacher.

A degraded but fully offline stand-in for a pretrained parser: closed-class
dictionaries plus suffix heuristics for tags, then a shallow attachment
pass. Output trees are always structurally valid (single root, acyclic);
a final repair pass reattaches anything questionable to the root.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lemmas import lemma_of

SENTENCE_SPLIT = re.compile(r"(?<=[.!?])\s+")
TOKEN_RE = re.compile(r"[A-Za-z]+|[0-9]+|'[A-Za-z]+|[^\sA-Za-z0-9]")

DETS = {"the", "a", "an", "this", "that", "these", "those", "another",
        "some", "any", "no", "every", "both", "either", "neither"}
PREPS = {"in", "on", "at", "by", "of", "with", "from", "into", "through",
         "toward", "towards", "under", "over", "near", "inside", "outside",
         "behind", "across", "around", "against", "within", "without",
         "about", "along", "during", "off", "up", "down", "out"}
SUBORDINATORS = {"as", "while", "when", "after", "before", "until", "till",
                 "because", "though", "although", "if", "since", "once"}
PRON_SUBJ = {"he", "she", "it", "they", "we", "i", "you", "who", "somebody",
             "someone", "everyone", "nobody"}
PRON_OBJ = {"him", "them", "us", "me", "her"}
POSS_DET = {"his", "their", "its", "my", "your", "our", "whose"}
BE_FORMS = {"is", "are", "was", "were", "am", "be", "been", "being", "'s", "'re", "'m"}
HAVE_FORMS = {"has", "have", "had", "'ve"}
DO_FORMS = {"do", "does", "did"}
MODALS = {"will", "would", "can", "could", "shall", "should", "may",
          "might", "must", "'ll", "'d"}
CONJUNCTIONS = {"and", "or", "but", "nor"}
ADVERBS = {"then", "now", "here", "soon", "always", "never", "again",
           "still", "just", "very", "really", "too", "also", "away",
           "triumphantly"}
WH_WORDS = {"who": "WP", "whom": "WP", "whose": "WP$", "which": "WDT",
            "what": "WP", "where": "WRB", "when": "WRB", "why": "WRB", "how": "WRB"}
ADJECTIVES = {"red", "blue", "green", "big", "small", "good", "bad", "old",
              "young", "new", "quiet", "loud", "happy", "sad", "angry",
              "empty", "full", "cold", "hot", "beautiful", "dark", "bright",
              "long", "short", "high", "low", "triumphant", "shocked", "nervous"}
COMMON_VERBS = {
    "be", "have", "do", "say", "see", "go", "get", "make", "know", "think",
    "take", "come", "give", "look", "use", "find", "want", "tell", "put",
    "mean", "become", "leave", "work", "call", "try", "ask", "need", "feel",
    "seem", "show", "hear", "play", "run", "move", "like", "live", "believe",
    "hold", "bring", "happen", "write", "sit", "stand", "lose", "pay",
    "meet", "set", "learn", "change", "lead", "understand", "watch",
    "follow", "stop", "create", "speak", "read", "allow", "add", "grow",
    "open", "walk", "win", "remember", "love", "consider", "appear", "buy",
    "wait", "serve", "send", "expect", "build", "stay", "fall", "cut",
    "reach", "remain", "turn", "talk", "jump", "throw", "laugh", "close",
    "drop", "pick", "push", "pull", "point", "wave", "climb", "dance",
    "sing", "eat", "drink", "sleep", "wake", "kneel", "crawl", "enter",
    "exit", "knock", "grab", "hit", "kick", "hug", "kiss", "cry", "smile",
    "nod", "shake", "carry", "lift", "lean", "slide", "catch", "clap",
    "touch", "explain", "panic", "react", "gesture", "cower", "enclose",
    "pant", "blare", "arrive", "hide", "split", "sound", "hand",
    "illuminate", "hang", "rush", "dash", "sprint",
}
IRREGULAR_PASTS = set(
    "came went saw gave took got made said told thought knew found left "
    "felt kept held met ran sat stood threw fell wrote heard spoke brought "
    "bought caught taught sent spent built hung shook sang drank ate slept "
    "woke wore drove rose flew crept knelt leapt swam was were had did".split())
PUNCT_TAGS = {".": ".", ",": ",", "!": ".", "?": ".", ";": ":", ":": ":",
              "(": "-LRB-", ")": "-RRB-", '"': "``", "'": "''", "-": "HYPH"}

NOMINAL = ("NOUN", "PROPN", "PRON")


@dataclass
class Tok:
    id: int
    text: str
    lemma: str
    coarse: str
    fine: str
    dep: str = "dep"
    head: int = 0


def split_sentences(text: str) -> list[str]:
    return [s.strip() for s in SENTENCE_SPLIT.split(text) if s.strip()]


def tokenize(sentence: str) -> list[str]:
    return TOKEN_RE.findall(sentence)


def verb_lemma(word: str) -> str | None:
    """Dictionary-confirmed verb lemma for a surface form, else None."""
    word = word.lower()
    candidates = [word, lemma_of(word)]
    if word.endswith("s"):
        candidates.append(word[:-1])
    if word.endswith("es"):
        candidates.append(word[:-2])
    if word.endswith("ies"):
        candidates.append(word[:-3] + "y")
    if word.endswith("ing") and len(word) > 4:
        candidates += [word[:-3], word[:-3] + "e"]
    if word.endswith("ed") and len(word) > 3:
        candidates += [word[:-2], word[:-1]]
    for cand in candidates:
        if cand in COMMON_VERBS:
            return cand
    return None


def tag(tokens: list[str]) -> list[Tok]:
    """Assign coarse/fine tags with closed-class tables and suffixes."""
    out: list[Tok] = []
    for idx, text in enumerate(tokens, start=1):
        low = text.lower()
        nxt = tokens[idx].lower() if idx < len(tokens) else ""
        prev = out[-1] if out else None
        tok = Tok(idx, text, lemma_of(text), "NOUN", "NN")
        vlemma = verb_lemma(low)
        if text in PUNCT_TAGS or (len(text) == 1 and not text.isalnum()):
            tok.coarse, tok.fine, tok.lemma = "PUNCT", PUNCT_TAGS.get(text, text), text
        elif low == "'s" and prev is not None and prev.coarse in ("NOUN", "PROPN"):
            # possessive when a nominal plausibly follows, else contracted "be"
            if nxt and (nxt in DETS or (nxt not in BE_FORMS | PREPS | CONJUNCTIONS
                                        and verb_lemma(nxt) is None)):
                tok.coarse, tok.fine, tok.lemma = "PART", "POS", "'s"
            else:
                tok.coarse, tok.fine, tok.lemma = "AUX", "VBZ", "be"
        elif low in BE_FORMS | HAVE_FORMS | DO_FORMS:
            tok.coarse = "AUX"
            tok.fine = ("VBZ" if low in ("is", "'s", "has", "does") else
                        "VBP" if low in ("are", "'re", "am", "'m", "have", "'ve", "do") else
                        "VBD" if low in ("was", "were", "had", "did") else
                        "VBN" if low == "been" else "VBG" if low == "being" else "VB")
            tok.lemma = "be" if low in BE_FORMS else ("have" if low in HAVE_FORMS else "do")
        elif low in MODALS:
            tok.coarse, tok.fine = "AUX", "MD"
        elif low == "to":
            if nxt and verb_lemma(nxt) == nxt:
                tok.coarse, tok.fine = "PART", "TO"
            else:
                tok.coarse, tok.fine = "ADP", "IN"
        elif low == "there" and nxt in BE_FORMS:
            tok.coarse, tok.fine = "PRON", "EX"
        elif low in WH_WORDS:
            tok.coarse, tok.fine = (("ADV", "WRB") if WH_WORDS[low] == "WRB"
                                    else ("PRON", WH_WORDS[low]))
        elif low in DETS:
            tok.coarse, tok.fine = "DET", "DT"
        elif low in POSS_DET:
            tok.coarse, tok.fine = "PRON", "PRP$"
        elif low in PRON_SUBJ | PRON_OBJ:
            tok.coarse, tok.fine = "PRON", "PRP"
        elif low in CONJUNCTIONS:
            tok.coarse, tok.fine = "OTHER", "CC"
        elif low in SUBORDINATORS or low in PREPS:
            tok.coarse, tok.fine = "ADP", "IN"
        elif low in ADVERBS or (low.endswith("ly") and len(low) > 3):
            tok.coarse, tok.fine = "ADV", "RB"
        elif text[0].isupper() and idx > 1:
            tok.coarse, tok.fine = "PROPN", "NNP"
        elif low in ADJECTIVES:
            tok.coarse, tok.fine = "ADJ", "JJ"
        elif vlemma is not None and low.endswith("ing"):
            tok.coarse, tok.fine, tok.lemma = "VERB", "VBG", vlemma
        elif vlemma is not None and (low.endswith("ed") or low in IRREGULAR_PASTS):
            vbn = prev is not None and prev.lemma in ("be", "have")
            tok.coarse, tok.fine, tok.lemma = "VERB", ("VBN" if vbn else "VBD"), vlemma
        elif vlemma is not None and low.endswith("s") and vlemma != low:
            # noun/verb ambiguity ("Ellie hands"): inside a prep phrase the
            # preposition still needs its object, so prefer the noun reading
            if _inside_open_prep_phrase(out):
                tok.coarse, tok.fine = "NOUN", "NNS"
            else:
                tok.coarse, tok.fine, tok.lemma = "VERB", "VBZ", vlemma
        elif vlemma == low:
            if prev is not None and prev.fine in ("TO", "MD"):
                tok.coarse, tok.fine, tok.lemma = "VERB", "VB", vlemma
            elif not any(t.coarse == "VERB" for t in out):
                tok.coarse, tok.fine, tok.lemma = "VERB", "VBP", vlemma
            else:
                tok.coarse, tok.fine = "NOUN", "NN"
        elif low.endswith("s") and len(low) > 3 and not low.endswith("ss"):
            tok.coarse, tok.fine = "NOUN", "NNS"
        out.append(tok)
    if out and out[0].coarse == "NOUN" and out[0].text[0].isupper() \
            and verb_lemma(out[0].text) is None:
        out[0].coarse, out[0].fine = "PROPN", "NNP"
    return out


def _inside_open_prep_phrase(out: list[Tok]) -> bool:
    """A preposition to the left still lacks its object."""
    for tok in reversed(out):
        if tok.coarse in ("VERB", "AUX") or tok.coarse == "PUNCT":
            return False
        if tok.coarse == "ADP" and tok.text.lower() in PREPS:
            return True
        if tok.coarse not in NOMINAL + ("DET", "ADJ", "PART"):
            return False
    return False


def _np_start(toks: list[Tok], i: int) -> int:
    """Walk left over this noun phrase's internal material."""
    j = i - 1
    while j >= 0 and (toks[j].coarse in ("DET", "ADJ")
                      or toks[j].fine in ("PRP$", "POS")
                      or toks[j].coarse in ("NOUN", "PROPN")):
        j -= 1
    return j


def parse(tokens: list[str]) -> list[Tok]:
    """Attach heads/labels; always yields a single-rooted acyclic tree."""
    toks = tag(tokens)
    n = len(toks)
    if not toks:
        return toks

    finite = [i for i, t in enumerate(toks)
              if t.coarse == "VERB" and t.fine in ("VBZ", "VBP", "VBD")]
    main_verbs = [i for i, t in enumerate(toks) if t.coarse == "VERB"]
    aux_idx = [i for i, t in enumerate(toks) if t.coarse == "AUX"]
    root = (finite or main_verbs or aux_idx or [0])[0]
    if aux_idx and (not finite or aux_idx[0] < finite[0]):
        participle = next((i for i in main_verbs
                           if i > aux_idx[0] and toks[i].fine in ("VBG", "VBN")), None)
        if participle is not None:
            root = participle  # periphrastic verb group: the aux attaches below
        elif not finite:
            root = aux_idx[0]

    # noun-phrase internals: possessors, compounds, determiners, adjectives
    i = 0
    while i < n:
        if toks[i].coarse in ("NOUN", "PROPN") and i != root:
            j = i
            while True:
                if j + 2 < n and toks[j + 1].fine == "POS" \
                        and toks[j + 2].coarse in ("NOUN", "PROPN"):
                    k = j + 2
                    while k + 1 < n and toks[k + 1].coarse in ("NOUN", "PROPN") \
                            and k + 1 != root:
                        k += 1
                    toks[j].dep, toks[j].head = "poss", toks[k].id
                    toks[j + 1].dep, toks[j + 1].head = "case", toks[j].id
                    j = k
                    continue
                if j + 1 < n and toks[j + 1].coarse in ("NOUN", "PROPN") \
                        and j + 1 != root:
                    toks[j].dep, toks[j].head = "compound", toks[j + 1].id
                    j += 1
                    continue
                break
            # re-point chained compounds at the final NP head
            for k in range(i, j):
                if toks[k].dep == "compound":
                    toks[k].head = toks[j].id
            i = j + 1
        else:
            i += 1
    for i, tok in enumerate(toks):
        if tok.head or i == root:
            continue
        if tok.coarse in ("DET", "ADJ") or tok.fine == "PRP$":
            run_end = None
            k = i + 1
            while k < n and (toks[k].coarse in ("DET", "ADJ", "NOUN", "PROPN")
                             or toks[k].fine == "POS"):
                if toks[k].coarse in ("NOUN", "PROPN"):
                    run_end = k
                k += 1
            if run_end is not None:
                tok.dep = {"DET": "det", "ADJ": "amod"}.get(tok.coarse, "poss")
                tok.head = toks[run_end].id

    last_verb_before: dict[int, int | None] = {}
    prev_verb = None
    for i, tok in enumerate(toks):
        last_verb_before[i] = prev_verb
        if tok.coarse == "VERB" or i == root:
            prev_verb = i

    def nearest_verb(i: int, prefer_following=False) -> int:
        before = last_verb_before[i]
        after = next((k for k in range(i + 1, n)
                      if toks[k].coarse == "VERB" or k == root), None)
        if prefer_following and after is not None:
            return after
        if before is not None:
            return before
        return after if after is not None else root

    # function words and clause markers
    for i, tok in enumerate(toks):
        if tok.head or i == root:
            continue
        low = tok.text.lower()
        if tok.coarse == "PUNCT":
            tok.dep, tok.head = "punct", toks[root].id
        elif tok.coarse == "AUX":
            target = next((k for k in main_verbs if k > i), None)
            if target is not None:
                passive = toks[target].fine == "VBN" and tok.lemma == "be"
                tok.dep, tok.head = ("auxpass" if passive else "aux"), toks[target].id
            else:
                tok.dep, tok.head = "aux", toks[root].id
        elif tok.fine in ("TO", "MD"):
            target = next((k for k in main_verbs if k > i), root)
            tok.dep, tok.head = "aux", toks[target].id
        elif tok.coarse == "ADV" and tok.fine != "WRB":
            tok.dep = "advmod"
            tok.head = toks[nearest_verb(i, prefer_following=(i < root))].id
        elif tok.coarse == "ADP" and low in SUBORDINATORS:
            later = next((k for k in main_verbs if k > i and k != root), None)
            if later is not None:
                tok.dep, tok.head = "mark", toks[later].id
            else:
                tok.dep, tok.head = "prep", toks[root].id
        elif tok.coarse == "ADP":
            anchor = nearest_verb(i)
            tok.dep = "agent" if (low == "by" and toks[anchor].fine == "VBN") else "prep"
            tok.head = toks[anchor].id
        elif tok.fine == "CC":
            prev_head = next((k for k in range(i - 1, -1, -1)
                              if toks[k].coarse in ("VERB", "NOUN", "PROPN")), root)
            tok.dep, tok.head = "cc", toks[prev_head].id

    # nominal grammatical functions
    nominal_heads = [i for i, t in enumerate(toks)
                     if t.coarse in NOMINAL and not t.head and i != root
                     and t.fine != "POS"]
    for i in nominal_heads:
        tok = toks[i]
        if tok.fine == "EX":
            tok.dep, tok.head = "expl", toks[root].id
            continue
        start = _np_start(toks, i)
        licenser = toks[start] if start >= 0 else None
        if licenser is not None and licenser.coarse == "PUNCT" and start - 1 >= 0:
            licenser = toks[start - 1]
        if licenser is not None and licenser.coarse == "ADP" \
                and licenser.dep in ("prep", "agent"):
            tok.dep, tok.head = "pobj", licenser.id
            continue
        if licenser is not None and licenser.fine == "CC" and licenser.head:
            tok.dep, tok.head = "conj", licenser.head
            continue
        clause_verbs = sorted(set(main_verbs) | {root})
        following = next((k for k in clause_verbs if k > i), None)
        end = following if following is not None else n
        intervening = any(i < k < end for k in nominal_heads)
        if i < root:
            target = following if (following is not None and following <= root
                                   and not intervening) else root
            passive = any(t.dep == "auxpass" and t.head == toks[target].id
                          for t in toks)
            tok.dep = "nsubjpass" if passive else "nsubj"
            tok.head = toks[target].id
        elif following is not None and not intervening \
                and not any(t.head == toks[following].id and t.dep.startswith("nsubj")
                            for t in toks):
            tok.dep, tok.head = "nsubj", toks[following].id
        else:
            before = last_verb_before[i] if last_verb_before[i] is not None else root
            if toks[before].lemma == "be":
                tok.dep, tok.head = "attr", toks[before].id
            elif any(t.head == toks[before].id and t.dep == "dobj" for t in toks):
                tok.dep, tok.head = "dep", toks[before].id
            else:
                tok.dep, tok.head = "dobj", toks[before].id

    # secondary verbs: coordination, subordination, participials, complements
    for i, tok in enumerate(toks):
        if tok.head or i == root:
            continue
        if tok.coarse == "VERB":
            has_mark = any(t.dep == "mark" and t.head == tok.id for t in toks)
            has_cc_before = any(t.fine == "CC" and k < i for k, t in enumerate(toks))
            prev_noun = next((k for k in range(i - 1, -1, -1)
                              if toks[k].coarse in ("NOUN", "PROPN")), None)
            if has_mark:
                tok.dep, tok.head = "advcl", toks[root].id
            elif has_cc_before and toks[root].coarse in ("VERB", "AUX"):
                tok.dep, tok.head = "conj", toks[root].id
            elif any(t.fine == "TO" and t.head == tok.id for t in toks):
                tok.dep, tok.head = "xcomp", toks[root].id
            elif tok.fine in ("VBG", "VBN") and prev_noun is not None \
                    and i - prev_noun <= 2 and prev_noun != root:
                tok.dep, tok.head = "acl", toks[prev_noun].id
            elif tok.fine == "VBG" and last_verb_before[i] is not None:
                tok.dep, tok.head = "xcomp", toks[last_verb_before[i]].id
            else:
                tok.dep, tok.head = "ccomp", toks[root].id

    # repair pass: unattached, self-headed, or cyclic tokens go to the root
    for i, tok in enumerate(toks):
        if i == root:
            continue
        if tok.head == 0 or tok.head == tok.id:
            tok.head, tok.dep = toks[root].id, (tok.dep if tok.head == 0 and tok.dep != "dep"
                                                else "dep")
    for tok in toks:
        if tok.id == toks[root].id:
            continue
        seen = {tok.id}
        cur = tok
        while cur.head:
            nxt = toks[cur.head - 1]
            if nxt.id in seen:
                tok.head, tok.dep = toks[root].id, "dep"
                break
            seen.add(nxt.id)
            cur = nxt
    toks[root].head, toks[root].dep = 0, "ROOT"
    return toks


def to_conllx(toks: list[Tok]) -> str:
    lines = []
    for tok in toks:
        lines.append("\t".join([str(tok.id), tok.text, tok.lemma, tok.coarse,
                                tok.fine, tok.dep, str(tok.head), "_", "_", "_"]))
    return "\n".join(lines) + "\n"
