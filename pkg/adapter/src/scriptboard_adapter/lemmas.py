"""Compact lemmatization for the heuristic backend."""

IRREGULAR = {
    "was": "be", "were": "be", "been": "be", "is": "be", "are": "be", "am": "be",
    "'s": "be", "'re": "be", "'m": "be",
    "has": "have", "had": "have", "'ve": "have",
    "did": "do", "does": "do", "done": "do",
    "came": "come", "come": "come", "went": "go", "gone": "go",
    "saw": "see", "seen": "see", "gave": "give", "given": "give",
    "took": "take", "taken": "take", "got": "get", "gotten": "get",
    "made": "make", "said": "say", "told": "tell", "thought": "think",
    "knew": "know", "known": "know", "found": "find", "left": "leave",
    "felt": "feel", "kept": "keep", "held": "hold", "met": "meet",
    "ran": "run", "sat": "sit", "stood": "stand", "threw": "throw",
    "thrown": "throw", "fell": "fall", "fallen": "fall", "wrote": "write",
    "written": "write", "read": "read", "heard": "hear", "spoke": "speak",
    "spoken": "speak", "brought": "bring", "bought": "buy", "caught": "catch",
    "taught": "teach", "sent": "send", "spent": "spend", "built": "build",
    "hung": "hang", "hit": "hit", "put": "put", "cut": "cut", "let": "let",
    "shook": "shake", "shaken": "shake", "sang": "sing", "sung": "sing",
    "drank": "drink", "drunk": "drink", "ate": "eat", "eaten": "eat",
    "slept": "sleep", "woke": "wake", "woken": "wake", "wore": "wear",
    "worn": "wear", "drove": "drive", "driven": "drive", "rose": "rise",
    "risen": "rise", "flew": "fly", "flown": "fly", "crept": "creep",
    "knelt": "kneel", "leapt": "leap", "swam": "swim", "swum": "swim",
    "coming": "come", "giving": "give", "taking": "take", "making": "make",
    "leaving": "leave", "waving": "wave", "smiling": "smile", "hiding": "hide",
    "writing": "write", "riding": "ride", "sliding": "slide", "shaking": "shake",
}

_VOWELS = "aeiou"


def lemma_of(word: str) -> str:
    """Best-effort lemma: irregular table, then suffix stripping."""
    word = word.lower()
    if word in IRREGULAR:
        return IRREGULAR[word]
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("es") and word[:-2].endswith(("s", "x", "z", "ch", "sh", "o")):
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")) and len(word) > 3:
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
            return stem + "e"
        if stem.endswith("i"):
            return stem[:-1] + "y"
        return stem
    return word
