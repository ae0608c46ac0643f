"""Evaluation protocol: Levenshtein alignment, corpus BLEU, SARI, field P/R/F1.

Metric tokenization is pinned for reproducibility: lowercase, separate
terminal punctuation, split on whitespace. BLEU is the standard corpus
definition (multi-reference clipped counts, closest-length brevity
penalty, geometric mean) without smoothing unless asked. SARI averages
add-F1, keep-F1, and delete-precision over n-grams 1..4; components with
an empty target set and no system errors score 1.0 (vacuous success), so
a sentence identical to source and references scores 100.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field

from .errors import InputError

_TOKEN_RE = re.compile(r"[\w'&-]+|[.,!?;:]")


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


def levenshtein(a: str, b: str) -> int:
    """Character-level edit distance, unit costs."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ch_a in enumerate(a, start=1):
        current = [i]
        for j, ch_b in enumerate(b, start=1):
            current.append(min(previous[j] + 1,
                               current[j - 1] + 1,
                               previous[j - 1] + (ch_a != ch_b)))
        previous = current
    return previous[len(b)]


@dataclass
class AlignedPair:
    hypothesis: str
    references: list[str]
    levenshtein_costs: list[int]


def align(hypotheses: list[str], annotator_refs: list[list[str]]) -> list[AlignedPair]:
    """Pick each annotator's least-edit-distance reference per hypothesis.

    Ties break toward the lowest reference index; references may be
    reused across hypotheses.
    """
    for idx, refs in enumerate(annotator_refs):
        if not refs:
            raise InputError(f"annotator {idx + 1} has an empty reference set")
    pairs = []
    for hyp in hypotheses:
        chosen, costs = [], []
        for refs in annotator_refs:
            distances = [levenshtein(hyp, ref) for ref in refs]
            best = min(range(len(refs)), key=lambda j: (distances[j], j))
            chosen.append(refs[best])
            costs.append(distances[best])
        pairs.append(AlignedPair(hyp, chosen, costs))
    return pairs


def _ngrams(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(pairs: list[AlignedPair], max_n: int = 4, smoothing: bool = False) -> float:
    """Corpus-level BLEU as a percentage [0, 100]."""
    if not pairs:
        raise InputError("corpus_bleu needs at least one aligned pair")
    if not 1 <= max_n <= 4:
        raise InputError(f"max_n must be in 1..4, got {max_n}")
    clipped = [0] * max_n
    totals = [0] * max_n
    hyp_len = 0
    ref_len = 0
    for pair in pairs:
        hyp = tokenize(pair.hypothesis)
        refs = [tokenize(r) for r in pair.references]
        hyp_len += len(hyp)
        ref_len += min((len(r) for r in refs),
                       key=lambda L: (abs(L - len(hyp)), L))
        for n in range(1, max_n + 1):
            counts = _ngrams(hyp, n)
            if not counts:
                continue
            max_ref = Counter()
            for ref in refs:
                ref_counts = _ngrams(ref, n)
                for gram, cnt in ref_counts.items():
                    if cnt > max_ref[gram]:
                        max_ref[gram] = cnt
            clipped[n - 1] += sum(min(cnt, max_ref[gram]) for gram, cnt in counts.items())
            totals[n - 1] += sum(counts.values())
    # Orders with no n-grams anywhere in the corpus are vacuous and drop
    # out of the geometric mean (keeps corpus_bleu(x, x) = 100 on short
    # sentences); a zero numerator on a populated order still zeroes BLEU.
    effective = [n for n in range(max_n) if totals[n] > 0]
    if not effective:
        return 0.0
    log_sum = 0.0
    for n in effective:
        num, den = clipped[n], totals[n]
        if smoothing and n > 0:
            num, den = num + 1, den + 1
        if num == 0:
            return 0.0  # no smoothing: zero n-gram overlap means BLEU 0
        log_sum += math.log(num / den) / len(effective)
    brevity = 1.0 if hyp_len > ref_len else math.exp(1 - ref_len / max(hyp_len, 1))
    return 100.0 * brevity * math.exp(log_sum)


def _f1(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if (p + r) > 0 else 0.0


def _sari_sentence(source: str, hypothesis: str, references: list[str]) -> float:
    src = tokenize(source)
    hyp = tokenize(hypothesis)
    refs = [tokenize(r) for r in references]
    total = 0.0
    for n in range(1, 5):
        s_counts = _ngrams(src, n)
        c_counts = _ngrams(hyp, n)
        r_counts = Counter()
        for ref in refs:
            r_counts |= _ngrams(ref, n)  # per-gram max across references

        s_set, c_set = set(s_counts), set(c_counts)
        r_set = set(r_counts)
        # keep: n-grams shared by source and hypothesis, credited when kept by refs
        kept = s_set & c_set
        keep_target = s_set & r_set
        good_keep = kept & r_set
        keep_p = len(good_keep) / len(kept) if kept else 1.0
        keep_r = len(good_keep) / len(keep_target) if keep_target else 1.0
        keep_f = _f1(keep_p, keep_r) if (kept or keep_target) else 1.0
        # add: n-grams absent from source
        added = c_set - s_set
        add_target = r_set - s_set
        good_add = added & add_target
        add_p = len(good_add) / len(added) if added else 1.0
        add_r = len(good_add) / len(add_target) if add_target else 1.0
        add_f = _f1(add_p, add_r) if (added or add_target) else 1.0
        # delete: precision only
        deleted = s_set - c_set
        del_target = s_set - r_set
        good_del = deleted & del_target
        del_p = len(good_del) / len(deleted) if deleted else 1.0
        total += (add_f + keep_f + del_p) / 3.0
    return total / 4.0


def sari(sources: list[str], hypotheses: list[str],
         references: list[list[str]]) -> float:
    """Corpus SARI (percentage): mean over sentences of the sentence score."""
    if not (len(sources) == len(hypotheses) == len(references)):
        raise InputError("sari: sources, hypotheses, and references lengths differ")
    if not sources:
        raise InputError("sari needs at least one sentence")
    for idx, refs in enumerate(references):
        if not refs:
            raise InputError(f"sari: sentence {idx} has no references")
    scores = [_sari_sentence(s, h, r) for s, h, r in zip(sources, hypotheses, references)]
    return 100.0 * sum(scores) / len(scores)


def boolean_prf(system: list[bool], gold: list[bool]) -> tuple[float, float, float]:
    """Precision/recall/F1 (percentages) for the positive class."""
    if len(system) != len(gold):
        raise InputError("boolean_prf: length mismatch")
    tp = sum(1 for s, g in zip(system, gold) if s and g)
    fp = sum(1 for s, g in zip(system, gold) if s and not g)
    fn = sum(1 for s, g in zip(system, gold) if not s and g)
    precision = 100.0 * tp / (tp + fp) if (tp + fp) else 0.0
    recall = 100.0 * tp / (tp + fn) if (tp + fn) else 0.0
    f1 = 2 * precision * recall / (precision + recall) if (precision + recall) else 0.0
    return precision, recall, f1


ARF_TEXT_FIELDS = ["owner", "target", "prop", "action", "origin_action",
                   "manner", "modifier_location", "modifier_direction", "emotion"]

# boolean view of the non-textual fields: "did the system move off the default"
ARF_BOOLEAN_VIEWS = {
    "translation": lambda r: bool(r.get("translation")),
    "rotation": lambda r: bool(r.get("rotation")),
    "duration": lambda r: r.get("duration", 2) != 2,
    "speed": lambda r: r.get("speed", 1) != 1,
    "start_time": lambda r: float(r.get("start_time", 0)) > 0,
}


def evaluate_arfs(system: list[dict], gold: list[dict]
                  ) -> tuple[dict[str, float], dict[str, tuple[float, float, float]]]:
    """Per-field BLEU1 for textual fields, P/R/F1 for the boolean views."""
    if len(system) != len(gold):
        raise InputError("evaluate_arfs: system/gold record counts differ")
    per_field: dict[str, float] = {}
    for name in ARF_TEXT_FIELDS:
        pairs = []
        for sys_rec, gold_rec in zip(system, gold):
            hyp = str(sys_rec.get(name) or "")
            ref = str(gold_rec.get(name) or "")
            if not tokenize(hyp) and not tokenize(ref):
                continue  # nothing to judge on either side
            pairs.append(AlignedPair(hyp, [ref], [levenshtein(hyp, ref)]))
        per_field[name] = corpus_bleu(pairs, max_n=1) if pairs else 100.0
    prf: dict[str, tuple[float, float, float]] = {}
    for name, view in ARF_BOOLEAN_VIEWS.items():
        prf[name] = boolean_prf([view(r) for r in system], [view(r) for r in gold])
    return per_field, prf


@dataclass
class MetricReport:
    bleu: float = 0.0
    sari: float = 0.0
    per_field_bleu1: dict[str, float] = field(default_factory=dict)
    boolean_field_prf: dict[str, tuple[float, float, float]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "bleu": self.bleu,
            "sari": self.sari,
            "per_field_bleu1": self.per_field_bleu1,
            "boolean_field_prf": {k: {"precision": p, "recall": r, "f1": f}
                                  for k, (p, r, f) in self.boolean_field_prf.items()},
        }

    def table(self) -> str:
        lines = [f"{'metric':<24}{'value':>10}",
                 f"{'BLEU':<24}{self.bleu:>10.2f}",
                 f"{'SARI':<24}{self.sari:>10.2f}"]
        for name, value in self.per_field_bleu1.items():
            lines.append(f"{'BLEU1 ' + name:<24}{value:>10.2f}")
        for name, (p, r, f) in self.boolean_field_prf.items():
            lines.append(f"{name:<24}P {p:6.2f}  R {r:6.2f}  F1 {f:6.2f}")
        return "\n".join(lines)
