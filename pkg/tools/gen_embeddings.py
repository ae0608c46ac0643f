#!/usr/bin/env python3
"""Generate the bundled toy embedding table (deterministic, 50-d).

Vectors are random unit vectors except for a few engineered neighborhoods
the tests rely on: squint~look, furious~angry, gaze~look. "watch" is left
random so it stays below the action threshold (a known mapping failure
case). The script asserts the separations it promises, so a regenerated
file with a different seed either passes the same guarantees or refuses.
"""

import json
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "scriptboard" / "data"

DIM = 50
SEED = 20240817


def unit(vec):
    return vec / np.linalg.norm(vec)


def main():
    lexicon = json.loads((DATA / "lexicon.json").read_text())
    rng = np.random.default_rng(SEED)
    vocab = list(lexicon["animations"]) + list(lexicon["objects"])
    vocab += ["squint", "furious", "watch", "gaze", "shove", "confused"]
    vocab += lexicon.get("emotion_words", ["angry", "happy", "sad", "scared",
                                           "surprised", "calm", "excited", "nervous"])
    seen = set()
    vocab = [w for w in vocab if not (w in seen or seen.add(w))]

    vectors = {w: unit(rng.normal(size=DIM)) for w in vocab}
    vectors["squint"] = unit(0.9 * vectors["look"] + 0.3 * unit(rng.normal(size=DIM)))
    vectors["gaze"] = unit(0.85 * vectors["look"] + 0.4 * unit(rng.normal(size=DIM)))
    vectors["furious"] = unit(0.9 * vectors["angry"] + 0.3 * unit(rng.normal(size=DIM)))
    vectors["shove"] = unit(0.85 * vectors["push"] + 0.4 * unit(rng.normal(size=DIM)))

    def cos(a, b):
        return float(np.dot(vectors[a], vectors[b]))

    engineered = {("squint", "look"), ("gaze", "look"), ("furious", "angry"),
                  ("shove", "push")}
    for a, b in engineered:
        assert cos(a, b) >= 0.70, (a, b, cos(a, b))
    anims = set(lexicon["animations"])
    candidates = anims | set(lexicon["objects"]) | set(lexicon["emotion_words"])
    for probe, target in (("squint", "look"), ("gaze", "look"), ("shove", "push"),
                          ("furious", "angry")):
        best = max(candidates, key=lambda w: cos(probe, w))
        assert best == target, (probe, best)
        for cand in candidates - {target}:
            assert cos(probe, cand) < 0.5, (probe, cand, cos(probe, cand))
    for cand in candidates:
        for other in ("watch", "confused"):
            assert cos(other, cand) < 0.5, (other, cand, cos(other, cand))
    assert cos("watch", "look") < 0.55, cos("watch", "look")

    lines = [f"{len(vocab)} {DIM}"]
    for word in vocab:
        lines.append(word + " " + " ".join(f"{v:.6f}" for v in vectors[word]))
    (DATA / "embeddings.vec").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(vocab)} x {DIM} vectors")
    return 0


if __name__ == "__main__":
    sys.exit(main())
