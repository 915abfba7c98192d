"""Word/juncture accuracy, syllable-count histograms, and the method ablation.

The reference for word accuracy is the phone-domain SSP syllable count of
the same record, so every number here is reproducible from the dictionaries
alone, without human-annotated gold syllabifications.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass

from .errors import UndefinedMetricError
from .pipeline import METHOD_CHOICES, Resources, syllabify_word
from .ssp import Syllabification


def word_accuracy(records) -> float:
    """Percentage of records whose text and phone syllable counts agree."""
    records = list(records)
    if not records:
        raise UndefinedMetricError("word accuracy over an empty record set")
    ok = sum(1 for r in records
             if r.text_syll.n_syllables == r.phone_syll.n_syllables)
    return 100.0 * ok / len(records)


def juncture_accuracy(pred: Syllabification, gold: Syllabification) -> float:
    """Fraction of inter-symbol positions where break/no-break agrees."""
    if pred.symbols != gold.symbols:
        raise ValueError("juncture accuracy needs identical symbol sequences")
    positions = len(pred.symbols) - 1
    if positions <= 0:
        return 1.0
    p, g = set(pred.breaks), set(gold.breaks)
    agree = sum(1 for i in range(1, len(pred.symbols)) if (i in p) == (i in g))
    return agree / positions


def syllable_histogram(records) -> dict[int, float]:
    """Share of records (in %) per phone-domain syllable count."""
    records = list(records)
    if not records:
        raise UndefinedMetricError("histogram over an empty record set")
    counts = Counter(r.phone_syll.n_syllables for r in records)
    return {k: 100.0 * v / len(records) for k, v in sorted(counts.items())}


@dataclass
class AblationResult:
    language_variant: str
    accuracies: dict[str, float | None]  # method -> %, None when unavailable
    sample_size: int
    seed: int


def run_ablation(resources: Resources, sample_size: int, seed: int,
                 methods=METHOD_CHOICES) -> AblationResult:
    """Word accuracy of each method over a seeded uniform dictionary sample.

    Lookup methods are reported as None when no syllabified corpus is
    loaded, mirroring the empty cells of the per-language results table.
    """
    lexicon = resources.lexicon
    if not 0 < sample_size <= len(lexicon):
        raise ValueError(
            f"sample_size must be in [1, {len(lexicon)}], got {sample_size}")
    words = random.Random(seed).sample(sorted(lexicon.entries), sample_size)
    accuracies: dict[str, float | None] = {}
    for method in methods:
        if method.startswith("lkp") and resources.syllabified is None:
            accuracies[method] = None
            continue
        records = [syllabify_word(w, resources, method) for w in words]
        accuracies[method] = word_accuracy(records)
    return AblationResult(resources.variant, accuracies, sample_size, seed)


def ablation_tsv(result: AblationResult) -> str:
    lines = [f"# language_variant={result.language_variant}"
             f"\tsample_size={result.sample_size}\tseed={result.seed}",
             "method\taccuracy"]
    for method, acc in result.accuracies.items():
        lines.append(f"{method}\t{'-' if acc is None else f'{acc:.1f}'}")
    return "\n".join(lines) + "\n"


def ablation_json(result: AblationResult) -> str:
    return json.dumps({
        "language_variant": result.language_variant,
        "sample_size": result.sample_size,
        "seed": result.seed,
        "accuracies": {m: None if a is None else round(a, 1)
                       for m, a in result.accuracies.items()},
    }, ensure_ascii=False, indent=2) + "\n"


def histogram_tsv(histogram: dict[int, float]) -> str:
    lines = ["n_syllables\tpercentage"]
    lines += [f"{k}\t{v:.2f}" for k, v in sorted(histogram.items())]
    return "\n".join(lines) + "\n"


def histogram_csv(histogram: dict[int, float]) -> str:
    lines = ["n_syllables,percentage"]
    lines += [f"{k},{v:.2f}" for k, v in sorted(histogram.items())]
    return "\n".join(lines) + "\n"


def histogram_json(histogram: dict[int, float]) -> str:
    return json.dumps({str(k): round(v, 2) for k, v in sorted(histogram.items())},
                      indent=2) + "\n"
