#!/usr/bin/env python3
"""Regenerates bleu_cases.hpp.

Reference implementation of corpus-level 4-gram BLEU (clipped n-gram
precision, geometric mean, brevity penalty — the mteval-v13a computation).
Every generated case has at least one clipped match at every order, so the
expected value is independent of any smoothing scheme and any correct BLEU
implementation produces the same number. Two closed-form cases are verified
by explicit arithmetic before the header is written.
"""

import math
import random
from collections import Counter

OUT = "bleu_cases.hpp"


def ngrams(words, n):
    return Counter(tuple(words[i:i + n]) for i in range(len(words) - n + 1))


def corpus_bleu(hyps, refs):
    hyp_len = sum(len(h) for h in hyps)
    ref_len = sum(len(r) for r in refs)
    matches = [0] * 4
    totals = [0] * 4
    for hyp, ref in zip(hyps, refs):
        for n in range(1, 5):
            h = ngrams(hyp, n)
            r = ngrams(ref, n)
            totals[n - 1] += sum(h.values())
            matches[n - 1] += sum(min(c, r[g]) for g, c in h.items())
    assert all(m > 0 for m in matches), "case would depend on smoothing"
    log_sum = sum(math.log(matches[n] / totals[n]) for n in range(4))
    bp = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    return 100.0 * bp * math.exp(log_sum / 4.0)


def self_check():
    # Identity: every precision 1, no brevity penalty.
    assert abs(corpus_bleu([list("abcdef")], [list("abcdef")]) - 100.0) < 1e-9
    # One substitution in five words: precisions 4/5, 3/4, 2/3, 1/2 and no
    # brevity penalty give 100 * (1/5)^(1/4).
    got = corpus_bleu([["a", "b", "c", "d", "e"]], [["a", "b", "c", "d", "f"]])
    assert abs(got - 100.0 * 0.2 ** 0.25) < 1e-9, got
    # Perfect precisions but one missing word: BP = exp(1 - 5/4).
    got = corpus_bleu([["a", "b", "c", "d"]], [["a", "b", "c", "d", "e"]])
    assert abs(got - 100.0 * math.exp(1.0 - 5.0 / 4.0)) < 1e-9, got


VOCAB = ["the", "cat", "dog", "sat", "ran", "on", "under", "mat", "tree",
         "house", "a", "quick", "brown", "fox", "lazy", "bird", "sang",
         "loudly", "today", "again"]


def perturbed(ref, rng):
    hyp = list(ref)
    edits = rng.randint(0, max(1, len(hyp) // 3))
    for _ in range(edits):
        kind = rng.random()
        pos = rng.randrange(len(hyp))
        if kind < 0.5:
            hyp[pos] = rng.choice(VOCAB)
        elif kind < 0.75 and len(hyp) > 5:
            del hyp[pos]
        else:
            hyp.insert(pos, rng.choice(VOCAB))
    return hyp


def make_cases():
    rng = random.Random(20260809)
    cases = []
    # Hand-picked closed-form cases first.
    cases.append(([["a", "b", "c", "d", "e"]], [["a", "b", "c", "d", "f"]]))
    cases.append(([["a", "b", "c", "d"]], [["a", "b", "c", "d", "e"]]))
    while len(cases) < 20:
        sentences = rng.randint(1, 5)
        refs, hyps = [], []
        for s in range(sentences):
            length = rng.randint(5, 12)
            ref = [rng.choice(VOCAB) for _ in range(length)]
            # The first sentence is kept verbatim so every order has a match
            # no matter how the rest is perturbed.
            hyp = list(ref) if s == 0 else perturbed(ref, rng)
            refs.append(ref)
            hyps.append(hyp)
        if any(len(h) == 0 for h in hyps):
            continue
        cases.append((hyps, refs))
    return cases


def cpp_string(words):
    return '"' + " ".join(words) + '"'


def main():
    self_check()
    cases = make_cases()
    lines = []
    lines.append("// Generated by make_bleu_cases.py; do not edit by hand.")
    lines.append("#pragma once")
    lines.append("")
    lines.append("#include <string>")
    lines.append("#include <vector>")
    lines.append("")
    lines.append("namespace simt_test {")
    lines.append("")
    lines.append("struct BleuCaseData {")
    lines.append("  std::vector<std::string> hyps;")
    lines.append("  std::vector<std::string> refs;")
    lines.append("  double expected;")
    lines.append("};")
    lines.append("")
    lines.append("inline const std::vector<BleuCaseData>& bleu_cases() {")
    lines.append("  static const std::vector<BleuCaseData> cases = {")
    for hyps, refs in cases:
        expected = corpus_bleu(hyps, refs)
        hyp_list = ", ".join(cpp_string(h) for h in hyps)
        ref_list = ", ".join(cpp_string(r) for r in refs)
        lines.append("      {{%s}," % hyp_list)
        lines.append("       {%s}," % ref_list)
        lines.append("       %.10f}," % expected)
    lines.append("  };")
    lines.append("  return cases;")
    lines.append("}")
    lines.append("")
    lines.append("}  // namespace simt_test")
    with open(OUT, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {OUT} with {len(cases)} cases")


if __name__ == "__main__":
    main()
