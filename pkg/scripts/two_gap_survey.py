"""Scan every short factor and compare its observed gaps with the predicted profile.

Groups factors by type and reports how many matched, plus the wall time.
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from gapseq.classify import classify_type
from gapseq.gaps import factor_gaps, gap_sequence_labels
from gapseq.kernel import star_decompose
from gapseq.oracle import empirical_gaps_count, factors_of, prefix


@dataclass
class SurveyConfig:
    d: int = 2
    prefix_len: int = 3000
    max_len: int = 30
    occurrences: int = 101


def survey(cfg: SurveyConfig):
    matched, total = Counter(), Counter()
    mismatches = []
    for w in factors_of(prefix(cfg.d, cfg.prefix_len), cfg.max_len):
        tag = classify_type(w, cfg.d)
        key = tag.name if not tag.order_zero else f"{tag.name} ~ {tag.sign_match}"
        rep = empirical_gaps_count(w, cfg.d, cfg.occurrences)
        prof = factor_gaps(w, cfg.d)
        want = gap_sequence_labels(cfg.d, star_decompose(w, cfg.d).i, len(rep.gaps))
        got = "".join("A" if g == prof.gap_a else "B" if g == prof.gap_b else "?" for g in rep.gaps)
        total[key] += 1
        if got == want:
            matched[key] += 1
        else:
            mismatches.append(w)
    return matched, total, mismatches


def main():
    cfg = SurveyConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-d", type=int, default=cfg.d)
    ap.add_argument("--prefix-len", type=int, default=cfg.prefix_len)
    ap.add_argument("--max-len", type=int, default=cfg.max_len)
    ap.add_argument("--occurrences", type=int, default=cfg.occurrences)
    cfg = SurveyConfig(**vars(ap.parse_args()))

    start = time.perf_counter()
    matched, total, bad = survey(cfg)
    for key in sorted(total):
        print(f"{key:<22} {matched[key]:>5}/{total[key]}")
    print(f"factors={sum(total.values())} mismatches={len(bad)} time={time.perf_counter() - start:.2f}s")
    if bad:
        print("first mismatches:", bad[:5])


if __name__ == "__main__":
    main()
