"""Tabulate G_0, G_A, G_B and the switch index for kernel or envelope words."""

import argparse
from dataclasses import dataclass

from gapseq.gaps import envelope_gaps, gap_sequence_labels, gap_zero, kernel_gaps
from gapseq.kernel import KernelIndex, envelope_word, kernel_word


@dataclass
class TableConfig:
    d: int = 3
    m_max: int = 2
    envelope: bool = False
    labels: int = 20
    width: int = 28  # truncate long words in the table


def _cut(s, width):
    s = str(s)
    return s if len(s) <= width else s[: width - 3] + "..."


def main():
    cfg = TableConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-d", type=int, default=cfg.d)
    ap.add_argument("--m-max", type=int, default=cfg.m_max)
    ap.add_argument("--envelope", action="store_true")
    ap.add_argument("--labels", type=int, default=cfg.labels)
    ap.add_argument("--width", type=int, default=cfg.width)
    cfg = TableConfig(**vars(ap.parse_args()))

    word_of, gaps_of = (envelope_word, envelope_gaps) if cfg.envelope else (kernel_word, kernel_gaps)
    head = ("index", "|w|", "G_0", "G_A", "G_B", "B", "labels")
    print(" | ".join(head))
    print(" | ".join("---" for _ in head))
    for m in range(cfg.m_max + 1):
        for i in range(cfg.d):
            k = KernelIndex(cfg.d, m, i)
            w = word_of(k)
            prof = gaps_of(k)
            row = (str(k), len(w), gap_zero(w, cfg.d) or "ε", prof.gap_a, prof.gap_b,
                   prof.switch, gap_sequence_labels(cfg.d, i, cfg.labels))
            print(" | ".join(_cut(c, cfg.width) for c in row))


if __name__ == "__main__":
    main()
