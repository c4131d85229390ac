#!/usr/bin/env python3
"""Generates the golden-report fixture corpora under tests/fixtures/.

Two synthetic manifests are built so that their pooled error rates land on
exact targets once scored (all errors are single-token substitutions at
distinct positions, so the minimal alignment is forced):

  candidate: O-WER 25.3, N-WER 7.7, R-WER set1 6.8, R-WER set2 32.2
  baseline:  O-WER 26.7, N-WER 6.7, R-WER set1 7.3, R-WER set2 40.2

Cell types per token slot:
  R1OK/R2OK   rare word, transcribed correctly
  R1SUB/R2SUB rare word, substituted by a junk token
  CSUB        common word, substituted by a junk token
  CASE        word correct up to casing (orthographic-only error)
  FILL        common word, correct

The output is committed; rerun only to regenerate from scratch.
"""

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

SYL = ["ba", "re", "mo", "ti", "lu", "ke", "sa", "ni", "vo", "du"]


def pool_word(prefix: str, i: int) -> str:
    return prefix + SYL[(i // 10) % 10] + SYL[i % 10]


POOLS = {
    "fill": (lambda i: pool_word("tan", i % 100)),
    "rare1": (lambda i: pool_word("bex", i % 50)),
    "rare2": (lambda i: pool_word("vul", i % 50)),
    "case": (lambda i: pool_word("kor", i % 100)),
}


def build_dataset(name: str, cells: list[str], seed: int) -> list[dict]:
    rng = random.Random(seed)
    rng.shuffle(cells)
    assert len(cells) % 10 == 0

    counters = {k: 0 for k in POOLS}
    junk_counter = 0

    def draw(pool: str) -> str:
        w = POOLS[pool](counters[pool])
        counters[pool] += 1
        return w

    records = []
    for u in range(len(cells) // 10):
        ref, hyp = [], []
        for cell in cells[u * 10 : (u + 1) * 10]:
            junk = None
            if cell in ("R1SUB", "R2SUB", "CSUB"):
                junk = f"q{junk_counter}z"
                junk_counter += 1
            if cell == "R1OK":
                w = draw("rare1")
                ref.append(w), hyp.append(w)
            elif cell == "R1SUB":
                ref.append(draw("rare1")), hyp.append(junk)
            elif cell == "R2OK":
                w = draw("rare2")
                ref.append(w), hyp.append(w)
            elif cell == "R2SUB":
                ref.append(draw("rare2")), hyp.append(junk)
            elif cell == "CSUB":
                ref.append(draw("fill")), hyp.append(junk)
            elif cell == "CASE":
                w = draw("case")
                ref.append(w.capitalize()), hyp.append(w)
            elif cell == "FILL":
                w = draw("fill")
                ref.append(w), hyp.append(w)
            else:
                raise ValueError(cell)
        assert len(set(ref)) == 10, (name, u, ref)
        records.append(
            {
                "id": f"{name}-{u:04d}",
                "duration_s": 3.0 + (u % 70) / 10.0,
                "primary_text": " ".join(ref),
                "hyp_text": " ".join(hyp),
            }
        )
    return records


def cells_for(r1ok, r1sub, r2ok, r2sub, csub, case, fill):
    return (
        ["R1OK"] * r1ok
        + ["R1SUB"] * r1sub
        + ["R2OK"] * r2ok
        + ["R2SUB"] * r2sub
        + ["CSUB"] * csub
        + ["CASE"] * case
        + ["FILL"] * fill
    )


def write_manifest(path: Path, records: list[dict]) -> None:
    with path.open("w", encoding="utf-8") as f:
        for rec in records:
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")


def write_rare_list(path: Path, prefix: str, n: int) -> None:
    words = sorted(pool_word(prefix, i) for i in range(n))
    with path.open("w", encoding="utf-8") as f:
        f.write(f"# fixture rare words ({prefix}*)\n")
        for w in words:
            f.write(w + "\n")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    # candidate: 3000 ref tokens, N errors 231 (= 34+161+36), O adds 528
    # casing subs; rare denominators 500/500.
    candidate = build_dataset(
        "cand",
        cells_for(466, 34, 339, 161, 36, 528, 1436),
        seed=20260811,
    )
    # baseline: 5000 ref tokens, N errors 335 (= 73+201+61), O adds 1000;
    # rare denominators 1000/500.
    baseline = build_dataset(
        "base",
        cells_for(927, 73, 299, 201, 61, 1000, 2439),
        seed=11808062,
    )

    write_manifest(OUT / "devset_sim_candidate.jsonl", candidate)
    write_manifest(OUT / "devset_sim_baseline.jsonl", baseline)
    write_rare_list(OUT / "rare_set1.txt", "bex", 50)
    write_rare_list(OUT / "rare_set2.txt", "vul", 50)
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
