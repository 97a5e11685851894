#!/usr/bin/env python3
"""Convert the Loughran-McDonald master dictionary CSV into the one-term-per-line
lists read by `mptone`.

    python3 tools/lm_to_lists.py LoughranMcDonald_MasterDictionary_2018.csv OUTDIR

Writes OUTDIR/lm_positive.txt and OUTDIR/lm_negative.txt. A word belongs to a
list when its Positive/Negative column is nonzero (the column holds the year the
word was added). Terms with non-letter characters are skipped and reported.
"""

import argparse
import csv
import pathlib
import sys


def convert(master: pathlib.Path, out: pathlib.Path) -> dict:
    lists = {"positive": [], "negative": []}
    skipped = []
    with master.open(newline="", encoding="utf-8-sig") as fh:
        for row in csv.DictReader(fh):
            word = row["Word"].strip()
            for key, column in (("positive", "Positive"), ("negative", "Negative")):
                if float(row[column] or 0) == 0:
                    continue
                if word.isascii() and word.isalpha():
                    lists[key].append(word.lower())
                else:
                    skipped.append(word)
    out.mkdir(parents=True, exist_ok=True)
    for key, words in lists.items():
        body = f"# Loughran-McDonald {key} words, converted from {master.name}\n"
        body += "".join(w + "\n" for w in sorted(set(words)))
        (out / f"lm_{key}.txt").write_text(body, encoding="utf-8")
    if skipped:
        print(f"skipped non-letter terms: {' '.join(skipped)}", file=sys.stderr)
    return {k: len(set(v)) for k, v in lists.items()}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("master", type=pathlib.Path)
    ap.add_argument("outdir", type=pathlib.Path)
    args = ap.parse_args()
    counts = convert(args.master, args.outdir)
    print(f"{counts['positive']} positive, {counts['negative']} negative -> {args.outdir}")


if __name__ == "__main__":
    main()
