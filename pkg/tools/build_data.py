#!/usr/bin/env python3
"""Rebuild the bundled pronunciation lexicon and easy-word list.

Sources are the ``cmudict`` and ``textstat`` wheels from PyPI:

    pip download cmudict textstat --no-deps -d /tmp/wheels
    python tools/build_data.py /tmp/wheels
"""

import argparse
import gzip
import re
import zipfile
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "lingdiff" / "data"
VOWELS = set("AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split())
WORD_RE = re.compile(r"^[a-z][a-z'.-]*$")


def read_member(wheel_dir, prefix, member):
    wheel = next(Path(wheel_dir).glob(prefix + "-*.whl"))
    with zipfile.ZipFile(wheel) as zf:
        return zf.read(member).decode("latin-1"), zf.read(
            next(n for n in zf.namelist() if n.endswith("LICENSE"))
        ).decode("latin-1")


def build_lexicon(wheel_dir):
    text, licence = read_member(wheel_dir, "cmudict", "cmudict/data/cmudict.dict")
    kept = []
    seen = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        word, *phones = line.split()
        if "(" in word or word in seen or not WORD_RE.match(word):
            continue
        if not any(p.rstrip("012") in VOWELS for p in phones):
            continue
        seen.add(word)
        kept.append(f"{word.upper()}  {' '.join(phones)}")
    header = [";;; Trimmed CMU Pronouncing Dictionary: first variant, alphabetic words only."]
    header += [";;; " + ln for ln in licence.splitlines()]
    with gzip.GzipFile(DATA / "cmudict.txt.gz", "wb", mtime=0) as fh:
        fh.write(("\n".join(header + kept) + "\n").encode("latin-1"))
    return len(kept)


def build_wordlist(wheel_dir):
    wheel = next(Path(wheel_dir).glob("textstat-*.whl"))
    with zipfile.ZipFile(wheel) as zf:
        words = zf.read("textstat/resources/en/easy_words.txt").decode("utf-8").split()
        licence = zf.read(next(n for n in zf.namelist() if n.endswith("LICENSE"))).decode("utf-8")
    words = sorted({w.strip().lower() for w in words if w.strip()})
    lines = ["# Dale-Chall style list of familiar words (from the textstat package)."]
    lines += ["# " + ln for ln in licence.splitlines()]
    (DATA / "easy_words.txt").write_text("\n".join(lines + words) + "\n", encoding="utf-8")
    return len(words)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("wheel_dir")
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)
    print("lexicon entries:", build_lexicon(args.wheel_dir))
    print("easy words:", build_wordlist(args.wheel_dir))


if __name__ == "__main__":
    main()
