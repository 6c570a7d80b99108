#!/usr/bin/env python3
"""Regenerate fixtures/wordlists/corpus.txt from the corpus texts.

Extracts every word the tokenizer would produce (ASCII letters with
embedded ' or - joiners), lowercases it, and writes the sorted unique
list. Run from anywhere; paths are resolved relative to this script.
"""

import pathlib


def is_letter(c: str) -> bool:
    return ("a" <= c <= "z") or ("A" <= c <= "Z")


def words(text: str):
    i, n = 0, len(text)
    while i < n:
        if not is_letter(text[i]):
            i += 1
            continue
        j = i
        while j < n:
            if is_letter(text[j]):
                j += 1
            elif text[j] in "'-" and j + 1 < n and is_letter(text[j + 1]):
                j += 1
            else:
                break
        yield text[i:j].lower()
        i = j


def main() -> None:
    root = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    vocabulary = set()
    for path in sorted((root / "corpus").glob("*.txt")):
        vocabulary.update(words(path.read_text(encoding="ascii")))
    out = root / "wordlists" / "corpus.txt"
    out.write_text("\n".join(sorted(vocabulary)) + "\n", encoding="ascii")
    print(f"{out}: {len(vocabulary)} words")


if __name__ == "__main__":
    main()
