#!/usr/bin/env python3
"""Regenerates src/unicode_data.inc from the Python unicodedata module.

Emits the tables needed for NFC normalization (canonical decomposition,
combining classes, primary composites), letter/digit classification and
simple lowercase mapping. Hangul composition is algorithmic and lives in
unicode_data.cpp, so the tables exclude the Hangul syllable block.
"""

import sys
import unicodedata

MAX_CP = 0x110000
SBASE, LBASE, VBASE, TBASE = 0xAC00, 0x1100, 0x1161, 0x11A7
SCOUNT = 11172


def is_hangul_syllable(cp):
    return SBASE <= cp < SBASE + SCOUNT


def canonical_decomposition(cp):
    # unicodedata.decomposition gives one level; canonical entries have no tag
    raw = unicodedata.decomposition(chr(cp))
    if not raw or raw.startswith("<"):
        return None
    return [int(f, 16) for f in raw.split()]


def main(out_path):
    decomp = {}
    ccc = {}
    for cp in range(MAX_CP):
        if is_hangul_syllable(cp):
            continue
        d = canonical_decomposition(cp)
        if d:
            decomp[cp] = d
        k = unicodedata.combining(chr(cp))
        if k:
            ccc[cp] = k

    # Primary composites: canonical pairs that NFC actually recombines
    # (probing normalize() folds in the composition-exclusion list).
    comp = {}
    for cp, d in decomp.items():
        if len(d) != 2:
            continue
        pair = chr(d[0]) + chr(d[1])
        if unicodedata.normalize("NFC", pair) == chr(cp):
            comp[(d[0], d[1])] = cp

    def ranges_for(pred):
        out = []
        start = None
        for cp in range(MAX_CP):
            if pred(cp):
                if start is None:
                    start = cp
            elif start is not None:
                out.append((start, cp - 1))
                start = None
        if start is not None:
            out.append((start, MAX_CP - 1))
        return out

    letter_ranges = ranges_for(lambda cp: unicodedata.category(chr(cp)).startswith("L"))
    digit_ranges = ranges_for(lambda cp: unicodedata.category(chr(cp)) == "Nd")

    lower = {}
    for cp in range(MAX_CP):
        lo = chr(cp).lower()
        if len(lo) == 1 and lo != chr(cp):
            lower[cp] = ord(lo)

    space = sorted(
        cp for cp in range(MAX_CP)
        if unicodedata.category(chr(cp)) == "Zs" or chr(cp) in "\t\n\r\v\f\x85"
    )

    with open(out_path, "w") as f:
        w = f.write
        w("// Generated by tools/gen_unicode_tables.py from Unicode %s data.\n"
          % unicodedata.unidata_version)
        w("// Do not edit by hand.\n\n")

        data = []
        index = []
        for cp in sorted(decomp):
            d = decomp[cp]
            index.append((cp, len(data), len(d)))
            data.extend(d)
        w("static const DecompEntry kDecompIndex[] = {\n")
        for cp, off, n in index:
            w("  {0x%X, %d, %d},\n" % (cp, off, n))
        w("};\n\n")
        w("static const char32_t kDecompData[] = {\n")
        for i in range(0, len(data), 12):
            w("  " + ", ".join("0x%X" % c for c in data[i:i + 12]) + ",\n")
        w("};\n\n")

        w("static const CccEntry kCccTable[] = {\n")
        for cp in sorted(ccc):
            w("  {0x%X, %d},\n" % (cp, ccc[cp]))
        w("};\n\n")

        w("static const CompEntry kCompTable[] = {\n")
        for (a, b), c in sorted(comp.items()):
            w("  {0x%X, 0x%X, 0x%X},\n" % (a, b, c))
        w("};\n\n")

        w("static const CpRange kLetterRanges[] = {\n")
        for a, b in letter_ranges:
            w("  {0x%X, 0x%X},\n" % (a, b))
        w("};\n\n")

        w("static const CpRange kDigitRanges[] = {\n")
        for a, b in digit_ranges:
            w("  {0x%X, 0x%X},\n" % (a, b))
        w("};\n\n")

        w("static const LowerEntry kLowerTable[] = {\n")
        for cp in sorted(lower):
            w("  {0x%X, 0x%X},\n" % (cp, lower[cp]))
        w("};\n\n")

        w("static const char32_t kSpaceList[] = {\n")
        w("  " + ", ".join("0x%X" % c for c in space) + ",\n")
        w("};\n")

    print("decomp entries: %d (%d cps)" % (len(index), len(data)))
    print("ccc entries:    %d" % len(ccc))
    print("comp pairs:     %d" % len(comp))
    print("letter ranges:  %d" % len(letter_ranges))
    print("digit ranges:   %d" % len(digit_ranges))
    print("lower entries:  %d" % len(lower))
    print("space cps:      %d" % len(space))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/unicode_data.inc")
