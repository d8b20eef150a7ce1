#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from the Python unicodedata database.

Emits three tables used by text.cpp:
  - merged codepoint ranges whose general category starts with P or S
  - merged ranges of whitespace codepoints (Z* plus the ASCII/Latin-1 controls)
  - simple one-to-one lowercase mappings where lower(cp) is a single codepoint
"""

import sys
import unicodedata

MAX_CP = 0x110000


def merged_ranges(predicate):
    ranges = []
    start = None
    for cp in range(MAX_CP):
        if predicate(cp):
            if start is None:
                start = cp
        elif start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def is_punct_or_symbol(cp):
    cat = unicodedata.category(chr(cp))
    return cat[0] in ("P", "S")


def is_space(cp):
    if cp in (0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85):
        return True
    return unicodedata.category(chr(cp)).startswith("Z")


def lowercase_pairs():
    pairs = []
    for cp in range(MAX_CP):
        ch = chr(cp)
        low = ch.lower()
        if low != ch and len(low) == 1:
            pairs.append((cp, ord(low)))
    return pairs


def emit_ranges(out, name, ranges):
    out.write(f"inline constexpr CodepointRange {name}[] = {{\n")
    for i in range(0, len(ranges), 4):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in ranges[i : i + 4])
        out.write(f"    {row},\n")
    out.write("};\n\n")


def emit_pairs(out, name, pairs):
    out.write(f"inline constexpr LowercasePair {name}[] = {{\n")
    for i in range(0, len(pairs), 6):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in pairs[i : i + 6])
        out.write(f"    {row},\n")
    out.write("};\n\n")


def main():
    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.\n")
    out.write(f"// Unicode data version: {unicodedata.unidata_version}\n\n")
    emit_ranges(out, "kPunctSymbolRanges", merged_ranges(is_punct_or_symbol))
    emit_ranges(out, "kSpaceRanges", merged_ranges(is_space))
    emit_pairs(out, "kLowercasePairs", lowercase_pairs())


if __name__ == "__main__":
    main()
