#!/usr/bin/env python3
"""Regenerates the general-category P* range table in src/unicode_tables.cpp."""
import unicodedata

ranges = []
start = prev = None
for cp in range(0x110000):
    if unicodedata.category(chr(cp)).startswith("P"):
        if start is None:
            start = cp
        prev = cp
    elif start is not None:
        ranges.append((start, prev))
        start = None
if start is not None:
    ranges.append((start, prev))

print(f"// {len(ranges)} ranges, UCD {unicodedata.unidata_version}")
for lo, hi in ranges:
    print(f"    {{0x{lo:04X}, 0x{hi:04X}}},")
