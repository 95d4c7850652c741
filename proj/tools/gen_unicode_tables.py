#!/usr/bin/env python3
# Copyright 2026 The vntn Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates core/src/unicode_data.inc from Python's unicodedata module.

Usage: tools/gen_unicode_tables.py > core/src/unicode_data.inc
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE, HANGUL_S_COUNT = 0xAC00, 11172


def skip(cp):
    return 0xD800 <= cp <= 0xDFFF or HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def ranges(pred):
    out, start = [], None
    for cp in range(MAX_CP + 1):
        ok = cp < MAX_CP and pred(cp)
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    return out


def main():
    ccc = []
    decomp = []
    compose = []
    lower = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        c = unicodedata.combining(ch)
        if c:
            ccc.append((cp, c))
        if skip(cp):
            continue
        d = unicodedata.decomposition(ch)
        if d and not d.startswith("<"):
            parts = [int(x, 16) for x in d.split()]
            decomp.append((cp, parts[0], parts[1] if len(parts) > 1 else 0))
            if len(parts) == 2 and unicodedata.normalize("NFC", chr(parts[0]) + chr(parts[1])) == ch:
                compose.append((parts[0], parts[1], cp))
        lo = ch.lower()
        if len(lo) == 1 and lo != ch:
            lower.append((cp, ord(lo)))

    letters = ranges(lambda cp: unicodedata.category(chr(cp)).startswith("L"))
    digits = ranges(lambda cp: unicodedata.category(chr(cp)) == "Nd")
    spaces = ranges(lambda cp: unicodedata.category(chr(cp)) == "Zs")
    seconds = {b for _, b, _ in compose}
    # Code points whose NFC quick-check property is not "Yes": either never
    # allowed in NFC, or a possible second half of a composition.
    not_yes = ranges(lambda cp: not skip(cp) and (
        cp in seconds or 0x1161 <= cp <= 0x1175 or 0x11A8 <= cp <= 0x11C2 or
        not unicodedata.is_normalized("NFC", chr(cp))))

    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py from Unicode %s. Do not edit.\n\n"
      % unicodedata.unidata_version)
    w("constexpr CombiningClassEntry kCombiningClass[] = {\n")
    for cp, c in ccc:
        w("    {0x%04X, %d},\n" % (cp, c))
    w("};\n\n")
    w("constexpr DecompositionEntry kDecomposition[] = {\n")
    for cp, a, b in decomp:
        w("    {0x%04X, 0x%04X, 0x%04X},\n" % (cp, a, b))
    w("};\n\n")
    compose.sort()
    w("constexpr CompositionEntry kComposition[] = {\n")
    for a, b, cp in compose:
        w("    {0x%04X, 0x%04X, 0x%04X},\n" % (a, b, cp))
    w("};\n\n")
    w("constexpr MappingEntry kLowercase[] = {\n")
    for cp, lo in lower:
        w("    {0x%04X, 0x%04X},\n" % (cp, lo))
    w("};\n\n")
    for name, rs in (("kLetterRanges", letters), ("kDigitRanges", digits),
                     ("kSpaceRanges", spaces), ("kNfcNotYesRanges", not_yes)):
        w("constexpr CodepointRange %s[] = {\n" % name)
        for a, b in rs:
            w("    {0x%04X, 0x%04X},\n" % (a, b))
        w("};\n\n")


if __name__ == "__main__":
    main()
