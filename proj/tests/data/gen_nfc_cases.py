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
"""Writes nfc_cases.tsv: random code point strings and their NFC/NFD forms
computed with Python's unicodedata (an implementation independent of vntn).

Columns: input, NFC, NFD; each a space-separated list of hex code points.
"""

import random
import unicodedata

POOL = (
    [ord(c) for c in "aeiouyAEIOUYdDnhgc "] +
    [0x0300, 0x0301, 0x0303, 0x0309, 0x0323, 0x0302, 0x0306, 0x031B, 0x0327,
     0x0308, 0x0345, 0x05B0, 0x0F71, 0x0F72] +
    [ord(c) for c in "ăâêôơưđĐếỆữỳ"] +
    [0x1100, 0x1161, 0x11A8, 0xAC00, 0x212B, 0x2126, 0x0958, 0x0344,
     0x1F600, 0x00C5, 0x1E0A, 0x0387, 0xFB1D]
)


def hexes(s):
    return " ".join("%04X" % ord(c) for c in s)


def main():
    rng = random.Random(20261017)
    cases = []
    for word in ["Việt Nam", "tiếng Việt", "Hà Nội", "nghìn", "triệu", "tỷ",
                 "phẩy", "đồng", "công-te-nơ", "xin-ga-po"]:
        cases.append(unicodedata.normalize("NFD", word))
    while len(cases) < 600:
        n = rng.randrange(1, 9)
        cases.append("".join(chr(rng.choice(POOL)) for _ in range(n)))
    with open("nfc_cases.tsv", "w", encoding="utf-8") as f:
        for s in cases:
            f.write("%s\t%s\t%s\n" % (hexes(s), hexes(unicodedata.normalize("NFC", s)),
                                      hexes(unicodedata.normalize("NFD", s))))


if __name__ == "__main__":
    main()
