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
"""Writes mixed_corpus.txt: 1000 lines mixing every token category.

Every digit-bearing token is well formed, so normalized output must be free
of ASCII digits.
"""

import random
import sys
import unicodedata

WORDS = ("tôi có một cuốn sách hôm nay là ngày đẹp trời giá cuộc họp lúc "
         "ngày mai chúng ta đi chợ mua rau thịt cá và tăng trưởng kinh tế "
         "thành phố người dân Việt Nam Hà Nội đường phố").split()
ACRONYMS = ["NASA", "GDP", "TP", "TP.HCM", "UBND", "AI", "IT", "ThS"]
LOANWORDS = ["container", "Singapore", "pizza", "internet", "New York",
             "Facebook", "email", "video"]
EMOJI = ["😀", "🚀", "☀️", "✅", "🇻🇳"]


def number(rng):
    kind = rng.randrange(4)
    if kind == 0:
        return str(rng.randrange(0, 1000))
    if kind == 1:
        return f"{rng.randrange(1000, 10**9):,}".replace(",", ".")
    if kind == 2:
        return f"{rng.randrange(0, 100)},{rng.randrange(1, 100)}"
    return str(rng.randrange(0, 10**6))


def token(rng):
    kind = rng.randrange(12)
    if kind == 0:
        return number(rng)
    if kind == 1:
        d, m = rng.randrange(1, 32), rng.randrange(1, 13)
        sep = rng.choice("/-")
        if rng.random() < 0.5:
            return f"{d:02d}{sep}{m:02d}{sep}{rng.randrange(1900, 2100)}"
        return f"{d}/{m}"
    if kind == 2:
        t = f"{rng.randrange(0, 24)}:{rng.randrange(0, 60):02d}"
        return t + (f":{rng.randrange(0, 60):02d}" if rng.random() < 0.3 else "")
    if kind == 3:
        return number(rng) + rng.choice(["đ", " đồng", " VND", "₫", " dong"])
    if kind == 4:
        return "$" + number(rng)
    if kind == 5:
        return number(rng) + rng.choice(["%", " %"])
    if kind == 6:
        return rng.choice(ACRONYMS)
    if kind == 7:
        return rng.choice(LOANWORDS)
    if kind == 8:
        return rng.choice(EMOJI)
    return rng.choice(WORDS)


def line(rng, index):
    if index % 50 == 0:
        return "Ngày 2/9 là quốc khánh"
    tokens = [token(rng) for _ in range(rng.randrange(1, 16))]
    text = ""
    for t in tokens:
        text += t + rng.choice([" ", " ", " ", "  ", ", ", " \t"])
    text = text.rstrip(" ,\t")
    if rng.random() < 0.2:
        text = unicodedata.normalize("NFD", text)
    if rng.random() < 0.1:
        text = "  " + text + " "
    return text


def main():
    rng = random.Random(20260101)
    out = sys.argv[1] if len(sys.argv) > 1 else "mixed_corpus.txt"
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        for i in range(1000):
            f.write(line(rng, i) + "\n")


if __name__ == "__main__":
    main()
