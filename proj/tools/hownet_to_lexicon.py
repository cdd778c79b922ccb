#!/usr/bin/env python3
# Copyright 2026 The SwarmAttack Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Converts a HowNet sense dump into the line-oriented lexicon format.

Input is a TSV dump with one sense per line:

  word <TAB> pos <TAB> sememe1 sememe2 ...

Sememes may be separated by spaces or commas. POS tags noun, verb, adj and
adv are kept (common aliases such as "n", "v", "a", "prep" are mapped or
dropped); other senses are skipped. An optional forms TSV adds inflections:

  lemma <TAB> key <TAB> form      e.g.  love  3sg  loves

Senses of one word are merged into a single lexicon line. Output order is
sorted by word so the result is reproducible.
"""

import argparse
import collections
import re
import sys

POS_ALIASES = {
    "noun": "noun", "n": "noun",
    "verb": "verb", "v": "verb",
    "adj": "adj", "a": "adj", "adjective": "adj",
    "adv": "adv", "ad": "adv", "adverb": "adv",
}
RESERVED = re.compile(r"[\t,;=]")


def clean(token):
  return RESERVED.sub("_", token.strip())


def read_senses(path):
  senses = collections.defaultdict(list)
  skipped = 0
  with open(path, encoding="utf-8") as f:
    for lineno, line in enumerate(f, 1):
      line = line.rstrip("\n")
      if not line.strip() or line.startswith("#"):
        continue
      fields = line.split("\t")
      if len(fields) != 3:
        sys.exit(f"{path}:{lineno}: expected 3 tab-separated fields")
      word, pos, sememes = fields
      word = word.strip().lower()
      pos = POS_ALIASES.get(pos.strip().lower())
      ids = sorted({clean(s) for s in re.split(r"[ ,]+", sememes) if s.strip()})
      if not word or " " in word or pos is None or not ids:
        skipped += 1
        continue
      sense = (pos, tuple(ids))
      if sense not in senses[word]:
        senses[word].append(sense)
  return senses, skipped


def read_forms(path):
  forms = collections.defaultdict(dict)
  if path is None:
    return forms
  with open(path, encoding="utf-8") as f:
    for lineno, line in enumerate(f, 1):
      line = line.rstrip("\n")
      if not line.strip() or line.startswith("#"):
        continue
      fields = line.split("\t")
      if len(fields) != 3:
        sys.exit(f"{path}:{lineno}: expected lemma, key and form")
      lemma, key, form = (x.strip().lower() for x in fields)
      forms[lemma][clean(key)] = form
  return forms


def lexicon_lines(senses, forms):
  lines = ["#!lexicon-v1", "# converted by hownet_to_lexicon.py"]
  for word in sorted(senses):
    entry = senses[word]
    tags = [pos for pos, _ in entry]
    pos_field = tags[0] if len(set(tags)) == 1 else ";".join(tags)
    fields = [word, word, pos_field, ";".join(",".join(ids) for _, ids in entry)]
    if forms.get(word):
      fields.append(",".join(f"{k}={v}" for k, v in sorted(forms[word].items())))
    lines.append("\t".join(fields))
  return lines


def main():
  ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  ap.add_argument("senses", help="TSV dump: word, pos, sememes")
  ap.add_argument("--forms", help="optional TSV: lemma, key, form")
  ap.add_argument("--out", default="-", help="output path (default stdout)")
  args = ap.parse_args()
  senses, skipped = read_senses(args.senses)
  text = "\n".join(lexicon_lines(senses, read_forms(args.forms))) + "\n"
  if args.out == "-":
    sys.stdout.write(text)
  else:
    with open(args.out, "w", encoding="utf-8") as f:
      f.write(text)
  print(f"{len(senses)} words, {skipped} senses skipped", file=sys.stderr)


if __name__ == "__main__":
  main()
