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

"""Generates the toy lexicon, victims and benchmark corpus under data/toy.

Output is a pure function of --seed, so the shipped files can be rebuilt
byte for byte.
"""

import argparse
import json
import os
import random

# (sememe set, pos, [(lemma, weight, forms)]). Weight is the positive-minus-
# negative logit contribution of the word for the bag-of-words victim.
CLUSTERS = [
    ("quality|good", "adj", [
        ("great", 2.0, {}), ("good", 1.4, {}), ("fine", 0.6, {}),
        ("decent", 0.4, {}), ("passable", -0.2, {})]),
    ("quality|bad", "adj", [
        ("awful", -2.0, {}), ("bad", -1.4, {}), ("poor", -1.0, {}),
        ("weak", -0.6, {}), ("flawed", -0.3, {})]),
    ("attribute|interesting", "adj", [
        ("gripping", 1.6, {}), ("engaging", 1.2, {}), ("interesting", 0.8, {}),
        ("curious", 0.2, {}), ("odd", -0.4, {})]),
    ("attribute|boring", "adj", [
        ("dull", -1.6, {}), ("boring", -1.4, {}), ("slow", -0.6, {}),
        ("quiet", 0.1, {}), ("calm", 0.3, {})]),
    ("attribute|funny", "adj", [
        ("hilarious", 1.5, {}), ("funny", 1.0, {}), ("amusing", 0.7, {}),
        ("silly", -0.3, {}), ("goofy", -0.1, {})]),
    ("human|actor", "noun", [
        ("actor", 0.2, {"pl": "actors"}), ("performer", 0.3, {"pl": "performers"}),
        ("star", 0.8, {"pl": "stars"}), ("lead", 0.2, {"pl": "leads"})]),
    ("text|story", "noun", [
        ("plot", 0.0, {}), ("story", 0.2, {}), ("narrative", 0.1, {}),
        ("storyline", 0.0, {}), ("script", -0.1, {})]),
    ("result|ending", "noun", [
        ("ending", 0.0, {}), ("finale", 0.3, {}), ("conclusion", -0.1, {}),
        ("climax", 0.4, {})]),
    ("emotion|fun", "noun", [
        ("fun", 1.0, {}), ("joy", 1.3, {}), ("delight", 1.5, {}),
        ("pleasure", 1.1, {})]),
    ("emotion|pain", "noun", [
        ("mess", -1.3, {}), ("disaster", -1.8, {}), ("failure", -1.5, {}),
        ("letdown", -1.2, {})]),
    ("emotion|like", "verb", [
        ("love", 1.8, {"3sg": "loves", "past": "loved"}),
        ("enjoy", 1.2, {"3sg": "enjoys", "past": "enjoyed"}),
        ("like", 0.8, {"3sg": "likes", "past": "liked"}),
        ("appreciate", 0.9, {"3sg": "appreciates", "past": "appreciated"}),
        ("adore", 1.9, {"3sg": "adores", "past": "adored"})]),
    ("emotion|dislike", "verb", [
        ("hate", -1.8, {"3sg": "hates", "past": "hated"}),
        ("dislike", -1.0, {"3sg": "dislikes", "past": "disliked"}),
        ("detest", -1.9, {"3sg": "detests", "past": "detested"}),
        ("loathe", -1.7, {"3sg": "loathes", "past": "loathed"})]),
    ("act|drag", "verb", [
        ("drag", -0.8, {"3sg": "drags", "past": "dragged"}),
        ("crawl", -0.6, {"3sg": "crawls", "past": "crawled"}),
        ("plod", -0.7, {"3sg": "plods", "past": "plodded"})]),
    ("degree|very", "adv", [
        ("very", 0.0, {}), ("really", 0.1, {}), ("truly", 0.2, {}),
        ("extremely", 0.0, {}), ("remarkably", 0.3, {})]),
    ("manner|well", "adv", [
        ("beautifully", 1.2, {}), ("nicely", 0.8, {}), ("well", 0.6, {}),
        ("competently", 0.2, {}), ("adequately", -0.1, {})]),
    ("manner|badly", "adv", [
        ("badly", -1.2, {}), ("poorly", -1.0, {}), ("clumsily", -0.9, {}),
        ("sloppily", -1.1, {})]),
]

# Polysemous and out-of-vocabulary extras: "cool" has a temperature sense
# shared with "chilly" and a quality sense shared with the quality|good
# cluster; "groovy" is in the lexicon but unknown to the victim.
EXTRA_LEXICON = [
    ("cool", "adj", [["attribute|temperature", "cold"], ["quality|good"]], {}),
    ("chilly", "adj", [["attribute|temperature", "cold"]], {}),
    ("groovy", "adj", [["quality|good"]], {}),
]
EXTRA_WEIGHTS = {"cool": 0.9, "chilly": -0.5}

UNSUBSTITUTABLE = [("movie", "noun"), ("film", "noun"), ("director", "noun"),
                   ("watch", "verb"), ("scene", "noun")]
FUNCTION_WORDS = ["the", "a", "this", "it", "was", "is", "and", "but", "of",
                  "with", "to", "i", "so", "that", "its", "were", "what", ","]


def cluster_words(pos, sememe=None):
  out = []
  for sem, p, words in CLUSTERS:
    if p == pos and (sememe is None or sem == sememe):
      out.extend(words)
  return out


def tok(w, lemma, pos):
  return {"w": w, "lemma": lemma, "pos": pos}


def fn(w):
  return tok(w, w, "other")


def phrase(rng):
  adjs = cluster_words("adj") + [("cool", 0.9, {}), ("chilly", -0.5, {})]
  nouns = [w for sem in ("human|actor", "text|story", "result|ending")
           for w in cluster_words("noun", sem)]
  emo = cluster_words("noun", "emotion|fun") + cluster_words("noun", "emotion|pain")
  verbs = cluster_words("verb", "emotion|like") + cluster_words("verb", "emotion|dislike")
  degree = cluster_words("adv", "degree|very")
  manner = cluster_words("adv", "manner|well") + cluster_words("adv", "manner|badly")
  drag = cluster_words("verb", "act|drag")
  pick = rng.choice
  kind = rng.randrange(7)
  if kind == 0:
    n, a, d = pick(nouns), pick(adjs), pick(degree)
    return [fn("the"), tok(n[0], n[0], "noun"), fn("was"),
            tok(d[0], d[0], "adv"), tok(a[0], a[0], "adj")]
  if kind == 1:
    v = pick(verbs)
    m = rng.choice(["movie", "film", "scene"])
    return [fn("i"), tok(v[2]["past"], v[0], "verb"), fn("this"),
            tok(m, m, "noun")]
  if kind == 2:
    v, m = pick(drag), pick(manner)
    return [fn("it"), tok(v[2]["3sg"], v[0], "verb"), tok(m[0], m[0], "adv")]
  if kind == 3:
    a1, n1, a2, n2 = pick(adjs), pick(nouns), pick(adjs), pick(nouns)
    return [fn("a"), tok(a1[0], a1[0], "adj"), tok(n1[0], n1[0], "noun"),
            fn("and"), fn("a"), tok(a2[0], a2[0], "adj"),
            tok(n2[0], n2[0], "noun")]
  if kind == 4:
    n = pick(cluster_words("noun", "human|actor"))
    a = pick(adjs)
    return [fn("the"), tok(n[2]["pl"], n[0], "noun"), fn("were"),
            tok(a[0], a[0], "adj")]
  if kind == 5:
    e = pick(emo)
    return [fn("what"), fn("a"), tok(e[0], e[0], "noun")]
  d = pick(["director", "film"])
  m = pick(manner)
  return [fn("the"), tok(d, d, "noun"), tok("watch", "watch", "verb"),
          fn("is"), tok(m[0], m[0], "adv"), fn("so")]


def weight_table():
  w = {}
  for _, _, words in CLUSTERS:
    for lemma, weight, forms in words:
      w[lemma] = weight
      for f in forms.values():
        w[f] = weight
  w.update(EXTRA_WEIGHTS)
  return w


def logit(tokens, weights):
  return sum(weights.get(t["w"], 0.0) for t in tokens)


def lexicon_lines():
  lines = ["#!lexicon-v1", "# toy lexicon generated by make_toy_benchmark.py"]
  rows = {}
  for sem, pos, words in CLUSTERS:
    for lemma, _, forms in words:
      rows[lemma] = (pos, [[sem]], forms)
  for word, pos, senses, forms in EXTRA_LEXICON:
    rows[word] = (pos, senses, forms)
  for word in sorted(rows):
    pos, senses, forms = rows[word]
    fields = [word, word, pos, ";".join(",".join(s) for s in senses)]
    if forms:
      fields.append(",".join(f"{k}={v}" for k, v in sorted(forms.items())))
    lines.append("\t".join(fields))
  return lines


def victim_json(weights, scale, rng=None):
  table = {}
  for word, w in sorted(weights.items()):
    if rng is not None:
      w = w * rng.uniform(0.5, 1.5) + rng.uniform(-0.3, 0.3)
    w = round(w * scale, 4)
    table[word] = [round(-w / 2, 4), round(w / 2, 4)]
  vocab = sorted(set(FUNCTION_WORDS) | {w for w, _ in UNSUBSTITUTABLE})
  return {"labels": ["negative", "positive"], "weights": table,
          "bias": [0.0, 0.0], "vocab": vocab, "max_batch": 256}


def main():
  ap = argparse.ArgumentParser()
  ap.add_argument("--seed", type=int, default=20200705)
  ap.add_argument("--count", type=int, default=300)
  ap.add_argument("--out", default=os.path.join(
      os.path.dirname(os.path.abspath(__file__)), "..", "data", "toy"))
  args = ap.parse_args()
  rng = random.Random(args.seed)
  os.makedirs(args.out, exist_ok=True)
  weights = weight_table()

  with open(os.path.join(args.out, "toy.lex"), "w") as f:
    f.write("\n".join(lexicon_lines()) + "\n")
  with open(os.path.join(args.out, "bow.json"), "w") as f:
    json.dump(victim_json(weights, 1.0), f, indent=1, sort_keys=True)
    f.write("\n")
  with open(os.path.join(args.out, "bow_alt.json"), "w") as f:
    json.dump(victim_json(weights, 1.0, random.Random(args.seed + 1)), f,
              indent=1, sort_keys=True)
    f.write("\n")

  records = []
  while len(records) < args.count:
    tokens = []
    target_len = rng.randint(10, 22)
    while len(tokens) < target_len:
      if tokens:
        tokens.append(fn(rng.choice(["and", "but", ","])))
      tokens.extend(phrase(rng))
    if len(tokens) > 100:
      continue
    z = logit(tokens, weights)
    if abs(z) < 0.3:
      continue
    label = 1 if z > 0 else 0
    # A few gold labels disagree with the victim so filtering has work to do.
    if rng.random() < 0.04:
      label = 1 - label
    records.append({"tokens": tokens, "label": label})
  with open(os.path.join(args.out, "bench.jsonl"), "w") as f:
    for r in records:
      f.write(json.dumps(r, separators=(",", ":")) + "\n")
  with open(os.path.join(args.out, "sentence.jsonl"), "w") as f:
    f.write(json.dumps(records[0], separators=(",", ":")) + "\n")


if __name__ == "__main__":
  main()
