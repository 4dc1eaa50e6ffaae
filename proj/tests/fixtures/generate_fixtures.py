#!/usr/bin/env python3
# Copyright 2026 The revgen Authors.
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

"""Regenerates the synthetic test fixtures in this directory.

corpus12.jsonl   12 papers, one qualifying round-1 review each.
stats3.jsonl     3 small papers with hand-countable word totals.
heldout50.jsonl  50 short papers with one review each.
manuscript.tei.xml  a TEI manuscript for end-to-end generation.
"""

import json
import os
import random
from xml.sax.saxutils import escape

HERE = os.path.dirname(os.path.abspath(__file__))

ADJ = ["robust", "sparse", "noisy", "coastal", "seasonal", "thermal", "genomic",
       "regional", "dense", "marine", "urban", "microbial", "annual", "spatial",
       "temporal", "soil", "hybrid", "adaptive", "chronic", "visual"]
NOUN = ["model", "sample", "cohort", "estimate", "signal", "protocol", "sensor",
        "network", "population", "variable", "gradient", "measure", "survey",
        "baseline", "pipeline", "species", "habitat", "trial", "index", "cluster"]
VERB3 = ["supports", "matches", "reflects", "predicts", "explains", "tracks",
         "reduces", "improves", "captures", "exceeds", "follows", "limits"]
PREP = ["across", "within", "under", "for", "over", "near", "without", "beyond"]
VERBED = ["collected", "measured", "analysed", "sampled", "recorded", "compared"]


def sentence(rng):
    form = rng.randrange(3)
    a, b, c = rng.sample(NOUN, 3)
    if form == 0:
        return (f"The {rng.choice(ADJ)} {a} {rng.choice(VERB3)} the {b} "
                f"{rng.choice(PREP)} {rng.choice(ADJ)} {c} conditions.")
    if form == 1:
        return (f"We {rng.choice(VERBED)} {rng.randrange(12, 480)} {a} units "
                f"{rng.choice(PREP)} the {rng.choice(ADJ)} {b} sites.")
    return (f"This {rng.choice(ADJ)} {a} {rng.choice(VERB3)} each {b} "
            f"{rng.choice(PREP)} the {c} period.")


def paragraph(rng, sentences):
    return " ".join(sentence(rng) for _ in range(sentences))


def neutral(rng, count):
    """Declarative review sentences with no question or proposal cue."""
    out = []
    for _ in range(count):
        a, b = rng.sample(NOUN, 2)
        out.append(f"The {rng.choice(ADJ)} {a} {rng.choice(VERB3)} the {b} "
                   f"{rng.choice(PREP)} the {rng.choice(NOUN)} results.")
    return " ".join(out)


def words(text):
    return len(text.split())


def body(rng, target_words):
    paragraphs = []
    while sum(words(p) for p in paragraphs) < target_words:
        paragraphs.append(paragraph(rng, 6))
    return "\n".join(paragraphs)


STANDARD_SECTIONS = ["Abstract", "1 Introduction", "2 Materials and Methods",
                     "3 Results", "4 Discussion", "5 Conclusions", "Acknowledgements"]
NO_SUMMARY_SECTIONS = ["Methods", "Results", "Discussion", "Appendix"]


def manuscript(rng, version, titles, total_words):
    per = total_words // len(titles) + 1
    return {"version": version,
            "sections": [{"title": t, "body": body(rng, per)} for t in titles]}


# Per-paper review cues for corpus12. Counted by hand:
#   questions in papers 0-6 (7), proposals in 0,1,2,3,5,7,8,9,10 (9),
#   empty Additional after filtering in 3 and 9 (10 remain),
#   no summary-class section in paper 7 (11 Basic pairs).
QUESTIONS = {
    0: "How was the sample size determined?",
    1: "Were the sensors calibrated before each survey?",
    2: "Why were the winter samples excluded?",
    3: "Is the code for the pipeline available?",
    4: "What is the variance across the replicate trials?",
    5: "How sensitive is the index to the cluster threshold?",
    6: "Which baseline was used for the habitat comparison?",
}
PROPOSALS = {
    0: "The authors should report the variance across runs.",
    1: "Clarify the preprocessing steps in the methods.",
    2: "I suggest adding a spatial control group.",
    3: "Describe how the trials were randomized.",
    5: "A sensitivity analysis is recommended.",
    7: "Provide the raw counts for each site.",
    8: "The discussion ought to address the seasonal bias.",
    9: "Explain the choice of the gradient threshold.",
    10: "Include a comparison with the regional survey.",
}
DECOYS = {
    4: "Adding more samples would help the estimate.",
    6: "PeerJ readers should see more of the habitat data.",
    10: "Why does Figure 2 differ from the text?",
    11: "Is this suitable for PeerJ readers? Suggestions from the first round were addressed.",
}


def corpus12():
    rng = random.Random(20260512)
    papers = []
    for i in range(12):
        titles = NO_SUMMARY_SECTIONS if i == 7 else STANDARD_SECTIONS
        manuscripts = [manuscript(rng, 1, titles, 2300)]
        ed_parts = [neutral(rng, 2)]
        vf_parts = [neutral(rng, 2)]
        if i in QUESTIONS:
            vf_parts.append(QUESTIONS[i])
        if i in PROPOSALS:
            ed_parts.append(PROPOSALS[i])
        if i in DECOYS:
            vf_parts.append(DECOYS[i])
        if i == 3:
            additional = ""
        elif i == 9:
            additional = "See Table 4 for the numbers."
        else:
            additional = neutral(rng, 3)
        review = {
            "reviewer": None if i % 4 == 3 else f"Reviewer {1 + i % 2}",
            "basic_reporting": neutral(rng, 12),
            "experimental_design": " ".join(ed_parts),
            "validity_of_findings": " ".join(vf_parts),
            "additional_comments": additional,
        }
        rounds = [{"round": 1, "manuscript_version": 1, "reviews": [review],
                   "meta_review": None, "decision_note": None}]
        if i == 0:
            manuscripts.append(manuscript(rng, 2, titles, 2400))
            rounds.append({"round": 2, "manuscript_version": 2, "reviews": [{
                "reviewer": "Reviewer 1",
                "basic_reporting": neutral(rng, 12),
                "experimental_design": "Were the revised sensors tested?",
                "validity_of_findings": "Describe the revised protocol.",
                "additional_comments": neutral(rng, 2)}],
                "meta_review": "The revision addresses the points raised.",
                "decision_note": None})
        papers.append({
            "paper_id": f"fx-{i:02d}",
            "title": f"Synthetic study {i}",
            "disciplines": ["Biology"] if i % 2 else ["Environmental Science"],
            "subjects": ["Ecology"],
            "manuscripts": manuscripts,
            "review_rounds": rounds,
            "rebuttals": [{"round": 1, "text": "We thank the reviewers."}] if i == 0 else [],
            "decision": "minor revision" if i % 3 else "accept",
        })
    return papers


def filler(prefix, n):
    return " ".join(f"{prefix}{k}" for k in range(n))


def review(label, n_basic, n_ed=0, n_vf=0, n_add=0):
    return {"reviewer": label, "basic_reporting": filler("b", n_basic),
            "experimental_design": filler("e", n_ed),
            "validity_of_findings": filler("v", n_vf),
            "additional_comments": filler("a", n_add)}


def doc(version, n):
    half = n // 2
    return {"version": version, "sections": [
        {"title": "Introduction", "body": filler("i", half)},
        {"title": "Methods", "body": filler("m", n - half)}]}


def rnd(index, version, reviews, meta=None):
    return {"round": index, "manuscript_version": version, "reviews": reviews,
            "meta_review": filler("t", meta) if meta else None, "decision_note": None}


def stats3():
    # Word counts are chosen so every mean is hand-computable.
    a = {"paper_id": "st-a", "title": "A", "disciplines": ["Biology", "Ecology"],
         "subjects": [], "manuscripts": [doc(1, 100), doc(2, 120)],
         "review_rounds": [
             rnd(1, 1, [review("Reviewer 1", 10, 10, 10, 10), review("Reviewer 2", 20)], meta=30),
             rnd(2, 2, [review("Reviewer 1", 8)])],
         "rebuttals": [{"round": 1, "text": "Thanks."}], "decision": "accept"}
    b = {"paper_id": "st-b", "title": "B", "disciplines": ["Biology"], "subjects": [],
         "manuscripts": [doc(1, 200), doc(2, 180), doc(3, 150)],
         "review_rounds": [
             rnd(1, 1, [review("Reviewer 1", 50), review("Reviewer 2", 70), review(None, 30)], meta=10),
             rnd(2, 2, [review("Reviewer 1", 16)], meta=20),
             rnd(3, 3, [], meta=6)],
         "rebuttals": [{"round": 1, "text": "R1."}, {"round": 2, "text": "R2."}],
         "decision": "Major Revisions"}
    c = {"paper_id": "st-c", "title": "C", "disciplines": ["Computer Science"], "subjects": [],
         "manuscripts": [doc(1, 300)],
         "review_rounds": [
             rnd(1, 1, [review("R1", 60)]), rnd(2, 1, [review("R1", 40)]),
             rnd(3, 1, [review("R2", 24)]), rnd(4, 1, [], meta=12)],
         "rebuttals": [{"round": 1, "text": "x"}, {"round": 2, "text": "y"},
                       {"round": 3, "text": "z"}],
         "decision": "reject"}
    return [a, b, c]


def heldout50():
    rng = random.Random(5050)
    titles = ["Abstract", "Introduction", "Methods", "Results", "Conclusion"]
    papers = []
    for i in range(50):
        papers.append({
            "paper_id": f"ho-{i:02d}", "title": f"Held-out study {i}",
            "disciplines": ["Biology"], "subjects": [],
            "manuscripts": [manuscript(rng, 1, titles, 600)],
            "review_rounds": [{"round": 1, "manuscript_version": 1, "reviews": [{
                "reviewer": "Reviewer 1",
                "basic_reporting": neutral(rng, 5),
                "experimental_design": neutral(rng, 3) + " " + rng.choice(list(PROPOSALS.values())),
                "validity_of_findings": neutral(rng, 2) + " " + rng.choice(list(QUESTIONS.values())),
                "additional_comments": neutral(rng, 3)}],
                "meta_review": None, "decision_note": None}],
            "rebuttals": [], "decision": "unknown"})
    return papers


def tei():
    rng = random.Random(777)
    sections = ["Introduction", "Related Work", "Materials and Methods", "Results",
                "Discussion", "Conclusion"]
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<TEI xmlns="http://www.tei-c.org/ns/1.0">',
           '  <teiHeader>',
           '    <fileDesc><titleStmt><title level="a" type="main">Seasonal signals in coastal '
           'sensor networks</title></titleStmt></fileDesc>',
           '    <profileDesc>',
           '      <abstract>',
           f'        <div><p>{escape(paragraph(rng, 5))}</p></div>',
           '      </abstract>',
           '    </profileDesc>',
           '  </teiHeader>',
           '  <text>',
           '    <body>']
    for n, title in enumerate(sections, start=1):
        out.append('      <div>')
        out.append(f'        <head n="{n}">{escape(title)}</head>')
        for _ in range(3):
            out.append(f'        <p>{escape(paragraph(rng, 6))}</p>')
        if title == "Results":
            out.append('        <figure xml:id="fig_0"><head>Figure 1</head>'
                       '<figDesc>Sensor coverage by season.</figDesc></figure>')
            out.append('        <figure type="table"><head>Table 1</head>'
                       '<table><row><cell>site</cell></row></table></figure>')
            out.append('        <formula xml:id="formula_0">y = a x + b</formula>')
        out.append('      </div>')
    out += ['    </body>',
            '    <back><div type="references"><listBibl><biblStruct><analytic><title>Prior work'
            '</title></analytic></biblStruct></listBibl></div></back>',
            '  </text>',
            '</TEI>']
    return "\n".join(out) + "\n"


def write_jsonl(name, rows):
    with open(os.path.join(HERE, name), "w", encoding="utf-8") as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")


def main():
    write_jsonl("corpus12.jsonl", corpus12())
    write_jsonl("stats3.jsonl", stats3())
    write_jsonl("heldout50.jsonl", heldout50())
    with open(os.path.join(HERE, "manuscript.tei.xml"), "w", encoding="utf-8") as f:
        f.write(tei())


if __name__ == "__main__":
    main()
