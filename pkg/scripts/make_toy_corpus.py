"""Regenerate src/citerank/data/toy_corpus.jsonl, the six-article worked example.

Terms are the literal tokens τ1..τ5. Citations:

    a1 -> a4  {τ1, τ2}      a1 -> a3  {τ1, τ4, τ5}    a1 -> a5  {τ4, τ5}
    a2 -> a4  {τ1}          a2 -> a6  {τ1, τ3}        a3 -> a6  {τ2, τ3}
    a5 -> a2  {}            (context with no dictionary term)
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "citerank" / "data" / "toy_corpus.jsonl"

ARTICLES = [
    ("a1", "On τ1 methods", ["τ1"]),
    ("a2", "A study of τ5", ["τ5"]),
    ("a3", "τ2 and τ4 revisited", ["τ2", "τ4"]),
    ("a4", "Foundations of τ2", ["τ2"]),
    ("a5", "An unrelated note", []),
    ("a6", "The τ3 framework", ["τ3"]),
]

CITATIONS = [
    ("a1", "a4", "The τ1 approach with τ2 weighting was introduced in", "[4]", "and is widely used."),
    ("a1", "a3", "Later work combined τ1 with τ4 and τ5", "[3]", "to good effect."),
    ("a1", "a5", "Both τ4 and τ5 appear in", "[5]", "as side remarks."),
    ("a2", "a4", "The original τ1 formulation", "[4]", "remains the reference."),
    ("a2", "a6", "We use τ1 inside the τ3 framework of", "[6]", "."),
    ("a3", "a6", "The τ2 variant builds on τ3", "[6]", "directly."),
    ("a5", "a2", "See also the survey", "[2]", "for background."),
]


def main():
    lines = ["# toy corpus: six articles, terms τ1..τ5"]
    for aid, title, keywords in ARTICLES:
        lines.append(json.dumps({"kind": "article", "id": aid, "title": title, "keywords": keywords}, ensure_ascii=False))
    for src, dst, before, marker, after in CITATIONS:
        context = f"{before} {marker} {after}"
        rec = {"kind": "citation", "source": src, "target": dst, "context": context, "marker_offset": len(before) + 1}
        lines.append(json.dumps(rec, ensure_ascii=False))
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
