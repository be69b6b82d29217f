"""Generate the small demo dataset under data/sample/.

Systems are synthetic degradations of the references, so scores and the
made-up human judgments are loosely related. Deterministic for a fixed seed.
"""

import csv
import json
import random
from pathlib import Path

SEED = 7
OUT = Path(__file__).resolve().parent.parent / "data" / "sample"

REFERENCES = {
    "de-en": [
        "The committee approved the new budget on Tuesday.",
        "Heavy rain caused flooding in several villages.",
        "She has been working at the hospital for ten years.",
        "The museum will reopen after the renovation is complete.",
        "Prices for electricity rose sharply last winter.",
        "The train to Berlin was delayed by forty minutes.",
        "Researchers found a new species of frog in the forest.",
        "He apologised for the mistake and promised to fix it.",
        "The school is introducing free lunches for all pupils.",
        "Our neighbours are planting tomatoes in their garden.",
        "The match ended in a draw after extra time.",
        "Tickets for the concert sold out within an hour.",
        "The bridge has been closed for repairs since May.",
        "Many people prefer to work from home two days a week.",
    ],
    "zh-en": [
        "The city plans to build three new subway lines.",
        "Tea exports increased by twelve percent this year.",
        "The students visited a factory that makes solar panels.",
        "A strong earthquake was felt in the northern provinces.",
        "The restaurant serves noodles made by hand every morning.",
        "Officials said the airport will open next spring.",
        "The company released a cheaper version of its phone.",
        "Volunteers cleaned the beach over the weekend.",
        "The library offers free language classes for adults.",
        "Farmers expect a good harvest after the warm summer.",
        "The film won the top prize at the festival.",
        "Traffic in the centre was light during the holiday.",
    ],
}

FILLERS = ["the", "a", "very", "some", "it", "was", "of", "thing", "new", "then"]


def degrade(sentence: str, quality: float, rng: random.Random) -> str:
    words = sentence.split()
    out = []
    for w in words:
        r = rng.random()
        if r > quality + 0.15:
            out.append(rng.choice(FILLERS))
        elif r > quality:
            continue
        else:
            out.append(w)
    if rng.random() > quality and len(out) > 3:
        i = rng.randrange(len(out) - 1)
        out[i], out[i + 1] = out[i + 1], out[i]
    return " ".join(out)


def main() -> None:
    rng = random.Random(SEED)
    OUT.mkdir(parents=True, exist_ok=True)
    systems = {"alpha": 0.92, "bravo": 0.8, "charlie": 0.68, "delta": 0.55, "echo": 0.42}
    manifest = []
    human = []
    external = []
    for lp, refs in REFERENCES.items():
        ref_name = f"{lp}.ref.txt"
        (OUT / ref_name).write_text("\n".join(refs) + "\n", encoding="utf-8")
        for system, quality in systems.items():
            q = min(1.0, max(0.0, quality + rng.uniform(-0.05, 0.05)))
            hyps = [degrade(r, q, rng) for r in refs]
            hyp_name = f"{lp}.{system}.txt"
            (OUT / hyp_name).write_text("\n".join(hyps) + "\n", encoding="utf-8")
            manifest.append(
                {
                    "dataset_type": "generaltest",
                    "dataset": "demo",
                    "lang_pair": lp,
                    "system": system,
                    "hyp_path": hyp_name,
                    "ref_paths": [ref_name],
                }
            )
            human.append((system, lp, "mqm", round(-25 * (1 - q) + rng.uniform(-1.5, 1.5), 3)))
            if lp == "de-en":
                human.append((system, lp, "da", round(100 * q + rng.uniform(-6, 6), 2)))
            external.append(("lexsim", system, lp, round(q + rng.uniform(-0.08, 0.08), 4)))

    with open(OUT / "manifest.jsonl", "w", encoding="utf-8") as f:
        for rec in manifest:
            f.write(json.dumps(rec, sort_keys=True) + "\n")
    with open(OUT / "human.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["system", "lang_pair", "score_type", "value"])
        w.writerows(human)
    with open(OUT / "external.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["metric", "system", "lang_pair", "value"])
        w.writerows(external)


if __name__ == "__main__":
    main()
