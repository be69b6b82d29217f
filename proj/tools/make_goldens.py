#!/usr/bin/env python3
"""Regenerates the frozen golden files under tests/data/ from sacrebleu.

Usage: python3 tools/make_goldens.py [--out tests/data]

The output is checked in; this script is only needed when the suite changes.
Requires `pip install sacrebleu` (goldens were produced with 2.x).
"""
import argparse
import json
import random
from pathlib import Path

import sacrebleu
from sacrebleu.metrics import BLEU, CHRF
from sacrebleu.tokenizers.tokenizer_13a import Tokenizer13a

# (language, reference sentence)
BASE = [
    ("en", "The quick brown fox jumps over the lazy dog."),
    ("en", "Hello, world! How are you doing today?"),
    ("en", "The price rose by 3.5% to $1,250.75 on Monday."),
    ("en", "She said: \"I'll be there at 10:30, don't worry.\""),
    ("en", "Results (see Table 2) show a 12-point gain; p < 0.05."),
    ("en", "The committee met in Geneva on 2023-11-14 to discuss the plan."),
    ("en", "AT&amp;T and Johnson &amp; Johnson reported earnings &quot;above expectations&quot;."),
    ("en", "Visit https://example.org/path?a=1&b=2 for more information."),
    ("en", "He paid 1,000,000 dollars... or was it 1.000.000 euros?"),
    ("en", "[Note] The value {x} must be > 0 and <= 100 | otherwise fail."),
    ("en", "Well-known state-of-the-art models aren't always better."),
    ("en", "It was a long, long journey -- longer than expected."),
    ("de", "Die Katze sitzt auf der Matte und schläft ruhig."),
    ("de", "Der Preis beträgt 19,99 € inklusive Mehrwertsteuer."),
    ("de", "Können Sie mir bitte sagen, wo der Bahnhof ist?"),
    ("de", "Über 70 % der Befragten stimmten dem Vorschlag zu."),
    ("fr", "Le gouvernement a annoncé de nouvelles mesures aujourd'hui."),
    ("fr", "« Bonjour ! » a-t-il dit en souriant ; puis il est parti."),
    ("fr", "Il fait 25,5 °C à Paris, n'est-ce pas ?"),
    ("es", "¿Dónde está la biblioteca? ¡No lo sé!"),
    ("es", "El niño comió 3 manzanas y 2,5 peras."),
    ("es", "La reunión se aplazó hasta el próximo año."),
    ("it", "L'Italia è famosa per la sua cucina e la sua arte."),
    ("pt", "O Brasil é o maior país da América do Sul."),
    ("nl", "Het weer is vandaag erg mooi, maar morgen gaat het regenen."),
    ("cs", "Praha je hlavní město České republiky."),
    ("cs", "Příliš žluťoučký kůň úpěl ďábelské ódy."),
    ("pl", "Zażółć gęślą jaźń, powiedział nauczyciel."),
    ("ru", "Москва — столица России, и в ней живёт более 12 млн человек."),
    ("ru", "Я не знаю, что сказать... Может быть, завтра?"),
    ("uk", "Київ розташований на березі річки Дніпро."),
    ("el", "Η Αθήνα είναι η πρωτεύουσα της Ελλάδας."),
    ("tr", "İstanbul, Türkiye'nin en kalabalık şehridir."),
    ("fi", "Hyvää huomenta! Mitä kuuluu?"),
    ("he", "שלום עולם, מה שלומך היום?"),
    ("ar", "ذهب الطالب إلى المدرسة في الساعة 7:30 صباحاً."),
    ("hi", "भारत एक विशाल देश है, जिसकी जनसंख्या 1.4 अरब है।"),
    ("zh", "我今天很高兴，因为天气很好。"),
    ("zh", "北京是中国的首都, 人口超过2,100万。"),
    ("ja", "東京は日本の首都です。人口は約1400万人です。"),
    ("ja", "「こんにちは」と彼は言った。"),
    ("ko", "서울은 대한민국의 수도입니다. 정말 아름다워요!"),
    ("th", "ประเทศไทยมีชื่อเสียงเรื่องอาหาร"),
    ("vi", "Hà Nội là thủ đô của Việt Nam, có nhiều hồ đẹp."),
    ("en", "Tabs\tand   multiple    spaces  should\tcollapse."),
    ("en", "Line one ends with a hyphen-\nated word and a break\nhere."),
    ("en", "Odd separators: em　ideo\u0085nel\x1cfs ls."),
    ("en", "Emoji 😀 are fine 👍🏽, and so are ligatures ﬁ ﬂ."),
    ("en", "<skipped> segment marker removed<skipped> mid-line."),
    ("en", "Numbers like 1-2, 3.14.15, .5, 5., and ,7 test edges."),
]


def perturb(rng, ref, kind):
    words = ref.split(" ")
    if kind == "exact":
        return ref
    if kind == "drop" and len(words) > 2:
        del words[rng.randrange(len(words))]
        return " ".join(words)
    if kind == "swap" and len(words) > 2:
        i = rng.randrange(len(words) - 1)
        words[i], words[i + 1] = words[i + 1], words[i]
        return " ".join(words)
    if kind == "truncate":
        cut = max(1, len(words) // 2)
        return " ".join(words[:cut])
    if kind == "chars":
        chars = list(ref)
        for _ in range(max(1, len(chars) // 8)):
            j = rng.randrange(len(chars))
            chars[j] = rng.choice("aeiouxyz ")
        return "".join(chars)
    if kind == "extend":
        return ref + " " + " ".join(rng.sample(words, min(3, len(words))))
    return ref


KINDS = ["exact", "drop", "swap", "truncate", "chars", "extend"]


def build_suite():
    rng = random.Random(20231114)
    suite = []
    for i, (lang, ref) in enumerate(BASE):
        kinds = rng.sample(KINDS, 4)
        for kind in kinds:
            suite.append({"lang": lang, "kind": kind, "hyp": perturb(rng, ref, kind), "ref": ref})
    # edge cases replacing the tail so the suite stays at 200 segments
    suite[-4] = {"lang": "xx", "kind": "empty_hyp", "hyp": "", "ref": "the cat"}
    suite[-3] = {"lang": "xx", "kind": "repeat", "hyp": "the the the the", "ref": "the cat"}
    suite[-2] = {"lang": "xx", "kind": "short", "hyp": "cat", "ref": "the cat sat on the mat"}
    suite[-1] = {"lang": "xx", "kind": "disjoint", "hyp": "aaaa", "ref": "bbbb"}
    return suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "data"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    tok = Tokenizer13a()
    bleu = BLEU(tokenize="13a", smooth_method="exp", effective_order=False)
    chrf = CHRF()

    suite = build_suite()
    assert len(suite) == 200
    with open(out / "golden_suite.jsonl", "w", encoding="utf-8") as f:
        for idx, s in enumerate(suite):
            b = bleu.sentence_score(s["hyp"], [s["ref"]])
            c = chrf.sentence_score(s["hyp"], [s["ref"]])
            bstats = bleu._extract_corpus_statistics([s["hyp"]], [[s["ref"]]])[0]
            cstats = chrf._extract_corpus_statistics([s["hyp"]], [[s["ref"]]])[0]
            rec = {
                "id": idx + 1,
                "lang": s["lang"],
                "kind": s["kind"],
                "hyp": s["hyp"],
                "ref": s["ref"],
                "hyp_tokens": tok(s["hyp"].rstrip()).split(),
                "ref_tokens": tok(s["ref"].rstrip()).split(),
                "bleu_stats": [int(v) for v in bstats],
                "chrf_stats": [int(v) for v in cstats],
                "sentence_bleu": b.score / 100.0,
                "sentence_chrf": c.score / 100.0,
            }
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")

    hyps = [s["hyp"] for s in suite]
    refs = [[s["ref"] for s in suite]]
    corpus_bleu = bleu.corpus_score(hyps, refs)
    corpus_chrf = chrf.corpus_score(hyps, refs)
    assert str(bleu.get_signature()).startswith("nrefs:1|case:mixed|eff:no|tok:13a|smooth:exp")
    corpus = {
        "num_segments": len(suite),
        "bleu_signature": str(bleu.get_signature()),
        "chrf_signature": str(chrf.get_signature()),
        "sacrebleu_version": sacrebleu.__version__,
        "corpus_bleu": corpus_bleu.score / 100.0,
        "corpus_chrf": corpus_chrf.score / 100.0,
    }

    # multi-reference cases
    multi = [
        {"hyp": "the cat sat on the mat", "refs": ["a cat sat on a mat", "the cat is on the mat"]},
        {"hyp": "there is a cat on the mat", "refs": ["the cat is on the mat", "there is a cat on the mat"]},
        {"hyp": "hello there", "refs": ["hello there general kenobi", "hi", "hello there friend"]},
        {"hyp": "Der Hund bellt laut.", "refs": ["Der Hund bellt.", "Ein Hund bellt sehr laut!"]},
        {"hyp": "abcd", "refs": ["abce", "abdd"]},
    ]
    for m in multi:
        m["sentence_bleu"] = bleu.sentence_score(m["hyp"], m["refs"]).score / 100.0
        m["sentence_chrf"] = chrf.sentence_score(m["hyp"], m["refs"]).score / 100.0
        m["bleu_stats"] = [int(v) for v in bleu._extract_corpus_statistics(
            [m["hyp"]], [[r] for r in m["refs"]])[0]]
        m["chrf_stats"] = [int(v) for v in chrf._extract_corpus_statistics(
            [m["hyp"]], [[r] for r in m["refs"]])[0]]
    corpus["multi_reference"] = multi

    # chrF "abcd" vs "abce" per-order statistics
    corpus["chrf_abcd_abce"] = {
        "stats": [int(v) for v in chrf._extract_corpus_statistics(["abcd"], [["abce"]])[0]],
        "score": chrf.sentence_score("abcd", ["abce"]).score / 100.0,
    }
    with open(out / "golden_corpus.json", "w", encoding="utf-8") as f:
        json.dump(corpus, f, ensure_ascii=False, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
