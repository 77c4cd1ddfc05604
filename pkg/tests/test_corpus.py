import random

import pytest

from oracles import PredictionOracle
from slicetype.corpus import (
    CorpusFormatError,
    PredictionSource,
    build_from_text,
    build_model,
    default_model,
    load_corpus_dir,
    parse_bigram_lines,
    parse_unigram_lines,
    save_corpus_dir,
)

# ---------------------------------------------------------------------------
# prediction
# ---------------------------------------------------------------------------


def test_predict_prefers_bigram_successors(tiny_model):
    # after "the", "toy" (count 8) outranks even "input" (count 2)
    hit = tiny_model.predict("the", "")
    assert hit.word == "toy" and hit.source is PredictionSource.BIGRAM
    # unigram fallback when the bigram context has no match
    hit = tiny_model.predict("the", "w")
    assert hit.word == "winning" and hit.source is PredictionSource.UNIGRAM


def test_predict_unigram_by_count_then_alpha(tiny_model):
    assert tiny_model.predict(None, "the").word == "the"
    assert tiny_model.predict(None, "t").word == "the"
    assert tiny_model.predict(None, "z") is None


def test_predict_tie_breaks_lexicographically():
    model = build_model([("abb", 5), ("aba", 5), ("abc", 5)], [])
    assert model.predict(None, "ab").word == "aba"


def test_extendable_letters(tiny_model):
    assert tiny_model.extendable_letters(None, "th") == {"e"}
    assert tiny_model.extendable_letters(None, "the") == {"n", "y"}
    assert tiny_model.extendable_letters(None, "") == {"t", "i", "w", "q"}
    assert tiny_model.extendable_letters(None, "qi") == set()


def test_predict_rejects_bad_prefix(tiny_model):
    with pytest.raises(ValueError):
        tiny_model.predict(None, "Th3")


def test_predict_matches_linear_scan_oracle(model):
    oracle = PredictionOracle(model)
    words = [w for w, _ in model.words()]
    rng = random.Random(17)
    for _ in range(500):
        word = rng.choice(words)
        prefix = word[: rng.randint(0, len(word))]
        prev = rng.choice([None, rng.choice(words)])
        got = model.predict(prev, prefix)
        want = oracle.best(prev, prefix)
        if want is None:
            assert got is None
        else:
            assert (got.word, got.score, got.source.value) == want
        assert model.extendable_letters(prev, prefix) == oracle.extendable(prev, prefix)


# ---------------------------------------------------------------------------
# learning
# ---------------------------------------------------------------------------


def test_learn_word_increments(tiny_model):
    assert tiny_model.word_count("toy") == 10
    tiny_model.learn_word("toy")
    assert tiny_model.word_count("toy") == 11
    tiny_model.learn_word("brandnew")
    assert tiny_model.word_count("brandnew") == 1
    assert tiny_model.contains("brandnew")


def test_learn_bigram_auto_inserts_successor(tiny_model):
    tiny_model.learn_bigram("the", "zebra")
    assert tiny_model.contains("zebra")
    assert tiny_model.predict("the", "z").word == "zebra"


def test_learn_changes_prediction(tiny_model):
    assert tiny_model.predict(None, "the").word == "the"
    for _ in range(200):
        tiny_model.learn_word("they")
    assert tiny_model.predict(None, "the").word == "they"


def test_build_model_rejects_dangling_bigram():
    with pytest.raises(ValueError):
        build_model([("the", 1)], [("the", "ghost", 2)])


def test_build_model_rejects_nonpositive_counts():
    with pytest.raises(ValueError):
        build_model([("the", 0)], [])


# ---------------------------------------------------------------------------
# corpus files
# ---------------------------------------------------------------------------


def test_parse_unigram_lines_reports_line_numbers():
    with pytest.raises(CorpusFormatError, match="line 2"):
        parse_unigram_lines(["the\t3", "bad line"])
    with pytest.raises(CorpusFormatError, match="line 1"):
        parse_unigram_lines(["the\tmany"])


def test_parse_bigram_lines_skips_comments():
    rows = parse_bigram_lines(["# header", "the\ttoy\t4"])
    assert rows == [("the", "toy", 4)]


def test_corpus_dir_round_trip(tiny_model, tmp_path):
    save_corpus_dir(tiny_model, tmp_path / "corp")
    loaded = load_corpus_dir(tmp_path / "corp")
    assert sorted(loaded.words()) == sorted(tiny_model.words())
    assert sorted(loaded.bigram_pairs()) == sorted(tiny_model.bigram_pairs())


def test_default_model_is_fresh_per_call():
    a = default_model()
    b = default_model()
    a.learn_word("mutant")
    assert not b.contains("mutant")


def test_default_model_statistics(model):
    stats = model.stats()
    assert stats["words"] > 5000
    assert stats["bigram_pairs"] > 100
    ranking = model.letter_ranking()
    assert len(ranking) == 26 and set(ranking) == set("abcdefghijklmnopqrstuvwxyz")
    assert ranking[:2] == "et"


def test_letter_ranking_weighs_by_count():
    model = build_model([("zz", 9), ("a", 1)], [])
    # z occurs 18 weighted times, a once; absent letters trail alphabetically
    ranking = model.letter_ranking()
    assert ranking[0] == "z" and ranking[1] == "a"
    assert ranking[2:] == "bcdefghijklmnopqrstuvwxy"


# ---------------------------------------------------------------------------
# building from raw text
# ---------------------------------------------------------------------------


def test_build_from_text_counts_and_bigrams():
    model = build_from_text("The toy! the toy shop; shop the")
    assert model.word_count("the") == 3
    assert model.word_count("toy") == 2
    pairs = {(a, b): c for a, b, c in model.bigram_pairs()}
    assert pairs[("the", "toy")] == 2
    # sentence punctuation breaks adjacency
    assert ("toy", "the") not in pairs
    assert pairs[("shop", "the")] == 1


def test_build_from_text_strips_non_letters():
    model = build_from_text("don't stop-me now2day")
    words = {w for w, _ in model.words()}
    assert words == {"don", "t", "stop", "me", "now", "day"}
