#include <doctest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "corpuscope/errors.hpp"
#include "corpuscope/textprep.hpp"
#include "corpuscope/rng.hpp"

using namespace corpuscope;

namespace {

StopwordList make_stopwords(std::initializer_list<const char*> words) {
    StopwordList list;
    for (const char* w : words) list.words.insert(w);
    return list;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

}  // namespace

TEST_CASE("tokenization applies the token grammar and stopword list") {
    const auto stream =
        normalize_and_tokenize("The Mach-5 Flow, and shock!", make_stopwords({"the", "and"}));
    CHECK(stream.tokens == std::vector<std::string>{"mach", "flow", "shock"});

    const auto all_stop = normalize_and_tokenize("AND THE OF", make_stopwords({"and", "the", "of"}));
    CHECK(all_stop.tokens.empty());

    const auto hyphens = normalize_and_tokenize("Aero-thermo analysis", StopwordList::empty());
    CHECK(hyphens.tokens == std::vector<std::string>{"aero", "thermo", "analysis"});

    CHECK(normalize_and_tokenize("", StopwordList::empty()).tokens.empty());
    // single letters and digit runs are dropped
    CHECK(normalize_and_tokenize("a 42 b7c x", StopwordList::empty()).tokens.empty());
}

TEST_CASE("tokenization is idempotent on its own output") {
    const auto stop = make_stopwords({"the", "of", "and"});
    Rng rng(7);
    const std::vector<std::string> pool = {"The", "flow-field", "MACH",   "of",  "5",
                                           "and", "shock!",     "(wave)", "a",   "test,",
                                           "x",   "hyper-sonic", "inlet.", "99", "q2"};
    for (int trial = 0; trial < 50; ++trial) {
        std::string text;
        const int n = 3 + int(rng.below(12));
        for (int i = 0; i < n; ++i) {
            if (i) text += ' ';
            text += pool[std::size_t(rng.below(pool.size()))];
        }
        const auto once = normalize_and_tokenize(text, stop);
        const auto twice = normalize_and_tokenize(join(once.tokens), stop);
        CHECK(once.tokens == twice.tokens);
    }
}

TEST_CASE("sentence splitting honors terminators and abbreviations") {
    CHECK(split_sentences("We test inlets. Results follow!").size() == 2);
    CHECK(split_sentences("Results in fig. 2 are shown.").size() == 1);
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("   ").empty());
    CHECK(split_sentences("No terminator at all").size() == 1);
    // e.g. / et al. style chunks do not split
    CHECK(split_sentences("Shown by Smith et al. in 2020. A second sentence?").size() == 2);
    CHECK(split_sentences("We use, e.g. ablation. Next point.").size() == 2);
}

TEST_CASE("sentence splitting preserves every non-whitespace character") {
    Rng rng(11);
    const std::vector<std::string> pieces = {"We test.",  "fig. 3 shown.", "Hmm...",
                                             "What now?", "Stop!",         "middle words",
                                             "e.g. this", "et al. 2019"};
    for (int trial = 0; trial < 50; ++trial) {
        std::string text;
        const int n = 1 + int(rng.below(6));
        for (int i = 0; i < n; ++i) {
            if (i) text += ' ';
            text += pieces[std::size_t(rng.below(pieces.size()))];
        }
        std::string keep;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) keep += c;
        }
        std::string joined;
        for (const auto& s : split_sentences(text)) {
            for (char c : s) {
                if (!std::isspace(static_cast<unsigned char>(c))) joined += c;
            }
        }
        CHECK(joined == keep);
    }
}

TEST_CASE("syllable counting matches the vowel-group heuristic") {
    CHECK(count_syllables("flow") == 1);
    CHECK(count_syllables("hypersonic") == 4);
    CHECK(count_syllables("wave") == 1);      // silent final e
    CHECK(count_syllables("table") == 2);     // consonant-le keeps its syllable
    CHECK(count_syllables("the") == 1);
    CHECK(count_syllables("queue") == 1);
    CHECK(count_syllables("analysis") == 4);
    CHECK_THROWS_AS(count_syllables(""), ContractError);
    CHECK_THROWS_AS(count_syllables("Mach5"), ContractError);
}

TEST_CASE("syllable count is bounded by word length") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::string word;
        const int n = 1 + int(rng.below(12));
        for (int i = 0; i < n; ++i) word += char('a' + rng.below(26));
        const int s = count_syllables(word);
        CHECK(s >= 1);
        CHECK(s <= int(word.size()));
    }
}

TEST_CASE("word list files support comments and blank lines") {
    const auto path = std::filesystem::temp_directory_path() / "corpuscope_stopwords_test.txt";
    {
        std::ofstream out(path);
        out << "# comment line\nAlpha\n\n beta # trailing\n";
    }
    const auto words = load_word_list(path);
    CHECK(words == std::vector<std::string>{"alpha", "beta"});
    std::filesystem::remove(path);
}
