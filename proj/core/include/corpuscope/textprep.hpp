#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

namespace corpuscope {

enum class WordListSource { kBundled, kUserFile };

// Lowercase tokens to drop during tokenization.
struct StopwordList {
    std::unordered_set<std::string> words;
    WordListSource source = WordListSource::kBundled;

    bool contains(const std::string& w) const { return words.count(w) != 0; }

    static StopwordList bundled();
    static StopwordList empty();
    static StopwordList from_file(const std::filesystem::path& path);
};

// Ordered lowercase word tokens of one document.
struct TokenStream {
    std::string doc_id;
    std::vector<std::string> tokens;
};

// Lowercases, strips punctuation/digits (tokens are maximal ASCII-letter
// runs), drops tokens shorter than 2 chars, drops stopwords. Order preserved.
TokenStream normalize_and_tokenize(const std::string& text, const StopwordList& stopwords,
                                   const std::string& doc_id = {});

// Splits on '.', '!' or '?' followed by whitespace or end of text, unless the
// chunk before a '.' is a known abbreviation ("fig.", "e.g.", ...). Returned
// sentences keep their terminator; whitespace-only segments are dropped.
std::vector<std::string> split_sentences(const std::string& text);
std::vector<std::string> split_sentences(const std::string& text,
                                         const std::unordered_set<std::string>& abbreviations);

const std::unordered_set<std::string>& default_abbreviations();
std::unordered_set<std::string> load_abbreviations(const std::filesystem::path& path);

// Vowel-group syllable heuristic with the silent-final-'e' rule; never
// returns less than 1. Input must be non-empty lowercase letters.
int count_syllables(const std::string& word);

// One token per line, '#' starts a comment, blank lines ignored.
std::vector<std::string> load_word_list(const std::filesystem::path& path);

}  // namespace corpuscope
