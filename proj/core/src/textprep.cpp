#include "corpuscope/textprep.hpp"

#include <cctype>
#include <fstream>

#include "corpuscope/errors.hpp"
#include "corpuscope/wordlists.hpp"

namespace corpuscope {

namespace {

inline bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; }
inline bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y'; }

}  // namespace

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open word list: " + path.string());
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string token;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) token += ascii_lower(c);
        }
        if (!token.empty()) words.push_back(token);
    }
    return words;
}

StopwordList StopwordList::bundled() {
    StopwordList list;
    list.source = WordListSource::kBundled;
    list.words.insert(bundled_stopwords().begin(), bundled_stopwords().end());
    return list;
}

StopwordList StopwordList::empty() {
    StopwordList list;
    list.source = WordListSource::kBundled;
    return list;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
    StopwordList list;
    list.source = WordListSource::kUserFile;
    for (auto& w : load_word_list(path)) list.words.insert(std::move(w));
    return list;
}

TokenStream normalize_and_tokenize(const std::string& text, const StopwordList& stopwords,
                                   const std::string& doc_id) {
    TokenStream stream;
    stream.doc_id = doc_id;
    std::string token;
    const auto flush = [&] {
        if (token.size() >= 2 && !stopwords.contains(token)) stream.tokens.push_back(token);
        token.clear();
    };
    for (char c : text) {
        if (is_ascii_alpha(c)) {
            token += ascii_lower(c);
        } else {
            flush();
        }
    }
    flush();
    return stream;
}

const std::unordered_set<std::string>& default_abbreviations() {
    static const std::unordered_set<std::string> set = [] {
        std::unordered_set<std::string> s;
        for (const auto& a : bundled_abbreviations()) s.insert(a);
        return s;
    }();
    return set;
}

std::unordered_set<std::string> load_abbreviations(const std::filesystem::path& path) {
    std::unordered_set<std::string> set;
    for (auto& w : load_word_list(path)) set.insert(std::move(w));
    return set;
}

std::vector<std::string> split_sentences(const std::string& text) {
    return split_sentences(text, default_abbreviations());
}

std::vector<std::string> split_sentences(const std::string& text,
                                         const std::unordered_set<std::string>& abbreviations) {
    std::vector<std::string> sentences;
    std::string current;

    const auto flush = [&] {
        std::size_t a = 0, b = current.size();
        while (a < b && std::isspace(static_cast<unsigned char>(current[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(current[b - 1]))) --b;
        if (b > a) sentences.push_back(current.substr(a, b - a));
        current.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        current += c;
        if (c != '.' && c != '!' && c != '?') continue;
        const bool at_boundary =
            i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1]));
        if (!at_boundary) continue;
        if (c == '.') {
            // chunk from the last whitespace up to and including this period
            std::size_t start = current.size();
            while (start > 0 && !std::isspace(static_cast<unsigned char>(current[start - 1]))) {
                --start;
            }
            std::string chunk = current.substr(start);
            for (char& ch : chunk) ch = ascii_lower(ch);
            if (abbreviations.count(chunk) != 0) continue;
        }
        flush();
    }
    flush();
    return sentences;
}

int count_syllables(const std::string& word) {
    if (word.empty()) throw ContractError("count_syllables: empty word");
    for (char c : word) {
        if (c < 'a' || c > 'z') {
            throw ContractError("count_syllables: non-alphabetic input: " + word);
        }
    }
    int groups = 0;
    bool in_group = false;
    for (char c : word) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    // silent final 'e': its own trailing group, except the consonant-'le' case
    const std::size_t n = word.size();
    if (groups > 1 && n >= 2 && word[n - 1] == 'e' && !is_vowel(word[n - 2])) {
        const bool consonant_le = n >= 3 && word[n - 2] == 'l' && !is_vowel(word[n - 3]);
        if (!consonant_le) --groups;
    }
    return groups < 1 ? 1 : groups;
}

}  // namespace corpuscope
