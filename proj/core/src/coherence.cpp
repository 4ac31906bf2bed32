#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "corpuscope/errors.hpp"
#include "corpuscope/topics.hpp"

namespace corpuscope {

void CoherenceConfig::validate() const {
    if (top_n < 2) throw ConfigError("coherence: top_n must be >= 2");
    if (window_size < 2) throw ConfigError("coherence: window_size must be >= 2");
    if (epsilon <= 0.0) throw ConfigError("coherence: epsilon must be > 0");
}

namespace {

// Boolean sliding-window occurrence counts for the tracked words: in how
// many windows does a word (or a tracked pair) appear? A stream shorter than
// the window contributes a single window covering the whole stream.
struct WindowCounts {
    long long total_windows = 0;
    std::vector<long long> word;                       // per tracked word
    std::unordered_map<std::uint64_t, long long> pair; // key = a * n + b, a < b
};

WindowCounts count_windows(const std::vector<TokenStream>& streams,
                           const std::unordered_map<std::string, std::size_t>& track,
                           const std::vector<std::vector<std::size_t>>& partners,
                           int window_size) {
    const std::size_t n = track.size();
    WindowCounts counts;
    counts.word.assign(n, 0);

    std::vector<int> in_window(n, 0);  // occurrences of tracked word in current window
    std::vector<std::size_t> present;  // tracked words present at least once

    const auto key_of = [n](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::uint64_t(a) * std::uint64_t(n) + std::uint64_t(b);
    };

    for (const auto& stream : streams) {
        // map stream tokens to tracked ids once (-1 = untracked)
        std::vector<int> ids(stream.tokens.size(), -1);
        for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
            const auto it = track.find(stream.tokens[i]);
            if (it != track.end()) ids[i] = int(it->second);
        }
        if (stream.tokens.empty()) continue;

        const std::size_t len = stream.tokens.size();
        const std::size_t win = std::size_t(window_size);
        const std::size_t n_windows = len <= win ? 1 : len - win + 1;

        std::fill(in_window.begin(), in_window.end(), 0);
        const auto record_window = [&] {
            ++counts.total_windows;
            present.clear();
            for (std::size_t w = 0; w < n; ++w) {
                if (in_window[w] > 0) present.push_back(w);
            }
            for (std::size_t w : present) ++counts.word[w];
            for (std::size_t w : present) {
                for (std::size_t p : partners[w]) {
                    if (p > w && in_window[p] > 0) ++counts.pair[key_of(w, p)];
                }
            }
        };

        // first window
        const std::size_t first_end = std::min(len, win);
        for (std::size_t i = 0; i < first_end; ++i) {
            if (ids[i] >= 0) ++in_window[std::size_t(ids[i])];
        }
        record_window();
        // slide
        for (std::size_t start = 1; start < n_windows; ++start) {
            if (ids[start - 1] >= 0) --in_window[std::size_t(ids[start - 1])];
            const std::size_t incoming = start + win - 1;
            if (ids[incoming] >= 0) ++in_window[std::size_t(ids[incoming])];
            record_window();
        }
    }
    return counts;
}

}  // namespace

std::vector<double> coherence_cv(const TopicModel& model, const std::vector<TokenStream>& streams,
                                 const CoherenceConfig& cfg, WarningLog* warnings) {
    cfg.validate();
    const std::size_t k = model.num_topics();

    // tracked words: union of every topic's top-n terms
    std::vector<std::vector<std::size_t>> topic_words(k);  // tracked ids per topic
    std::unordered_map<std::string, std::size_t> track;
    std::vector<std::string> tracked_names;
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t term : model.top_terms(t, std::size_t(cfg.top_n))) {
            const std::string& word = model.vocab[term];
            auto [it, inserted] = track.try_emplace(word, tracked_names.size());
            if (inserted) tracked_names.push_back(word);
            topic_words[t].push_back(it->second);
        }
    }

    // pair partners: only same-topic pairs are ever queried
    std::vector<std::vector<std::size_t>> partners(track.size());
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t a : topic_words[t]) {
            for (std::size_t b : topic_words[t]) {
                if (a != b) partners[a].push_back(b);
            }
        }
    }
    for (auto& p : partners) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }

    const WindowCounts counts = count_windows(streams, track, partners, cfg.window_size);
    if (counts.total_windows == 0) {
        throw ContractError("coherence: corpus has no tokens");
    }
    const double n_windows = double(counts.total_windows);
    const std::size_t n_tracked = track.size();

    std::vector<double> p_word(n_tracked);
    for (std::size_t w = 0; w < n_tracked; ++w) {
        p_word[w] = double(counts.word[w]) / n_windows;
        if (counts.word[w] == 0) {
            warn(warnings, "coherence: top word '" + tracked_names[w] +
                               "' never appears in a window, probability floored");
            p_word[w] = cfg.epsilon;
        }
    }
    const auto p_pair = [&](std::size_t a, std::size_t b) {
        if (a == b) return p_word[a];
        if (a > b) std::swap(a, b);
        const auto it =
            counts.pair.find(std::uint64_t(a) * std::uint64_t(n_tracked) + std::uint64_t(b));
        return it == counts.pair.end() ? 0.0 : double(it->second) / n_windows;
    };

    std::vector<double> scores(k, 0.0);
    for (std::size_t t = 0; t < k; ++t) {
        const auto& words = topic_words[t];
        const std::size_t m = words.size();

        // NPMI context vector of each word over the topic's word set
        Matrix npmi(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const double joint = p_pair(words[i], words[j]) + cfg.epsilon;
                const double denom = p_word[words[i]] * p_word[words[j]];
                npmi(i, j) = std::log(joint / denom) / (-std::log(joint));
            }
        }

        // one-set segmentation: each vector against the sum of all vectors
        std::vector<double> sum(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) sum[j] += npmi(i, j);
        }
        double mean_cos = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double dot = 0.0, a2 = 0.0, b2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                dot += npmi(i, j) * sum[j];
                a2 += npmi(i, j) * npmi(i, j);
                b2 += sum[j] * sum[j];
            }
            mean_cos += (a2 == 0.0 || b2 == 0.0) ? 0.0 : dot / std::sqrt(a2 * b2);
        }
        scores[t] = mean_cos / double(m);
    }
    return scores;
}

}  // namespace corpuscope
