// Generates the bundled synthetic demo corpus: ~420 abstracts over
// 2000-2020 with planted theme drift, an early-to-late vocabulary shift, a
// planted country affiliation, and a handful of records that exercise the
// ingest filters (duplicates, missing text, bad years, out-of-span).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corpuscope/csv.hpp"
#include "corpuscope/rng.hpp"

namespace {

using corpuscope::Rng;

struct Theme {
    const char* name;
    std::vector<std::string> early;
    std::vector<std::string> late;
    std::vector<std::string> core;
};

const std::vector<Theme>& themes() {
    static const std::vector<Theme> t = {
        {"adaptive estimation",
         {"kalman", "recursive", "servo", "analog", "feedback", "regulator", "tuning"},
         {"neural", "network", "learning", "deep", "training", "gradient", "embedding"},
         {"controller", "estimation", "tracking", "adaptive", "stability", "observer",
          "uncertainty", "dynamics", "robust", "nonlinear", "convergence", "error", "signal",
          "filter", "gain", "noise", "state", "disturbance", "compensation", "prediction"}},
        {"composite materials",
         {"alloy", "casting", "welding", "fatigue", "microstructure", "grain", "hardness"},
         {"nanotube", "graphene", "additive", "lattice", "printed", "biocompatible", "coating"},
         {"composite", "material", "thermal", "specimen", "stiffness", "fracture", "strength",
          "ceramic", "fiber", "matrix", "polymer", "temperature", "strain", "stress", "failure",
          "microscopy", "bonding", "layer", "surface", "deformation"}},
        {"turbulent flows",
         {"wind", "tunnel", "probe", "hotwire", "photograph", "schlieren", "gauge"},
         {"simulation", "solver", "mesh", "parallel", "resolution", "gpu", "scalable"},
         {"turbulence", "vortex", "boundary", "reynolds", "velocity", "pressure", "shear",
          "wake", "jet", "separation", "gradient", "instability", "laminar", "transition",
          "momentum", "viscous", "fluctuation", "spectrum", "mixing", "channel"}},
        {"trajectory optimization",
         {"gradient", "penalty", "heuristic", "tabulated", "nomogram", "iterative", "manual"},
         {"convex", "stochastic", "bayesian", "reinforcement", "sampling", "policy", "automated"},
         {"optimization", "trajectory", "constraint", "objective", "algorithm", "planning",
          "cost", "search", "solution", "feasible", "iteration", "variable", "bound", "optimal",
          "programming", "scenario", "schedule", "resource", "decision", "performance"}}};
    return t;
}

const std::vector<std::string>& glue_words() {
    static const std::vector<std::string> words = {
        "the", "of", "a",  "in", "for", "with", "and", "under", "over", "between",
        "we",  "is", "an", "on", "to",  "this", "that", "from", "using", "toward"};
    return words;
}

struct Site {
    const char* affiliation;
    double weight;
};

const std::vector<Site>& sites() {
    static const std::vector<Site> s = {
        {"National Institute of Systems Research, Ottawa, Canada", 0.14},
        {"Federal Polytechnic Laboratory, Zurich, Switzerland", 0.12},
        {"Institute of Applied Mechanics, Beijing, China", 0.18},
        {"State Engineering University, Moscow, Russia", 0.10},
        {"Central Research Campus, Boston, United States", 0.22},
        {"Institute for Computational Science, Munich, Germany", 0.12},
        {"Metropolitan College of Engineering, Tokyo, Japan", 0.12}};
    return s;
}

std::string pick(Rng& rng, const std::vector<std::string>& pool) {
    return pool[std::size_t(rng.below(pool.size()))];
}

// theme word with an era-dependent early/late mixture
std::string theme_word(Rng& rng, const Theme& theme, double era) {
    const double roll = rng.uniform01();
    if (roll < 0.30) {
        const bool late = rng.uniform01() < era;
        return pick(rng, late ? theme.late : theme.early);
    }
    return pick(rng, theme.core);
}

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = char(s[0] - 'a' + 'A');
    return s;
}

std::string make_sentence(Rng& rng, const Theme& theme, double era) {
    const int words = 8 + int(rng.below(7));
    std::string sentence;
    for (int w = 0; w < words; ++w) {
        std::string word =
            rng.uniform01() < 0.42 ? pick(rng, glue_words()) : theme_word(rng, theme, era);
        if (w == 0) word = capitalize(word);
        if (w) sentence += ' ';
        sentence += word;
    }
    sentence += '.';
    return sentence;
}

std::string make_title(Rng& rng, const Theme& theme, double era) {
    const int words = 4 + int(rng.below(5));
    std::string title;
    for (int w = 0; w < words; ++w) {
        std::string word =
            rng.uniform01() < 0.25 ? pick(rng, glue_words()) : theme_word(rng, theme, era);
        if (w == 0) word = capitalize(word);
        if (w) title += ' ';
        title += word;
    }
    return title;
}

std::string make_abstract(Rng& rng, const Theme& theme, double era) {
    const int sentences = 3 + int(rng.below(4));
    std::string abstract;
    for (int s = 0; s < sentences; ++s) {
        if (s) abstract += ' ';
        abstract += make_sentence(rng, theme, era);
    }
    return abstract;
}

std::size_t sample_theme(Rng& rng, double era) {
    // prevalence drift: theme 0 rises, themes 1-3 decline at different rates
    const double w0 = 0.15 + 0.50 * era;
    const double w1 = 0.35 - 0.15 * era;
    const double w2 = 0.30 - 0.20 * era;
    const double w3 = 0.20 - 0.15 * era;
    const double total = w0 + w1 + w2 + w3;
    double u = rng.uniform01() * total;
    if ((u -= w0) < 0) return 0;
    if ((u -= w1) < 0) return 1;
    if ((u -= w2) < 0) return 2;
    return 3;
}

std::string sample_affiliations(Rng& rng) {
    std::string out;
    const int n = 1 + int(rng.below(2));
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform01();
        const char* chosen = sites().back().affiliation;
        for (const auto& site : sites()) {
            if ((u -= site.weight) < 0) {
                chosen = site.affiliation;
                break;
            }
        }
        if (!out.empty()) out += ';';
        out += chosen;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generate the synthetic demo corpus"};
    std::string out_path = "demo_corpus.csv";
    std::uint64_t seed = 42;
    app.add_option("--out", out_path, "output CSV path");
    app.add_option("--seed", seed, "generator seed");
    CLI11_PARSE(app, argc, argv);

    Rng rng(seed);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
    }
    corpuscope::write_csv_row(out, {"id", "title", "abstract", "year", "affiliations"});

    int next_id = 1;
    std::vector<std::vector<std::string>> emitted;
    for (int year = 2000; year <= 2020; ++year) {
        const double era = double(year - 2000) / 20.0;
        const int docs = 10 + int(20.0 * era + rng.below(4));
        for (int d = 0; d < docs; ++d) {
            const Theme& theme = themes()[sample_theme(rng, era)];
            std::vector<std::string> row = {"d" + std::to_string(next_id++),
                                            make_title(rng, theme, era),
                                            make_abstract(rng, theme, era),
                                            std::to_string(year), sample_affiliations(rng)};
            corpuscope::write_csv_row(out, row);
            emitted.push_back(std::move(row));
        }
    }

    // records the ingest filters must drop or skip
    for (int i = 0; i < 3; ++i) {
        auto dup = emitted[std::size_t(rng.below(emitted.size()))];
        dup[0] = "d" + std::to_string(next_id++);
        corpuscope::write_csv_row(out, dup);
    }
    corpuscope::write_csv_row(out, {"d" + std::to_string(next_id++), "", "", "2010",
                                    "Central Research Campus, Boston, United States"});
    corpuscope::write_csv_row(out, {"d" + std::to_string(next_id++), "A record with a bad year",
                                    "This row is skipped by the loader.", "20XX", ""});
    corpuscope::write_csv_row(out, {"d" + std::to_string(next_id++), "A record out of the span",
                                    "Published before the study period starts.", "1999", ""});

    std::printf("wrote %s (%d records + 6 filter exercisers)\n", out_path.c_str(), next_id - 7);
    return 0;
}
