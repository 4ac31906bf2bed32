#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <map>

#include "corpuscope/dtm.hpp"
#include "corpuscope/errors.hpp"
#include "corpuscope/rng.hpp"

using namespace corpuscope;

namespace {

TokenStream stream(std::string id, std::initializer_list<const char*> tokens) {
    TokenStream s;
    s.doc_id = std::move(id);
    for (const char* t : tokens) s.tokens.push_back(t);
    return s;
}

std::vector<TokenStream> random_streams(Rng& rng, std::size_t docs) {
    const std::vector<std::string> pool = {"alpha", "beta", "gamma", "delta", "epsilon",
                                           "zeta",  "eta",  "theta", "iota",  "kappa"};
    std::vector<TokenStream> streams;
    for (std::size_t d = 0; d < docs; ++d) {
        TokenStream s;
        s.doc_id = "doc" + std::to_string(d);
        const std::size_t n = rng.below(30);
        for (std::size_t i = 0; i < n; ++i) {
            s.tokens.push_back(pool[std::size_t(rng.below(pool.size()))]);
        }
        streams.push_back(std::move(s));
    }
    return streams;
}

}  // namespace

TEST_CASE("build_dtm counts exactly over a sorted vocabulary") {
    const auto dtm = build_dtm({stream("d1", {"a", "b", "a"}), stream("d2", {"b", "c"})},
                               {2000, 2001});
    REQUIRE(dtm.vocab().terms == std::vector<std::string>{"a", "b", "c"});
    CHECK(dtm.count_at(0, "a") == 2);
    CHECK(dtm.count_at(0, "b") == 1);
    CHECK(dtm.count_at(0, "c") == 0);
    CHECK(dtm.count_at(1, "b") == 1);
    CHECK(dtm.count_at(1, "c") == 1);
    CHECK(dtm.total_count() == 5);
}

TEST_CASE("degenerate matrices") {
    const auto empty = build_dtm({}, {});
    CHECK(empty.doc_count() == 0);
    CHECK(empty.term_count() == 0);

    const auto one_empty_doc = build_dtm({stream("d1", {})}, {2000});
    CHECK(one_empty_doc.doc_count() == 1);
    CHECK(one_empty_doc.term_count() == 0);
}

TEST_CASE("duplicate doc ids are rejected") {
    CHECK_THROWS_AS(build_dtm({stream("d", {"a"}), stream("d", {"b"})}, {2000, 2000}),
                    ContractError);
}

TEST_CASE("permuting document order permutes rows only") {
    const auto a = build_dtm({stream("d1", {"a", "b"}), stream("d2", {"c", "b"})}, {2000, 2001});
    const auto b = build_dtm({stream("d2", {"c", "b"}), stream("d1", {"a", "b"})}, {2001, 2000});
    CHECK(a.vocab().terms == b.vocab().terms);
    CHECK(a.count_at(0, "a") == b.count_at(1, "a"));
    CHECK(a.count_at(1, "c") == b.count_at(0, "c"));
}

TEST_CASE("cell sum equals total token count and bags round-trip") {
    Rng rng(17);
    const auto streams = random_streams(rng, 25);
    std::vector<int> years(25, 2000);
    const auto dtm = build_dtm(streams, years);

    long long tokens = 0;
    for (const auto& s : streams) tokens += static_cast<long long>(s.tokens.size());
    CHECK(dtm.total_count() == tokens);

    for (std::size_t d = 0; d < streams.size(); ++d) {
        std::map<std::string, int> expected;
        for (const auto& t : streams[d].tokens) ++expected[t];
        std::map<std::string, int> actual;
        for (const auto& cell : dtm.row(d)) actual[dtm.vocab().terms[cell.term]] = cell.count;
        CHECK(actual == expected);
    }
}

TEST_CASE("row and column views agree") {
    Rng rng(23);
    const auto streams = random_streams(rng, 12);
    const auto dtm = build_dtm(streams, std::vector<int>(12, 2005));
    for (std::size_t t = 0; t < dtm.term_count(); ++t) {
        long long col_total = 0;
        for (const auto& cell : dtm.col(t)) col_total += cell.count;
        CHECK(col_total == dtm.term_total(t));
    }
}

TEST_CASE("yearly_slice selects rows and drops zero columns") {
    const auto dtm = build_dtm({stream("d1", {"a", "b"}), stream("d2", {"b"}),
                                stream("d3", {"c", "c"}), stream("d4", {"a"}),
                                stream("d5", {"b", "c"})},
                               {2005, 2005, 2005, 2006, 2006});
    const auto s2005 = yearly_slice(dtm, 2005);
    CHECK(s2005.doc_count() == 3);
    CHECK(s2005.vocab().terms == std::vector<std::string>{"a", "b", "c"});

    const auto s2006 = yearly_slice(dtm, 2006);
    CHECK(s2006.doc_count() == 2);
    // "a" occurs in 2006 via d4; all three survive? c occurs via d5, b via d5
    CHECK(s2006.vocab().terms == std::vector<std::string>{"a", "b", "c"});

    WarningLog log;
    const auto missing = yearly_slice(dtm, 1990, &log);
    CHECK(missing.doc_count() == 0);
    CHECK(log.messages.size() == 1);

    // the slices partition the documents
    CHECK(s2005.doc_count() + s2006.doc_count() == dtm.doc_count());
}

TEST_CASE("yearly slice drops terms absent from the year") {
    const auto dtm = build_dtm({stream("d1", {"early"}), stream("d2", {"late"})}, {2000, 2001});
    const auto s2000 = yearly_slice(dtm, 2000);
    CHECK(s2000.vocab().terms == std::vector<std::string>{"early"});
}

TEST_CASE("filter_terms applies both cutoffs to the given matrix") {
    SUBCASE("document-share cutoff") {
        // one term in all 10 docs, another in just one
        std::vector<TokenStream> streams;
        for (int d = 0; d < 10; ++d) {
            TokenStream s;
            s.doc_id = "d" + std::to_string(d);
            s.tokens = {"common"};
            if (d == 0) s.tokens.push_back("rare");
            streams.push_back(std::move(s));
        }
        const auto dtm = build_dtm(streams, std::vector<int>(10, 2000));
        const auto filtered = filter_terms(dtm, {.min_year_count = 0, .max_doc_fraction = 0.6});
        CHECK(filtered.vocab().terms == std::vector<std::string>{"rare"});
        CHECK(filtered.doc_count() == 10);  // documents never removed
    }

    SUBCASE("frequency cutoff") {
        const auto dtm = build_dtm({stream("d1", {"x", "x", "x", "y"}), stream("d2", {"y"})},
                                   {2000, 2000});
        // x total 3 < 5 dropped; y total 2 < 5 dropped as well
        const auto strict = filter_terms(dtm, {.min_year_count = 5, .max_doc_fraction = 1.0});
        CHECK(strict.term_count() == 0);
        const auto loose = filter_terms(dtm, {.min_year_count = 3, .max_doc_fraction = 1.0});
        CHECK(loose.vocab().terms == std::vector<std::string>{"x"});
    }

    SUBCASE("document-frequency alternative") {
        const auto dtm = build_dtm({stream("d1", {"x", "x", "x"}), stream("d2", {"y"}),
                                    stream("d3", {"y"})},
                                   {2000, 2000, 2000});
        DtmFilterConfig cfg{.min_year_count = 2, .max_doc_fraction = 1.0,
                            .count_documents_not_occurrences = true};
        // x: df 1 < 2 dropped though it has 3 occurrences; y: df 2 kept
        const auto filtered = filter_terms(dtm, cfg);
        CHECK(filtered.vocab().terms == std::vector<std::string>{"y"});
    }

    SUBCASE("all terms filtered warns and keeps documents") {
        const auto dtm = build_dtm({stream("d1", {"x"})}, {2000});
        WarningLog log;
        const auto filtered =
            filter_terms(dtm, {.min_year_count = 100, .max_doc_fraction = 1.0}, &log);
        CHECK(filtered.term_count() == 0);
        CHECK(filtered.doc_count() == 1);
        CHECK(!log.messages.empty());
    }

    SUBCASE("bad config rejected") {
        const auto dtm = build_dtm({stream("d1", {"x"})}, {2000});
        CHECK_THROWS_AS(filter_terms(dtm, {.min_year_count = -1, .max_doc_fraction = 0.5}),
                        ConfigError);
        CHECK_THROWS_AS(filter_terms(dtm, {.min_year_count = 0, .max_doc_fraction = 0.0}),
                        ConfigError);
    }
}

TEST_CASE("filter_terms never increases cells or removes documents") {
    Rng rng(31);
    const auto streams = random_streams(rng, 20);
    const auto dtm = build_dtm(streams, std::vector<int>(20, 2000));
    const auto filtered = filter_terms(dtm, {.min_year_count = 8, .max_doc_fraction = 0.9});
    CHECK(filtered.doc_count() == dtm.doc_count());
    for (std::size_t d = 0; d < filtered.doc_count(); ++d) {
        for (const auto& cell : filtered.row(d)) {
            CHECK(cell.count == dtm.count_at(d, filtered.vocab().terms[cell.term]));
        }
    }
}

TEST_CASE("dtm dump round-trips") {
    Rng rng(41);
    const auto streams = random_streams(rng, 15);
    std::vector<int> years;
    for (int d = 0; d < 15; ++d) years.push_back(2000 + d % 4);
    const auto dtm = build_dtm(streams, years);

    const auto dir = std::filesystem::temp_directory_path() / "corpuscope_dtm_dump";
    std::filesystem::create_directories(dir);
    write_dtm_dump(dtm, dir / "dtm.csv", dir / "vocab.txt", dir / "docs.csv");
    const auto loaded = read_dtm_dump(dir / "dtm.csv", dir / "vocab.txt", dir / "docs.csv");

    CHECK(loaded.doc_ids() == dtm.doc_ids());
    CHECK(loaded.years() == dtm.years());
    CHECK(loaded.vocab().terms == dtm.vocab().terms);
    CHECK(loaded.total_count() == dtm.total_count());
    for (std::size_t d = 0; d < dtm.doc_count(); ++d) {
        for (const auto& cell : dtm.row(d)) {
            CHECK(loaded.count_at(d, dtm.vocab().terms[cell.term]) == cell.count);
        }
    }
    std::filesystem::remove_all(dir);
}
