#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "corpuscope/errors.hpp"
#include "corpuscope/ingest.hpp"

using namespace corpuscope;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

BiblioRecord make_record(std::string id, std::string title, std::string abstract, int year) {
    BiblioRecord rec;
    rec.id = std::move(id);
    rec.title = std::move(title);
    rec.abstract_text = std::move(abstract);
    rec.year = year;
    return rec;
}

}  // namespace

TEST_CASE("csv loading parses well-formed rows and skips bad years") {
    const auto path = write_temp("corpuscope_ingest1.csv",
                                 "id,title,abstract,year,affiliations\n"
                                 "p1,First title,\"An abstract, with a comma.\",2005,\"U of A; U of B\"\n"
                                 "p2,Second title,Another abstract.,2010,\n"
                                 "p3,Bad year,Whatever.,20XX,\n");
    const auto result = load_records(path, RecordFormat::kCsv);
    REQUIRE(result.records.size() == 2);
    CHECK(result.skipped_rows == 1);
    CHECK(result.records[0].id == "p1");
    CHECK(result.records[0].abstract_text == "An abstract, with a comma.");
    CHECK(result.records[0].affiliations == std::vector<std::string>{"U of A", "U of B"});
    CHECK(result.records[1].year == 2010);
    std::filesystem::remove(path);
}

TEST_CASE("csv and jsonl of the same records load identically") {
    const auto csv = write_temp("corpuscope_ingest2.csv",
                                "id,title,abstract,year,affiliations\n"
                                "a,T one,Alpha beta.,2003,X University\n"
                                "b,T two,Gamma delta.,2004,X University;Y Institute\n"
                                "c,,Epsilon.,2005,\n"
                                "d,T four,,2006,Z Lab\n"
                                "e,T five,Zeta eta.,2007,\n");
    const auto jsonl = write_temp(
        "corpuscope_ingest2.jsonl",
        R"({"id":"a","title":"T one","abstract":"Alpha beta.","year":2003,"affiliations":["X University"]})"
        "\n"
        R"({"id":"b","title":"T two","abstract":"Gamma delta.","year":"2004","affiliations":"X University;Y Institute"})"
        "\n"
        R"({"id":"c","abstract":"Epsilon.","year":2005})"
        "\n"
        R"({"id":"d","title":"T four","year":2006,"affiliations":["Z Lab"]})"
        "\n"
        R"({"id":"e","title":"T five","abstract":"Zeta eta.","year":2007})"
        "\n");
    const auto from_csv = load_records(csv, RecordFormat::kCsv);
    const auto from_jsonl = load_records(jsonl, RecordFormat::kJsonl);
    REQUIRE(from_csv.records.size() == 5);
    REQUIRE(from_jsonl.records.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(from_csv.records[i].id == from_jsonl.records[i].id);
        CHECK(from_csv.records[i].title == from_jsonl.records[i].title);
        CHECK(from_csv.records[i].abstract_text == from_jsonl.records[i].abstract_text);
        CHECK(from_csv.records[i].year == from_jsonl.records[i].year);
        CHECK(from_csv.records[i].affiliations == from_jsonl.records[i].affiliations);
    }
    std::filesystem::remove(csv);
    std::filesystem::remove(jsonl);
}

TEST_CASE("unknown format token and missing file raise the right errors") {
    CHECK_THROWS_AS(parse_record_format("parquet"), ConfigError);
    CHECK_THROWS_AS(load_records("/nonexistent/nowhere.csv", RecordFormat::kCsv), IoError);
}

TEST_CASE("merge_title_abstract follows the separator rule") {
    CHECK(merge_title_abstract(make_record("x", "Hypersonic inlets", "We study inlets.", 2010)) ==
          "Hypersonic inlets. We study inlets.");
    CHECK(merge_title_abstract(make_record("x", "Hypersonic inlets", "", 2010)) ==
          "Hypersonic inlets");
    CHECK(merge_title_abstract(make_record("x", "", "We study inlets.", 2010)) ==
          "We study inlets.");
    CHECK_THROWS_AS(merge_title_abstract(make_record("x", "", "", 2010)), ContractError);
}

TEST_CASE("filter_and_dedupe drops and counts each removal reason") {
    const YearSpan span{2000, 2020};

    SUBCASE("empty input gives an empty manifest") {
        const auto [manifest, report] = filter_and_dedupe({}, span);
        CHECK(manifest.records.empty());
        CHECK(report.kept == 0);
    }

    SUBCASE("byte-identical text is deduplicated keeping the first record") {
        const auto [manifest, report] = filter_and_dedupe(
            {make_record("a", "Same title", "Same abstract.", 2005),
             make_record("b", "Same title", "Same abstract.", 2007)},
            span);
        REQUIRE(manifest.records.size() == 1);
        CHECK(manifest.records[0].id == "a");
        CHECK(report.duplicate_text == 1);
    }

    SUBCASE("dedup key is normalized: case and whitespace insensitive") {
        const auto [manifest, report] = filter_and_dedupe(
            {make_record("a", "Same  Title", "Same abstract.", 2005),
             make_record("b", "same title", "SAME   ABSTRACT.", 2007)},
            span);
        CHECK(manifest.records.size() == 1);
        CHECK(report.duplicate_text == 1);
    }

    SUBCASE("records lacking both fields are dropped") {
        const auto [manifest, report] = filter_and_dedupe(
            {make_record("a", "T", "A.", 2005), make_record("b", "", "", 2005),
             make_record("c", "T2", "B.", 2006)},
            span);
        CHECK(manifest.records.size() == 2);
        CHECK(report.missing_text == 1);
    }

    SUBCASE("records outside the span are dropped with a counted reason") {
        const auto [manifest, report] = filter_and_dedupe(
            {make_record("a", "T", "A.", 1999), make_record("b", "T2", "B.", 2005)},
            span);
        CHECK(manifest.records.size() == 1);
        CHECK(report.out_of_span == 1);
    }

    SUBCASE("order is preserved and the report adds up") {
        std::vector<BiblioRecord> records;
        for (int i = 0; i < 10; ++i) {
            records.push_back(make_record("r" + std::to_string(i), "Title " + std::to_string(i),
                                          "Abstract " + std::to_string(i), 2000 + i));
        }
        const auto [manifest, report] = filter_and_dedupe(records, span);
        REQUIRE(manifest.records.size() == 10);
        for (int i = 0; i < 10; ++i) {
            CHECK(manifest.records[std::size_t(i)].id == "r" + std::to_string(i));
        }
        CHECK(report.kept + report.missing_text + report.out_of_span + report.duplicate_text +
                  report.duplicate_id ==
              report.input_count);
    }
}

TEST_CASE("filtering is idempotent") {
    const YearSpan span{2000, 2020};
    std::vector<BiblioRecord> records = {
        make_record("a", "One", "Alpha.", 2001),  make_record("b", "One", "Alpha.", 2001),
        make_record("c", "Two", "Beta.", 1980),   make_record("d", "", "", 2002),
        make_record("e", "Three", "Gamma.", 2003)};
    const auto [first, report1] = filter_and_dedupe(records, span);
    const auto [second, report2] = filter_and_dedupe(first.records, span);
    CHECK(second.records.size() == first.records.size());
    CHECK(report2.missing_text == 0);
    CHECK(report2.duplicate_text == 0);
    CHECK(report2.out_of_span == 0);
}

TEST_CASE("every manifest record has non-empty merged text") {
    const YearSpan span{2000, 2020};
    const auto [manifest, report] = filter_and_dedupe(
        {make_record("a", "Only title", "", 2001), make_record("b", "", "Only abstract.", 2002)},
        span);
    REQUIRE(manifest.merged_text.size() == 2);
    for (const auto& text : manifest.merged_text) CHECK(!text.empty());
}

TEST_CASE("country tagging matches case-insensitively with word-boundary short names") {
    std::vector<BiblioRecord> records = {make_record("a", "T", "A.", 2005)};
    records[0].affiliations = {"Dept. of Physics, University of Toronto, CANADA",
                               "Institute of Usage Studies"};
    tag_countries(records, {"Canada", "USA", "Germany"});
    CHECK(records[0].country_tags == std::vector<std::string>{"Canada"});

    records[0].affiliations = {"Space Lab, Houston, USA"};
    tag_countries(records, {"Canada", "USA"});
    CHECK(records[0].country_tags == std::vector<std::string>{"USA"});

    // "usa" inside a word must not match
    records[0].affiliations = {"Usage Analytics Institute, Nowhere"};
    tag_countries(records, {"USA"});
    CHECK(records[0].country_tags.empty());
}

TEST_CASE("drop report serializes as json") {
    DropReport report;
    report.input_count = 10;
    report.kept = 7;
    report.duplicate_text = 2;
    report.missing_text = 1;
    const auto json = report.to_json();
    CHECK(json.find("\"input_count\": 10") != std::string::npos);
    CHECK(json.find("\"duplicate_text\": 2") != std::string::npos);
}
