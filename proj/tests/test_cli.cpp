#include <doctest.h>

#include <json.hpp>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "test_support.hpp"
#include "twostep/algebra_io.hpp"
#include "twostep/catalog.hpp"

using namespace twostep;
using namespace twostep::cli;
using nlohmann::json;

namespace {

std::string write_entry(const char* id, const char* path) {
    save_algebra_file(path, catalog_entry(id).algebra, std::string(id));
    return path;
}

struct Run {
    int code;
    std::string out, err;
};

Run run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"twostep"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate command") {
    std::string path = write_entry("N^{8,2}_1", "/tmp/twostep_cli_n821.json");
    Run ok = run({"validate", path.c_str()});
    CHECK(ok.code == kOk);
    CHECK(ok.out.find("valid: q = 6, p = 2, n = 8") != std::string::npos);

    std::ofstream bad("/tmp/twostep_cli_bad.json");
    bad << R"({"format_version":"1","q":4,"p":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1"}}]})";
    bad.close();
    Run fail = run({"validate", "/tmp/twostep_cli_bad.json"});
    CHECK(fail.code == kBadInput);
    CHECK(fail.err.find("derived algebra has dimension 1") != std::string::npos);
}

TEST_CASE("invariants command prints the weighted sequence of N^{8,3}_2") {
    std::string path = write_entry("N^{8,3}_2", "/tmp/twostep_cli_n832.json");
    Run r = run({"invariants", path.c_str()});
    CHECK(r.code == kOk);
    CHECK(r.out.find("(4,4,6)") != std::string::npos);
}

TEST_CASE("invariants command withholds center sequences with a caveat") {
    std::string path = write_entry("N^{8,2}_1", "/tmp/twostep_cli_n821.json");
    Run r = run({"invariants", path.c_str()});
    CHECK(r.code == kOk);
    CHECK(r.out.find("withheld (not 3-uniform)") != std::string::npos);
    CHECK(r.out.find("not 3-uniform; center sequences withheld") != std::string::npos);
}

TEST_CASE("decompose command messages") {
    std::string path3 = write_entry("N^{8,2}_3", "/tmp/twostep_cli_n823.json");
    Run indecomposable = run({"decompose", path3.c_str()});
    CHECK(indecomposable.code == kOk);
    CHECK(indecomposable.out.find("Indecomposable: pencil min-pair-sum 8 > q=6") != std::string::npos);

    save_algebra_file("/tmp/twostep_cli_no91.json", gt99_decomposable_examples()[0].algebra);
    Run decomposable = run({"decompose", "/tmp/twostep_cli_no91.json"});
    CHECK(decomposable.code == kOk);
    CHECK(decomposable.out.find("Decomposable: hypergraph components {x1,x4,x5|y2,y3} / {x2,x3|y1}") !=
          std::string::npos);

    std::string path831 = write_entry("N^{8,3}_1", "/tmp/twostep_cli_n831.json");
    Run inconclusive = run({"decompose", path831.c_str()});
    CHECK(inconclusive.code == kOk);
    CHECK(inconclusive.out.find("Inconclusive") != std::string::npos);
}

TEST_CASE("decompose with oracle budget appends the oracle outcome") {
    std::string path = write_entry("N^{8,2}_1", "/tmp/twostep_cli_n821.json");
    Run r = run({"decompose", path.c_str(), "--oracle-budget", "4", "--seed", "9"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("oracle (budget 4, seed 9)") != std::string::npos);
    CHECK(r.out.find("no witness found") != std::string::npos);
}

TEST_CASE("dual command emits the complement quotient") {
    Run r = run({"dual", "-q", "6", "--relations", "[u1,u2]; [u3,u4]"});
    CHECK(r.code == kOk);
    AlgebraFile parsed = parse_algebra_file(r.out);
    CHECK(parsed.algebra.q() == 6);
    CHECK(parsed.algebra.p() == 2);
    CHECK(r.err.find("dim I = 2") != std::string::npos);
    CHECK(r.err.find("dim dual = 8") != std::string::npos);
}

TEST_CASE("dual command with --primal emits N^q/I itself") {
    Run r = run({"dual", "-q", "4", "--relations", "[u1,u2]+[u3,u4]", "--primal"});
    CHECK(r.code == kOk);
    AlgebraFile parsed = parse_algebra_file(r.out);
    CHECK(parsed.algebra.n() == 9);
    CHECK(parsed.algebra.p() == 5);
    auto matches = match(parsed.algebra);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].entry->id == "N^{9,5}_2");
}

TEST_CASE("dual command rejects bad relation lists") {
    Run empty = run({"dual", "-q", "2", "--relations", ""});
    CHECK(empty.code == kBadInput);
    Run non_proper = run({"dual", "-q", "2", "--relations", "[u1,u2]"});
    CHECK(non_proper.code == kBadInput);
    Run missing = run({"dual", "-q", "2"});
    CHECK(missing.code == kUsage);
}

TEST_CASE("catalog show prints rank and t-name") {
    Run r = run({"catalog", "show", "N^{8,3}_{11}"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("rank 2") != std::string::npos);
    CHECK(r.out.find("T^{8,3}_2") != std::string::npos);
    Run missing = run({"catalog", "show", "N^{7,7}_9"});
    CHECK(missing.code == kBadInput);
}

TEST_CASE("catalog list counts 26 entries") {
    Run r = run({"catalog", "list"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("26 entries") != std::string::npos);
}

TEST_CASE("catalog export round trips") {
    Run r = run({"catalog", "export", "/tmp/twostep_cli_export"});
    CHECK(r.code == kOk);
    for (const CatalogEntry& e : catalog()) {
        std::string stem;
        for (char c : e.id)
            if (std::isalnum(static_cast<unsigned char>(c))) stem.push_back(c);
            else if (c == ',' || c == '_') stem.push_back('_');
        AlgebraFile loaded = load_algebra_file("/tmp/twostep_cli_export/" + stem + ".json");
        CHECK(loaded.algebra.tensor() == e.algebra.tensor());
    }
    std::ifstream index("/tmp/twostep_cli_export/index.json");
    REQUIRE(index.good());
    json idx = json::parse(index);
    CHECK(idx.size() == 26);
    CHECK(idx[0].contains("t_name"));
    CHECK(idx[0].contains("provenance"));
}

TEST_CASE("classify command") {
    Run r = run({"dual", "-q", "6", "--relations", "[u1,u3]+[u4,u6]; [u2,u3]+[u5,u6]", "-o",
                 "/tmp/twostep_cli_i10.json"});
    REQUIRE(r.code == kOk);
    Run classify = run({"classify", "/tmp/twostep_cli_i10.json"});
    CHECK(classify.code == kOk);
    CHECK(classify.out.find("Exact match: N^{8,2}_2 / T^{8,2}_{4,4}") != std::string::npos);
    CHECK(classify.out.find("invariant-level only") != std::string::npos);

    // No catalog coverage for exotic signatures.
    StructureTensor t(10, 2);
    t.set(1, 2, 1, 1);
    t.set(3, 4, 2, 1);
    save_algebra_file("/tmp/twostep_cli_q10.json", validate(std::move(t)));
    Run uncovered = run({"classify", "/tmp/twostep_cli_q10.json"});
    CHECK(uncovered.code == kOk);
    CHECK(uncovered.out.find("no catalog coverage for (q,p) = (10,2)") != std::string::npos);
}

TEST_CASE("machine mirrors share the same top-level schema") {
    std::string path = write_entry("N^{8,3}_2", "/tmp/twostep_cli_n832.json");
    std::vector<Run> runs;
    runs.push_back(run({"validate", path.c_str(), "--machine"}));
    runs.push_back(run({"invariants", path.c_str(), "--machine"}));
    runs.push_back(run({"decompose", path.c_str(), "--machine"}));
    runs.push_back(run({"classify", path.c_str(), "--machine"}));
    runs.push_back(run({"catalog", "list", "--machine"}));
    std::vector<std::string> keys;
    for (const Run& r : runs) {
        REQUIRE(r.code == kOk);
        json doc = json::parse(r.out);
        std::vector<std::string> these;
        for (const auto& [k, v] : doc.items()) these.push_back(k);
        std::sort(these.begin(), these.end());
        if (keys.empty()) keys = these;
        CHECK(keys == these);
    }
    // Numeric claims in the text appear in the mirror: spot-check invariants.
    Run machine = run({"invariants", path.c_str(), "--machine"});
    json doc = json::parse(machine.out);
    CHECK(doc["fingerprint"]["weighted_center_related_sequence"] == json({4, 4, 6}));
}

TEST_CASE("usage errors exit with code 1") {
    Run r = run({"frobnicate"});
    CHECK(r.code == kUsage);
    Run no_args = run({});
    CHECK(no_args.code == kUsage);
}
