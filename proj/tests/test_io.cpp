#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kr/io.hpp"

using namespace kr;

TEST_CASE("graph json and dot exports are nonempty and deterministic") {
    auto k = KRCrystal::get(AffineType{Kind::OneOne, 4}, 1, 1);
    std::ostringstream a, b, d;
    write_graph_json(a, k->graph, k->sigma_map);
    write_graph_json(b, k->graph, k->sigma_map);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"vertices\"") != std::string::npos);
    write_graph_dot(d, k->graph);
    CHECK(d.str().rfind("digraph", 0) == 0);
    CHECK(d.str().find("label=\"0\"") != std::string::npos);  // zero arrows present
}

TEST_CASE("cache round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "kr_cache_test";
    fs::remove_all(dir);
    auto k = KRCrystal::get(AffineType{Kind::Two, 4}, 1, 2);
    save_kr_cache(dir.string(), *k);
    fs::path expect = dir / "C_4" / "1x2.krz";
    CHECK(fs::exists(expect));
    CHECK(check_kr_cache(dir.string(), *k));
    // A stale or corrupt file is rejected.
    {
        std::ofstream out(expect);
        out << "{\"schema\": 0}";
    }
    CHECK(!check_kr_cache(dir.string(), *k));
    fs::remove_all(dir);
}

TEST_CASE("laurent json") {
    Laurent p = Laurent::monomial(2, -1) + Laurent(3);
    CHECK(laurent_json(p) == "{\"-1\":2,\"0\":3}");
}

TEST_CASE("element json shapes") {
    Element el{{highest_weight_tableau(Partition{2, 1})}};
    CHECK(element_json(el) == "[[[1,1],[2]]]");
}
