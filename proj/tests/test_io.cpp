#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "hunt/errors.hpp"
#include "hunt/generators.hpp"
#include "hunt/graph_io.hpp"
#include "hunt/strategy_io.hpp"

using namespace hunt;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

std::string render(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace

TEST_CASE("graph text round trip") {
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(1 + static_cast<int>(rng() % 20), 0.3, rng);
        auto text = render(g);
        CHECK(parse(text) == g);
        CHECK(render(parse(text)) == text);
    }
    auto grid = make_grid(3, 5);
    auto back = parse(render(grid));
    REQUIRE(back.grid());
    CHECK(back.grid()->rows == 3);
    CHECK(back.grid()->cols == 5);
    CHECK(back == grid);
}

TEST_CASE("graph text layout") {
    CHECK(render(make_path(3)) == "3 2\n0 1\n1 2\n");
    CHECK(parse("# hello\n3 2\n# between\n1 2\n0 1\n") == make_path(3));
    CHECK(parse("  3   1 \n 0\t2\n").edge_count() == 1);
    CHECK(parse("2 0\n").order() == 2);
}

TEST_CASE("malformed graph text") {
    for (const char* bad : {"", "# only comments\n", "3\n", "3 1\n", "3 1\n0 3\n", "3 1\n1 1\n",
                            "3 2\n0 1\n1 0\n", "3 1\n0 1 2\n", "3 1\n0 x\n", "-1 0\n",
                            "3 1\n0 1\n1 2\n", "2 0\n# grid 2 2\n", "3 1\n2 1\n"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse(bad), InputError);
    }
    try {
        parse("3 2\n0 1\n0 9\n");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("T_k files") {
    auto t = make_tk(2);
    std::ostringstream out;
    write_tk(out, t);
    CHECK(out.str().rfind("# tk 2 root 0\n", 0) == 0);
    std::istringstream in(out.str());
    auto f = read_graph_file(in);
    CHECK(f.tk_level == 2);
    CHECK(f.tk_root == 0);
    CHECK(f.graph == t.graph);
}

TEST_CASE("graph files on disk") {
    auto dir = std::filesystem::temp_directory_path() / "hunt_test_io";
    std::filesystem::create_directories(dir);
    auto path = (dir / "g.txt").string();
    save_graph(path, make_grid(2, 3));
    CHECK(load_graph(path) == make_grid(2, 3));
    CHECK_THROWS_AS(load_graph((dir / "missing.txt").string()), InputError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("strategy json") {
    Strategy s;
    s.hunters = 2;
    s.rounds = {{3, 1}, {}, {0}};
    CHECK(strategy_to_json(s) == "{\"hunters\":2,\"respect\":\"all\",\"rounds\":[[1,3],[],[0]]}\n");
    s.respect = VertexSet{2, 0};
    CHECK(strategy_to_json(s) == "{\"hunters\":2,\"respect\":[0,2],\"rounds\":[[1,3],[],[0]]}\n");
    CHECK(strategy_from_json(strategy_to_json(s)) == s);

    auto loose = strategy_from_json(R"({ "rounds": [[3, 1]], "respect": "all", "hunters": 2 })");
    CHECK(loose.rounds.front() == VertexSet{1, 3});
    CHECK_FALSE(loose.respect);
    CHECK(strategy_to_json(loose) == "{\"hunters\":2,\"respect\":\"all\",\"rounds\":[[1,3]]}\n");
}

TEST_CASE("strategy json round trip") {
    Rng rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        Strategy s;
        s.hunters = 1 + static_cast<int>(rng() % 5);
        int len = static_cast<int>(rng() % 8);
        for (int i = 0; i < len; ++i) {
            VertexSet r;
            for (int j = 0; j < 4; ++j) r.insert(static_cast<Vertex>(rng() % 100));
            s.rounds.push_back(r);
        }
        if (rng() % 2) s.respect = VertexSet{static_cast<Vertex>(rng() % 50)};
        auto text = strategy_to_json(s);
        CHECK(strategy_from_json(text) == s);
        CHECK(strategy_to_json(strategy_from_json(text)) == text);
    }
}

TEST_CASE("malformed strategy json") {
    for (const char* bad : {"", "[]", "{", R"({"hunters":1,"respect":"all"})",
                            R"({"hunters":1,"rounds":[]})", R"({"respect":"all","rounds":[]})",
                            R"({"hunters":"1","respect":"all","rounds":[]})",
                            R"({"hunters":1,"respect":"some","rounds":[]})",
                            R"({"hunters":1,"respect":"all","rounds":[[1,1]]})",
                            R"({"hunters":1,"respect":"all","rounds":[[-1]]})",
                            R"({"hunters":1,"respect":"all","rounds":[[1.5]]})",
                            R"({"hunters":1,"respect":[2,2],"rounds":[]})",
                            R"({"hunters":1,"respect":"all","rounds":[1]})"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(strategy_from_json(bad), InputError);
    }
}

TEST_CASE("strategy files on disk") {
    auto dir = std::filesystem::temp_directory_path() / "hunt_test_strategy";
    std::filesystem::create_directories(dir);
    auto path = (dir / "s.json").string();
    Strategy s;
    s.hunters = 1;
    s.rounds = {{1}, {1}};
    save_strategy(path, s);
    CHECK(load_strategy(path) == s);
    CHECK_THROWS_AS(load_strategy((dir / "none.json").string()), InputError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("certificates json") {
    Certificate c{0, 2, 100, 7};
    CHECK(certificate_to_json(c) == R"({"k":2,"explored_states":100,"frontier_peak":7,"component":0})" "\n");
    CHECK(certificates_to_json({c, {1, 1, 3, 2}}) ==
          R"([{"k":2,"explored_states":100,"frontier_peak":7,"component":0},{"k":1,"explored_states":3,"frontier_peak":2,"component":1}])" "\n");
    CHECK(certificates_to_json({}) == "[]\n");
}
