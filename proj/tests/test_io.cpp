#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "mms/io.hpp"

using namespace mms;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("io_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("points csv round trip") {
    TempFile f("pts.csv", "x0,x1,mass\n0,0,1\n3,4,2\n");
    const auto s = io::read_points_csv(f.path);
    CHECK(s.size() == 2);
    CHECK(s.dist(0, 1) == doctest::Approx(5.0));
    CHECK(s.masses() == std::vector<double>{1.0, 2.0});
}

TEST_CASE("points csv without mass column") {
    TempFile f("pts2.csv", "x0\n0\n1\n2\n");
    const auto s = io::read_points_csv(f.path);
    CHECK(s.size() == 3);
    CHECK(s.total_mass() == 3.0);
}

TEST_CASE("graph json") {
    TempFile f("g.json",
               R"({"vertices":[{"id":"a","mass":1},{"id":"b","mass":2},{"id":"c","mass":1}],)"
               R"("edges":[{"u":"a","v":"b","w":1},{"u":"b","v":"c","w":1}]})");
    const auto s = io::read_graph_json(f.path);
    CHECK(s.size() == 3);
    CHECK(s.dist(0, 2) == doctest::Approx(2.0));
    CHECK(s.total_mass() == doctest::Approx(4.0));
}

TEST_CASE("matrix csv with mass sidecar") {
    TempFile m("m.csv", "0,1,2\n1,0,1\n2,1,0\n");
    TempFile w("w.csv", "1\n2\n3\n");
    const auto s = io::read_matrix_csv(m.path, w.path);
    CHECK(s.size() == 3);
    CHECK(s.total_mass() == doctest::Approx(6.0));
}

TEST_CASE("non-square matrix rejected") {
    TempFile m("bad.csv", "0,1\n1,0\n2,2\n");
    std::vector<double> d;
    std::size_t n;
    CHECK_THROWS(io::read_raw_matrix(m.path, d, n));
}

TEST_CASE("net json uses string ids") {
    const auto s = fixtures::line(4);
    const auto net = minimal_epsilon_net(s, 1.0, 0);
    const auto j = io::net_to_json(s, net);
    CHECK(j["centers"].size() == 2);
    CHECK(j["centers"][0].get<std::string>() == s.ids()[0]);
    CHECK(j["epsilon"].get<double>() == 1.0);
}

TEST_CASE("quasimetric csv + sidecar round trip") {
    const auto s = fixtures::line(3);
    const auto q = quasimetric_q(s, 0.5, QVariant::general);
    io::write_quasimetric_csv("io_test_q.csv", q);
    std::vector<double> vals;
    std::size_t n;
    io::read_raw_matrix("io_test_q.csv", vals, n);
    CHECK(n == 3);
    for (std::size_t i = 0; i < vals.size(); ++i) CHECK(vals[i] == q.values[i]);
    const auto side = io::quasimetric_sidecar(q);
    CHECK(side["s"].get<double>() == 0.5);
    CHECK(side["variant"].get<std::string>() == "general");
    std::remove("io_test_q.csv");
}

TEST_CASE("atomic write lands the full content") {
    io::write_text_atomic("io_test_atomic.txt", "hello\n");
    std::ifstream in("io_test_atomic.txt");
    std::string line;
    std::getline(in, line);
    CHECK(line == "hello");
    std::remove("io_test_atomic.txt");
}

TEST_CASE("deterministic json emission") {
    const auto s = fixtures::random_cube_space(30, 2, 12);
    const auto a = io::regularity_to_json(regularity_report(s)).dump();
    const auto b = io::regularity_to_json(regularity_report(s)).dump();
    CHECK(a == b);
}
