#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "switchhom/cli.hpp"

using switchhom::run_cli;

namespace {

std::filesystem::path test_dir() {
    static std::filesystem::path dir = [] {
        std::filesystem::path p =
            std::filesystem::temp_directory_path() / "switchhom-cli-tests";
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

std::string file(const std::string& name, const std::string& content) {
    std::filesystem::path path = test_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return Run{code, out.str(), err.str()};
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

std::string z2_file() { return file("z2.group", "group 2\n(1 2)\n"); }
std::string d4_file() { return file("d4.group", "group 4\n(1 2 3 4)\n(1 3)\n"); }
std::string k2_file() { return file("k2.ecg", "ecg 2 2\n0 1 1\n"); }
std::string alternating_file() {
    return file("alternating.ecg", "ecg 2 4\n0 1 1\n1 2 2\n2 3 1\n0 3 2\n");
}
std::string nearly_file() {
    return file("nearly.ecg", "ecg 2 4\n0 1 1\n1 2 1\n2 3 1\n0 3 2\n");
}
std::string triangle_file() { return file("triangle.ecg", "ecg 2 3\n0 1 1\n1 2 1\n0 2 2\n"); }

}  // namespace

TEST_CASE("group-info reports group structure") {
    Run r = run({"group-info", d4_file()});
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) ==
          "GROUP degree=4 order=8 transitive=yes abelian=no regular=no commutator-order=2 "
          "blocks=2");
    CHECK(r.out.find("block 1: {1, 3}") != std::string::npos);
    CHECK(r.err.empty());

    Run json_run = run({"group-info", d4_file(), "--format", "json"});
    CHECK(json_run.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(json_run.out);
    CHECK(parsed["order"] == 8);
    CHECK(parsed["commutator-order"] == 2);
    CHECK(parsed["blocks"] == 2);
}

TEST_CASE("abelianize prints blocks, quotient and relabelled graph") {
    Run r = run({"abelianize", d4_file(),
                 file("square13.ecg", "ecg 4 4\n0 1 1\n1 2 3\n2 3 1\n0 3 3\n")});
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "ABELIANIZED blocks=2");
    CHECK(r.out.find("ecg 2 4") != std::string::npos);
}

TEST_CASE("switch applies a sequence file") {
    Run r = run({"switch", z2_file(), k2_file(), file("toggle.seq", "0 (1 2)\n")});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "ecg 2 2\n0 1 2\n");

    Run bad = run({"switch", d4_file(), file("k2m4.ecg", "ecg 4 2\n0 1 1\n"),
                   file("foreign.seq", "0 (1 2)\n")});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("error: ") == 0);
}

TEST_CASE("equiv answers yes and no") {
    Run yes = run({"equiv", z2_file(), k2_file(), file("k2b.ecg", "ecg 2 2\n0 1 2\n")});
    CHECK(yes.exit_code == 0);
    CHECK(first_line(yes.out) == "YES");
    CHECK(yes.out.find("sequence:") != std::string::npos);

    Run no = run({"equiv", z2_file(), nearly_file(),
                  file("square1.ecg", "ecg 2 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n")});
    CHECK(no.exit_code == 1);
    CHECK(first_line(no.out) == "NO");
}

TEST_CASE("mono reports the smallest reachable colour") {
    Run yes = run({"mono", z2_file(), triangle_file()});
    CHECK(yes.exit_code == 0);
    CHECK(first_line(yes.out) == "YES colour=2");

    Run no = run({"mono", z2_file(), nearly_file()});
    CHECK(no.exit_code == 1);
    CHECK(first_line(no.out) == "NO");
}

TEST_CASE("switchgraph prints a labelled product") {
    Run r = run({"switchgraph", z2_file(), k2_file()});
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "# 0 = (0, ())");
    CHECK(r.out.find("ecg 2 4") != std::string::npos);
}

TEST_CASE("decide emits a checkable witness") {
    std::string witness_path = (test_dir() / "out.witness").string();
    Run r = run({"decide", z2_file(), alternating_file(), k2_file(), "--witness", witness_path});
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "YES");

    Run check = run({"check", z2_file(), alternating_file(), k2_file(), witness_path});
    CHECK(check.exit_code == 0);
    CHECK(first_line(check.out) == "YES");

    std::string corrupted = slurp(witness_path);
    corrupted.replace(corrupted.rfind("map"), std::string::npos, "map 3 9\n");
    Run bad = run({"check", z2_file(), alternating_file(), k2_file(),
                   file("bad.witness", corrupted)});
    CHECK(bad.exit_code == 1);
    CHECK(first_line(bad.out) == "NO");
}

TEST_CASE("decide answers no without a witness") {
    Run r = run({"decide", z2_file(), nearly_file(), k2_file()});
    CHECK(r.exit_code == 1);
    CHECK(r.out == "NO\n");
}

TEST_CASE("decide agrees with its brute-force mode") {
    for (const std::string& graph : {alternating_file(), nearly_file()}) {
        Run fast = run({"decide", z2_file(), graph, k2_file()});
        Run brute = run({"decide", z2_file(), graph, k2_file(), "--oracle"});
        CHECK(fast.exit_code == brute.exit_code);
        CHECK(first_line(fast.out) == first_line(brute.out));
    }
    Run conflict = run({"decide", z2_file(), k2_file(), k2_file(), "--oracle", "--witness",
                        (test_dir() / "x.witness").string()});
    CHECK(conflict.exit_code == 2);
}

TEST_CASE("classify covers the dichotomy") {
    Run poly = run({"classify", z2_file(), k2_file()});
    CHECK(poly.exit_code == 0);
    CHECK(first_line(poly.out) == "POLYNOMIAL mono-bipartite colour=Δ1");

    Run edgeless = run({"classify", z2_file(), file("edgeless.ecg", "ecg 2 3\n")});
    CHECK(edgeless.exit_code == 0);
    CHECK(first_line(edgeless.out) == "POLYNOMIAL edgeless");

    Run odd = run({"classify", z2_file(), triangle_file()});
    CHECK(odd.exit_code == 1);
    CHECK(first_line(odd.out) == "NP-COMPLETE odd-cycle length=3");

    std::string cert_path = (test_dir() / "nearly.cert").string();
    Run nearly = run({"classify", z2_file(), nearly_file(), "--certificate", cert_path});
    CHECK(nearly.exit_code == 1);
    CHECK(first_line(nearly.out) == "NP-COMPLETE nearly-monochromatic (Δ1,Δ2)");
    std::string cert = slurp(cert_path);
    CHECK(first_line(cert) == "kind nearly-mono-even-cycle");
    CHECK(cert.find("pair 1 2") != std::string::npos);
    CHECK(cert.find("cotree-edge 2 3") != std::string::npos);
}

TEST_CASE("indicator prints a digraph") {
    Run r = run({"indicator", file("path12.ecg", "ecg 2 3\n0 1 1\n1 2 2\n"), "1", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "digraph 3\n0 2\n");
}

TEST_CASE("thm7 extends the classification line") {
    Run hard = run({"thm7", z2_file(), nearly_file()});
    CHECK(hard.exit_code == 1);
    CHECK(first_line(hard.out) ==
          "NP-COMPLETE nearly-monochromatic (Δ1,Δ2) d=2 k=2 C1=4 C2=6 smooth=yes coprime=yes");
    CHECK(hard.out.find("C1:") != std::string::npos);

    Run poly = run({"thm7", z2_file(), k2_file()});
    CHECK(poly.exit_code == 0);
    CHECK(first_line(poly.out) == "POLYNOMIAL mono-bipartite colour=Δ1");

    Run odd = run({"thm7", z2_file(), triangle_file()});
    CHECK(odd.exit_code == 1);
    CHECK(first_line(odd.out) == "NP-COMPLETE odd-cycle length=3");
}

TEST_CASE("json output is valid json across commands") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"classify", z2_file(), nearly_file()},
          std::vector<std::string>{"decide", z2_file(), alternating_file(), k2_file()},
          std::vector<std::string>{"thm7", z2_file(), nearly_file()},
          std::vector<std::string>{"mono", z2_file(), triangle_file()}}) {
        std::vector<std::string> with_json = args;
        with_json.push_back("--format");
        with_json.push_back("json");
        Run r = run(with_json);
        nlohmann::json parsed = nlohmann::json::parse(r.out);
        CHECK(parsed.contains("command"));
    }
}

TEST_CASE("output is deterministic") {
    Run first = run({"decide", z2_file(), alternating_file(), k2_file()});
    Run second = run({"decide", z2_file(), alternating_file(), k2_file()});
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
}

TEST_CASE("usage errors exit with code 2") {
    Run unknown = run({"frobnicate"});
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.err.find("error: unknown command") == 0);
    CHECK(unknown.err.find("usage:") != std::string::npos);

    Run missing = run({"classify", z2_file()});
    CHECK(missing.exit_code == 2);

    Run no_file = run({"classify", z2_file(), (test_dir() / "absent.ecg").string()});
    CHECK(no_file.exit_code == 2);
    CHECK(no_file.err.find("error: cannot read file") == 0);

    Run empty = run({});
    CHECK(empty.exit_code == 2);

    Run bad_flag = run({"classify", z2_file(), k2_file(), "--frobnicate"});
    CHECK(bad_flag.exit_code == 2);
}
