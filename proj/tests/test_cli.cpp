#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "figures.hpp"
#include "ptdt/io.hpp"

using namespace ptdt;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "ptdt_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
    fs::path p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("series verb") {
    Run m = run({"series", "--macmahon", "--degree", "6"});
    CHECK(m.code == cli::ok);
    CHECK(has(m.out, "coefficients: 1,1,3,6,13,24,48\n"));
    CHECK(has(m.err, "wall time"));
    CHECK_FALSE(has(m.out, "wall time"));

    Run one = run({"series", "--one-leg", "2,1", "--degree", "0"});
    CHECK(one.code == cli::ok);
    CHECK(has(one.out, "series: 1\n"));

    Run two = run({"series", "--two-leg", "2,2/3,1", "--degree", "4", "--cross-check"});
    CHECK(two.code == cli::ok);
    CHECK(has(two.out, "PASS V = M·W"));
    CHECK(has(two.out, "residual 0"));

    Run cross = run({"series", "--macmahon", "--degree", "8", "--cross-check"});
    CHECK(cross.code == cli::ok);
    CHECK(has(cross.out, "result: PASS"));

    Run half = run({"--degree", "5/2", "series", "--one-leg", "1", "--json"});
    CHECK(half.code == cli::ok);
    auto doc = io::parse(half.out);
    CHECK(doc.at("outputs").at("series").at("bound") == 5);
}

TEST_CASE("biject verb") {
    std::string sigma = write("sigma.json", io::to_json(figures::one_leg_sigma()).dump());
    Run f = run({"biject", "one-leg", "--input", sigma, "--round-trip"});
    CHECK(f.code == cli::ok);
    CHECK(has(f.out, "weights: sigma 19, rho 3, pi 16"));
    CHECK(has(f.out, "result: PASS"));

    std::string out_file = scratch("image.json").string();
    Run saved = run({"biject", "one-leg", "--input", sigma, "--output", out_file, "--schedule", "seeded:4"});
    CHECK(saved.code == cli::ok);
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string image = write("image_copy.json", buf.str());
    Run back = run({"biject", "one-leg", "--direction", "inverse", "--input", image, "--round-trip", "--json"});
    CHECK(back.code == cli::ok);
    CHECK(io::configuration_from_json(io::parse(back.out).at("outputs").at("output")) ==
          Configuration{figures::one_leg_sigma()});

    std::string empty = write("empty.json", R"({"type":"plane_partition","legs":[],"entries":[]})");
    Run e = run({"biject", "plane", "--input", empty, "--json"});
    CHECK(e.code == cli::ok);
    CHECK(io::parse(e.out).at("outputs").at("output").at("tableau").at("values") == nlohmann::json::array());

    std::string two = write("two.json", io::to_json(figures::two_leg_weight16()).dump());
    Run t = run({"biject", "two-leg", "--input", two, "--round-trip"});
    CHECK(t.code == cli::ok);
    CHECK(has(t.out, "stabilization_index: 3"));
    CHECK(has(t.out, "weights: sigma 16, rho 3, pi 13"));

    for (const char* kind : {"plane", "one-leg", "two-leg"}) {
        Run r = run({"--seed", "11", "biject", kind, "--random", "--weight", "5", "--round-trip"});
        CHECK(r.code == cli::ok);
        CHECK(has(r.out, "result: PASS"));
    }
}

TEST_CASE("verify verb") {
    Run t = run({"verify", "--suite", "toggles", "--max-part", "4"});
    CHECK(t.code == cli::ok);
    CHECK(has(t.out, "result: PASS"));
    Run o = run({"verify", "--suite", "ptdt-one-leg", "--lambda", "2,1", "--degree", "8"});
    CHECK(o.code == cli::ok);
    CHECK(has(o.out, "result: PASS"));
    Run n = run({"verify", "--suite", "none"});
    CHECK(n.code == cli::ok);
    CHECK(has(n.out, "PASS (no checks)"));
}

TEST_CASE("enumerate writes a census that verify accepts") {
    std::string path = scratch("census.jsonl").string();
    Run e = run({"enumerate", "two-leg-spp", "--legs", "2/1", "--budget", "3", "--output", path, "--cross-check"});
    CHECK(e.code == cli::ok);
    CHECK(has(e.out, "PASS census is saturated"));
    Run v = run({"verify", "--census", path});
    CHECK(v.code == cli::ok);
    CHECK(has(v.out, "PASS census file matches a fresh enumeration"));

    // Drop the last record and fix the header count: the file parses but is incomplete.
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    lines.pop_back();
    auto header = io::parse(lines[0]);
    header["census"]["count"] = lines.size() - 1;
    std::string tampered = header.dump() + "\n";
    for (std::size_t k = 1; k < lines.size(); ++k) tampered += lines[k] + "\n";
    Run bad = run({"verify", "--census", write("tampered.jsonl", tampered)});
    CHECK(bad.code == cli::invariant_failure);
    CHECK(has(bad.out, "FAIL census file matches a fresh enumeration"));
}

TEST_CASE("toggle and render verbs") {
    Run b = run({"toggle", "between", "--lambda", "2,1", "--nu", "1,1", "--mu", "1"});
    CHECK(b.code == cli::ok);
    CHECK(has(b.out, "toggled: (2)\n"));
    Run p = run({"toggle", "pop", "--lambda", "4,2,1", "--nu", "5,3,1,1", "--mu", "3,2,1"});
    CHECK(has(p.out, "toggled: (2,2)\n"));
    CHECK(has(p.out, "popped: 1\n"));
    Run u = run({"toggle", "push", "--lambda", "∅", "--nu", "∅", "--mu", "∅", "--n", "4"});
    CHECK(has(u.out, "toggled: (4)\n"));

    std::string pi = write("pi.json", io::to_json(figures::weight7()).dump());
    Run r = run({"render", "--input", pi});
    CHECK(r.code == cli::ok);
    CHECK(has(r.out, "[3][1]\n[2][1]\n"));
    std::string svg = scratch("pi.svg").string();
    Run s = run({"render", "--input", pi, "--render", "svg", "--output", svg});
    CHECK(s.code == cli::ok);
    CHECK(fs::file_size(svg) > 0);
}

TEST_CASE("exit codes and determinism") {
    CHECK(run({"series", "--bogus"}).code == cli::usage);
    CHECK(run({}).code == cli::usage);
    CHECK(run({"series", "--macmahon", "--one-leg", "1"}).code == cli::usage);
    CHECK(run({"series", "--macmahon", "--degree", "x"}).code == cli::usage);
    CHECK(run({"verify", "--suite", "everything"}).code == cli::usage);
    CHECK(run({"enumerate", "plane", "--budget", "13"}).code == cli::usage);
    std::string junk = write("junk.json", "{not json");
    Run j = run({"biject", "plane", "--input", junk});
    CHECK(j.code == cli::usage);
    CHECK(has(j.err, "invalid JSON"));
    std::string wrong = write("wrong.json", io::to_json(figures::weight7()).dump());
    CHECK(run({"biject", "one-leg", "--input", wrong}).code == cli::usage);
    CHECK(run({"toggle", "between", "--lambda", "1", "--nu", "2", "--mu", "∅"}).code == cli::usage);

    const std::vector<std::string> args{"--seed", "3", "biject", "one-leg", "--random", "--weight", "6", "--round-trip"};
    CHECK(run(args).out == run(args).out);
    CHECK(run({"verify", "--suite", "hooks", "--max-weight", "4", "--json"}).out ==
          run({"verify", "--suite", "hooks", "--max-weight", "4", "--json"}).out);
}
