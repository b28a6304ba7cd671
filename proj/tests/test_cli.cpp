#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cforge::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("gen-hadamard produces grids") {
    Result sylv = run_cli({"gen-hadamard", "--order", "8", "--method", "sylvester"});
    REQUIRE(sylv.code == 0);
    CHECK(sylv.out.substr(0, 9) == "++++++++\n");
    CHECK(sylv.out.size() == 8 * 9);

    Result paley = run_cli({"gen-hadamard", "--order", "12", "--method", "paley"});
    REQUIRE(paley.code == 0);
    CHECK(paley.out.size() == 12 * 13);

    Result bad = run_cli({"gen-hadamard", "--order", "12", "--method", "sylvester"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "power of two"));

    Result badq = run_cli({"gen-hadamard", "--order", "10", "--method", "paley"});
    CHECK(badq.code == 1);
    CHECK(contains(badq.err, "not prime"));
}

TEST_CASE("normalize command") {
    std::string grid = run_cli({"gen-hadamard", "--order", "4", "--method", "sylvester"}).out;
    // Flip the first row's signs.
    std::string flipped = grid;
    for (std::size_t i = 0; i < 4; ++i) flipped[i] = flipped[i] == '+' ? '-' : '+';
    Result norm = run_cli({"normalize"}, flipped);
    REQUIRE(norm.code == 0);
    CHECK(norm.out == grid);

    Result bad = run_cli({"normalize"}, "++\n+=\n");
    CHECK(bad.code == 2);
}

TEST_CASE("full conversion pipeline reproduces the normalized matrix") {
    std::string h = run_cli({"gen-hadamard", "--order", "8", "--method", "paley"}).out;

    Result sb = run_cli({"to-sbibd"}, h);
    REQUIRE(sb.code == 0);
    CHECK(contains(sb.out, "sbibd 7 3 1"));

    Result cr = run_cli({"to-cretan", "--convention", "x-on-zeros"}, sb.out);
    REQUIRE(cr.code == 0);
    CHECK(contains(cr.out, "\"convention\":\"x-on-zeros\""));
    CHECK(contains(cr.out, "\"y\":\"-2/1 + 1/1*sqrt(2)\""));

    Result inc = run_cli({"to-incidence"}, cr.out);
    REQUIRE(inc.code == 0);
    CHECK(contains(inc.out, "sbibd 7 4 2"));

    // An infeasible level assignment is an exit-1 failure with a certificate.
    Result infeasible =
        run_cli({"to-cretan", "--convention", "x-on-ones"},
                "sbibd 5 4 3\n01111\n10111\n11011\n11101\n11110\n");
    CHECK(infeasible.code == 1);
    CHECK(contains(infeasible.err, "modulus"));

    Result comp = run_cli({"complement"}, inc.out);
    REQUIRE(comp.code == 0);
    CHECK(contains(comp.out, "sbibd 7 3 1"));

    Result back = run_cli({"to-hadamard"}, comp.out);
    REQUIRE(back.code == 0);
    CHECK(back.out == h); // paley output is already normalized
}

TEST_CASE("verify command certifies and rejects") {
    std::string h = run_cli({"gen-hadamard", "--order", "8", "--method", "paley"}).out;
    Result ok = run_cli({"verify"}, h);
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "hadamard matrix of order 8"));
    CHECK(contains(ok.out, "pass"));

    Result sbibd_ok = run_cli({"verify"}, run_cli({"to-sbibd"}, h).out);
    CHECK(sbibd_ok.code == 0);
    CHECK(contains(sbibd_ok.out, "sbibd (7,3,1)"));

    // A matrix whose gram is not omega*I names the violated pair.
    std::string ones_json = R"({"order":2,"disc":1,"entries":[
        [{"a":[1,1],"b":[0,1]},{"a":[1,1],"b":[0,1]}],
        [{"a":[1,1],"b":[0,1]},{"a":[1,1],"b":[0,1]}]]})";
    Result bad = run_cli({"verify"}, ones_json);
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "characteristic equation violated at rows (0,1)"));

    // Corrupted grid.
    std::string broken = h;
    broken[10] = broken[10] == '+' ? '-' : '+';
    Result bad2 = run_cli({"verify"}, broken);
    CHECK(bad2.code == 1);
    CHECK(contains(bad2.err, "inner product"));

    // Cretan JSON passes through the full certificate chain.
    std::string cretan = run_cli({"to-cretan"}, run_cli({"to-sbibd"}, h).out).out;
    Result cr_ok = run_cli({"verify"}, cretan);
    CHECK(cr_ok.code == 0);
    CHECK(contains(cr_ok.out, "cretan matrix of order 7"));
}

TEST_CASE("bounds command") {
    Result b7 = run_cli({"bounds", "--order", "7"});
    REQUIRE(b7.code == 0);
    CHECK(contains(b7.out, "hadamard 907.493"));
    CHECK(contains(b7.out, "barba 778.799"));
    CHECK(!contains(b7.out, "wojtas"));

    Result b6 = run_cli({"bounds", "--order", "6"});
    CHECK(contains(b6.out, "wojtas 160"));

    Result j = run_cli({"bounds", "--order", "7", "--json"});
    CHECK(contains(j.out, "\"schema\": 1"));
    CHECK(contains(j.out, "\"barba\": 778.799"));
}

TEST_CASE("roundtrip command") {
    Result r = run_cli({"roundtrip", "--t", "2"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "y = -2/1 + 1/1*sqrt(2)"));
    CHECK(contains(r.out, "omega = 22/1 + -12/1*sqrt(2) (~ 5.02944)"));
    CHECK(contains(r.out, "final-equals-initial: pass"));

    Result file_input =
        run_cli({"roundtrip", "--in", "-"},
                run_cli({"gen-hadamard", "--order", "16", "--method", "sylvester"}).out);
    CHECK(file_input.code == 0);
    CHECK(contains(file_input.out, "t 4"));

    Result no_gen = run_cli({"roundtrip", "--t", "9"});
    CHECK(no_gen.code == 1);
    CHECK(contains(no_gen.err, "no generator"));

    Result json = run_cli({"roundtrip", "--t", "1", "--json"});
    CHECK(contains(json.out, "\"command\": \"roundtrip\""));
    CHECK(contains(json.out, "\"y\": \"-1/2\""));
    CHECK(contains(json.out, "\"final_equals_initial\": true"));
}

TEST_CASE("scan command") {
    Result s = run_cli({"scan", "--t-max", "3"});
    REQUIRE(s.code == 0);
    CHECK(contains(s.out, "1\t4\tpass"));
    CHECK(contains(s.out, "2\t8\tpass"));
    CHECK(contains(s.out, "3\t12\tpass"));

    Result with_gap = run_cli({"scan", "--t-max", "9"});
    CHECK(contains(with_gap.out, "7\t28\tno generator"));
    CHECK(contains(with_gap.out, "9\t36\tno generator"));
    CHECK(contains(with_gap.out, "8\t32\tpass"));
}

TEST_CASE("render command") {
    std::string grid = run_cli({"gen-hadamard", "--order", "4", "--method", "sylvester"}).out;
    Result r = run_cli({"render"}, grid);
    REQUIRE(r.code == 0);
    CHECK(r.out.substr(0, 3) == "P2\n");
    CHECK(contains(r.out, "4 4"));

    Result scaled = run_cli({"render", "--scale", "3"}, grid);
    CHECK(contains(scaled.out, "12 12"));

    Result bad = run_cli({"render"}, "garbage\n");
    CHECK(bad.code == 2);
}

TEST_CASE("identical invocations are byte-identical") {
    for (const auto& args :
         {std::vector<std::string>{"bounds", "--order", "13", "--json"},
          std::vector<std::string>{"roundtrip", "--t", "3", "--json"},
          std::vector<std::string>{"scan", "--t-max", "5"}}) {
        Result a = run_cli(args);
        Result b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("environment variable switches reports to JSON") {
    setenv("CRETAN_FORGE_JSON", "1", 1);
    Result r = run_cli({"bounds", "--order", "7"});
    unsetenv("CRETAN_FORGE_JSON");
    CHECK(contains(r.out, "\"schema\": 1"));
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bounds"}).code == 2);                       // missing --order
    CHECK(run_cli({"bounds", "--order", "7", "--bogus"}).code == 2); // unknown flag
    CHECK(run_cli({"no-such-verb"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"roundtrip"}).code == 1); // needs --t or --in
}
