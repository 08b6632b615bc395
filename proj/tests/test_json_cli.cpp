#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "freewitt/errors.hpp"
#include "freewitt/json_io.hpp"
#include "freewitt/random.hpp"
#include "helpers.hpp"

using namespace freewitt;
using namespace freewitt::json_io;
using testing::R;
using testing::Rs;
using testing::S;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = "freewitt_test_" + name + ".json";
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("series encoding") {
    const auto s = S({"1", "-1/2", "0", "7"});
    const Json j = encode(s);
    CHECK(dump(j) == "{\n  \"coeffs\": [\n    \"1/1\",\n    \"-1/2\",\n    \"0/1\",\n    \"7/1\"\n  ],\n  \"order\": 3\n}\n");
    CHECK(decode_series(parse(dump(j))) == s);
    CHECK_THROWS_AS(decode_series(parse(R"({"order": 2, "coeffs": ["1/1"]})")), ParseError);
    CHECK_THROWS_AS(decode_series(parse(R"({"order": 0, "coeffs": ["0.5"]})")), ParseError);
    CHECK_THROWS_AS(parse("{not json"), ParseError);
}

TEST_CASE("vector and distribution encodings") {
    const WittVector w(Rs({"1", "2/3"}));
    CHECK(dump(encode(w)) == dump(parse(R"({"kind":"witt","comps":["1/1","2/3"]})")));
    CHECK(decode_witt(encode(w)) == w);
    CHECK_THROWS_AS(decode_ghost(encode(w)), ParseError);
    const Distribution mu(Rs({"1", "5/2"}));
    CHECK(decode_distribution(encode(mu)) == mu);
    CHECK(encode(mu).contains("moments"));
}

TEST_CASE("structured encodings roundtrip") {
    const auto F = Fgl::multiplicative(4);
    const auto Fj = encode(F);
    CHECK(decode_fgl(Fj).F == F.F);
    CHECK(dump(encode(decode_fgl(parse(dump(Fj))))) == dump(Fj));

    OpElement a(2, 3);
    a.add_term(OpWord{{1}, {2, 2}}, R("3/4"));
    a.add_term(OpWord{}, R("-1"));
    CHECK(decode_op(parse(dump(encode(a)))) == a);
    CHECK_THROWS_AS(decode_op(parse(R"({"generators":1,"degree_cap":1,"terms":[{"creators":[2],"annihilators":[],"coeff":"1/1"}]})")), ParseError);

    const auto P = MultiPoly::variable("p2", 2) * MultiPoly::variable("p1") + MultiPoly(R("1/3"));
    const auto Pj = encode(P);
    CHECK(decode_poly(Pj) == P);
    CHECK(decode_poly(Pj).weight_of("p2") == 2);

    const auto t = grunsky_coeffs(FaberInput::numeric(Rs({"1", "2", "-1"})), 3);
    CHECK(encode(t).size() == 9);
    const auto t2 = decode_grunsky(encode(t));
    CHECK(t2.M == 3);
    CHECK(t2.beta == t.beta);
    CHECK_THROWS_AS(decode_grunsky(parse(R"(["1/1","0/1"])")), ParseError);
}

TEST_CASE("cli: series and exit codes") {
    const auto f = temp_file("geo", dump(encode(testing::geometric(R("1"), 4))));
    auto r = run({"series", "log", f});
    CHECK(r.code == 0);
    CHECK(decode_series(parse(r.out)) == S({"0", "1", "1/2", "1/3", "1/4"}));
    r = run({"series", "log", "-", "--order", "2"}, dump(encode(testing::geometric(R("1"), 4))));
    CHECK(r.code == 0);
    CHECK(decode_series(parse(r.out)) == S({"0", "1", "1/2"}));
    r = run({"series", "exp", f});
    CHECK(r.code == 2);
    CHECK(r.err.find("ConstantTermNotZero") != std::string::npos);
    r = run({"series", "frobnicate", f});
    CHECK(r.code == 1);
    r = run({"teleport"});
    CHECK(r.code == 1);
    CHECK(r.err.find("UnknownVerb") != std::string::npos);
    r = run({"series", "log", "does_not_exist.json"});
    CHECK(r.code == 1);
    r = run({"series", "log", "-"}, "{\"order\": 1");
    CHECK(r.code == 1);
    CHECK(r.err.find("ParseError") != std::string::npos);
    std::remove(f.c_str());
}

TEST_CASE("cli: witt and freeprob verbs") {
    const auto a = temp_file("a", R"({"kind":"witt","comps":["2","0","0","5"]})");
    const auto b = temp_file("b", R"({"kind":"witt","comps":["3","0","0","1/2"]})");
    auto r = run({"witt", "add", a, b, "--len", "3"});
    CHECK(r.code == 0);
    CHECK(decode_witt(parse(r.out)) == WittVector(Rs({"5", "-6", "-30"})));
    r = run({"witt", "diagram", a});
    CHECK(r.code == 0);
    const auto paths = parse(r.out).at("paths");
    for (const auto& [k, v] : paths.items()) CHECK(v.get<bool>());
    r = run({"witt", "gamma", b});
    CHECK(r.code == 0);
    CHECK(run({"witt", "gamma", "-"}, r.out).out == dump(encode(WittVector(Rs({"3", "0", "0", "1/2"})))));

    const auto mu = temp_file("mu", dump(encode(Distribution::free_poisson(8))));
    r = run({"freeprob", "boxtimes", mu, mu, "--order", "4"});
    CHECK(r.code == 0);
    CHECK(decode_distribution(parse(r.out)).moment(2) == 3);
    r = run({"freeprob", "circledast", mu, temp_file("d2", dump(encode(Distribution::dirac(2, 8))))});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotMeanOne") != std::string::npos);
    for (const auto& p : {a, b, mu}) std::remove(p.c_str());
}

TEST_CASE("cli: fock and genus verbs") {
    const auto f = temp_file("f", dump(encode(S({"0", "1", "0", "0", "0", "0"}))));
    auto r = run({"fock", "moments", "--f", f, "--form", "additive", "--order", "6"});
    CHECK(r.code == 0);
    CHECK(decode_distribution(parse(r.out)) == Distribution::semicircle(6));
    r = run({"genus", "from-values", "--name", "todd", "--len", "5"});
    CHECK(r.code == 0);
    const auto q = run({"genus", "q", "-"}, r.out);
    CHECK(decode_series(parse(q.out)) == S({"1", "1/2", "1/12", "0", "-1/720"}));
    const auto k = run({"genus", "ksequence", "-", "--degree", "3"}, q.out);
    CHECK(k.code == 0);
    CHECK(run({"genus", "check-mult", "-"}, k.out).out == run({"genus", "checkmult", "-"}, k.out).out);
    CHECK(parse(run({"genus", "checkmult", "-"}, k.out).out).at("pass").get<bool>());
    r = run({"genus", "named", "--name", "Z"});
    CHECK(r.code == 2);
    CHECK(r.err.find("UnknownName") != std::string::npos);
    std::remove(f.c_str());
}

TEST_CASE("cli: selftest determinism") {
    const auto first = run({"selftest", "--order", "5", "--seed", "7"});
    const auto second = run({"selftest", "--order", "5", "--seed", "7"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("9/9 criteria passed") != std::string::npos);
}
