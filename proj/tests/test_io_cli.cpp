// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "shellab/cli.hpp"

using namespace shellab;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SHELLAB_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("complex files") {
  CHECK_THROWS_AS(parse_complex<2>("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_complex<2>("n 3\n"), ParseError);
  CHECK_THROWS_AS(parse_complex<2>("n 3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_complex<2>("n 3\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_complex<2>("n 3\n1 x\n"), ParseError);
  try {
    parse_complex<2>("# c\nn 3\n\n1 2\n1 9\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
  const auto p = parse_complex<2>(fx::read_file("grid76.txt"));
  CHECK(p.complex.size() == 76);
  CHECK(parse_complex<2>(serialize(p.complex)).complex == p.complex);
  CHECK(serialize(fx::make({{1, 2}, {2, 3}}, 3)) == "n 3\n1 2\n2 3\n");
}

TEST_CASE("wide complexes") {
  std::string text = "n 300\n1 2 300\n2 299 300\n";
  const auto p = parse_complex<8>(text);
  CHECK(p.complex.size() == 2);
  CHECK(find_strong_shelling_order(p.complex).has_value());
  CHECK_THROWS_AS(parse_complex<2>(text), InputError);
}

TEST_CASE("poset files") {
  const auto p = parse_poset("# x\n1 < 2\n2 < 3\n");
  CHECK(p.size() == 3);
  CHECK(parse_poset("n 4\n1 < 2\n").size() == 4);
  CHECK_THROWS_AS(parse_poset("1 > 2\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("n 2\n1 < 3\n"), ParseError);
  CHECK_THROWS_AS(parse_poset(""), ParseError);
}

TEST_CASE("certificate json") {
  const auto c = fx::load("strip4.txt").complex;
  Certificate cert;
  cert.question = "strongly_shellable";
  cert.answer = Answer::yes;
  cert.order = FacetOrder::identity(4);
  const auto j = to_json(cert, c);
  CHECK(j["answer"] == "yes");
  CHECK(j["facets"][0] == json::array({1, 2, 3}));
  CHECK(j["order"].size() == 4);
  CHECK(j["stats"].contains("nodes"));
  CHECK_FALSE(j.contains("h_assignment"));
}

TEST_CASE("cli search and check-order") {
  auto r = run({"search", "--strong", data("strip4.txt")});
  CHECK(r.code == cli::kExitYes);
  const auto j = json::parse(r.out);
  CHECK(j["question"] == "strongly_shellable");
  std::vector<std::size_t> ord = j["order"];
  CHECK(is_strong_shelling_order(fx::load("strip4.txt").complex, FacetOrder(ord)));

  CHECK(run({"search", "--strong", data("strip5.txt")}).code == cli::kExitNo);
  CHECK(run({"check-order", "--strong", "--as-listed", data("fan8.txt")}).code == cli::kExitYes);
  CHECK(run({"check-order", "--strong", "--order", "0,1,2", data("mixed3.txt")}).code ==
        cli::kExitNo);
  CHECK(run({"check-order", data("mixed3.txt")}).code == cli::kExitInputError);
  CHECK(run({"search", "--strong", "--max-nodes", "2", data("grid76.txt")}).code ==
        cli::kExitUndecided);
  CHECK(run({"search", "-"}, "n 3\n1 2\n2 3\n").code == cli::kExitYes);
}

TEST_CASE("cli input errors") {
  auto r = run({"search", "-"}, "n 3\n1 5\n");
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"search", data("missing.txt")}).code == cli::kExitInputError);
  CHECK(run({"bogus"}).code == cli::kExitInputError);
  CHECK(run({"h-decide", data("mixed3.txt")}).code == cli::kExitInputError);
  r = run({"search", "-"}, "n 3\n1 2\n1\n");
  CHECK(r.err.find("dropped non-maximal set {1}") != std::string::npos);
}

TEST_CASE("cli gamma") {
  auto r = run({"gamma", data("hexagon.txt")});
  CHECK(r.code == cli::kExitYes);
  const auto j = json::parse(r.out);
  CHECK(j["girth"] == 6);
  CHECK(j["edges"].size() == 6);
  r = run({"gamma", "--dot", data("path4.txt")});
  CHECK(r.code == cli::kExitNo);
  CHECK(r.out.rfind("// harmonious=false girth=0 diameter=3\n", 0) == 0);
  CHECK(r.out.find("graph codim_one {") != std::string::npos);
}

TEST_CASE("cli classify, h-decide, ideal, poset, expand") {
  auto r = run({"classify", data("weakly8.txt")});
  CHECK(r.code == cli::kExitYes);
  auto j = json::parse(r.out);
  CHECK(j["flags"]["weakly_matroid"] == "yes");
  CHECK(j["flags"]["strongly_shellable"] == "no");

  r = run({"h-decide", "--strong", data("strip4.txt")});
  CHECK(r.code == cli::kExitYes);
  j = json::parse(r.out);
  CHECK(j["h_assignment"].size() == 4);
  CHECK(j["removal"].size() == 4);

  r = run({"ideal", "--linear-quotients", "-"}, "n 4\n1 2\n3 4\n");
  CHECK(r.code == cli::kExitNo);
  j = json::parse(r.out);
  CHECK(j["generators"] == json::array({"x1*x2", "x3*x4"}));

  CHECK(run({"poset", data("chain3.poset")}).code == cli::kExitYes);
  CHECK(run({"poset", data("boolean3.poset")}).code == cli::kExitNo);
  CHECK(run({"poset", "--ranks", "2", data("boolean3.poset")}).code == cli::kExitYes);
  CHECK(run({"poset", "--interval", "1,4", data("boolean3.poset")}).code == cli::kExitYes);

  r = run({"expand", "--counts", "2,1", "-"}, "n 2\n1 2\n");
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out == "n 3\n1 3\n2 3\n");
  CHECK(run({"expand", "--counts", "2", "-"}, "n 2\n1 2\n").code == cli::kExitInputError);
}

TEST_CASE("emitted orders re-verify through check-order") {
  for (const auto& file : fx::small_ss_fixtures()) {
    for (bool strong : {false, true}) {
      std::vector<std::string> args{"search", data(file)};
      if (strong) args.insert(args.begin() + 1, "--strong");
      const auto r = run(args);
      REQUIRE(r.code == cli::kExitYes);
      std::string order;
      const auto j = json::parse(r.out);
      for (const auto& i : j["order"])
        order += (order.empty() ? "" : ",") + std::to_string(i.get<int>());
      std::vector<std::string> check{"check-order", "--order", order, data(file)};
      if (strong) check.insert(check.begin() + 1, "--strong");
      CHECK(run(check).code == cli::kExitYes);
    }
  }
}
