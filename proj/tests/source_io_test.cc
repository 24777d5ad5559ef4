// Copyright 2026 The casemod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "casemod/source_io.h"

#include "casemod/error.h"
#include "doctest.h"
#include "test_support.h"

namespace casemod {
namespace {

ParseErrorKind kind_of(std::string_view text, auto parser) {
  try {
    parser(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no parse error for:\n" << text);
  return ParseErrorKind::kSyntax;
}

TEST_CASE("LCS sources") {
  const LcsInstance lcs =
      parse_lcs(testing::read_file(testing::data_path("sources/ab_ba.lcs")));
  CHECK(lcs == LcsInstance{{"ab", "ba"}, 1});
  CHECK(parse_lcs(serialize_lcs(lcs)) == lcs);
  CHECK(parse_lcs("lcs v1\nstring\ntarget 0\n") == LcsInstance{{""}, 0});
  CHECK(kind_of("lcs v1\ntarget 1\n", parse_lcs) == ParseErrorKind::kMissingSection);
  CHECK(kind_of("lcs v1\nstring ab\n", parse_lcs) == ParseErrorKind::kMissingSection);
  CHECK(kind_of("lcs v1\nstring a*\ntarget 1\n", parse_lcs) == ParseErrorKind::kSyntax);
  CHECK(kind_of("lcs v1\nstring a b\ntarget 1\n", parse_lcs) == ParseErrorKind::kArity);
  CHECK(kind_of("lcs v2\n", parse_lcs) == ParseErrorKind::kSyntax);
}

TEST_CASE("partitioned clique sources") {
  const PartitionedCliqueInstance g = parse_pclique(
      testing::read_file(testing::data_path("sources/single_edge.pclique")));
  CHECK(g.vertex_names == std::vector<std::string>{"u1", "w1"});
  CHECK(g.parts == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(parse_pclique(serialize_pclique(g)) == g);
  const PartitionedCliqueInstance empty = parse_pclique(
      testing::read_file(testing::data_path("sources/empty_part.pclique")));
  CHECK(empty.parts[1].empty());
  CHECK(kind_of("pclique v1\npart a\npart a\n", parse_pclique) ==
        ParseErrorKind::kDuplicateName);
  CHECK(kind_of("pclique v1\npart a\nedge a b\n", parse_pclique) ==
        ParseErrorKind::kUnknownIdentifier);
  CHECK(kind_of("pclique v1\npart a\nedge a a\n", parse_pclique) ==
        ParseErrorKind::kSyntax);
  CHECK(kind_of("pclique v1\npart *\n", parse_pclique) == ParseErrorKind::kSyntax);
}

TEST_CASE("circuit sources are sorted topologically") {
  const CircuitInstance c = parse_circuit(
      "circuit v1\ninput x\nand top mid x\nnot mid x\noutput top\nweight 1\n");
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0].name == "mid");
  CHECK(c.gates[1].name == "top");
  CHECK(c.gates[1].inputs == std::vector<std::size_t>{1, 0});
  CHECK(c.output == 2);
  CHECK(parse_circuit(serialize_circuit(c)) == c);
  CHECK_FALSE(c.evaluate({true}));
  CHECK_FALSE(c.evaluate({false}));

  CHECK(kind_of("circuit v1\ninput x\nand a b x\nand b a x\noutput a\nweight 1\n",
                parse_circuit) == ParseErrorKind::kSyntax);
  CHECK(kind_of("circuit v1\ninput x\nnot a y\noutput a\nweight 1\n",
                parse_circuit) == ParseErrorKind::kUnknownIdentifier);
  CHECK(kind_of("circuit v1\ninput x\nnot a x x\noutput a\nweight 1\n",
                parse_circuit) == ParseErrorKind::kArity);
  CHECK(kind_of("circuit v1\ninput x\nweight 1\n", parse_circuit) ==
        ParseErrorKind::kMissingSection);
  CHECK(kind_of("circuit v1\ninput x\noutput x\n", parse_circuit) ==
        ParseErrorKind::kMissingSection);
  CHECK(kind_of("circuit v1\ninput x\ninput x\noutput x\nweight 0\n",
                parse_circuit) == ParseErrorKind::kDuplicateName);
  CHECK(kind_of("circuit v1\ninput x\noutput z\nweight 0\n", parse_circuit) ==
        ParseErrorKind::kUnknownIdentifier);
}

TEST_CASE("random sources round-trip through text") {
  Rng rng(8);
  RandomSourceParams p;
  for (int i = 0; i < 100; ++i) {
    const auto g = random_pclique(rng, p);
    REQUIRE(parse_pclique(serialize_pclique(g)) == g);
    const auto lcs = random_lcs(rng, p);
    REQUIRE(parse_lcs(serialize_lcs(lcs)) == lcs);
    const auto c = random_circuit(rng, p);
    REQUIRE(parse_circuit(serialize_circuit(c)) == c);
  }
}

}  // namespace
}  // namespace casemod
