#include <gtest/gtest.h>

#include <regex>

#include "support.hpp"

using namespace orthoclose;
using oracle::fx;

namespace {

Error parse_error(const std::string& text) {
  try {
    parse_poset_documents(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return Error(ErrorCode::kSyntaxError, "");
}

}  // namespace

TEST(Document, ParsesL2Text) {
  const PosetDocument doc = parse_poset(
      "# comment\n\nposet L2\nelements 0 a b c 1\nrel 0 a\nrel 0 b  # trailing\nrel a c\nrel b 1\nrel c 1\n");
  EXPECT_EQ(doc.name, "L2");
  EXPECT_EQ(doc.labels.size(), 5u);
  EXPECT_EQ(doc.relations.size(), 5u);
  EXPECT_EQ(doc.relation_lines.front(), 5u);
  EXPECT_EQ(to_poset(doc), fx("L2"));
}

TEST(Document, SingletonAndSelfRelation) {
  const PosetDocument one = parse_poset("poset one\nelements x\n");
  EXPECT_EQ(to_poset(one).size(), 1u);
  const PosetDocument self = parse_poset("poset s\nelements a b\nrel a a\nrel a b\n");
  const Poset p = to_poset(self);
  EXPECT_TRUE(p.less(0, 1));
}

TEST(Document, Errors) {
  const Error e1 = parse_error("poset p\nelements a b\nrel a z\n");
  EXPECT_EQ(e1.code(), ErrorCode::kUnknownLabel);
  EXPECT_NE(std::string(e1.what()).find("line 3"), std::string::npos);

  const Error e2 = parse_error("poset p\nelements a a\n");
  EXPECT_EQ(e2.code(), ErrorCode::kDuplicateLabel);
  EXPECT_NE(std::string(e2.what()).find("line 2"), std::string::npos);

  const Error e3 = parse_error("poset p\nelements a b\nrelation a b\n");
  EXPECT_EQ(e3.code(), ErrorCode::kSyntaxError);
  EXPECT_NE(std::string(e3.what()).find("line 3"), std::string::npos);

  EXPECT_EQ(parse_error("elements a\n").code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_error("poset p\nrel a b\n").code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_error("poset p\n").code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_error("").code(), ErrorCode::kSyntaxError);
  EXPECT_EQ(parse_error("poset p\nelements a b\nrel a\n").code(), ErrorCode::kSyntaxError);

  try {
    to_poset(parse_poset("poset p\nelements a b c\nrel a b\nrel b c\nrel c a\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
  }
}

TEST(Document, SeveralDocuments) {
  const auto docs = parse_poset_documents("poset a\nelements x\n\nposet b\nelements y z\nrel y z\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[1].name, "b");
  EXPECT_THROW(parse_poset("poset a\nelements x\nposet b\nelements y\n"), Error);
}

TEST(Document, RoundTripOnFixtures) {
  for (const auto& name : standard_fixture_names()) {
    const PosetDocument doc = fixture(name);
    EXPECT_EQ(parse_poset(render(doc)), doc) << name;
    const PosetDocument covers = document_from_poset(to_poset(doc), doc.name);
    EXPECT_EQ(parse_poset(render(covers)), covers) << name;
    EXPECT_EQ(to_poset(covers), to_poset(doc)) << name;
  }
}

TEST(Fixtures, Catalog) {
  const Poset l1 = fx("L1");
  EXPECT_EQ(l1.size(), 9u);
  EXPECT_EQ(atoms(l1), l1.set_of({"a", "b", "d"}));
  EXPECT_EQ(fx("B(0)").size(), 1u);
  EXPECT_EQ(fx("B(3)").size(), 8u);
  EXPECT_EQ(fx("M(4)").size(), 6u);
  EXPECT_EQ(fx("C(1)").size(), 1u);
  const Poset p10 = fx("P10");
  EXPECT_EQ(p10.size(), 10u);
  // Middle layer: four atoms below four coatoms, each coatom above three atoms.
  const ElementSet at = atoms(p10);
  EXPECT_EQ(at.count(), 4u);
  for (const char* c : {"e", "f", "g", "h"}) EXPECT_EQ((p10.down_set(p10.at(c)) & at).count(), 3u);
  EXPECT_TRUE(is_lattice(fx("L1")));
  EXPECT_FALSE(is_lattice(fx("P8")));
}

TEST(Fixtures, UnknownName) {
  for (const char* bad : {"L4", "M(x)", "Q(2)", "C(0)", ""}) {
    try {
      fixture(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnknownFixture) << bad;
    }
  }
}

TEST(Report, JsonIsDeterministic) {
  for (const auto& name : standard_fixture_names()) {
    const PosetDocument doc = fixture(name);
    const std::string a = report_json_text(analyze(to_poset(doc)), doc);
    const std::string b = report_json_text(analyze(to_poset(fixture(name))), fixture(name));
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Report, JsonContents) {
  const PosetDocument doc = fixture("P8");
  const Json j = report_json(analyze(to_poset(doc)), doc);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "tool_version", "input_digest", "name", "elements",
                                            "covers", "flags", "sizes", "atoms", "closed_sets", "star", "skeleton",
                                            "witnesses", "theorems"}));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["star"]["a"], "f");
  EXPECT_EQ(j["star"]["d"], "0");
  EXPECT_EQ(j["sizes"]["closed_sets"], 4);
  EXPECT_EQ(j["closed_sets"][1], (Json{"0", "a", "c"}));
  EXPECT_EQ(j["input_digest"], input_digest(doc));
  EXPECT_TRUE(std::regex_match(j["input_digest"].get<std::string>(), std::regex("fnv1a64:[0-9a-f]{16}")));
  for (const auto& t : j["theorems"]) EXPECT_NE(t["status"], "fail");
}

TEST(Report, DigestDependsOnInput) {
  EXPECT_NE(input_digest(fixture("L2")), input_digest(fixture("L3")));
  EXPECT_EQ(input_digest(fixture("L2")), input_digest(parse_poset(render(fixture("L2")))));
}

TEST(Report, DotEdgesAreCovers) {
  std::vector<Poset> corpus = oracle::random_bounded(50, 8, 10);
  for (const auto& n : standard_fixture_names()) corpus.push_back(fx(n));
  const std::regex edge(R"(n(\d+) -> n(\d+);)");
  for (const Poset& p : corpus) {
    const std::string dot = to_dot(p, "g");
    EXPECT_EQ(dot.rfind("digraph \"g\" {", 0), 0u);
    EXPECT_EQ(dot.back(), '\n');
    std::vector<IndexPair> edges;
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it)
      edges.emplace_back(std::stoul((*it)[1]), std::stoul((*it)[2]));
    EXPECT_EQ(edges, transitive_reduction(p));
  }
}

TEST(Report, DotEscapesQuotes) {
  const Poset p = build_poset({"a\"b"}, {});
  EXPECT_NE(to_dot(p, "q").find("a\\\"b"), std::string::npos);
}
