#include <gtest/gtest.h>

#include <algorithm>

#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"
#include "hamsq/io.hpp"
#include "support.hpp"

namespace hamsq {
namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::kConstructionDefect;
}

TEST(NaturalOrder, Examples) {
  EXPECT_TRUE(natural_less("v2", "v10"));
  EXPECT_FALSE(natural_less("v10", "v2"));
  EXPECT_TRUE(natural_less("a", "b"));
  EXPECT_TRUE(natural_less("p1", "p1_1"));
  EXPECT_TRUE(natural_less("x7", "x007"));
  EXPECT_FALSE(natural_less("x007", "x7"));
  EXPECT_FALSE(natural_less("v3", "v3"));
  std::vector<std::string> ls{"v10", "v9", "v1", "c", "v100", "l2_1"};
  std::sort(ls.begin(), ls.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  EXPECT_EQ(ls, (std::vector<std::string>{"c", "l2_1", "v1", "v9", "v10", "v100"}));
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const LabeledGraph g = parse_edge_list("# leading comment\n\ngraph tri 3 3\na b\n  # indented\nb c\nc a\n");
  EXPECT_EQ(g.name, "tri");
  EXPECT_EQ(g.labels, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.graph, testing::complete(3));
}

TEST(EdgeList, RoundTrip) {
  testing::Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = random_connected(rng(), 2 + static_cast<int>(testing::pick(rng, 30)));
    const std::string text = write_edge_list(g);
    const LabeledGraph back = parse_edge_list(text);
    ASSERT_EQ(back.graph, g.graph);
    ASSERT_EQ(back.labels, g.labels);
    ASSERT_EQ(write_edge_list(back), text);
  }
}

TEST(EdgeList, Malformed) {
  EXPECT_EQ(parse_error(""), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("a b\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("graph g 2\na b\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("graph g two 1\na b\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("graph g 2 1\na b c\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("graph g 1 1\na a\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("graph g 2 2\na b\nb a\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("graph g 2 2\na b\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("graph g 3 1\na b\n"), ErrorCode::kMalformedInput);
  try {
    parse_edge_list("graph g 2 1\n\na b c\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(LabeledGraph, LookupErrors) {
  const LabeledGraph f = figure1();
  EXPECT_EQ(f.label(f.vertex("v7")), "v7");
  EXPECT_FALSE(f.find("v11").has_value());
  try {
    f.vertex("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVertexNotFound);
  }
}

TEST(Certificate, JsonRoundTrip) {
  const LabeledGraph f = figure1();
  for (Mode m : {Mode::kConstructive, Mode::kOracle}) {
    const Certificate c = decide_and_construct(f.graph, m);
    const std::string text = certificate_to_json(f, c);
    const Certificate back = certificate_from_json(f, text);
    EXPECT_EQ(back.decision, c.decision);
    EXPECT_EQ(back.cycle, c.cycle);
    EXPECT_EQ(back.trace, c.trace);
    EXPECT_EQ(back.preconditions.in_class, c.preconditions.in_class);
    EXPECT_EQ(certificate_to_json(f, back), text);
  }
  const LabeledGraph claw = label_by_id(testing::claw_subdivided(), "claw");
  const Certificate nc = decide_and_construct(claw.graph, Mode::kConstructive);
  const std::string text = certificate_to_json(claw, nc);
  EXPECT_NE(text.find("\"decision\""), std::string::npos);
  EXPECT_LT(text.find("\"decision\""), text.find("\"evidence\""));
  const Certificate back = certificate_from_json(claw, text);
  EXPECT_EQ(back.witness_vertex, nc.witness_vertex);
  EXPECT_EQ(back.evidence, nc.evidence);
}

TEST(Certificate, OutOfClassRoundTrip) {
  const LabeledGraph g = label_by_id(Graph::from_pairs({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}), "spiked");
  const Certificate c = decide_and_construct(g.graph, Mode::kConstructive);
  const Certificate back = certificate_from_json(g, certificate_to_json(g, c));
  EXPECT_EQ(back.decision, Decision::kOutOfClass);
  EXPECT_EQ(back.preconditions.violated_condition, 1);
  EXPECT_EQ(back.preconditions.witness, c.preconditions.witness);
}

TEST(Certificate, MalformedJson) {
  const LabeledGraph f = figure1();
  for (std::string_view bad : {"", "{", "[]", R"({"decision":"maybe"})", R"({"decision":"hamiltonian","cycle":[1]})",
                               R"({"decision":"hamiltonian","cycle":["v1","zz"]})"}) {
    try {
      certificate_from_json(f, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kMalformedInput || e.code() == ErrorCode::kVertexNotFound) << bad;
    }
  }
}

TEST(Dot, Styles) {
  const LabeledGraph p = label_by_id(testing::path_graph(3), "p");
  const std::string plain = to_dot(p);
  EXPECT_NE(plain.find("graph"), std::string::npos);
  EXPECT_EQ(plain.find("dashed"), std::string::npos);
  EXPECT_NE(to_dot(p, DotOptions{true, nullptr}).find("dashed"), std::string::npos);
  const HamCycle c = *find_ham_cycle(p.graph);
  const std::string withc = to_dot(p, DotOptions{false, &c});
  EXPECT_NE(withc.find("color=red"), std::string::npos);
  EXPECT_NE(withc.find("dashed"), std::string::npos);
}

TEST(Generators, FigureOne) {
  const LabeledGraph f = generate("figure1");
  EXPECT_EQ(f.graph.order(), 10u);
  EXPECT_EQ(f.graph.size(), 12u);
  EXPECT_EQ(f.labels.front(), "v1");
  EXPECT_EQ(f.labels.back(), "v10");
}

TEST(Generators, FigureTwo) {
  const LabeledGraph f = generate("figure2:2,3,4,2,5");
  EXPECT_EQ(f.graph.order(), 7u + 1 + 2 + 3 + 1 + 4);
  EXPECT_EQ(f.graph.size(), 10u + 1 + 3 + 6 + 1 + 10);
  for (const char* bad : {"figure2:1,2,2,2,2", "figure2:2,2,2,2", "figure2:2,2,2,2,21", "figure2:a,2,2,2,2",
                          "figure1:3", "nosuch", "random:1", "random:-1,5", "random:1,0", "block-path:1",
                          "block-path:3-x"}) {
    try {
      generate(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadParams) << bad;
    }
  }
}

TEST(Generators, BlockPathAndStar) {
  EXPECT_TRUE(is_isomorphic_small(generate("block-path:2-2-2").graph, testing::path_graph(4)));
  const LabeledGraph mixed = generate("block-path:3-4+-2");
  const BlockDecomposition bd = decompose(mixed.graph);
  EXPECT_EQ(bd.block_count(), 3u);
  EXPECT_EQ(mixed.graph.size(), 3u + 6 + 1);
  EXPECT_EQ(is_subdivided_star(bd).shape, BlockGraphShape::kPath);

  const LabeledGraph star = generate("star-cut:2-2/2-2/2-2");
  EXPECT_TRUE(is_isomorphic_small(star.graph, testing::claw_subdivided()));
  EXPECT_EQ(t_count(star.graph, star.vertex("c")), 3u);
}

TEST(Generators, RandomIsDeterministicAndConnected) {
  EXPECT_EQ(write_edge_list(generate("random:7,20")), write_edge_list(generate("random:seed=7,n=20")));
  EXPECT_NE(write_edge_list(generate("random:7,20")), write_edge_list(generate("random:8,20")));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const LabeledGraph g = random_connected(s, 1 + static_cast<int>(s % 40));
    ASSERT_TRUE(g.graph.order() == 1 || is_connected(g.graph));
    ASSERT_EQ(g.graph.order(), 1 + s % 40);
  }
}

TEST(Catalog, Counts) {
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(connected_graphs(n).size(), connected[n - 1]) << n;
  const std::size_t blocks[] = {1, 3, 10, 56, 468, 7123};
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(biconnected_graphs(n).size(), blocks[n - 3]) << n;
}

TEST(Catalog, NoDuplicatesAndAllConnected) {
  for (int n = 2; n <= 6; ++n) {
    const auto& gs = connected_graphs(n);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      ASSERT_TRUE(is_connected(gs[i]));
      for (std::size_t j = i + 1; j < gs.size(); ++j) ASSERT_FALSE(is_isomorphic_small(gs[i], gs[j]));
    }
  }
}

}  // namespace
}  // namespace hamsq
