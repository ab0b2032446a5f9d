#include <gtest/gtest.h>

#include <random>

#include "ecindex/canonical.hpp"
#include "ecindex/error.hpp"
#include "ecindex/families.hpp"
#include "ecindex/indices.hpp"
#include "oracles.hpp"

namespace ecindex {
namespace {

std::uint64_t value(EciValue v) { return v.value; }

TEST(EciTest, Examples) {
  EXPECT_EQ(value(eci(make_path(2))), 2u);
  EXPECT_EQ(value(eci(make_path(4))), 14u);
  EXPECT_EQ(value(eci(make_cycle(4))), 16u);
  EXPECT_EQ(value(eci(make_volcano(19, 7))), 173u);
}

TEST(EciTest, DegenerateAndDisconnected) {
  EXPECT_THROW(eci(Graph(1)), DomainError);
  EXPECT_THROW(eci(Graph(3, {{0, 1}})), DomainError);
}

TEST(EciTest, MatchesDistanceMatrixOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 10;
    const Graph g = testing::random_graph(n, 0.35, rng);
    if (!is_connected(g)) continue;
    EXPECT_EQ(value(eci(g)), testing::eci_by_matrix(g));
  }
}

TEST(EciTest, RelabelingInvariance) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(9, 0.3, rng);
    if (!is_connected(g)) continue;
    const EciValue base = eci(g);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(eci(relabel(g, testing::random_permutation(9, rng))), base);
  }
}

TEST(PathClosedFormTest, Examples) {
  EXPECT_EQ(value(eci_path_closed_form(2)), 2u);
  EXPECT_EQ(value(eci_path_closed_form(5)), 24u);
  EXPECT_EQ(value(eci_path_closed_form(8)), 74u);
  EXPECT_EQ(value(eci_path_closed_form(9)), 96u);
  EXPECT_THROW(eci_path_closed_form(1), InputError);
}

TEST(PathClosedFormTest, AgreesWithConstructionUpTo200) {
  for (int n = 2; n <= 200; ++n) {
    EXPECT_EQ(eci_path_closed_form(n), eci(make_path(n))) << "n=" << n;
  }
  for (int n = 2; n <= 30; ++n) {
    EXPECT_EQ(value(eci_path_closed_form(n)), testing::eci_by_matrix(make_path(n)));
  }
}

TEST(VolcanoClosedFormTest, WorkedExampleValues) {
  EXPECT_EQ(value(eci_volcano_closed_form(16, 7)), 146u);
  EXPECT_EQ(value(eci_volcano_closed_form(17, 7)), 155u);
  EXPECT_EQ(value(eci_volcano_closed_form(18, 7)), 164u);
  EXPECT_EQ(value(eci_volcano_closed_form(19, 7)), 173u);
}

TEST(VolcanoClosedFormTest, Examples) {
  EXPECT_EQ(value(eci_volcano_closed_form(7, 6)), 54u);
  EXPECT_EQ(eci_volcano_closed_form(7, 6), eci_path_closed_form(7));
  EXPECT_EQ(value(eci_volcano_closed_form(8, 4)), 39u);
  EXPECT_EQ(value(eci(make_volcano(8, 4))), 39u);
  EXPECT_THROW(eci_volcano_closed_form(3, 3), InputError);
  EXPECT_THROW(eci_volcano_closed_form(5, 1), InputError);
}

TEST(VolcanoClosedFormTest, AgreesWithEveryConstruction) {
  for (int d = 2; d <= 25; ++d) {
    for (int n = d + 1; n <= d + 50; ++n) {
      const EciValue closed = eci_volcano_closed_form(n, d);
      EXPECT_EQ(eci(make_volcano(n, d)), closed) << "n=" << n << " d=" << d;
      if (d % 2 == 1 && d <= 9 && n <= d + 6) {
        for (const auto& split : volcano_splits(n, d)) {
          EXPECT_EQ(eci(make_volcano(n, d, split)), closed);
        }
      }
    }
  }
}

TEST(VolcanoClosedFormTest, IncrementPerPendant) {
  for (int d = 2; d <= 40; ++d) {
    for (int n = d + 1; n <= d + 30; ++n) {
      const auto step = static_cast<std::int64_t>(value(eci_volcano_closed_form(n + 1, d))) -
                        static_cast<std::int64_t>(value(eci_volcano_closed_form(n, d)));
      EXPECT_EQ(step, d % 2 == 0 ? d + 1 : d + 2);
      EXPECT_EQ(step, volcano_increment(d));
    }
  }
}

TEST(FamiliesTest, PathAndVolcanoExamples) {
  EXPECT_EQ(make_path(2).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(profile(make_path(4)).diameter, 3);
  EXPECT_THROW(make_path(1), InputError);

  EXPECT_EQ(value(eci(make_volcano(5, 2))), 12u);
  EXPECT_EQ(canonical_form(make_volcano(5, 2)), canonical_form(make_star(5)));
  for (const auto& split : volcano_splits(16, 7)) {
    EXPECT_EQ(value(eci(make_volcano(16, 7, split))), 146u);
  }
  for (int d = 2; d <= 12; ++d) EXPECT_EQ(make_volcano(d + 1, d), make_path(d + 1));

  const Graph a = make_volcano(7, 3, VolcanoSplit{3, 0});
  const Graph b = make_volcano(7, 3, VolcanoSplit{2, 1});
  EXPECT_NE(canonical_form(a), canonical_form(b));
  EXPECT_EQ(eci(a), eci(b));
}

TEST(FamiliesTest, VolcanoRejectsBadParameters) {
  EXPECT_THROW(make_volcano(5, 1), InputError);
  EXPECT_THROW(make_volcano(4, 4), InputError);
  EXPECT_THROW(make_volcano(8, 4, VolcanoSplit{2, 1}), InputError);
  EXPECT_NO_THROW(make_volcano(8, 4, VolcanoSplit{3, 0}));
  EXPECT_THROW(make_volcano(8, 3, VolcanoSplit{3, 2}), InputError);
  EXPECT_THROW(make_volcano(8, 3, VolcanoSplit{-1, 5}), InputError);
}

TEST(FamiliesTest, BroomExamples) {
  const Graph b54 = make_broom(5, 4);
  EXPECT_EQ(profile(b54).diameter, 4);
  EXPECT_EQ(canonical_form(b54), canonical_form(make_path(5)));

  const Graph b63 = make_broom(6, 3);
  EXPECT_EQ(value(eci(b63)), testing::eci_by_matrix(b63));
  EXPECT_EQ(value(eci_volcano_closed_form(6, 3)), 24u);
  EXPECT_GE(eci(b63), eci_volcano_closed_form(6, 3));

  EXPECT_THROW(make_broom(4, 4), InputError);
  EXPECT_THROW(make_broom(5, 2), InputError);
}

TEST(FamiliesTest, LollipopExamples) {
  EXPECT_EQ(profile(make_lollipop(5, 2)).diameter, 2);
  const Graph l64 = make_lollipop(6, 4);
  EXPECT_EQ(profile(l64).diameter, 4);
  EXPECT_GE(eci(l64), eci_volcano_closed_form(6, 4));
  for (int n = 3; n <= 12; ++n) {
    for (int d = 2; d < n; ++d) {
      const int k = n - d;
      EXPECT_EQ(make_lollipop(n, d).size(),
                static_cast<std::size_t>(d - 1 + k * (k - 1) / 2 + k));
    }
  }
  EXPECT_THROW(make_lollipop(3, 3), InputError);
}

TEST(FamiliesTest, StarCycleAndDispatch) {
  EXPECT_EQ(make_star(4).degree(0), 3);
  EXPECT_EQ(make_cycle(5).size(), 5u);
  EXPECT_THROW(make_cycle(2), InputError);
  EXPECT_EQ(parse_family("lollipop"), Family::kLollipop);
  EXPECT_THROW(parse_family("spider"), InputError);
  EXPECT_EQ(make_family({Family::kVolcano, 7, 3, VolcanoSplit{2, 1}}),
            make_volcano(7, 3, VolcanoSplit{2, 1}));
  EXPECT_THROW(make_family({Family::kPath, 5, 0, VolcanoSplit{1, 1}}), InputError);
}

TEST(FamiliesPropertyTest, AdvertisedDiameters) {
  for (int n = 3; n <= 16; ++n) {
    for (int d = 2; d < n; ++d) {
      for (const auto& split : volcano_splits(n, d)) {
        const Graph v = make_volcano(n, d, split);
        EXPECT_EQ(profile(v).diameter, d);
        EXPECT_TRUE(is_tree(v));
        EXPECT_TRUE(is_caterpillar(v));
      }
      EXPECT_EQ(profile(make_lollipop(n, d)).diameter, d);
      if (d >= 3) {
        EXPECT_EQ(profile(make_broom(n, d)).diameter, d);
      }
    }
  }
}

TEST(FamiliesPropertyTest, VolcanoIndexIndependentOfSplit) {
  for (int d = 2; d <= 9; ++d) {
    for (int n = d + 1; n <= d + 6; ++n) {
      const EciValue first = eci(make_volcano(n, d));
      for (const auto& split : volcano_splits(n, d)) EXPECT_EQ(eci(make_volcano(n, d, split)), first);
    }
  }
}

TEST(FamiliesPropertyTest, BroomAndLollipopRespectTheBound) {
  for (int n = 4; n <= 30; ++n) {
    for (int d = 2; d < n; ++d) {
      const EciValue bound = eci_volcano_closed_form(n, d);
      EXPECT_GE(eci(make_lollipop(n, d)), bound) << "n=" << n << " d=" << d;
      if (d >= 3) {
        EXPECT_GE(eci(make_broom(n, d)), bound) << "n=" << n << " d=" << d;
      }
    }
  }
}

}  // namespace
}  // namespace ecindex
