#include <gtest/gtest.h>

#include <random>

#include "lconvex/error.hpp"
#include "lconvex/polyomino.hpp"
#include "lconvex/projection.hpp"
#include "support.hpp"

namespace lconvex {
namespace {

using testing::skew_b;
using testing::five_rectangles;
using testing::skew_a;
using testing::from_pairs;

std::vector<std::string> sizes(const std::vector<MaximalRectangle>& rects) {
  std::vector<std::string> out;
  for (const auto& r : rects) out.push_back(std::to_string(r.width) + "x" + std::to_string(r.height));
  return out;
}

// Straight from the definition: some path with one bend joins a and b.
bool l_path_brute(const Polyomino& p, Cell a, Cell b) {
  auto row_run = [&](int y, int x0, int x1) {
    for (int x = std::min(x0, x1); x <= std::max(x0, x1); ++x)
      if (!p.contains(x, y)) return false;
    return true;
  };
  auto col_run = [&](int x, int y0, int y1) {
    for (int y = std::min(y0, y1); y <= std::max(y0, y1); ++y)
      if (!p.contains(x, y)) return false;
    return true;
  };
  return (row_run(a.y, a.x, b.x) && col_run(b.x, a.y, b.y)) || (col_run(a.x, a.y, b.y) && row_run(b.y, a.x, b.x));
}

bool l_convex_brute(const Polyomino& p) {
  for (Cell a : p.cells())
    for (Cell b : p.cells())
      if (!l_path_brute(p, a, b)) return false;
  return true;
}

TEST(Polyomino, NormalizesAndRejectsBadInput) {
  const Polyomino p = from_pairs({{3, 5}, {4, 5}});
  EXPECT_EQ(p.width(), 2);
  EXPECT_EQ(p.height(), 1);
  EXPECT_TRUE(p.contains(0, 0));
  EXPECT_TRUE(p.is_rectangle());

  try {
    from_pairs({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
  try {
    from_pairs({{0, 0}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
  }
}

TEST(Polyomino, KeyIsStable) {
  EXPECT_EQ(key(Polyomino::rectangle(2, 1)), key(from_pairs({{7, 2}, {8, 2}})));
  EXPECT_NE(key(Polyomino::rectangle(2, 1)), key(Polyomino::rectangle(1, 2)));
}

TEST(Convexity, FiveRectanglesIsLConvex) {
  const Polyomino p = five_rectangles();
  EXPECT_TRUE(is_convex(p));
  EXPECT_TRUE(is_l_convex(p));
  EXPECT_EQ(p.width(), 7);
  EXPECT_EQ(p.height(), 10);
}

TEST(Convexity, CrossIsLConvexButStaircaseIsNot) {
  EXPECT_TRUE(is_l_convex(from_pairs({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}})));
  const Polyomino stairs = from_pairs({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
  EXPECT_TRUE(is_convex(stairs));
  EXPECT_FALSE(is_l_convex(stairs));
  const Polyomino u = from_pairs({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}});
  EXPECT_TRUE(is_row_convex(Polyomino::rectangle(3, 1)));
  EXPECT_FALSE(is_row_convex(u));
  EXPECT_TRUE(is_column_convex(u));
}

TEST(Convexity, AgreesWithPathDefinitionOnRandomShapes) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const Polyomino p = from_pairs(testing::random_cells(rng, 5, 5, 0.75));
    EXPECT_EQ(is_l_convex(p), l_convex_brute(p)) << key(p);
  }
}

TEST(MaximalRectangles, FiveRectangleSizes) {
  EXPECT_EQ(sizes(maximal_rectangles(five_rectangles())),
            (std::vector<std::string>{"1x10", "2x7", "3x6", "4x5", "7x2"}));
}

TEST(MaximalRectangles, RectangleIsItsOwnMaximalRectangle) {
  const auto rects = maximal_rectangles(Polyomino::rectangle(3, 2));
  ASSERT_EQ(rects.size(), 1U);
  EXPECT_EQ(rects[0].width, 3);
  EXPECT_EQ(rects[0].height, 2);
}

TEST(MaximalRectangles, RejectsNonLConvex) {
  try {
    maximal_rectangles(from_pairs({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLConvex);
  }
}

TEST(Transpose, IsAnInvolution) {
  const Polyomino p = five_rectangles();
  EXPECT_EQ(transpose(transpose(p)), p);
  EXPECT_EQ(transpose(p).width(), p.height());
  const auto pp = projections(p);
  const auto pt = projections(transpose(p));
  EXPECT_EQ(pt.horizontal.size(), pp.vertical.size());
}

TEST(Projection, SkewA) {
  const ProjectionPair pp = projections(skew_a());
  EXPECT_EQ(pp.horizontal, (std::vector<int>{2, 2, 3, 5, 2}));
  EXPECT_EQ(pp.vertical, (std::vector<int>{1, 2, 5, 5, 1}));
  EXPECT_TRUE(is_unimodal(pp.horizontal));
  EXPECT_TRUE(is_unimodal(pp.vertical));
  EXPECT_FALSE(is_ferrer(skew_a()));
}

TEST(Projection, Unimodality) {
  EXPECT_TRUE(is_unimodal(std::vector<int>{1, 3, 3, 2}));
  EXPECT_TRUE(is_unimodal(std::vector<int>{}));
  EXPECT_FALSE(is_unimodal(std::vector<int>{2, 1, 2}));
}

TEST(FerrerProjection, SkewAAndB) {
  const ProjectionPair a = projections(ferrer_project(skew_a()));
  EXPECT_EQ(a.horizontal, (std::vector<int>{5, 3, 2, 2, 2}));
  EXPECT_EQ(a.vertical, (std::vector<int>{5, 5, 2, 1, 1}));

  const Polyomino star = ferrer_project(skew_b());
  EXPECT_TRUE(is_ferrer(star));
  EXPECT_EQ(projections(star).horizontal, (std::vector<int>{5, 3, 2, 2, 1}));
  EXPECT_EQ(projections(star).vertical, (std::vector<int>{5, 4, 2, 1, 1}));
}

TEST(FerrerProjection, IsIdempotentAndSortsProjections) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polyomino p = testing::random_l_convex(rng, 6, 6);
    const Polyomino star = ferrer_project(p);
    EXPECT_EQ(ferrer_project(star), star);
    auto h = projections(p).horizontal;
    std::sort(h.begin(), h.end(), std::greater<>());
    EXPECT_EQ(projections(star).horizontal, h);
    EXPECT_EQ(star.cell_count(), p.cell_count());
  }
}

TEST(Reconstruct, RoundTripsRandomLConvex) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Polyomino p = testing::random_l_convex(rng, 6, 6);
    EXPECT_EQ(reconstruct_l_convex(projections(p)), p) << key(p);
  }
}

TEST(Reconstruct, ReportsMissingRealization) {
  try {
    testing::from_projections({2}, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoRealization);
  }
  try {
    testing::from_projections({1, 1}, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoRealization);
  }
}

}  // namespace
}  // namespace lconvex
