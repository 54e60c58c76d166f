#include "qseries/matrix.hpp"

#include <gtest/gtest.h>

#include "qseries/errors.hpp"
#include "qseries/valuation.hpp"

namespace qseries {
namespace {

Integer p3(unsigned long e) { return ipow(3, static_cast<Exponent>(e)); }

// First nine rows, first seven columns, transcribed from their factored forms.
std::vector<std::vector<Integer>> printed_rows() {
  return {
      {3, 0, 0, 0, 0, 0, 0},
      {2, p3(3), 0, 0, 0, 0, 0},
      {1, p3(3), p3(5), 0, 0, 0, 0},
      {0, 2 * p3(2), 4 * p3(4), p3(7), 0, 0, 0},
      {0, 5, 2 * p3(3) * 5, p3(6) * 5, p3(9), 0, 0},
      {0, 1, 2 * p3(2) * 7, p3(6) * 5, 2 * p3(9), p3(11), 0},
      {0, 0, 2 * 3 * 7, 4 * p3(4) * 7, p3(8) * 7, p3(10) * 7, p3(13)},
      {0, 0, 8, 2 * p3(3) * 19, 16 * p3(7), 4 * p3(9) * 7, 8 * p3(12)},
      {0, 0, 1, 4 * p3(4), p3(9), p3(9) * 25, 4 * p3(13)},
  };
}

TEST(Matrix, PrintedRows) {
  const MatrixTable m = build_matrix(9);
  const auto printed = printed_rows();
  for (std::size_t i = 1; i <= 9; ++i) {
    for (std::size_t j = 1; j <= 7; ++j) {
      EXPECT_EQ(m.entry(i, j), printed[i - 1][j - 1]) << "m_" << i << "," << j;
    }
  }
  EXPECT_EQ(m.entry(4, 4), 2187);
  EXPECT_EQ(m.entry(6, 3), 126);
  EXPECT_EQ(m.entry(9, 6), 492075);
}

TEST(Matrix, RowsByValue) {
  const MatrixTable m = build_matrix(6);
  auto row = [&](std::size_t i) {
    auto r = m.row(i);
    return std::vector<Integer>(r.begin(), r.end());
  };
  EXPECT_EQ(row(4), (std::vector<Integer>{0, 18, 324, 2187}));
  EXPECT_EQ(row(6), (std::vector<Integer>{0, 1, 126, 3645, 39366, 177147}));
  EXPECT_EQ(m.entry(6, 7), 0);
}

TEST(Matrix, Errors) {
  EXPECT_THROW(build_matrix(0), std::invalid_argument);
  const MatrixTable m = build_matrix(3);
  EXPECT_THROW(m.entry(4, 1), InsufficientRows);
  EXPECT_THROW(m.row(5), InsufficientRows);
  EXPECT_THROW(submatrix(m, SubmatrixKind::C, 1), InsufficientRows);
  EXPECT_NO_THROW(submatrix(m, SubmatrixKind::B, 1));
}

// Independent recurrence on a dense table, with no zero-pattern checks.
TEST(Matrix, StreamMatchesDenseRecurrence) {
  const std::size_t D = 60;
  std::vector<std::vector<Integer>> dense(D + 1, std::vector<Integer>(D + 2));
  dense[1][1] = 3;
  dense[2][1] = 2;
  dense[2][2] = 27;
  dense[3][1] = 1;
  dense[3][2] = 27;
  dense[3][3] = 243;
  for (std::size_t i = 4; i <= D; ++i) {
    for (std::size_t j = 2; j <= i; ++j) {
      dense[i][j] = 9 * dense[i - 1][j - 1] + 3 * dense[i - 2][j - 1] + dense[i - 3][j - 1];
    }
  }
  MatrixRowStream stream;
  for (std::size_t i = 1; i <= D; ++i) {
    auto row = stream.next();
    ASSERT_EQ(stream.index(), i);
    ASSERT_EQ(row.size(), i);
    for (std::size_t j = 1; j <= i; ++j) ASSERT_EQ(row[j - 1], dense[i][j]) << i << "," << j;
  }
}

TEST(Matrix, ZeroPatterns) {
  const MatrixTable m = build_matrix(200);
  for (std::size_t i = 1; 4 * i <= 200; ++i) {
    for (std::size_t j = 1; j + 1 <= i; ++j) {
      ASSERT_EQ(m.entry(4 * i - 3, j), 0);
      ASSERT_EQ(m.entry(4 * i - 1, j), 0);
    }
    for (std::size_t j = 1; j <= i; ++j) ASSERT_EQ(m.entry(4 * i, j), 0);
  }
  EXPECT_EQ(asserted_zero_prefix(1), 0u);
  EXPECT_EQ(asserted_zero_prefix(5), 1u);
  EXPECT_EQ(asserted_zero_prefix(7), 1u);
  EXPECT_EQ(asserted_zero_prefix(8), 2u);
  EXPECT_EQ(asserted_zero_prefix(6), 0u);
}

TEST(Matrix, ValuationBound) {
  const MatrixTable m = build_matrix(40);
  for (std::size_t i = 1; i <= 40; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      const long bound = 3 * static_cast<long>(j) - static_cast<long>(i) - 1;
      ASSERT_TRUE(valuation(m.entry(i, j)).at_least(bound)) << i << "," << j;
    }
  }
}

TEST(Submatrix, Indexing) {
  EXPECT_EQ(SubmatrixIndex::source_row(SubmatrixKind::A, 2), 5u);
  EXPECT_EQ(SubmatrixIndex::source_row(SubmatrixKind::B, 2), 7u);
  EXPECT_EQ(SubmatrixIndex::source_row(SubmatrixKind::C, 2), 8u);
  EXPECT_EQ(SubmatrixIndex::source_column(SubmatrixKind::A, 2, 1), 2u);
  EXPECT_EQ(SubmatrixIndex::source_column(SubmatrixKind::C, 2, 1), 3u);
  EXPECT_EQ(SubmatrixIndex::width(SubmatrixKind::A, 2), 4u);
  EXPECT_EQ(SubmatrixIndex::width(SubmatrixKind::B, 2), 6u);
  EXPECT_EQ(kind_letter(SubmatrixKind::C), 'C');
}

TEST(Submatrix, FirstRows) {
  const MatrixTable m = build_matrix(8);
  EXPECT_EQ(submatrix(m, SubmatrixKind::A).row(1), (std::vector<Integer>{3}));
  EXPECT_EQ(submatrix(m, SubmatrixKind::B).row(1), (std::vector<Integer>{1, 27, 243}));
  EXPECT_EQ(submatrix(m, SubmatrixKind::C).row(1), (std::vector<Integer>{18, 324, 2187}));
  EXPECT_EQ(submatrix(m, SubmatrixKind::A).row(2), (std::vector<Integer>{5, 270, 3645, 19683}));
  EXPECT_EQ(submatrix(m, SubmatrixKind::C, 2).rows(), 2u);
}

TEST(Submatrix, ValuationBounds) {
  const MatrixTable m = build_matrix(160);
  struct Case {
    SubmatrixKind kind;
    long slack;
  };
  for (auto [kind, slack] : {Case{SubmatrixKind::A, 1}, Case{SubmatrixKind::B, 3}, Case{SubmatrixKind::C, 1}}) {
    const SubmatrixView v = submatrix(m, kind);
    ASSERT_GE(v.rows(), 40u);
    for (std::size_t i = 1; i <= 40; ++i) {
      for (std::size_t j = 1; j <= v.width(i); ++j) {
        const long bound = 3 * static_cast<long>(j) - static_cast<long>(i) - slack;
        ASSERT_TRUE(valuation(v.entry(i, j)).at_least(bound)) << kind_letter(kind) << i << "," << j;
      }
    }
  }
}

TEST(HuffExpansion, FirstTwelveRows) {
  const MatrixTable m = build_matrix(12);
  for (std::size_t i = 1; i <= 12; ++i) EXPECT_TRUE(verify_huff_expansion(m, i, 60)) << i;
}

TEST(HuffExpansion, NeedsTheRow) {
  const MatrixTable m = build_matrix(3);
  EXPECT_THROW(verify_huff_expansion(m, 4, 30), InsufficientRows);
}

TEST(RearrangedIdentity, AllKinds) {
  const MatrixTable m = build_matrix(12);
  EtaCache cache;
  for (auto kind : {SubmatrixKind::A, SubmatrixKind::B, SubmatrixKind::C}) {
    for (std::size_t i = 1; i <= 3; ++i) {
      EXPECT_TRUE(verify_rearranged_identity(m, kind, i, 50, &cache)) << kind_letter(kind) << i;
    }
  }
}

}  // namespace
}  // namespace qseries
