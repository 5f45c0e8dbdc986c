#include "barysimplex/closed_form.hpp"

#include <random>

#include <gtest/gtest.h>

#include "barysimplex/kkt.hpp"
#include "support/fixtures.hpp"

namespace barysimplex {
namespace {

using testing::unique_case_p;
using testing::unique_case_q;
using testing::tied_case_p;
using testing::tied_case_q;
using testing::mat;
using testing::random_instance;
using testing::vec;

Vector ones(std::size_t n) { return Vector(n, Rational(1)); }

TEST(ClosedForm, UniqueCasePrimal) {
  const auto u = build_optimal_primal(unique_case_p(), unique_case_q());
  EXPECT_EQ(u.matrix(), mat({{"1", "0", "0", "0"},
                             {"0", "1", "0", "0"},
                             {"7/12", "1/12", "1/3", "0"},
                             {"0", "0", "0", "1"}}));
  EXPECT_EQ(trace(u.matrix()), Rational(10, 3));
  EXPECT_EQ(determinant(u.matrix()), Rational(1, 3));
}

TEST(ClosedForm, UniqueCaseInverseAndDual) {
  const auto p = unique_case_p();
  const auto q = unique_case_q();
  const Matrix v = build_inverse(p, q);
  EXPECT_EQ(v, mat({{"1", "0", "0", "0"},
                    {"0", "1", "0", "0"},
                    {"-7/4", "-1/4", "3", "0"},
                    {"0", "0", "0", "1"}}));
  const auto d = build_dual(p, q);
  EXPECT_EQ(d.alpha, vec({"0", "0", "10/3", "0"}));
  EXPECT_EQ(d.beta, vec({"1", "1", "0", "1"}));
  EXPECT_EQ(d.gamma, mat({{"0", "1", "17/12", "1"},
                          {"1", "0", "9/4", "1"},
                          {"0", "0", "0", "0"},
                          {"1", "1", "5/3", "0"}}));
  EXPECT_EQ(d.objective, Rational(10, 3));
}

TEST(ClosedForm, TiedCasePrimal) {
  const auto u = build_optimal_primal(tied_case_p(), tied_case_q());
  EXPECT_EQ(u.matrix(), mat({{"3/4", "5/48", "0", "7/48"},
                             {"0", "1", "0", "0"},
                             {"0", "5/24", "1/2", "7/24"},
                             {"0", "0", "0", "1"}}));
  EXPECT_EQ(build_inverse(tied_case_p(), tied_case_q()),
            mat({{"4/3", "-5/36", "0", "-7/36"},
                 {"0", "1", "0", "0"},
                 {"0", "-5/12", "2", "-7/12"},
                 {"0", "0", "0", "1"}}));
}

TEST(ClosedForm, EqualVectorsGiveIdentity) {
  const auto p = unique_case_p();
  EXPECT_EQ(build_optimal_primal(p, p).matrix(), Matrix::identity(4));
  EXPECT_EQ(build_inverse(p, p), Matrix::identity(4));
  const auto d = build_dual(p, p);
  EXPECT_EQ(d.objective, Rational(4));
  EXPECT_TRUE(uniqueness(p, p).unique);
}

TEST(ClosedForm, SingleIndexIsTrivial) {
  const auto p = StochasticVector::uniform(1);
  EXPECT_EQ(build_optimal_primal(p, p).matrix(), Matrix::identity(1));
  EXPECT_TRUE(classify(p, p).all_pass());
}

TEST(ClosedForm, IndexPartition) {
  const auto part = index_partition(tied_case_p(), tied_case_q());
  EXPECT_EQ(part.greater, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(part.less, (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(part.equal.empty());
  const auto part3 = index_partition(unique_case_p(), unique_case_q());
  EXPECT_EQ(part3.equal, (std::vector<std::size_t>{3}));
  EXPECT_EQ(part3.less, (std::vector<std::size_t>{2}));
}

TEST(ClosedForm, EigenvaluesAreDiagonals) {
  const auto p = unique_case_p();
  const auto q = unique_case_q();
  EXPECT_EQ(eigenvalues(p, q), vec({"1", "1", "1/3", "1"}));
  EXPECT_EQ(eigenvalues(p, q, WhichMatrix::inverse), vec({"1", "1", "3", "1"}));
  EXPECT_TRUE(characteristic_identity_holds(build_optimal_primal(p, q).matrix(), eigenvalues(p, q)));
  EXPECT_FALSE(characteristic_identity_holds(build_optimal_primal(p, q).matrix(), vec({"1", "1", "1", "1"})));
}

TEST(ClosedForm, UniqueCaseClassification) {
  const auto r = classify(unique_case_p(), unique_case_q());
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.max_offdiag_inverse, Rational(0));
  EXPECT_EQ(r.det_inverse, Rational(3));
  EXPECT_EQ(r.min_entry_primal, Rational(0));
}

TEST(ClosedForm, TiedCaseWitness) {
  const auto p = tied_case_p();
  const auto q = tied_case_q();
  const auto report = uniqueness(p, q);
  ASSERT_FALSE(report.unique);
  ASSERT_TRUE(report.witness.has_value());
  const auto& w = *report.witness;
  EXPECT_EQ(w.row_a, 0u);
  EXPECT_EQ(w.row_b, 2u);
  EXPECT_EQ(w.col_a, 1u);
  EXPECT_EQ(w.col_b, 3u);
  EXPECT_EQ(w.step, Rational(7, 24));
  EXPECT_EQ(w.alternate.matrix(), mat({{"3/4", "1/4", "0", "0"},
                                       {"0", "1", "0", "0"},
                                       {"0", "1/9", "1/2", "7/18"},
                                       {"0", "0", "0", "1"}}));
  EXPECT_EQ(trace(w.alternate.matrix()), Rational(13, 4));
  // Direction lies in the null space: zero row sums and zero q-weighted column sums.
  EXPECT_EQ(mat_vec(w.direction, ones(4)), Vector(4));
  EXPECT_EQ(mat_vec(transpose(w.direction), q.entries()), Vector(4));
  EXPECT_EQ(trace(w.direction), Rational(0));
}

// Algebraic identities checked exactly on random instances.
class ClosedFormRandom : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ClosedFormRandom, Invariants) {
  const std::size_t n = GetParam();
  std::mt19937_64 rng(100 + n);
  for (int k = 0; k < 60; ++k) {
    const auto [p, q] = random_instance(n, rng);
    const auto u = build_optimal_primal(p, q);
    const Matrix& um = u.matrix();
    const Matrix v = build_inverse(p, q);
    const Matrix eye = Matrix::identity(n);

    EXPECT_TRUE(is_member(u, p, q));
    EXPECT_EQ(mat_mul(um, v), eye);
    EXPECT_EQ(mat_mul(v, um), eye);
    EXPECT_EQ(mat_vec(v, ones(n)), ones(n));
    // V̄ maps the barycenter back: V̄ᵀp = q.
    EXPECT_EQ(mat_vec(transpose(v), p.entries()), q.vector());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) EXPECT_LE(v(i, j), Rational(0));

    const Vector diag = eigenvalues(p, q);
    EXPECT_EQ(diag, um.diagonal());
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(determinant(um - diag[i] * eye).is_zero());
    }
    EXPECT_TRUE(characteristic_identity_holds(um, diag));
    EXPECT_TRUE(characteristic_identity_holds(v, eigenvalues(p, q, WhichMatrix::inverse)));

    Rational det(1);
    for (const auto& d : diag) det *= d;
    EXPECT_EQ(determinant(um), det);
    EXPECT_EQ(determinant(v) * det, Rational(1));

    EXPECT_TRUE(classify(p, q).all_pass());
    const auto dual = build_dual(p, q);
    EXPECT_EQ(dual.objective, trace(um));
    EXPECT_TRUE(certify(u, dual, p, q).all_pass());
  }
}

TEST_P(ClosedFormRandom, UniquenessWitnessProperties) {
  const std::size_t n = GetParam();
  std::mt19937_64 rng(300 + n);
  for (int k = 0; k < 60; ++k) {
    const auto [p, q] = random_instance(n, rng);
    const auto part = index_partition(p, q);
    const auto report = uniqueness(p, q);
    EXPECT_EQ(report.unique, part.greater.size() <= 1 || part.less.size() <= 1);
    EXPECT_EQ(report.witness.has_value(), !report.unique);
    if (!report.witness) continue;
    const auto& w = *report.witness;
    const Matrix ubar = build_optimal_primal(p, q).matrix();
    EXPECT_GT(w.step, Rational(0));
    EXPECT_TRUE(is_member(w.alternate, p, q));
    EXPECT_NE(w.alternate.matrix(), ubar);
    EXPECT_EQ(trace(w.alternate.matrix()), trace(ubar));
    // Stepping any further leaves the polytope.
    const Matrix beyond = ubar + (w.step + Rational(1, 1000000)) * w.direction;
    EXPECT_FALSE(is_member(beyond, p, q));
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, ClosedFormRandom, ::testing::Values(2, 3, 4, 5, 6, 7));

TEST(ClosedForm, InverseTransposeDoesNotMapQToP) {
  // V̄ᵀq = p fails in general; this instance is a concrete counterexample.
  const Matrix v = build_inverse(unique_case_p(), unique_case_q());
  const Vector vq = mat_vec(transpose(v), unique_case_q().entries());
  EXPECT_EQ(vq, vec({"-2/5", "3/10", "9/10", "1/5"}));
  EXPECT_NE(vq, unique_case_p().vector());
}

}  // namespace
}  // namespace barysimplex
