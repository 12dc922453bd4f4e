// General-coefficient differential: abelian specialization, sl2, sign pins.
#include <doctest.h>

#include "cecoh/ce_general.hpp"
#include "cecoh/cecomplex.hpp"
#include "test_util.hpp"

using namespace cecoh;

namespace {

LieAlgebraData<ComplexMatrix> abelian_pair_algebra(const SymmetryPair& pair) {
  LieAlgebraData<ComplexMatrix> g;
  g.dim_g = 2;
  g.f.assign(8, 0.0);
  g.rep = {pair.anti_h(), pair.anti_s()};
  return g;
}

// defining representation of sl2, basis order (e, h, f)
LieAlgebraData<ComplexMatrix> sl2_defining() {
  LieAlgebraData<ComplexMatrix> g;
  g.dim_g = 3;
  g.f.assign(27, 0.0);
  g.fc(0, 1, 0) = -2;
  g.fc(1, 0, 0) = 2;
  g.fc(0, 2, 1) = 1;
  g.fc(2, 0, 1) = -1;
  g.fc(1, 2, 2) = -2;
  g.fc(2, 1, 2) = 2;
  ComplexMatrix e = ComplexMatrix::Zero(2, 2), h = ComplexMatrix::Zero(2, 2),
                f = ComplexMatrix::Zero(2, 2);
  e(0, 1) = 1;
  h(0, 0) = 1;
  h(1, 1) = -1;
  f(1, 0) = 1;
  g.rep = {e, h, f};
  return g;
}

double total_norm(const GeneralCochain<ComplexMatrix>& c) {
  double s = 0;
  for (const auto& [idx, m] : c.components) s += m.squaredNorm();
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("abelian specialization matches the dedicated differential") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 20; ++t) {
    auto p = testutil::random_pair(rng);
    SymmetryPair pair(p.H, p.S);
    auto g = abelian_pair_algebra(pair);
    const int n = p.dim;

    ComplexMatrix w = testutil::anti_hermitian(n, rng);
    GeneralCochain<ComplexMatrix> c0{0, {{{}, w}}};
    auto dc0 = d_general(c0, g);
    Cochain ref0 = d_abelian(Cochain::degree0(w), pair);
    CHECK((dc0.components.at({0}) - ref0.x_H).norm() < 1e-12);
    CHECK((dc0.components.at({1}) - ref0.y_S).norm() < 1e-12);

    ComplexMatrix x = testutil::anti_hermitian(n, rng);
    ComplexMatrix y = testutil::anti_hermitian(n, rng);
    GeneralCochain<ComplexMatrix> c1{1, {{{0}, x}, {{1}, y}}};
    auto dc1 = d_general(c1, g);
    Cochain ref1 = d_abelian(Cochain::degree1(x, y), pair);
    CHECK((dc1.components.at({0, 1}) - ref1.z).norm() < 1e-12);
  }
}

TEST_CASE("d_general squares to zero on sl2") {
  std::mt19937_64 rng(83);
  auto g = sl2_defining();
  for (int t = 0; t < 20; ++t) {
    GeneralCochain<ComplexMatrix> c0{0, {{{}, testutil::gaussian(2, rng)}}};
    auto dd0 = d_general(d_general(c0, g), g);
    CHECK(total_norm(dd0) < 1e-12 * std::max(1.0, total_norm(c0)));

    GeneralCochain<ComplexMatrix> c1{1,
                                     {{{0}, testutil::gaussian(2, rng)},
                                      {{1}, testutil::gaussian(2, rng)},
                                      {{2}, testutil::gaussian(2, rng)}}};
    auto dd1 = d_general(d_general(c1, g), g);
    CHECK(total_norm(dd1) < 1e-12 * std::max(1.0, total_norm(c1)));
  }
}

TEST_CASE("insertion signs of the ad term") {
  // abelian algebra on three generators: d c over component {1} must carry
  // +[rho_0, m] on {0,1} and -[rho_2, m] on {1,2}
  std::mt19937_64 rng(89);
  LieAlgebraData<ComplexMatrix> g;
  g.dim_g = 3;
  g.f.assign(27, 0.0);
  g.rep = {testutil::gaussian(2, rng), testutil::gaussian(2, rng),
           testutil::gaussian(2, rng)};
  ComplexMatrix m = testutil::gaussian(2, rng);
  GeneralCochain<ComplexMatrix> c{1, {{{1}, m}}};
  auto dc = d_general(c, g);
  CHECK((dc.components.at({0, 1}) - (g.rep[0] * m - m * g.rep[0])).norm() < 1e-13);
  CHECK((dc.components.at({1, 2}) + (g.rep[2] * m - m * g.rep[2])).norm() < 1e-13);
}

TEST_CASE("contraction term matches the bracket on degree 1") {
  // with rho = 0 the differential reduces to the Lie cobracket: for sl2,
  // (d c)({i,j}) = -f_ij^k c_k
  auto g = sl2_defining();
  for (auto& r : g.rep) r = ComplexMatrix::Zero(2, 2);
  std::mt19937_64 rng(97);
  ComplexMatrix ce = testutil::gaussian(2, rng), ch = testutil::gaussian(2, rng),
                cf = testutil::gaussian(2, rng);
  GeneralCochain<ComplexMatrix> c{1, {{{0}, ce}, {{1}, ch}, {{2}, cf}}};
  auto dc = d_general(c, g);
  CHECK((dc.components.at({0, 1}) - 2.0 * ce).norm() < 1e-13);   // -f_01^0 c_e
  CHECK((dc.components.at({0, 2}) + 1.0 * ch).norm() < 1e-13);   // -f_02^1 c_h
  CHECK((dc.components.at({1, 2}) - 2.0 * cf).norm() < 1e-13);   // -f_12^2 c_f
}

TEST_CASE("d_general terminates the complex at the top degree") {
  auto g = sl2_defining();
  std::mt19937_64 rng(83);
  GeneralCochain<ComplexMatrix> top{3, {{{0, 1, 2}, testutil::gaussian(2, rng)}}};
  auto dtop = d_general(top, g);
  CHECK(dtop.degree == 4);
  CHECK(dtop.components.empty());
}

TEST_CASE("d_general validates its input") {
  auto g = sl2_defining();
  GeneralCochain<ComplexMatrix> past{4, {}};
  CHECK_THROWS_AS(d_general(past, g), InputError);  // beyond the top degree

  GeneralCochain<ComplexMatrix> bad{1, {{{0, 0}, ComplexMatrix::Zero(2, 2)}}};
  CHECK_THROWS_AS(d_general(bad, g), InputError);  // tuple size vs degree

  GeneralCochain<ComplexMatrix> dup{2, {{{1, 1}, ComplexMatrix::Zero(2, 2)}}};
  CHECK_THROWS_AS(d_general(dup, g), InputError);

  GeneralCochain<ComplexMatrix> oob{1, {{{7}, ComplexMatrix::Zero(2, 2)}}};
  CHECK_THROWS_AS(d_general(oob, g), InputError);

  LieAlgebraData<ComplexMatrix> huge;
  huge.dim_g = 9;
  huge.f.assign(9 * 9 * 9, 0.0);
  huge.rep.assign(9, ComplexMatrix::Zero(2, 2));
  GeneralCochain<ComplexMatrix> c0{0, {{{}, ComplexMatrix::Zero(2, 2)}}};
  CHECK_THROWS_AS(d_general(c0, huge), InputError);

  LieAlgebraData<ComplexMatrix> skewed = sl2_defining();
  skewed.rep.pop_back();
  CHECK_THROWS_AS(d_general(c0, skewed), InputError);
}
