#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include <toric/polygon.hpp>
#include <toric/rational.hpp>

#include "generators.hpp"

using namespace toric;

namespace {

std::vector<Vec2q> quad(long long ax, long long ay, long long bx, long long by, long long cx,
                        long long cy, long long dx, long long dy) {
  return {Vec2q(Rational(ax), Rational(ay)), Vec2q(Rational(bx), Rational(by)),
          Vec2q(Rational(cx), Rational(cy)), Vec2q(Rational(dx), Rational(dy))};
}

DelzantPolygon<Rational> unit_square() {
  return polygon_from_vertices(quad(0, 0, 1, 0, 1, 1, 0, 1));
}

DelzantPolygon<Rational> unit_simplex() {
  return polygon_from_vertices(
      {Vec2q(Rational(0), Rational(0)), Vec2q(Rational(1), Rational(0)),
       Vec2q(Rational(0), Rational(1))});
}

// Monte-Carlo-free numeric oracle: midpoint rule on a fine grid, restricted
// to points inside the polygon. Good to a few digits, enough to catch a
// wrong exact formula.
double grid_moment(const DelzantPolygon<Rational>& p, int dx, int dy, int n) {
  double lo_x = 1e9, hi_x = -1e9, lo_y = 1e9, hi_y = -1e9;
  for (const auto& v : p.vertices()) {
    lo_x = std::min(lo_x, v.x().to_double());
    hi_x = std::max(hi_x, v.x().to_double());
    lo_y = std::min(lo_y, v.y().to_double());
    hi_y = std::max(hi_y, v.y().to_double());
  }
  const double hx = (hi_x - lo_x) / n, hy = (hi_y - lo_y) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = lo_x + (i + 0.5) * hx;
      const double y = lo_y + (j + 0.5) * hy;
      bool inside = true;
      for (std::size_t e = 0; e < p.size(); ++e) {
        const auto& a = p.vertex(e);
        const auto nrm = p.edge(e).normal;
        const double level = static_cast<double>(nrm.x()) * (x - a.x().to_double()) +
                             static_cast<double>(nrm.y()) * (y - a.y().to_double());
        if (level < 0.0) {
          inside = false;
          break;
        }
      }
      if (inside) sum += std::pow(x, dx) * std::pow(y, dy);
    }
  }
  return sum * hx * hy;
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);

  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(1) / Rational(7)).str() == "1/7");
  CHECK(Rational(-4, 8).str() == "-1/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(abs(Rational(-3, 7)) == Rational(3, 7));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-2).sign() == -1);
}

TEST_CASE("unit square construction and canonical form") {
  const auto p = unit_square();
  CHECK(p.size() == 4);
  CHECK(p.area() == Rational(1));
  CHECK(p.lattice_perimeter() == Rational(4));
  CHECK(p.vertex(0).x() == Rational(0));
  CHECK(p.vertex(0).y() == Rational(0));
  // counterclockwise from the lexicographically least vertex
  CHECK(p.vertex(1).x() == Rational(1));
  CHECK(p.vertex(1).y() == Rational(0));
  CHECK(p.edge(0).direction == Vec2l(1, 0));
  CHECK(p.edge(0).normal == Vec2l(0, 1));
  CHECK(p.edge(3).direction == Vec2l(0, -1));
  CHECK(p.edge(3).normal == Vec2l(1, 0));
  for (std::size_t i = 0; i < 4; ++i) CHECK(p.edge(i).length == Rational(1));
}

TEST_CASE("canonicalization is input-order independent") {
  const auto a = polygon_from_vertices(quad(0, 0, 1, 0, 1, 1, 0, 1));
  const auto b = polygon_from_vertices(quad(1, 1, 1, 0, 0, 0, 0, 1));  // clockwise, rotated
  CHECK(a == b);
}

TEST_CASE("long edges get lattice lengths, not euclidean ones") {
  // [0,3]^2: each side has primitive direction and lattice length 3.
  const auto p = polygon_from_vertices(quad(0, 0, 3, 0, 3, 3, 0, 3));
  CHECK(p.area() == Rational(9));
  CHECK(p.lattice_perimeter() == Rational(12));
  CHECK(p.edge(0).direction == Vec2l(1, 0));
  CHECK(p.edge(0).length == Rational(3));

  // hypotenuse of the dilated simplex: direction (-1,1), length 3
  const auto s = polygon_from_vertices(
      {Vec2q(Rational(0), Rational(0)), Vec2q(Rational(3), Rational(0)),
       Vec2q(Rational(0), Rational(3))});
  CHECK(s.lattice_perimeter() == Rational(9));
  CHECK(s.edge(1).direction == Vec2l(-1, 1));
  CHECK(s.edge(1).length == Rational(3));
}

TEST_CASE("rational vertices are allowed when slopes stay primitive") {
  const auto p = polygon_from_vertices(quad(0, 0, 1, 0, 1, 1, 0, 1));
  const auto q = scale_polygon(p, Rational(1, 3));
  CHECK(q.area() == Rational(1, 9));
  CHECK(q.lattice_perimeter() == Rational(4, 3));
  CHECK(q.edge(2).length == Rational(1, 3));
}

TEST_CASE("validation rejects bad inputs with the right kinds") {
  using V = DelzantViolation;

  auto kind_of = [](std::vector<Vec2q> pts) -> std::optional<V> {
    try {
      polygon_from_vertices(std::move(pts));
    } catch (const DelzantError& e) {
      return e.kind();
    }
    return std::nullopt;
  };

  CHECK(kind_of({Vec2q(Rational(0), Rational(0)), Vec2q(Rational(1), Rational(0))}) ==
        V::TooFewVertices);
  CHECK(kind_of({Vec2q(Rational(0), Rational(0)), Vec2q(Rational(0), Rational(0)),
                 Vec2q(Rational(1), Rational(1))}) == V::DegenerateEdge);
  CHECK(kind_of({Vec2q(Rational(0), Rational(0)), Vec2q(Rational(1), Rational(0)),
                 Vec2q(Rational(2), Rational(0))}) == V::NotConvex);
  // collinear middle vertex on a genuine polygon
  CHECK(kind_of({Vec2q(Rational(0), Rational(0)), Vec2q(Rational(1), Rational(0)),
                 Vec2q(Rational(2), Rational(0)), Vec2q(Rational(0), Rational(1))}) ==
        V::NotConvex);
  // reflex quadrilateral
  CHECK(kind_of(quad(0, 0, 2, 0, 1, 1, 2, 2)) == V::NotConvex);
  // right triangle with legs 2 and 1: determinant 2 corner
  CHECK(kind_of({Vec2q(Rational(0), Rational(0)), Vec2q(Rational(2), Rational(0)),
                 Vec2q(Rational(0), Rational(1))}) == V::NotDelzant);

  try {
    polygon_from_vertices({Vec2q(Rational(0), Rational(0)), Vec2q(Rational(2), Rational(0)),
                           Vec2q(Rational(0), Rational(1))});
    CHECK(false);
  } catch (const DelzantError& e) {
    CHECK(e.kind() == V::NotDelzant);
    CHECK(e.determinant() == 2);
  }

  // non-primitive slope: (0,0) -> (1/2, 1/2) has no primitive integer direction
  CHECK_THROWS_AS(polygon_from_vertices({Vec2q(Rational(0), Rational(0)),
                                         Vec2q(Rational(1, 2), Rational(1, 2)),
                                         Vec2q(Rational(0), Rational(1))}),
                  DelzantError);
}

TEST_CASE("delzant_violations reports all problems without throwing") {
  const auto none = delzant_violations(quad(0, 0, 1, 0, 1, 1, 0, 1));
  CHECK(none.empty());

  const auto bad = delzant_violations({Vec2q(Rational(0), Rational(0)),
                                       Vec2q(Rational(2), Rational(0)),
                                       Vec2q(Rational(0), Rational(1))});
  REQUIRE(!bad.empty());
  bool mentions_det = false;
  for (const auto& m : bad)
    if (m.find("determinant") != std::string::npos) mentions_det = true;
  CHECK(mentions_det);
}

TEST_CASE("unimodular maps and translations preserve the polygon data") {
  const auto p = unit_square();

  UnimodularAffine shear;
  shear.linear << 1, 1, 0, 1;
  const auto q = apply_unimodular_affine(p, shear);
  CHECK(q.area() == p.area());
  CHECK(q.lattice_perimeter() == p.lattice_perimeter());

  const auto r = translate_polygon(p, Vec2q(Rational(5, 3), Rational(-7, 2)));
  CHECK(r.area() == Rational(1));
  CHECK(r.vertex(0).x() == Rational(5, 3));

  UnimodularAffine flip;
  flip.linear << 1, 0, 0, -1;  // determinant -1, orientation flip is recanonicalized
  const auto s = apply_unimodular_affine(p, flip);
  CHECK(s.area() == Rational(1));

  UnimodularAffine bad;
  bad.linear << 2, 0, 0, 1;
  CHECK_THROWS_AS(apply_unimodular_affine(p, bad), std::invalid_argument);
  CHECK_THROWS_AS(scale_polygon(p, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(scale_polygon(p, Rational(-2)), std::invalid_argument);
}

TEST_CASE("interior moments on the unit square") {
  const auto p = unit_square();
  // integral of x^a y^b over [0,1]^2 is 1/((a+1)(b+1))
  CHECK(monomial_moment(p, 0, 0) == Rational(1));
  CHECK(monomial_moment(p, 1, 0) == Rational(1, 2));
  CHECK(monomial_moment(p, 0, 1) == Rational(1, 2));
  CHECK(monomial_moment(p, 2, 0) == Rational(1, 3));
  CHECK(monomial_moment(p, 1, 1) == Rational(1, 4));
  CHECK(monomial_moment(p, 2, 2) == Rational(1, 9));
  CHECK(monomial_moment(p, 4, 0) == Rational(1, 5));
  CHECK_THROWS_AS(monomial_moment(p, 3, 2), UnsupportedDegree);
  CHECK_THROWS_AS(monomial_moment(p, -1, 0), UnsupportedDegree);
}

TEST_CASE("interior moments on the unit simplex") {
  const auto p = unit_simplex();
  // integral over {x,y >= 0, x+y <= 1} of x^a y^b is a! b! / (a+b+2)!
  CHECK(monomial_moment(p, 0, 0) == Rational(1, 2));
  CHECK(monomial_moment(p, 1, 0) == Rational(1, 6));
  CHECK(monomial_moment(p, 2, 0) == Rational(1, 12));
  CHECK(monomial_moment(p, 1, 1) == Rational(1, 24));
  CHECK(monomial_moment(p, 2, 2) == Rational(1, 180));
}

TEST_CASE("boundary moments on the unit square") {
  const auto p = unit_square();
  CHECK(boundary_moment(p, 0, 0) == Rational(4));
  CHECK(boundary_moment(p, 1, 0) == Rational(2));
  CHECK(boundary_moment(p, 0, 1) == Rational(2));
  CHECK(boundary_moment(p, 2, 0) == Rational(5, 3));
  CHECK(boundary_moment(p, 1, 1) == Rational(1));
  CHECK_THROWS_AS(boundary_moment(p, 5, 0), UnsupportedDegree);
}

TEST_CASE("moments agree with a blunt numeric oracle") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = toric::testing::random_fan_polygon(rng);
    for (auto [dx, dy] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{2, 1}}) {
      const double exact = monomial_moment(p, dx, dy).to_double();
      const double approx = grid_moment(p, dx, dy, 700);
      CHECK(exact == doctest::Approx(approx).epsilon(0.02));
    }
  }
}

TEST_CASE("moment additivity under triangulation-independent identities") {
  // Green-type consistency: d/dt of nothing to check directly, but moments
  // must be translation-covariant. integral (x+c)^1 = M10 + c * M00.
  std::mt19937 rng(7);
  const auto p = toric::testing::random_fan_polygon(rng);
  const Rational c(3, 7);
  const auto q = translate_polygon(p, Vec2q(c, Rational(0)));
  CHECK(monomial_moment(q, 1, 0) == monomial_moment(p, 1, 0) + c * monomial_moment(p, 0, 0));
  CHECK(monomial_moment(q, 2, 0) ==
        monomial_moment(p, 2, 0) + Rational(2) * c * monomial_moment(p, 1, 0) +
            c * c * monomial_moment(p, 0, 0));
  CHECK(boundary_moment(q, 1, 0) == boundary_moment(p, 1, 0) + c * boundary_moment(p, 0, 0));
}
