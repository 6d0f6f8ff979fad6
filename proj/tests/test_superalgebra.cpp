#include "doctest.h"

#include "supersite/superalgebra.hpp"

#include <random>

using namespace supersite;

namespace {

const Field kQ{};

AlgebraPtr poly_line() {  // Q[x | theta]
  return SuperAlgebra::make(kQ, {"x"}, {"theta"}, {});
}

AlgebraPtr two_odds() {  // Q[ | theta1, theta2]
  return SuperAlgebra::make(kQ, {}, {"theta1", "theta2"}, {});
}

AlgebraPtr punctured_line() {  // Q[x, y | ] / (x*y - 1)
  SuperAlgebra tmp(kQ, {"x", "y"}, {}, {});
  return SuperAlgebra::make(kQ, {"x", "y"}, {}, {tmp.parse("x*y - 1")});
}

// uniform random parity-homogeneous polynomial
SuperPolynomial random_homogeneous(const SuperAlgebra& a, std::mt19937& rng, int parity) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(0, 2);
  SuperPolynomial p;
  for (int t = 0; t < 3; ++t) {
    SuperMonomial m;
    m.even.assign(static_cast<std::size_t>(a.num_even()), 0);
    for (auto& e : m.even) e = static_cast<std::uint32_t>(expo(rng));
    std::uint64_t full = a.num_odd() ? (1ull << a.num_odd()) - 1 : 0;
    std::uniform_int_distribution<std::uint64_t> subset(0, full);
    for (int tries = 0; tries < 16; ++tries) {
      m.odd = subset(rng) & full;
      if (m.parity() == parity) break;
    }
    if (m.parity() != parity) continue;
    p.add_term(m, Scalar(a.field(), coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar a(kQ, 1, 3), b(kQ, 1, 6);
  CHECK(a + b == Scalar(kQ, 1, 2));
  CHECK(a * b == Scalar(kQ, 1, 18));
  CHECK((a / b) == Scalar(kQ, 2));
  Field f7{7};
  Scalar x(f7, 3), y(f7, 5);
  CHECK(x * y == Scalar(f7, 1));
  CHECK(x.inverse() == Scalar(f7, 5));
  CHECK_THROWS_AS(Scalar(kQ, 1) + Scalar(f7, 1), FieldMismatch);
}

TEST_CASE("supercommutativity sign rule") {
  auto a = two_odds();
  auto t1 = a->gen("theta1"), t2 = a->gen("theta2");
  // theta1*theta2 + theta2*theta1 = 0
  CHECK(poly_add(poly_mul(t1, t2), poly_mul(t2, t1)).is_zero());
  // theta1*theta1 = 0
  CHECK(poly_mul(t1, t1).is_zero());
  // theta2*theta1 = -theta1*theta2
  CHECK(poly_mul(t2, t1) == poly_neg(poly_mul(t1, t2)));
}

TEST_CASE("even elements are central") {
  auto a = poly_line();
  auto x = a->gen("x"), th = a->gen("theta");
  CHECK(poly_mul(x, th) == poly_mul(th, x));
}

TEST_CASE("single relation rewrite x*y -> 1") {
  auto a = punctured_line();
  auto nf = a->normal_form(a->parse("x*y"));
  CHECK(nf.conclusive);
  CHECK(nf.value == a->one());
  CHECK(a->to_string(nf.value) == "1");
}

TEST_CASE("derived product (x+theta1*theta2)*(x-theta1*theta2) = x^2") {
  auto a = SuperAlgebra::make(kQ, {"x"}, {"theta1", "theta2"}, {});
  auto p = a->parse("(x + theta1*theta2)*(x - theta1*theta2)");
  CHECK(p == a->parse("x^2"));
}

TEST_CASE("ideal membership") {
  auto line = SuperAlgebra::make(kQ, {"x"}, {}, {});
  CHECK(line->ideal_membership(line->parse("x^2"), {line->gen("x")}) == Membership::Member);
  CHECK(line->ideal_membership(line->one(), {line->gen("x")}) == Membership::NotMemberUpTo);
  auto odd2 = two_odds();
  CHECK(odd2->ideal_membership(odd2->parse("theta1*theta2"), {odd2->gen("theta1")}) ==
        Membership::Member);
}

TEST_CASE("check_hom basics") {
  auto a = poly_line();
  SUBCASE("identity passes") {
    CHECK(check_hom(SuperAlgebraHom::identity(a)).ok);
  }
  SUBCASE("into localization passes") {
    auto [loc, canon] = localize(a, a->gen("x"));
    CHECK(check_hom(canon).ok);
  }
  SUBCASE("parity violation") {
    auto target = SuperAlgebra::make(kQ, {}, {"theta"}, {});
    SuperAlgebraHom h(a, target, {target->gen("theta")}, {target->gen("theta")});
    auto rep = check_hom(h);
    CHECK_FALSE(rep.ok);
    CHECK(rep.error.find("ParityViolation") == 0);
  }
  SUBCASE("relation not preserved") {
    auto src = SuperAlgebra::make(kQ, {"x"}, {}, {[&] {
                                    SuperAlgebra tmp(kQ, {"x"}, {}, {});
                                    return tmp.parse("x^2");
                                  }()});
    auto dst = SuperAlgebra::make(kQ, {"y"}, {}, {});
    SuperAlgebraHom h(src, dst, {dst->gen("y")}, {});
    auto rep = check_hom(h);
    CHECK_FALSE(rep.ok);
    CHECK(rep.error.find("RelationNotPreserved") == 0);
  }
}

TEST_CASE("localization presentations") {
  auto a = SuperAlgebra::make(kQ, {"x"}, {}, {});
  SUBCASE("localize at x") {
    auto [loc, canon] = localize(a, a->gen("x"));
    CHECK(loc->even_names() == std::vector<std::string>{"x", "t"});
    CHECK(loc->normal_form(loc->parse("x*t")).value == loc->one());
  }
  SUBCASE("localize at 1 gives redundant generator equal to 1") {
    auto [loc, canon] = localize(a, a->one());
    CHECK(loc->normal_form(loc->parse("t - 1")).value.is_zero());
  }
  SUBCASE("localizing the odd line keeps theta") {
    auto b = poly_line();
    auto [loc, canon] = localize(b, b->gen("x"));
    CHECK(loc->num_odd() == 1);
    CHECK(check_hom(canon).ok);
  }
  SUBCASE("zero denominator rejected") {
    auto sq = SuperAlgebra::make(kQ, {"x"}, {}, {[&] {
                                   SuperAlgebra tmp(kQ, {"x"}, {}, {});
                                   return tmp.parse("x^2");
                                 }()});
    CHECK_THROWS_AS(localize(sq, sq->parse("x^2")), AlgebraError);
  }
}

TEST_CASE("locality certification") {
  SUBCASE("exterior algebra is local") {
    auto cert = two_odds()->certify_local();
    CHECK(cert.certified);
    CHECK(cert.has_residues);
  }
  SUBCASE("Q[x]/(x^2) is local via nilpotent detection") {
    auto a = SuperAlgebra::make(kQ, {"x"}, {}, {[&] {
                                  SuperAlgebra tmp(kQ, {"x"}, {}, {});
                                  return tmp.parse("x^2");
                                }()});
    CHECK(a->certify_local().certified);
    // residue of 3 + 5x is 3
    CHECK(a->residue(a->parse("3 + 5*x")) == Scalar(kQ, 3));
  }
  SUBCASE("localized line is not certified") {
    CHECK_FALSE(punctured_line()->certify_local().certified);
  }
  SUBCASE("polynomial line is not certified") {
    auto a = SuperAlgebra::make(kQ, {"x"}, {}, {});
    CHECK_FALSE(a->certify_local().certified);
  }
  SUBCASE("zero algebra is not local") {
    CHECK_FALSE(SuperAlgebra::zero(kQ)->certify_local().certified);
  }
}

TEST_CASE("normal form is idempotent and equality is conclusive at small degree") {
  auto a = punctured_line();
  auto p = a->parse("x^2*y + x - y");
  auto nf1 = a->normal_form(p);
  auto nf2 = a->normal_form(nf1.value);
  CHECK(nf1.value == nf2.value);
  CHECK(a->equal(a->parse("x*y*x"), a->gen("x")) == SuperAlgebra::Eq::Equal);
}

TEST_CASE("degree cap produces inconclusive answers, never wrong ones") {
  SuperAlgebra tmp(kQ, {"x"}, {}, {});
  auto a = SuperAlgebra::make(kQ, {"x"}, {}, {tmp.parse("x^3")}, 4);
  // x^6 has degree > cap but reduces to zero anyway: positive certificate
  CHECK(a->normal_form(a->parse("x^6")).value.is_zero());
  CHECK(a->ideal_membership(a->parse("x^6"), {}) == Membership::Member);
  // a degree-6 element that does not reduce is inconclusive under cap 4
  auto b = SuperAlgebra::make(kQ, {"x", "y"}, {}, {}, 4);
  CHECK(b->ideal_membership(b->parse("x^3*y^3 + 1"), {b->parse("y")}) ==
        Membership::Inconclusive);
}

TEST_CASE("randomized algebra laws") {
  std::mt19937 rng(20260810);
  auto a = SuperAlgebra::make(kQ, {"x", "y"}, {"s", "t"}, {});
  for (int iter = 0; iter < 300; ++iter) {
    int pa = iter % 2, pb = (iter / 2) % 2, pc = (iter / 4) % 2;
    auto p = random_homogeneous(*a, rng, pa);
    auto q = random_homogeneous(*a, rng, pb);
    auto r = random_homogeneous(*a, rng, pc);
    // sign rule
    SuperPolynomial pq = poly_mul(p, q);
    SuperPolynomial qp = poly_mul(q, p);
    if (pa == 1 && pb == 1)
      CHECK(poly_add(pq, qp).is_zero());
    else
      CHECK(poly_sub(pq, qp).is_zero());
    // associativity and distributivity
    CHECK(poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r)));
    CHECK(poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r)));
  }
}

TEST_CASE("hom composition preserves validity") {
  auto a = poly_line();
  auto [loc, canon] = localize(a, a->gen("x"));
  auto [loc2, canon2] = localize(loc, loc->gen("x"));
  auto comp = SuperAlgebraHom::compose(canon2, canon);
  CHECK(check_hom(comp).ok);
}

TEST_CASE("basis monomials respect the quotient") {
  auto a = punctured_line();
  // normal forms are spanned by x^i and y^j: degree <= 2 gives 1, x, y, x^2, y^2
  auto basis = a->basis_monomials(2);
  CHECK(basis.size() == 5);
  auto e = two_odds();
  CHECK(e->basis_monomials(2).size() == 4);  // 1, theta1, theta2, theta1*theta2
}

TEST_CASE("prime field algebras") {
  Field f5{5};
  auto a = SuperAlgebra::make(f5, {"x"}, {}, {[&] {
                                SuperAlgebra tmp(f5, {"x"}, {}, {});
                                return tmp.parse("x^2 - 2");
                              }()});
  auto nf = a->normal_form(a->parse("x^4"));
  CHECK(nf.value == a->constant(Scalar(f5, 4)));
}
