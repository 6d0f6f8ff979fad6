// Finitely presented supercommutative algebras over Q or F_p with exact
// normal forms. Odd generators anticommute and square to zero at the monomial
// level; quotient relations are completed Buchberger-style up to a total
// degree cap, beyond which answers degrade to "inconclusive" rather than
// being wrong.

#pragma once

#include "supersite/scalar.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supersite {

inline constexpr int kDefaultDegreeCap = 8;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x^e * theta_S with S a subset of the odd generators (bitmask).
struct SuperMonomial {
  std::vector<std::uint32_t> even;
  std::uint64_t odd = 0;

  int degree() const {
    int d = std::popcount(odd);
    for (auto e : even) d += static_cast<int>(e);
    return d;
  }
  int parity() const { return std::popcount(odd) & 1; }
  bool is_unit() const {
    if (odd != 0) return false;
    for (auto e : even)
      if (e != 0) return false;
    return true;
  }
  bool operator==(const SuperMonomial&) const = default;
};

// Degree-lexicographic order (largest first): total degree, then even
// exponents in declaration order, then the odd subset (earlier generators
// weigh more).
struct MonGreater {
  bool operator()(const SuperMonomial& a, const SuperMonomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    std::size_t n = std::max(a.even.size(), b.even.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t ea = i < a.even.size() ? a.even[i] : 0;
      std::uint32_t eb = i < b.even.size() ? b.even[i] : 0;
      if (ea != eb) return ea > eb;
    }
    for (int j = 0; j < 64; ++j) {
      bool ba = (a.odd >> j) & 1, bb = (b.odd >> j) & 1;
      if (ba != bb) return ba;
    }
    return false;
  }
};

// Product with Koszul sign; empty when the odd parts collide (theta^2 = 0).
std::optional<std::pair<SuperMonomial, int>> mono_mul(const SuperMonomial& a,
                                                      const SuperMonomial& b);
bool mono_divides(const SuperMonomial& m, const SuperMonomial& n);

class SuperPolynomial {
public:
  using Terms = std::map<SuperMonomial, Scalar, MonGreater>;

  SuperPolynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  // leading term under the monomial order
  const SuperMonomial& lead_mono() const { return terms_.begin()->first; }
  const Scalar& lead_coeff() const { return terms_.begin()->second; }

  // -1: zero, 0: even, 1: odd, 2: mixed
  int parity() const;

  void add_term(const SuperMonomial& m, const Scalar& c);
  bool operator==(const SuperPolynomial& o) const { return terms_ == o.terms_; }

private:
  Terms terms_;
};

SuperPolynomial poly_add(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial poly_neg(const SuperPolynomial& a);
SuperPolynomial poly_sub(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial poly_scale(const Scalar& c, const SuperPolynomial& a);
SuperPolynomial poly_mul(const SuperPolynomial& a, const SuperPolynomial& b);
// parity-homogeneous parts (even, odd)
std::pair<SuperPolynomial, SuperPolynomial> poly_parity_split(const SuperPolynomial& a);

enum class Membership { Member, NotMemberUpTo, Inconclusive };

struct NormalFormResult {
  SuperPolynomial value;
  bool conclusive = true;  // false when the degree cap may hide further reduction
};

class SuperAlgebra;
using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

struct LocalityCertificate {
  bool certified = false;
  std::string reason;
  // residues of the even generators in the certified quotient (pattern (a))
  std::vector<Scalar> even_residues;
  bool has_residues = false;
};

class SuperAlgebra : public std::enable_shared_from_this<SuperAlgebra> {
public:
  SuperAlgebra(Field f, std::vector<std::string> even_names, std::vector<std::string> odd_names,
               std::vector<SuperPolynomial> relations, int degree_cap = kDefaultDegreeCap,
               bool locality_certificate = false);

  static AlgebraPtr make(Field f, std::vector<std::string> even_names,
                         std::vector<std::string> odd_names,
                         std::vector<SuperPolynomial> relations,
                         int degree_cap = kDefaultDegreeCap, bool locality_certificate = false) {
    return std::make_shared<SuperAlgebra>(f, std::move(even_names), std::move(odd_names),
                                          std::move(relations), degree_cap, locality_certificate);
  }
  // the terminal algebra, 1 = 0
  static AlgebraPtr zero(Field f, int degree_cap = kDefaultDegreeCap);

  const Field& field() const { return field_; }
  const std::vector<std::string>& even_names() const { return even_names_; }
  const std::vector<std::string>& odd_names() const { return odd_names_; }
  int num_even() const { return static_cast<int>(even_names_.size()); }
  int num_odd() const { return static_cast<int>(odd_names_.size()); }
  int num_generators() const { return num_even() + num_odd(); }
  const std::vector<SuperPolynomial>& relations() const { return relations_; }
  const std::vector<SuperPolynomial>& completed_relations() const { return completed_; }
  int degree_cap() const { return degree_cap_; }
  bool completion_hit_cap() const { return hit_cap_; }
  bool is_zero_algebra() const;
  bool flagged_local() const { return locality_flag_; }

  // generator name: (is_odd, index); empty if unknown
  std::optional<std::pair<bool, int>> find_generator(const std::string& name) const;
  std::string generator_name(bool is_odd, int index) const {
    return is_odd ? odd_names_[static_cast<std::size_t>(index)]
                  : even_names_[static_cast<std::size_t>(index)];
  }

  SuperPolynomial zero_poly() const { return SuperPolynomial(); }
  SuperPolynomial one() const { return constant(Scalar::one(field_)); }
  SuperPolynomial constant(const Scalar& c) const;
  SuperPolynomial gen(const std::string& name) const;
  SuperPolynomial gen(bool is_odd, int index) const;
  // polynomial expressions: "x^2*theta - 1/2*y"
  SuperPolynomial parse(const std::string& text) const;
  std::string to_string(const SuperPolynomial& p) const;

  NormalFormResult normal_form(const SuperPolynomial& p) const;
  // equality in the quotient, certified up to the degree cap
  enum class Eq { Equal, NotEqual, Inconclusive };
  Eq equal(const SuperPolynomial& a, const SuperPolynomial& b) const;

  Membership ideal_membership(const SuperPolynomial& p,
                              const std::vector<SuperPolynomial>& ideal_gens) const;

  const LocalityCertificate& certify_local() const;
  // scalar value of p in the certified residue field, if available
  std::optional<Scalar> residue(const SuperPolynomial& p) const;

  // normal-form basis monomials of total degree <= d
  std::vector<SuperMonomial> basis_monomials(int d) const;

  bool same_presentation(const SuperAlgebra& o) const;

private:
  void validate_relations() const;
  void complete();

  Field field_;
  std::vector<std::string> even_names_, odd_names_;
  std::vector<SuperPolynomial> relations_;
  std::vector<SuperPolynomial> completed_;
  int degree_cap_;
  bool hit_cap_ = false;
  bool locality_flag_ = false;

  mutable std::optional<LocalityCertificate> locality_;
};

// source-generator images in the target algebra
class SuperAlgebraHom {
public:
  SuperAlgebraHom() = default;
  SuperAlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<SuperPolynomial> even_images,
                  std::vector<SuperPolynomial> odd_images);

  static SuperAlgebraHom identity(const AlgebraPtr& a);
  // compose: (g . f)(x) = g(f(x)); f.source -> g.target, requires f.target == g.source
  static SuperAlgebraHom compose(const SuperAlgebraHom& g, const SuperAlgebraHom& f);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const SuperPolynomial& image(bool is_odd, int index) const;
  const std::vector<SuperPolynomial>& even_images() const { return even_images_; }
  const std::vector<SuperPolynomial>& odd_images() const { return odd_images_; }

  // substitute and normal-form in the target
  SuperPolynomial apply(const SuperPolynomial& p) const;

  bool same_map(const SuperAlgebraHom& o) const;  // equal generator images (normal forms)

private:
  AlgebraPtr source_, target_;
  std::vector<SuperPolynomial> even_images_, odd_images_;
};

struct HomReport {
  bool ok = false;
  bool conclusive = true;
  std::string error;  // ParityViolation / RelationNotPreserved(...) / ...
};

HomReport check_hom(const SuperAlgebraHom& h);

// A -> A_s = A[t]/(s t - 1); s must be even with nonzero normal form.
std::pair<AlgebraPtr, SuperAlgebraHom> localize(const AlgebraPtr& a, const SuperPolynomial& s);

}  // namespace supersite
