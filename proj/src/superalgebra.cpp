#include "supersite/superalgebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace supersite {

std::optional<std::pair<SuperMonomial, int>> mono_mul(const SuperMonomial& a,
                                                      const SuperMonomial& b) {
  if (a.odd & b.odd) return std::nullopt;
  SuperMonomial r;
  r.even.resize(std::max(a.even.size(), b.even.size()), 0);
  for (std::size_t i = 0; i < r.even.size(); ++i) {
    if (i < a.even.size()) r.even[i] += a.even[i];
    if (i < b.even.size()) r.even[i] += b.even[i];
  }
  r.odd = a.odd | b.odd;
  // Koszul sign: one transposition for each pair i in a, j in b with i > j
  int inversions = 0;
  std::uint64_t bo = b.odd;
  while (bo) {
    int j = std::countr_zero(bo);
    bo &= bo - 1;
    inversions += std::popcount(a.odd >> (j + 1));
  }
  return std::make_pair(std::move(r), (inversions & 1) ? -1 : 1);
}

bool mono_divides(const SuperMonomial& m, const SuperMonomial& n) {
  if (m.odd & ~n.odd) return false;
  for (std::size_t i = 0; i < m.even.size(); ++i) {
    std::uint32_t ne = i < n.even.size() ? n.even[i] : 0;
    if (m.even[i] > ne) return false;
  }
  return true;
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

int SuperPolynomial::parity() const {
  if (terms_.empty()) return -1;
  int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return 2;
  return p;
}

SuperPolynomial poly_add(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

SuperPolynomial poly_neg(const SuperPolynomial& a) {
  SuperPolynomial r;
  for (const auto& [m, c] : a.terms()) r.add_term(m, -c);
  return r;
}

SuperPolynomial poly_sub(const SuperPolynomial& a, const SuperPolynomial& b) {
  return poly_add(a, poly_neg(b));
}

SuperPolynomial poly_scale(const Scalar& c, const SuperPolynomial& a) {
  SuperPolynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : a.terms()) r.add_term(m, c * k);
  return r;
}

SuperPolynomial poly_mul(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto prod = mono_mul(ma, mb);
      if (!prod) continue;
      Scalar c = ca * cb;
      if (prod->second < 0) c = -c;
      r.add_term(prod->first, c);
    }
  }
  return r;
}

std::pair<SuperPolynomial, SuperPolynomial> poly_parity_split(const SuperPolynomial& a) {
  SuperPolynomial ev, od;
  for (const auto& [m, c] : a.terms()) (m.parity() ? od : ev).add_term(m, c);
  return {std::move(ev), std::move(od)};
}

namespace {

// p := p - c * (q * g), where q is a monomial with sign handled by the caller
SuperPolynomial mono_times_poly(const SuperMonomial& q, const SuperPolynomial& g) {
  SuperPolynomial r;
  for (const auto& [m, c] : g.terms()) {
    auto prod = mono_mul(q, m);
    if (!prod) continue;
    r.add_term(prod->first, prod->second < 0 ? -c : c);
  }
  return r;
}

// Full tail reduction against `basis`; every monomial of the result is
// irreducible. Never increases the total degree (the order is degree
// compatible).
SuperPolynomial reduce_full(SuperPolynomial p, const std::vector<SuperPolynomial>& basis) {
  SuperPolynomial result;
  while (!p.is_zero()) {
    const SuperMonomial& lm = p.lead_mono();
    const SuperPolynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && mono_divides(g.lead_mono(), lm)) {
        reducer = &g;
        break;
      }
    }
    if (!reducer) {
      result.add_term(lm, p.lead_coeff());
      SuperPolynomial rest;
      bool first = true;
      for (const auto& [m, c] : p.terms()) {
        if (first) {
          first = false;
          continue;
        }
        rest.add_term(m, c);
      }
      p = std::move(rest);
      continue;
    }
    SuperMonomial q;
    q.even.resize(lm.even.size(), 0);
    const SuperMonomial& gm = reducer->lead_mono();
    for (std::size_t i = 0; i < lm.even.size(); ++i)
      q.even[i] = lm.even[i] - (i < gm.even.size() ? gm.even[i] : 0);
    q.odd = lm.odd & ~gm.odd;
    auto prod = mono_mul(q, gm);
    Scalar denom = reducer->lead_coeff();
    if (prod->second < 0) denom = -denom;
    Scalar factor = p.lead_coeff() / denom;
    p = poly_sub(p, poly_scale(factor, mono_times_poly(q, *reducer)));
  }
  return result;
}

SuperPolynomial make_monic(const SuperPolynomial& p) {
  if (p.is_zero()) return p;
  return poly_scale(p.lead_coeff().inverse(), p);
}

}  // namespace

SuperAlgebra::SuperAlgebra(Field f, std::vector<std::string> even_names,
                           std::vector<std::string> odd_names,
                           std::vector<SuperPolynomial> relations, int degree_cap,
                           bool locality_certificate)
    : field_(f),
      even_names_(std::move(even_names)),
      odd_names_(std::move(odd_names)),
      relations_(std::move(relations)),
      degree_cap_(degree_cap),
      locality_flag_(locality_certificate) {
  if (odd_names_.size() > 64) throw AlgebraError("at most 64 odd generators supported");
  validate_relations();
  complete();
}

AlgebraPtr SuperAlgebra::zero(Field f, int degree_cap) {
  SuperPolynomial unit;
  SuperMonomial one_m;
  unit.add_term(one_m, Scalar::one(f));
  return make(f, {}, {}, {unit}, degree_cap);
}

bool SuperAlgebra::is_zero_algebra() const {
  for (const auto& g : completed_)
    if (!g.is_zero() && g.lead_mono().is_unit()) return true;
  return false;
}

void SuperAlgebra::validate_relations() const {
  for (const auto& r : relations_) {
    if (r.parity() == 2)
      throw AlgebraError("relation is not parity-homogeneous: " + to_string(r));
    for (const auto& [m, c] : r.terms()) {
      if (m.even.size() > even_names_.size())
        throw AlgebraError("relation uses unknown even generator");
      if (num_odd() < 64 && (m.odd >> num_odd()) != 0)
        throw AlgebraError("relation uses unknown odd generator");
      if (c.field() != field_) throw FieldMismatch();
    }
  }
}

void SuperAlgebra::complete() {
  std::vector<SuperPolynomial> basis;
  std::deque<SuperPolynomial> work(relations_.begin(), relations_.end());

  auto enqueue_pairs = [&](const SuperPolynomial& f) {
    // annihilator multiples: theta_j * f for theta_j in the odd support of lead(f)
    std::uint64_t oo = f.lead_mono().odd;
    while (oo) {
      int j = std::countr_zero(oo);
      oo &= oo - 1;
      if (f.degree() + 1 > degree_cap_) {
        hit_cap_ = true;
        continue;
      }
      SuperMonomial theta;
      theta.even.assign(even_names_.size(), 0);
      theta.odd = 1ull << j;
      work.push_back(mono_times_poly(theta, f));
    }
    // S-polynomials with every current basis element
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const SuperMonomial& mf = f.lead_mono();
      const SuperMonomial& mg = g.lead_mono();
      SuperMonomial lcm;
      lcm.even.resize(std::max(mf.even.size(), mg.even.size()), 0);
      for (std::size_t i = 0; i < lcm.even.size(); ++i)
        lcm.even[i] = std::max(i < mf.even.size() ? mf.even[i] : 0u,
                               i < mg.even.size() ? mg.even[i] : 0u);
      lcm.odd = mf.odd | mg.odd;
      if (lcm.degree() > degree_cap_) {
        hit_cap_ = true;
        continue;
      }
      auto quot = [&](const SuperMonomial& m) {
        SuperMonomial q;
        q.even.resize(lcm.even.size(), 0);
        for (std::size_t i = 0; i < lcm.even.size(); ++i)
          q.even[i] = lcm.even[i] - (i < m.even.size() ? m.even[i] : 0);
        q.odd = lcm.odd & ~m.odd;
        return q;
      };
      SuperMonomial uf = quot(mf), ug = quot(mg);
      auto pf = mono_mul(uf, mf), pg = mono_mul(ug, mg);
      Scalar cf = f.lead_coeff(), cg = g.lead_coeff();
      if (pf->second < 0) cf = -cf;
      if (pg->second < 0) cg = -cg;
      work.push_back(poly_sub(poly_scale(cf.inverse(), mono_times_poly(uf, f)),
                              poly_scale(cg.inverse(), mono_times_poly(ug, g))));
    }
  };

  while (!work.empty()) {
    SuperPolynomial cand = reduce_full(std::move(work.front()), basis);
    work.pop_front();
    if (cand.is_zero()) continue;
    cand = make_monic(cand);
    if (cand.lead_mono().is_unit()) {
      // 1 is in the ideal: the zero algebra
      basis.clear();
      basis.push_back(cand);
      break;
    }
    enqueue_pairs(cand);
    basis.push_back(std::move(cand));
  }

  // interreduce for a canonical completed set
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      SuperPolynomial g = basis[i];
      std::vector<SuperPolynomial> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      SuperPolynomial red = reduce_full(g, others);
      if (!(red == g)) {
        changed = true;
        basis[i] = make_monic(red);
      }
    }
    std::erase_if(basis, [](const SuperPolynomial& p) { return p.is_zero(); });
  }
  std::sort(basis.begin(), basis.end(), [](const SuperPolynomial& a, const SuperPolynomial& b) {
    return MonGreater()(b.lead_mono(), a.lead_mono());
  });
  completed_ = std::move(basis);
}

std::optional<std::pair<bool, int>> SuperAlgebra::find_generator(const std::string& name) const {
  for (std::size_t i = 0; i < even_names_.size(); ++i)
    if (even_names_[i] == name) return std::make_pair(false, static_cast<int>(i));
  for (std::size_t i = 0; i < odd_names_.size(); ++i)
    if (odd_names_[i] == name) return std::make_pair(true, static_cast<int>(i));
  return std::nullopt;
}

SuperPolynomial SuperAlgebra::constant(const Scalar& c) const {
  SuperPolynomial p;
  SuperMonomial m;
  m.even.assign(even_names_.size(), 0);
  p.add_term(m, c);
  return p;
}

SuperPolynomial SuperAlgebra::gen(bool is_odd, int index) const {
  SuperPolynomial p;
  SuperMonomial m;
  m.even.assign(even_names_.size(), 0);
  if (is_odd)
    m.odd = 1ull << index;
  else
    m.even[static_cast<std::size_t>(index)] = 1;
  p.add_term(m, Scalar::one(field_));
  return p;
}

SuperPolynomial SuperAlgebra::gen(const std::string& name) const {
  auto g = find_generator(name);
  if (!g) throw AlgebraError("unknown generator: " + name);
  return gen(g->first, g->second);
}

namespace {

struct PolyParser {
  const SuperAlgebra& alg;
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  SuperPolynomial parse_expr() {
    SuperPolynomial r = parse_term();
    while (true) {
      if (eat('+'))
        r = poly_add(r, parse_term());
      else if (eat('-'))
        r = poly_sub(r, parse_term());
      else
        break;
    }
    return r;
  }

  SuperPolynomial parse_term() {
    SuperPolynomial r = parse_factor();
    while (eat('*')) r = poly_mul(r, parse_factor());
    return r;
  }

  SuperPolynomial parse_factor() {
    SuperPolynomial base = parse_atom();
    if (eat('^')) {
      long long n = parse_int();
      if (n < 0) throw AlgebraError("negative exponent");
      SuperPolynomial r = alg.one();
      for (long long i = 0; i < n; ++i) r = poly_mul(r, base);
      return r;
    }
    return base;
  }

  long long parse_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw AlgebraError("expected integer in polynomial at offset " + std::to_string(pos));
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  }

  SuperPolynomial parse_atom() {
    skip_ws();
    if (eat('-')) return poly_neg(parse_atom());
    if (eat('(')) {
      SuperPolynomial r = parse_expr();
      if (!eat(')')) throw AlgebraError("missing ')' in polynomial");
      return r;
    }
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      long long n = parse_int();
      if (eat('/')) {
        long long d = parse_int();
        return alg.constant(Scalar(alg.field(), BigInt(n), BigInt(d)));
      }
      return alg.constant(Scalar(alg.field(), n));
    }
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_' || text[pos] == '\''))
        ++pos;
      return alg.gen(text.substr(start, pos - start));
    }
    throw AlgebraError("unexpected character in polynomial at offset " + std::to_string(pos));
  }
};

}  // namespace

SuperPolynomial SuperAlgebra::parse(const std::string& text) const {
  PolyParser p{*this, text};
  SuperPolynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw AlgebraError("trailing input in polynomial: " + text);
  return r;
}

std::string SuperAlgebra::to_string(const SuperPolynomial& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Scalar coef = c;
    if (first) {
      first = false;
      if (coef.num() < 0) {
        out << "-";
        coef = -coef;
      }
    } else {
      if (coef.num() < 0) {
        out << " - ";
        coef = -coef;
      } else {
        out << " + ";
      }
    }
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < m.even.size(); ++i) {
      if (m.even[i] == 0) continue;
      std::string s = even_names_[i];
      if (m.even[i] > 1) s += "^" + std::to_string(m.even[i]);
      parts.push_back(s);
    }
    std::uint64_t oo = m.odd;
    while (oo) {
      int j = std::countr_zero(oo);
      oo &= oo - 1;
      parts.push_back(odd_names_[static_cast<std::size_t>(j)]);
    }
    if (parts.empty()) {
      out << coef.str();
    } else {
      if (!coef.is_one()) out << coef.str() << "*";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << "*";
        out << parts[i];
      }
    }
  }
  return out.str();
}

NormalFormResult SuperAlgebra::normal_form(const SuperPolynomial& p) const {
  NormalFormResult r;
  int d = p.degree();
  r.value = reduce_full(p, completed_);
  // reduction to zero is a positive certificate regardless of the cap; for
  // nonzero results canonicity holds only within the completed degree range
  r.conclusive = r.value.is_zero() || d <= degree_cap_;
  return r;
}

SuperAlgebra::Eq SuperAlgebra::equal(const SuperPolynomial& a, const SuperPolynomial& b) const {
  NormalFormResult nf = normal_form(poly_sub(a, b));
  if (nf.value.is_zero()) return Eq::Equal;
  return nf.conclusive ? Eq::NotEqual : Eq::Inconclusive;
}

Membership SuperAlgebra::ideal_membership(const SuperPolynomial& p,
                                          const std::vector<SuperPolynomial>& ideal_gens) const {
  std::vector<SuperPolynomial> rels = relations_;
  for (const auto& g : ideal_gens) {
    if (g.parity() == 2) {
      auto [ev, od] = poly_parity_split(g);
      rels.push_back(ev);
      rels.push_back(od);
    } else {
      rels.push_back(g);
    }
  }
  SuperAlgebra quotient(field_, even_names_, odd_names_, rels, degree_cap_);
  NormalFormResult nf = quotient.normal_form(p);
  if (nf.value.is_zero()) return Membership::Member;
  return nf.conclusive ? Membership::NotMemberUpTo : Membership::Inconclusive;
}

const LocalityCertificate& SuperAlgebra::certify_local() const {
  if (locality_) return *locality_;
  LocalityCertificate cert;
  if (is_zero_algebra()) {
    cert.certified = false;
    cert.reason = "zero algebra is not local";
    locality_ = cert;
    return *locality_;
  }

  // even reduced quotient: kill all odd generators and every even generator
  // detected nilpotent (up to the cap), then demand the result be the field
  std::vector<bool> killed(even_names_.size(), false);
  auto build_quotient = [&]() {
    std::vector<SuperPolynomial> rels = relations_;
    for (int j = 0; j < num_odd(); ++j) rels.push_back(gen(true, j));
    for (std::size_t i = 0; i < killed.size(); ++i)
      if (killed[i]) rels.push_back(gen(false, static_cast<int>(i)));
    return SuperAlgebra(field_, even_names_, odd_names_, rels, degree_cap_);
  };

  bool grew = true;
  while (grew) {
    grew = false;
    SuperAlgebra q = build_quotient();
    for (std::size_t i = 0; i < even_names_.size(); ++i) {
      if (killed[i]) continue;
      SuperPolynomial pw = q.one();
      for (int k = 1; k <= degree_cap_; ++k) {
        pw = poly_mul(pw, gen(false, static_cast<int>(i)));
        if (pw.degree() > degree_cap_) break;
        if (q.normal_form(pw).value.is_zero()) {
          killed[i] = true;
          grew = true;
          break;
        }
      }
    }
  }

  SuperAlgebra q = build_quotient();
  bool is_field = !q.is_zero_algebra();
  std::vector<Scalar> residues;
  for (std::size_t i = 0; i < even_names_.size() && is_field; ++i) {
    SuperPolynomial nf = q.normal_form(gen(false, static_cast<int>(i))).value;
    if (nf.is_zero()) {
      residues.push_back(Scalar::zero(field_));
    } else if (nf.terms().size() == 1 && nf.lead_mono().is_unit()) {
      residues.push_back(nf.lead_coeff());
    } else {
      is_field = false;
    }
  }
  if (is_field) {
    cert.certified = true;
    cert.reason = "even reduced quotient is the ground field";
    cert.even_residues = std::move(residues);
    cert.has_residues = true;
  } else if (locality_flag_) {
    cert.certified = true;
    cert.reason = "constructor-supplied locality certificate";
  } else {
    cert.certified = false;
    cert.reason = "even reduced quotient is not the ground field";
  }
  locality_ = std::move(cert);
  return *locality_;
}

std::optional<Scalar> SuperAlgebra::residue(const SuperPolynomial& p) const {
  const LocalityCertificate& cert = certify_local();
  if (!cert.has_residues) return std::nullopt;
  Scalar acc = Scalar::zero(field_);
  for (const auto& [m, c] : p.terms()) {
    if (m.odd != 0) continue;
    Scalar v = c;
    for (std::size_t i = 0; i < m.even.size(); ++i)
      for (std::uint32_t k = 0; k < m.even[i]; ++k) v = v * cert.even_residues[i];
    acc = acc + v;
  }
  return acc;
}

std::vector<SuperMonomial> SuperAlgebra::basis_monomials(int d) const {
  std::vector<SuperMonomial> out;
  std::vector<SuperMonomial> leads;
  for (const auto& g : completed_) leads.push_back(g.lead_mono());
  auto reducible = [&](const SuperMonomial& m) {
    for (const auto& l : leads)
      if (mono_divides(l, m)) return true;
    return false;
  };
  // enumerate exponent vectors of total degree <= d together with odd subsets
  std::vector<std::uint32_t> expo(even_names_.size(), 0);
  std::uint64_t odd_full = num_odd() >= 64 ? ~0ull : ((1ull << num_odd()) - 1);
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx == expo.size()) {
      for (std::uint64_t s = odd_full;; s = (s - 1) & odd_full) {
        if (std::popcount(s) <= remaining) {
          SuperMonomial m;
          m.even = expo;
          m.odd = s;
          if (!reducible(m)) out.push_back(m);
        }
        if (s == 0) break;
      }
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      expo[idx] = static_cast<std::uint32_t>(e);
      self(self, idx + 1, remaining - e);
    }
    expo[idx] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const SuperMonomial& a, const SuperMonomial& b) {
    return MonGreater()(b, a);  // ascending: unit first
  });
  return out;
}

bool SuperAlgebra::same_presentation(const SuperAlgebra& o) const {
  return field_ == o.field_ && even_names_ == o.even_names_ && odd_names_ == o.odd_names_ &&
         completed_.size() == o.completed_.size() &&
         std::equal(completed_.begin(), completed_.end(), o.completed_.begin());
}

SuperAlgebraHom::SuperAlgebraHom(AlgebraPtr source, AlgebraPtr target,
                                 std::vector<SuperPolynomial> even_images,
                                 std::vector<SuperPolynomial> odd_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      even_images_(std::move(even_images)),
      odd_images_(std::move(odd_images)) {
  if (even_images_.size() != source_->even_names().size() ||
      odd_images_.size() != source_->odd_names().size())
    throw AlgebraError("hom image assignment does not cover all source generators");
}

SuperAlgebraHom SuperAlgebraHom::identity(const AlgebraPtr& a) {
  std::vector<SuperPolynomial> ev, od;
  for (int i = 0; i < a->num_even(); ++i) ev.push_back(a->gen(false, i));
  for (int i = 0; i < a->num_odd(); ++i) od.push_back(a->gen(true, i));
  return SuperAlgebraHom(a, a, std::move(ev), std::move(od));
}

SuperAlgebraHom SuperAlgebraHom::compose(const SuperAlgebraHom& g, const SuperAlgebraHom& f) {
  if (f.target().get() != g.source().get() && !f.target()->same_presentation(*g.source()))
    throw AlgebraError("hom composition source/target mismatch");
  std::vector<SuperPolynomial> ev, od;
  for (const auto& p : f.even_images_) ev.push_back(g.apply(p));
  for (const auto& p : f.odd_images_) od.push_back(g.apply(p));
  return SuperAlgebraHom(f.source(), g.target(), std::move(ev), std::move(od));
}

const SuperPolynomial& SuperAlgebraHom::image(bool is_odd, int index) const {
  return is_odd ? odd_images_[static_cast<std::size_t>(index)]
                : even_images_[static_cast<std::size_t>(index)];
}

SuperPolynomial SuperAlgebraHom::apply(const SuperPolynomial& p) const {
  SuperPolynomial acc;
  for (const auto& [m, c] : p.terms()) {
    SuperPolynomial term = target_->constant(Scalar(target_->field(), 1) * c);
    for (std::size_t i = 0; i < m.even.size(); ++i)
      for (std::uint32_t k = 0; k < m.even[i]; ++k)
        term = poly_mul(term, even_images_[i]);
    std::uint64_t oo = m.odd;
    while (oo) {
      int j = std::countr_zero(oo);
      oo &= oo - 1;
      term = poly_mul(term, odd_images_[static_cast<std::size_t>(j)]);
    }
    acc = poly_add(acc, term);
  }
  return target_->normal_form(acc).value;
}

bool SuperAlgebraHom::same_map(const SuperAlgebraHom& o) const {
  if (!source_->same_presentation(*o.source_) || !target_->same_presentation(*o.target_))
    return false;
  for (std::size_t i = 0; i < even_images_.size(); ++i)
    if (target_->equal(even_images_[i], o.even_images_[i]) != SuperAlgebra::Eq::Equal)
      return false;
  for (std::size_t i = 0; i < odd_images_.size(); ++i)
    if (target_->equal(odd_images_[i], o.odd_images_[i]) != SuperAlgebra::Eq::Equal)
      return false;
  return true;
}

HomReport check_hom(const SuperAlgebraHom& h) {
  HomReport rep;
  if (h.source()->field() != h.target()->field()) {
    rep.error = "FieldMismatch";
    return rep;
  }
  // zero target absorbs everything
  for (int i = 0; i < h.source()->num_even(); ++i) {
    int par = h.even_images()[static_cast<std::size_t>(i)].parity();
    if (par == 1 || par == 2) {
      rep.error = "ParityViolation: even generator " + h.source()->generator_name(false, i) +
                  " has image of wrong parity";
      return rep;
    }
  }
  for (int i = 0; i < h.source()->num_odd(); ++i) {
    int par = h.odd_images()[static_cast<std::size_t>(i)].parity();
    if (par == 0 || par == 2) {
      rep.error = "ParityViolation: odd generator " + h.source()->generator_name(true, i) +
                  " has image of wrong parity";
      return rep;
    }
  }
  for (std::size_t r = 0; r < h.source()->relations().size(); ++r) {
    SuperPolynomial img = h.apply(h.source()->relations()[r]);
    NormalFormResult nf = h.target()->normal_form(img);
    if (!nf.value.is_zero()) {
      if (!nf.conclusive) {
        rep.conclusive = false;
        rep.error = "Inconclusive: relation " + std::to_string(r) + " not resolved within cap";
        return rep;
      }
      rep.error = "RelationNotPreserved: relation " +
                  h.source()->to_string(h.source()->relations()[r]) + " maps to " +
                  h.target()->to_string(nf.value);
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

std::pair<AlgebraPtr, SuperAlgebraHom> localize(const AlgebraPtr& a, const SuperPolynomial& s) {
  if (s.parity() == 1 || s.parity() == 2) throw AlgebraError("localization requires an even element");
  if (a->normal_form(s).value.is_zero()) throw AlgebraError("ZeroDenominator");

  std::vector<std::string> evens = a->even_names();
  std::string tname = "t";
  int suffix = 0;
  auto taken = [&](const std::string& n) {
    return a->find_generator(n).has_value();
  };
  while (taken(tname)) tname = "t" + std::to_string(++suffix);
  evens.push_back(tname);

  auto widen = [&](const SuperPolynomial& p) {
    SuperPolynomial r;
    for (const auto& [m, c] : p.terms()) {
      SuperMonomial w = m;
      w.even.resize(evens.size(), 0);
      r.add_term(w, c);
    }
    return r;
  };

  std::vector<SuperPolynomial> rels;
  for (const auto& r : a->relations()) rels.push_back(widen(r));
  // s*t - 1
  SuperPolynomial t;
  SuperMonomial tm;
  tm.even.assign(evens.size(), 0);
  tm.even.back() = 1;
  t.add_term(tm, Scalar::one(a->field()));
  rels.push_back(poly_sub(poly_mul(widen(s), t), [&] {
    SuperPolynomial one;
    SuperMonomial m;
    m.even.assign(evens.size(), 0);
    one.add_term(m, Scalar::one(a->field()));
    return one;
  }()));

  AlgebraPtr localized =
      SuperAlgebra::make(a->field(), evens, a->odd_names(), rels, a->degree_cap());
  std::vector<SuperPolynomial> ev, od;
  for (int i = 0; i < a->num_even(); ++i) ev.push_back(localized->gen(false, i));
  for (int i = 0; i < a->num_odd(); ++i) od.push_back(localized->gen(true, i));
  return {localized, SuperAlgebraHom(a, localized, std::move(ev), std::move(od))};
}

}  // namespace supersite
