#include "osculum/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "osculum/errors.hpp"

namespace osculum {

namespace {

bool term_before(const MPoly::Term& a, const MPoly::Term& b) { return a.monomial > b.monomial; }

void normalize(std::vector<MPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].coefficient);
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) {
      sum += terms[j].coefficient;
      ++j;
    }
    if (sum != 0) {
      if (out != i) terms[out].monomial = std::move(terms[i].monomial);
      terms[out].coefficient = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merges two sorted term lists; sign = -1 subtracts b.
std::vector<MPoly::Term> merge(std::span<const MPoly::Term> a, std::span<const MPoly::Term> b,
                               int sign) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational c = a[i].coefficient;
      if (sign < 0) c -= b[j].coefficient;
      else c += b[j].coefficient;
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<std::vector<Rational>> power_table(std::span<const Rational> point,
                                               std::span<const int> max_degree) {
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].reserve(max_degree[i] + 1);
    powers[i].emplace_back(1);
    for (int e = 1; e <= max_degree[i]; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  return powers;
}

std::vector<int> max_degrees(const MPoly& f) {
  std::vector<int> deg(f.variable_count(), 0);
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = std::max<int>(deg[i], t.monomial[i]);
  return deg;
}

}  // namespace

void MPoly::check_compatible(const MPoly& a, const MPoly& b) {
  if (a.variable_count_ != b.variable_count_)
    throw DimensionMismatch("polynomial variable-count mismatch (" +
                            std::to_string(a.variable_count_) + " vs " +
                            std::to_string(b.variable_count_) + ")");
}

MPoly MPoly::constant(std::size_t variable_count, const Rational& value) {
  MPoly p(variable_count);
  if (value != 0) p.terms_.push_back({Monomial(variable_count), value});
  return p;
}

MPoly MPoly::variable(std::size_t variable_count, std::size_t index) {
  return term(Monomial::variable(variable_count, index));
}

MPoly MPoly::term(const Monomial& monomial, const Rational& coefficient) {
  MPoly p(monomial.variable_count());
  if (coefficient != 0) p.terms_.push_back({monomial, coefficient});
  return p;
}

MPoly MPoly::from_terms(std::size_t variable_count, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.variable_count() != variable_count)
      throw DimensionMismatch("term has wrong variable count");
  MPoly p(variable_count);
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0);
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw DegenerateInput("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].coefficient;
}

int MPoly::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

int MPoly::degree_in(std::size_t i) const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.monomial[i]);
  return d;
}

bool MPoly::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

bool MPoly::is_homogeneous(unsigned d) const noexcept {
  return terms_.empty() ||
         (terms_.front().monomial.degree() == d && terms_.back().monomial.degree() == d);
}

Rational MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial > x; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

const MPoly::Term& MPoly::leading_term() const {
  if (terms_.empty()) throw DegenerateInput("zero polynomial has no leading term");
  return terms_.front();
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_compatible(*this, other);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_compatible(*this, other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= scalar;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly::check_compatible(a, b);
  MPoly p(a.variable_count_);
  if (a.is_zero() || b.is_zero()) return p;
  if (b.terms_.size() == 1) {
    p.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_)
      p.terms_.push_back({t.monomial * b.terms_[0].monomial, t.coefficient * b.terms_[0].coefficient});
    return p;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<MPoly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  normalize(products);
  p.terms_ = std::move(products);
  return p;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.variable_count_ != b.variable_count_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool negative = t.coefficient < 0;
    if (i == 0) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    const Rational magnitude = abs(t.coefficient);
    if (t.monomial.degree() == 0) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << t.monomial.to_string();
    }
  }
  return out.str();
}

MPoly add(const MPoly& a, const MPoly& b) { return a + b; }

MPoly mul(const MPoly& a, const MPoly& b) { return a * b; }

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(base.variable_count(), 1);
  MPoly square = base;
  while (exponent) {
    if (exponent & 1u) result *= square;
    exponent >>= 1u;
    if (exponent) square = square * square;
  }
  return result;
}

MPoly partial_derivative(const MPoly& f, std::size_t var_index) {
  if (var_index >= f.variable_count()) throw DimensionMismatch("derivative variable out of range");
  std::vector<MPoly::Term> terms;
  for (const auto& t : f.terms()) {
    const unsigned e = t.monomial[var_index];
    if (e == 0) continue;
    terms.push_back({t.monomial.with_exponent(var_index, e - 1), t.coefficient * e});
  }
  // Differentiation keeps distinct monomials distinct, but not the order.
  return MPoly::from_terms(f.variable_count(), std::move(terms));
}

MPoly partial_derivative(const MPoly& f, const Monomial& multi_index) {
  if (multi_index.variable_count() != f.variable_count())
    throw DimensionMismatch("multi-index length mismatch");
  std::vector<MPoly::Term> terms;
  for (const auto& t : f.terms()) {
    if (!multi_index.divides(t.monomial)) continue;
    Rational c = t.coefficient;
    for (std::size_t i = 0; i < f.variable_count(); ++i)
      for (unsigned k = 0; k < multi_index[i]; ++k) c *= t.monomial[i] - k;
    terms.push_back({t.monomial / multi_index, std::move(c)});
  }
  return MPoly::from_terms(f.variable_count(), std::move(terms));
}

Rational evaluate(const MPoly& f, std::span<const Rational> point) {
  if (point.size() != f.variable_count()) throw DimensionMismatch("evaluation point length mismatch");
  if (f.is_zero()) return 0;
  const auto powers = power_table(point, max_degrees(f));
  Rational sum = 0, term;
  for (const auto& t : f.terms()) {
    term = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.monomial[i]) term *= powers[i][t.monomial[i]];
    sum += term;
  }
  return sum;
}

MPoly substitute(const MPoly& f, std::span<const MPoly> images) {
  if (images.size() != f.variable_count()) throw DimensionMismatch("substitution length mismatch");
  if (images.empty()) return f;
  const std::size_t n = images[0].variable_count();
  for (const auto& g : images)
    if (g.variable_count() != n) throw DimensionMismatch("substitution images differ in variable count");
  const auto deg = max_degrees(f);
  std::vector<std::vector<MPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(MPoly::constant(n, 1));
    for (int e = 1; e <= deg[i]; ++e) powers[i].push_back(powers[i].back() * images[i]);
  }
  std::vector<MPoly> parts;
  parts.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    MPoly p = MPoly::constant(n, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i]) p *= powers[i][t.monomial[i]];
    parts.push_back(std::move(p));
  }
  std::vector<MPoly::Term> all;
  for (auto& p : parts)
    for (const auto& t : p.terms()) all.push_back(t);
  return MPoly::from_terms(n, std::move(all));
}

MPoly specialize(const MPoly& f, std::span<const std::size_t> indices,
                 std::span<const Rational> values) {
  if (indices.size() != values.size()) throw DimensionMismatch("specialization length mismatch");
  std::vector<MPoly::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Rational c = t.coefficient;
    Monomial m = t.monomial;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const unsigned e = m[indices[k]];
      if (e == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), values[k].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), values[k].get_den_mpz_t(), e);
      c *= p;
      m = m.with_exponent(indices[k], 0);
    }
    terms.push_back({std::move(m), std::move(c)});
  }
  return MPoly::from_terms(f.variable_count(), std::move(terms));
}

MPoly extend_variables(const MPoly& f, std::size_t variable_count, std::size_t offset) {
  if (offset + f.variable_count() > variable_count)
    throw DimensionMismatch("target ring too small for embedding");
  std::vector<MPoly::Term> terms;
  terms.reserve(f.term_count());
  std::vector<unsigned> e(variable_count, 0);
  for (const auto& t : f.terms()) {
    std::fill(e.begin(), e.end(), 0u);
    for (std::size_t i = 0; i < f.variable_count(); ++i) e[i + offset] = t.monomial[i];
    terms.push_back({Monomial(std::span<const unsigned>(e)), t.coefficient});
  }
  return MPoly::from_terms(variable_count, std::move(terms));
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  if (a.variable_count() != b.variable_count()) throw DimensionMismatch("division variable-count mismatch");
  if (b.is_zero()) throw DegenerateInput("division by the zero polynomial");
  if (a.is_zero()) return MPoly(a.variable_count());
  const auto& lead = b.leading_term();
  if (b.term_count() == 1) {
    std::vector<MPoly::Term> q;
    q.reserve(a.term_count());
    for (const auto& t : a.terms()) {
      if (!lead.monomial.divides(t.monomial)) throw DegenerateInput("inexact polynomial division");
      q.push_back({t.monomial / lead.monomial, t.coefficient / lead.coefficient});
    }
    return MPoly::from_terms(a.variable_count(), std::move(q));
  }
  std::map<Monomial, Rational, std::greater<>> remainder;
  for (const auto& t : a.terms()) remainder.emplace(t.monomial, t.coefficient);
  std::vector<MPoly::Term> quotient;
  const auto tail = b.terms().subspan(1);
  while (!remainder.empty()) {
    auto top = remainder.begin();
    if (!lead.monomial.divides(top->first)) throw DegenerateInput("inexact polynomial division");
    Monomial qm = top->first / lead.monomial;
    Rational qc = top->second / lead.coefficient;
    remainder.erase(top);
    for (const auto& t : tail) {
      auto [it, inserted] = remainder.try_emplace(qm * t.monomial);
      it->second -= qc * t.coefficient;
      if (it->second == 0) remainder.erase(it);
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return MPoly::from_terms(a.variable_count(), std::move(quotient));
}

MPoly dot(std::span<const MPoly> a, std::span<const MPoly> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
  if (a.empty()) return MPoly();
  const std::size_t n = a[0].variable_count();
  std::vector<MPoly::Term> all;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].variable_count() != n || b[i].variable_count() != n)
      throw DimensionMismatch("dot product variable-count mismatch");
    for (const auto& s : a[i].terms())
      for (const auto& t : b[i].terms()) all.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  }
  return MPoly::from_terms(n, std::move(all));
}

std::vector<Rational> coefficient_vector(const MPoly& f, std::span<const Monomial> basis) {
  std::vector<Rational> out(basis.size());
  std::size_t matched = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = f.coefficient(basis[i]);
    if (out[i] != 0) ++matched;
  }
  if (matched != f.term_count())
    throw DegenerateInput("polynomial has terms outside the monomial basis: " + f.to_string());
  return out;
}

std::vector<MPoly> coefficients_over(const MPoly& f, std::size_t leading,
                                     std::span<const Monomial> basis) {
  if (leading > f.variable_count()) throw DimensionMismatch("leading variable count too large");
  const std::size_t rest = f.variable_count() - leading;
  std::vector<std::vector<MPoly::Term>> buckets(basis.size());
  std::vector<unsigned> head(leading), tail(rest);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < leading; ++i) head[i] = t.monomial[i];
    for (std::size_t i = 0; i < rest; ++i) tail[i] = t.monomial[leading + i];
    const Monomial h{std::span<const unsigned>(head)};
    auto it = std::find(basis.begin(), basis.end(), h);
    if (it == basis.end()) throw DegenerateInput("term outside the leading monomial basis");
    buckets[it - basis.begin()].push_back({Monomial(std::span<const unsigned>(tail)), t.coefficient});
  }
  std::vector<MPoly> out;
  out.reserve(basis.size());
  for (auto& b : buckets) out.push_back(MPoly::from_terms(rest, std::move(b)));
  return out;
}

}  // namespace osculum
