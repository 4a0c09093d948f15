#include "osculum/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "osculum/errors.hpp"

namespace osculum {

namespace {

Monomial::Exponent checked_exponent(unsigned long e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max())
    throw DegenerateInput("monomial exponent overflow");
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::size_t variable_count) : exponents_(variable_count, 0) {}

Monomial::Monomial(std::initializer_list<unsigned> exponents) {
  exponents_.reserve(exponents.size());
  for (unsigned e : exponents) {
    exponents_.push_back(checked_exponent(e));
    degree_ += e;
  }
}

Monomial::Monomial(std::span<const unsigned> exponents) {
  exponents_.reserve(exponents.size());
  for (unsigned e : exponents) {
    exponents_.push_back(checked_exponent(e));
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t variable_count, std::size_t index, unsigned power) {
  if (index >= variable_count) throw DimensionMismatch("variable index out of range");
  Monomial m(variable_count);
  m.exponents_[index] = checked_exponent(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::with_exponent(std::size_t i, unsigned e) const {
  Monomial m = *this;
  m.degree_ = m.degree_ - m.exponents_.at(i) + e;
  m.exponents_[i] = checked_exponent(e);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.variable_count() != variable_count())
    throw DimensionMismatch("monomial variable-count mismatch");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.variable_count() != b.variable_count())
    throw DimensionMismatch("monomial variable-count mismatch");
  Monomial m = a;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i)
    m.exponents_[i] = checked_exponent(static_cast<unsigned long>(a.exponents_[i]) + b.exponents_[i]);
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw DegenerateInput("monomial does not divide");
  Monomial m = a;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) m.exponents_[i] -= b.exponents_[i];
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.exponents_.begin(), a.exponents_.end(),
                                                b.exponents_.begin(), b.exponents_.end());
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'X' << i;
    if (exponents_[i] > 1) out << '^' << exponents_[i];
  }
  if (first) return "1";
  return out.str();
}

namespace {

void enumerate(std::size_t n, unsigned remaining, std::size_t index,
               std::vector<unsigned>& current, std::vector<Monomial>& out) {
  if (index + 1 == n) {
    current[index] = remaining;
    out.emplace_back(std::span<const unsigned>(current));
    return;
  }
  // Larger leading exponents first gives lex-descending order.
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[index] = e;
    enumerate(n, remaining - e, index + 1, current, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t variable_count, unsigned d) {
  std::vector<Monomial> out;
  if (variable_count == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> current(variable_count, 0);
  enumerate(variable_count, d, 0, current, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t variable_count, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto block = monomials_of_degree(variable_count, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

Integer multinomial(const Monomial& m) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), m.degree());
  for (std::size_t i = 0; i < m.variable_count(); ++i) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), m[i]);
    result /= f;
  }
  return result;
}

}  // namespace osculum
