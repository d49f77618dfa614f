#include "schubert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw InvalidInput("negative exponent");
  trim();
}

Monomial Monomial::variable(int i) {
  std::vector<int> e(i, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int Monomial::exponent(int i) const {
  return i >= 1 && i <= numVariables() ? exps_[i - 1] : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::swapped(int i) const {
  std::vector<int> e = exps_;
  if (static_cast<int>(e.size()) < i + 1) e.resize(i + 1, 0);
  std::swap(e[i - 1], e[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::withExponent(int i, int value) const {
  std::vector<int> e = exps_;
  if (static_cast<int>(e.size()) < i) e.resize(i, 0);
  e[i - 1] = value;
  return Monomial(std::move(e));
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  const std::size_t n = std::max(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int x = i < ea.size() ? ea[i] : 0;
    const int y = i < eb.size() ? eb[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

Polynomial::Polynomial(Coefficient constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, Coefficient c) {
  if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(int i) { return Polynomial(Monomial::variable(i)); }

Polynomial Polynomial::fromRowMultiset(std::span<const int> rows) {
  int top = 0;
  for (int r : rows) top = std::max(top, r);
  std::vector<int> e(top, 0);
  for (int r : rows) {
    if (r < 1) throw InvalidInput("variable index must be positive");
    ++e[r - 1];
  }
  return Polynomial(Monomial(std::move(e)));
}

Polynomial::Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::hasNonnegativeCoefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

int Polynomial::maxVariable() const {
  int v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, m.numVariables());
  return v;
}

Polynomial::Coefficient Polynomial::absoluteSum() const {
  Coefficient s = 0;
  for (const auto& [m, c] : terms_) s += c < 0 ? -c : c;
  return s;
}

void Polynomial::addTerm(const Monomial& m, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Coefficient c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.addTerm(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  return r *= -1;
}

Polynomial Polynomial::swapped(int i) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.addTerm(m.swapped(i), c);
  return r;
}

Polynomial Polynomial::timesVariable(int i) const {
  Polynomial r;
  const Monomial x = Monomial::variable(i);
  for (const auto& [m, c] : terms_) r.addTerm(m * x, c);
  return r;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coefficient mag = c;
    if (first) {
      if (c < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    first = false;
    std::string vars;
    for (int i = 1; i <= m.numVariables(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += 'x' + std::to_string(i);
      if (e > 1) vars += '^' + std::to_string(e);
    }
    if (vars.empty()) {
      os << mag;
    } else if (mag == 1) {
      os << vars;
    } else {
      os << mag << '*' << vars;
    }
  }
  return os.str();
}

namespace {

// Reader for the canonical text form produced by toString().
class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  Polynomial read() {
    Polynomial p;
    skip();
    if (s_ == "0") return p;
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    term(p, sign);
    skip();
    while (pos_ < s_.size()) {
      const char op = s_[pos_++];
      if (op != '+' && op != '-') fail();
      skip();
      term(p, op == '-' ? -1 : 1);
      skip();
    }
    return p;
  }

 private:
  void term(Polynomial& p, int sign) {
    Polynomial::Coefficient coeff = 1;
    std::vector<int> e;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      if (peek() != '*') {
        p.addTerm(Monomial{}, sign * coeff);
        return;
      }
      ++pos_;
    }
    while (true) {
      if (peek() != 'x') fail();
      ++pos_;
      const int var = static_cast<int>(number());
      int exp = 1;
      if (peek() == '^') {
        ++pos_;
        exp = static_cast<int>(number());
      }
      if (var < 1) fail();
      if (static_cast<int>(e.size()) < var) e.resize(var, 0);
      e[var - 1] += exp;
      if (peek() != '*') break;
      ++pos_;
    }
    p.addTerm(Monomial(std::move(e)), sign * coeff);
  }

  Polynomial::Coefficient number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail();
    Polynomial::Coefficient v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail() const { throw InvalidInput("cannot parse polynomial: " + s_); }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) { return Reader(text).read(); }

}  // namespace schubert
