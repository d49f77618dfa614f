#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace schubert {

// x^beta as a dense exponent vector (index 0 holds the exponent of x_1),
// with trailing zeros trimmed so that equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(int i);

  int exponent(int i) const;  // 1-based variable index
  int degree() const;
  int numVariables() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  // Exchange the exponents of x_i and x_{i+1}.
  Monomial swapped(int i) const;
  Monomial withExponent(int i, int e) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void trim();
  std::vector<int> exps_;
};

// Higher total degree first; within a degree, lexicographically larger first.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial in x_1, x_2, ... with exact int64 coefficients; zero
// coefficients are never stored.
class Polynomial {
 public:
  using Coefficient = std::int64_t;
  using Terms = std::map<Monomial, Coefficient, GradedLexDescending>;

  Polynomial() = default;
  Polynomial(Coefficient constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Monomial& m, Coefficient c = 1);

  static Polynomial variable(int i);
  // Product of x_{row} over the given row indices.
  static Polynomial fromRowMultiset(std::span<const int> rows);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const Monomial& m) const;
  // -1 for the zero polynomial.
  int degree() const;
  bool isHomogeneous() const;
  bool hasNonnegativeCoefficients() const;
  // Largest variable index appearing, 0 for constants.
  int maxVariable() const;
  // Sum of the absolute values of the coefficients.
  Coefficient absoluteSum() const;

  void addTerm(const Monomial& m, Coefficient c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Coefficient c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Coefficient c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  // s_i acting by exchanging x_i and x_{i+1}.
  Polynomial swapped(int i) const;
  Polynomial timesVariable(int i) const;

  // Terms in graded-lex descending order, "c*x1^a1*x2^a2" with unit
  // exponents and coefficients elided; "0" for the zero polynomial.
  std::string toString() const;
  static Polynomial parse(const std::string& text);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

}  // namespace schubert
