#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace khv {

// Laurent polynomial in q with integer coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exp, long long coeff = 1);

  void add(int exp, long long coeff);
  long long coeff(int exp) const;
  bool is_zero() const { return c_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  // q -> q^{-1}
  LaurentPoly invert_variable() const;
  // Exact division; throws std::domain_error if the division does not close.
  LaurentPoly divide_exact(const LaurentPoly& den) const;
  // Evaluation at q = i as a Gaussian integer (real, imaginary).
  std::pair<long long, long long> eval_at_i() const;

  int min_exp() const;
  int max_exp() const;
  const std::map<int, long long>& coeffs() const { return c_; }
  std::string str() const;

private:
  std::map<int, long long> c_;  // exponent -> nonzero coefficient
};

}  // namespace khv
