#include "khv/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace khv {

LaurentPoly LaurentPoly::monomial(int exp, long long coeff) {
  LaurentPoly p;
  p.add(exp, coeff);
  return p;
}

void LaurentPoly::add(int exp, long long coeff) {
  if (coeff == 0) return;
  auto it = c_.find(exp);
  if (it == c_.end()) {
    c_[exp] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

long long LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly p = *this;
  for (auto& [e, c] : o.c_) p.add(e, c);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly p = *this;
  for (auto& [e, c] : o.c_) p.add(e, -c);
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  for (auto& [e1, c1] : c_)
    for (auto& [e2, c2] : o.c_) p.add(e1 + e2, c1 * c2);
  return p;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly p;
  for (auto& [e, c] : c_) p.add(-e, c);
  return p;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& den) const {
  if (den.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  LaurentPoly rem = *this, quot;
  int dtop = den.max_exp();
  long long dlead = den.coeff(dtop);
  while (!rem.is_zero()) {
    int rtop = rem.max_exp();
    long long rlead = rem.coeff(rtop);
    if (rlead % dlead != 0) throw std::domain_error("LaurentPoly: inexact division");
    LaurentPoly term = monomial(rtop - dtop, rlead / dlead);
    quot = quot + term;
    rem = rem - term * den;
    if (!rem.is_zero() && rem.max_exp() >= rtop)
      throw std::domain_error("LaurentPoly: division does not terminate");
  }
  return quot;
}

std::pair<long long, long long> LaurentPoly::eval_at_i() const {
  long long re = 0, im = 0;
  for (auto& [e, c] : c_) {
    int m = ((e % 4) + 4) % 4;
    if (m == 0) re += c;
    else if (m == 1) im += c;
    else if (m == 2) re -= c;
    else im -= c;
  }
  return {re, im};
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("LaurentPoly: empty");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("LaurentPoly: empty");
  return c_.rbegin()->first;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long long a = c > 0 ? c : -c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace khv
