#include "qcycle/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qc {

CycScalar::CycScalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  c_[0] = mpq_class(num, den);
  c_[0].canonicalize();
}

CycScalar::CycScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

CycScalar CycScalar::zeta_power(long k) {
  long r = ((k % 8) + 8) % 8;
  CycScalar s;
  if (r < 4)
    s.c_[r] = 1;
  else
    s.c_[r - 4] = -1;
  return s;
}

bool CycScalar::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycScalar::is_one() const {
  return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycScalar::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

int CycScalar::weight() const {
  int w = 0;
  for (const auto& x : c_) w += sgn(x) != 0;
  return w;
}

CycScalar CycScalar::operator-() const {
  CycScalar r;
  for (int j = 0; j < 4; ++j)
    if (sgn(c_[j])) r.c_[j] = -c_[j];
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  for (int j = 0; j < 4; ++j)
    if (sgn(o.c_[j])) c_[j] += o.c_[j];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  for (int j = 0; j < 4; ++j)
    if (sgn(o.c_[j])) c_[j] -= o.c_[j];
  return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  CycScalar r;
  mpq_class tmp;
  for (int i = 0; i < 4; ++i) {
    if (!sgn(a.c_[i])) continue;
    for (int j = 0; j < 4; ++j) {
      if (!sgn(b.c_[j])) continue;
      tmp = a.c_[i] * b.c_[j];
      int k = i + j;
      if (k < 4)
        r.c_[k] += tmp;
      else
        r.c_[k - 4] -= tmp;
    }
  }
  return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  *this = *this * o;
  return *this;
}

CycScalar CycScalar::galois(int k) const {
  CycScalar r;
  for (int j = 0; j < 4; ++j) {
    if (!sgn(c_[j])) continue;
    int e = (j * k) % 8;
    if (e < 0) e += 8;
    if (e < 4)
      r.c_[e] += c_[j];
    else
      r.c_[e - 4] -= c_[j];
  }
  return r;
}

mpq_class CycScalar::norm() const {
  CycScalar p = *this * galois(3) * galois(5) * galois(7);
  return p.c_[0];
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycScalar(mpq_class(1 / c_[0]));
  CycScalar conj = galois(3) * galois(5) * galois(7);
  CycScalar n = *this * conj;
  mpq_class inv = 1 / n.c_[0];
  for (auto& x : conj.c_) x *= inv;
  return conj;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_rational()) {
    for (auto& x : c_)
      if (sgn(x)) x /= o.c_[0];
    return *this;
  }
  return *this *= o.inverse();
}

CycScalar cyc_arith(const CycScalar& a, const CycScalar& b, char op) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
  }
  throw std::invalid_argument("unknown scalar operation");
}

std::string CycScalar::str() const {
  static const char* names[4] = {"", "*w", "*w^2", "*w^3"};
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < 4; ++j) {
    if (!sgn(c_[j])) continue;
    mpq_class v = c_[j];
    if (!first) {
      os << (sgn(v) < 0 ? " - " : " + ");
      v = abs(v);
    }
    os << v.get_str() << names[j];
    first = false;
  }
  if (first) return "0";
  return os.str();
}

namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) r.push_back(ch);
  return r;
}

}  // namespace

// Accepts sums of terms "p/q", "p/q*w", "w^3", "-w^2", "3*w".
CycScalar CycScalar::parse(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  CycScalar r;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed scalar: " + text);
    mpq_class coeff = 1;
    int power = 0;
    size_t wpos = term.find('w');
    std::string num = term.substr(0, wpos);
    if (!num.empty() && num.back() == '*') num.pop_back();
    if (!num.empty()) {
      coeff = mpq_class(num);
      coeff.canonicalize();
    }
    if (wpos != std::string::npos) {
      power = 1;
      if (wpos + 1 < term.size()) {
        if (term[wpos + 1] != '^') throw std::invalid_argument("malformed scalar: " + text);
        power = std::stoi(term.substr(wpos + 2));
      }
    }
    CycScalar t = zeta_power(power);
    for (auto& x : t.c_) x *= coeff * sign;
    r += t;
    pos = end;
  }
  return r;
}

}  // namespace qc
