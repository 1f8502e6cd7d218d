#include "qaknots/laurent.hpp"

#include <cctype>
#include <sstream>

namespace qak {

namespace {

void check_tags(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.tag() != b.tag())
    throw std::invalid_argument("variable tag mismatch (A vs t)");
}

const char* var_name(VarTag tag) { return tag == VarTag::A ? "A" : "t"; }

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_tags(*this, o);
  for (const auto& [k, c] : o.coeffs_) {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_tags(*this, o);
  for (const auto& [k, c] : o.coeffs_) {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(k, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_tags(a, b);
  LaurentPoly r(a.tag());
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) {
      long long k = ka + kb;
      auto it = r.coeffs_.find(k);
      if (it == r.coeffs_.end()) {
        BigInt c = ca * cb;
        if (c != 0) r.coeffs_.emplace(k, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.coeffs_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(tag_);
  for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
  return r;
}

LaurentPoly LaurentPoly::shifted(long long dkey, const BigInt& c) const {
  LaurentPoly r(tag_);
  if (c == 0) return r;
  for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k + dkey, v * c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = one(tag_);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u) r = r * base;
    base = base * base;
    n >>= 1u;
  }
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r(tag_);
  for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(-k, c);
  return r;
}

LaurentPoly LaurentPoly::retagged(VarTag tag) const {
  LaurentPoly r(tag);
  r.coeffs_ = coeffs_;
  return r;
}

LaurentPoly substitute_A_to_t(const LaurentPoly& p) {
  if (p.tag() != VarTag::A)
    throw std::invalid_argument("substitute_A_to_t expects an A-tagged polynomial");
  LaurentPoly r(VarTag::T);
  for (const auto& [k, c] : p.terms()) {
    // key k is A^(k/2); need A-exponent m = k/2 even so the image lands on
    // half-integer t powers: A^m = (t^(1/2))^(-m/2), i.e. t-key -k/4.
    if (k % 4 != 0)
      throw std::domain_error("A-exponent not even; polynomial is not writhe-normalized");
    r.set_coeff(-k / 4, c);
  }
  return r;
}

Gaussian gaussian_add(const Gaussian& a, const Gaussian& b) {
  return {a.re + b.re, a.im + b.im};
}

Gaussian gaussian_mul(const Gaussian& a, const Gaussian& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool gaussian_is_unit(const Gaussian& g) {
  return g.re * g.re + g.im * g.im == 1;
}

Gaussian eval_gaussian(const LaurentPoly& p, const Gaussian& point) {
  if (!gaussian_is_unit(point))
    throw std::invalid_argument("evaluation point must be a Gaussian unit");
  // point^k for k mod 4; units form a cyclic group of order dividing 4.
  Gaussian pows[4];
  pows[0] = {1, 0};
  for (int i = 1; i < 4; ++i) pows[i] = gaussian_mul(pows[i - 1], point);
  Gaussian acc{0, 0};
  for (const auto& [k, c] : p.terms()) {
    long long r = ((k % 4) + 4) % 4;
    acc = gaussian_add(acc, gaussian_mul({c, 0}, pows[r]));
  }
  return acc;
}

GapReport gap_report(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("gap_report: zero polynomial");
  const long long step = p.tag() == VarTag::T ? 2 : 4;
  const long long lo = p.min_key(), hi = p.max_key();
  const long long res = ((lo % step) + step) % step;
  for (const auto& [k, c] : p.terms()) {
    (void)c;
    if (((k % step) + step) % step != res)
      throw std::domain_error("gap_report: mixed exponent residues");
  }
  GapReport rep;
  rep.min_key = lo;
  rep.key_step = step;
  const std::size_t m = static_cast<std::size_t>((hi - lo) / step);
  rep.coefficients.resize(m + 1);
  for (const auto& [k, c] : p.terms())
    rep.coefficients[static_cast<std::size_t>((k - lo) / step)] = c;
  rep.strictly_alternating = true;
  rep.weakly_alternating = true;
  for (std::size_t i = 0; i + 1 <= m && m > 0 && i < m; ++i) {
    const BigInt prod = rep.coefficients[i] * rep.coefficients[i + 1];
    if (prod >= 0) rep.strictly_alternating = false;
    if (prod > 0) rep.weakly_alternating = false;
  }
  for (std::size_t i = 1; i < m; ++i)
    if (rep.coefficients[i] == 0) rep.gap_positions.push_back(static_cast<int>(i));
  return rep;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponent order.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const long long k = it->first;
    const BigInt& c = it->second;
    if (k == 0) {
      out << c;
      continue;
    }
    out << c << "*" << var_name(tag_) << "^";
    if (k % 2 == 0) {
      out << (k / 2);
    } else {
      out << "(" << k << "/2)";
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(i) + ": " + what);
  }
  BigInt integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer");
    return BigInt(s.substr(start, i - start));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Cursor c{text};
  bool tag_seen = false;
  VarTag tag = VarTag::T;
  std::map<long long, BigInt> acc;
  bool any_term = false;
  int pending_sign = 1;
  while (!c.eof()) {
    if (any_term) {
      char op = c.peek();
      if (op == '+') {
        c.i++;
        pending_sign = 1;
      } else if (op == '-') {
        c.i++;
        pending_sign = -1;
      } else {
        c.fail("expected '+' or '-' between terms");
      }
    } else {
      pending_sign = 1;
    }
    BigInt coeff(1);
    bool have_coeff = false;
    char ch = c.peek();
    if (ch == '+' || ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      coeff = c.integer();
      have_coeff = true;
    }
    coeff *= pending_sign;
    long long key = 0;
    ch = c.peek();
    if (ch == '*' || ((ch == 't' || ch == 'A') && !have_coeff)) {
      if (ch == '*') {
        c.i++;
        ch = c.peek();
      }
      if (ch != 't' && ch != 'A') c.fail("expected variable 't' or 'A'");
      VarTag this_tag = ch == 'A' ? VarTag::A : VarTag::T;
      if (tag_seen && this_tag != tag) c.fail("mixed variables");
      tag = this_tag;
      tag_seen = true;
      c.i++;
      long long exp2 = 2;  // bare variable = exponent 1
      if (c.peek() == '^') {
        c.i++;
        if (c.peek() == '(') {
          c.i++;
          BigInt num = c.integer();
          if (c.peek() != '/') c.fail("expected '/' in fractional exponent");
          c.i++;
          BigInt den = c.integer();
          if (den != 2) c.fail("only half-integer exponents supported");
          if (c.peek() != ')') c.fail("expected ')'");
          c.i++;
          exp2 = static_cast<long long>(num);
        } else {
          exp2 = 2 * static_cast<long long>(c.integer());
        }
      }
      key = exp2;
    } else if (!have_coeff) {
      c.fail("expected term");
    }
    acc[key] += coeff;
    any_term = true;
  }
  if (!any_term) throw std::invalid_argument("empty polynomial text");
  LaurentPoly p(tag);
  for (auto& [k, v] : acc)
    if (v != 0) p.coeffs_.emplace(k, std::move(v));
  return p;
}

}  // namespace qak
