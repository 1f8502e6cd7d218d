#ifndef QAKNOTS_LAURENT_HPP
#define QAKNOTS_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qak {

using BigInt = boost::multiprecision::cpp_int;

/// Variable tag for a Laurent polynomial. Arithmetic is tag-agnostic but
/// mixing tags in add/mul is rejected.
enum class VarTag { A, T };

/// Exact Laurent polynomial over the integers in one variable with
/// half-integer exponents. Exponent keys count half-units of the tag
/// variable: key k stands for x^(k/2), so t^(5/2) has key 5 and A^4 has
/// key 8. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() : tag_(VarTag::T) {}
  explicit LaurentPoly(VarTag tag) : tag_(tag) {}

  static LaurentPoly constant(VarTag tag, BigInt c) {
    LaurentPoly p(tag);
    if (c != 0) p.coeffs_[0] = std::move(c);
    return p;
  }
  static LaurentPoly monomial(VarTag tag, BigInt c, long long key) {
    LaurentPoly p(tag);
    if (c != 0) p.coeffs_[key] = std::move(c);
    return p;
  }
  static LaurentPoly one(VarTag tag) { return constant(tag, 1); }

  VarTag tag() const { return tag_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<long long, BigInt>& terms() const { return coeffs_; }

  BigInt coeff(long long key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  long long min_key() const {
    require_nonzero();
    return coeffs_.begin()->first;
  }
  long long max_key() const {
    require_nonzero();
    return coeffs_.rbegin()->first;
  }

  void set_coeff(long long key, BigInt c) {
    if (c == 0)
      coeffs_.erase(key);
    else
      coeffs_[key] = std::move(c);
  }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& o) const {
    return tag_ == o.tag_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Multiply by c * x^(dkey/2).
  LaurentPoly shifted(long long dkey, const BigInt& c = 1) const;
  LaurentPoly pow(unsigned n) const;
  /// x -> x^-1 (key negation); the Jones polynomial of the mirror link.
  LaurentPoly mirrored() const;
  /// Reinterpret under a different tag without touching exponents.
  LaurentPoly retagged(VarTag tag) const;

  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void require_nonzero() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no extreme exponent");
  }

  VarTag tag_;
  std::map<long long, BigInt> coeffs_;
};

/// Writhe-normalized bracket to Jones variable change: A^m -> (t^(1/2))^(-m/2)
/// per t^(1/2) = A^-2. Requires every A-exponent to be even (true for any
/// (-A)^(-3w)<D> of an oriented diagram).
LaurentPoly substitute_A_to_t(const LaurentPoly& bracket_poly);

/// Gaussian integer, used for exact evaluation at units of Z[i].
struct Gaussian {
  BigInt re, im;
  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
};

Gaussian gaussian_add(const Gaussian& a, const Gaussian& b);
Gaussian gaussian_mul(const Gaussian& a, const Gaussian& b);
bool gaussian_is_unit(const Gaussian& g);

/// Evaluate p at a Gaussian unit substituted for the half-power variable
/// x = tag^(1/2): result = sum c_k * point^k over stored keys k.
Gaussian eval_gaussian(const LaurentPoly& p, const Gaussian& point);

/// Dense coefficient view of a polynomial whose exponents are uniformly
/// spaced: V = t^r * sum a_i t^i (step one full exponent; for tag A the
/// step is A^4, matching the bracket's A^s sum a_i A^(4i) form).
struct GapReport {
  long long min_key = 0;  ///< r in half-units of the tag variable
  long long key_step = 2;
  std::vector<BigInt> coefficients;  ///< a_0..a_m, a_0 and a_m nonzero
  std::vector<int> gap_positions;    ///< indices i with 0<i<m and a_i=0
  bool strictly_alternating = false; ///< a_i*a_{i+1} < 0 for all i
  bool weakly_alternating = false;   ///< a_i*a_{i+1} <= 0 for all i
};

GapReport gap_report(const LaurentPoly& p);

}  // namespace qak

#endif
