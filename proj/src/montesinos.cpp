#include "qaknots/montesinos.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qak {

ContinuedFraction continued_fraction(long long beta, long long alpha) {
  if (beta < 1 || alpha <= beta)
    throw std::invalid_argument("continued_fraction requires alpha > beta >= 1");
  if (std::gcd(alpha, beta) != 1)
    throw std::invalid_argument("continued_fraction requires coprime alpha, beta");
  // Euclidean quotients of alpha/beta, then reversed into ascending form.
  std::vector<long long> q;
  long long a = alpha, b = beta;
  while (b != 0) {
    q.push_back(a / b);
    long long r = a % b;
    a = b;
    b = r;
  }
  std::reverse(q.begin(), q.end());
  // canonical representative: fold a leading 1 ([1,a,...] == [a+1,...])
  if (q.size() > 1 && q.front() == 1) {
    q.erase(q.begin());
    q.front() += 1;
  }
  return {q};
}

std::vector<BigInt> t_sequence(const ContinuedFraction& cf) {
  std::vector<BigInt> t;
  t.reserve(cf.terms.size() + 1);
  t.emplace_back(1);
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    BigInt next = BigInt(cf.terms[i]) * t.back();
    if (i >= 1) next += t[i - 1];
    t.push_back(std::move(next));
  }
  return t;
}

BigRat MontesinosData::e0() const {
  BigRat acc(e);
  for (auto [alpha, beta] : tangles) acc -= BigRat(beta, alpha);
  return acc;
}

void validate(const MontesinosData& m) {
  if (m.tangles.empty()) throw std::invalid_argument("Montesinos data needs r >= 1");
  for (auto [alpha, beta] : m.tangles) {
    if (alpha < 2) throw std::invalid_argument("tangle alpha must be > 1");
    if (std::gcd(alpha, std::llabs(beta)) != 1 || beta == 0)
      throw std::invalid_argument("tangle (alpha, beta) must be coprime with beta != 0");
  }
}

bool is_standard(const MontesinosData& m) {
  for (auto [alpha, beta] : m.tangles)
    if (beta <= 0 || beta >= alpha) return false;
  return true;
}

MontesinosData standardize(const MontesinosData& m) {
  validate(m);
  MontesinosData out;
  out.e = m.e;
  for (auto [alpha, beta] : m.tangles) {
    long long bp = ((beta % alpha) + alpha) % alpha;
    if (bp == 0)
      throw std::invalid_argument("beta divisible by alpha violates coprimality");
    out.tangles.emplace_back(alpha, bp);
    out.e += (bp - beta) / alpha;  // beta = beta' - k*alpha keeps e_0 fixed
  }
  return out;
}

bool equivalent(const MontesinosData& m1, const MontesinosData& m2) {
  const MontesinosData a = standardize(m1), b = standardize(m2);
  auto check_scope = [](const MontesinosData& m) {
    if (m.r() < 3) throw std::domain_error("classification needs r >= 3");
    BigRat s(0);
    for (auto [alpha, beta] : m.tangles) {
      (void)beta;
      s += BigRat(1, alpha);
    }
    if (s > BigRat(static_cast<long long>(m.r()) - 2))
      throw std::domain_error("classification needs sum 1/alpha_j <= r-2");
  };
  check_scope(a);
  check_scope(b);
  if (a.r() != b.r()) return false;
  if (a.e0() != b.e0()) return false;
  auto fractions = [](const MontesinosData& m) {
    std::vector<BigRat> f;
    for (auto [alpha, beta] : m.tangles) f.emplace_back(beta, alpha);
    return f;
  };
  const auto fa = fractions(a);
  std::vector<BigRat> fb = fractions(b);
  const std::size_t r = fa.size();
  for (int rev = 0; rev < 2; ++rev) {
    for (std::size_t shift = 0; shift < r; ++shift) {
      bool match = true;
      for (std::size_t i = 0; i < r && match; ++i)
        match = fa[i] == fb[(i + shift) % r];
      if (match) return true;
    }
    std::reverse(fb.begin(), fb.end());
  }
  return false;
}

BigInt determinant_formula(const MontesinosData& m) {
  validate(m);
  BigRat s(-m.e);
  BigInt prod(1);
  for (auto [alpha, beta] : m.tangles) {
    s += BigRat(beta, alpha);
    prod *= alpha;
  }
  const BigRat det = BigRat(prod) * s;
  BigInt num = boost::multiprecision::numerator(det);
  if (boost::multiprecision::denominator(det) != 1)
    throw std::logic_error("Montesinos determinant did not reduce to an integer");
  return num < 0 ? BigInt(-num) : num;
}

QaVerdict montesinos_qa(const MontesinosData& m) {
  validate(m);
  if (!is_standard(m))
    throw std::invalid_argument("montesinos_qa requires standard form; call standardize");
  const long long r = static_cast<long long>(m.r());
  if (m.e <= 0) return {true, QaReason::e_nonpositive};
  if (m.e >= r) return {true, QaReason::e_at_least_r};
  auto ratio_compl = [](std::pair<long long, long long> t) {
    return BigRat(t.first, t.first - t.second);  // alpha/(alpha-beta)
  };
  auto ratio = [](std::pair<long long, long long> t) {
    return BigRat(t.first, t.second);  // alpha/beta
  };
  if (m.e == 1) {
    for (std::size_t i = 0; i < m.tangles.size(); ++i) {
      bool any = false;
      BigRat best;
      for (std::size_t j = 0; j < m.tangles.size(); ++j) {
        if (j == i) continue;
        BigRat v = ratio(m.tangles[j]);
        if (!any || v < best) best = v;
        any = true;
      }
      if (any && ratio_compl(m.tangles[i]) > best)
        return {true, QaReason::e_one_clause};
    }
  }
  if (m.e == r - 1) {
    for (std::size_t i = 0; i < m.tangles.size(); ++i) {
      bool any = false;
      BigRat best;
      for (std::size_t j = 0; j < m.tangles.size(); ++j) {
        if (j == i) continue;
        BigRat v = ratio_compl(m.tangles[j]);
        if (!any || v < best) best = v;
        any = true;
      }
      if (any && ratio(m.tangles[i]) > best)
        return {true, QaReason::e_r_minus_one_clause};
    }
  }
  return {false, QaReason::none};
}

const char* qa_reason_text(QaReason r) {
  switch (r) {
    case QaReason::e_nonpositive: return "e <= 0";
    case QaReason::e_at_least_r: return "e >= r";
    case QaReason::e_one_clause: return "e = 1 tangle-ratio condition";
    case QaReason::e_r_minus_one_clause: return "e = r-1 tangle-ratio condition";
    case QaReason::none: return "no clause applies";
  }
  return "?";
}

namespace {

// Diagram assembly. Crossing emission follows the module's slot convention
// (under-strand at slots 0/2); chirality booleans select which strand of a
// twist region passes over. The concrete choices below are pinned by the
// determinant and Jones cross-checks in the test suite.
struct Builder {
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> joins;
  int next_arc = 0;
  int fresh() { return next_arc++; }

  // One crossing in a horizontal twist band (strands run east-west).
  // Returns the two new east ends (top, bottom).
  std::pair<int, int> hcross(int w_top, int w_bot, bool positive) {
    const int e_top = fresh(), e_bot = fresh();
    if (positive)
      crossings.push_back(Crossing{{w_bot, e_bot, e_top, w_top}});
    else
      crossings.push_back(Crossing{{w_top, w_bot, e_bot, e_top}});
    return {e_top, e_bot};
  }

  // One crossing in a vertical twist band (strands run north-south).
  // Returns the two new south ends (left, right).
  std::pair<int, int> vcross(int n_left, int n_right, bool positive) {
    const int s_left = fresh(), s_right = fresh();
    if (positive)
      crossings.push_back(Crossing{{n_right, n_left, s_left, s_right}});
    else
      crossings.push_back(Crossing{{n_left, s_left, s_right, n_right}});
    return {s_left, s_right};
  }
};

struct Tangle {
  int nw, ne, sw, se;
};

constexpr bool kHorizontalChirality = false;
constexpr bool kVerticalChirality = false;
constexpr bool kEDirection = true;  // chirality of the e > 0 half-twist band

// Rational tangle of slope beta/alpha (standard form), built by alternating
// twist regions read off the ascending continued fraction.
Tangle rational_tangle(Builder& b, long long alpha, long long beta) {
  const ContinuedFraction cf = continued_fraction(beta, alpha);
  const std::size_t n = cf.terms.size();
  Tangle t{};
  // Index i twists vertically iff i and n share parity; the start tangle is
  // the 0-tangle (two horizontal strands) or the infinity-tangle accordingly.
  const bool first_vertical = (n % 2 == 1);
  if (first_vertical) {
    t.nw = t.sw = b.fresh();
    t.ne = t.se = b.fresh();
  } else {
    t.nw = t.ne = b.fresh();
    t.sw = t.se = b.fresh();
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const long long count = cf.terms[i - 1];
    const bool vertical = ((n - i) % 2 == 0);
    for (long long k = 0; k < count; ++k) {
      if (vertical) {
        auto [sl, sr] = b.vcross(t.sw, t.se, kVerticalChirality);
        t.sw = sl;
        t.se = sr;
      } else {
        auto [et, eb] = b.hcross(t.ne, t.se, kHorizontalChirality);
        t.ne = et;
        t.se = eb;
      }
    }
  }
  return t;
}

}  // namespace

PlanarDiagram to_diagram(const MontesinosData& m_in) {
  const MontesinosData m = standardize(m_in);
  Builder b;
  std::vector<Tangle> ts;
  ts.reserve(m.r());
  for (auto [alpha, beta] : m.tangles) ts.push_back(rational_tangle(b, alpha, beta));
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    b.joins.emplace_back(ts[i].ne, ts[i + 1].nw);
    b.joins.emplace_back(ts[i].se, ts[i + 1].sw);
  }
  // e half-twists appended after the last tangle, then numerator closure.
  int top = ts.back().ne, bot = ts.back().se;
  for (long long k = 0; k < std::llabs(m.e); ++k) {
    auto [nt, nb] = b.hcross(top, bot, m.e > 0 ? kEDirection : !kEDirection);
    top = nt;
    bot = nb;
  }
  b.joins.emplace_back(top, ts.front().nw);
  b.joins.emplace_back(bot, ts.front().sw);

  // Merge joined arc labels and collect circles that touch no crossing.
  std::vector<int> parent(static_cast<std::size_t>(b.next_arc));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [a, c] : b.joins) {
    int ra = find(a), rc = find(c);
    if (ra != rc) parent[static_cast<std::size_t>(std::max(ra, rc))] = std::min(ra, rc);
  }
  PlanarDiagram d;
  std::set<int> used;
  for (const auto& x : b.crossings) {
    Crossing nx;
    for (int s = 0; s < 4; ++s) {
      nx[s] = find(x[s]);
      used.insert(nx[s]);
    }
    d.crossings.push_back(nx);
  }
  std::set<int> all;
  for (int a = 0; a < b.next_arc; ++a) all.insert(find(a));
  d.n_free_loops = static_cast<int>(all.size() - used.size());
  validate(d);
  return d;
}

MontesinosData montesinos_from_text(const std::string& text) {
  MontesinosData m;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("Montesinos parse error at position " +
                                std::to_string(i) + ": " + what);
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  };
  auto number = [&]() -> long long {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) fail("expected integer");
    return std::stoll(text.substr(start, i - start));
  };
  expect('M');
  expect('(');
  m.e = number();
  expect(';');
  while (true) {
    long long alpha = number();
    expect('/');
    long long beta = number();
    m.tangles.emplace_back(alpha, beta);
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(')');
  skip_ws();
  if (i != text.size()) fail("trailing input");
  validate(m);
  return m;
}

std::string montesinos_to_text(const MontesinosData& m) {
  std::ostringstream out;
  out << "M(" << m.e << ";";
  for (std::size_t i = 0; i < m.tangles.size(); ++i)
    out << (i ? ", " : " ") << m.tangles[i].first << "/" << m.tangles[i].second;
  out << ")";
  return out.str();
}

}  // namespace qak
