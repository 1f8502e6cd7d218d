#include "qaknots/braid.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace qak {

void validate(const BraidWord& w) {
  if (w.strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
  for (int k : w.letters)
    if (k == 0 || std::abs(k) > w.strands - 1)
      throw std::invalid_argument("braid letter " + std::to_string(k) +
                                  " out of range for " + std::to_string(w.strands) +
                                  " strands");
}

BraidWord braid_from_text(const std::string& text, int strands) {
  BraidWord w;
  w.strands = strands;
  std::istringstream in(text);
  int k;
  while (in >> k) w.letters.push_back(k);
  if (!in.eof())
    throw std::invalid_argument("braid word parse error: expected signed integers");
  if (strands <= 0) {
    // infer minimal strand count
    int mx = 1;
    for (int letter : w.letters) mx = std::max(mx, std::abs(letter) + 1);
    w.strands = std::max(2, mx);
  }
  validate(w);
  return w;
}

std::string braid_to_text(const BraidWord& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    out << w.letters[i];
  }
  return out.str();
}

BurauMatrix burau_identity() {
  BurauMatrix r;
  r.at(0, 0) = LaurentPoly::one(VarTag::T);
  r.at(0, 1) = LaurentPoly(VarTag::T);
  r.at(1, 0) = LaurentPoly(VarTag::T);
  r.at(1, 1) = LaurentPoly::one(VarTag::T);
  return r;
}

BurauMatrix burau_mul(const BurauMatrix& a, const BurauMatrix& b) {
  BurauMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return r;
}

namespace {

BurauMatrix burau_generator(int letter) {
  const LaurentPoly zero(VarTag::T);
  const LaurentPoly one = LaurentPoly::one(VarTag::T);
  const LaurentPoly t = LaurentPoly::monomial(VarTag::T, 1, 2);
  const LaurentPoly tinv = LaurentPoly::monomial(VarTag::T, 1, -2);
  BurauMatrix r;
  switch (letter) {
    case 1:  // [[-t, 1], [0, 1]]
      r.at(0, 0) = -t; r.at(0, 1) = one; r.at(1, 0) = zero; r.at(1, 1) = one;
      break;
    case -1:  // [[-t^-1, t^-1], [0, 1]]
      r.at(0, 0) = -tinv; r.at(0, 1) = tinv; r.at(1, 0) = zero; r.at(1, 1) = one;
      break;
    case 2:  // [[1, 0], [t, -t]]
      r.at(0, 0) = one; r.at(0, 1) = zero; r.at(1, 0) = t; r.at(1, 1) = -t;
      break;
    case -2:  // [[1, 0], [1, -t^-1]]
      r.at(0, 0) = one; r.at(0, 1) = zero; r.at(1, 0) = one; r.at(1, 1) = -tinv;
      break;
    default:
      throw std::invalid_argument("Burau generator out of range");
  }
  return r;
}

}  // namespace

BurauMatrix burau(const BraidWord& w) {
  validate(w);
  if (w.strands != 3)
    throw std::invalid_argument("Burau representation implemented for 3 strands only");
  BurauMatrix r = burau_identity();
  for (int k : w.letters) r = burau_mul(r, burau_generator(k));
  return r;
}

void full_twist_check() {
  BraidWord h;
  h.strands = 3;
  h.letters = {1, 2, 1, 2, 1, 2};
  const BurauMatrix got = burau(h);
  const LaurentPoly t3 = LaurentPoly::monomial(VarTag::T, 1, 6);
  BurauMatrix want = burau_identity();
  want.at(0, 0) = t3;
  want.at(1, 1) = t3;
  if (!(got == want))
    throw std::logic_error("full twist self-test failed: psi((s1 s2)^3) != t^3 I");
}

LaurentPoly birman_jones(const BraidWord& w) {
  validate(w);
  if (w.strands != 3)
    throw std::invalid_argument("Birman formula applies to 3-braids");
  LaurentPoly body = burau(w).trace();
  body += LaurentPoly::monomial(VarTag::T, 1, 2);
  body += LaurentPoly::monomial(VarTag::T, 1, -2);
  const int e = w.exponent_sum();
  // (-sqrt t)^e = (-1)^e t^(e/2): key shift e, sign by parity
  return body.shifted(e, (e % 2 == 0) ? 1 : -1);
}

PlanarDiagram closure(const BraidWord& w) {
  validate(w);
  PlanarDiagram d;
  std::vector<CrossingOrientation> ori;
  const int n = w.strands;
  std::vector<int> cur(static_cast<std::size_t>(n));
  std::iota(cur.begin(), cur.end(), 1);
  int next_arc = n + 1;
  for (int k : w.letters) {
    const int i = std::abs(k) - 1;
    const int x = cur[static_cast<std::size_t>(i)];
    const int y = cur[static_cast<std::size_t>(i + 1)];
    const int bl = next_arc++;
    const int br = next_arc++;
    if (k > 0) {
      // strand i+1 over strand i; under runs top-left -> bottom-right
      d.crossings.push_back(Crossing{{x, bl, br, y}});
      ori.push_back(CrossingOrientation{0, 3});
    } else {
      d.crossings.push_back(Crossing{{y, x, bl, br}});
      ori.push_back(CrossingOrientation{0, 1});
    }
    cur[static_cast<std::size_t>(i)] = bl;
    cur[static_cast<std::size_t>(i + 1)] = br;
  }
  // close up: bottom of strand s rejoins its top arc
  std::unordered_map<int, int> parent;
  std::function<int(int)> find = [&](int a) {
    auto it = parent.find(a);
    if (it == parent.end() || it->second == a) return a;
    return it->second = find(it->second);
  };
  for (int s = 0; s < n; ++s) {
    int a = find(s + 1);
    int b = find(cur[static_cast<std::size_t>(s)]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  PlanarDiagram out;
  std::unordered_map<int, bool> used;
  for (const auto& x : d.crossings) {
    Crossing nx;
    for (int s = 0; s < 4; ++s) {
      nx[s] = find(x[s]);
      used[nx[s]] = true;
    }
    out.crossings.push_back(nx);
  }
  // strands that touch no crossing become free loops
  std::unordered_map<int, bool> loop_seen;
  for (int s = 0; s < n; ++s) {
    int r = find(s + 1);
    if (!used.count(r) && !loop_seen[r]) {
      loop_seen[r] = true;
      ++out.n_free_loops;
    }
  }
  if (!out.crossings.empty()) out.orientation = std::move(ori);
  validate(out);
  return out;
}

void validate(const BaldwinNormalForm& nf) {
  using V = BaldwinNormalForm::Variant;
  switch (nf.variant) {
    case V::type1:
      if (nf.pairs.empty()) throw std::invalid_argument("type1 needs at least one pair");
      for (auto [p, q] : nf.pairs)
        if (p < 1 || q < 1)
          throw std::invalid_argument("type1 pair entries must be positive");
      break;
    case V::type2:
      break;
    case V::type3:
      if (nf.m < -3 || nf.m > -1)
        throw std::invalid_argument("type3 m must lie in {-1,-2,-3}");
      break;
  }
}

BraidWord expand_normal_form(const BaldwinNormalForm& nf) {
  validate(nf);
  BraidWord w;
  w.strands = 3;
  auto push_power = [&](int gen, int count) {
    for (int i = 0; i < std::abs(count); ++i)
      w.letters.push_back(count >= 0 ? gen : -gen);
  };
  const int hreps = std::abs(nf.n);
  for (int i = 0; i < hreps; ++i) {
    if (nf.n > 0) {
      w.letters.insert(w.letters.end(), {1, 2, 1, 2, 1, 2});
    } else {
      // h^-1 = (s2^-1 s1^-1)^3
      w.letters.insert(w.letters.end(), {-2, -1, -2, -1, -2, -1});
    }
  }
  using V = BaldwinNormalForm::Variant;
  switch (nf.variant) {
    case V::type1:
      for (auto [p, q] : nf.pairs) {
        push_power(1, p);
        push_power(2, -q);
      }
      break;
    case V::type2:
      push_power(2, nf.m);
      break;
    case V::type3:
      push_power(1, nf.m);
      push_power(2, -1);
      break;
  }
  return w;
}

bool baldwin_qa(const BaldwinNormalForm& nf) {
  validate(nf);
  using V = BaldwinNormalForm::Variant;
  switch (nf.variant) {
    case V::type1:
      return nf.n >= -1 && nf.n <= 1;
    case V::type2:
      return (nf.n == 1 && nf.m >= -3 && nf.m <= -1) ||
             (nf.n == -1 && nf.m >= 1 && nf.m <= 3);
    case V::type3:
      return nf.n == 0 || nf.n == 1;
  }
  return false;
}

BaldwinNormalForm normal_form_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok)) throw std::invalid_argument("empty normal form text");
  BaldwinNormalForm nf;
  using V = BaldwinNormalForm::Variant;
  if (tok == "type1")
    nf.variant = V::type1;
  else if (tok == "type2")
    nf.variant = V::type2;
  else if (tok == "type3")
    nf.variant = V::type3;
  else
    throw std::invalid_argument("unknown normal form variant: " + tok);
  bool have_n = false, have_m = false, have_pairs = false;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value, got: " + tok);
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "n") {
      nf.n = std::stoi(val);
      have_n = true;
    } else if (key == "m") {
      nf.m = std::stoi(val);
      have_m = true;
    } else if (key == "pairs") {
      std::istringstream pv(val);
      std::string item;
      while (std::getline(pv, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("pair must look like p:q, got: " + item);
        nf.pairs.emplace_back(std::stoi(item.substr(0, colon)),
                              std::stoi(item.substr(colon + 1)));
      }
      have_pairs = true;
    } else {
      throw std::invalid_argument("unknown normal form key: " + key);
    }
  }
  if (!have_n) throw std::invalid_argument("normal form needs n=");
  if (nf.variant == V::type1 && !have_pairs)
    throw std::invalid_argument("type1 needs pairs=");
  if (nf.variant != V::type1 && !have_m)
    throw std::invalid_argument("type2/type3 need m=");
  validate(nf);
  return nf;
}

std::string normal_form_to_text(const BaldwinNormalForm& nf) {
  std::ostringstream out;
  using V = BaldwinNormalForm::Variant;
  switch (nf.variant) {
    case V::type1: {
      out << "type1 n=" << nf.n << " pairs=";
      for (std::size_t i = 0; i < nf.pairs.size(); ++i) {
        if (i) out << ',';
        out << nf.pairs[i].first << ':' << nf.pairs[i].second;
      }
      break;
    }
    case V::type2:
      out << "type2 n=" << nf.n << " m=" << nf.m;
      break;
    case V::type3:
      out << "type3 n=" << nf.n << " m=" << nf.m;
      break;
  }
  return out.str();
}

LaurentPoly torus_2n_jones(int n) {
  if (n < 2) throw std::invalid_argument("torus_2n_jones requires n >= 2");
  BraidWord w;
  w.strands = 2;
  w.letters.assign(static_cast<std::size_t>(n), 1);
  return jones(closure(w));
}

}  // namespace qak
