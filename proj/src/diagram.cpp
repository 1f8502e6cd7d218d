#include "qaknots/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace qak {

namespace {

// Dense arc indexing: arc label -> [0, m).
struct ArcIndex {
  std::vector<int> labels;                 // dense -> label
  std::unordered_map<int, int> to_dense;   // label -> dense
  explicit ArcIndex(const PlanarDiagram& d) {
    for (const auto& x : d.crossings)
      for (int s = 0; s < 4; ++s)
        if (to_dense.emplace(x[s], static_cast<int>(labels.size())).second)
          labels.push_back(x[s]);
  }
  int size() const { return static_cast<int>(labels.size()); }
};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { reset(); }
  void reset() { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // Returns true when two classes merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

// Endpoint = (crossing, slot) pair; each arc has exactly two in a valid diagram.
struct Endpoints {
  std::vector<std::array<std::pair<int, int>, 2>> at;  // by dense arc
  explicit Endpoints(const PlanarDiagram& d, const ArcIndex& idx)
      : at(static_cast<std::size_t>(idx.size())) {
    std::vector<int> count(static_cast<std::size_t>(idx.size()), 0);
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i)
      for (int s = 0; s < 4; ++s) {
        int a = idx.to_dense.at(d.crossings[static_cast<std::size_t>(i)][s]);
        if (count[static_cast<std::size_t>(a)] >= 2)
          throw std::invalid_argument("arc " + std::to_string(idx.labels[static_cast<std::size_t>(a)]) +
                                      " appears more than twice");
        at[static_cast<std::size_t>(a)][static_cast<std::size_t>(count[static_cast<std::size_t>(a)]++)] = {i, s};
      }
    for (int a = 0; a < idx.size(); ++a)
      if (count[static_cast<std::size_t>(a)] != 2)
        throw std::invalid_argument("arc " + std::to_string(idx.labels[static_cast<std::size_t>(a)]) +
                                    " appears only once");
  }
  std::pair<int, int> other(int arc, int crossing, int slot) const {
    const auto& e = at[static_cast<std::size_t>(arc)];
    if (e[0] == std::make_pair(crossing, slot)) return e[1];
    return e[0];
  }
};

// Rebuilds a diagram after arc classes have been merged: surviving classes
// keep their smallest original label; classes that no longer touch any
// crossing become free loops.
PlanarDiagram rebuild(const std::vector<Crossing>& crossings, const ArcIndex& idx,
                      Dsu& dsu, int base_free_loops) {
  std::vector<int> rep_label(static_cast<std::size_t>(idx.size()), -1);
  for (int a = 0; a < idx.size(); ++a) {
    int r = dsu.find(a);
    int lbl = idx.labels[static_cast<std::size_t>(a)];
    auto& rl = rep_label[static_cast<std::size_t>(r)];
    if (rl < 0 || lbl < rl) rl = lbl;
  }
  PlanarDiagram out;
  out.crossings.reserve(crossings.size());
  std::set<int> used_classes;
  for (const auto& x : crossings) {
    Crossing nx;
    for (int s = 0; s < 4; ++s) {
      int r = dsu.find(idx.to_dense.at(x[s]));
      used_classes.insert(r);
      nx[s] = rep_label[static_cast<std::size_t>(r)];
    }
    out.crossings.push_back(nx);
  }
  std::set<int> all_classes;
  for (int a = 0; a < idx.size(); ++a) all_classes.insert(dsu.find(a));
  out.n_free_loops =
      base_free_loops + static_cast<int>(all_classes.size() - used_classes.size());
  return out;
}

void smoothing_pairs(SmoothKind kind, int (&p)[2][2]) {
  if (kind == SmoothKind::zero) {
    p[0][0] = 0; p[0][1] = 1; p[1][0] = 2; p[1][1] = 3;
  } else {
    p[0][0] = 0; p[0][1] = 3; p[1][0] = 1; p[1][1] = 2;
  }
}

LaurentPoly delta_poly() {
  LaurentPoly d = LaurentPoly::monomial(VarTag::A, -1, -4);
  d += LaurentPoly::monomial(VarTag::A, -1, 4);
  return d;  // -A^-2 - A^2
}

}  // namespace

void validate(const PlanarDiagram& d) {
  ArcIndex idx(d);
  Endpoints ends(d, idx);  // throws on bad arc multiplicity
  if (d.n_free_loops < 0) throw std::invalid_argument("negative free loop count");
  if (d.orientation) {
    if (d.orientation->size() != d.crossings.size())
      throw std::invalid_argument("orientation block size mismatch");
    for (const auto& co : *d.orientation) {
      if (co.under_in != 0 && co.under_in != 2)
        throw std::invalid_argument("under-in slot must be 0 or 2");
      if (co.over_in != 1 && co.over_in != 3)
        throw std::invalid_argument("over-in slot must be 1 or 3");
    }
    // Every arc must have one head and one tail.
    auto incoming = [&](int crossing, int slot) {
      const auto& co = (*d.orientation)[static_cast<std::size_t>(crossing)];
      return slot == co.under_in || slot == co.over_in;
    };
    for (int a = 0; a < idx.size(); ++a) {
      const auto& e = ends.at[static_cast<std::size_t>(a)];
      int heads = (incoming(e[0].first, e[0].second) ? 1 : 0) +
                  (incoming(e[1].first, e[1].second) ? 1 : 0);
      if (heads != 1)
        throw std::invalid_argument("inconsistent orientation at arc " +
                                    std::to_string(idx.labels[static_cast<std::size_t>(a)]));
    }
  }
}

int component_count(const PlanarDiagram& d) {
  ArcIndex idx(d);
  Endpoints ends(d, idx);
  const int n = static_cast<int>(d.crossings.size());
  std::vector<bool> passage_seen(static_cast<std::size_t>(2 * n), false);
  int comps = d.n_free_loops;
  for (int c0 = 0; c0 < n; ++c0)
    for (int s0 : {0, 1}) {
      if (passage_seen[static_cast<std::size_t>(2 * c0 + s0)]) continue;
      ++comps;
      int c = c0, s = s0;
      while (!passage_seen[static_cast<std::size_t>(2 * c + s % 2)]) {
        passage_seen[static_cast<std::size_t>(2 * c + s % 2)] = true;
        int out = (s + 2) % 4;
        int arc = idx.to_dense.at(d.crossings[static_cast<std::size_t>(c)][out]);
        auto [nc, ns] = ends.other(arc, c, out);
        c = nc;
        s = ns;
      }
    }
  return comps;
}

PlanarDiagram smooth(const PlanarDiagram& d, std::size_t index, SmoothKind kind) {
  if (index >= d.crossings.size())
    throw std::invalid_argument("smooth: crossing index out of range");
  ArcIndex idx(d);
  Dsu dsu(idx.size());
  int pairs[2][2];
  smoothing_pairs(kind, pairs);
  const Crossing& x = d.crossings[index];
  for (auto& pr : pairs)
    dsu.unite(idx.to_dense.at(x[pr[0]]), idx.to_dense.at(x[pr[1]]));
  std::vector<Crossing> rest;
  rest.reserve(d.crossings.size() - 1);
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    if (i != index) rest.push_back(d.crossings[i]);
  return rebuild(rest, idx, dsu, d.n_free_loops);
}

namespace {

BracketResult state_sum_impl(const PlanarDiagram& d, std::size_t cap, bool parallel) {
  const std::size_t c = d.crossings.size();
  if (c > cap)
    throw std::invalid_argument("state sum crossing cap exceeded (cap " +
                                std::to_string(cap) + ", diagram has " +
                                std::to_string(c) + ")");
  ArcIndex idx(d);
  const int m = idx.size();
  const int max_loops = m + d.n_free_loops + 1;

  // delta^k, dense A-key coefficients (keys -4k..4k, step 8).
  const LaurentPoly delta = delta_poly();
  std::vector<LaurentPoly> dpow(static_cast<std::size_t>(max_loops) + 1);
  dpow[0] = LaurentPoly::one(VarTag::A);
  for (int k = 1; k <= max_loops; ++k) dpow[static_cast<std::size_t>(k)] = dpow[static_cast<std::size_t>(k - 1)] * delta;

  if (c == 0) {
    if (d.n_free_loops == 0)
      throw std::invalid_argument("bracket of the empty diagram is undefined");
    return {dpow[static_cast<std::size_t>(d.n_free_loops - 1)], BracketEngine::state_sum};
  }

  // Accumulator key range: |2(a-b)| <= 2c plus delta power span 4(max_loops).
  const long long key_radius = 2 * static_cast<long long>(c) + 4LL * max_loops + 4;
  const std::size_t acc_size = static_cast<std::size_t>(key_radius) + 1;  // even keys only, index = (key+radius)/2

  std::vector<std::array<int, 4>> slot_arc(c);
  for (std::size_t i = 0; i < c; ++i)
    for (int s = 0; s < 4; ++s)
      slot_arc[i][static_cast<std::size_t>(s)] = idx.to_dense.at(d.crossings[i][s]);

  const std::uint64_t n_states = 1ull << c;

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<BigInt>& acc) {
    Dsu dsu(m);
    for (std::uint64_t state = lo; state < hi; ++state) {
      dsu.reset();
      int merges = 0;
      int b = 0;  // infinity smoothings
      for (std::size_t i = 0; i < c; ++i) {
        const bool inf = (state >> i) & 1ull;
        b += inf ? 1 : 0;
        const auto& sa = slot_arc[i];
        if (!inf) {
          merges += dsu.unite(sa[0], sa[1]) ? 1 : 0;
          merges += dsu.unite(sa[2], sa[3]) ? 1 : 0;
        } else {
          merges += dsu.unite(sa[0], sa[3]) ? 1 : 0;
          merges += dsu.unite(sa[1], sa[2]) ? 1 : 0;
        }
      }
      const int loops = m - merges + d.n_free_loops;
      const long long key0 = 2 * (static_cast<long long>(c) - 2 * b);  // A^(a-b)
      for (const auto& [k, coef] : dpow[static_cast<std::size_t>(loops - 1)].terms())
        acc[static_cast<std::size_t>((key0 + k + key_radius) / 2)] += coef;
    }
  };

  std::vector<BigInt> total(acc_size);
#ifdef _OPENMP
  if (parallel) {
    int nthreads = 1;
#pragma omp parallel
    {
#pragma omp single
      nthreads = omp_get_num_threads();
    }
    std::vector<std::vector<BigInt>> per_thread(static_cast<std::size_t>(nthreads),
                                                std::vector<BigInt>(acc_size));
#pragma omp parallel num_threads(nthreads)
    {
      const int t = omp_get_thread_num();
      const std::uint64_t chunk = (n_states + static_cast<std::uint64_t>(nthreads) - 1) /
                                  static_cast<std::uint64_t>(nthreads);
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
      const std::uint64_t hi = std::min(n_states, lo + chunk);
      if (lo < hi) run_range(lo, hi, per_thread[static_cast<std::size_t>(t)]);
    }
    for (const auto& acc : per_thread)
      for (std::size_t i = 0; i < acc_size; ++i) total[i] += acc[i];
  } else {
    run_range(0, n_states, total);
  }
#else
  (void)parallel;
  run_range(0, n_states, total);
#endif

  LaurentPoly out(VarTag::A);
  for (std::size_t i = 0; i < acc_size; ++i)
    if (total[i] != 0) out.set_coeff(2 * static_cast<long long>(i) - key_radius, total[i]);
  return {out, BracketEngine::state_sum};
}

}  // namespace

BracketResult bracket_state_sum_serial(const PlanarDiagram& d, std::size_t cap) {
  return state_sum_impl(d, cap, false);
}

BracketResult bracket_state_sum(const PlanarDiagram& d, std::size_t cap) {
  return state_sum_impl(d, cap, true);
}

namespace {

LaurentPoly skein_rec(const PlanarDiagram& d,
                      std::unordered_map<std::string, LaurentPoly>& memo) {
  if (d.crossings.empty()) {
    if (d.n_free_loops == 0)
      throw std::invalid_argument("bracket of the empty diagram is undefined");
    return delta_poly().pow(static_cast<unsigned>(d.n_free_loops - 1));
  }
  const std::string key = canonical_key(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  LaurentPoly r = skein_rec(smooth(d, 0, SmoothKind::zero), memo).shifted(2) +
                  skein_rec(smooth(d, 0, SmoothKind::infinity), memo).shifted(-2);
  memo.emplace(key, r);
  return r;
}

}  // namespace

BracketResult bracket_skein(const PlanarDiagram& d) {
  std::unordered_map<std::string, LaurentPoly> memo;
  return {skein_rec(d, memo), BracketEngine::skein_memo};
}

LaurentPoly bracket(const PlanarDiagram& d) {
  if (d.crossings.size() <= 16) return bracket_state_sum(d).poly;
  return bracket_skein(d).poly;
}

int crossing_sign(const PlanarDiagram& d, std::size_t i) {
  if (!d.orientation) throw std::invalid_argument("crossing_sign requires orientation");
  const auto& co = (*d.orientation)[i];
  return co.over_in == (co.under_in + 3) % 4 ? 1 : -1;
}

int writhe(const PlanarDiagram& d) {
  if (d.crossings.empty()) return 0;
  if (!d.orientation) throw std::invalid_argument("writhe requires orientation");
  int w = 0;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) w += crossing_sign(d, i);
  return w;
}

PlanarDiagram auto_orient(const PlanarDiagram& d) {
  if (d.orientation) return d;
  PlanarDiagram out = d;
  const int n = static_cast<int>(d.crossings.size());
  std::vector<CrossingOrientation> ori(static_cast<std::size_t>(n));
  if (n > 0) {
    ArcIndex idx(d);
    Endpoints ends(d, idx);
    std::vector<bool> passage_seen(static_cast<std::size_t>(2 * n), false);
    for (int c0 = 0; c0 < n; ++c0)
      for (int s0 : {0, 1}) {
        if (passage_seen[static_cast<std::size_t>(2 * c0 + s0)]) continue;
        int c = c0, s = s0;
        while (!passage_seen[static_cast<std::size_t>(2 * c + s % 2)]) {
          passage_seen[static_cast<std::size_t>(2 * c + s % 2)] = true;
          if (s % 2 == 0)
            ori[static_cast<std::size_t>(c)].under_in = s;
          else
            ori[static_cast<std::size_t>(c)].over_in = s;
          int out_slot = (s + 2) % 4;
          int arc = idx.to_dense.at(d.crossings[static_cast<std::size_t>(c)][out_slot]);
          auto [nc, ns] = ends.other(arc, c, out_slot);
          c = nc;
          s = ns;
        }
      }
  }
  out.orientation = std::move(ori);
  validate(out);
  return out;
}

LaurentPoly jones(const PlanarDiagram& d) {
  if (!d.orientation && !d.crossings.empty())
    throw std::invalid_argument("jones requires an oriented diagram");
  const int w = writhe(d);
  // (-A)^(-3w) = (-1)^w A^(-3w)
  const LaurentPoly norm =
      LaurentPoly::monomial(VarTag::A, (w % 2 == 0) ? 1 : -1, -6LL * w);
  return substitute_A_to_t(norm * bracket(d));
}

BigInt determinant(const PlanarDiagram& d) {
  const Gaussian v = eval_gaussian(jones(auto_orient(d)), {0, 1});
  if (v.re != 0 && v.im != 0)
    throw std::domain_error("determinant: evaluation is not purely real or imaginary");
  BigInt mag = v.re != 0 ? v.re : v.im;
  return mag < 0 ? BigInt(-mag) : mag;
}

bool is_alternating(const PlanarDiagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return true;
  ArcIndex idx(d);
  Endpoints ends(d, idx);
  std::vector<bool> passage_seen(static_cast<std::size_t>(2 * n), false);
  for (int c0 = 0; c0 < n; ++c0)
    for (int s0 : {0, 1}) {
      if (passage_seen[static_cast<std::size_t>(2 * c0 + s0)]) continue;
      std::vector<int> levels;
      int c = c0, s = s0;
      while (!passage_seen[static_cast<std::size_t>(2 * c + s % 2)]) {
        passage_seen[static_cast<std::size_t>(2 * c + s % 2)] = true;
        levels.push_back(s % 2);
        int out_slot = (s + 2) % 4;
        int arc = idx.to_dense.at(d.crossings[static_cast<std::size_t>(c)][out_slot]);
        auto [nc, ns] = ends.other(arc, c, out_slot);
        c = nc;
        s = ns;
      }
      // over/under must alternate cyclically along the strand
      for (std::size_t i = 0; i < levels.size(); ++i)
        if (levels[i] == levels[(i + 1) % levels.size()]) return false;
    }
  return true;
}

bool is_connected(const PlanarDiagram& d) {
  if (d.n_free_loops != 0) return false;
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return false;
  ArcIndex idx(d);
  Endpoints ends(d, idx);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int arc = idx.to_dense.at(d.crossings[static_cast<std::size_t>(c)][s]);
      auto [nc, ns] = ends.other(arc, c, s);
      (void)ns;
      if (!seen[static_cast<std::size_t>(nc)]) {
        seen[static_cast<std::size_t>(nc)] = true;
        ++reached;
        stack.push_back(nc);
      }
    }
  }
  return reached == n;
}

PlanarDiagram reduce_kinks(const PlanarDiagram& d) {
  PlanarDiagram cur = d;
  cur.orientation.reset();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.crossings.size(); ++i) {
      const Crossing& x = cur.crossings[i];
      int at = -1;
      for (int s = 0; s < 4; ++s)
        if (x[s] == x[(s + 1) % 4]) {
          at = s;
          break;
        }
      if (at < 0) continue;
      // Loop arc at slots (at, at+1): remove the crossing with the smoothing
      // that routes the strand straight through.
      SmoothKind kind = (at == 0 || at == 2) ? SmoothKind::infinity : SmoothKind::zero;
      PlanarDiagram next = smooth(cur, i, kind);
      // the smoothing absorbs the loop; it must not spawn a circle unless the
      // whole kink was an isolated unknot (X(l,l,m,m) shape)
      cur = std::move(next);
      changed = true;
      break;
    }
  }
  return cur;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram out;
  out.n_free_loops = d.n_free_loops;
  out.crossings.reserve(d.crossings.size());
  for (const auto& x : d.crossings)
    out.crossings.push_back(Crossing{{x[1], x[2], x[3], x[0]}});
  return out;
}

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b) {
  PlanarDiagram out = a;
  int shift = 0;
  for (const auto& x : a.crossings)
    for (int s = 0; s < 4; ++s) shift = std::max(shift, x[s] + 1);
  for (const auto& x : b.crossings) {
    Crossing nx;
    for (int s = 0; s < 4; ++s) nx[s] = x[s] + shift;
    out.crossings.push_back(nx);
  }
  out.n_free_loops = a.n_free_loops + b.n_free_loops;
  if (a.orientation && b.orientation) {
    out.orientation = *a.orientation;
    out.orientation->insert(out.orientation->end(), b.orientation->begin(),
                            b.orientation->end());
  } else {
    out.orientation.reset();
  }
  return out;
}

PlanarDiagram unknot_diagram() {
  PlanarDiagram d;
  d.n_free_loops = 1;
  return d;
}

std::string canonical_key(const PlanarDiagram& d) {
  std::vector<Crossing> xs = d.crossings;
  auto rotate2 = [](Crossing& x) {
    Crossing r{{x[2], x[3], x[0], x[1]}};
    if (r.arcs < x.arcs) x = r;
  };
  for (int iter = 0; iter < 4; ++iter) {
    for (auto& x : xs) rotate2(x);
    std::sort(xs.begin(), xs.end(),
              [](const Crossing& a, const Crossing& b) { return a.arcs < b.arcs; });
    // relabel by first appearance
    std::unordered_map<int, int> relabel;
    for (const auto& x : xs)
      for (int s = 0; s < 4; ++s)
        relabel.emplace(x[s], static_cast<int>(relabel.size()));
    bool identity = true;
    for (auto& x : xs)
      for (int s = 0; s < 4; ++s) {
        int nl = relabel[x[s]];
        if (nl != x[s]) identity = false;
        x[s] = nl;
      }
    if (identity && iter > 0) break;
  }
  std::ostringstream out;
  out << d.n_free_loops << ';';
  for (const auto& x : xs)
    out << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ';';
  return out.str();
}

std::string pd_to_text(const PlanarDiagram& d) {
  std::ostringstream out;
  for (const auto& x : d.crossings)
    out << "X(" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ")\n";
  for (int i = 1; i <= d.n_free_loops; ++i) out << "O(" << i << ")\n";
  if (d.orientation)
    for (std::size_t i = 0; i < d.orientation->size(); ++i)
      out << "D(" << i << "," << (*d.orientation)[i].under_in << ","
          << (*d.orientation)[i].over_in << ")\n";
  return out.str();
}

PlanarDiagram pd_from_text(const std::string& text) {
  PlanarDiagram d;
  std::map<std::size_t, CrossingOrientation> ori;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t i = 0;
    // any number of tuples per line
    while (true) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      auto fail = [&](const std::string& what) {
        throw std::invalid_argument("PD parse error at line " + std::to_string(lineno) +
                                    ", column " + std::to_string(i + 1) + ": " + what);
      };
      char kind = line[i];
      if (kind != 'X' && kind != 'O' && kind != 'D') fail("expected X(...), O(...) or D(...)");
      ++i;
      auto expect = [&](char c) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] != c) fail(std::string("expected '") + c + "'");
        ++i;
      };
      auto number = [&]() {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        if (i < line.size() && (line[i] == '-' || line[i] == '+')) ++i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (i == start) fail("expected integer");
        return std::stoi(line.substr(start, i - start));
      };
      expect('(');
      if (kind == 'X') {
        Crossing x;
        x[0] = number();
        expect(',');
        x[1] = number();
        expect(',');
        x[2] = number();
        expect(',');
        x[3] = number();
        expect(')');
        d.crossings.push_back(x);
      } else if (kind == 'O') {
        number();
        expect(')');
        ++d.n_free_loops;
      } else {
        int ci = number();
        expect(',');
        int u = number();
        expect(',');
        int o = number();
        expect(')');
        ori[static_cast<std::size_t>(ci)] = CrossingOrientation{u, o};
      }
    }
  }
  if (!ori.empty()) {
    std::vector<CrossingOrientation> v(d.crossings.size());
    for (const auto& [ci, co] : ori) {
      if (ci >= d.crossings.size())
        throw std::invalid_argument("orientation refers to missing crossing " +
                                    std::to_string(ci));
      v[ci] = co;
    }
    if (ori.size() != d.crossings.size())
      throw std::invalid_argument("orientation block must cover every crossing");
    d.orientation = std::move(v);
  }
  validate(d);
  return d;
}

std::string pd_to_json(const PlanarDiagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& x : d.crossings) j["crossings"].push_back({x[0], x[1], x[2], x[3]});
  j["free_loops"] = d.n_free_loops;
  if (d.orientation) {
    j["orientation"] = nlohmann::json::array();
    for (const auto& co : *d.orientation)
      j["orientation"].push_back({co.under_in, co.over_in});
  } else {
    j["orientation"] = nullptr;
  }
  return j.dump();
}

PlanarDiagram pd_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  PlanarDiagram d;
  for (const auto& jx : j.at("crossings")) {
    Crossing x;
    for (int s = 0; s < 4; ++s) x[s] = jx.at(static_cast<std::size_t>(s)).get<int>();
    d.crossings.push_back(x);
  }
  d.n_free_loops = j.at("free_loops").get<int>();
  if (j.contains("orientation") && !j.at("orientation").is_null()) {
    std::vector<CrossingOrientation> v;
    for (const auto& jo : j.at("orientation"))
      v.push_back({jo.at(0).get<int>(), jo.at(1).get<int>()});
    d.orientation = std::move(v);
  }
  validate(d);
  return d;
}

}  // namespace qak
