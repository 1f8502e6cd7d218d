#include "qaknots/quasialt.hpp"

#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace qak {

namespace {

bool is_unknot_diagram(const PlanarDiagram& d) {
  return d.crossings.empty() && d.n_free_loops == 1;
}

struct SearchContext {
  QaSearchBudget budget;
  long long nodes = 0;
  bool exhausted = false;
  std::string note;
  std::unordered_map<std::string, BigInt> det_cache;
  std::unordered_set<std::string> proven_qa;

  BigInt det(const PlanarDiagram& d, const std::string& key) {
    if (auto it = det_cache.find(key); it != det_cache.end()) return it->second;
    BigInt v = d.crossings.empty() && d.n_free_loops == 0 ? BigInt(0) : determinant(d);
    det_cache.emplace(key, v);
    return v;
  }
};

std::unique_ptr<QACertificate> search(const PlanarDiagram& raw, int depth,
                                      SearchContext& ctx) {
  if (depth > ctx.budget.max_depth || ctx.nodes >= ctx.budget.max_nodes) {
    ctx.exhausted = true;
    return nullptr;
  }
  ++ctx.nodes;
  const PlanarDiagram d = reduce_kinks(raw);
  const std::string key = canonical_key(d);
  auto leaf = [&](QACertificate::Status status) {
    auto node = std::make_unique<QACertificate>();
    node->diagram = d;
    node->status = status;
    node->det = ctx.det(d, key);
    ctx.proven_qa.insert(key);
    return node;
  };
  if (is_unknot_diagram(d)) return leaf(QACertificate::Status::unknot);
  const BigInt det_l = ctx.det(d, key);
  // A branch needs det(L0) + det(Linf) with both children at least 1.
  if (det_l >= 2) {
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
      const PlanarDiagram l0 = smooth(d, c, SmoothKind::zero);
      const PlanarDiagram linf = smooth(d, c, SmoothKind::infinity);
      const BigInt d0 = ctx.det(l0, canonical_key(l0));
      const BigInt dinf = ctx.det(linf, canonical_key(linf));
      if (d0 < 1 || dinf < 1 || d0 + dinf != det_l) continue;
      auto z = search(l0, depth + 1, ctx);
      if (!z) continue;
      auto f = search(linf, depth + 1, ctx);
      if (!f) continue;
      auto node = std::make_unique<QACertificate>();
      node->diagram = d;
      node->status = QACertificate::Status::branch;
      node->crossing_index = static_cast<int>(c);
      node->det = det_l;
      node->zero_child = std::move(z);
      node->infinity_child = std::move(f);
      ctx.proven_qa.insert(key);
      return node;
    }
  }
  if (is_connected(d) && is_alternating(d))
    return leaf(QACertificate::Status::reduced_alternating_nonsplit);
  return nullptr;
}

}  // namespace

QaSearchResult qa_search(const PlanarDiagram& d, const QaSearchBudget& budget) {
  SearchContext ctx;
  ctx.budget = budget;
  QaSearchResult res;
  res.certificate = search(d, 0, ctx);
  res.nodes_visited = ctx.nodes;
  if (!res.certificate) {
    res.inconclusive = true;
    res.note = ctx.exhausted
                   ? "budget exhausted (max_depth " + std::to_string(budget.max_depth) +
                         ", max_nodes " + std::to_string(budget.max_nodes) + ")"
                   : "no certifying crossing found within this diagram";
  }
  return res;
}

void validate_certificate(const QACertificate& cert) {
  const BigInt actual = cert.diagram.crossings.empty() && cert.diagram.n_free_loops == 0
                            ? BigInt(0)
                            : determinant(cert.diagram);
  if (actual != cert.det)
    throw std::logic_error("certificate node determinant mismatch");
  switch (cert.status) {
    case QACertificate::Status::unknot:
      if (!is_unknot_diagram(cert.diagram))
        throw std::logic_error("unknot leaf is not a 0-crossing circle");
      break;
    case QACertificate::Status::reduced_alternating_nonsplit:
      if (!is_connected(cert.diagram) || !is_alternating(cert.diagram))
        throw std::logic_error("alternating leaf fails connectivity/alternation");
      if (!(reduce_kinks(cert.diagram) == cert.diagram))
        throw std::logic_error("alternating leaf is not reduced");
      break;
    case QACertificate::Status::branch: {
      if (!cert.zero_child || !cert.infinity_child)
        throw std::logic_error("branch node missing children");
      if (cert.zero_child->det < 1 || cert.infinity_child->det < 1)
        throw std::logic_error("branch child determinant below 1");
      if (cert.zero_child->det + cert.infinity_child->det != cert.det)
        throw std::logic_error("branch determinant identity violated");
      validate_certificate(*cert.zero_child);
      validate_certificate(*cert.infinity_child);
      break;
    }
  }
}

namespace {

nlohmann::json cert_json(const QACertificate& c) {
  nlohmann::json j;
  j["pd"] = pd_to_text(c.diagram);
  j["det"] = c.det.str();
  switch (c.status) {
    case QACertificate::Status::unknot:
      j["status"] = "unknot";
      break;
    case QACertificate::Status::reduced_alternating_nonsplit:
      j["status"] = "reduced_alternating_nonsplit";
      break;
    case QACertificate::Status::branch:
      j["status"] = "branch";
      j["crossing_index"] = c.crossing_index;
      j["zero_child"] = cert_json(*c.zero_child);
      j["infinity_child"] = cert_json(*c.infinity_child);
      break;
  }
  return j;
}

}  // namespace

std::string certificate_to_json(const QACertificate& cert) {
  return cert_json(cert).dump(2);
}

LaurentPoly twist_bracket(const LaurentPoly& b0, const LaurentPoly& binf,
                          const TwistStep& step) {
  if (step.n < 1) throw std::invalid_argument("twist needs n >= 1");
  if (b0.tag() != VarTag::A || binf.tag() != VarTag::A)
    throw std::invalid_argument("twist_bracket expects A-tagged brackets");
  const int n = step.n;
  LaurentPoly lead = LaurentPoly::monomial(VarTag::A, 1, 2LL * n);  // A^n
  LaurentPoly tail(VarTag::A);
  for (int i = 0; i < n; ++i)
    tail += LaurentPoly::monomial(VarTag::A, (i % 2 == 0) ? 1 : -1,
                                  2LL * (n - 4 * i - 2));
  if (step.direction == TwistDirection::vertical)
    return lead * b0 + tail * binf;
  return tail * b0 + lead * binf;
}

PlanarDiagram twist_diagram(const PlanarDiagram& d, std::size_t index,
                            const TwistStep& step, bool allow_mirror) {
  if (index >= d.crossings.size())
    throw std::invalid_argument("twist_diagram: crossing index out of range");
  if (step.n < 1) throw std::invalid_argument("twist needs n >= 1");
  PlanarDiagram base = auto_orient(d);
  if (crossing_sign(base, index) < 0) {
    if (!allow_mirror)
      throw std::invalid_argument(
          "twist_diagram: crossing is negative; pass --mirror to mirror first");
    base = auto_orient(mirror(base));
    if (crossing_sign(base, index) < 0)
      throw std::logic_error("crossing still negative after mirroring");
  }
  // Normalize the tuple so the under-strand enters at slot 0; then ends are
  // a=SW, b=SE, c=NE, d=NW with the over-strand entering at NW.
  Crossing x = base.crossings[index];
  if ((*base.orientation)[index].under_in == 2)
    x = Crossing{{x[2], x[3], x[0], x[1]}};
  const int a = x[0], b = x[1], c = x[2], dd = x[3];

  PlanarDiagram out;
  out.n_free_loops = base.n_free_loops;
  for (std::size_t i = 0; i < base.crossings.size(); ++i)
    if (i != index) out.crossings.push_back(base.crossings[i]);

  int next_arc = 0;
  for (const auto& xx : base.crossings)
    for (int s = 0; s < 4; ++s) next_arc = std::max(next_arc, xx[s] + 1);
  auto fresh = [&] { return next_arc++; };

  const int n = step.n;
  if (step.direction == TwistDirection::vertical) {
    // side-by-side copies; all-A smoothing chains to the L0 connection
    int sw = a, nw = dd;
    for (int k = 0; k < n; ++k) {
      const int se = (k == n - 1) ? b : fresh();
      const int ne = (k == n - 1) ? c : fresh();
      out.crossings.push_back(Crossing{{sw, se, ne, nw}});
      sw = se;
      nw = ne;
    }
  } else {
    // stacked copies of the 90-degree rotated crossing; all-A smoothing
    // chains to the L_inf connection
    int sw = a, se = b;
    for (int k = 0; k < n; ++k) {
      const int nw = (k == n - 1) ? dd : fresh();
      const int ne = (k == n - 1) ? c : fresh();
      out.crossings.push_back(Crossing{{se, ne, nw, sw}});
      sw = nw;
      se = ne;
    }
  }
  validate(out);
  return out;
}

ConjectureVerdict conjecture_check(const LaurentPoly& jones_poly,
                                   const LinkMetadata& meta) {
  if (jones_poly.is_zero())
    throw std::invalid_argument("conjecture_check: zero Jones polynomial");
  ConjectureVerdict v;
  const GapReport rep = gap_report(jones_poly);
  v.gap_free = rep.gap_positions.empty();
  v.strictly_alternating = rep.strictly_alternating;
  if (meta.torus_2n) {
    v.verdict = Verdict::out_of_scope;
    v.note = "(2,n)-torus link, excluded by the conjecture";
    return v;
  }
  if (meta.qa != Flag::yes || meta.prime != Flag::yes) {
    v.verdict = Verdict::out_of_scope;
    v.note = meta.qa != Flag::yes ? "qa flag not affirmative" : "prime flag not affirmative";
    return v;
  }
  if (v.gap_free && v.strictly_alternating) {
    v.verdict = Verdict::consistent;
  } else {
    v.verdict = Verdict::counterexample_candidate;
    v.note = v.gap_free ? "coefficients not strictly alternating" : "gap in coefficients";
  }
  return v;
}

bool breadth_check(const LaurentPoly& jones_poly, const BigInt& det) {
  if (jones_poly.is_zero())
    throw std::invalid_argument("breadth_check: zero Jones polynomial");
  const long long breadth = (jones_poly.max_key() - jones_poly.min_key()) / 2;
  return det >= breadth;
}

}  // namespace qak
