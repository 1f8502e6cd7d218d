#include "qaknots/table.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace qak {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, int line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                ": unterminated quote");
  fields.push_back(cur);
  return fields;
}

Flag flag_from_text(const std::string& s, int line_no) {
  if (s == "yes") return Flag::yes;
  if (s == "no") return Flag::no;
  if (s == "unknown" || s.empty()) return Flag::unknown;
  throw std::invalid_argument("csv line " + std::to_string(line_no) +
                              ": bad flag value '" + s + "'");
}

const char* flag_to_text(Flag f) {
  switch (f) {
    case Flag::yes: return "yes";
    case Flag::no: return "no";
    default: return "unknown";
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<TableRow> table_from_csv(const std::string& text) {
  std::vector<TableRow> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto f = split_csv_line(line, line_no);
    if (line_no == 1 && !f.empty() && f[0] == "name") continue;  // header
    if (f.size() < 3 || f.size() > 6)
      throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                  ": expected 3 to 6 fields, got " +
                                  std::to_string(f.size()));
    TableRow r;
    r.name = f[0];
    r.pd = f[1];
    try {
      r.crossing_number = std::stoi(f[2]);
    } catch (const std::exception&) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                  ": bad crossing_number '" + f[2] + "'");
    }
    if (f.size() > 3) r.qa_status = flag_from_text(f[3], line_no);
    if (f.size() > 4) r.prime = flag_from_text(f[4], line_no);
    if (f.size() > 5 && !f[5].empty()) r.jones_expected = f[5];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "name,pd,crossing_number,qa_status,prime,jones_expected\n";
  for (const auto& r : rows) {
    out << csv_quote(r.name) << ',' << csv_quote(r.pd) << ',' << r.crossing_number
        << ',' << flag_to_text(r.qa_status) << ',' << flag_to_text(r.prime) << ','
        << csv_quote(r.jones_expected.value_or("")) << '\n';
  }
  return out.str();
}

std::vector<TableRow> table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json table parse error: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("json table must be an array");
  std::vector<TableRow> rows;
  for (const auto& o : j) {
    TableRow r;
    r.name = o.at("name").get<std::string>();
    r.pd = o.at("pd").get<std::string>();
    r.crossing_number = o.value("crossing_number", 0);
    r.qa_status = flag_from_text(o.value("qa_status", "unknown"), 0);
    r.prime = flag_from_text(o.value("prime", "unknown"), 0);
    if (o.contains("jones_expected") && !o.at("jones_expected").is_null())
      r.jones_expected = o.at("jones_expected").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

// Reversing one component of a link multiplies V by a power of t, so the
// torus screens compare polynomials with the support slid down to key 0.
LaurentPoly slid_to_zero(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(-p.min_key());
}

LaurentPoly torus_jones_cached(int n) {
  static std::map<int, LaurentPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, torus_2n_jones(n)).first;
  return it->second;
}

}  // namespace

bool matches_torus_2n(const LaurentPoly& v, const BigInt& det, int cap) {
  if (det < 2 || det > cap) return false;
  const LaurentPoly torus = torus_jones_cached(det.convert_to<int>());
  const LaurentPoly nv = slid_to_zero(v);
  return nv == slid_to_zero(torus) || nv == slid_to_zero(torus.mirrored());
}

namespace {

ScanRowReport scan_row(const TableRow& row) {
  ScanRowReport rep;
  rep.name = row.name;
  try {
    const PlanarDiagram d = pd_from_text(row.pd);
    const LaurentPoly v = jones(auto_orient(d));
    const BigInt det = determinant(d);
    LinkMetadata meta;
    meta.qa = row.qa_status;
    meta.prime = row.prime;
    meta.torus_2n = matches_torus_2n(v, det);
    const ConjectureVerdict cv = conjecture_check(v, meta);
    rep.verdict = cv.verdict;
    rep.torus_2n = meta.torus_2n;
    rep.gap_free = cv.gap_free;
    rep.strictly_alternating = cv.strictly_alternating;
    rep.note = cv.note;
    rep.breadth_ok = breadth_check(v, det);
    if (row.jones_expected) {
      const LaurentPoly expected = LaurentPoly::parse(*row.jones_expected);
      rep.jones_match = expected == v ? JonesMatch::match : JonesMatch::mismatch;
    }
  } catch (const std::exception& e) {
    rep.parse_error = true;
    rep.note = e.what();
  }
  return rep;
}

}  // namespace

ScanReport scan_table(const std::vector<TableRow>& rows) {
  ScanReport rep;
  rep.rows.resize(rows.size());
  const long long n = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i)
    rep.rows[static_cast<std::size_t>(i)] = scan_row(rows[static_cast<std::size_t>(i)]);
  for (const auto& r : rep.rows) {
    if (r.parse_error) {
      ++rep.n_errors;
      continue;
    }
    switch (r.verdict) {
      case Verdict::consistent: ++rep.n_consistent; break;
      case Verdict::counterexample_candidate: ++rep.n_candidates; break;
      case Verdict::out_of_scope: ++rep.n_out_of_scope; break;
    }
  }
  rep.exit_code = rep.n_candidates > 0 ? 1 : 0;
  return rep;
}

std::string report_to_text(const ScanReport& report) {
  std::ostringstream out;
  for (const auto& r : report.rows) {
    out << r.name << ": ";
    if (r.parse_error) {
      out << "error (" << r.note << ")\n";
      continue;
    }
    switch (r.verdict) {
      case Verdict::consistent: out << "consistent"; break;
      case Verdict::counterexample_candidate: out << "counterexample-candidate"; break;
      case Verdict::out_of_scope: out << "out-of-scope"; break;
    }
    out << " torus_2n=" << (r.torus_2n ? "yes" : "no")
        << " gap_free=" << (r.gap_free ? "yes" : "no")
        << " strictly_alternating=" << (r.strictly_alternating ? "yes" : "no")
        << " breadth=" << (r.breadth_ok ? "ok" : "violated");
    switch (r.jones_match) {
      case JonesMatch::absent: break;
      case JonesMatch::match: out << " jones=match"; break;
      case JonesMatch::mismatch: out << " jones=MISMATCH"; break;
    }
    if (!r.note.empty()) out << " (" << r.note << ')';
    out << '\n';
  }
  out << "summary: " << report.rows.size() << " rows, " << report.n_consistent
      << " consistent, " << report.n_candidates << " counterexample-candidates, "
      << report.n_out_of_scope << " out-of-scope, " << report.n_errors
      << " errors\n";
  return out.str();
}

namespace {

void enumerate_pairs(int budget, std::vector<std::pair<int, int>>& acc,
                     int n, std::vector<BaldwinNormalForm>& out) {
  if (!acc.empty()) {
    BaldwinNormalForm nf;
    nf.variant = BaldwinNormalForm::Variant::type1;
    nf.n = n;
    nf.pairs = acc;
    out.push_back(std::move(nf));
  }
  for (int p = 1; p + 1 <= budget; ++p)
    for (int q = 1; p + q <= budget; ++q) {
      acc.emplace_back(p, q);
      enumerate_pairs(budget - p - q, acc, n, out);
      acc.pop_back();
    }
}

}  // namespace

std::vector<BaldwinNormalForm> enumerate_baldwin_qa_forms(int max_letters) {
  std::vector<BaldwinNormalForm> out;
  using V = BaldwinNormalForm::Variant;
  for (int n : {-1, 0, 1}) {
    const int budget = max_letters - 6 * std::abs(n);
    std::vector<std::pair<int, int>> acc;
    if (budget >= 2) enumerate_pairs(budget, acc, n, out);
  }
  for (int m = -3; m <= -1; ++m)
    if (6 - m <= max_letters) {
      BaldwinNormalForm nf;
      nf.variant = V::type2;
      nf.n = 1;
      nf.m = m;
      out.push_back(nf);
    }
  for (int m = 1; m <= 3; ++m)
    if (6 + m <= max_letters) {
      BaldwinNormalForm nf;
      nf.variant = V::type2;
      nf.n = -1;
      nf.m = m;
      out.push_back(nf);
    }
  for (int n : {0, 1})
    for (int m = -3; m <= -1; ++m)
      if (6 * n - m + 1 <= max_letters) {
        BaldwinNormalForm nf;
        nf.variant = V::type3;
        nf.n = n;
        nf.m = m;
        out.push_back(nf);
      }
  return out;
}

std::vector<MontesinosData> sample_montesinos_qa(int max_crossings) {
  static const std::vector<std::pair<long long, long long>> kTangles = {
      {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 1}, {5, 2}, {5, 3}, {7, 2}};
  std::vector<MontesinosData> out;
  const int k = static_cast<int>(kTangles.size());
  for (long long e = -2; e <= 4; ++e)
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j)
        for (int l = j; l < k; ++l) {
          MontesinosData m;
          m.e = e;
          m.tangles = {kTangles[static_cast<std::size_t>(i)],
                       kTangles[static_cast<std::size_t>(j)],
                       kTangles[static_cast<std::size_t>(l)]};
          if (!montesinos_qa(m).qa) continue;
          const PlanarDiagram d = to_diagram(m);
          if (static_cast<int>(d.crossings.size()) > max_crossings) continue;
          out.push_back(std::move(m));
        }
  return out;
}

namespace {

// |V(-1)| from the polynomial; the value is purely real or purely imaginary.
BigInt eval_det(const LaurentPoly& v) {
  const Gaussian g = eval_gaussian(v, Gaussian{0, 1});
  const BigInt re = g.re < 0 ? BigInt(-g.re) : g.re;
  const BigInt im = g.im < 0 ? BigInt(-g.im) : g.im;
  return re > im ? re : im;
}

// V is multiplicative under connected sum, so a closure that is a connected
// sum of two (2,k)-torus links is recognized by factoring its determinant.
bool torus_connected_sum(const LaurentPoly& v, const BigInt& det) {
  if (det < 4 || det > 4096) return false;
  const long long d = det.convert_to<long long>();
  for (long long a = 2; a * a <= d; ++a) {
    if (d % a != 0) continue;
    const long long b = d / a;
    if (b > 128) continue;
    const LaurentPoly va = torus_jones_cached(static_cast<int>(a));
    const LaurentPoly vb = torus_jones_cached(static_cast<int>(b));
    for (const LaurentPoly& f1 : {va, va.mirrored()})
      for (const LaurentPoly& f2 : {vb, vb.mirrored()})
        if (slid_to_zero(v) == slid_to_zero(f1 * f2)) return true;
  }
  return false;
}

}  // namespace

std::vector<TableRow> builtin_fallback_table() {
  std::vector<TableRow> rows;
  for (const auto& nf : enumerate_baldwin_qa_forms(14)) {
    const BraidWord w = expand_normal_form(nf);
    const LaurentPoly v = birman_jones(w);
    TableRow r;
    r.name = normal_form_to_text(nf);
    r.pd = pd_to_text(closure(w));
    r.crossing_number = static_cast<int>(w.letters.size());
    r.qa_status = Flag::yes;
    // the unknot is excluded from the conjecture by the primeness convention;
    // connected sums of (2,k)-torus links arise from the reducible words
    BigInt det = eval_det(v);
    if (v == LaurentPoly::one(VarTag::T) || torus_connected_sum(v, det))
      r.prime = Flag::no;
    else
      r.prime = Flag::yes;
    r.jones_expected = v.to_string();
    rows.push_back(std::move(r));
  }
  for (const auto& m : sample_montesinos_qa(16)) {
    const PlanarDiagram d = to_diagram(m);
    TableRow r;
    r.name = montesinos_to_text(m);
    r.pd = pd_to_text(d);
    r.crossing_number = static_cast<int>(d.crossings.size());
    r.qa_status = Flag::yes;
    r.prime = Flag::yes;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace qak
