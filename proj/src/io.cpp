#include "wallcross/io.hpp"

#include <sstream>

namespace wallcross::io {

json matrix_to_json(const qlinalg::Matrix& m) {
  json out = json::array();
  for (long long r = 0; r < m.rows(); ++r)
    for (long long c = 0; c < m.cols(); ++c) out.push_back(format_rational(m.at(r, c)));
  return out;
}

qlinalg::Matrix matrix_from_json(const json& j, long long rows, long long cols) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array");
  if (static_cast<long long>(j.size()) != rows * cols)
    throw std::invalid_argument("matrix has " + std::to_string(j.size()) + " entries, expected " +
                                std::to_string(rows * cols));
  std::vector<Rational> entries;
  entries.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_string())
      entries.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      entries.push_back(Rational(e.get<long long>()));
    else
      throw std::invalid_argument("matrix entries must be rational strings or integers");
  }
  return qlinalg::Matrix::from_rows(rows, cols, std::move(entries));
}

json rep_to_json(const adhm::BlowupQuiverRep& rep) {
  json j;
  j["dims"] = {{"d0", rep.d0}, {"d1", rep.d1}, {"dinf", rep.dinf}};
  j["B1"] = matrix_to_json(rep.B1);
  j["B2"] = matrix_to_json(rep.B2);
  j["d"] = matrix_to_json(rep.d);
  j["i"] = matrix_to_json(rep.i_map);
  j["j"] = matrix_to_json(rep.j_map);
  return j;
}

adhm::BlowupQuiverRep rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims"))
    throw std::invalid_argument("representation file must be an object with a 'dims' field");
  const json& dims = j.at("dims");
  long long d0 = dims.at("d0").get<long long>();
  long long d1 = dims.at("d1").get<long long>();
  long long dinf = dims.at("dinf").get<long long>();
  return adhm::BlowupQuiverRep(d0, d1, dinf, matrix_from_json(j.at("B1"), d0, d1),
                               matrix_from_json(j.at("B2"), d0, d1),
                               matrix_from_json(j.at("d"), d1, d0),
                               matrix_from_json(j.at("i"), d0, dinf),
                               matrix_from_json(j.at("j"), dinf, d1));
}

ClassDoc class_doc(const lattice::ChernCharacter& v) {
  return {v.r(), v.k(), v.twice_ch2()};
}

namespace {

NormalDoc normal_doc(const strata::NormalBundleDescriptor& n) {
  NormalDoc d;
  d.side = strata::to_string(n.side);
  d.i = n.i;
  d.ambient_rank = n.ambient_rank;
  d.other_rank = n.other_rank;
  d.stratum_normal_rank = n.stratum_normal_rank;
  d.fiber_normal_rank = n.fiber_normal_rank;
  d.line_fiber = n.line_fiber;
  d.fiber_minus_ones = n.fiber_minus_ones;
  d.fiber_trivials = n.fiber_trivials;
  d.rendered = n.render();
  return d;
}

StratumDoc stratum_doc(const strata::StratumReport& s) {
  StratumDoc d;
  d.i = s.i;
  d.vprime = class_doc(s.vprime);
  d.rk_w_minus = s.rk_w_minus;
  d.rk_w_plus = s.rk_w_plus;
  d.dim_base = s.dim_base;
  d.dim_g_minus = s.dim_g_minus;
  d.dim_g_plus = s.dim_g_plus;
  d.codim_minus = s.codim_minus;
  d.codim_plus = s.codim_plus;
  auto fm = strata::stratum_fiber(s, strata::Side::Minus);
  auto fp = strata::stratum_fiber(s, strata::Side::Plus);
  d.fiber_minus = fm.name();
  d.fiber_plus = fp.name();
  d.fiber_minus_alias = fm.alias();
  d.fiber_plus_alias = fp.alias();
  d.normal_minus = normal_doc(strata::normal_bundle_descriptor(s.v, s.m, s.i, strata::Side::Minus));
  d.normal_plus = normal_doc(strata::normal_bundle_descriptor(s.v, s.m, s.i, strata::Side::Plus));
  return d;
}

SideDoc side_doc(const strata::ContractionReport& r) {
  return {strata::to_string(r.kind), strata::to_string(r.k_sign)};
}

WallDoc wall_doc(const strata::WallCrossing& w, const strata::SodSummary& sod) {
  WallDoc d;
  d.m = w.m;
  d.minus = side_doc(w.minus);
  d.plus = side_doc(w.plus);
  for (const auto& s : w.plus.per_stratum) d.strata.push_back(stratum_doc(s));
  d.sod.status = sod.known ? "known" : "unknown";
  d.sod.count = sod.known ? sod.count : 0;
  if (sod.known && sod.count > 0) {
    d.sod.base_class = class_doc(sod.base_class);
    d.sod.base_dim = sod.base_dim;
  }
  return d;
}

}  // namespace

LedgerDocument build_ledger_document(const strata::MmpLedger& ledger) {
  LedgerDocument doc;
  doc.cls = class_doc(ledger.v);
  doc.moduli_dim = lattice::moduli_dim(ledger.v);
  doc.m_stop = ledger.m_stop;
  doc.full_mmp = true;
  for (std::size_t w = 0; w < ledger.walls.size(); ++w)
    doc.walls.push_back(wall_doc(ledger.walls[w], ledger.sod[w]));
  return doc;
}

LedgerDocument build_scan_document(const lattice::ChernCharacter& v) {
  LedgerDocument doc;
  doc.cls = class_doc(v);
  doc.moduli_dim = lattice::moduli_dim(v);
  doc.full_mmp = false;
  auto walls = strata::wall_scan(v, &doc.m_stop);
  for (const auto& w : walls) doc.walls.push_back(wall_doc(w, strata::wall_sod_summary(v, w.m)));
  return doc;
}

namespace {

json to_json(const ClassDoc& c) { return {{"r", c.r}, {"k", c.k}, {"ch2x2", c.ch2x2}}; }

ClassDoc class_from_json(const json& j) {
  return {j.at("r").get<long long>(), j.at("k").get<long long>(), j.at("ch2x2").get<long long>()};
}

json to_json(const NormalDoc& n) {
  return {{"side", n.side},
          {"i", n.i},
          {"ambient_rank", n.ambient_rank},
          {"other_rank", n.other_rank},
          {"stratum_normal_rank", n.stratum_normal_rank},
          {"fiber_normal_rank", n.fiber_normal_rank},
          {"line_fiber", n.line_fiber},
          {"fiber_minus_ones", n.fiber_minus_ones},
          {"fiber_trivials", n.fiber_trivials},
          {"rendered", n.rendered}};
}

NormalDoc normal_from_json(const json& j) {
  NormalDoc n;
  n.side = j.at("side").get<std::string>();
  n.i = j.at("i").get<long long>();
  n.ambient_rank = j.at("ambient_rank").get<long long>();
  n.other_rank = j.at("other_rank").get<long long>();
  n.stratum_normal_rank = j.at("stratum_normal_rank").get<long long>();
  n.fiber_normal_rank = j.at("fiber_normal_rank").get<long long>();
  n.line_fiber = j.at("line_fiber").get<bool>();
  n.fiber_minus_ones = j.at("fiber_minus_ones").get<long long>();
  n.fiber_trivials = j.at("fiber_trivials").get<long long>();
  n.rendered = j.at("rendered").get<std::string>();
  return n;
}

json to_json(const StratumDoc& s) {
  return {{"i", s.i},
          {"vprime", to_json(s.vprime)},
          {"rk_w_minus", s.rk_w_minus},
          {"rk_w_plus", s.rk_w_plus},
          {"dim_base", s.dim_base},
          {"dim_g_minus", s.dim_g_minus},
          {"dim_g_plus", s.dim_g_plus},
          {"codim_minus", s.codim_minus},
          {"codim_plus", s.codim_plus},
          {"fiber_minus", s.fiber_minus},
          {"fiber_plus", s.fiber_plus},
          {"fiber_minus_alias", s.fiber_minus_alias},
          {"fiber_plus_alias", s.fiber_plus_alias},
          {"normal_minus", to_json(s.normal_minus)},
          {"normal_plus", to_json(s.normal_plus)}};
}

StratumDoc stratum_from_json(const json& j) {
  StratumDoc s;
  s.i = j.at("i").get<long long>();
  s.vprime = class_from_json(j.at("vprime"));
  s.rk_w_minus = j.at("rk_w_minus").get<long long>();
  s.rk_w_plus = j.at("rk_w_plus").get<long long>();
  s.dim_base = j.at("dim_base").get<long long>();
  s.dim_g_minus = j.at("dim_g_minus").get<long long>();
  s.dim_g_plus = j.at("dim_g_plus").get<long long>();
  s.codim_minus = j.at("codim_minus").get<long long>();
  s.codim_plus = j.at("codim_plus").get<long long>();
  s.fiber_minus = j.at("fiber_minus").get<std::string>();
  s.fiber_plus = j.at("fiber_plus").get<std::string>();
  s.fiber_minus_alias = j.at("fiber_minus_alias").get<std::string>();
  s.fiber_plus_alias = j.at("fiber_plus_alias").get<std::string>();
  s.normal_minus = normal_from_json(j.at("normal_minus"));
  s.normal_plus = normal_from_json(j.at("normal_plus"));
  return s;
}

json to_json(const SodDoc& s) {
  json j{{"status", s.status}, {"count", s.count}};
  if (s.status == "known" && s.count > 0) {
    j["base_class"] = to_json(s.base_class);
    j["base_dim"] = s.base_dim;
  }
  return j;
}

SodDoc sod_from_json(const json& j) {
  SodDoc s;
  s.status = j.at("status").get<std::string>();
  s.count = j.at("count").get<long long>();
  if (j.contains("base_class")) {
    s.base_class = class_from_json(j.at("base_class"));
    s.base_dim = j.at("base_dim").get<long long>();
  }
  return s;
}

json to_json(const WallDoc& w) {
  json strata = json::array();
  for (const auto& s : w.strata) strata.push_back(to_json(s));
  return {{"m", w.m},
          {"minus", {{"kind", w.minus.kind}, {"k_sign", w.minus.k_sign}}},
          {"plus", {{"kind", w.plus.kind}, {"k_sign", w.plus.k_sign}}},
          {"strata", strata},
          {"sod", to_json(w.sod)}};
}

WallDoc wall_from_json(const json& j) {
  WallDoc w;
  w.m = j.at("m").get<long long>();
  w.minus = {j.at("minus").at("kind").get<std::string>(),
             j.at("minus").at("k_sign").get<std::string>()};
  w.plus = {j.at("plus").at("kind").get<std::string>(),
            j.at("plus").at("k_sign").get<std::string>()};
  for (const auto& s : j.at("strata")) w.strata.push_back(stratum_from_json(s));
  w.sod = sod_from_json(j.at("sod"));
  return w;
}

}  // namespace

json to_json(const LedgerDocument& doc) {
  json walls = json::array();
  for (const auto& w : doc.walls) walls.push_back(to_json(w));
  return {{"class", to_json(doc.cls)},
          {"moduli_dim", doc.moduli_dim},
          {"m_stop", doc.m_stop},
          {"full_mmp", doc.full_mmp},
          {"walls", walls}};
}

LedgerDocument ledger_from_json(const json& j) {
  LedgerDocument doc;
  doc.cls = class_from_json(j.at("class"));
  doc.moduli_dim = j.at("moduli_dim").get<long long>();
  doc.m_stop = j.at("m_stop").get<long long>();
  doc.full_mmp = j.at("full_mmp").get<bool>();
  for (const auto& w : j.at("walls")) doc.walls.push_back(wall_from_json(w));
  return doc;
}

namespace {

std::string class_str(const ClassDoc& c) {
  std::string ch2 = c.ch2x2 % 2 == 0 ? std::to_string(c.ch2x2 / 2)
                                     : std::to_string(c.ch2x2) + "/2";
  return "(r=" + std::to_string(c.r) + ", k=" + std::to_string(c.k) + ", ch2=" + ch2 + ")";
}

std::string fiber_str(const std::string& name, const std::string& alias) {
  return alias.empty() ? name : name + " = " + alias;
}

}  // namespace

std::string render_text(const LedgerDocument& doc) {
  std::ostringstream out;
  out << "class v = " << class_str(doc.cls) << ", moduli dim " << doc.moduli_dim << "\n";
  if (!doc.full_mmp)
    out << "note: k != 0, per-wall reports only (no minimal-model guarantee)\n";
  out << "m_stop = " << doc.m_stop << ", walls reported: " << doc.walls.size() << "\n";
  for (const auto& w : doc.walls) {
    out << "wall m=" << w.m << ": plus " << w.plus.kind << " (" << w.plus.k_sign << "), minus "
        << w.minus.kind << " (" << w.minus.k_sign << ")\n";
    for (const auto& s : w.strata) {
      out << "  stratum i=" << s.i << ": v' = " << class_str(s.vprime) << ", base dim "
          << s.dim_base << ", rk W- = " << s.rk_w_minus << ", rk W+ = " << s.rk_w_plus << "\n";
      out << "    minus: fiber " << fiber_str(s.fiber_minus, s.fiber_minus_alias) << ", dim "
          << s.dim_g_minus << ", codim " << s.codim_minus << "\n";
      out << "    plus:  fiber " << fiber_str(s.fiber_plus, s.fiber_plus_alias) << ", dim "
          << s.dim_g_plus << ", codim " << s.codim_plus << "\n";
      out << "    normal (plus side): " << s.normal_plus.rendered << "\n";
    }
    if (w.sod.status == "unknown")
      out << "  sod: unknown (higher Grassmannian flip)\n";
    else if (w.sod.count == 0)
      out << "  sod: no extra summands\n";
    else
      out << "  sod: " << w.sod.count << " x D(base " << class_str(w.sod.base_class) << ", dim "
          << w.sod.base_dim << ")\n";
  }
  return out.str();
}

}  // namespace wallcross::io
