#pragma once

#include "wallcross/adhm.hpp"
#include "wallcross/strata.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wallcross::io {

using nlohmann::json;

// Matrices travel as row-major arrays of exact rational strings ("p" or
// "p/q"); integer JSON numbers are accepted on input. Emission is canonical,
// so serialize-parse roundtrips are bit-exact.
json matrix_to_json(const qlinalg::Matrix& m);
qlinalg::Matrix matrix_from_json(const json& j, long long rows, long long cols);

json rep_to_json(const adhm::BlowupQuiverRep& rep);
adhm::BlowupQuiverRep rep_from_json(const json& j);

// Plain-data mirror of the ledger, with fibers and normal bundles rendered.
// Everything is integers and strings; parse(serialize(doc)) == doc.

struct ClassDoc {
  long long r = 0, k = 0, ch2x2 = 0;
  friend bool operator==(const ClassDoc&, const ClassDoc&) = default;
};

struct NormalDoc {
  std::string side;
  long long i = 0, ambient_rank = 0, other_rank = 0;
  long long stratum_normal_rank = 0, fiber_normal_rank = 0;
  bool line_fiber = false;
  long long fiber_minus_ones = 0, fiber_trivials = 0;
  std::string rendered;
  friend bool operator==(const NormalDoc&, const NormalDoc&) = default;
};

struct StratumDoc {
  long long i = 0;
  ClassDoc vprime;
  long long rk_w_minus = 0, rk_w_plus = 0;
  long long dim_base = 0, dim_g_minus = 0, dim_g_plus = 0;
  long long codim_minus = 0, codim_plus = 0;
  std::string fiber_minus, fiber_plus;
  std::string fiber_minus_alias, fiber_plus_alias;
  NormalDoc normal_minus, normal_plus;
  friend bool operator==(const StratumDoc&, const StratumDoc&) = default;
};

struct SideDoc {
  std::string kind, k_sign;
  friend bool operator==(const SideDoc&, const SideDoc&) = default;
};

struct SodDoc {
  std::string status;  // "known" or "unknown"
  long long count = 0;
  ClassDoc base_class;
  long long base_dim = 0;
  friend bool operator==(const SodDoc&, const SodDoc&) = default;
};

struct WallDoc {
  long long m = 0;
  SideDoc minus, plus;
  std::vector<StratumDoc> strata;
  SodDoc sod;
  friend bool operator==(const WallDoc&, const WallDoc&) = default;
};

struct LedgerDocument {
  ClassDoc cls;
  long long moduli_dim = 0;
  long long m_stop = 0;
  bool full_mmp = true;  // false for the k != 0 per-wall fallback
  std::vector<WallDoc> walls;
  friend bool operator==(const LedgerDocument&, const LedgerDocument&) = default;
};

ClassDoc class_doc(const lattice::ChernCharacter& v);
LedgerDocument build_ledger_document(const strata::MmpLedger& ledger);
// Per-wall fallback for k != 0 classes.
LedgerDocument build_scan_document(const lattice::ChernCharacter& v);

json to_json(const LedgerDocument& doc);
LedgerDocument ledger_from_json(const json& j);

std::string render_text(const LedgerDocument& doc);

}  // namespace wallcross::io
