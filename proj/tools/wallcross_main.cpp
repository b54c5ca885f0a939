// Command-line front end: wall-crossing ledgers for framed sheaves on the
// blown-up plane, local flip geometry, cohomology vanishing tables, and
// quiver-representation checks.

#include "wallcross/bott.hpp"
#include "wallcross/grassflip.hpp"
#include "wallcross/io.hpp"
#include "wallcross/walls.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using wallcross::Rational;
using wallcross::lattice::ChernCharacter;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitScope = 3;
constexpr int kExitRelation = 4;

void emit(const json& doc, const std::string& format, const std::string& text) {
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

struct LedgerArgs {
  long long r = 0, k = 0, ch2x2 = 0;
  bool strict = false;
  std::string format = "text";
};

int run_ledger(const LedgerArgs& a) {
  if ((a.k - a.ch2x2) % 2 != 0) {
    std::cerr << "error: k and 2*ch2 must have equal parity (k/2 - ch2 integral)\n";
    return kExitBadInput;
  }
  ChernCharacter v(a.r, a.k, Rational(a.ch2x2, 2));
  if (v.r() <= 0) {
    std::cerr << "error: need rank r >= 1\n";
    return kExitBadInput;
  }
  wallcross::io::LedgerDocument doc;
  if (v.k() == 0) {
    doc = wallcross::io::build_ledger_document(wallcross::strata::mmp_ledger(v));
  } else {
    if (a.strict) {
      std::cerr << "error: k != 0 is outside the supported minimal-model scope (strict mode)\n";
      return kExitScope;
    }
    std::cerr << "warning: k != 0, emitting per-wall reports without minimal-model guarantees\n";
    doc = wallcross::io::build_scan_document(v);
  }
  emit(wallcross::io::to_json(doc), a.format, wallcross::io::render_text(doc));
  return kExitOk;
}

struct FlipArgs {
  long long i = 0, w_minus = 0, w_plus = 0;
  std::string format = "text";
};

int run_flip(const FlipArgs& a) {
  namespace gf = wallcross::grassflip;
  gf::FlipGeometry g = gf::geometry(a.i, a.w_minus, a.w_plus);
  auto dims = gf::determinantal_stratum_dims(a.i, a.w_minus, a.w_plus);
  auto sod = gf::sod_summand_count_standard(a.i, a.w_minus, a.w_plus);

  const char* kind = g.kind == gf::SurgeryKind::Flop          ? "flop"
                     : g.kind == gf::SurgeryKind::Divisorial  ? "divisorial"
                     : g.kind == gf::SurgeryKind::Flip        ? "flip"
                                                              : "isomorphism";
  json doc{{"i", g.i},
           {"w_minus", g.w_minus},
           {"w_plus", g.w_plus},
           {"dim_y", g.dim_y},
           {"exc_dim_minus", g.exc_dim_minus},
           {"exc_dim_plus", g.exc_dim_plus},
           {"canonical_weight", g.canonical_weight},
           {"kind", kind},
           {"stratum_dims", dims}};
  if (sod)
    doc["sod_count"] = *sod;
  else
    doc["sod_count"] = nullptr;

  std::ostringstream text;
  text << "Gr(" << g.i << ") local model, rk W- = " << g.w_minus << ", rk W+ = " << g.w_plus
       << "\n";
  text << "kind " << kind << ", dim Y = " << g.dim_y << ", exc dims (" << g.exc_dim_minus << ", "
       << g.exc_dim_plus << "), canonical det(S)-weight " << g.canonical_weight << "\n";
  text << "determinantal stratum dims:";
  for (auto d : dims) text << " " << d;
  text << "\n";
  if (sod)
    text << "sod summands: " << *sod << "\n";
  else
    text << "sod summands: unknown\n";
  emit(doc, a.format, text.str());
  return kExitOk;
}

struct BottArgs {
  long long n = 0, i = 0, kmax = 0;
  std::string format = "text";
};

int run_bott(const BottArgs& a) {
  json rows = json::array();
  std::ostringstream text;
  text << "H^1 vanishing on Gr(" << a.i << "," << a.n << "), twists k = 0.." << a.kmax << "\n";
  text << "k  T(x)Sym^k(S*)  S(x)Sym^k(S*)  Sym^k(S*)\n";
  for (long long k = 0; k <= a.kmax; ++k) {
    auto v = wallcross::bott::check_lemma_vanishing(a.n, a.i, k);
    rows.push_back({{"k", k},
                    {"tangent_twist", v.tangent_twist},
                    {"sub_twist", v.sub_twist},
                    {"sym_only", v.sym_only}});
    text << k << "  " << (v.tangent_twist ? "vanishes" : "NONZERO") << "       "
         << (v.sub_twist ? "vanishes" : "NONZERO") << "       "
         << (v.sym_only ? "vanishes" : "NONZERO") << "\n";
  }
  json doc{{"n", a.n}, {"i", a.i}, {"k_max", a.kmax}, {"rows", rows}};
  emit(doc, a.format, text.str());
  return kExitOk;
}

struct AdhmArgs {
  std::string file;
  long long m = 1;
  std::string format = "text";
};

int run_adhm(const AdhmArgs& a) {
  namespace ad = wallcross::adhm;
  json parsed;
  {
    std::ifstream in(a.file);
    if (!in) {
      std::cerr << "error: cannot open '" << a.file << "'\n";
      return kExitBadInput;
    }
    try {
      in >> parsed;
    } catch (const json::exception& e) {
      std::cerr << "error: bad JSON in '" << a.file << "': " << e.what() << "\n";
      return kExitBadInput;
    }
  }
  ad::BlowupQuiverRep rep = wallcross::io::rep_from_json(parsed);

  auto residual = ad::relation_residual_blowup(rep);
  if (!residual.is_zero()) {
    std::cerr << "error: quiver relation violated; residual =\n";
    for (long long r = 0; r < residual.rows(); ++r) {
      std::cerr << " ";
      for (long long c = 0; c < residual.cols(); ++c)
        std::cerr << " " << wallcross::format_rational(residual.at(r, c));
      std::cerr << "\n";
    }
    return kExitRelation;
  }

  auto cls = wallcross::lattice::from_dim_vector(
      wallcross::lattice::DimensionVector(rep.d0, rep.d1, rep.dinf));
  json doc;
  doc["dims"] = {{"d0", rep.d0}, {"d1", rep.d1}, {"dinf", rep.dinf}};
  doc["class"] = {{"r", cls.r()}, {"k", cls.k()}, {"ch2x2", cls.twice_ch2()}};
  doc["relation_ok"] = true;
  doc["m"] = a.m;
  doc["bn_index"] = ad::bn_index(rep, a.m);

  std::ostringstream text;
  text << "rep dims (" << rep.d0 << ", " << rep.d1 << ", " << rep.dinf << "), class (r=" << cls.r()
       << ", k=" << cls.k() << ", 2*ch2=" << cls.twice_ch2() << ")\n";
  text << "relation: ok\n";
  text << "bn index at m=" << a.m << ": " << doc["bn_index"].get<long long>() << "\n";

  if (a.m >= 1) {
    auto st = ad::m_stability_test(rep, a.m);
    doc["stability"] = {{"m", a.m}, {"cond1", st.cond1}, {"cond2", st.cond2},
                        {"stable", st.cond1 && st.cond2}};
    text << "stability at m=" << a.m << ": cond1 " << (st.cond1 ? "ok" : "fails") << ", cond2 "
         << (st.cond2 ? "ok" : "fails") << (st.cond1 && st.cond2 ? " -> stable" : " -> unstable")
         << "\n";
  } else {
    bool c1 = ad::zero_stability_partial(rep);
    doc["stability"] = {{"m", 0}, {"cond1", c1}, {"partial", true}};
    text << "stability at m=0 (partial, first condition only): "
         << (c1 ? "ok" : "fails") << "\n";
  }

  if (rep.d0 == rep.d1) {
    auto plane = ad::collapse_to_p2(rep);
    bool rel = ad::check_relation_p2(plane);
    bool stable = ad::is_stable_p2(plane);
    bool d_invertible = rep.d.is_invertible();
    doc["collapse"] = {{"relation_ok", rel}, {"stable", stable}, {"d_invertible", d_invertible}};
    text << "collapse to plane data: relation " << (rel ? "ok" : "VIOLATED") << ", stable "
         << (stable ? "yes" : "no") << ", d " << (d_invertible ? "invertible" : "singular") << "\n";
  }

  emit(doc, a.format, text.str());
  return kExitOk;
}

struct WallsArgs {
  std::string zeta0, zeta1;
  long long chamber = -1, wall = -1;
  std::string format = "text";
};

int run_walls(const WallsArgs& a) {
  namespace ws = wallcross::walls;
  json doc;
  std::ostringstream text;
  if (!a.zeta0.empty() || !a.zeta1.empty()) {
    if (a.zeta0.empty() || a.zeta1.empty()) {
      std::cerr << "error: --zeta0 and --zeta1 must be given together\n";
      return kExitBadInput;
    }
    ws::StabilityParam zeta{wallcross::parse_rational(a.zeta0), wallcross::parse_rational(a.zeta1)};
    ws::WallPosition pos = ws::classify_parameter(zeta);
    std::string kind = pos.kind == ws::PositionKind::Wall          ? "wall"
                       : pos.kind == ws::PositionKind::Chamber     ? "chamber"
                       : pos.kind == ws::PositionKind::ChamberZero ? "chamber_zero"
                                                                   : "unclassified";
    doc["kind"] = kind;
    text << kind;
    if (pos.kind == ws::PositionKind::Wall || pos.kind == ws::PositionKind::Chamber) {
      doc["m"] = pos.m;
      text << " m=" << pos.m;
    }
    text << "\n";
  } else if (a.chamber >= 0) {
    auto p = ws::chamber_sample(a.chamber);
    doc = {{"m", a.chamber},
           {"zeta0", wallcross::format_rational(p.zeta0)},
           {"zeta1", wallcross::format_rational(p.zeta1)}};
    text << "chamber " << a.chamber << " sample: (" << wallcross::format_rational(p.zeta0) << ", "
         << wallcross::format_rational(p.zeta1) << ")\n";
  } else if (a.wall >= 0) {
    auto c = ws::wall_between(a.wall);
    doc = {{"m", a.wall}, {"coeff_zeta0", c.first}, {"coeff_zeta1", c.second}};
    text << "wall " << a.wall << ": " << c.first << "*zeta0 + " << c.second << "*zeta1 = 0\n";
  } else {
    std::cerr << "error: give --zeta0/--zeta1, --chamber, or --wall\n";
    return kExitBadInput;
  }
  emit(doc, a.format, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wall-crossing calculator for framed sheaves on the blown-up plane"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a TOML-style file (command line wins)");

  LedgerArgs ledger;
  auto* cmd_ledger = app.add_subcommand("ledger", "minimal-model wall ledger for a class")->configurable()->fallthrough();
  cmd_ledger->add_option("--r", ledger.r, "rank")->required();
  cmd_ledger->add_option("--k", ledger.k, "exceptional-curve coefficient of -c1")->required();
  cmd_ledger->add_option("--ch2x2", ledger.ch2x2, "2*ch2 (integer)")->required();
  cmd_ledger->add_flag("--strict", ledger.strict, "fail instead of degrading on k != 0");
  cmd_ledger->add_option("--format", ledger.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  FlipArgs flip;
  auto* cmd_flip = app.add_subcommand("flip", "local Grassmannian flip geometry")->configurable()->fallthrough();
  cmd_flip->add_option("--i", flip.i, "stratum index")->required();
  cmd_flip->add_option("--wminus", flip.w_minus, "rank of W-")->required();
  cmd_flip->add_option("--wplus", flip.w_plus, "rank of W+")->required();
  cmd_flip->add_option("--format", flip.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  BottArgs bott;
  auto* cmd_bott = app.add_subcommand("bott", "H^1 vanishing table on a Grassmannian")->configurable()->fallthrough();
  cmd_bott->add_option("--n", bott.n, "ambient rank")->required();
  cmd_bott->add_option("--i", bott.i, "subspace rank")->required();
  cmd_bott->add_option("--kmax", bott.kmax, "largest twist")->required();
  cmd_bott->add_option("--format", bott.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  AdhmArgs adhm;
  auto* cmd_adhm = app.add_subcommand("adhm", "inspect a quiver representation file")->configurable()->fallthrough();
  cmd_adhm->add_option("--file", adhm.file, "JSON representation file")->required();
  cmd_adhm->add_option("--m", adhm.m, "chamber index for stability/BN checks");
  cmd_adhm->add_option("--format", adhm.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  WallsArgs walls;
  auto* cmd_walls = app.add_subcommand("walls", "classify stability parameters")->configurable()->fallthrough();
  cmd_walls->add_option("--zeta0", walls.zeta0, "first coordinate (rational)");
  cmd_walls->add_option("--zeta1", walls.zeta1, "second coordinate (rational)");
  cmd_walls->add_option("--chamber", walls.chamber, "sample a point of this chamber");
  cmd_walls->add_option("--wall", walls.wall, "coefficients of this wall");
  cmd_walls->add_option("--format", walls.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (cmd_ledger->parsed()) return run_ledger(ledger);
    if (cmd_flip->parsed()) return run_flip(flip);
    if (cmd_bott->parsed()) return run_bott(bott);
    if (cmd_adhm->parsed()) return run_adhm(adhm);
    if (cmd_walls->parsed()) return run_walls(walls);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
