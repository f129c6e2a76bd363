#include "ptlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ptlab/catalog.hpp"
#include "ptlab/curve.hpp"
#include "ptlab/family.hpp"
#include "ptlab/qm.hpp"

namespace ptlab::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string theorems = "t1,t2,t3";
  std::string m_range;  // per-command default when empty
  int r_max = 8;
  int alpha_max = 8;
  std::vector<std::string> pairs;
  std::string format = "json";
  std::string output;
  int workers = 1;
  std::uint64_t seed = 1;
  bool audit_only = false;
  bool no_timing = false;
};

struct Range {
  int lo, hi;
};

Range parse_range(const std::string& s, int lo_limit, int hi_limit) {
  Range r{};
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(s);
      const std::string tail = s.substr(dots + 2);
      r.hi = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(s);
    }
  } catch (const std::logic_error&) {
    throw UsageError("--m expects N or A..B, got '" + s + "'");
  }
  if (r.lo > r.hi || r.lo < lo_limit || r.hi > hi_limit) {
    throw UsageError("--m must lie within " + std::to_string(lo_limit) + ".." + std::to_string(hi_limit));
  }
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// A named polynomial from the command line: F1..F3, f1..f18 or r-alpha-beta.
struct NamedPoly {
  std::string name;
  int r = 0;
  std::array<int, 3> h{};

  ExpPoly build(const FieldCtx& big) const { return ExpPoly::from_circle_form(big, static_cast<Word>(r), h); }
};

NamedPoly parse_poly(const std::string& tok) {
  NamedPoly p;
  p.name = tok;
  auto from_family = [&](const TrinomialFamily& f) {
    p.r = f.r;
    p.h = {0, f.beta, f.alpha};
  };
  try {
    if (tok.size() >= 2 && (tok[0] == 'F') && tok.find('-') == std::string::npos) {
      const int i = std::stoi(tok.substr(1));
      const TrinomialFamily* fams[] = {&kF1, &kF2, &kF3};
      if (i < 1 || i > 3) throw UsageError("unknown family " + tok);
      from_family(*fams[i - 1]);
      return p;
    }
    if (tok.size() >= 2 && tok[0] == 'f') {
      const auto& row = catalog_entry(std::stoi(tok.substr(1)));
      p.r = row.r;
      p.h = row.h;
      return p;
    }
    const auto parts = split(tok, '-');
    if (parts.size() == 3) {
      TrinomialFamily f{std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])};
      f.validate();
      from_family(f);
      return p;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
  }
  throw UsageError("cannot parse polynomial '" + tok + "' (use F1..F3, f1..f18 or r-alpha-beta)");
}

// Buffered records, emitted in order once the command finishes.
class Report {
 public:
  explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}
  void add(json rec) { records_.push_back(std::move(rec)); }

  void write(std::ostream& os, const std::string& format) const {
    if (format == "csv") {
      for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
      os << '\n';
      for (const auto& rec : records_) {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
          os << (i ? "," : "") << cell(rec.contains(columns_[i]) ? rec[columns_[i]] : json());
        }
        os << '\n';
      }
    } else {
      for (const auto& rec : records_) os << rec.dump() << '\n';
    }
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : " ") + cell(x);
      return s;
    }
    return v.dump();
  }

  std::vector<std::string> columns_;
  std::vector<json> records_;
};

int cmd_verify(const RunConfig& cfg, Report& rep) {
  const Range mr = parse_range(cfg.m_range, 1, 12);
  std::vector<TheoremId> ids;
  for (const auto& t : split(cfg.theorems, ',')) {
    auto id = parse_theorem(t);
    if (!id) throw UsageError("unknown theorem '" + t + "' (t1, t2, t3, nonexist)");
    ids.push_back(*id);
  }
  bool all_agree = true;
  for (TheoremId id : ids) {
    for (int m = mr.lo; m <= mr.hi; ++m) {
      const TheoremVerdict v = theorem_verdict(id, m, cfg.workers);
      json rec;
      rec["theorem"] = theorem_name(id);
      rec["m"] = m;
      rec["predicted"] = v.predicted ? json(*v.predicted) : json();
      rec["observed"] = v.observed;
      rec["agree"] = v.agree;
      rec["elapsed_ms"] = cfg.no_timing ? 0.0 : std::round(v.elapsed_ms * 1000) / 1000;
      rep.add(std::move(rec));
      all_agree = all_agree && v.agree;
    }
  }
  return all_agree ? 0 : 2;
}

int cmd_search(const RunConfig& cfg, Report& rep) {
  const Range mr = parse_range(cfg.m_range, 1, 8);
  if (cfg.r_max < 1 || cfg.r_max > 32 || cfg.alpha_max < 2 || cfg.alpha_max > 32) {
    throw UsageError("--r-max must be in 1..32 and --alpha-max in 2..32");
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> spot(0, 63);
  bool consistent = true;
  for (int m = mr.lo; m <= mr.hi; ++m) {
    const CircleCtx circle = CircleCtx::standard(m);
    const FieldCtx& big = circle.field();
    for (int r = 1; r <= cfg.r_max; ++r) {
      for (int a = 2; a <= cfg.alpha_max; ++a) {
        for (int b = 1; b < a; ++b) {
          const TrinomialFamily fam{r, a, b};
          const bool hit = is_pp_via_criterion(circle, static_cast<Word>(r), h_poly(fam, big));
          const bool sampled = spot(rng) == 0;
          bool brute_agrees = true;
          if (sampled) brute_agrees = is_permutation_bruteforce(big, instantiate(fam, big), cfg.workers) == hit;
          consistent = consistent && brute_agrees;
          if (!hit && brute_agrees) continue;
          json rec;
          rec["m"] = m;
          rec["r"] = r;
          rec["alpha"] = a;
          rec["beta"] = b;
          rec["permutes"] = hit;
          rec["spot_checked"] = sampled;
          rec["brute_force_agrees"] = brute_agrees;
          const CatalogEntry* row = find_catalog_entry(r, a, b);
          rec["catalog"] = row ? json(row->index) : json();
          rec["catalog_condition_holds"] = row ? json(row->holds(m)) : json();
          rep.add(std::move(rec));
        }
      }
    }
  }
  return consistent ? 0 : 2;
}

int cmd_qm(const RunConfig& cfg, Report& rep) {
  const Range mr = parse_range(cfg.m_range, 1, 8);
  if (cfg.pairs.empty()) throw UsageError("qm needs --pairs A:B[,C:D...]");
  std::vector<std::pair<NamedPoly, NamedPoly>> pairs;
  for (const auto& arg : cfg.pairs) {
    for (const auto& item : split(arg, ',')) {
      const auto sides = split(item, ':');
      if (sides.size() != 2) throw UsageError("pair '" + item + "' must look like A:B");
      pairs.emplace_back(parse_poly(sides[0]), parse_poly(sides[1]));
    }
  }
  for (int m = mr.lo; m <= mr.hi; ++m) {
    const FieldCtx big = new_field(2 * m);
    for (const auto& [pf, pg] : pairs) {
      const ExpPoly f = pf.build(big);
      const ExpPoly g = pg.build(big);
      json rec;
      rec["F"] = pf.name;
      rec["G"] = pg.name;
      rec["m"] = m;
      const bool fp = is_permutation_bruteforce(big, f, cfg.workers);
      const bool gp = is_permutation_bruteforce(big, g, cfg.workers);
      if (!fp || !gp) {
        rec["equivalent"] = json();
        rec["certificate"] = !fp ? "F-not-a-permutation" : "G-not-a-permutation";
        rep.add(std::move(rec));
        continue;
      }
      const QMSearch s = find_qm_witness(big, f, g);
      rec["equivalent"] = s.witness.has_value();
      if (s.witness) {
        rec["d"] = s.witness->d;
        rec["d_inv"] = *inverse_mod(s.witness->d, big.group_order());
        rec["A1"] = to_hex(s.witness->a1);
        rec["A2"] = to_hex(s.witness->a2);
        rec["certificate"] = "witness";
      } else {
        rec["certificate"] = s.step1.empty() ? "step1-empty" : "step2-exhausted";
      }
      rec["step1"] = s.step1;
      rep.add(std::move(rec));
    }
  }
  return 0;
}

int cmd_curve(const RunConfig& cfg, Report& rep) {
  const Range mr = parse_range(cfg.m_range, 1, cfg.audit_only ? 40 : 20);
  bool ok = true;
  for (int m = mr.lo; m <= mr.hi; ++m) {
    json rec;
    rec["m"] = m;
    if (cfg.audit_only) {
      const BoundAudit a = bound_audit(m);
      rec["bound"] = a.value_floor;
      rec["bound_real_sqrt"] = a.value_real;
      rec["affine_lower"] = a.affine_lower;
      rec["first_m"] = a.first_m_floor;
      rec["first_even_m"] = a.first_m_even;
    } else {
      const CurveReport c = count_H(m, cfg.workers);
      rec["affine"] = c.affine;
      rec["affine_y_nonzero"] = c.affine_y_nonzero;
      rec["infinity"] = c.infinity;
      rec["projective"] = c.projective;
      rec["bound_lo"] = c.bound_lo;
      rec["bound_hi"] = c.bound_hi;
      rec["verdict"] = verdict_name(c.verdict);
      const auto proj = static_cast<std::int64_t>(c.projective);
      ok = ok && proj >= c.bound_lo && proj <= c.bound_hi;
    }
    rep.add(std::move(rec));
  }
  return ok ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation trinomial toolkit over GF(2^(2m))", "ptlab"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m_range, "m or inclusive range A..B");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
  };

  auto* verify = app.add_subcommand("verify", "check the permutation theorems by brute force");
  common(verify);
  verify->add_option("--theorems", cfg.theorems, "comma list of t1,t2,t3,nonexist");
  verify->add_flag("--no-timing", cfg.no_timing, "report elapsed_ms as 0 for reproducible output");

  auto* search = app.add_subcommand("search", "scan (r, alpha, beta) for permutation trinomials");
  search->add_option("--r-max", cfg.r_max, "largest r");
  search->add_option("--alpha-max", cfg.alpha_max, "largest alpha");

  auto* qm = app.add_subcommand("qm", "classify pairs up to quasi-multiplicative equivalence");
  qm->add_option("--pairs", cfg.pairs, "A:B pairs; each side F1..F3, f1..f18 or r-alpha-beta");

  auto* curve = app.add_subcommand("curve", "count points on the nonexistence curve");
  curve->add_flag("--audit-only", cfg.audit_only, "only evaluate the bound arithmetic");

  common(search);
  common(qm);
  common(curve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    set_default_modulus_table(ModulusTable::from_env());
    if (cfg.m_range.empty()) cfg.m_range = *verify ? "1..9" : *curve ? "5" : "3";
    Report rep({});
    int status = 0;
    if (*verify) {
      rep = Report({"theorem", "m", "predicted", "observed", "agree", "elapsed_ms"});
      status = cmd_verify(cfg, rep);
    } else if (*search) {
      rep = Report({"m", "r", "alpha", "beta", "permutes", "spot_checked", "brute_force_agrees", "catalog",
                    "catalog_condition_holds"});
      status = cmd_search(cfg, rep);
    } else if (*qm) {
      rep = Report({"F", "G", "m", "equivalent", "d", "d_inv", "A1", "A2", "certificate", "step1"});
      status = cmd_qm(cfg, rep);
    } else {
      rep = Report(cfg.audit_only
                       ? std::vector<std::string>{"m", "bound", "bound_real_sqrt", "affine_lower", "first_m",
                                                  "first_even_m"}
                       : std::vector<std::string>{"m", "affine", "affine_y_nonzero", "infinity", "projective",
                                                  "bound_lo", "bound_hi", "verdict"});
      status = cmd_curve(cfg, rep);
    }
    if (cfg.output.empty()) {
      rep.write(out, cfg.format);
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw std::runtime_error("cannot write " + cfg.output);
      rep.write(file, cfg.format);
    }
    if (status == 2) err << "ptlab: disagreement found, see report\n";
    return status;
  } catch (const std::exception& e) {
    err << "ptlab: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ptlab::cli
