#pragma once

// nucideal command-line front end. Results go to `out`, progress and
// errors to `err`. Exit codes: 0 pass, 1 certificate failure, 2 usage
// error, 3 resource cap.

#include <CLI11.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nucideal/nucideal.hpp"
#include "nucideal/serialize.hpp"

namespace nucideal::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kResourceCap = 3 };

struct RunConfig {
  std::string command;
  std::string shape_text;
  std::string p_text = "2";
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  bool assume_primary = false;
  bool json = false;
  std::size_t samples = 1000;
  ResourceLimits limits;
};

struct Resolved {
  TensorShape shape;
  PTag p;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Json header(const std::string& command, const Resolved& r) {
  return Json{{"schema", kSchemaVersion}, {"command", command}, {"shape", shape_json(r.shape)}, {"p", r.p.to_string()}};
}

inline void merge(Json& dst, const Json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) {
    if (!dst.contains(it.key())) dst[it.key()] = it.value();
  }
}

inline void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---- gens ---------------------------------------------------------------

inline int command_gens(const RunConfig& cfg, const Resolved& r, std::ostream& out, std::ostream&) {
  IdealSpec ideal = build_ideal(r.shape, r.p);
  if (cfg.json) {
    Json doc = header("gens", r);
    merge(doc, to_json(ideal));
    emit(out, doc);
  } else {
    for (const auto& g : ideal.generators) out << format(g) << "\n";
  }
  return kPass;
}

// ---- gb-verify ----------------------------------------------------------

inline GroebnerCheck run_gb_check(const Resolved& r, const ResourceLimits& limits, std::ostream& err) {
  IdealSpec ideal = build_ideal(r.shape, r.p);
  err << "gb-verify: " << ideal.generators.size() << " generators, shape " << r.shape.to_string() << ", p = "
      << r.p.to_string() << "\n";
  return is_groebner_basis(std::span<const Polynomial>(ideal.generators), limits);
}

inline int command_gb_verify(const RunConfig& cfg, const Resolved& r, std::ostream& out, std::ostream& err) {
  auto check = run_gb_check(r, cfg.limits, err);
  if (cfg.json) {
    Json doc = header("gb-verify", r);
    merge(doc, to_json(check));
    emit(out, doc);
  } else {
    out << "Groebner basis: " << yes_no(check.is_gb) << " (" << check.spairs_checked << " S-pairs checked)\n";
    if (check.witness) {
      out << "witness pair (" << check.witness->first << ", " << check.witness->second
          << ") remainder: " << format(check.witness->remainder) << "\n";
    }
  }
  return check.is_gb ? kPass : kFail;
}

// ---- radical ------------------------------------------------------------

inline RadicalCertificate run_radical(const Resolved& r, const ResourceLimits& limits, std::ostream& err) {
  err << "radical: shape " << r.shape.to_string() << ", p = " << r.p.to_string() << "\n";
  if (r.p.kind() == PTag::Kind::zero) {
    auto mb = membership_basis(build_ideal(r.shape, r.p), limits);
    auto cert = squarefree_LT_certificate(mb.basis);
    cert.p_tag = r.p;
    if (!mb.note.empty()) cert.reasons.push_back(mb.note);
    return cert;
  }
  return seidenberg_certificate(r.shape, r.p, limits);
}

inline void print_reasons(std::ostream& out, const std::vector<std::string>& reasons) {
  for (const auto& s : reasons) out << "  - " << s << "\n";
}

inline int command_radical(const RunConfig& cfg, const Resolved& r, std::ostream& out, std::ostream& err) {
  auto cert = run_radical(r, cfg.limits, err);
  if (cfg.json) {
    Json doc = header("radical", r);
    merge(doc, to_json(cert));
    emit(out, doc);
  } else {
    out << "method: " << to_string(cert.method) << "\n"
        << "zero-dimensional: " << yes_no(cert.zero_dimensional) << "\n"
        << "radical: " << yes_no(cert.radical) << "\n";
    print_reasons(out, cert.reasons);
  }
  return cert.radical ? kPass : kFail;
}

// ---- prime --------------------------------------------------------------

inline void require_even(const Resolved& r, const std::string& command) {
  if (!r.p.is_even()) throw UsageError(command + " needs an even p (got " + r.p.to_string() + ")");
}

inline PrimalityCertificate run_prime(const RunConfig& cfg, const Resolved& r, std::ostream& err) {
  err << "prime: shape " << r.shape.to_string() << ", p = " << r.p.to_string() << "\n";
  PrimalityOptions opts;
  opts.limits = cfg.limits;
  return primality_certificate(r.shape, r.p, cfg.assume_primary, opts);
}

inline void print_prime(std::ostream& out, const PrimalityCertificate& c) {
  out << "J:";
  for (const auto& a : c.J.J) out << " " << a.to_string();
  out << "\n";
  out << "J independent: " << yes_no(c.independence.verified && c.independence.independent) << "\n";
  for (const auto& rec : c.records) {
    out << "  " << rec.a.variable_name() << " case " << rec.case_id << ": "
        << (rec.passed() ? "ok" : "FAILED") << "  H = " << format(rec.H) << "\n";
  }
  out << "primary: " << c.primary_source << "\n";
  out << "verdict: " << to_string(c.verdict);
  if (c.dimension) out << " (dimension " << *c.dimension << ")";
  out << "\n";
  print_reasons(out, c.reasons);
}

inline int command_prime(const RunConfig& cfg, const Resolved& r, std::ostream& out, std::ostream& err) {
  require_even(r, "prime");
  auto cert = run_prime(cfg, r, err);
  if (cfg.json) {
    Json doc = header("prime", r);
    merge(doc, to_json(cert));
    emit(out, doc);
  } else {
    print_prime(out, cert);
  }
  return cert.verdict == PrimeVerdict::prime ? kPass : kFail;
}

// ---- smooth -------------------------------------------------------------

inline int command_smooth(const RunConfig& cfg, const Resolved& r, std::ostream& out, std::ostream& err) {
  require_even(r, "smooth");
  auto prime = run_prime(cfg, r, err);
  err << "smooth: Jacobian at e_1 x ... x e_1\n";
  auto cert = smoothness_certificate(r.shape, r.p, prime.verdict == PrimeVerdict::prime);
  if (cfg.json) {
    Json doc = header("smooth", r);
    merge(doc, to_json(cert));
    emit(out, doc);
  } else {
    out << "on variety: " << yes_no(cert.on_variety) << "\n"
        << "Jacobian " << cert.jacobian_rows << "x" << cert.jacobian_cols << ", rank " << cert.rank
        << " (required " << cert.required_rank << ")\n"
        << "prime: " << yes_no(cert.prime_established) << "\n"
        << "real radical: " << yes_no(cert.real_radical) << "\n";
    print_reasons(out, cert.reasons);
  }
  return cert.real_radical ? kPass : kFail;
}

// ---- numeric ------------------------------------------------------------

struct NumericSummary {
  std::size_t samples = 0;
  double max_residual = 0.0;
  std::map<std::size_t, std::size_t> rank_histogram;
  std::optional<std::size_t> expected_rank;
  std::optional<double> nuclear_norm_max;
};

inline NumericSummary run_numeric(const RunConfig& cfg, const Resolved& r, std::ostream& err) {
  err << "numeric: " << cfg.samples << " samples, seed " << cfg.seed << "\n";
  const IdealSpec ideal = build_ideal(r.shape, r.p);
  NumericSummary s;
  s.samples = cfg.samples;
  if (r.p.is_even()) s.expected_rank = r.shape.num_entries() - static_cast<std::size_t>(dimension(r.shape));
  const bool matrix = r.shape.order() == 2;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    auto pt = sample_rank_one(r.shape, r.p, cfg.seed, i);
    s.max_residual = std::max(s.max_residual, max_generator_residual(pt, ideal));
    ++s.rank_histogram[numeric_jacobian_rank(ideal, pt)];
    if (matrix) {
      double nn = nuclear_norm_svd(as_matrix(pt));
      s.nuclear_norm_max = std::max(s.nuclear_norm_max.value_or(0.0), nn);
    }
  }
  return s;
}

inline Json to_json(const NumericSummary& s) {
  Json hist = Json::object();
  for (const auto& [rank, count] : s.rank_histogram) hist[std::to_string(rank)] = count;
  return Json{{"samples", s.samples},
              {"max_residual", s.max_residual},
              {"rank_histogram", hist},
              {"expected_rank", s.expected_rank ? Json(*s.expected_rank) : Json(nullptr)},
              {"nuclear_norm_max", s.nuclear_norm_max ? Json(*s.nuclear_norm_max) : Json(nullptr)}};
}

inline int command_numeric(const RunConfig& cfg, const Resolved& r, std::ostream& out, std::ostream& err) {
  auto s = run_numeric(cfg, r, err);
  if (cfg.json) {
    Json doc = header("numeric", r);
    doc["seed"] = cfg.seed;
    doc["tolerance"] = cfg.tolerance;
    merge(doc, to_json(s));
    emit(out, doc);
  } else {
    out << "samples: " << s.samples << "\n"
        << "max residual: " << s.max_residual << "\n"
        << "rank histogram:";
    for (const auto& [rank, count] : s.rank_histogram) out << " " << rank << ":" << count;
    out << "\n";
    if (s.nuclear_norm_max) out << "max nuclear norm: " << *s.nuclear_norm_max << "\n";
  }
  return s.max_residual <= cfg.tolerance ? kPass : kFail;
}

// ---- report -------------------------------------------------------------

inline int command_report(const RunConfig& cfg, const Resolved& r, std::ostream& out, std::ostream& err) {
  Json doc = header("report", r);
  Json verdicts = Json::object();
  Json certs = Json::object();
  bool ok = true;

  const IdealSpec ideal = build_ideal(r.shape, r.p);
  auto gb = run_gb_check(r, cfg.limits, err);
  verdicts["gb"] = gb.is_gb;
  certs["gb"] = to_json(gb);
  // Only claimed Groebner bases count towards the exit status.
  if (ideal.claimed_groebner) ok = ok && gb.is_gb;

  if (r.p.is_even()) {
    auto prime = run_prime(cfg, r, err);
    const bool is_prime = prime.verdict == PrimeVerdict::prime;
    auto smooth = smoothness_certificate(r.shape, r.p, is_prime);
    verdicts["prime"] = is_prime;
    verdicts["prime_verdict"] = to_string(prime.verdict);
    verdicts["smooth"] = smooth.real_radical;
    verdicts["dim"] = prime.dimension ? Json(*prime.dimension) : Json(nullptr);
    certs["prime"] = to_json(prime);
    certs["smooth"] = to_json(smooth);
    ok = ok && is_prime && smooth.real_radical;
  } else {
    auto rad = run_radical(r, cfg.limits, err);
    verdicts["radical"] = rad.radical;
    verdicts["radical_method"] = to_string(rad.method);
    verdicts["zero_dim"] = rad.zero_dimensional;
    certs["radical"] = to_json(rad);
    ok = ok && rad.radical;
  }

  doc["verdicts"] = verdicts;
  doc["pass"] = ok;
  doc["certificates"] = certs;
  if (cfg.json) {
    emit(out, doc);
  } else {
    for (auto it = verdicts.begin(); it != verdicts.end(); ++it) out << it.key() << ": " << it.value().dump() << "\n";
    out << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kPass : kFail;
}

// ---- entry point --------------------------------------------------------

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Resolved r{TensorShape::parse(cfg.shape_text), PTag::parse(cfg.p_text)};
  if (cfg.command == "gens") return command_gens(cfg, r, out, err);
  if (cfg.command == "gb-verify") return command_gb_verify(cfg, r, out, err);
  if (cfg.command == "radical") return command_radical(cfg, r, out, err);
  if (cfg.command == "prime") return command_prime(cfg, r, out, err);
  if (cfg.command == "smooth") return command_smooth(cfg, r, out, err);
  if (cfg.command == "numeric") return command_numeric(cfg, r, out, err);
  if (cfg.command == "report") return command_report(cfg, r, out, err);
  throw UsageError("unknown command " + cfg.command);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Certificates for nuclear p-norm ideals", "nucideal"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"gens", "print the generators of I_p"},
      {"gb-verify", "check Buchberger's criterion on the generators"},
      {"radical", "radicality certificate (p = 0, 1, inf)"},
      {"prime", "primality certificate (even p)"},
      {"smooth", "Jacobian / real radicality certificate (even p)"},
      {"numeric", "floating-point sampling oracle"},
      {"report", "all certificates for one (shape, p)"},
  };
  for (const auto& s : subs) {
    auto* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("--shape", cfg.shape_text, "tensor shape, e.g. 3x3 or 2x2x2")->required();
    sc->add_option("--p", cfg.p_text, "0, 1, inf or an even integer")->capture_default_str();
    sc->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sc->add_option("--tol", cfg.tolerance, "residual tolerance")->capture_default_str();
    sc->add_flag("--assume-primary", cfg.assume_primary, "assume I_p is primary (needed for p > 2)");
    sc->add_flag("--json", cfg.json, "emit JSON");
    sc->add_option("--samples", cfg.samples, "number of numeric samples")->capture_default_str();
    sc->add_option("--max-basis", cfg.limits.max_basis, "Groebner basis size cap")->capture_default_str();
    sc->add_option("--max-terms", cfg.limits.max_terms, "polynomial term cap")->capture_default_str();
    sc->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    return dispatch(cfg, out, err);
  } catch (const ResourceLimitError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const CertificateError& e) {
    err << "certificate error: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace nucideal::cli
