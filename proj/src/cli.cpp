#include "sppq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sppq/hull.hpp"
#include "sppq/omega.hpp"
#include "sppq/spin.hpp"
#include "sppq/verify.hpp"

namespace sppq::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

KWeight read_weight(const std::string& literal) {
  try {
    BlockVector v = parse_weight(literal);
    require_standard(v.shape());
    return KWeight(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

GroupShape read_shape(int p, int q) {
  try {
    GroupShape shape(p, q);
    require_standard(shape);
    return shape;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json envelope(const GroupShape& shape, const json& weight, json result) {
  return json{{"p", shape.p()},
              {"q", shape.q()},
              {"weight", weight},
              {"result", std::move(result)},
              {"version", kSchemaVersion}};
}

std::string fixed6(Int squared) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << std::sqrt(static_cast<double>(squared));
  return s.str();
}

std::string join(std::span<const Int> block) {
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(block[i]);
  }
  return out;
}

template <typename T>
std::string join_indices(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out;
}

// Runs `handle` on the single --weight literal, or on every line of `in`
// when the literal is "-". Stream mode prints one compact JSON object per
// line and keeps going past bad lines; the exit code is then the worst seen.
int for_each_weight(const std::string& literal, std::istream& in, std::ostream& out,
                    std::ostream& err, const std::function<int(const KWeight&, bool)>& handle) {
  if (literal != "-") return handle(read_weight(literal), false);
  int worst = kExitOk;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      worst = std::max(worst, handle(read_weight(line), true));
    } catch (const UsageError& e) {
      err << "error: line " << number << ": " << e.what() << '\n';
      worst = std::max(worst, kExitUsage);
    }
  }
  out.flush();
  return worst;
}

void emit(std::ostream& out, const json& doc, bool compact) {
  out << (compact ? doc.dump() : doc.dump(2)) << '\n';
}

// ---------------------------------------------------------------------------

int cmd_omega(int p, int q, std::optional<std::size_t> index, const std::string& format,
              std::ostream& out) {
  const GroupShape shape = read_shape(p, q);
  const OmegaTable& table = omega_table(shape);
  if (index && *index >= table.size()) {
    throw UsageError("index " + std::to_string(*index) + " out of range (size " +
                     std::to_string(table.size()) + ")");
  }
  const std::size_t lo = index ? *index : 0;
  const std::size_t hi = index ? *index + 1 : table.size();
  if (format == "table") {
    for (std::size_t i = lo; i < hi; ++i) {
      out << i << ": " << join(table.head(i)) << " | " << join(table.tail(i)) << '\n';
    }
    return kExitOk;
  }
  json elements = json::array();
  for (std::size_t i = lo; i < hi; ++i) {
    const auto e = table.element(i);
    elements.push_back({{"index", i}, {"head", e.head}, {"tail", e.tail}});
  }
  emit(out, envelope(shape, nullptr, {{"size", table.size()}, {"elements", elements}}), false);
  return kExitOk;
}

int cmd_spin(const KWeight& mu, bool all, bool with_sqrt, const std::string& format,
             std::ostream& out, bool compact) {
  const SpinResult r = spin_norm(mu);
  const std::vector<Int> values = all ? residual_k_values(mu) : std::vector<Int>{};
  if (format == "table") {
    out << "weight: " << format_weight(mu.vector()) << '\n';
    out << "spin_norm_sq: " << r.spin_norm_sq << '\n';
    if (with_sqrt) out << "spin_norm: " << fixed6(r.spin_norm_sq) << '\n';
    out << "argmin: " << join_indices(r.argmin_indices) << '\n';
    for (std::size_t ell = 0; ell < values.size(); ++ell) {
      out << ell << ": " << values[ell] << '\n';
    }
    return kExitOk;
  }
  json result{{"spin_norm_sq", r.spin_norm_sq},
              {"argmin", r.argmin_indices},
              {"first_argmin", r.first_argmin}};
  if (with_sqrt) result["spin_norm"] = fixed6(r.spin_norm_sq);
  if (all) result["k_values"] = values;
  emit(out, envelope(mu.shape(), format_weight(mu.vector()), result), compact);
  return kExitOk;
}

json witness_json(const HullWitness& w) {
  return json{{"f", w.f}, {"g", w.g}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

int cmd_usmall(const KWeight& mu, bool oracle, std::ostream& out, std::ostream& err, bool compact) {
  const auto witness = u_large_witness(mu);
  json result{{"u_small", !witness.has_value()},
              {"witness", witness ? witness_json(*witness) : json(nullptr)}};
  int code = kExitOk;
  if (oracle) {
    const bool by_oracle = is_u_small_oracle(mu);
    result["oracle_u_small"] = by_oracle;
    result["agree"] = by_oracle == !witness.has_value();
    if (by_oracle == witness.has_value()) {
      err << "error: u-small verdicts disagree for " << format_weight(mu.vector()) << '\n';
      code = kExitViolation;
    }
  }
  emit(out, envelope(mu.shape(), format_weight(mu.vector()), result), compact);
  return code;
}

int cmd_pencil(const KWeight& mu, Int steps, const std::string& format, std::ostream& out,
               bool compact) {
  if (steps < 0) throw UsageError("--steps must be nonnegative");
  const auto rows = pencil_profile(mu, steps);
  const Int first = pencil_first_u_large(mu);
  if (format == "csv") {
    out << "m,weight,u_small,spin_norm_sq\n";
    for (const auto& r : rows) {
      out << r.m << ",\"" << format_weight(shift_beta(mu.vector(), r.m)) << "\","
          << (r.u_small ? "true" : "false") << ',' << r.spin_norm_sq << '\n';
    }
    return kExitOk;
  }
  json table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"m", r.m},
                     {"weight", format_weight(shift_beta(mu.vector(), r.m))},
                     {"u_small", r.u_small},
                     {"spin_norm_sq", r.spin_norm_sq}});
  }
  emit(out,
       envelope(mu.shape(), format_weight(mu.vector()),
                {{"first_u_large", first}, {"rows", table}}),
       compact);
  return kExitOk;
}

int cmd_deficient(const KWeight& mu, std::ostream& out, bool compact) {
  const SpinResult spin = spin_norm(mu);
  json profiles = json::array();
  std::vector<std::size_t> deficient;
  const std::size_t size = omega_table(mu.shape()).size();
  for (std::size_t ell = 0; ell < size; ++ell) {
    const DeficiencyProfile d = deficiency_profile(mu, ell);
    if (!d.deficient) continue;
    deficient.push_back(ell);
    const auto delta = deficiency_delta_formula(d, mu.shape());
    profiles.push_back({{"ell", ell},
                        {"residual", format_weight(d.residual)},
                        {"M", d.M},
                        {"N", d.N},
                        {"M_plus", d.M_plus},
                        {"N_plus", d.N_plus},
                        {"k_value_sq", d.k_value_sq},
                        {"k_value_sq_minus_beta", d.k_value_sq_beta},
                        {"delta_formula", delta ? json(*delta) : json(nullptr)}});
  }
  json result{{"deficient", deficient},
              {"profiles", profiles},
              {"spin_norm_sq", spin.spin_norm_sq},
              {"argmin", spin.argmin_indices},
              {"region", std::string(region_name(classify_region(mu)))}};
  emit(out, envelope(mu.shape(), format_weight(mu.vector()), result), compact);
  return kExitOk;
}

struct VerifyArgs {
  int p = 0;
  int q = 0;
  std::optional<Int> cap;
  unsigned jobs = 1;
  std::string checkpoint;
  bool resume = false;
  std::uint64_t checkpoint_every = 100000;
  std::optional<std::uint64_t> stop_after;
  std::string format = "text";
};

int cmd_verify(const std::string& suite, const VerifyArgs& a, std::ostream& out) {
  const GroupShape shape = read_shape(a.p, a.q);
  SweepGrid grid = SweepGrid::with_default_cap(shape);
  if (a.cap) {
    if (*a.cap < 1) throw UsageError("--cap must be at least 1");
    grid.cap = *a.cap;
  }
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (a.resume && a.checkpoint.empty()) throw UsageError("--resume needs --checkpoint");

  SweepOptions options;
  options.jobs = a.jobs;
  options.resume = a.resume;
  options.checkpoint_every = a.checkpoint_every;
  options.stop_after = a.stop_after;
  if (!a.checkpoint.empty()) options.checkpoint_file = a.checkpoint;
  const bool text = a.format == "text";
  if (text) {
    options.on_counterexample = [&out](const Counterexample& c) {
      out << "counterexample: " << to_json(c).dump() << '\n' << std::flush;
    };
  }

  VerificationReport report = [&] {
    if (suite == "theorem") return verify_theorem(grid, options);
    if (suite == "properties") return verify_all_properties(grid, options);
    if (suite == "boundary") return verify_prop_boundary(grid, options);
    return verify_lemma_down(grid, options);
  }();

  if (text) {
    out << report.verdict() << ": " << suite << " p=" << shape.p() << " q=" << shape.q()
        << " cap=" << grid.cap << ", " << report.weights_scanned << " of " << report.total_weights
        << " weights scanned, " << report.counterexamples.size() << " counterexamples ("
        << std::fixed << std::setprecision(3) << report.wall_time.count() << " s)\n";
    for (const auto& c : report.claims) {
      out << "  " << c.name << ": " << c.checked << " checked, " << c.violations
          << " violations\n";
    }
    if (report.checkpoint) out << "resume from weight " << *report.checkpoint << '\n';
  } else {
    emit(out, report.to_json(), false);
  }
  return report.counterexamples.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spin norm, u-small hull and pencil computations for Sp(p,q)", "sppq"};
  app.require_subcommand(1);

  int p = 0, q = 0;
  std::optional<std::size_t> index;
  std::string omega_format, spin_format, pencil_format;
  std::string weight;
  bool all = false, with_sqrt = false, oracle = false;
  Int steps = 0;

  auto* omega = app.add_subcommand("omega", "List Omega_{p,q} in lexicographic order");
  omega->add_option("--p", p, "Size of the first block")->required();
  omega->add_option("--q", q, "Size of the second block")->required();
  omega->add_option("--index", index, "Print only this element");
  omega->add_option("--format", omega_format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_val("table");

  auto* spin = app.add_subcommand("spin", "Spin norm of a weight");
  spin->add_option("--weight", weight, "Weight literal a1,...,ap|b1,...,bq, or - for stdin")
      ->required();
  spin->add_flag("--all", all, "Also print the k-value at every index");
  spin->add_flag("--sqrt", with_sqrt, "Also print the square root with 6 decimals");
  spin->add_option("--format", spin_format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_val("json");

  auto* usmall = app.add_subcommand("usmall", "u-small hull membership");
  usmall->add_option("--weight", weight, "Weight literal, or - for stdin")->required();
  usmall->add_flag("--oracle", oracle, "Cross-check with the Weyl-orbit criterion");

  auto* pencil = app.add_subcommand("pencil", "Walk the pencil mu + m*beta");
  pencil->add_option("--weight", weight, "Weight literal, or - for stdin")->required();
  pencil->add_option("--steps", steps, "Largest m")->required();
  pencil->add_option("--format", pencil_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");

  auto* deficient = app.add_subcommand("deficient", "Deficient indices with their profiles");
  deficient->add_option("--weight", weight, "Weight literal, or - for stdin")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> suites;
  for (const char* name : {"theorem", "properties", "boundary", "lemma-down"}) {
    auto* sub = verify->add_subcommand(name, std::string("Run the ") + name + " sweep");
    sub->add_option("--p", va.p, "Size of the first block")->required();
    sub->add_option("--q", va.q, "Size of the second block")->required();
    sub->add_option("--cap", va.cap, "Largest a_1 and b_1 in the grid (default 2q+2)");
    sub->add_option("--jobs", va.jobs, "Worker threads");
    sub->add_option("--checkpoint", va.checkpoint, "Checkpoint file");
    sub->add_flag("--resume", va.resume, "Resume from the checkpoint file");
    sub->add_option("--checkpoint-every", va.checkpoint_every, "Weights per checkpoint")
        ->check(CLI::PositiveNumber);
    sub->add_option("--stop-after", va.stop_after, "Stop after this many weights");
    sub->add_option("--format", va.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    suites.emplace_back(name, sub);
  }

  std::vector<std::string> storage{"sppq"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (omega->parsed()) return cmd_omega(p, q, index, omega_format, out);
    if (spin->parsed()) {
      return for_each_weight(weight, in, out, err, [&](const KWeight& mu, bool compact) {
        return cmd_spin(mu, all, with_sqrt, spin_format, out, compact);
      });
    }
    if (usmall->parsed()) {
      return for_each_weight(weight, in, out, err, [&](const KWeight& mu, bool compact) {
        return cmd_usmall(mu, oracle, out, err, compact);
      });
    }
    if (pencil->parsed()) {
      return for_each_weight(weight, in, out, err, [&](const KWeight& mu, bool compact) {
        return cmd_pencil(mu, steps, pencil_format, out, compact);
      });
    }
    if (deficient->parsed()) {
      return for_each_weight(weight, in, out, err, [&](const KWeight& mu, bool compact) {
        return cmd_deficient(mu, out, compact);
      });
    }
    for (const auto& [name, sub] : suites) {
      if (sub->parsed()) return cmd_verify(name, va, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace sppq::cli
