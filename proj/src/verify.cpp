#include "sppq/verify.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sppq/hull.hpp"
#include "sppq/omega.hpp"
#include "sppq/spin.hpp"
#include "sppq/weyl.hpp"

namespace sppq {

using nlohmann::json;

namespace {

constexpr int kCheckpointVersion = 1;

// Per-worker accumulator for one contiguous range of the sweep.
class Recorder {
 public:
  Recorder(const std::vector<std::string>& names, const SweepOptions* options, std::mutex* sink_mu)
      : names_(&names),
        options_(options),
        sink_mu_(sink_mu),
        checked(names.size(), 0),
        violations(names.size(), 0) {}

  void at(std::uint64_t index, const BlockVector& weight) {
    index_ = index;
    weight_ = &weight;
  }

  template <typename Details>
  bool expect(std::size_t claim, bool ok, Details&& details) {
    ++checked[claim];
    if (ok) return true;
    ++violations[claim];
    Counterexample c{index_, *weight_, (*names_)[claim], details()};
    if (options_ && options_->on_counterexample) {
      std::lock_guard lock(*sink_mu_);
      options_->on_counterexample(c);
    }
    found.push_back(std::move(c));
    return false;
  }

  bool expect(std::size_t claim, bool ok) {
    return expect(claim, ok, [] { return json::object(); });
  }

 private:
  const std::vector<std::string>* names_;
  const SweepOptions* options_;
  std::mutex* sink_mu_;
  std::uint64_t index_ = 0;
  const BlockVector* weight_ = nullptr;

 public:
  std::vector<std::uint64_t> checked;
  std::vector<std::uint64_t> violations;
  std::vector<Counterexample> found;
};

struct Suite {
  std::string name;
  std::vector<std::string> claims;
  std::function<void(const GroupShape&, Recorder&)> shape_checks;
  std::function<void(const KWeight&, Recorder&)> weight_check;
};

void merge(VerificationReport& report, Recorder& rec) {
  for (std::size_t c = 0; c < report.claims.size(); ++c) {
    report.claims[c].checked += rec.checked[c];
    report.claims[c].violations += rec.violations[c];
  }
  std::move(rec.found.begin(), rec.found.end(), std::back_inserter(report.counterexamples));
}

json grid_json(const SweepGrid& grid) {
  return json{{"p", grid.shape.p()},
              {"q", grid.shape.q()},
              {"cap", grid.cap},
              {"require_mu_minus_beta_dominant", grid.require_mu_minus_beta_dominant}};
}

json claims_json(const std::vector<ClaimTally>& claims) {
  json out = json::array();
  for (const auto& c : claims) {
    out.push_back({{"name", c.name}, {"checked", c.checked}, {"violations", c.violations}});
  }
  return out;
}

Counterexample counterexample_from_json(const json& j) {
  return Counterexample{j.at("weight_index").get<std::uint64_t>(),
                        parse_weight(j.at("weight").get<std::string>()),
                        j.at("claim").get<std::string>(), j.at("details")};
}

void write_checkpoint(const std::filesystem::path& path, const VerificationReport& report,
                      std::uint64_t next_index) {
  json doc{{"format", "sppq-checkpoint"},
           {"version", kCheckpointVersion},
           {"suite", report.suite},
           {"grid", grid_json(report.grid)},
           {"claims", claims_json(report.claims)},
           {"next_index", next_index},
           {"total_weights", report.total_weights},
           {"counterexamples", json::array()}};
  for (const auto& c : report.counterexamples) doc["counterexamples"].push_back(to_json(c));

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void require_matching(const VerificationReport& saved, const VerificationReport& fresh) {
  auto names = [](const std::vector<ClaimTally>& v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(c.name);
    return out;
  };
  const bool same = saved.suite == fresh.suite && saved.grid.shape == fresh.grid.shape &&
                    saved.grid.cap == fresh.grid.cap &&
                    saved.grid.require_mu_minus_beta_dominant ==
                        fresh.grid.require_mu_minus_beta_dominant &&
                    saved.total_weights == fresh.total_weights &&
                    names(saved.claims) == names(fresh.claims);
  if (!same) throw std::runtime_error("checkpoint does not match this sweep");
}

VerificationReport run_sweep(const Suite& suite, const SweepGrid& grid, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const WeightEnumeration weights(grid);

  VerificationReport report{suite.name, grid, {}, 0, weights.size(), {}, {}, std::nullopt};
  for (const auto& name : suite.claims) report.claims.push_back(ClaimTally{name, 0, 0});

  std::mutex sink_mu;
  std::uint64_t next = 0;
  bool resumed = false;
  if (options.resume && options.checkpoint_file && std::filesystem::exists(*options.checkpoint_file)) {
    VerificationReport saved = load_checkpoint(*options.checkpoint_file);
    require_matching(saved, report);
    report.claims = std::move(saved.claims);
    report.counterexamples = std::move(saved.counterexamples);
    next = saved.weights_scanned;
    resumed = true;
  }
  if (!resumed && suite.shape_checks) {
    Recorder rec(suite.claims, &options, &sink_mu);
    suite.shape_checks(grid.shape, rec);
    merge(report, rec);
  }

  const std::uint64_t total = weights.size();
  const std::uint64_t limit = std::min(total, options.stop_after.value_or(total));
  const std::uint64_t every = std::max<std::uint64_t>(1, options.checkpoint_every);

  while (next < limit) {
    const std::uint64_t end = std::min(limit, next + every);
    const std::uint64_t span = end - next;
    const std::uint64_t jobs = std::clamp<std::uint64_t>(options.jobs, 1, span);

    std::vector<Recorder> recs;
    recs.reserve(jobs);
    for (std::uint64_t w = 0; w < jobs; ++w) recs.emplace_back(suite.claims, &options, &sink_mu);
    std::vector<std::exception_ptr> errors(jobs);

    auto work = [&](std::uint64_t w) {
      const std::uint64_t lo = next + span * w / jobs;
      const std::uint64_t hi = next + span * (w + 1) / jobs;
      try {
        for (std::uint64_t i = lo; i < hi; ++i) {
          const KWeight mu = weights.at(i);
          recs[w].at(i, mu.vector());
          suite.weight_check(mu, recs[w]);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::uint64_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& rec : recs) merge(report, rec);

    next = end;
    if (options.checkpoint_file) write_checkpoint(*options.checkpoint_file, report, next);
  }

  if (!resumed && options.checkpoint_file && limit == next && next == 0) {
    write_checkpoint(*options.checkpoint_file, report, next);
  }
  report.weights_scanned = next;
  if (next < total) report.checkpoint = next;
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

// ---------------------------------------------------------------------------
// Shared helpers

BlockVector residual(const KWeight& mu, const OmegaTable& table, std::size_t ell) {
  const auto kh = table.head(ell);
  const auto kt = table.tail(ell);
  return subtract(mu.vector(), BlockVector({kh.begin(), kh.end()}, {kt.begin(), kt.end()}));
}

bool lowered_allowed(const SweepGrid& grid, const BlockVector& lowered) {
  return !grid.require_mu_minus_beta_dominant || is_k_weight(lowered);
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------------------
// Shape-level Omega / Weyl claims

const std::vector<std::string> kOmegaClaims = {
    "omega-structure",        "omega-prefix-bound", "omega-first-sum-upper", "omega-first-sum-lower",
    "omega-weyl-equivalence", "omega-descent",      "weyl-word-structure",
};

void check_omega_shape(const GroupShape& shape, Recorder& rec, std::size_t base) {
  const int p = shape.p(), q = shape.q();
  const OmegaTable& table = omega_table(shape);
  const auto elements = enumerate_omega(shape);

  BlockVector anchor = BlockVector::zero(shape);
  rec.at(0, anchor);
  rec.expect(base + 0, elements.size() == binomial(p + q, p), [&] {
    return json{{"count", elements.size()}, {"expected", binomial(p + q, p)}};
  });

  for (const auto& e : elements) {
    const BlockVector v = e.vector();
    rec.at(0, v);
    bool bullets = std::is_sorted(e.head.begin(), e.head.end(), std::greater<>{}) &&
                   std::is_sorted(e.tail.begin(), e.tail.end(), std::greater<>{}) &&
                   e.head.front() <= q && e.head.back() >= 0 && e.tail.front() <= p &&
                   e.tail.back() >= 0 && coordinate_sum(v) == Int{p} * q &&
                   e.tail == tail_by_counting(shape, e.head);
    if (e.index > 0) {
      const auto prev = elements[e.index - 1].head;
      bullets = bullets && std::lexicographical_compare(e.head.begin(), e.head.end(), prev.begin(),
                                                        prev.end());
    }
    rec.expect(base + 0, bullets, [&] { return json{{"index", e.index}}; });

    Int head_sum = 0;
    for (int f = 1; f <= p; ++f) {
      head_sum += e.head[f - 1];
      Int tail_sum = 0;
      for (int g = 1; g <= q; ++g) {
        tail_sum += e.tail[g - 1];
        const Int bound = Int{f} * q + Int{p - f} * g;
        rec.expect(base + 1, head_sum + tail_sum <= bound, [&] {
          return json{{"index", e.index}, {"f", f}, {"g", g}, {"sum", head_sum + tail_sum},
                      {"bound", bound}};
        });
      }
    }

    // k_1 + r_1 <= p+q-1 always; the lower bound is p (it reaches q only when p = q).
    const Int first = e.head[0] + e.tail[0];
    rec.expect(base + 2, first <= p + q - 1,
               [&] { return json{{"index", e.index}, {"k1_plus_r1", first}}; });
    rec.expect(base + 3, p <= first, [&] { return json{{"index", e.index}, {"k1_plus_r1", first}}; });

    for (int j = 1; j <= p; ++j) {
      const Int next = j == p ? 0 : e.head[j];
      if (e.head[j - 1] <= next) continue;
      const OmegaElement d = descent(e, j);
      const bool ok = d.tail == tail_from_head(shape, d.head) && d.index > e.index &&
                      d.tail == std::vector<Int>(table.tail(d.index).begin(), table.tail(d.index).end());
      rec.expect(base + 5, ok, [&] { return json{{"index", e.index}, {"j", j}, {"result", d.index}}; });
    }
  }

  const auto via_weyl = omega_via_weyl(shape);
  rec.at(0, anchor);
  rec.expect(base + 4, via_weyl.size() == elements.size(),
             [&] { return json{{"weyl_count", via_weyl.size()}}; });
  for (std::size_t i = 0; i < std::min(via_weyl.size(), elements.size()); ++i) {
    rec.at(0, via_weyl[i]);
    rec.expect(base + 4, via_weyl[i] == elements[i].vector(), [&] { return json{{"index", i}}; });
  }

  const auto words = generate_w1(shape);
  const RhoConstants rc = rho_constants(shape);
  std::vector<std::vector<int>> perms;
  for (const WeylWord& w : words) {
    const BlockVector rn = rho_n_of_word(w);
    rec.at(0, rn);
    const auto subset = w.subset();
    bool ok = true;
    for (int k = 1; k <= p; ++k) {
      const int lower = k == 1 ? 1 : subset[k - 2] + 1;
      ok = ok && subset[k - 1] >= lower && subset[k - 1] <= q + k;
    }
    std::vector<int> perm(w.perm().begin(), w.perm().end());
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int t = 0; t < p + q; ++t) ok = ok && sorted[t] == t;
    const BlockVector shifted = add(rn, rc.rho_c);
    auto strictly_positive_decreasing = [](std::span<const Int> b) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] <= 0 || (i > 0 && b[i] >= b[i - 1])) return false;
      }
      return true;
    };
    ok = ok && strictly_positive_decreasing(shifted.head()) &&
         strictly_positive_decreasing(shifted.tail());
    rec.expect(base + 6, ok, [&] { return json{{"subset", std::vector<int>(subset.begin(), subset.end())}}; });
    perms.push_back(std::move(perm));
  }
  std::sort(perms.begin(), perms.end());
  rec.at(0, anchor);
  rec.expect(base + 6,
             words.size() == binomial(p + q, p) &&
                 std::adjacent_find(perms.begin(), perms.end()) == perms.end(),
             [&] { return json{{"words", words.size()}}; });
}

// ---------------------------------------------------------------------------
// Suites

Suite theorem_suite(const SweepGrid& grid) {
  const OmegaTable& table = omega_table(grid.shape);
  return Suite{
      "theorem",
      {"spin-strictly-decreases-by-beta"},
      {},
      [grid, &table](const KWeight& mu, Recorder& rec) {
        if (is_u_small(mu)) return;
        const BlockVector lowered = shift_beta(mu.vector(), -1);
        if (!lowered_allowed(grid, lowered)) return;
        const SpinResult upper = spin_norm(table, mu.vector());
        const SpinResult lower = spin_norm(table, lowered);
        rec.expect(0, upper.spin_norm_sq > lower.spin_norm_sq, [&] {
          return json{{"spin_norm_sq", upper.spin_norm_sq},
                      {"argmin", upper.argmin_indices},
                      {"spin_norm_sq_minus_beta", lower.spin_norm_sq},
                      {"argmin_minus_beta", lower.argmin_indices},
                      {"region", region_name(classify_region(mu))}};
        });
      },
  };
}

Suite boundary_suite(const SweepGrid& grid) {
  const OmegaTable& table = omega_table(grid.shape);
  return Suite{
      "boundary",
      {"boundary-deficient-above-spin", "large-deficient-not-argmin"},
      {},
      [grid, &table](const KWeight& mu, Recorder& rec) {
        if (is_u_small(mu)) return;
        const BlockVector lowered = shift_beta(mu.vector(), -1);
        if (!lowered_allowed(grid, lowered)) return;
        const Region region = classify_region(mu);
        const bool boundary = is_boundary_r(mu) || is_boundary_l(mu);
        const bool large = region == Region::LargeA || region == Region::LargeB;
        if (!boundary && !large) return;
        const Int spin = spin_norm(table, mu.vector()).spin_norm_sq;
        for (std::size_t ell = 0; ell < table.size(); ++ell) {
          const BlockVector res = residual(mu, table, ell);
          const Int k = k_value_sq(res);
          const Int kb = k_value_sq(shift_beta(res, -1));
          if (k > kb) continue;  // not deficient
          auto details = [&] {
            return json{{"ell", ell}, {"k_value_sq", k}, {"k_value_sq_minus_beta", kb},
                        {"spin_norm_sq", spin}, {"region", region_name(region)}};
          };
          rec.expect(boundary ? 0 : 1, k > spin, details);
        }
      },
  };
}

Suite lemma_down_suite(const SweepGrid& grid) {
  const OmegaTable& table = omega_table(grid.shape);
  std::map<std::vector<Int>, std::size_t> by_tail;
  for (std::size_t i = 0; i < table.size(); ++i) {
    by_tail.emplace(std::vector<Int>(table.tail(i).begin(), table.tail(i).end()), i);
  }
  return Suite{
      "lemma-down",
      {"descent-witness-r", "descent-witness-l"},
      {},
      [grid, &table, by_tail = std::move(by_tail)](const KWeight& mu, Recorder& rec) {
        if (is_u_small(mu)) return;
        const BlockVector lowered = shift_beta(mu.vector(), -1);
        if (!lowered_allowed(grid, lowered)) return;
        const bool right = is_boundary_r(mu);
        const bool left = is_boundary_l(mu);
        if (!right && !left) return;
        for (std::size_t ell = 0; ell < table.size(); ++ell) {
          const auto kh = table.head(ell);
          const auto kt = table.tail(ell);
          // Collapses the leading entries of `block` that are >= top onto
          // (top, top-1, ..., top-1).
          auto lowered_block = [](std::span<const Int> block, Int top) {
            std::size_t h = 0;
            while (h < block.size() && block[h] >= top) ++h;
            std::vector<Int> out(block.begin(), block.end());
            out[0] = top;
            for (std::size_t i = 1; i < h; ++i) out[i] = top - 1;
            return out;
          };
          std::optional<std::size_t> target;
          std::size_t claim = 0;
          if (right && kh[0] > mu.a1()) {
            const auto head = lowered_block(kh, mu.a1());
            target = table.index_of(head);
            claim = 0;
            if (!target) {
              rec.expect(claim, false, [&] { return json{{"ell", ell}, {"missing_head", head}}; });
              continue;
            }
          } else if (left && kt[0] > mu.b1()) {
            const auto tail = lowered_block(kt, mu.b1());
            const auto it = by_tail.find(tail);
            claim = 1;
            if (it == by_tail.end()) {
              rec.expect(claim, false, [&] { return json{{"ell", ell}, {"missing_tail", tail}}; });
              continue;
            }
            target = it->second;
          } else {
            continue;
          }
          const BlockVector from = normalize(residual(mu, table, ell));
          const BlockVector to = normalize(residual(mu, table, *target));
          rec.expect(claim, dominates(from, to), [&] {
            return json{{"ell", ell}, {"ell_down", *target}, {"normalized", format_weight(from)},
                        {"normalized_down", format_weight(to)}};
          });
        }
      },
  };
}

Suite properties_suite(const SweepGrid& grid) {
  const OmegaTable& table = omega_table(grid.shape);
  std::vector<std::string> claims = {
      "hull-oracle-equivalence",  // 0
      "u-large-first-coordinate", // 1
      "pencil-u-large-monotone",  // 2
      "padded-sum-criterion",     // 3
      "spin-lower-bound",         // 4
      "residual-sign-u-large",    // 5
      "deficient-sign-pattern",   // 6
      "delta-formula",            // 7
      "basic-domination",         // 8
      "big-region-no-deficiency", // 9
      "domination-monotone",      // 10
      "classifier-coverage",      // 11
  };
  const std::size_t base = claims.size();
  claims.insert(claims.end(), kOmegaClaims.begin(), kOmegaClaims.end());

  return Suite{
      "properties",
      claims,
      [base](const GroupShape& shape, Recorder& rec) { check_omega_shape(shape, rec, base); },
      [&table](const KWeight& mu, Recorder& rec) {
        const GroupShape& shape = mu.shape();
        const Int p = shape.p(), q = shape.q();
        const bool small = is_u_small(mu);

        const bool oracle = is_u_small_oracle(mu);
        rec.expect(0, small == oracle,
                   [&] { return json{{"prefix_scan_u_small", small}, {"oracle_u_small", oracle}}; });

        if (!small) {
          rec.expect(1, mu.a1() >= q + 1 || mu.b1() >= p + 1);
          const KWeight next(shift_beta(mu.vector(), 1));
          rec.expect(2, !is_u_small(next));
          rec.expect(11, classify_region(mu) != Region::USmallOrOther);
        }

        bool padded_small = true;
        for (int f = 0; f <= p; ++f) {
          for (int g = 0; g <= q; ++g) {
            if (coordinate_sum(padded_weight(mu, f, g).vector) > 2 * p * q) padded_small = false;
          }
        }
        rec.expect(3, padded_small == small);

        const SpinResult spin = spin_norm(table, mu.vector());
        const auto in_omega = table.index_of(mu.a());
        const bool member = in_omega && std::ranges::equal(table.tail(*in_omega), mu.b());
        const Int floor = rho_c_norm_sq(shape);
        rec.expect(4, spin.spin_norm_sq >= floor && ((spin.spin_norm_sq == floor) == member),
                   [&] { return json{{"spin_norm_sq", spin.spin_norm_sq}, {"in_omega", member}}; });

        const bool basic = mu.a1() >= q + 1 && mu.b1() >= p + 1;
        const bool big = (is_r_weight(mu) && mu.a1() + mu.b1() >= 2 * p + q) ||
                         (is_l_weight(mu) && mu.a1() + mu.b1() >= p + 2 * q);

        for (std::size_t ell = 0; ell < table.size(); ++ell) {
          const DeficiencyProfile prof = deficiency_profile(mu, ell);
          const Int m1 = prof.residual.head()[0];
          const Int n1 = prof.residual.tail()[0];
          if (!small) {
            rec.expect(5, !(m1 <= 0 && n1 <= 0), [&] { return json{{"ell", ell}}; });
          }
          if (prof.deficient) {
            rec.expect(6, !(m1 >= 1 && n1 >= 1), [&] { return json{{"ell", ell}}; });
          }
          if (const auto delta = deficiency_delta_formula(prof, shape)) {
            const Int actual = prof.k_value_sq_beta - prof.k_value_sq;
            rec.expect(7, *delta == actual, [&] {
              return json{{"ell", ell}, {"formula", *delta}, {"actual", actual},
                          {"M", prof.M}, {"N", prof.N}, {"M_plus", prof.M_plus},
                          {"N_plus", prof.N_plus}};
            });
          }
          const BlockVector from = normalize(prof.residual);
          const BlockVector to = normalize(shift_beta(prof.residual, -1));
          const bool dom = dominates(from, to);
          if (basic) rec.expect(8, dom, [&] { return json{{"ell", ell}}; });
          if (big) rec.expect(9, !prof.deficient, [&] { return json{{"ell", ell}}; });
          if (dom) rec.expect(10, prof.k_value_sq > prof.k_value_sq_beta, [&] { return json{{"ell", ell}}; });
        }
        if (basic) {
          const Int lowered = spin_norm(table, shift_beta(mu.vector(), -1)).spin_norm_sq;
          rec.expect(8, spin.spin_norm_sq > lowered, [&] {
            return json{{"spin_norm_sq", spin.spin_norm_sq}, {"spin_norm_sq_minus_beta", lowered}};
          });
        }
      },
  };
}

}  // namespace

std::string VerificationReport::verdict() const {
  if (!counterexamples.empty()) return "violated";
  return complete() ? "verified" : "incomplete";
}

json to_json(const Counterexample& c) {
  return json{{"weight_index", c.weight_index},
              {"weight", format_weight(c.weight)},
              {"claim", c.claim},
              {"details", c.details}};
}

json VerificationReport::to_json(bool include_wall_time) const {
  json out{{"suite", suite},
           {"grid", grid_json(grid)},
           {"claims", claims_json(claims)},
           {"weights_scanned", weights_scanned},
           {"total_weights", total_weights},
           {"counterexamples", json::array()},
           {"verdict", verdict()},
           {"checkpoint", checkpoint ? json(*checkpoint) : json(nullptr)}};
  for (const auto& c : counterexamples) out["counterexamples"].push_back(sppq::to_json(c));
  if (include_wall_time) out["wall_time_s"] = wall_time.count();
  return out;
}

VerificationReport load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  json doc;
  try {
    doc = json::parse(in);
    if (doc.at("format") != "sppq-checkpoint" || doc.at("version") != kCheckpointVersion) {
      throw std::runtime_error("unsupported checkpoint format in " + path.string());
    }
    const json& g = doc.at("grid");
    SweepGrid grid{GroupShape(g.at("p").get<int>(), g.at("q").get<int>()), g.at("cap").get<Int>(),
                   g.at("require_mu_minus_beta_dominant").get<bool>()};
    VerificationReport report{doc.at("suite").get<std::string>(), grid, {}, 0, 0, {}, {}, std::nullopt};
    for (const json& c : doc.at("claims")) {
      report.claims.push_back(ClaimTally{c.at("name").get<std::string>(),
                                         c.at("checked").get<std::uint64_t>(),
                                         c.at("violations").get<std::uint64_t>()});
    }
    report.weights_scanned = doc.at("next_index").get<std::uint64_t>();
    report.total_weights = doc.at("total_weights").get<std::uint64_t>();
    for (const json& c : doc.at("counterexamples")) {
      report.counterexamples.push_back(counterexample_from_json(c));
    }
    if (report.weights_scanned < report.total_weights) report.checkpoint = report.weights_scanned;
    return report;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed checkpoint " + path.string() + ": " + e.what());
  }
}

VerificationReport verify_theorem(const SweepGrid& grid, const SweepOptions& options) {
  return run_sweep(theorem_suite(grid), grid, options);
}

VerificationReport verify_prop_boundary(const SweepGrid& grid, const SweepOptions& options) {
  return run_sweep(boundary_suite(grid), grid, options);
}

VerificationReport verify_lemma_down(const SweepGrid& grid, const SweepOptions& options) {
  return run_sweep(lemma_down_suite(grid), grid, options);
}

VerificationReport verify_all_properties(const SweepGrid& grid, const SweepOptions& options) {
  return run_sweep(properties_suite(grid), grid, options);
}

VerificationReport verify_omega_shape(const GroupShape& shape) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{"omega", SweepGrid{shape, 0, false}, {}, 0, 0, {}, {}, std::nullopt};
  for (const auto& name : kOmegaClaims) report.claims.push_back(ClaimTally{name, 0, 0});
  Recorder rec(kOmegaClaims, nullptr, nullptr);
  check_omega_shape(shape, rec, 0);
  merge(report, rec);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport verify_normalize_steps(int max_block, Int range) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> names = {"normalize-step-domination", "domination-monotone"};
  VerificationReport report{"normalize-steps", SweepGrid{GroupShape(max_block, max_block), range, false},
                            {}, 0, 0, {}, {}, std::nullopt};
  for (const auto& name : names) report.claims.push_back(ClaimTally{name, 0, 0});
  Recorder rec(names, nullptr, nullptr);
  std::mt19937_64 rng(0x5eed);

  for (int p = 1; p <= max_block; ++p) {
    for (int q = 1; q <= max_block; ++q) {
      const int n = p + q;
      const GroupShape shape(p, q);
      std::vector<Int> coords(n, -range);
      std::vector<Int> partner(n);
      while (true) {
        const BlockVector v = BlockVector::from_flat(shape, coords);
        const BlockVector nv = normalize(v);
        const Int kv = k_value_sq(v);
        rec.at(report.weights_scanned, v);
        for (int s = 0; s < n; ++s) {
          for (Int step : {Int{1}, Int{-1}}) {
            if ((step > 0 && coords[s] < 0) || (step < 0 && coords[s] > 0)) continue;
            std::vector<Int> moved = coords;
            moved[s] += step;
            const BlockVector u = BlockVector::from_flat(shape, moved);
            const BlockVector nu = normalize(u);
            rec.expect(0, dominates(nu, nv), [&] { return json{{"coordinate", s}, {"step", step}}; });
            if (dominates(nu, nv)) {
              rec.expect(1, k_value_sq(u) > kv, [&] { return json{{"other", format_weight(u)}}; });
            }
          }
        }
        // one random partner from the same box
        for (auto& x : partner) x = static_cast<Int>(rng() % (2 * range + 1)) - range;
        const BlockVector w = BlockVector::from_flat(shape, partner);
        const BlockVector nw = normalize(w);
        if (dominates(nw, nv)) {
          rec.expect(1, k_value_sq(w) > kv, [&] { return json{{"other", format_weight(w)}}; });
        } else if (dominates(nv, nw)) {
          rec.expect(1, kv > k_value_sq(w), [&] { return json{{"other", format_weight(w)}}; });
        }
        ++report.weights_scanned;

        int t = n - 1;
        while (t >= 0 && coords[t] == range) coords[t--] = -range;
        if (t < 0) break;
        ++coords[t];
      }
    }
  }
  report.total_weights = report.weights_scanned;
  merge(report, rec);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace sppq
