#pragma once

// Command-line front end. `run` is separate from main so tests can drive it
// with captured streams.

#include "hyperoct/hyperoct.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hyperoct::cli {

enum ExitCode { kOk = 0, kFalse = 1, kUsage = 2 };

/// Parses "k=value,k=value" into a radius map.
inline RadiusMap parse_radius_list(const std::string& text) {
  RadiusMap out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--r2: expected k=value at offset " + std::to_string(start), start);
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(item.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("--r2: bad index at offset " + std::to_string(start), start);
    }
    try {
      out[k] = parse_rational(item.substr(eq + 1));
    } catch (const ParseError& e) {
      const std::size_t pos = start + eq + 1 + e.position();
      throw ParseError("--r2: " + std::string(e.what()) + " (offset " + std::to_string(pos) + " in the list)", pos);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline void print_config(std::ostream& out, const DesignConfig& cfg) {
  out << "n = " << cfg.n << "\n";
  out << std::left << std::setw(4) << "k" << std::setw(24) << "r^2" << "weight\n";
  for (const auto& l : cfg.layers) {
    out << std::setw(4) << l.k << std::setw(24) << to_string(l.r_squared) << to_string(l.weight) << "\n";
  }
}

inline void print_report(std::ostream& out, const StrengthReport& r) {
  out << "strength " << r.strength << " (" << to_string(r.method) << ")\n";
  for (const auto& x : r.residuals) out << "  " << std::left << std::setw(12) << x.id << to_string(x.value) << "\n";
  out << "9-design fails at " << r.violated_9 << "\n";
}

/// Table in the layout of the printed n = 3, 4 tables: one column per J,
/// one row per sphere count, S and T markers appended to the strength.
inline void print_table(std::ostream& out, int n, const std::vector<TableEntry>& entries) {
  std::vector<std::vector<int>> cols;
  for (const auto& e : entries)
    if (e.p == 1) cols.push_back(e.J);
  const int max_p = std::min(n, 3);
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(max_p) + 2);
  rows[0].push_back("J");
  rows[1].push_back("|X(J)|");
  for (int p = 1; p <= max_p; ++p) rows[static_cast<std::size_t>(p) + 1].push_back("p=" + std::to_string(p));
  for (const auto& J : cols) {
    rows[0].push_back(join(J));
    for (int p = 1; p <= max_p; ++p) {
      std::string cell = "--";
      for (const auto& e : entries) {
        if (e.J != J || e.p != p) continue;
        if (p == 1) rows[1].push_back(e.size.str());
        cell = std::to_string(e.strength);
        if (e.spherical.value_or(false) && e.J.size() == 1) cell += "S";
        if (e.tight && e.p > 1) cell += "T";
      }
      rows[static_cast<std::size_t>(p) + 1].push_back(cell);
    }
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? " | " : "") << std::setw(static_cast<int>(width[c])) << r[c];
    out << "\n";
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euclidean designs on hyperoctahedral orbits, in exact arithmetic"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON");

  int n = 0, k = 0, t = 0, p = 0, s = 0, max_n = 100;
  bool count_only = false, fully_even = false, criterion = false, use_oracle = false;
  std::uint64_t cap = kDefaultOrbitCap;
  std::string config_path, r2_text, family, r2_value, rho2_value, w_value = "1";
  std::vector<int> J;

  auto* orbit = app.add_subcommand("orbit", "Enumerate I^n_k or report its size");
  orbit->add_option("--n", n, "Dimension")->required();
  orbit->add_option("--k", k, "Number of nonzero coordinates")->required();
  orbit->add_flag("--count-only", count_only, "Only print |I^n_k|");
  orbit->add_option("--cap", cap, "Refuse to enumerate more points than this");

  auto* verify = app.add_subcommand("verify", "Check the design identity monomial by monomial");
  verify->add_option("--config", config_path, "Configuration JSON file")->required();
  verify->add_option("--t", t, "Strength to check")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Maximum strength from the closed-form criteria");
  classify_cmd->add_option("--config", config_path, "Configuration JSON file")->required();
  classify_cmd->add_flag("--oracle", use_oracle, "Take the strength from the monomial oracle");

  auto* solve = app.add_subcommand("solve", "Weights (and a radius) for a 5- or 7-design");
  solve->add_option("--n", n, "Dimension")->required();
  solve->add_option("--J", J, "Orbit indices, comma separated")->required()->delimiter(',');
  solve->add_option("--t", t, "Target strength, 5 or 7")->required();
  solve->add_option("--r2", r2_text, "Squared radii as k=value,...; missing ones default to 1");

  auto* propg = app.add_subcommand("property-g", "Integers n whose G function has a zero");
  propg->add_option("--max", max_n, "Upper end of the search");

  auto* fisher = app.add_subcommand("fisher", "Lower bound N(n,p,t) for antipodal designs");
  fisher->add_option("--n", n, "Dimension")->required();
  fisher->add_option("--p", p, "Number of spheres")->required();
  fisher->add_option("--t", t, "Strength")->required();

  auto* tight = app.add_subcommand("tight", "Build one of the tight families and certify it");
  tight->add_option("--family", family, "5-3d, 7-3d or 7-4d")->required()->check(CLI::IsMember({"5-3d", "7-3d", "7-4d"}));
  tight->add_option("--r2", r2_value, "Squared radius r^2")->required();
  tight->add_option("--rho2", rho2_value, "Squared radius rho^2")->required();
  tight->add_option("--w", w_value, "Base weight");

  auto* tau_cmd = app.add_subcommand("tau", "Maximum strength for j orbits on p spheres");
  tau_cmd->add_option("--n", n, "Dimension")->required();

  auto* table = app.add_subcommand("strength-table", "Maximum strength for every J and sphere count");
  table->add_option("--n", n, "Dimension (3..6)")->required();

  auto* basis = app.add_subcommand("basis", "Harmonic polynomial bases");
  basis->add_option("--n", n, "Dimension")->required();
  basis->add_option("--s", s, "Degree")->required();
  auto* fe = basis->add_flag("--fully-even", fully_even, "Only the fully even part of the full basis");
  auto* cr = basis->add_flag("--criterion", criterion, "The compact criterion basis (s = 2, 4, 6, 8)");
  fe->excludes(cr);

  std::vector<std::string> storage{"hyperoct"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };

  try {
    if (*orbit) {
      if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
      const BigInt size = orbit_size(n, k);
      if (count_only) {
        if (pretty) {
          out << size << "\n";
        } else {
          emit({{"n", n}, {"k", k}, {"size", to_json(size)}});
        }
        return kOk;
      }
      const auto pts = enumerate_orbit(n, k, cap);
      if (pretty) {
        for (const auto& pt : pts) {
          for (std::size_t i = 0; i < pt.coords.size(); ++i) out << (i ? " " : "") << std::setw(2) << pt.coords[i];
          out << "\n";
        }
      } else {
        json arr = json::array();
        for (const auto& pt : pts) arr.push_back(pt.coords);
        emit({{"n", n}, {"k", k}, {"size", to_json(size)}, {"points", std::move(arr)}});
      }
      return kOk;
    }

    if (*verify) {
      if (t < 0) throw std::invalid_argument("--t must be non-negative");
      const DesignConfig cfg = load_config(config_path);
      const auto v = find_violation(cfg, t);
      if (pretty) {
        if (v) {
          out << "not a " << t << "-design: " << Polynomial::monomial(v->monomial).to_string() << " has residual "
              << to_string(v->residual) << "\n";
        } else {
          out << t << "-design\n";
        }
      } else {
        json j{{"t", t}, {"holds", !v}};
        if (v) {
          j["first_failing_monomial"] = {{"exponents", v->monomial},
                                         {"monomial", Polynomial::monomial(v->monomial).to_string()},
                                         {"residual", to_json(v->residual)}};
        } else {
          j["first_failing_monomial"] = nullptr;
        }
        emit(j);
      }
      return v ? kFalse : kOk;
    }

    if (*classify_cmd) {
      const DesignConfig cfg = load_config(config_path);
      const auto report = use_oracle ? classify_with_oracle(cfg) : classify(cfg);
      if (pretty) {
        print_report(out, report);
      } else {
        emit(to_json(report));
      }
      return kOk;
    }

    if (*solve) {
      if (t != 5 && t != 7) throw std::invalid_argument("--t must be 5 or 7");
      auto Jset = detail::checked_index_set(n, J);
      RadiusMap given = r2_text.empty() ? RadiusMap{} : parse_radius_list(r2_text);
      for (const auto& [kk, v] : given) {
        if (std::find(Jset.begin(), Jset.end(), kk) == Jset.end()) {
          throw std::invalid_argument("--r2 names k=" + std::to_string(kk) + " which is not in J");
        }
      }
      std::string note;
      if (t == 7 && Jset.size() == 3 && given.size() == 2) {
        const auto q = solve_radius_Q(n, {Jset[0], Jset[1], Jset[2]}, given);
        if (q.status == QStatus::solved) {
          given[q.k] = *q.r_squared;
          note = "r_" + std::to_string(q.k) + "^2 solved from Q";
        } else {
          note = std::string("Q gives no positive r_") + std::to_string(q.k) + "^2" +
                 (q.status == QStatus::degenerate ? " (degenerate)" : "") + "; using 1";
        }
      }
      RadiusMap r2;
      for (int kk : Jset) r2[kk] = given.count(kk) ? given[kk] : Rational{1};
      FeasibilityResult res;
      const std::size_t limit = t == 5 ? 2 : 3;
      if (Jset.size() <= limit) {
        res = t == 5 ? solve_t5(n, Jset, r2) : solve_t7(n, Jset, r2);
      } else {
        std::vector<Rational> vals;
        for (int kk : Jset) vals.push_back(r2[kk]);
        res.clause = Clause{detail::distinct_count(vals), static_cast<int>(Jset.size()), t};
        res.solution = solve_weights_direct(n, Jset, r2, t);
        res.feasible = res.solution.has_value();
        res.reason = res.feasible ? "positive solution of the criterion equations"
                                  : "the criterion equations have no positive solution";
      }
      if (!note.empty()) res.reason += "; " + note;
      if (pretty) {
        out << (res.feasible ? "feasible" : "infeasible") << " [" << res.clause.tag() << "] " << res.reason << "\n";
        if (res.solution) print_config(out, *res.solution);
      } else {
        emit(to_json(res));
      }
      return res.feasible ? kOk : kFalse;
    }

    if (*propg) {
      json values = json::array();
      json witnesses = json::array();
      for (int m = 1; m <= max_n; ++m) {
        if (auto w = property_g(m)) {
          values.push_back(m);
          witnesses.push_back({{"n", m}, {"k1", w->first}, {"k2", w->second}});
          if (pretty) out << m << "  G(" << w->first << "," << w->second << ") = 0\n";
        }
      }
      if (!pretty) emit({{"max", max_n}, {"count", values.size()}, {"values", values}, {"witnesses", witnesses}});
      return kOk;
    }

    if (*fisher) {
      const auto b = fisher_bound(n, p, t);
      if (pretty) {
        out << "N(" << n << "," << p << "," << t << ") = " << b.value << "\n";
      } else {
        emit(to_json(b));
      }
      return kOk;
    }

    if (*tight) {
      const Rational r2 = parse_rational(r2_value);
      const Rational rho2 = parse_rational(rho2_value);
      const Rational w = parse_rational(w_value);
      const DesignConfig cfg = family == "5-3d"   ? tight_5_3d(r2, rho2, w)
                               : family == "7-3d" ? tight_7_3d(r2, rho2, w)
                                                  : tight_7_4d(r2, rho2, w);
      const auto cert = is_tight(cfg);
      if (pretty) {
        print_config(out, cfg);
        out << "strength " << cert.t << ", " << cert.p << " sphere(s), size " << cert.size << ", N = " << cert.bound.value
            << (cert.tight ? ": tight" : ": not tight") << "\n";
      } else {
        emit(to_json(cert));
      }
      return cert.tight ? kOk : kFalse;
    }

    if (*tau_cmd) {
      json arr = json::array();
      for (int j = 1; j <= std::min(3, n); ++j) {
        for (int pp = 1; pp <= j; ++pp) {
          const auto r = tau(n, pp, j);
          arr.push_back({{"p", pp}, {"j", j}, {"tau", r.strength}, {"witness", r.witness}});
          if (pretty) out << "tau(" << pp << "," << j << ") = " << r.strength << "   J = {" << join(r.witness) << "}\n";
        }
      }
      if (!pretty) emit({{"n", n}, {"values", arr}});
      return kOk;
    }

    if (*table) {
      const auto entries = strength_table(n);
      if (pretty) {
        print_table(out, n, entries);
      } else {
        json arr = json::array();
        for (const auto& e : entries) arr.push_back(to_json(e));
        emit({{"n", n}, {"entries", arr}});
      }
      return kOk;
    }

    if (*basis) {
      json arr = json::array();
      if (criterion) {
        const auto b = criterion_basis(n, s);
        for (const auto& e : b.elements) {
          arr.push_back({{"label", e.label}, {"map", e.map}, {"poly", e.poly.to_string()}});
          if (pretty) out << e.label << " [" << join(e.map) << "]: " << e.poly.to_string() << "\n";
        }
      } else {
        auto b = full_basis(n, s);
        if (fully_even) b = fully_even_subset(b);
        for (const auto& e : b) {
          arr.push_back({{"m", e.m}, {"mu", e.mu}, {"poly", e.poly.to_string()}});
          if (pretty) out << "(" << join(e.m) << ";" << e.mu << "): " << e.poly.to_string() << "\n";
        }
      }
      if (!pretty) emit({{"n", n}, {"s", s}, {"count", arr.size()}, {"elements", arr}});
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hyperoct::cli
