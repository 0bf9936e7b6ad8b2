// Command-line front end. Exit status: 0 when every reported check passes,
// 1 on a bound violation, 2 on a usage error, 3 when a search budget or
// size cap stops the computation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "schreier/errors.hpp"
#include "schreier/io.hpp"

using namespace schreier;
using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  unsigned xi_cap = 4;
  std::uint64_t element_cap = 1'000'000;
};

// "@path" reads the literal from a file.
std::string literal(const std::string& flag, const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw UsageError(flag + ": cannot read " + value.substr(1));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FinSet parse_set(const Settings& s, const std::string& flag, const std::string& value) {
  FinSet f;
  try {
    f = FinSet::parse(literal(flag, value));
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (f.size() > s.element_cap)
    throw UsageError(flag + ": " + std::to_string(f.size()) + " elements exceed --element-cap");
  return f;
}

RationalVector parse_vec(const Settings& s, const std::string& flag, const std::string& value) {
  RationalVector v;
  try {
    v = io::parse_vector(literal(flag, value));
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (v.support_size() > s.element_cap) throw UsageError(flag + ": support exceeds --element-cap");
  return v;
}

Ordinal level(const Settings& s, unsigned xi) {
  if (xi > s.xi_cap)
    throw UsageError("--xi " + std::to_string(xi) + " is above --xi-cap " + std::to_string(s.xi_cap));
  return Ordinal{xi};
}

void print(const Settings& s, const Json& j, const std::string& tsv = {}) {
  if (s.format == "tsv" && !tsv.empty())
    std::cout << tsv;
  else
    std::cout << j.dump() << '\n';
}

std::string kv_tsv(const Json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier families, Schreier-space norms and the block-basis constructions built on them"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", s.seed, "Seed for every randomized step");
  app.add_option("--budget", s.budget, "Node budget for exhaustive searches");
  app.add_option("--xi-cap", s.xi_cap, "Largest accepted xi");
  app.add_option("--element-cap", s.element_cap, "Largest accepted set or block size");

  unsigned xi = 1;
  std::string set_text, vec_text, l_text, m_text;
  std::size_t count = 1, k = 2, samples = 20, n = 12, beam = 64;
  std::uint64_t p = 1;
  std::string mode = "exhaustive";
  bool summary = false, all_lines = false, serial = false, bruteforce = false;
  std::string suite;
  std::optional<unsigned> suite_xi;
  std::optional<std::uint64_t> trials;
  Element head = 12;

  auto xi_opt = [&](CLI::App* c) { c->add_option("--xi", xi, "Family index")->required(); };
  auto set_opt = [&](CLI::App* c, const char* help) { c->add_option("--set", set_text, help)->required(); };
  auto pair_opts = [&](CLI::App* c) {
    c->add_option("--l", l_text, "L prefix, e.g. [1,2,3]")->required();
    c->add_option("--m", m_text, "M prefix of the same length")->required();
  };

  auto* member = app.add_subcommand("member", "Membership in S_xi");
  xi_opt(member), set_opt(member, "Finite set, e.g. [2,3,7], or @file");
  auto* maximal = app.add_subcommand("maximal", "Maximal membership in S_xi");
  xi_opt(maximal), set_opt(maximal, "Finite set or @file");
  auto* decompose_cmd = app.add_subcommand("decompose", "Successive maximal S_xi blocks of a prefix");
  xi_opt(decompose_cmd), set_opt(decompose_cmd, "Prefix of M or @file");
  auto* tau_cmd = app.add_subcommand("tau", "tau_xi of a finite set");
  xi_opt(tau_cmd), set_opt(tau_cmd, "Finite set or @file");
  auto* norm_cmd = app.add_subcommand("norm", "Exact ||x||_xi with a norming set");
  xi_opt(norm_cmd);
  norm_cmd->add_option("--vec", vec_text, "Vector {\"index\":\"p/q\",...} or @file")->required();
  norm_cmd->add_flag("--serial", serial, "Use the single-threaded kernel");
  norm_cmd->add_flag("--bruteforce", bruteforce, "Maximise over all admissible subsets");
  auto* avg = app.add_subcommand("avg", "Repeated averages xi_n^M");
  xi_opt(avg), set_opt(avg, "Prefix of M or @file");
  avg->add_option("--count", count, "Number of blocks");
  auto* avg_norm = app.add_subcommand("avg-norm", "||xi_1^M + .. + xi_n^M||_xi against xi + 1");
  xi_opt(avg_norm), set_opt(avg_norm, "Prefix of M or @file");
  avg_norm->add_option("--n", n, "Number of averages")->required();
  auto* d_cmd = app.add_subcommand("d", "Truncated d_xi(L, M)");
  xi_opt(d_cmd), pair_opts(d_cmd);
  d_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "heuristic", "enumerate"}));
  d_cmd->add_option("--beam", beam, "Beam width in heuristic mode");
  auto* ratio = app.add_subcommand("ratio-witness", "Vector with ||x_m|| / ||x_l|| >= (k-1)/(xi+1)");
  xi_opt(ratio), pair_opts(ratio);
  ratio->add_option("--k", k, "Target d value")->required();
  auto* dominate = app.add_subcommand("dominate", "||sum a e_m||_xi <= p ||sum a e_l||_xi");
  xi_opt(dominate), pair_opts(dominate);
  dominate->add_option("--vec", vec_text, "Coefficients on 1..n or @file")->required();
  dominate->add_option("--p", p, "Constant p")->required();
  auto* generic = app.add_subcommand("genericity", "d for random splittings of {1..n}");
  xi_opt(generic);
  generic->add_option("--n", n, "Size of the split range");
  generic->add_option("--samples", samples, "Number of random splittings");
  auto* build_p6 = app.add_subcommand("build-p6", "Complemented convex block basis");
  xi_opt(build_p6);
  build_p6->add_option("--count", count, "Number of blocks")->required();
  build_p6->add_flag("--summary", summary, "Omit the vectors u_n");
  auto* project = app.add_subcommand("project-p6", "P(x) = sum x(F_i) u_i and the 18 xi bound");
  xi_opt(project);
  project->add_option("--count", count, "Number of blocks")->required();
  project->add_option("--vec", vec_text, "Vector x or @file")->required();
  auto* uncomp = app.add_subcommand("build-uncomp", "Candidate uncomplemented block basis");
  xi_opt(uncomp);
  uncomp->add_option("--count", count, "Number of blocks")->required();
  uncomp->add_option("--head", head, "First element of M");
  uncomp->add_flag("--summary", summary, "Omit the vectors v_n, w_n");
  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  verify->add_option("suite", suite, "Suite selector")->required()->check(CLI::IsMember(suite_selectors()));
  verify->add_option("--xi", suite_xi, "Restrict to one level");
  verify->add_option("--trials", trials, "Number of random trials");
  verify->add_flag("--all-lines", all_lines, "Report every check, not only failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const SearchBudget budget{s.budget};
  try {
    if (*member) {
      auto f = parse_set(s, "--set", set_text);
      Json j = {{"xi", xi}, {"set", io::to_json(f)}, {"member", is_member(f, level(s, xi))}};
      print(s, j, kv_tsv(j));
    } else if (*maximal) {
      auto f = parse_set(s, "--set", set_text);
      const bool in = is_member(f, level(s, xi));
      Json j = {{"xi", xi}, {"set", io::to_json(f)}, {"member", in}, {"maximal", in && is_maximal(f, Ordinal{xi})}};
      print(s, j, kv_tsv(j));
    } else if (*decompose_cmd) {
      auto d = decompose(parse_set(s, "--set", set_text), level(s, xi));
      print(s, io::to_json(d));
    } else if (*tau_cmd) {
      auto f = parse_set(s, "--set", set_text);
      if (f.empty()) throw UsageError("--set: tau needs a nonempty set");
      Json j = {{"xi", xi}, {"set", io::to_json(f)}, {"tau", tau(f, level(s, xi))}};
      print(s, j, kv_tsv(j));
    } else if (*norm_cmd) {
      auto x = parse_vec(s, "--vec", vec_text);
      const Ordinal z = level(s, xi);
      auto r = bruteforce ? norm_bruteforce(x, z, budget) : serial ? norm_serial(x, z) : norm(x, z);
      print(s, io::to_json(r), kv_tsv({{"value", to_string(r.value)}, {"witness", r.witness.to_string()}}));
    } else if (*avg) {
      Json out = Json::array();
      for (const auto& b : repeated_averages(parse_set(s, "--set", set_text), level(s, xi), count))
        out.push_back(io::to_json(b));
      print(s, out);
    } else if (*avg_norm) {
      auto prefix = parse_set(s, "--set", set_text);
      const Ordinal z = level(s, xi);
      RationalVector sum;
      for (const auto& b : repeated_averages(prefix, z, n)) sum += b.vector;
      auto r = norm(sum, z);
      const Rational bound(xi + 1);
      Json j = {{"claim", "||sum_{i<=n} xi_i^M||_xi <= xi + 1"},
                {"bound", to_string(bound)},
                {"observed", to_string(r.value)},
                {"pass", r.value <= bound},
                {"witness", io::to_json(r.witness)}};
      print(s, j, kv_tsv(j));
      return r.value <= bound ? 0 : 1;
    } else if (*d_cmd) {
      SubseqPair pair{parse_set(s, "--l", l_text), parse_set(s, "--m", m_text)};
      const Ordinal z = level(s, xi);
      auto d = mode == "enumerate" ? d_truncated_enumerated(pair, z, budget)
                                   : d_truncated(pair, z, mode == "heuristic" ? DMode::heuristic : DMode::exhaustive,
                                                 budget, beam);
      print(s, io::to_json(d));
    } else if (*ratio) {
      SubseqPair pair{parse_set(s, "--l", l_text), parse_set(s, "--m", m_text)};
      const Ordinal z = level(s, xi);
      auto w = ratio_witness(pair, z, k, budget);
      const Rational bound(static_cast<long>(k) - 1, static_cast<long>(xi) + 1);
      Json j = io::to_json(w);
      j["claim"] = "||x_m||_xi / ||x_l||_xi >= (k-1)/(xi+1)";
      j["bound"] = to_string(bound);
      j["observed"] = to_string(w.norm_m / w.norm_l);
      j["pass"] = w.norm_m / w.norm_l >= bound;
      print(s, j);
      return j["pass"].get<bool>() ? 0 : 1;
    } else if (*dominate) {
      SubseqPair pair{parse_set(s, "--l", l_text), parse_set(s, "--m", m_text)};
      const Ordinal z = level(s, xi);
      auto a = parse_vec(s, "--vec", vec_text);
      const Rational nl = norm_value(pair.on_l(a), z), nm = norm_value(pair.on_m(a), z);
      const bool ok = domination_check(pair, z, a, p);
      Json j = {{"claim", "||sum a e_m||_xi <= p ||sum a e_l||_xi"},
                {"bound", to_string(Rational(static_cast<unsigned long>(p)) * nl)},
                {"observed", to_string(nm)},
                {"pass", ok}};
      print(s, j, kv_tsv(j));
      return ok ? 0 : 1;
    } else if (*generic) {
      auto rows = genericity_demo(n, level(s, xi), samples, s.seed, budget);
      print(s, io::genericity_json(rows), io::genericity_tsv(rows));
    } else if (*build_p6) {
      auto basis = build_complemented_basis(level(s, xi), count, s.element_cap);
      Json j = io::to_json(basis, !summary);
      print(s, j);
      return j["pass"].get<bool>() ? 0 : 1;
    } else if (*project) {
      auto basis = build_complemented_basis(level(s, xi), count, s.element_cap);
      auto x = parse_vec(s, "--vec", vec_text);
      auto px = project_onto_basis(x, basis);
      const Rational observed = norm_value(px, basis.xi);
      const Rational bound = Rational(18 * xi) * norm_value(x, basis.xi);
      Json j = {{"claim", "||P x||_xi <= 18 xi ||x||_xi"},
                {"bound", to_string(bound)},
                {"observed", to_string(observed)},
                {"pass", observed <= bound},
                {"projection", io::to_json(px)}};
      print(s, j);
      return observed <= bound ? 0 : 1;
    } else if (*uncomp) {
      auto ex = build_uncomplemented(level(s, xi), count, head, s.element_cap);
      print(s, io::to_json(ex, !summary));
    } else if (*verify) {
      SuiteOptions o;
      o.xi = suite_xi;
      if (o.xi) level(s, *o.xi);
      o.trials = trials;
      o.seed = s.seed;
      o.budget = budget;
      o.keep_all_lines = all_lines;
      auto report = run_suite(suite, o);
      print(s, io::to_json(report), io::suite_tsv(report));
      return report.pass() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const BoundViolation& e) {
    std::cerr << "bound violated: " << e.what() << '\n';
    return 1;
  } catch (const InsufficientPrefix& e) {
    std::cerr << "insufficient prefix: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisNotSatisfied& e) {
    std::cerr << "hypothesis not satisfied: " << e.what() << '\n';
    return 2;
  } catch (const NoWitness& e) {
    std::cerr << "no witness: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
