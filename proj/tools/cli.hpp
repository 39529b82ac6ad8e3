#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with string streams.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weq/report.hpp"
#include "weq/weq.hpp"

namespace weq::cli {

enum ExitCode : int { Ok = 0, Violation = 1, UsageError = 2 };

// An argument names a file if one exists at that path, otherwise it is the text itself.
inline std::string read_input(const std::string& arg)
{
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

inline std::pair<Equation, Equation> read_pair(const std::vector<std::string>& args)
{
  EqSystem t = args.size() == 1 ? parse_system(read_input(args[0]))
                                : parse_system(read_input(args[0]) + "\n" + read_input(args[1]));
  if (t.size() != 2) throw ParseError("expected exactly two equations, got " + std::to_string(t.size()));
  return {t[0], t[1]};
}

inline const char* closing_example_text = "xyxz = zxyx\nxyxxz = zxxyx\n";

inline const char* closing_example_expected =
    "E1: xyxz = zxyx\n"
    "E2: xyxxz = zxxyx\n"
    "S(E1) = (-X*Y*Z + X*Y - Z + 1, -X*Z + X, X^2*Y - 1)\n"
    "S(E2) = (-X^2*Y*Z + X^2*Y + X*Y - X*Z - Z + 1, -X^2*Z + X, X^3*Y - 1)\n"
    "t23 = X^4*Y - X^3*Y - X^2*Z + X*Z = X * (2,1,-1) * (1,0,0)\n"
    "t31 = X^3*Y^2 - X^3*Y - X*Y*Z + X*Z = X * (2,1,-1) * (0,1,0)\n"
    "t12 = X^3*Y*Z - X^3*Y - X*Z^2 + X*Z = X * (2,1,-1) * (0,0,1)\n"
    "cofactor = X^3*Y - X*Z\n"
    "(t23, t31, t12) = (X^3*Y - X*Z) * (X - 1, Y - 1, Z - 1)\n"
    "constraint: 2|h(x)|+|h(y)|=|h(z)|\n"
    "minimal monomials of t23: X^3*Y, X*Z\n"
    "bounds: sum 18, pair (1,2) 12, pair (1,3) 12, pair (2,3) 8, best 8\n";

inline std::string factor_summary(const BinomialFactorization& f)
{
  std::string s = f.sign < 0 ? "-" : "";
  s += render_monomial_or_one(f.content);
  for (const auto& b : f.factors) {
    s += " * " + render(b.binomial.lambda());
    if (b.multiplicity > 1) s += "^" + std::to_string(b.multiplicity);
  }
  if (f.residual != MultiPoly::constant(f.residual.nvars(), 1)) s += " * [" + render(f.residual) + "]";
  return s;
}

inline std::string closing_example_report()
{
  const EqSystem t = parse_system(closing_example_text);
  const Equation& e1 = t[0];
  const Equation& e2 = t[1];
  std::ostringstream os;
  os << "E1: " << render(e1) << "\nE2: " << render(e2) << "\n";
  for (int i = 0; i < 2; ++i) {
    const SVector s = s_vector(t[i]);
    os << "S(E" << i + 1 << ") = (";
    for (std::size_t j = 0; j < s.size(); ++j) os << (j ? ", " : "") << render(s[j]);
    os << ")\n";
  }
  const std::pair<std::size_t, std::size_t> order[] = {{1, 2}, {2, 0}, {0, 1}};
  for (auto [j, k] : order) {
    const MultiPoly d = t_det(e1, e2, j, k);
    os << "t" << j + 1 << k + 1 << " = " << render(d) << " = " << factor_summary(binomial_factors(d)) << "\n";
  }
  const std::string cof = render(cofactor_3vars(e1, e2));
  os << "cofactor = " << cof << "\n";
  os << "(t23, t31, t12) = (" << cof << ") * (X - 1, Y - 1, Z - 1)\n";
  for (const auto& c : solution_hyperplanes(e1, e2).constraints()) os << "constraint: " << c << "\n";
  os << "minimal monomials of t23:";
  const auto mins = minimal_monomials(t_det(e1, e2, 1, 2));
  for (std::size_t i = 0; i < mins.size(); ++i) os << (i ? ", " : " ") << render_monomial(mins[i]);
  os << "\n";
  const BoundReport b = bounds(e1, e2);
  os << "bounds: sum " << b.sum_bound;
  for (const auto& p : b.pair_bounds) os << ", pair (" << p.j + 1 << "," << p.k + 1 << ") " << p.bound;
  os << ", best " << b.best << "\n";
  return os.str();
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Word equations: polynomial encoding, principal solutions, solution bounds", "weq"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output")->configurable(false);

  std::vector<std::string> inputs;
  std::string system_arg;
  std::string solution_arg;
  std::vector<std::size_t> pair;
  bool use_det = false;
  bool verify = false;
  bool csv = false;
  bool no_erasing = false;
  std::size_t max_len = 8;
  std::size_t alphabet = 2;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::size_t cases = 10000;
  std::uint64_t max_candidates = 100'000'000;

  auto* encode = app.add_subcommand("encode", "S-vector of each equation");
  encode->add_option("equations", inputs, "Equations (file or text)")->required();

  auto* det = app.add_subcommand("det", "Nonzero determinants t_jk of two equations");
  det->add_option("equations", inputs, "Two equations (one or two files/texts)")->required()->expected(1, 2);

  auto* factor = app.add_subcommand("factor", "Binomial factors of a polynomial, or of t_jk with --det");
  factor->add_option("input", inputs, "Polynomial, or two equations with --det")->required()->expected(1, 2);
  factor->add_flag("--det", use_det, "Factor the determinant t_jk of two equations");
  factor->add_option("--pair", pair, "1-based pair j k (default: first nonzero)")->expected(2)->allow_extra_args(false);

  auto* balanced = app.add_subcommand("balanced", "Balanced residual of each equation");
  balanced->add_option("equations", inputs, "Equations")->required();

  auto* check = app.add_subcommand("check", "Check a morphism against a system, by words and by polynomials");
  check->add_option("system", system_arg, "System")->required();
  check->add_option("solution", solution_arg, "Morphism, e.g. 'x=ab; y=ba'")->required();

  auto* principal = app.add_subcommand("principal", "Principal decomposition h = theta o g");
  principal->add_option("system", system_arg, "System")->required();
  principal->add_option("solution", solution_arg, "Morphism")->required();

  auto* hyper = app.add_subcommand("hyperplanes", "Length constraints from the binomial factors of t_jk");
  hyper->add_option("equations", inputs, "Two equations")->required()->expected(1, 2);

  auto* bnd = app.add_subcommand("bounds", "Bounds on rank n-1 common solutions");
  bnd->add_option("equations", inputs, "Two equations")->required()->expected(1, 2);
  bnd->add_flag("--verify", verify, "Check the bounds by exhaustive search");

  auto* search = app.add_subcommand("search", "Enumerate solutions up to a total image length");
  search->add_option("system", system_arg, "System")->required();
  search->add_flag("--csv", csv, "CSV output");
  search->add_flag("--no-erasing", no_erasing, "Only non-erasing solutions");

  for (auto* sub : {bnd, search}) {
    sub->add_option("--max-len", max_len, "Maximum total image length")->capture_default_str();
    sub->add_option("--alphabet", alphabet, "Target alphabet size")->capture_default_str();
    sub->add_option("--parallel", threads, "Worker threads")->capture_default_str();
    sub->add_option("--max-candidates", max_candidates, "Refuse larger searches")->capture_default_str();
  }

  auto* example = app.add_subcommand("paper-example", "Closing two-equation example, diffed against expected output");

  auto* fuzz = app.add_subcommand("fuzz", "Random check of the polynomial encoding against word comparison");
  // Let --json appear after the subcommand name too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  fuzz->add_option("--seed", seed, "Random seed")->capture_default_str();
  fuzz->add_option("--cases", cases, "Number of cases")->capture_default_str();

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  }
  catch (const CLI::ParseError& e) {
    err << "weq: " << e.what() << "\n" << "Run with --help for usage.\n";
    return UsageError;
  }

  try {
    SearchConfig cfg;
    cfg.max_total_image_length = max_len;
    cfg.alphabet_size = alphabet;
    cfg.allow_erasing = !no_erasing;
    cfg.threads = threads;
    cfg.max_candidates = max_candidates;

    if (*encode || *balanced) {
      std::string text;
      for (const auto& in : inputs) text += read_input(in) + "\n";
      const EqSystem t = parse_system(text);
      Json j = Json::array();
      for (const auto& e : t) {
        if (*encode) {
          const SVector s = s_vector(e);
          std::vector<std::string> comps;
          for (const auto& p : s.components) comps.push_back(render(p));
          j.push_back({{"equation", render(e)}, {"s_vector", comps}});
          if (!json) {
            out << render(e) << "\n";
            for (std::size_t i = 0; i < comps.size(); ++i) out << "  S_" << unknown_name(i) << " = " << comps[i] << "\n";
          }
        }
        else {
          const MultiPoly r = balanced_residual(e);
          j.push_back({{"equation", render(e)}, {"balanced", r.is_zero()}, {"residual", render(r)}});
          if (!json) out << render(e) << "  " << (r.is_zero() ? "balanced" : "not balanced, residual " + render(r)) << "\n";
        }
      }
      if (json) out << j.dump(2) << "\n";
      return Ok;
    }

    if (*det) {
      auto [e, e2] = read_pair(inputs);
      Json j = Json::array();
      for (const auto& [jk, t] : nonzero_determinants(e, e2)) {
        j.push_back({{"pair", {jk.first + 1, jk.second + 1}}, {"determinant", render(t)}});
        if (!json) out << "t" << jk.first + 1 << "," << jk.second + 1 << " = " << render(t) << "\n";
      }
      if (json) out << j.dump(2) << "\n";
      else if (j.empty()) out << "all determinants are zero\n";
      return Ok;
    }

    if (*factor) {
      MultiPoly p(0);
      if (use_det) {
        auto [e, e2] = read_pair(inputs);
        if (!pair.empty()) {
          if (pair[0] < 1 || pair[1] < 1 || pair[0] > e.n || pair[1] > e.n)
            throw ParseError("--pair indices must be between 1 and " + std::to_string(e.n));
          p = t_det(e, e2, pair[0] - 1, pair[1] - 1);
        }
        else {
          const auto dets = nonzero_determinants(e, e2);
          if (dets.empty()) throw ParseError("all determinants are zero");
          p = dets.front().second;
        }
      }
      else {
        if (inputs.size() != 1) throw ParseError("factor takes one polynomial");
        p = parse_poly(read_input(inputs[0]));
      }
      if (p.is_zero()) throw ParseError("cannot factor the zero polynomial");
      const BinomialFactorization f = binomial_factors(p);
      if (json) {
        Json j = to_json(f);
        j["polynomial"] = render(p);
        out << j.dump(2) << "\n";
      }
      else {
        out << render(p) << "\n";
        out << "  sign " << (f.sign < 0 ? "-" : "+") << ", content " << render_monomial_or_one(f.content) << "\n";
        for (const auto& b : f.factors)
          out << "  factor " << render(b.binomial.poly()) << "  lambda " << render(b.binomial.lambda())
              << (b.multiplicity > 1 ? "  ^" + std::to_string(b.multiplicity) : "") << "\n";
        out << "  residual " << render(f.residual) << "\n";
      }
      return Ok;
    }

    if (*check || *principal) {
      const EqSystem t = parse_system(read_input(system_arg));
      const Morphism h = parse_morphism(read_input(solution_arg), t.unknowns());
      if (h.domain_size() != t.unknowns())
        throw ParseError("morphism binds unknowns the system does not use");
      if (*check) {
        // Per-equation table: direct word comparison against the polynomial test.
        Json rows = Json::array();
        bool agree = true;
        bool all = true;
        for (const auto& e : t) {
          const bool word = is_solution(h, e);
          const bool poly = check_solution_poly(e, h);
          agree = agree && word == poly;
          all = all && word;
          rows.push_back({{"equation", render(e)}, {"word", word}, {"polynomial", poly}});
          if (!json)
            out << render(e) << "  word: " << (word ? "yes" : "no") << "  polynomial: " << (poly ? "yes" : "no")
                << (word == poly ? "" : "  DISAGREE") << "\n";
        }
        if (json)
          out << Json{{"equations", rows}, {"solution", all}, {"agree", agree}, {"rank", rank(h)}}.dump(2) << "\n";
        else
          out << (all ? "solution" : "not a solution") << ", rank " << rank(h) << "\n";
        return agree ? Ok : Violation;
      }
      if (!is_solution(h, t)) {
        err << "weq: the morphism is not a solution of the system\n";
        return Violation;
      }
      const PrincipalDecomposition d = principal_decompose(h, t);
      if (json) {
        out << to_json(d).dump(2) << "\n";
      }
      else {
        out << "g (rank " << rank(d.g) << "):\n" << render(d.g, true) << "\n";
        out << "theta:\n";
        for (std::size_t i = 0; i < d.theta.domain_size(); ++i)
          out << letter_name(static_cast<Letter>(i), true) << " = " << render_word(d.theta.image(static_cast<Letter>(i)))
              << "\n";
      }
      return Ok;
    }

    if (*hyper) {
      auto [e, e2] = read_pair(inputs);
      const Json j = hyperplanes_json(e, e2);
      if (json) {
        out << j.dump(2) << "\n";
        return Ok;
      }
      if (j["status"] != "ok") {
        out << "all determinants are zero\n";
        return Ok;
      }
      out << "t" << j["pair"][0].get<int>() << "," << j["pair"][1].get<int>() << " = " << j["determinant"].get<std::string>()
          << "\n";
      for (const auto& h : j["hyperplanes"]) {
        out << "  " << h["constraint"].get<std::string>() << (h["mixed"].get<bool>() ? "" : "  (erasing only)")
            << (h["divides_all"].get<bool>() ? "" : "  (not a factor of every t_jk)") << "\n";
      }
      return Ok;
    }

    if (*bnd) {
      auto [e, e2] = read_pair(inputs);
      if (!verify) {
        const BoundReport b = bounds(e, e2);
        if (json) {
          out << to_json(b).dump(2) << "\n";
        }
        else {
          out << "sum bound " << b.sum_bound << "\n";
          for (const auto& p : b.pair_bounds) out << "pair (" << p.j + 1 << "," << p.k + 1 << ") bound " << p.bound << "\n";
          out << "best " << b.best << (b.independent ? "" : " (not independent)") << "\n";
        }
        return Ok;
      }
      const BoundVerification v = verify_bounds(e, e2, cfg);
      if (json)
        out << to_json(v).dump(2) << "\n";
      else {
        out << v.message << "\n";
        for (const auto& l : v.class_normals) out << "  class " << length_constraint(l) << "\n";
        if (v.counterexample) out << "counterexample: " << render_inline(*v.counterexample) << "\n";
      }
      return v.status == BoundVerification::Status::Violation ? Violation : Ok;
    }

    if (*search) {
      const EqSystem t = parse_system(read_input(system_arg));
      const SolutionCatalog c = enumerate_solutions(t, cfg);
      if (csv)
        out << to_csv(c);
      else if (json)
        out << to_json(c).dump(2) << "\n";
      else {
        out << c.solutions.size() << " solutions, " << c.classes.size() << " rank " << t.unknowns() - 1
            << " classes\n";
        for (std::size_t i = 0; i < c.solutions.size(); ++i)
          out << "  " << render_inline(c.solutions[i]) << "  rank " << c.ranks[i] << "\n";
        for (const auto& k : c.classes)
          out << "  class " << length_constraint(k.normal) << " (" << k.members.size() << " solutions)\n";
      }
      return Ok;
    }

    if (*example) {
      const std::string got = closing_example_report();
      out << got;
      if (got != closing_example_expected) {
        err << "weq: output differs from the expected closing example\n";
        return Violation;
      }
      return Ok;
    }

    if (*fuzz) {
      EncodingFuzzConfig fc;
      fc.seed = seed;
      fc.cases = cases;
      const EncodingVerification r = verify_encoding(fc);
      if (json) {
        Json j = {{"cases", r.cases},
                  {"solutions", r.solutions},
                  {"balanced", r.balanced},
                  {"discrepancies", r.discrepancies},
                  {"balance_discrepancies", r.balance_discrepancies}};
        if (r.counterexample)
          j["counterexample"] = {{"equation", render(r.counterexample->first)},
                                 {"morphism", to_json(r.counterexample->second)}};
        out << j.dump(2) << "\n";
      }
      else {
        out << r.cases << " cases, " << r.solutions << " solutions, " << r.balanced << " balanced\n";
        out << r.discrepancies << " encoding discrepancies, " << r.balance_discrepancies << " balance discrepancies\n";
        if (r.counterexample)
          out << "counterexample: " << render(r.counterexample->first) << " with "
              << render_inline(r.counterexample->second) << "\n";
      }
      return r.discrepancies + r.balance_discrepancies == 0 ? Ok : Violation;
    }
  }
  catch (const ParseError& e) {
    err << "weq: " << e.what() << "\n";
    return UsageError;
  }
  catch (const std::invalid_argument& e) {
    err << "weq: " << e.what() << "\n";
    return UsageError;
  }
  catch (const std::out_of_range& e) {
    err << "weq: " << e.what() << "\n";
    return UsageError;
  }
  catch (const std::length_error& e) {
    err << "weq: " << e.what() << "\n";
    return UsageError;
  }
  catch (const std::domain_error& e) {
    err << "weq: " << e.what() << "\n";
    return UsageError;
  }
  return UsageError;
}

} // namespace weq::cli
