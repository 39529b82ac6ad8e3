#pragma once

// JSON and CSV views of analysis results, for the command-line tool.

#include <sstream>
#include <string>

#include <json.hpp>

#include "weq/analysis.hpp"
#include "weq/principal.hpp"
#include "weq/search.hpp"
#include "weq/text.hpp"

namespace weq {

using Json = nlohmann::ordered_json;

inline Json to_json(const LambdaVector& l) { return l.entries(); }

inline Json to_json(const Morphism& h)
{
  Json j = Json::object();
  for (std::size_t i = 0; i < h.domain_size(); ++i) j[unknown_name(i)] = render_word(h.image(static_cast<Letter>(i)));
  return j;
}

inline Json to_json(const BinomialFactorization& f)
{
  Json factors = Json::array();
  for (const auto& b : f.factors)
    factors.push_back({{"lambda", to_json(b.binomial.lambda())}, {"multiplicity", b.multiplicity}});
  return {{"sign", f.sign},
          {"content", render_monomial_or_one(f.content)},
          {"factors", factors},
          {"residual", render(f.residual)}};
}

inline Json to_json(const BoundReport& b)
{
  Json pairs = Json::array();
  for (const auto& p : b.pair_bounds) pairs.push_back({{"pair", {p.j + 1, p.k + 1}}, {"bound", p.bound}});
  return {{"independent", b.independent}, {"sum", b.sum_bound}, {"pairs", pairs}, {"best", b.best}};
}

inline Json hyperplanes_json(const Equation& e, const Equation& e2)
{
  const HyperplaneReport r = solution_hyperplanes(e, e2);
  Json j;
  j["equations"] = {render(e), render(e2)};
  if (r.status == HyperplaneReport::Status::AllDeterminantsZero) {
    j["status"] = "all_determinants_zero";
  }
  else {
    const auto& p = r.primary();
    j["status"] = "ok";
    j["pair"] = {p.j + 1, p.k + 1};
    j["determinant"] = render(p.determinant);
    const Json f = to_json(p.factorization);
    j["content"] = f["content"];
    j["factors"] = f["factors"];
    j["residual"] = f["residual"];
    Json hyper = Json::array();
    for (const auto& c : r.hyperplanes) {
      Json h = {{"lambda", to_json(c.lambda)},
                {"multiplicity", c.multiplicity},
                {"mixed", c.mixed},
                {"divides_all", c.divides_all},
                {"constraint", c.constraint()}};
      if (c.erased_unknown) {
        h["erased_unknown"] = unknown_name(*c.erased_unknown);
        h["delta_trivial"] = c.delta_trivial;
      }
      hyper.push_back(std::move(h));
    }
    j["hyperplanes"] = hyper;
    j["hyperplane_constraints"] = r.constraints();
  }
  j["bounds"] = to_json(bounds(e, e2));
  return j;
}

inline Json to_json(const PrincipalDecomposition& d)
{
  Json trace = Json::array();
  for (const auto& s : d.trace) {
    switch (s.kind) {
    case ReductionStep::Kind::Erase:
      trace.push_back(unknown_name(s.target) + " -> eps");
      break;
    case ReductionStep::Kind::Prefix:
      trace.push_back(unknown_name(s.target) + " -> " + unknown_name(s.source) + unknown_name(s.target));
      break;
    case ReductionStep::Kind::Merge:
      trace.push_back(unknown_name(s.target) + " -> " + unknown_name(s.source));
      break;
    }
  }
  Json theta = Json::object();
  for (std::size_t i = 0; i < d.theta.domain_size(); ++i)
    theta[letter_name(static_cast<Letter>(i), true)] = render_word(d.theta.image(static_cast<Letter>(i)));
  Json g = Json::object();
  for (std::size_t i = 0; i < d.g.domain_size(); ++i)
    g[unknown_name(i)] = render_word(d.g.image(static_cast<Letter>(i)), true);
  return {{"g", g}, {"theta", theta}, {"rank", rank(d.g)}, {"trace", trace}};
}

inline Json to_json(const SolutionCatalog& c)
{
  Json sols = Json::array();
  std::vector<long> class_of(c.solutions.size(), -1);
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    for (auto m : c.classes[k].members) class_of[m] = static_cast<long>(k);
  for (std::size_t i = 0; i < c.solutions.size(); ++i) {
    Json s = {{"images", to_json(c.solutions[i])},
              {"length_type", c.solutions[i].length_type()},
              {"rank", c.ranks[i]}};
    if (class_of[i] >= 0) s["class"] = class_of[i];
    sols.push_back(std::move(s));
  }
  Json classes = Json::array();
  for (const auto& k : c.classes)
    classes.push_back({{"normal", to_json(k.normal)},
                       {"constraint", length_constraint(k.normal)},
                       {"erasing", k.erasing},
                       {"size", k.members.size()}});
  Json ranks = Json::object();
  for (const auto& [r, idx] : c.by_rank) ranks[std::to_string(r)] = idx.size();
  return {{"unknowns", c.unknowns},
          {"candidates", c.candidates},
          {"solution_count", c.solutions.size()},
          {"by_rank", ranks},
          {"classes", classes},
          {"solutions", sols}};
}

/// One row per solution: images, length type, rank, class id (empty if none).
inline std::string to_csv(const SolutionCatalog& c)
{
  std::vector<long> class_of(c.solutions.size(), -1);
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    for (auto m : c.classes[k].members) class_of[m] = static_cast<long>(k);
  std::ostringstream os;
  for (std::size_t i = 0; i < c.unknowns; ++i) os << unknown_name(i) << ',';
  os << "length_type,rank,class\n";
  for (std::size_t i = 0; i < c.solutions.size(); ++i) {
    const auto& h = c.solutions[i];
    for (std::size_t x = 0; x < c.unknowns; ++x) os << render_word(h.image(static_cast<Letter>(x))) << ',';
    const auto l = h.length_type();
    for (std::size_t x = 0; x < l.size(); ++x) os << (x ? " " : "") << l[x];
    os << ',' << c.ranks[i] << ',';
    if (class_of[i] >= 0) os << class_of[i];
    os << '\n';
  }
  return os.str();
}

inline Json to_json(const BoundVerification& v)
{
  const char* status = v.status == BoundVerification::Status::Verified    ? "verified"
                       : v.status == BoundVerification::Status::Violation ? "violation"
                                                                          : "not_independent";
  Json normals = Json::array();
  for (const auto& l : v.class_normals) normals.push_back(to_json(l));
  Json j = {{"status", status},
            {"message", v.message},
            {"bounds", to_json(v.bounds)},
            {"classes", v.classes},
            {"erasing_classes", v.erasing_classes},
            {"class_normals", normals}};
  if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
  return j;
}

} // namespace weq
