#include "schreier/io.hpp"

#include <sstream>
#include <stdexcept>

namespace schreier::io {

RationalVector parse_vector(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("vector is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("vector must be a JSON object {\"index\": \"p/q\"}");
  std::vector<RationalVector::Entry> entries;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    Element idx = 0;
    try {
      idx = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || idx < 1) throw std::invalid_argument("vector index \"" + key + "\" is not a positive integer");
    Rational v;
    if (value.is_string())
      v = parse_rational(value.get<std::string>());
    else if (value.is_number_integer())
      v = parse_rational(value.dump());
    else
      throw std::invalid_argument("vector value at \"" + key + "\" must be a \"p/q\" string or an integer");
    entries.emplace_back(idx, v);
  }
  return RationalVector::from_entries(std::move(entries));
}

Json to_json(const FinSet& f) { return Json(f.elements()); }

Json to_json(const RationalVector& v) {
  Json j = Json::object();
  for (const auto& [i, q] : v.entries()) j[std::to_string(i)] = to_string(q);
  return j;
}

Json to_json(const NormResult& r) { return {{"value", to_string(r.value)}, {"witness", to_json(r.witness)}}; }

Json to_json(const Decomposition& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) blocks.push_back(to_json(b));
  return {{"xi", d.xi.value}, {"blocks", blocks}, {"remainder", to_json(d.remainder)}};
}

Json to_json(const AverageBlock& b) {
  return {{"xi", b.xi.value}, {"n", b.n}, {"support", to_json(b.support)}, {"vector", to_json(b.vector)}};
}

Json to_json(const DTruncation& d) {
  return {{"xi", d.xi.value},         {"value", d.value},          {"exact", d.exact},
          {"witness", to_json(d.witness)}, {"states", d.states}, {"prefix_values", d.prefix_values}};
}

Json to_json(const RatioWitness& w) {
  return {{"k", w.k},
          {"a", to_json(w.a)},
          {"norm_l", to_string(w.norm_l)},
          {"norm_m", to_string(w.norm_m)},
          {"on_l", to_json(w.on_l)},
          {"on_m", to_json(w.on_m)}};
}

Json to_json(const BasisReport& r) {
  return {{"claim", r.claim}, {"n", r.n}, {"bound", to_string(r.bound)}, {"observed", to_string(r.observed)},
          {"pass", r.pass}};
}

Json to_json(const ComplementedBasis& b, bool with_vectors) {
  Json blocks = Json::array();
  for (std::size_t i = 0; i < b.f.size(); ++i) {
    Json blk = {{"n", i + 1}, {"min", b.f[i].min()}, {"max", b.f[i].max()}, {"size", b.f[i].size()}};
    if (with_vectors) blk["u"] = to_json(b.u[i]);
    blocks.push_back(blk);
  }
  Json report = Json::array();
  bool pass = true;
  for (const auto& r : basis_invariants(b)) {
    pass = pass && r.pass;
    report.push_back(to_json(r));
  }
  return {{"xi", b.xi.value}, {"count", b.f.size()}, {"blocks", blocks}, {"report", report}, {"pass", pass}};
}

Json to_json(const UncomplementedExample& e, bool with_vectors) {
  Json blocks = Json::array();
  for (std::size_t i = 0; i < e.u.size(); ++i) {
    const FinSet s = e.u[i].support();
    Json blk = {{"n", i + 1},
                {"q", e.q[i]},
                {"a", to_string(e.a[i])},
                {"min", s.min()},
                {"max", s.max()}};
    if (with_vectors) {
      blk["v"] = to_json(e.v[i]);
      blk["w"] = to_json(e.w[i]);
    }
    blocks.push_back(blk);
  }
  return {{"xi", e.xi.value}, {"m_min", e.m_prefix.min()}, {"m_max", e.m_prefix.max()}, {"blocks", blocks}};
}

namespace {

Json line_json(const CheckLine& l) {
  return {{"claim", l.claim},
          {"trial", l.trial},
          {"relation", std::string(relation_symbol(l.relation))},
          {"bound", to_string(l.bound)},
          {"observed", to_string(l.observed)},
          {"pass", l.pass}};
}

}  // namespace

Json to_json(const SuiteReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json j = {{"claim", c.claim},
              {"relation", std::string(relation_symbol(c.relation))},
              {"instances", c.instances},
              {"violations", c.violations}};
    j["worst_ratio"] = c.worst_ratio ? Json(to_string(*c.worst_ratio)) : Json(nullptr);
    claims.push_back(j);
  }
  Json lines = Json::array();
  for (const auto& l : r.lines) lines.push_back(line_json(l));
  return {{"suite", r.suite},        {"seed", r.seed},   {"trials", r.trials},
          {"checks", r.checks()},    {"violations", r.violations()}, {"pass", r.pass()},
          {"claims", claims},        {"notes", r.notes}, {"lines", lines}};
}

std::string genericity_tsv(const std::vector<GenericityRow>& rows) {
  std::ostringstream os;
  os << "sample\tprefix_len\td_LM\td_ML\texact_LM\texact_ML\n";
  for (const auto& r : rows)
    os << r.sample << '\t' << r.prefix_len << '\t' << r.lm.value << '\t' << r.ml.value << '\t'
       << (r.lm.exact ? 1 : 0) << '\t' << (r.ml.exact ? 1 : 0) << '\n';
  return os.str();
}

Json genericity_json(const std::vector<GenericityRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"sample", r.sample},
                   {"prefix_len", r.prefix_len},
                   {"d_LM", r.lm.value},
                   {"d_ML", r.ml.value},
                   {"exact_LM", r.lm.exact},
                   {"exact_ML", r.ml.exact}});
  return out;
}

std::string suite_tsv(const SuiteReport& r) {
  std::ostringstream os;
  os << "claim\trelation\tinstances\tviolations\tworst_ratio\n";
  for (const auto& c : r.claims)
    os << c.claim << '\t' << relation_symbol(c.relation) << '\t' << c.instances << '\t' << c.violations << '\t'
       << (c.worst_ratio ? to_string(*c.worst_ratio) : "-") << '\n';
  for (const auto& n : r.notes) os << "# " << n << '\n';
  if (!r.lines.empty()) {
    os << "\nclaim\ttrial\trelation\tbound\tobserved\tpass\n";
    for (const auto& l : r.lines)
      os << l.claim << '\t' << l.trial << '\t' << relation_symbol(l.relation) << '\t' << to_string(l.bound) << '\t'
         << to_string(l.observed) << '\t' << (l.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace schreier::io
