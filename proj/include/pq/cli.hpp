#pragma once

// Command implementations behind the pq tool: suite dispatch, report
// emission, and the word grammars.  Kept header-side so the acceptance
// runner can drive the same code paths in-process.

#include "pq/centralizer.hpp"
#include "pq/serialize.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace pq {

struct RunConfig {
  int n = 2;
  int legs = 2;
  bool symbolic = true;  // sampled mode only changes the relation sweep
  unsigned seed = 0;     // recorded for sampled runs
  bool json_output = true;
  ObjectCache cache;     // from PQ_CACHE_DIR unless constructed explicitly
};

inline void emit_report(const VerificationReport& r, const RunConfig& cfg,
                        std::ostream& os) {
  if (cfg.json_output) {
    os << r.to_json().dump(2) << "\n";
    return;
  }
  os << (r.pass ? "PASS" : "FAIL") << " " << r.check;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  if (!r.pass)
    for (const auto& d : r.details)
      if (d.rfind("FAIL", 0) == 0) os << "  " << d << "\n";
}

inline const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> targets = {
      "manin",      "cybe",           "qybe",
      "decomposition", "lemmas",      "relations",
      "classical-limit", "cobracket-limit", "brauer",
      "module-homs", "ps-formula"};
  return targets;
}

inline std::vector<VerificationReport> run_checks(const std::string& which,
                                                  const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  auto want = [&](const std::string& t) { return which == "all" || which == t; };
  if (want("manin")) out.push_back(verify_manin_triple(cfg.n));
  if (want("cybe")) {
    out.push_back(verify_cybe(cfg.n));
    out.push_back(verify_cobracket_via_s(cfg.n));
  }
  if (want("qybe")) out.push_back(verify_qybe(cfg.n));
  if (want("decomposition")) out.push_back(verify_decomposition(cfg.n));
  if (want("lemmas")) {
    out.push_back(verify_proof_lemmas(cfg.n));
    out.push_back(verify_smatrix_inverse(cfg.n));
  }
  if (want("relations")) {
    VerificationReport r = verify_relations_equivalence(cfg.n, cfg.symbolic);
    if (!cfg.symbolic) r.params["seed"] = std::to_string(cfg.seed);
    out.push_back(std::move(r));
    out.push_back(verify_representation_kernel(cfg.n, cfg.legs));
  }
  if (want("classical-limit")) out.push_back(verify_classical_limit(cfg.n));
  if (want("cobracket-limit")) out.push_back(verify_cobracket_limit(cfg.n));
  if (want("brauer")) out.push_back(verify_brauer_relations(cfg.n, cfg.legs));
  if (want("module-homs")) out.push_back(verify_module_homs(cfg.n, cfg.legs));
  if (want("ps-formula")) out.push_back(verify_PS_formula(cfg.n));
  return out;
}

inline int run_verify(const std::string& which, const RunConfig& cfg,
                      std::ostream& os) {
  bool all_pass = true;
  for (const auto& r : run_checks(which, cfg)) {
    emit_report(r, cfg, os);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

inline int run_centralizer(const RunConfig& cfg, const std::string& side,
                           bool want_double, std::ostream& os) {
  CommutantProblem prob = side == "brauer" ? brauer_problem(cfg.n, cfg.legs)
                                           : uqpn_problem(cfg.n, cfg.legs);
  CommutantBasis basis = solve_commutant(prob);
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["legs"] = cfg.legs;
  j["side"] = side;
  j["dimension"] = basis.dimension;
  j["dimension_even"] = basis.dimension_by_parity[0];
  j["dimension_odd"] = basis.dimension_by_parity[1];
  j["evaluation_verified"] = basis.evaluation_verified;
  os << j.dump(2) << "\n";
  if (!want_double) return 0;
  VerificationReport r = verify_double_centralizer(cfg.n, cfg.legs);
  emit_report(r, cfg, os);
  return r.pass ? 0 : 1;
}

inline std::string element_to_string(const AlgebraElement& e) {
  if (e.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : e.terms) {
    if (!s.empty()) s += "  +  ";
    s += "(" + c.str() + ")";
    for (const auto& g : w) s += " " + g.str();
  }
  return s;
}

// Relation dump, served from the cache when one is configured.  Verification
// paths always recompute; only the dump trusts (and refreshes) the cache.
inline int run_relations_dump(const RunConfig& cfg, std::ostream& os) {
  RelationSet rels;
  if (auto cached = cfg.cache.get("relations", cfg.n, 1))
    rels = relations_from_json(*cached);
  else {
    rels = extract_relations(cfg.n);
    cfg.cache.put("relations", cfg.n, 1, relations_to_json(rels));
  }
  if (cfg.json_output) {
    os << relations_to_json(rels).dump(2) << "\n";
    return 0;
  }
  for (const auto& [idx, e] : rels)
    os << "(" << idx[0] << "," << idx[1] << "," << idx[2] << "," << idx[3]
       << "): " << element_to_string(e) << " = 0\n";
  return 0;
}

// Grammar: whitespace-separated t(i,j) / tinv(i,i) factors.
inline Word parse_generator_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inv = tok.rfind("tinv(", 0) == 0;
    if (!inv && tok.rfind("t(", 0) != 0)
      throw std::invalid_argument("bad factor '" + tok + "'");
    size_t open = tok.find('('), comma = tok.find(','), close = tok.find(')');
    if (comma == std::string::npos || close != tok.size() - 1 || comma < open)
      throw std::invalid_argument("bad factor '" + tok + "'");
    int i = std::stoi(tok.substr(open + 1, comma - open - 1));
    int j = std::stoi(tok.substr(comma + 1, close - comma - 1));
    auto g = make_symbol(i, j, inv);
    if (!g) throw std::invalid_argument("factor '" + tok + "' names a zero generator");
    w.push_back(*g);
  }
  return w;
}

// Grammar: whitespace-separated tK / cK tokens, 1-based positions.
inline BrauerWord parse_brauer_word(const std::string& text) {
  BrauerWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 't' && tok[0] != 'c'))
      throw std::invalid_argument("bad token '" + tok + "'");
    int pos;
    try {
      pos = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad token '" + tok + "'");
    }
    if (pos < 1) throw std::invalid_argument("bad token '" + tok + "'");
    w.push_back({tok[0] == 'c', pos});
  }
  return w;
}

inline int run_pbw(const RunConfig& cfg, const std::string& word_text,
                   std::ostream& os) {
  Word w = parse_generator_word(word_text);
  for (const auto& g : w)
    if (std::abs(g.i) > cfg.n || std::abs(g.j) > cfg.n)
      throw std::invalid_argument("factor " + g.str() + " exceeds n");
  AlgebraElement e;
  e.add(w, Frac(1));
  Straightener st(cfg.n);
  AlgebraElement r = st.straighten(e);
  if (cfg.json_output) {
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["input"] = word_to_json(w);
    j["reduced"] = element_to_json(r);
    os << j.dump(2) << "\n";
  } else {
    os << element_to_string(r) << "\n";
  }
  return 0;
}

inline int run_brauer_eval(const RunConfig& cfg, const std::string& word_text,
                           std::ostream& os) {
  BrauerWord w = parse_brauer_word(word_text);
  for (const auto& tok : w)
    if (tok.pos + 1 > cfg.legs)
      throw std::invalid_argument("token position exceeds the leg count");
  GradedOperator op = evaluate_word(brauer_rep(cfg.n, cfg.legs), w);
  if (cfg.json_output) {
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["legs"] = cfg.legs;
    j["word"] = word_to_string(w);
    j["operator"] = operator_to_json(op);
    os << j.dump(2) << "\n";
  } else {
    os << word_to_string(w) << " -> " << op.nnz() << " nonzero entries\n";
  }
  return 0;
}

}  // namespace pq
