#pragma once

// Canonical JSON forms for operators and relation sets, plus a small
// versioned file cache keyed by (kind, n, legs).

#include "pq/uqpn.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace pq {

// Bump when the serialized layout or any producing convention changes;
// stale cache entries are ignored, never migrated.
inline constexpr int kSerialVersion = 1;

inline nlohmann::ordered_json operator_to_json(const GradedOperator& op) {
  nlohmann::ordered_json j;
  j["n"] = op.n();
  j["legs"] = op.legs();
  j["parity"] = op.parity();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [k, v] : op.entries())
    entries.push_back({k.first, k.second, v.str()});
  j["entries"] = std::move(entries);
  return j;
}

inline GradedOperator operator_from_json(const nlohmann::json& j) {
  GradedOperator op(j.at("n").get<int>(), j.at("legs").get<int>(),
                    j.at("parity").get<int>());
  for (const auto& e : j.at("entries"))
    op.add_entry(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>(),
                 Scalar::parse(e.at(2).get<std::string>()));
  return op;
}

inline nlohmann::ordered_json word_to_json(const Word& w) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& g : w) a.push_back({g.i, g.j, g.inverse ? 1 : 0});
  return a;
}

inline Word word_from_json(const nlohmann::json& a) {
  Word w;
  for (const auto& e : a) {
    auto g = make_symbol(e.at(0).get<int>(), e.at(1).get<int>(),
                         e.at(2).get<int>() != 0);
    if (!g) throw std::invalid_argument("serialized word holds a zero symbol");
    w.push_back(*g);
  }
  return w;
}

inline nlohmann::ordered_json element_to_json(const AlgebraElement& e) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& [w, c] : e.terms)
    a.push_back({word_to_json(w), c.num().str(), c.den().str()});
  return a;
}

inline AlgebraElement element_from_json(const nlohmann::json& a) {
  AlgebraElement e;
  for (const auto& t : a)
    e.add(word_from_json(t.at(0)),
          Frac(Scalar::parse(t.at(1).get<std::string>()),
               Scalar::parse(t.at(2).get<std::string>())));
  return e;
}

inline nlohmann::ordered_json relations_to_json(const RelationSet& rels) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& [idx, e] : rels)
    a.push_back({idx[0], idx[1], idx[2], idx[3], element_to_json(e)});
  return a;
}

inline RelationSet relations_from_json(const nlohmann::json& a) {
  RelationSet rels;
  for (const auto& r : a)
    rels.emplace(RelationIndex{r.at(0).get<int>(), r.at(1).get<int>(),
                               r.at(2).get<int>(), r.at(3).get<int>()},
                 element_from_json(r.at(4)));
  return rels;
}

// File cache under PQ_CACHE_DIR (or an explicit directory); disabled when
// neither is given.  Writes are atomic via a rename; mismatched versions and
// unreadable entries are ignored.
class ObjectCache {
public:
  ObjectCache() {
    if (const char* env = std::getenv("PQ_CACHE_DIR"); env && *env) dir_ = env;
  }
  explicit ObjectCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  std::optional<nlohmann::json> get(const std::string& kind, int n, int legs) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(file_for(kind, n, legs));
    if (!in) return std::nullopt;
    try {
      nlohmann::json j = nlohmann::json::parse(in);
      if (j.at("version").get<int>() != kSerialVersion) return std::nullopt;
      return j.at("payload");
    } catch (const std::exception& ex) {
      std::cerr << "warning: discarding unreadable cache entry for " << kind
                << ": " << ex.what() << "\n";
      return std::nullopt;
    }
  }

  void put(const std::string& kind, int n, int legs,
           const nlohmann::ordered_json& payload) const {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    nlohmann::ordered_json j;
    j["version"] = kSerialVersion;
    j["payload"] = payload;
    std::filesystem::path final = file_for(kind, n, legs);
    std::filesystem::path tmp = final;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, final);
  }

private:
  std::filesystem::path file_for(const std::string& kind, int n, int legs) const {
    return dir_ / (kind + "-n" + std::to_string(n) + "-l" + std::to_string(legs) +
                   ".json");
  }

  std::filesystem::path dir_;
};

}  // namespace pq
