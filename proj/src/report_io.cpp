#include "confcat/report_io.hpp"

#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "confcat/errors.hpp"

namespace confcat::bounds {

namespace {

Direction parse_direction(const std::string& s) {
  for (auto d : {Direction::lower, Direction::upper, Direction::exact}) {
    if (to_string(d) == s) return d;
  }
  throw DomainError("unknown bound direction '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : r.evidence) {
    ev.push_back({{"direction", to_string(e.direction)},
                  {"value", e.value},
                  {"rule", e.rule},
                  {"citation", e.citation}});
  }
  nlohmann::json j = {{"invariant", to_string(r.invariant)},
                      {"n", r.n},
                      {"k", r.k},
                      {"lower", r.lower},
                      {"upper", r.upper},
                      {"exact", r.exact},
                      {"conjecture_value", nullptr},
                      {"evidence", std::move(ev)}};
  if (r.conjecture_value) j["conjecture_value"] = *r.conjecture_value;
  return j;
}

BoundReport report_from_json(const nlohmann::json& j) {
  BoundReport r{parse_invariant(j.at("invariant").get<std::string>()),
                j.at("n").get<int>(),
                j.at("k").get<int>(),
                j.at("lower").get<std::int64_t>(),
                j.at("upper").get<std::int64_t>(),
                j.at("exact").get<bool>(),
                std::nullopt,
                {}};
  if (!j.at("conjecture_value").is_null()) {
    r.conjecture_value = j["conjecture_value"].get<std::int64_t>();
  }
  for (const auto& e : j.at("evidence")) {
    r.evidence.push_back({parse_direction(e.at("direction").get<std::string>()),
                          e.at("value").get<std::int64_t>(),
                          e.at("rule").get<std::string>(),
                          e.at("citation").get<std::string>()});
  }
  return r;
}

std::string interval_cell(const BoundReport& r) {
  if (r.exact) return std::to_string(r.lower);
  return "[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]";
}

std::string to_markdown(const BoundReport& r) {
  std::ostringstream os;
  os << "| invariant | n | k | lower | upper | exact |\n"
     << "|---|---|---|---|---|---|\n"
     << "| " << to_string(r.invariant) << " | " << r.n << " | " << r.k
     << " | " << r.lower << " | " << r.upper << " | "
     << (r.exact ? "yes" : "no") << " |\n\n";
  for (const auto& e : r.evidence) {
    os << "- " << to_string(e.direction) << " " << e.value << " `" << e.rule
       << "`: " << e.citation << "\n";
  }
  if (r.conjecture_value) {
    os << "\nconjectured value (annotation only): " << *r.conjecture_value
       << "\n";
  }
  return os.str();
}

std::string sweep_to_markdown(const std::vector<BoundReport>& reports) {
  std::set<Invariant> present;
  std::map<std::pair<int, int>, std::map<Invariant, const BoundReport*>> rows;
  for (const auto& r : reports) {
    present.insert(r.invariant);
    rows[{r.n, r.k}][r.invariant] = &r;
  }
  std::ostringstream os;
  os << "| n | k |";
  for (auto inv : present) os << " " << to_string(inv) << " |";
  os << "\n|---|---|";
  for (std::size_t i = 0; i < present.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& [nk, cells] : rows) {
    os << "| " << nk.first << " | " << nk.second << " |";
    for (auto inv : present) {
      auto it = cells.find(inv);
      os << " " << (it == cells.end() ? "" : interval_cell(*it->second))
         << " |";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace confcat::bounds
