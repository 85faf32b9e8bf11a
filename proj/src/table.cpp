#include "khtensor/table.hpp"

#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kht {

BigradedTable::BigradedTable(const std::map<std::pair<int, int>, int>& ranks, TableMeta meta) : meta_(std::move(meta)) {
  for (const auto& [key, r] : ranks) {
    if (r < 0) throw std::invalid_argument("BigradedTable: negative rank");
    if (r > 0) ranks_[key] = r;
  }
}

int BigradedTable::rank(int h, int q) const {
  auto it = ranks_.find({h, q});
  return it == ranks_.end() ? 0 : it->second;
}

int BigradedTable::total_rank() const {
  int s = 0;
  for (const auto& [key, r] : ranks_) s += r;
  return s;
}

LaurentPoly BigradedTable::euler_characteristic() const {
  LaurentPoly p;
  for (const auto& [key, r] : ranks_) p += LaurentPoly::monomial(key.second, key.first % 2 == 0 ? r : -r);
  return p;
}

std::string BigradedTable::to_tsv() const {
  std::ostringstream out;
  out << "h\tq\trank\n";
  for (const auto& [key, r] : ranks_) out << key.first << '\t' << key.second << '\t' << r << '\n';
  return out.str();
}

BigradedTable BigradedTable::from_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("h\tq\trank", 0) != 0) throw std::invalid_argument("TSV table: missing header");
  std::map<std::pair<int, int>, int> ranks;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int h, q, r;
    if (!(row >> h >> q >> r)) throw std::invalid_argument("TSV table: bad row '" + line + "'");
    ranks[{h, q}] += r;
  }
  return BigradedTable(ranks);
}

std::string BigradedTable::to_json(int indent) const {
  nlohmann::json j;
  j["meta"] = {{"l", meta_.l}, {"k", meta_.k}, {"field", meta_.field}, {"version", meta_.version}};
  j["table"] = nlohmann::json::array();
  for (const auto& [key, r] : ranks_) j["table"].push_back({{"h", key.first}, {"q", key.second}, {"rank", r}});
  return j.dump(indent);
}

BigradedTable BigradedTable::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    TableMeta meta;
    if (j.contains("meta")) {
      const auto& m = j.at("meta");
      meta.l = m.value("l", 0);
      meta.k = m.value("k", 0);
      meta.field = m.value("field", std::string("Q"));
      meta.version = m.value("version", std::string());
    }
    std::map<std::pair<int, int>, int> ranks;
    for (const auto& e : j.at("table")) ranks[{e.at("h").get<int>(), e.at("q").get<int>()}] += e.at("rank").get<int>();
    return BigradedTable(ranks, meta);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("JSON table: ") + e.what());
  }
}

std::string BigradedTable::pretty() const {
  if (ranks_.empty()) return "(zero)\n";
  std::set<int> hs, qs;
  for (const auto& [key, r] : ranks_) {
    hs.insert(key.first);
    qs.insert(key.second);
  }
  const int h0 = *hs.begin(), h1 = *hs.rbegin();
  std::ostringstream out;
  out << std::setw(6) << "q\\h";
  for (int h = h0; h <= h1; ++h) out << std::setw(4) << h;
  out << '\n';
  for (auto it = qs.rbegin(); it != qs.rend(); ++it) {
    out << std::setw(6) << *it;
    for (int h = h0; h <= h1; ++h) {
      const int r = rank(h, *it);
      if (r) out << std::setw(4) << r;
      else out << std::setw(4) << '.';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kht
