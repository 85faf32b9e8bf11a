#pragma once

/**
 * @file table.hpp
 * @brief Bigraded rank tables (homological degree h, internal degree q),
 * with TSV and JSON serialization.
 */

#include <map>
#include <string>
#include <utility>

#include "khtensor/laurent.hpp"

namespace kht {

struct TableMeta {
  int l = 0;
  int k = 0;
  std::string field = "Q";
  std::string version;
  friend bool operator==(const TableMeta&, const TableMeta&) = default;
};

class BigradedTable {
 public:
  BigradedTable() = default;
  /// Zero ranks are dropped.
  explicit BigradedTable(const std::map<std::pair<int, int>, int>& ranks, TableMeta meta = {});

  const std::map<std::pair<int, int>, int>& ranks() const { return ranks_; }
  int rank(int h, int q) const;
  bool empty() const { return ranks_.empty(); }
  int total_rank() const;
  TableMeta& meta() { return meta_; }
  const TableMeta& meta() const { return meta_; }

  /// Sum of (-1)^h rank q^q.
  LaurentPoly euler_characteristic() const;

  /// "h\tq\trank" header then one row per nonzero entry.
  std::string to_tsv() const;
  static BigradedTable from_tsv(const std::string& text);
  /// {"meta":{"l","k","field","version"},"table":[{"h","q","rank"}]}
  std::string to_json(int indent = -1) const;
  static BigradedTable from_json(const std::string& text);
  /// Rows q, columns h, as in Khovanov homology tables.
  std::string pretty() const;

  /// Equal ranks; meta data is ignored.
  friend bool operator==(const BigradedTable& a, const BigradedTable& b) { return a.ranks_ == b.ranks_; }

 private:
  std::map<std::pair<int, int>, int> ranks_;
  TableMeta meta_;
};

}  // namespace kht
