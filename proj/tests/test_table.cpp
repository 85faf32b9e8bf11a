#include <stdexcept>

#include "doctest.h"
#include "khtensor/table.hpp"

using namespace kht;

namespace {

BigradedTable trefoil() {
  return BigradedTable({{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}}, TableMeta{0, 0, "Q", "test"});
}

}  // namespace

TEST_CASE("bigraded tables round trip through TSV and JSON") {
  const BigradedTable t = trefoil();
  CHECK(BigradedTable::from_tsv(t.to_tsv()) == t);
  const BigradedTable back = BigradedTable::from_json(t.to_json());
  CHECK(back == t);
  CHECK(back.meta() == t.meta());
  CHECK(t.to_tsv().rfind("h\tq\trank\n", 0) == 0);
  CHECK_THROWS_AS(BigradedTable::from_tsv("0 1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(BigradedTable::from_json("{\"table\": 3}"), std::invalid_argument);
}

TEST_CASE("Euler characteristic of a table") {
  const auto chi = trefoil().euler_characteristic();
  CHECK(chi == LaurentPoly::monomial(1) + LaurentPoly::monomial(3) + LaurentPoly::monomial(5) - LaurentPoly::monomial(9));
  CHECK(BigradedTable({{{0, 0}, 0}}).empty());
  CHECK(trefoil().total_rank() == 4);
}
