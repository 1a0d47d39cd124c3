#include "doctest.h"

#include <stdexcept>

#include "hnc/integer_matrix.hpp"
#include "hnc/kk_sequences.hpp"

using namespace hnc;

TEST_CASE("Smith normal form") {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(std::abs(determinant(s.U)) == 1);
  CHECK(std::abs(determinant(s.V)) == 1);
  CHECK(s.invariants == std::vector<std::int64_t>{2, 6, 12});
  const IntMatrix b{{1, 2, 3}, {2, 4, 6}};
  CHECK(smith_normal_form(b).rank() == 1);
  const auto k = kernel_basis(b);
  CHECK(k.cols() == 2);
  CHECK((b * k).is_zero());
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), std::invalid_argument);
}

TEST_CASE("both six-term sequences are exact") {
  for (const auto& seq : {pv_ktheory_sequence(), khomology_sequence()}) {
    const auto rep = check_exactness(seq);
    CHECK(rep.exact);
    CHECK(rep.nodes.size() == 6);
    CHECK(rep.failing_nodes().empty());
  }
}

TEST_CASE("mutations break exactness where predicted") {
  const auto suite = mutation_suite();
  CHECK(suite.size() == 12);
  for (const auto& m : suite) {
    INFO(m.description);
    CHECK(check_exactness(apply_mutation(m)).failing_nodes() == m.predicted_failures);
  }
}

TEST_CASE("pairing tables, duality and faithfulness") {
  const auto [even, odd] = pairing_tables();
  CHECK(even.provenance.size() == 3);
  CHECK(odd.entries == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}});
  const auto d = check_duality();
  CHECK(d.pass);
  CHECK(d.checks.size() > 10);
  auto wrong = stated_base_pairings();
  wrong.even(1, 0) = 0;
  CHECK_FALSE(check_duality(wrong).pass);
  const auto f = check_faithfulness();
  CHECK(f.even_det == 1);
  CHECK(f.odd_det == 1);
}
