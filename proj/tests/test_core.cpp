// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>

#include "util.hpp"
#include "veronese/core.hpp"

using namespace veronese;
using vtest::ideal;
using vtest::iset;
using vtest::mono;

namespace {

// G(I_{5;3,2,1}), used across the suite as the canonical worked ideal.
MonomialIdeal canonical_ideal() {
  return ideal(3, {{3, 2, 0}, {3, 1, 1}, {2, 2, 1}});
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("divisibility is componentwise") {
  CHECK(divides(mono({1, 0}), mono({1, 2})));
  CHECK_FALSE(divides(mono({2, 0}), mono({1, 2})));
  CHECK(divides(mono({0, 0}), mono({4, 7})));
  CHECK(divides(mono({0, 0}), mono({0, 0})));
  CHECK_THROWS_AS(divides(mono({1}), mono({1, 2})), DimensionError);
}

TEST_CASE("monomial accessors") {
  Monomial u = mono({3, 0, 1});
  CHECK(u.degree() == 4);
  CHECK(u.support() == iset({1, 3}));
  CHECK(u.max_index() == 3);
  CHECK(u.min_index() == 1);
  CHECK(u.str() == "x1^3x3");
  CHECK(Monomial::one(2).str() == "1");
  CHECK_THROWS_AS(Monomial::one(2).max_index(), DomainError);
  CHECK_THROWS_AS(mono({-1, 0}), DomainError);
}

TEST_CASE("minimalize removes multiples") {
  MonomialIdeal i = ideal(3, {{1, 1, 0}, {1, 1, 1}});
  CHECK(i.generators().size() == 1);
  CHECK(i.generators()[0] == mono({1, 1, 0}));

  // Already minimal: stays untouched.
  MonomialIdeal c = canonical_ideal();
  CHECK(c.generators().size() == 3);

  CHECK(MonomialIdeal(3, {}).is_zero());
  CHECK(ideal(2, {{0, 0}, {1, 3}}).is_unit());
}

TEST_CASE("minimalize is idempotent and order independent") {
  vtest::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(1, 5);
    MonomialIdeal i = vtest::random_ideal(rng, n, 8, 4);
    std::vector<Monomial> shuffled = i.generators();
    std::shuffle(shuffled.begin(), shuffled.end(), rng.eng);
    shuffled.push_back(shuffled.front() * vtest::random_monomial(rng, n, 2));
    CHECK(MonomialIdeal(n, shuffled) == i);
  }
}

TEST_CASE("membership via generator divisibility") {
  MonomialIdeal c = canonical_ideal();
  CHECK_FALSE(contains(c, mono({1, 2, 1})));  // degree 4 < 5
  CHECK(contains(c, mono({3, 2, 0})));
  CHECK(contains(c, mono({3, 2, 5})));
  CHECK_FALSE(contains(MonomialIdeal::zero(3), mono({1, 2, 1})));
  CHECK(contains(MonomialIdeal::unit(3), mono({0, 0, 0})));
}

TEST_CASE("colon against the canonical ideal") {
  MonomialIdeal c = canonical_ideal();
  CHECK(colon(c, mono({1, 2, 1})) == ideal(3, {{1, 0, 0}}));
  CHECK(colon(c, mono({3, 1, 0})) == ideal(3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(colon(c, mono({0, 0, 0})) == c);
}

TEST_CASE("colon composes multiplicatively") {
  vtest::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(1, 4);
    MonomialIdeal i = vtest::random_ideal(rng, n, 6, 4);
    Monomial z = vtest::random_monomial(rng, n, 3);
    Monomial w = vtest::random_monomial(rng, n, 3);
    CHECK(colon(i, z * w) == colon(colon(i, z), w));
  }
}

TEST_CASE("membership is colon reaching the unit ideal") {
  vtest::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(1, 4);
    MonomialIdeal i = vtest::random_ideal(rng, n, 6, 3);
    Monomial z = vtest::random_monomial(rng, n, 4);
    CHECK(contains(i, z) == colon(i, z).is_unit());
  }
}

TEST_CASE("radical takes squarefree parts") {
  CHECK(radical(canonical_ideal()) == ideal(3, {{1, 1, 0}}));
  MonomialIdeal big = vtest::vero_ideal(7, {4, 3, 2, 1, 1});
  CHECK(radical(big) == ideal(5, {{1, 1, 0, 0, 0},
                                  {1, 0, 1, 1, 0},
                                  {1, 0, 1, 0, 1},
                                  {0, 1, 1, 1, 1}}));
  CHECK_THROWS_AS(radical(MonomialIdeal::zero(2)), DomainError);
}

TEST_CASE("radical is idempotent with squarefree output") {
  vtest::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal i = vtest::random_ideal(rng, rng.uniform(1, 5), 8, 4);
    if (i.is_zero()) continue;
    MonomialIdeal r = radical(i);
    for (const Monomial& u : r.generators()) CHECK(u.is_squarefree());
    CHECK(radical(r) == r);
  }
}

TEST_CASE("principal and equigenerated predicates") {
  CHECK(is_principal(ideal(2, {{1, 1}})));
  CHECK_FALSE(is_principal(canonical_ideal()));
  CHECK(is_equigenerated(ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})));
  CHECK_FALSE(is_equigenerated(radical(vtest::vero_ideal(7, {4, 3, 2, 1, 1}))));
  CHECK_THROWS_AS(is_principal(MonomialIdeal::zero(1)), DomainError);
}

TEST_CASE("generators are listed in descending lexicographic order") {
  MonomialIdeal c = canonical_ideal();
  CHECK(c.generators()[0] == mono({3, 2, 0}));
  CHECK(c.generators()[1] == mono({3, 1, 1}));
  CHECK(c.generators()[2] == mono({2, 2, 1}));
  CHECK(c.str() == "(x1^3x2^2, x1^3x2x3, x1^2x2^2x3)");
}

TEST_CASE("index set basics") {
  IndexSet a = iset({3, 1});
  CHECK(a.members() == std::vector<int>{1, 3});
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.subset_of(iset({1, 2, 3})));
  CHECK_FALSE(iset({1, 2, 3}).subset_of(a));
  CHECK(a.complement(4) == iset({2, 4}));
  CHECK(a.replaced(3, 2) == iset({1, 2}));
  CHECK_THROWS_AS(iset({1, 1}), IndexError);
  CHECK_THROWS_AS(iset({0}), IndexError);
}

TEST_SUITE_END();
