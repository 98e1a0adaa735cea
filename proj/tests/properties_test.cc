// Copyright 2026 The seedprice Authors.
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

#include <gtest/gtest.h>

#include "testing/properties.h"

namespace seedprice::testing {
namespace {

constexpr int kCases = 500;

void expect_holds(const PropertyReport& r) {
  EXPECT_EQ(r.cases, kCases) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

TEST(Properties, CascadeMonotoneInSeeds) {
  expect_holds(check_cascade_monotone_in_seeds(kCases, 101));
}

TEST(Properties, CascadeAntiMonotoneInPrice) {
  expect_holds(check_cascade_antimonotone_in_price(kCases, 102));
}

TEST(Properties, CascadeIsAStableFixpoint) {
  expect_holds(check_cascade_fixpoint(kCases, 103));
}

TEST(Properties, CascadeIndependentOfAdoptionOrder) {
  expect_holds(check_cascade_order_independence(kCases, 104));
}

TEST(Properties, UpperBoundIsSound) {
  expect_holds(check_upper_bound(kCases, 105));
}

TEST(Properties, ImportanceRangesAndTermination) {
  expect_holds(check_importance_ranges(kCases, 106));
}

TEST(Properties, PrubIfNeverLosesToNoSocial) {
  expect_holds(check_prubif_dominates_nosocial(kCases, 107));
}

TEST(Properties, SearchBookkeeping) {
  expect_holds(check_search_bookkeeping(kCases, 108));
}

}  // namespace
}  // namespace seedprice::testing
