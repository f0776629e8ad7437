#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_ok(const props::Outcome& o) {
    EXPECT_GE(o.cases, 200u) << o.name;
    EXPECT_EQ(o.failures, 0u) << o.name << ": first counterexample " << o.first_failure;
}

} // namespace

TEST(Properties, RelabelingInvariance) { expect_ok(props::relabeling_invariance()); }
TEST(Properties, CloseIdempotence) { expect_ok(props::close_idempotence()); }
TEST(Properties, Orient2WitnessPair) { expect_ok(props::orient2_uniqueness()); }
TEST(Properties, FlagConservation) { expect_ok(props::flag_conservation()); }
TEST(Properties, ChordCanonicalOracle) { expect_ok(props::chord_canonical_oracle()); }
TEST(Properties, SlwCrossOracle) { expect_ok(props::slw_cross_oracle()); }

TEST(Properties, OtherSeeds) {
    for (unsigned seed : {101u, 202u}) {
        expect_ok(props::relabeling_invariance(seed));
        expect_ok(props::flag_conservation(seed));
        expect_ok(props::chord_canonical_oracle(seed));
    }
}
