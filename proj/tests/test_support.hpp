#pragma once

#include "numerics.hpp"

#include <doctest.h>

namespace testing {

using freud::Real;
namespace mp = boost::multiprecision;

inline const freud::PrecisionContext& ctx60() {
    static const freud::PrecisionContext c(60);
    return c;
}

// Holds working precision for the duration of a test case so literals carry enough digits.
struct Precision {
    freud::ScopedPrecision guard{80};
};

inline Real rel(const Real& got, const Real& want) {
    return want == 0 ? Real(mp::abs(got)) : Real(mp::abs((got - want) / want));
}

inline Real tenpow(int e) { return freud::pow10(e); }

}  // namespace testing

#define CHECK_REL(got, want, tol)                                                                   \
    do {                                                                                            \
        const auto r_ = ::testing::rel((got), (want));                                              \
        INFO("relative error " << freud::to_string(r_, 4));                                         \
        CHECK(r_ <= (tol));                                                                         \
    } while (0)
