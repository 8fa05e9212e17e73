#pragma once

// Shared result types: identity checks carry exact digests of both sides;
// divisibility verdicts classify the reduced quotient by its denominator.

#include <string>
#include <vector>

#include "cattri/integer.hpp"

namespace cattri {

struct IdentityCheckResult {
    std::string id;
    std::vector<long> tuple;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

inline IdentityCheckResult make_check(std::string id, std::vector<long> tuple,
                                      const Rat& lhs, const Rat& rhs) {
    return {std::move(id), std::move(tuple), to_string(lhs), to_string(rhs), lhs == rhs};
}

enum class Classification { integer, half_integer, other };

inline const char* name(Classification c) {
    switch (c) {
        case Classification::integer: return "integer";
        case Classification::half_integer: return "half_integer";
        default: return "other";
    }
}

struct DivisibilityVerdict {
    Int sum;
    Int divisor;
    Rat quotient;  // sum/divisor, reduced
    Classification classification = Classification::other;
};

inline DivisibilityVerdict make_verdict(const Int& sum, const Int& divisor) {
    DivisibilityVerdict v;
    v.sum = sum;
    v.divisor = divisor;
    v.quotient = make_rat(sum, divisor);
    v.classification = is_integer(v.quotient)        ? Classification::integer
                       : is_half_integer(v.quotient) ? Classification::half_integer
                                                     : Classification::other;
    return v;
}

}  // namespace cattri
