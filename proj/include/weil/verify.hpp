#pragma once

#include <string>
#include <vector>

#include "weil/field.hpp"

namespace weil {

struct VerifyItem {
    std::string name;
    bool pass = false;
    bool skipped = false;  // not applicable at these parameters
};

struct VerifyReport {
    std::vector<VerifyItem> items;

    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

/// Runs one named invariant suite at the given parameters.  Suites:
/// gauss, cocycle, eta, characters, factorize, frames, constructions, all.
/// Throws std::invalid_argument("unknown suite name") otherwise.
VerifyReport run_suite(const std::string& suite, const FieldPtr& field, int n,
                       uint64_t seed, int samples);

}  // namespace weil
