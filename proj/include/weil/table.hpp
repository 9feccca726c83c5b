#pragma once

#include <string>

#include "weil/matrix_rep.hpp"

namespace weil {

enum class ClassKind {
    identity,
    minus_identity,
    transvection,      // dim V^{g-1} = 1
    neg_transvection,  // -g is a transvection
    split,             // semisimple, o(g) | q^n - 1
    nonsplit,          // semisimple, o(g) | q^n + 1
    generic,
};

/// One conjugacy class with the character values at its representative.
struct TableRow {
    std::string label;
    GroupElement rep;
    long class_size = 0;
    long order = 0;
    ClassKind kind = ClassKind::generic;
    /// chi(alpha) for a transvection class conjugate to [[1,alpha],[0,1]]
    /// (resp. chi(beta) for its negative); 0 when not applicable.
    int chi_param = 0;
    WeilValues values;
};

/// Full class partition by brute conjugation orbits, one row per class.
/// Rows are sorted by (element order, representative key); the
/// representative is the key-smallest member of its class.  The rows
/// reference `space`, which must outlive them.
std::vector<TableRow> build_table(const SympSpace& space, uint64_t cap = 60000);

}  // namespace weil
