#include "weil/table.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace weil {

namespace {

uint32_t matrix_trace(const GroupElement& g) {
    const auto& F = *g.space().field();
    uint32_t t = 0;
    for (int i = 0; i < g.space().dim(); ++i) t = F.add(t, g.mat().at(i, i));
    return t;
}

}  // namespace

std::vector<TableRow> build_table(const SympSpace& space, uint64_t cap) {
    const auto& F = *space.field();
    const auto group = enumerate_group(space, cap);
    std::unordered_map<uint64_t, size_t> index;
    index.reserve(group.size());
    for (size_t i = 0; i < group.size(); ++i) index.emplace(group[i].key(), i);

    long qn = 1;
    for (int i = 0; i < space.n(); ++i) qn *= F.q();

    std::vector<TableRow> rows;
    std::unordered_set<uint64_t> seen;
    for (const auto& g : group) {
        if (seen.count(g.key())) continue;

        uint64_t min_key = g.key();
        std::unordered_set<uint64_t> orbit;
        for (const auto& x : group) {
            const GroupElement conj = x.inverse() * g * x;
            if (orbit.insert(conj.key()).second) min_key = std::min(min_key, conj.key());
        }
        for (uint64_t k : orbit) seen.insert(k);

        const GroupElement& rep = group[index.at(min_key)];
        TableRow row{std::string(),
                     rep,
                     static_cast<long>(orbit.size()),
                     element_order(rep),
                     ClassKind::generic,
                     0,
                     weil_values(rep)};

        const GroupElement neg = GroupElement::minus_identity(space) * row.rep;
        if (row.rep.is_identity()) {
            row.kind = ClassKind::identity;
            row.label = "1";
        } else if (neg.is_identity()) {
            row.kind = ClassKind::minus_identity;
            row.label = "-1";
        } else if (moved_space(row.rep).dim() == 1) {
            row.kind = ClassKind::transvection;
            // Conjugate to [[1,alpha],[0,1]] with alpha = -1/gamma, so
            // chi(alpha) = delta * chi(gamma).
            row.chi_param = F.delta() * F.chi(theta_data(row.rep).theta.at(0, 0));
            row.label = std::string("transvection chi(alpha)=") +
                        (row.chi_param > 0 ? "+1" : "-1");
        } else if (moved_space(neg).dim() == 1) {
            row.kind = ClassKind::neg_transvection;
            // -g is conjugate to [[1,-beta],[0,1]], so chi(beta) =
            // delta * chi(-beta) = chi(gamma(-g)).
            row.chi_param = F.chi(theta_data(neg).theta.at(0, 0));
            row.label = std::string("neg-transvection chi(beta)=") +
                        (row.chi_param > 0 ? "+1" : "-1");
        } else if (space.n() == 1 && is_semisimple(row.rep) &&
                   (qn - 1) % row.order == 0) {
            row.kind = ClassKind::split;
            row.label = "split o=" + std::to_string(row.order) +
                        " tr=" + std::to_string(matrix_trace(row.rep));
        } else if (space.n() == 1 && is_semisimple(row.rep) &&
                   (qn + 1) % row.order == 0) {
            row.kind = ClassKind::nonsplit;
            row.label = "nonsplit o=" + std::to_string(row.order) +
                        " tr=" + std::to_string(matrix_trace(row.rep));
        }
        rows.push_back(std::move(row));
    }

    std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.rep.key() < b.rep.key();
    });
    int k = 0;
    for (auto& row : rows) {
        if (row.label.empty()) row.label = "class-" + std::to_string(k);
        ++k;
    }
    return rows;
}

}  // namespace weil
