#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vsym/quotient.hpp"

namespace vsym {

/// Unimodular row with a certificate: sum entries[i] * certificate[i] == 1,
/// checked at construction and preserved by every operation.
struct UnimodularRow {
    RingPtr ring;
    std::vector<RingElement> entries;
    std::vector<RingElement> certificate;

    std::size_t size() const { return entries.size(); }
};

inline bool certificate_holds(const RingPtr& ring,
                              const std::vector<RingElement>& entries,
                              const std::vector<RingElement>& certificate) {
    RingElement s = elem(ring, Rational(0));
    for (std::size_t i = 0; i < entries.size(); ++i)
        s = s + entries[i] * certificate[i];
    return s.is_one();
}

/// Build a certified row. Without a certificate, express_one searches for
/// one; NotUnimodular means membership of 1 was refuted (exact), while
/// BudgetExceeded means the search gave up — the two are distinct outcomes.
inline UnimodularRow row_make(RingPtr ring, std::vector<RingElement> entries,
                              std::optional<std::vector<RingElement>> certificate = std::nullopt,
                              std::int64_t budget = kDefaultBudget) {
    if (entries.size() < 2)
        throw std::invalid_argument("row_make: need at least 2 entries");
    if (ring->is_trivial())
        throw std::invalid_argument("row_make: trivial ring refused");
    if (certificate) {
        if (certificate->size() != entries.size())
            throw std::invalid_argument("row_make: certificate length mismatch");
        if (!certificate_holds(ring, entries, *certificate)) throw BadCertificate();
        return {std::move(ring), std::move(entries), std::move(*certificate)};
    }
    auto found = express_one(ring, entries, budget);
    if (!found) throw NotUnimodular();
    return {std::move(ring), std::move(entries), std::move(*found)};
}

/// One generator E_{ij}(lambda) of the elementary group, acting on rows.
struct ElementaryMove {
    std::size_t i, j;  // 0-based, i != j
    RingElement lambda;
};

/// Right action: entry_j += lambda * entry_i. The certificate transforms by
/// the inverse transpose (b_i -= lambda * b_j), which preserves the pairing
/// sum a_i b_i exactly.
inline UnimodularRow apply_elementary(const UnimodularRow& row, const ElementaryMove& mv) {
    if (mv.i == mv.j) throw std::invalid_argument("elementary move requires i != j");
    if (mv.i >= row.size() || mv.j >= row.size())
        throw std::out_of_range("elementary move index out of range");
    UnimodularRow out = row;
    out.entries[mv.j] = row.entries[mv.j] + mv.lambda * row.entries[mv.i];
    out.certificate[mv.i] = row.certificate[mv.i] - mv.lambda * row.certificate[mv.j];
    if (!certificate_holds(out.ring, out.entries, out.certificate))
        throw std::logic_error("apply_elementary: certificate invariant broken");
    return out;
}

inline UnimodularRow apply_word(UnimodularRow row, const std::vector<ElementaryMove>& moves) {
    for (const auto& mv : moves) row = apply_elementary(row, mv);
    return row;
}

}  // namespace vsym
