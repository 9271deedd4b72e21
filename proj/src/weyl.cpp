#include "spindec/weyl.hpp"

#include "spindec/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace spindec {

namespace {

int perm_parity(const std::vector<std::uint8_t>& perm) {
    // Selection-sort swap count on a scratch copy; ranks are tiny.
    std::vector<std::uint8_t> p(perm);
    int swaps = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (p[i] != i) {
            std::swap(p[i], p[p[i]]);
            ++swaps;
        }
    }
    return swaps % 2 == 0 ? 1 : -1;
}

} // namespace

int SignedPerm::sign() const {
    const int flips = std::popcount(flip_mask);
    return perm_parity(perm) * (flips % 2 == 0 ? 1 : -1);
}

Weight SignedPerm::apply(const Weight& w) const {
    std::vector<HalfInt> out(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        HalfInt v = w[perm[i]];
        out[i] = (flip_mask >> i & 1u) ? -v : v;
    }
    return Weight(std::move(out));
}

WeylRange::WeylRange(RootSystem rs, int rank_cap) : rs_(rs) {
    // 16 is the hard ceiling: |W| no longer fits in 64 bits beyond it.
    if (rs.rank > rank_cap || rs.rank > 16)
        throw ResourceError("Weyl group enumeration: rank " + std::to_string(rs.rank) +
                            " exceeds cap " + std::to_string(std::min(rank_cap, 16)));
}

WeylRange::iterator::iterator(RootSystem rs, bool done) : rs_(rs), done_(done) {
    if (done_) return;
    cur_.perm.resize(rs_.rank);
    std::iota(cur_.perm.begin(), cur_.perm.end(), std::uint8_t{0});
    cur_.flip_mask = 0; // even popcount, valid for both families
}

void WeylRange::iterator::advance_mask() {
    const std::uint32_t limit = 1u << rs_.rank;
    ++cur_.flip_mask;
    if (rs_.family == Family::D)
        while (cur_.flip_mask < limit && std::popcount(cur_.flip_mask) % 2 != 0) ++cur_.flip_mask;
    if (cur_.flip_mask >= limit) {
        cur_.flip_mask = 0;
        if (!std::next_permutation(cur_.perm.begin(), cur_.perm.end())) done_ = true;
    }
}

WeylRange::iterator& WeylRange::iterator::operator++() {
    advance_mask();
    return *this;
}

std::vector<SignedPerm> WeylRange::to_vector() const {
    std::vector<SignedPerm> out;
    out.reserve(weyl_order(rs_));
    for (const SignedPerm& g : *this) out.push_back(g);
    return out;
}

FoldResult weyl_fold(const RootSystem& rs, const Weight& xi) {
    if (static_cast<int>(xi.rank()) != rs.rank)
        throw DomainError("weyl_fold: weight rank does not match root system");
    const int k = rs.rank;
    if (rs.is_abelian()) return {xi, 1, false};

    std::vector<HalfInt> a(k);
    int negatives = 0;
    for (int i = 0; i < k; ++i) {
        a[i] = xi[i].abs();
        if (xi[i].is_negative()) ++negatives;
        if (rs.family == Family::B && xi[i].is_zero()) return {Weight{}, 1, true};
    }

    // Sort |xi| descending by selection, tracking permutation parity.
    int swaps = 0;
    for (int i = 0; i < k; ++i) {
        int best = i;
        for (int j = i + 1; j < k; ++j)
            if (a[j] > a[best]) best = j;
        if (best != i) {
            std::swap(a[i], a[best]);
            ++swaps;
        }
    }
    for (int i = 0; i + 1 < k; ++i)
        if (a[i] == a[i + 1]) return {Weight{}, 1, true};

    int flips = negatives;
    if (rs.family == Family::D && negatives % 2 != 0) {
        if (a[k - 1].is_zero()) {
            // The zero coordinate absorbs the odd flip for free.
            flips = negatives + 1;
        } else {
            // Dominant representative keeps a negative last coordinate. The
            // coordinate of minimal |.| (unique: nonsingular) ends up there:
            // if it was negative it needs no flip, otherwise one more.
            const HalfInt min_abs = a[k - 1];
            bool min_was_negative = false;
            for (int i = 0; i < k; ++i)
                if (xi[i].abs() == min_abs) min_was_negative = xi[i].is_negative();
            a[k - 1] = -a[k - 1];
            flips = min_was_negative ? negatives - 1 : negatives + 1;
        }
    }
    const int sign = (swaps % 2 == 0 ? 1 : -1) * (flips % 2 == 0 ? 1 : -1);
    return {Weight(std::move(a)), sign, false};
}

Weight dominant_representative(const RootSystem& rs, const Weight& xi) {
    if (static_cast<int>(xi.rank()) != rs.rank)
        throw DomainError("dominant_representative: rank mismatch");
    const int k = rs.rank;
    if (rs.is_abelian()) return xi;
    std::vector<HalfInt> a(k);
    int negatives = 0;
    for (int i = 0; i < k; ++i) {
        a[i] = xi[i].abs();
        if (xi[i].is_negative()) ++negatives;
    }
    std::sort(a.begin(), a.end(), [](HalfInt x, HalfInt y) { return y < x; });
    if (rs.family == Family::D && negatives % 2 != 0 && !a[k - 1].is_zero()) a[k - 1] = -a[k - 1];
    return Weight(std::move(a));
}

} // namespace spindec
