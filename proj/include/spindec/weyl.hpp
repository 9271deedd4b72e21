#pragma once

#include "spindec/root_system.hpp"
#include "spindec/weight.hpp"

#include <cstdint>
#include <iterator>
#include <vector>

namespace spindec {

inline constexpr int kDefaultRankCap = 8;

/// Weyl group element of B_k/D_k: coordinate permutation composed with sign
/// flips. Acting on a weight: out[i] = flip_i * x[perm[i]]. sign() is the
/// determinant of the matrix, which equals (-1)^length.
struct SignedPerm {
    std::vector<std::uint8_t> perm; // image positions read from, 0-based
    std::uint32_t flip_mask = 0;    // bit i set: negate coordinate i

    int sign() const;
    Weight apply(const Weight& w) const;

    bool operator==(const SignedPerm&) const = default;
};

/// Lazy, deterministic enumeration of W(rs): permutations in lexicographic
/// order, sign masks ascending within each permutation (even masks only
/// for D). Construction enforces the rank cap.
class WeylRange {
public:
    explicit WeylRange(RootSystem rs, int rank_cap = kDefaultRankCap);

    class iterator {
    public:
        using value_type = SignedPerm;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        const SignedPerm& operator*() const { return cur_; }
        const SignedPerm* operator->() const { return &cur_; }
        iterator& operator++();
        bool operator!=(const iterator& o) const { return done_ != o.done_; }
        bool operator==(const iterator& o) const { return done_ == o.done_; }

    private:
        friend class WeylRange;
        iterator(RootSystem rs, bool done);
        void advance_mask();

        RootSystem rs_;
        SignedPerm cur_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(rs_, false); }
    iterator end() const { return iterator(rs_, true); }

    /// Materializes the whole group; |W| elements in enumeration order.
    std::vector<SignedPerm> to_vector() const;

private:
    RootSystem rs_;
};

/// weyl_elements per the lie-core contract; throws ResourceError above cap.
inline WeylRange weyl_elements(const RootSystem& rs, int rank_cap = kDefaultRankCap) {
    return WeylRange(rs, rank_cap);
}

struct FoldResult {
    Weight dominant;
    int sign = 1;       // meaningful only when !singular
    bool singular = false;
};

/// Folds xi into the dominant chamber. singular=true when xi lies on a wall
/// (B: |xi_i|=|xi_j| for i!=j, or some xi_i=0; D: |xi_i|=|xi_j| for i!=j);
/// otherwise the folding element is unique and its sign is reported.
FoldResult weyl_fold(const RootSystem& rs, const Weight& xi);

/// Dominant representative of the W-orbit of xi, walls included. Used for
/// weight-multiplicity lookups and orbit deduplication; no sign attached.
Weight dominant_representative(const RootSystem& rs, const Weight& xi);

} // namespace spindec
