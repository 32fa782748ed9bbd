#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace trivote {

/// Set of candidate indices 0..m-1 backed by a 64-bit mask.
/// All set algebra is closed over the mask; bits at index >= m are never set
/// by any operation that receives m.
class CandidateSet {
public:
    constexpr CandidateSet() = default;
    constexpr explicit CandidateSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr int max_candidates = 64;

    static constexpr CandidateSet full(int m) {
        return CandidateSet(m >= 64 ? ~0ULL : ((1ULL << m) - 1));
    }
    static constexpr CandidateSet single(int c) { return CandidateSet(1ULL << c); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int c) const { return (bits_ >> c) & 1ULL; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr CandidateSet operator|(CandidateSet o) const { return CandidateSet(bits_ | o.bits_); }
    constexpr CandidateSet operator&(CandidateSet o) const { return CandidateSet(bits_ & o.bits_); }
    constexpr CandidateSet operator-(CandidateSet o) const { return CandidateSet(bits_ & ~o.bits_); }
    constexpr CandidateSet complement_within(int m) const { return full(m) - *this; }

    constexpr CandidateSet& operator|=(CandidateSet o) { bits_ |= o.bits_; return *this; }
    constexpr CandidateSet& operator&=(CandidateSet o) { bits_ &= o.bits_; return *this; }

    constexpr void add(int c) { bits_ |= 1ULL << c; }
    constexpr void remove(int c) { bits_ &= ~(1ULL << c); }

    constexpr bool subset_of(CandidateSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(CandidateSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr bool operator==(const CandidateSet&) const = default;

    /// Lowest set index, or -1 when empty.
    constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace trivote
