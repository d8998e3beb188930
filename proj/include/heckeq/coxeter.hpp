// Finite Coxeter groups: classification by diagram shape, BFS enumeration of
// simply-laced groups through the integer geometric representation, canonical
// reduced words, and parabolic subgroup counts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heckeq/diagram.hpp"
#include "heckeq/numbers.hpp"

namespace heckeq {

enum class Family { A, BC, D, E6, E7, E8, F4, H3, H4, I2, NotFinite };

struct TypeLabel {
    Family family = Family::NotFinite;
    int rank = 0;
    int m = 0; // edge weight, only for I2(m)
    bool finite = false;
    BigInt order; // meaningful only when finite
    std::string str() const;
};

// Matches a connected diagram against the finite-type list; weights matter,
// parameters do not.
TypeLabel classify_component(const CoxeterDiagram& d);

// Product of component classifications. finite = all components finite.
struct GroupOrder {
    bool finite = false;
    BigInt order;
};
GroupOrder group_order(const CoxeterDiagram& d);

struct GroupElement {
    std::vector<std::int8_t> word; // lex-least reduced word, vertex indices
    std::uint32_t support = 0;     // letters of any reduced word, as a bitmask
    std::vector<std::int8_t> matrix; // geometric representation, row-major
    int length() const { return static_cast<int>(word.size()); }
    bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
};

// A fully enumerated simply-laced finite Coxeter group. Element indices are
// BFS order (sorted by length, identity first); index 0 is the identity.
class CoxGroup {
public:
    static constexpr std::size_t default_cap = 1000000;

    CoxGroup() = default;
    // Requires a simply-laced diagram all of whose components are finite.
    explicit CoxGroup(const CoxeterDiagram& d, std::size_t cap = default_cap);

    int rank() const { return rank_; }
    std::size_t size() const { return length_.size(); }
    int length(int w) const { return length_[w]; }
    std::uint32_t support(int w) const { return support_[w]; }
    // Index of s*w; left multiplication changes length by exactly 1.
    int left_mult(int s, int w) const { return mult_[static_cast<std::size_t>(s) * size() + w]; }
    std::vector<std::int8_t> word(int w) const; // lex-least reduced word
    std::vector<std::int8_t> matrix(int w) const;
    GroupElement element(int w) const;

private:
    int rank_ = 0;
    std::vector<std::int32_t> length_;
    std::vector<std::uint32_t> support_;
    std::vector<std::int32_t> mult_;      // rank x size, s*w lookup
    std::vector<std::int8_t> mats_;       // size x rank^2 arena
    std::vector<std::int8_t> word_arena_; // canonical words back to back
    std::vector<std::uint64_t> word_off_;
};

// All |W| elements of a finite simply-laced group, BFS order.
std::vector<GroupElement> enumerate_group(const CoxeterDiagram& d,
                                          std::size_t cap = CoxGroup::default_cap);

// Number of w whose support avoids B, i.e. the order of the parabolic
// subgroup generated by the complement of B.
BigInt elements_avoiding(const CoxeterDiagram& d, const std::vector<int>& b,
                         std::size_t cap = CoxGroup::default_cap);

} // namespace heckeq
