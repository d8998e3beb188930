// Composition combinatorics: descent sets, the proper-composition predicate,
// products and coproducts on composition sums, the duality pairing, the
// antipode, the layered restriction diagram, and Fibonacci decompositions.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckeq/numbers.hpp"

namespace heckeq {

// Sequence of positive parts; the empty composition has size 0.
using Composition = std::vector<int>;

// Sum of the parts; rejects nonpositive parts.
int comp_size(const Composition& a);

// Partial sums sigma_1..sigma_{l-1}, ascending.
std::vector<int> descent_set(const Composition& a);

// Composition of n whose descent set is d (subset of 1..n-1).
Composition composition_from_descents(int n, const std::vector<int>& d);

// Every internal part is larger than 1 (first and last parts are free).
bool is_proper(const Composition& a);

// Composition of the same size whose descent set is the complement.
Composition complement(const Composition& a);

// (a restricted to 1..i, a restricted to i+1..n); zero boundary parts drop.
std::pair<Composition, Composition> split(const Composition& a, int i);

// Display order: size ascending, then longer compositions first, then
// lexicographic on parts.
struct CompLess {
    bool operator()(const Composition& x, const Composition& y) const;
};
using CompSum = std::map<Composition, long long, CompLess>;

using CompPair = std::pair<Composition, Composition>;
struct CompPairLess {
    bool operator()(const CompPair& x, const CompPair& y) const;
};
using TensorSum = std::map<CompPair, long long, CompPairLess>;

// Adds c times the basis element a, dropping a vanishing coefficient.
void comp_add(CompSum& sum, const Composition& a, long long c);
void tensor_add(TensorSum& sum, const Composition& a, const Composition& b, long long c);

// Concatenation plus the merged composition; the empty composition is the unit.
CompSum comp_product(const Composition& a, const Composition& b);

// Sum of all splits, one term per cut position.
TensorSum comp_coproduct(const Composition& a);

// Product on proper labels: drops the concatenation term when it is improper.
CompSum g0_product(const Composition& a, const Composition& b);

// Split sum of a proper composition; every factor is proper.
TensorSum g0_coproduct(const Composition& a);

// Projection onto proper compositions (zero on the rest) and its section.
CompSum sigma(const Composition& a);
CompSum iota(const Composition& a);

// Bilinear extension of <a, b> = 1 when a = b, else 0.
long long pairing(const CompSum& x, const CompSum& y);
long long pairing(const TensorSum& x, const TensorSum& y);

struct SignedComposition {
    int sign = 1;
    Composition comp;
};

// (-1)^n times the complement; the empty composition maps to itself.
SignedComposition antipode_comp(const Composition& a);

// Signed complement when it stays proper, zero otherwise. Nonzero exactly on
// the compositions 2..2, 12..2, 2..21 and 12..21.
CompSum antipode_g0(const Composition& a);

struct AntipodeReport {
    bool ok = false;
    std::uint64_t checked = 0;       // compositions verified
    std::string first_violation;     // empty when ok
};

// Both convolution identities sum_i S(a_{<=i}) a_{>i} = u(eps(a)) and its
// mirror, for every composition of size at most n_max.
AntipodeReport verify_antipode(int n_max);

// Proper compositions of n, largest-first lexicographic order.
std::vector<Composition> proper_compositions(int n);

struct BratteliDiagram {
    // levels[n]: proper compositions of n; level sizes follow the Fibonacci
    // sequence. parent[n][j] indexes the unique level-(n-1) restriction target.
    std::vector<std::vector<Composition>> levels;
    std::vector<std::vector<int>> parent;
};

// Layered restriction diagram for levels 0..levels.
BratteliDiagram bratteli(int levels);

// One summand per independent set I of the path on n vertices minus r (a bit
// mask over vertices 1..n); the value counts independent sets of r minus the
// neighborhood of I. The values sum to F_{n+2}.
std::vector<std::pair<std::uint32_t, BigInt>> fib_decomposition(int n, std::uint32_t r);

// "121" when all parts are single digits, comma-separated otherwise; "()" when empty.
std::string composition_str(const Composition& a);
std::string compsum_str(const CompSum& x);
std::string tensor_str(const TensorSum& x);

} // namespace heckeq
