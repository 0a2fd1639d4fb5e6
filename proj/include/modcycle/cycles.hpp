#ifndef MODCYCLE_CYCLES_HPP
#define MODCYCLE_CYCLES_HPP

// Exact searches for cycles and paths with prescribed length residues.

#include <cstdint>
#include <optional>
#include <vector>

#include "modcycle/graph.hpp"

namespace modcycle {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr int kMaxModulus = 64;

/// A subset of {0, ..., k-1}.
class ResidueSet {
public:
    ResidueSet() = default;
    explicit ResidueSet(int modulus, Mask members = 0);
    ResidueSet(int modulus, std::initializer_list<int> members);

    int modulus() const { return k_; }
    Mask mask() const { return members_; }
    bool contains(int r) const { return (members_ >> r) & 1u; }
    void insert(int r) { members_ |= bit(r); }
    int size() const { return std::popcount(members_); }
    bool full() const { return members_ == low_bits(k_); }
    bool empty() const { return members_ == 0; }
    bool subset_of(const ResidueSet& other) const { return (members_ & ~other.members_) == 0; }
    std::vector<int> to_vector() const;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    int k_ = 0;
    Mask members_ = 0;
};

/// A cycle v0 v1 ... v(m-1) v0 whose length m is congruent to r mod k.
struct CycleCertificate {
    int k = 0;
    int r = 0;
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
};

/// Re-checks a certificate against the host graph without trusting the
/// search: consecutive adjacency (cyclically), distinct vertices, m >= 3,
/// m = r (mod k).
bool validate_certificate(const Graph& g, const CycleCertificate& cert);

/// Some cycle of length = r (mod k), or nullopt if none exists.
/// Throws Indeterminate when more than `budget` search nodes are expanded.
std::optional<CycleCertificate> find_cycle_mod(const Graph& g, int k, int r,
                                               std::uint64_t budget = kDefaultNodeBudget);

/// Same, restricted to cycles through vertex v.
std::optional<CycleCertificate> find_cycle_mod_through(const Graph& g, int v, int k, int r,
                                                       std::uint64_t budget = kDefaultNodeBudget);

/// { m mod k : g has a cycle of length m }.
ResidueSet cycle_length_residues(const Graph& g, int k, std::uint64_t budget = kDefaultNodeBudget);

/// { l mod k : g has a simple (x, y)-path of length l }.
ResidueSet path_residues(const Graph& g, int x, int y, int k, std::uint64_t budget = kDefaultNodeBudget);

/// One witness (x, y)-path per residue class that occurs; entry r is empty
/// when no path of length = r (mod k) exists.
std::vector<std::vector<int>> path_residue_witnesses(const Graph& g, int x, int y, int k,
                                                     std::uint64_t budget = kDefaultNodeBudget);

}  // namespace modcycle

#endif
