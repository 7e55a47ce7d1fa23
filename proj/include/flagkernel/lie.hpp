#pragma once

// Root systems of the simple Lie algebras and painted Dynkin diagrams.
//
// Node numbering follows Bourbaki (Plates I-IX):
//   A_n  1 - 2 - ... - n
//   B_n  1 - 2 - ... - (n-1) => n        alpha_n short
//   C_n  1 - 2 - ... - (n-1) <= n        alpha_n long
//   D_n  1 - 2 - ... - (n-2) < (n-1), n  node n-2 branches to n-1 and n
//   E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//   F_4  1 - 2 => 3 - 4                  alpha_1, alpha_2 long
//   G_2  1 <= 2                          alpha_1 short, alpha_2 long
//
// Cartan entries are a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i) = <alpha_j, alpha_i^vee>,
// so the row of a short root carries the -2 or -3. Explicitly:
//   B_3 = [[2,-1,0],[-1,2,-1],[0,-2,2]]
//   C_3 = [[2,-1,0],[-1,2,-2],[0,-1,2]]
//   F_4 = [[2,-1,0,0],[-1,2,-1,0],[0,-2,2,-1],[0,0,-1,2]]
//   G_2 = [[2,-3],[-1,2]]
//
// C_2 is not a separate type: `C2` is accepted by the parsers and remapped to B_2 with the two
// nodes swapped (C_2 node 1 is the short root, which is B_2 node 2).

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagkernel {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

class LieType {
public:
    /// Throws InputError for an invalid (family, rank) pair, including C_2.
    LieType(Family family, int rank);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }

    /// `B3`, `E8`, ...
    std::string name() const;

    friend auto operator<=>(const LieType&, const LieType&) = default;

private:
    Family family_;
    int rank_;
};

/// Every supported type with rank <= max_rank, ordered by family then rank. C_2 is omitted.
std::vector<LieType> lie_types_up_to(int max_rank);

class CartanMatrix {
public:
    /// Row-major entries of a square matrix. Throws InputError unless diagonal entries are 2,
    /// off-diagonal entries lie in {0,-1,-2,-3} and a_ij = 0 exactly when a_ji = 0.
    CartanMatrix(int rank, std::vector<int> entries);

    int rank() const noexcept { return rank_; }

    /// 0-based indices.
    int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank_ + j)]; }

    const std::vector<int>& entries() const noexcept { return entries_; }

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    int rank_;
    std::vector<int> entries_;
};

CartanMatrix build_cartan_matrix(const LieType& t);

/// Coordinates over the simple roots.
struct Root {
    std::vector<int> coeffs;

    friend bool operator==(const Root&, const Root&) = default;
};

int root_height(const Root& r);

/// Height first; within a height, larger leading coordinates first (so alpha_1 precedes alpha_2).
bool canonical_root_less(const Root& a, const Root& b);

/// Largest height any supported type reaches is 29 (E_8); generation beyond this is treated
/// as divergence of a non-finite-type matrix.
inline constexpr int kMaxRootHeight = 60;

/// Breadth-first root-string closure from the simple roots. Adds alpha + alpha_i whenever
/// p - <alpha, alpha_i^vee> > 0, where p is the largest integer with alpha - p alpha_i a root.
/// Output is canonically ordered. Throws InputError if the height guard is exceeded.
std::vector<Root> generate_positive_roots(const CartanMatrix& c);

class RootSystem {
public:
    explicit RootSystem(const LieType& t);

    const LieType& lie_type() const noexcept { return type_; }
    const CartanMatrix& cartan() const noexcept { return cartan_; }
    const std::vector<Root>& positive_roots() const noexcept { return roots_; }
    int rank() const noexcept { return type_.rank(); }

    const Root& highest_root() const { return roots_.back(); }

    bool is_positive_root(const Root& r) const;

private:
    LieType type_;
    CartanMatrix cartan_;
    std::vector<Root> roots_;
};

/// Closed-form |R+| for each type.
std::size_t expected_positive_root_count(const LieType& t);

class PaintedDiagram {
public:
    /// `black` holds 1-based node indices; must be nonempty and in range. Stored sorted, deduplicated.
    PaintedDiagram(std::shared_ptr<const RootSystem> roots, std::vector<int> black);

    /// Builds its own root system.
    PaintedDiagram(const LieType& t, std::vector<int> black);

    const RootSystem& root_system() const noexcept { return *roots_; }
    const std::shared_ptr<const RootSystem>& root_system_ptr() const noexcept { return roots_; }
    const LieType& lie_type() const noexcept { return roots_->lie_type(); }
    const std::vector<int>& black_nodes() const noexcept { return black_; }

    bool is_black(int node) const;

    /// Canonical text form `<family><rank>:<black nodes>`, e.g. `B3:1`, `A3:1,3`.
    std::string name() const;

private:
    std::shared_ptr<const RootSystem> roots_;
    std::vector<int> black_;
};

/// Parses the canonical text form. Accepts `C2:...` as an alias for B_2 with nodes swapped.
/// Throws InputError on malformed text or invalid type/nodes.
PaintedDiagram parse_diagram(std::string_view text);

/// Positive roots whose support meets a black node, in canonical order.
std::vector<Root> black_positive_roots(const PaintedDiagram& d);

/// Positive roots supported only on white nodes (the positive roots of the isotropy part).
std::vector<Root> white_positive_roots(const PaintedDiagram& d);

/// Sorted heights of the black positive roots.
std::vector<int> heights_multiset(const PaintedDiagram& d);

int complex_dimension(const PaintedDiagram& d);

} // namespace flagkernel
