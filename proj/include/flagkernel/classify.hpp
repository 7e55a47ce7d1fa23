#pragma once

#include "flagkernel/lie.hpp"
#include "flagkernel/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flagkernel {

inline constexpr int kMaxEnumerationRank = 12;

/// Every painted diagram of a simple type with rank <= max_rank and exactly black_count black
/// nodes, ordered by (family, rank, black subset lexicographic). C_2 is never emitted (it is B_2).
/// Throws InputError unless 1 <= max_rank <= 12 and black_count >= 1.
std::vector<PaintedDiagram> enumerate_painted_diagrams(int max_rank, int black_count);

/// True iff no two black positive roots share a height.
bool distinct_heights_check(const PaintedDiagram& d);

/// True iff the black-root heights are exactly 1, 2, ..., n with no repeats.
bool heights_form_initial_segment(const PaintedDiagram& d);

inline constexpr const char* kUnidentifiedFlag = "unidentified-by-paper";
inline constexpr const char* kC2AliasFlag = "via-C2-alias";

/// Static table of classical realizations for constant-Betti single-black-node diagrams:
///   A_n:1, A_n:n -> CP^n;  B_p:1 -> Q_{2p-1};  B_2:2 (= C_2:1) -> CP^3;  C_p:1 -> CP^{2p-1}.
/// Anything else (notably both G_2 paintings) has no entry.
std::optional<std::string> identification_label(const PaintedDiagram& d);

struct ClassificationHit {
    PaintedDiagram diagram;
    int dimension = 0;
    IntPolynomial poincare;
    std::optional<std::string> identification;
    std::vector<std::string> flags;
};

struct ClassificationReport {
    int max_rank = 0;
    int black_count = 1;
    std::size_t diagrams_examined = 0;
    std::vector<ClassificationHit> hits;
    /// Diagrams where constant Betti numbers and "heights are exactly 1..n" disagree. Expected empty.
    std::vector<std::string> equivalence_violations;
};

/// Evaluates every enumerated diagram and keeps the constant-Betti ones. Diagrams are processed
/// on up to `threads` worker threads (0 = hardware concurrency); results are stored by
/// enumeration index, so the report is identical for any thread count.
ClassificationReport classify(int max_rank, int black_count = 1, unsigned threads = 1);

std::vector<ClassificationHit> classify_constant_betti(int max_rank);

} // namespace flagkernel
