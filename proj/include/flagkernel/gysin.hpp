#pragma once

// Integral cohomology of the unit circle bundle X -> M from the Gysin sequence
//
//     ... -> H^{k-2}(M) --(cup e)--> H^k(M) -> H^k(X) -> H^{k-1}(M) --(cup e)--> H^{k+1}(M) -> ...
//
// for a base whose cohomology is free and concentrated in even degrees. Writing E_j for cup with
// the Euler class H^{2j}(M) -> H^{2j+2}(M), the sequence splits into
//
//     H^{2j}(X)   = coker E_{j-1}     (E_{-1} = 0, so H^0(X) = H^0(M))
//     H^{2j+1}(X) = ker E_j           (E_n = 0, so H^{2n+1}(X) = H^{2n}(M))
//
// and cokernels are read off Smith normal forms.

#include "flagkernel/numeric.hpp"
#include "flagkernel/smith.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flagkernel {

struct GradedCohomology {
    /// rank of H^{2j}(M), j = 0..n
    std::vector<int> free_ranks;
    /// E_j of shape free_ranks[j+1] x free_ranks[j], j = 0..n-1
    std::vector<IntMatrix> cup_maps;

    int dimension() const { return static_cast<int>(free_ranks.size()) - 1; }

    /// Throws InputError unless r_0 = 1, ranks are nonnegative and every E_j has the right shape.
    void validate() const;
};

/// Parses `{"free_ranks":[...],"cup_maps":[[[...]]]}`. Each cup map is a list of rows.
GradedCohomology parse_graded_cohomology(std::string_view json_text);

struct CohomologyGroup {
    int free_rank = 0;
    /// elementary divisors > 1
    std::vector<BigInt> torsion;

    friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

/// `0`, `Z`, `Z^2 ⊕ Z/2 ⊕ Z/4`, ...
std::string to_string(const CohomologyGroup& g);

struct CircleBundleCohomology {
    /// H^k(X) for k = 0..2n+1
    std::vector<CohomologyGroup> groups;

    const CohomologyGroup& degree(int k) const { return groups.at(static_cast<std::size_t>(k)); }
};

CircleBundleCohomology gysin_circle_bundle(const GradedCohomology& g);

enum class BaseModel { ProjectiveSpace, OddQuadric };

/// `cpn` or `odd_quadric`; InputError otherwise.
BaseModel parse_base_model(std::string_view name);
std::string model_name(BaseModel m);

/// Built-in cohomology tables, all ranks 1.
///   cpn:         E_j = [k] for every j (e = k x, x the hyperplane class).
///   odd_quadric: n odd >= 3; with x the hyperplane class and y the generator of H^{n+1},
///                x^{(n+1)/2} = 2y, so E_j = [k] except the middle slot j = (n-1)/2, which is [2k].
/// k = euler_multiplier must be positive.
GradedCohomology model_cohomology(BaseModel model, int n, int euler_multiplier);

/// Sum of (-1)^k rank H^k(X); zero for every circle bundle.
int euler_characteristic(const CircleBundleCohomology& x);

/// True iff the free ranks are those of S^{2n+1}/Z_m: 1 in degrees 0 and 2n+1, 0 elsewhere.
/// Torsion is ignored, so Stiefel manifolds pass as well.
bool betti_lens_check(const CircleBundleCohomology& x, int n);

} // namespace flagkernel
