#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "superwedge/linalg.hpp"
#include "superwedge/superalgebra.hpp"

namespace superwedge {

enum class WitnessScheme { kSinglePair, kTwoPair };
const char* to_string(WitnessScheme s);

// One generator of M0. Single pair: m∧n with m, n even and [m,n] = 0.
// Two pair: m∧n + sign·m2∧n2 with sign = (-1)^{|m2||n2|},
// [m,n] + sign·[m2,n2] = 0 and (m2, n2) of the opposite parities to (m, n),
// so that it is a homogeneous component of X∧Y for the commuting pair
// X = m + m2, Y = n + sign·n2. A zero second pair covers single commuting
// pairs that are not both even.
struct M0Witness {
    WitnessScheme scheme = WitnessScheme::kSinglePair;
    Vector m, n, m2, n2;
    Parity pm = Parity::kEven, pn = Parity::kEven, pm2 = Parity::kEven, pn2 = Parity::kEven;
    Scalar sign = 1;
    Vector image;

    bool operator==(const M0Witness& o) const = default;
};

enum class B0Status { kCertifiedZero, kStableNonzero };

struct SaturationConfig {
    std::uint64_t seed = 0xB060;
    std::optional<std::size_t> batch;  // default 16·dim(L)^2
    std::size_t stable_rounds = 3;

    std::size_t batch_for(std::size_t algebra_dim) const {
        return batch ? *batch : 16 * algebra_dim * algebra_dim;
    }
};

// Search space shared by the wedge route and the Hopf route. A graded source
// space carries a parity-preserving bilinear pairing P into a graded target
// and a parity-preserving check map C on the target. The generators are the
// homogeneous components of P(x,y) over all (not necessarily homogeneous)
// x, y with C(P(x,y)) = 0. For fixed x this is a linear condition on y.
struct FiberProblem {
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    std::size_t target_dim = 0;
    std::vector<Vector> pairing;  // P(e_i, e_j) at i·dim + j
    Matrix check;                 // C, target_dim columns
    Subspace goal;                // stop as soon as the span equals this
    std::array<std::vector<Subspace>, 2> strata;  // sampling subspaces per parity, block coordinates
    std::size_t batch = 0;

    std::size_t dim() const { return even_dim + odd_dim; }
    Parity parity(std::size_t i) const { return i < even_dim ? Parity::kEven : Parity::kOdd; }
};

struct SaturationOutcome {
    Subspace span;
    std::vector<M0Witness> witnesses;
    std::size_t rounds = 0;         // randomized rounds run
    std::size_t rounds_stable = 0;  // trailing rounds without growth
};

// Deterministic passes over basis elements and even+odd basis sums, then
// randomized rounds until the span reaches the goal or stops growing for
// stable_rounds consecutive rounds.
SaturationOutcome saturate(const FiberProblem& problem, std::uint64_t seed, std::size_t stable_rounds);

// Block subspaces worth sampling from besides the whole block: the center,
// the terms of the lower central series and the centralizers of basis
// elements. Generic vectors miss the loci where fibers jump in dimension.
std::vector<Subspace> sampling_strata(const SuperAlgebra& a, Parity p);

}  // namespace superwedge
