#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superwedge/linalg.hpp"
#include "superwedge/saturation.hpp"
#include "superwedge/superalgebra.hpp"

namespace superwedge {

// M∧N for graded ideals M, N of L, presented as the raw space spanned by the
// symbols f_a∧g_b (f, g the homogeneous echelon bases of M and N) modulo the
// defining relations.
class WedgeSpace {
public:
    WedgeSpace(const SuperAlgebra& l, GradedSubspace m, GradedSubspace n);

    const SuperAlgebra& source() const { return source_; }
    const GradedSubspace& left() const { return left_; }
    const GradedSubspace& right() const { return right_; }
    bool is_square() const { return square_; }

    std::size_t raw_dim() const { return left_basis_.size() * right_basis_.size(); }
    std::size_t raw_index(std::size_t a, std::size_t b) const { return a * right_basis_.size() + b; }
    const Subspace& relations() const { return project_.kernel(); }
    const QuotientMap& project() const { return project_; }
    std::size_t wedge_dim() const { return project_.target_dim(); }
    // Matrix of the commutator map M∧N -> L, m∧n -> [m,n].
    const Matrix& kappa() const { return kappa_; }

    // Raw symbol expansion of m∧n for m in M, n in N given in L coordinates.
    Vector raw_wedge(const Vector& m, const Vector& n) const;
    // Class of m∧n in M∧N.
    Vector wedge(const Vector& m, const Vector& n) const { return project_.apply(raw_wedge(m, n)); }
    // Class of the raw symbol f_a∧g_b.
    const Vector& symbol(std::size_t a, std::size_t b) const { return symbols_[raw_index(a, b)]; }

    const std::vector<Vector>& left_basis() const { return left_basis_; }
    const std::vector<Vector>& right_basis() const { return right_basis_; }

private:
    SuperAlgebra source_;
    GradedSubspace left_;
    GradedSubspace right_;
    bool square_ = false;
    std::vector<Vector> left_basis_;
    std::vector<Vector> right_basis_;
    QuotientMap project_;
    std::vector<Vector> symbols_;
    Matrix kappa_;
};

WedgeSpace exterior_product(const SuperAlgebra& l, const GradedSubspace& m, const GradedSubspace& n);
WedgeSpace exterior_square(const SuperAlgebra& l);

// ker(kappa) as a subspace of the quotient coordinates; M(L) when M = N = L.
Subspace schur_multiplier(const WedgeSpace& w);

// [m∧n, m'∧n'] = -(-1)^{|m||n|} [n,m]∧[m',n'] extended bilinearly to M∧N.
Vector wedge_bracket(const WedgeSpace& w, const Vector& u, const Vector& v);

struct M0Result {
    Subspace found;
    std::vector<M0Witness> witnesses;
    B0Status status = B0Status::kStableNonzero;
    std::size_t rounds = 0;
    std::size_t rounds_stable = 0;
};

M0Result m0_saturate(const SuperAlgebra& l, const WedgeSpace& w, const SaturationConfig& cfg = {});

struct B0Dims {
    std::size_t derived = 0;          // dim L^2
    std::size_t exterior_square = 0;  // dim L∧L
    std::size_t schur = 0;            // dim M(L)
    std::size_t m0_found = 0;
    std::size_t b0_bound = 0;         // dim M(L) - m0_found
    std::size_t curly() const { return exterior_square - m0_found; }

    bool operator==(const B0Dims&) const = default;
};

struct B0Report {
    B0Dims dims;
    B0Status status = B0Status::kStableNonzero;
    std::vector<M0Witness> witnesses;
    std::uint64_t seed = 0;
    std::size_t batch = 0;
    std::size_t stable_rounds = 0;
    std::size_t rounds = 0;
    std::size_t rounds_stable = 0;
};

B0Report bogomolov(const SuperAlgebra& l, const SaturationConfig& cfg = {});

struct CurlySquare {
    std::size_t dim = 0;
    QuotientMap projection;  // L∧L -> L⋏L
    B0Status status = B0Status::kStableNonzero;
};
CurlySquare curly_square(const SuperAlgebra& l, const SaturationConfig& cfg = {});

// dim (L⋏L)/T where T is generated by the classes of m∧n + eps·m'∧n' with
// [m,n] + eps·[m',n'] in K, closed under the bracket of L∧L.
std::size_t curly_quotient_dim(const SuperAlgebra& l, const GradedSubspace& k, const SaturationConfig& cfg = {});

class NotCentralError : public std::runtime_error {
public:
    NotCentralError(Vector ideal_vector, std::size_t basis_index, Vector bracket);
    Vector ideal_vector;
    std::size_t basis_index;
    Vector bracket;
};

enum class CpStatus { kCertifiedNo, kStableYes };

struct CpWitness {
    Vector x, y;
    Parity px = Parity::kEven, py = Parity::kEven;
    Vector value;  // [x,y], a nonzero element of M
};

struct CpResult {
    CpStatus status = CpStatus::kStableYes;
    std::optional<CpWitness> witness;
};

// Looks for homogeneous x, y with [x,y] a nonzero element of the central
// ideal M. Finding one is a certificate; not finding one is probabilistic.
CpResult cp_check_central_extension(const SuperAlgebra& c, const GradedSubspace& m, const SaturationConfig& cfg = {});

// Re-derives every witness from scratch: homogeneity, parities, the bracket
// condition, the sign, and the stored image.
bool verify_witnesses(const SuperAlgebra& l, const WedgeSpace& w, const std::vector<M0Witness>& ws);

}  // namespace superwedge
