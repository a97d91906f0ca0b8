#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superwedge/linalg.hpp"

namespace superwedge {

enum class Parity : std::uint8_t { kEven = 0, kOdd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool is_odd(Parity p) { return p == Parity::kOdd; }
// (-1)^{|a||b|}
inline int koszul_sign(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }
const char* to_string(Parity p);

// Raised when an operation needs a graded ideal and gets something else.
class NotAnIdealError : public std::runtime_error {
public:
    NotAnIdealError(std::size_t basis_index, Vector ideal_vector, Vector escape);
    std::size_t basis_index;
    Vector ideal_vector;
    Vector escape;  // [ideal_vector, e_basis_index], which is not in the subspace
};

// Finite-dimensional Lie superalgebra given by structure constants. The even
// basis elements come first. The table is mutable only while the algebra is
// being assembled; every operation below treats it as read-only.
class SuperAlgebra {
public:
    SuperAlgebra() = default;
    SuperAlgebra(std::string name, std::vector<std::string> even_names, std::vector<std::string> odd_names);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t dim() const { return names_.size(); }
    std::size_t even_dim() const { return even_dim_; }
    std::size_t odd_dim() const { return names_.size() - even_dim_; }
    Parity parity(std::size_t i) const { return i < even_dim_ ? Parity::kEven : Parity::kOdd; }
    std::size_t block_offset(Parity p) const { return p == Parity::kEven ? 0 : even_dim_; }
    std::size_t block_dim(Parity p) const { return p == Parity::kEven ? even_dim_ : odd_dim(); }

    const std::vector<std::string>& basis_names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    const Vector& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    // Raw entry write; no symmetry is implied.
    void set_structure(std::size_t i, std::size_t j, Vector value);
    // Sets [e_i,e_j] = value and [e_j,e_i] = -(-1)^{|i||j|} value.
    void define_bracket(std::size_t i, std::size_t j, const Vector& value);

    Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
    Vector bracket(const Vector& u, const Vector& v) const;
    // Matrix of y -> [x, y].
    Matrix left_multiplication(const Vector& x) const;

    // Parity of a nonzero homogeneous vector; nullopt for zero or mixed.
    std::optional<Parity> parity_of(const Vector& v) const;
    bool is_abelian() const;

private:
    std::string name_;
    std::vector<std::string> names_;
    std::size_t even_dim_ = 0;
    std::vector<Vector> table_;
};

// Graded subspace: a subspace of the even block and one of the odd block.
struct GradedSubspace {
    Subspace even;
    Subspace odd;

    std::size_t dim() const { return even.dim() + odd.dim(); }
    std::size_t ambient_dim() const { return even.ambient_dim() + odd.ambient_dim(); }

    // Echelon basis in full coordinates, even part first.
    std::vector<Vector> homogeneous_basis() const;
    std::vector<Parity> basis_parities() const;
    Subspace embed() const;
    bool contains(const Vector& full) const;
    // Coordinates of a vector of the subspace in homogeneous_basis().
    Vector coordinates(const Vector& full) const;

    bool operator==(const GradedSubspace& other) const { return even == other.even && odd == other.odd; }

    static GradedSubspace zero(const SuperAlgebra& a);
    static GradedSubspace whole(const SuperAlgebra& a);
    // Span of the homogeneous components of the given vectors.
    static GradedSubspace span_components(const SuperAlgebra& a, const std::vector<Vector>& vectors);
};

enum class Identity { kGrading, kSkewSymmetry, kEvenSquare, kJacobi };
const char* identity_name(Identity id);

struct Violation {
    Identity identity;
    std::vector<std::size_t> indices;
    Vector residual;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool names(Identity id) const;
};

ValidationReport validate(const SuperAlgebra& a);

GradedSubspace center(const SuperAlgebra& a);
GradedSubspace derived(const SuperAlgebra& a);
// [S, T] for graded subspaces S, T.
GradedSubspace commutator(const SuperAlgebra& a, const GradedSubspace& s, const GradedSubspace& t);
// {x : [x, s] = 0}
GradedSubspace centralizer(const SuperAlgebra& a, const GradedSubspace& s);

struct LowerCentralSeries {
    std::vector<GradedSubspace> terms;  // L^1 = L, L^2, ... down to the stable term
    std::optional<std::size_t> nilpotency_class;
};
LowerCentralSeries lower_central_series(const SuperAlgebra& a);

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

struct QuotientResult {
    SuperAlgebra algebra;
    Matrix projection;  // dim(L/I) x dim(L)
    // Lifts quotient basis vectors to L.
    Matrix section;     // dim(L) x dim(L/I)
};
QuotientResult quotient(const SuperAlgebra& a, const GradedSubspace& ideal);

bool is_graded_ideal(const SuperAlgebra& a, const GradedSubspace& s);
// Throws NotAnIdealError with the first escaping bracket.
void require_graded_ideal(const SuperAlgebra& a, const GradedSubspace& s);

}  // namespace superwedge
