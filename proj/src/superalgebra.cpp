#include "superwedge/superalgebra.hpp"

#include <algorithm>
#include <set>

namespace superwedge {

namespace {

Vector slice(const Vector& v, std::size_t offset, std::size_t len) {
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(offset),
                  v.begin() + static_cast<std::ptrdiff_t>(offset + len));
}

Vector embed_block(const Vector& block, std::size_t offset, std::size_t dim) {
    Vector v(dim, Scalar(0));
    std::copy(block.begin(), block.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
    return v;
}

// [e_a, w]
Vector bracket_basis_left(const SuperAlgebra& a, std::size_t i, const Vector& w) {
    Vector out(a.dim(), Scalar(0));
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (sgn(w[j]) != 0) add_scaled(out, w[j], a.structure(i, j));
    }
    return out;
}

// Kernel, inside one parity block, of x -> ([x, v_1], ..., [x, v_r]).
Subspace block_annihilator(const SuperAlgebra& a, Parity p, const std::vector<Vector>& targets) {
    const std::size_t off = a.block_offset(p);
    const std::size_t bd = a.block_dim(p);
    const std::size_t n = a.dim();
    Matrix m(targets.size() * n, bd);
    for (std::size_t c = 0; c < bd; ++c) {
        const Vector x = a.basis_vector(off + c);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            Vector b = a.bracket(x, targets[t]);
            for (std::size_t k = 0; k < n; ++k) m(t * n + k, c) = b[k];
        }
    }
    return kernel_basis(m);
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

NotAnIdealError::NotAnIdealError(std::size_t basis_index, Vector ideal_vector, Vector escape)
    : std::runtime_error("not an ideal: bracket of " + to_string(ideal_vector) + " with basis element " +
                         std::to_string(basis_index) + " is " + to_string(escape) + ", outside the subspace"),
      basis_index(basis_index),
      ideal_vector(std::move(ideal_vector)),
      escape(std::move(escape)) {}

SuperAlgebra::SuperAlgebra(std::string name, std::vector<std::string> even_names, std::vector<std::string> odd_names)
    : name_(std::move(name)), even_dim_(even_names.size()) {
    names_ = std::move(even_names);
    names_.insert(names_.end(), odd_names.begin(), odd_names.end());
    table_.assign(names_.size() * names_.size(), zero_vector(names_.size()));
}

std::optional<std::size_t> SuperAlgebra::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

void SuperAlgebra::set_structure(std::size_t i, std::size_t j, Vector value) {
    if (i >= dim() || j >= dim() || value.size() != dim()) throw std::invalid_argument("set_structure: out of range");
    table_[i * dim() + j] = std::move(value);
}

void SuperAlgebra::define_bracket(std::size_t i, std::size_t j, const Vector& value) {
    set_structure(i, j, value);
    if (i != j) set_structure(j, i, scaled(Scalar(-koszul_sign(parity(i), parity(j))), value));
}

Vector SuperAlgebra::bracket(const Vector& u, const Vector& v) const {
    if (u.size() != dim() || v.size() != dim()) throw std::invalid_argument("bracket: dimension mismatch");
    Vector out(dim(), Scalar(0));
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (sgn(v[j]) == 0) continue;
            add_scaled(out, u[i] * v[j], structure(i, j));
        }
    }
    return out;
}

Matrix SuperAlgebra::left_multiplication(const Vector& x) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket(x, basis_vector(j)));
    return m;
}

std::optional<Parity> SuperAlgebra::parity_of(const Vector& v) const {
    if (v.size() != dim()) return std::nullopt;
    bool has_even = false;
    bool has_odd = false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(v[i]) == 0) continue;
        (i < even_dim_ ? has_even : has_odd) = true;
    }
    if (has_even == has_odd) return std::nullopt;
    return has_even ? Parity::kEven : Parity::kOdd;
}

bool SuperAlgebra::is_abelian() const {
    return std::all_of(table_.begin(), table_.end(), [](const Vector& v) { return is_zero(v); });
}

std::vector<Vector> GradedSubspace::homogeneous_basis() const {
    const std::size_t n = ambient_dim();
    std::vector<Vector> out;
    for (const auto& v : even.basis()) out.push_back(embed_block(v, 0, n));
    for (const auto& v : odd.basis()) out.push_back(embed_block(v, even.ambient_dim(), n));
    return out;
}

std::vector<Parity> GradedSubspace::basis_parities() const {
    std::vector<Parity> out(even.dim(), Parity::kEven);
    out.insert(out.end(), odd.dim(), Parity::kOdd);
    return out;
}

Subspace GradedSubspace::embed() const { return Subspace::span(ambient_dim(), homogeneous_basis()); }

bool GradedSubspace::contains(const Vector& full) const {
    if (full.size() != ambient_dim()) return false;
    return even.contains(slice(full, 0, even.ambient_dim())) &&
           odd.contains(slice(full, even.ambient_dim(), odd.ambient_dim()));
}

Vector GradedSubspace::coordinates(const Vector& full) const {
    Vector c = even.coordinates(slice(full, 0, even.ambient_dim()));
    Vector o = odd.coordinates(slice(full, even.ambient_dim(), odd.ambient_dim()));
    c.insert(c.end(), o.begin(), o.end());
    return c;
}

GradedSubspace GradedSubspace::zero(const SuperAlgebra& a) {
    return {Subspace(a.even_dim()), Subspace(a.odd_dim())};
}

GradedSubspace GradedSubspace::whole(const SuperAlgebra& a) {
    return {Subspace::full(a.even_dim()), Subspace::full(a.odd_dim())};
}

GradedSubspace GradedSubspace::span_components(const SuperAlgebra& a, const std::vector<Vector>& vectors) {
    GradedSubspace s = zero(a);
    for (const auto& v : vectors) {
        s.even.insert(slice(v, 0, a.even_dim()));
        s.odd.insert(slice(v, a.even_dim(), a.odd_dim()));
    }
    return s;
}

const char* identity_name(Identity id) {
    switch (id) {
        case Identity::kGrading: return "grading";
        case Identity::kSkewSymmetry: return "super-skew-symmetry";
        case Identity::kEvenSquare: return "even-square";
        case Identity::kJacobi: return "graded-jacobi";
    }
    return "unknown";
}

bool ValidationReport::names(Identity id) const {
    return std::any_of(violations.begin(), violations.end(), [id](const Violation& v) { return v.identity == id; });
}

ValidationReport validate(const SuperAlgebra& a) {
    ValidationReport report;
    const std::size_t n = a.dim();

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Parity expected = a.parity(i) + a.parity(j);
            Vector stray(n, Scalar(0));
            bool bad = false;
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(a.structure(i, j)[k]) != 0 && a.parity(k) != expected) {
                    stray[k] = a.structure(i, j)[k];
                    bad = true;
                }
            }
            if (bad) report.violations.push_back({Identity::kGrading, {i, j}, std::move(stray)});
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector r = a.structure(j, i);
            add_scaled(r, Scalar(koszul_sign(a.parity(i), a.parity(j))), a.structure(i, j));
            if (!is_zero(r)) report.violations.push_back({Identity::kSkewSymmetry, {j, i}, std::move(r)});
        }
    }

    for (std::size_t i = 0; i < a.even_dim(); ++i) {
        if (!is_zero(a.structure(i, i))) report.violations.push_back({Identity::kEvenSquare, {i, i}, a.structure(i, i)});
    }

    // Under super-skew-symmetry the cyclic sum is (anti)symmetric in its three
    // arguments, so sorted triples suffice.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                const Parity px = a.parity(i), py = a.parity(j), pz = a.parity(k);
                Vector r = bracket_basis_left(a, i, a.structure(j, k));
                if (koszul_sign(px, pz) < 0) r = scaled(Scalar(-1), r);
                add_scaled(r, Scalar(koszul_sign(py, px)), bracket_basis_left(a, j, a.structure(k, i)));
                add_scaled(r, Scalar(koszul_sign(pz, py)), bracket_basis_left(a, k, a.structure(i, j)));
                if (!is_zero(r)) report.violations.push_back({Identity::kJacobi, {i, j, k}, std::move(r)});
            }
        }
    }
    return report;
}

GradedSubspace center(const SuperAlgebra& a) { return centralizer(a, GradedSubspace::whole(a)); }

GradedSubspace derived(const SuperAlgebra& a) { return commutator(a, GradedSubspace::whole(a), GradedSubspace::whole(a)); }

GradedSubspace commutator(const SuperAlgebra& a, const GradedSubspace& s, const GradedSubspace& t) {
    std::vector<Vector> products;
    const auto sb = s.homogeneous_basis();
    const auto tb = t.homogeneous_basis();
    for (const auto& x : sb) {
        for (const auto& y : tb) products.push_back(a.bracket(x, y));
    }
    return GradedSubspace::span_components(a, products);
}

GradedSubspace centralizer(const SuperAlgebra& a, const GradedSubspace& s) {
    const auto targets = s.homogeneous_basis();
    return {block_annihilator(a, Parity::kEven, targets), block_annihilator(a, Parity::kOdd, targets)};
}

LowerCentralSeries lower_central_series(const SuperAlgebra& a) {
    LowerCentralSeries lcs;
    const GradedSubspace whole = GradedSubspace::whole(a);
    lcs.terms.push_back(whole);
    while (true) {
        const GradedSubspace& last = lcs.terms.back();
        if (last.dim() == 0) {
            lcs.nilpotency_class = lcs.terms.size() - 1;
            break;
        }
        GradedSubspace next = commutator(a, last, whole);
        if (next == last) break;
        lcs.terms.push_back(std::move(next));
    }
    return lcs;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
    auto names_of = [](const SuperAlgebra& s, std::size_t from, std::size_t to) {
        return std::vector<std::string>(s.basis_names().begin() + static_cast<std::ptrdiff_t>(from),
                                        s.basis_names().begin() + static_cast<std::ptrdiff_t>(to));
    };
    std::vector<std::string> ae = names_of(a, 0, a.even_dim()), ao = names_of(a, a.even_dim(), a.dim());
    std::vector<std::string> be = names_of(b, 0, b.even_dim()), bo = names_of(b, b.even_dim(), b.dim());

    std::set<std::string> seen(a.basis_names().begin(), a.basis_names().end());
    bool clash = std::any_of(b.basis_names().begin(), b.basis_names().end(),
                             [&](const std::string& s) { return seen.count(s) > 0; });
    if (clash) {
        for (auto* list : {&ae, &ao}) for (auto& s : *list) s += "_1";
        for (auto* list : {&be, &bo}) for (auto& s : *list) s += "_2";
    }

    std::vector<std::string> even = ae;
    even.insert(even.end(), be.begin(), be.end());
    std::vector<std::string> odd = ao;
    odd.insert(odd.end(), bo.begin(), bo.end());
    SuperAlgebra s(a.name() + " (+) " + b.name(), even, odd);

    // Position of each original basis element in the sum.
    std::vector<std::size_t> pa(a.dim()), pb(b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        pa[i] = i < a.even_dim() ? i : s.even_dim() + (i - a.even_dim());
    for (std::size_t i = 0; i < b.dim(); ++i)
        pb[i] = i < b.even_dim() ? a.even_dim() + i : s.even_dim() + a.odd_dim() + (i - b.even_dim());

    auto copy_table = [&](const SuperAlgebra& src, const std::vector<std::size_t>& pos) {
        for (std::size_t i = 0; i < src.dim(); ++i) {
            for (std::size_t j = 0; j < src.dim(); ++j) {
                Vector v(s.dim(), Scalar(0));
                for (std::size_t k = 0; k < src.dim(); ++k) v[pos[k]] = src.structure(i, j)[k];
                s.set_structure(pos[i], pos[j], std::move(v));
            }
        }
    };
    copy_table(a, pa);
    copy_table(b, pb);
    return s;
}

bool is_graded_ideal(const SuperAlgebra& a, const GradedSubspace& s) {
    const Subspace full = s.embed();
    for (const auto& v : s.homogeneous_basis()) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!full.contains(a.bracket(v, a.basis_vector(j)))) return false;
        }
    }
    return true;
}

void require_graded_ideal(const SuperAlgebra& a, const GradedSubspace& s) {
    const Subspace full = s.embed();
    for (const auto& v : s.homogeneous_basis()) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector b = a.bracket(v, a.basis_vector(j));
            if (!full.contains(b)) throw NotAnIdealError(j, v, b);
        }
    }
}

QuotientResult quotient(const SuperAlgebra& a, const GradedSubspace& ideal) {
    require_graded_ideal(a, ideal);

    const QuotientMap qe = quotient_coords(a.even_dim(), ideal.even);
    const QuotientMap qo = quotient_coords(a.odd_dim(), ideal.odd);
    std::vector<std::string> even, odd;
    for (auto c : qe.complement()) even.push_back(a.basis_names()[c]);
    for (auto c : qo.complement()) odd.push_back(a.basis_names()[a.even_dim() + c]);

    QuotientResult out{SuperAlgebra(a.name() + "/I", even, odd), Matrix(even.size() + odd.size(), a.dim()),
                       Matrix(a.dim(), even.size() + odd.size())};
    const std::size_t qdim = out.algebra.dim();
    auto project = [&](const Vector& v) {
        Vector pe = qe.apply(slice(v, 0, a.even_dim()));
        Vector po = qo.apply(slice(v, a.even_dim(), a.odd_dim()));
        pe.insert(pe.end(), po.begin(), po.end());
        return pe;
    };
    for (std::size_t c = 0; c < a.dim(); ++c) out.projection.set_column(c, project(a.basis_vector(c)));
    for (std::size_t t = 0; t < qdim; ++t) {
        const std::size_t src = t < even.size() ? qe.complement()[t] : a.even_dim() + qo.complement()[t - even.size()];
        out.section(src, t) = 1;
    }
    for (std::size_t s = 0; s < qdim; ++s) {
        for (std::size_t t = 0; t < qdim; ++t) {
            out.algebra.set_structure(s, t, project(a.bracket(out.section.column(s), out.section.column(t))));
        }
    }
    return out;
}

}  // namespace superwedge
