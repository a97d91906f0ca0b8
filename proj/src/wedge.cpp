#include "superwedge/wedge.hpp"

#include <random>

namespace superwedge {

namespace {

Vector coordinates_in(const GradedSubspace& s, const Vector& v) {
    if (!s.contains(v)) throw std::invalid_argument("wedge: vector " + to_string(v) + " is outside the ideal");
    return s.coordinates(v);
}

}  // namespace

WedgeSpace::WedgeSpace(const SuperAlgebra& l, GradedSubspace m, GradedSubspace n)
    : source_(l), left_(std::move(m)), right_(std::move(n)) {
    require_graded_ideal(l, left_);
    require_graded_ideal(l, right_);
    square_ = left_ == right_;
    left_basis_ = left_.homogeneous_basis();
    right_basis_ = right_.homogeneous_basis();
    const auto lp = left_.basis_parities();
    const auto rp = right_.basis_parities();
    const std::size_t dm = left_basis_.size();
    const std::size_t dn = right_basis_.size();
    const std::size_t raw = dm * dn;

    // [f_a, f_b] in M-coordinates, [f_a, g_b] in N- and M-coordinates, ...
    auto raw_symbol = [&](const Vector& cm, const Vector& cn) {
        Vector v(raw, Scalar(0));
        for (std::size_t a = 0; a < dm; ++a) {
            if (sgn(cm[a]) == 0) continue;
            for (std::size_t b = 0; b < dn; ++b) {
                if (sgn(cn[b]) != 0) v[a * dn + b] += cm[a] * cn[b];
            }
        }
        return v;
    };
    auto unit_m = [&](std::size_t a) { return unit_vector(dm, a); };
    auto unit_n = [&](std::size_t b) { return unit_vector(dn, b); };

    Subspace rel(raw);
    if (square_) {
        for (std::size_t a = 0; a < dm; ++a) {
            for (std::size_t b = a; b < dn; ++b) {
                Vector v(raw, Scalar(0));
                v[a * dn + b] += 1;
                v[b * dn + a] += koszul_sign(lp[a], rp[b]);
                rel.insert(std::move(v));
            }
        }
    }

    // [m,m']∧n - m∧[m',n] + (-1)^{|m||m'|} m'∧[m,n]
    for (std::size_t i = 0; i < dm; ++i) {
        for (std::size_t j = 0; j < dm; ++j) {
            const Vector mm = coordinates_in(left_, l.bracket(left_basis_[i], left_basis_[j]));
            for (std::size_t k = 0; k < dn; ++k) {
                Vector v = raw_symbol(mm, unit_n(k));
                add_scaled(v, Scalar(-1),
                           raw_symbol(unit_m(i), coordinates_in(right_, l.bracket(left_basis_[j], right_basis_[k]))));
                add_scaled(v, Scalar(koszul_sign(lp[i], lp[j])),
                           raw_symbol(unit_m(j), coordinates_in(right_, l.bracket(left_basis_[i], right_basis_[k]))));
                rel.insert(std::move(v));
            }
        }
    }

    // m∧[n,n'] - (-1)^{|n'|(|m|+|n|)} [n',m]∧n + (-1)^{|m||n|} [n,m]∧n'
    for (std::size_t i = 0; i < dm; ++i) {
        for (std::size_t j = 0; j < dn; ++j) {
            for (std::size_t k = 0; k < dn; ++k) {
                Vector v = raw_symbol(unit_m(i), coordinates_in(right_, l.bracket(right_basis_[j], right_basis_[k])));
                add_scaled(v, Scalar(-koszul_sign(rp[k], lp[i] + rp[j])),
                           raw_symbol(coordinates_in(left_, l.bracket(right_basis_[k], left_basis_[i])), unit_n(j)));
                add_scaled(v, Scalar(koszul_sign(lp[i], rp[j])),
                           raw_symbol(coordinates_in(left_, l.bracket(right_basis_[j], left_basis_[i])), unit_n(k)));
                rel.insert(std::move(v));
            }
        }
    }

    project_ = quotient_coords(raw, rel);
    symbols_.reserve(raw);
    for (std::size_t r = 0; r < raw; ++r) symbols_.push_back(project_.apply(unit_vector(raw, r)));
    kappa_ = Matrix(l.dim(), project_.target_dim());
    for (std::size_t t = 0; t < project_.target_dim(); ++t) {
        const std::size_t r = project_.complement()[t];
        kappa_.set_column(t, l.bracket(left_basis_[r / dn], right_basis_[r % dn]));
    }
}

Vector WedgeSpace::raw_wedge(const Vector& m, const Vector& n) const {
    const Vector cm = coordinates_in(left_, m);
    const Vector cn = coordinates_in(right_, n);
    const std::size_t dn = right_basis_.size();
    Vector v(raw_dim(), Scalar(0));
    for (std::size_t a = 0; a < cm.size(); ++a) {
        if (sgn(cm[a]) == 0) continue;
        for (std::size_t b = 0; b < dn; ++b) {
            if (sgn(cn[b]) != 0) v[a * dn + b] += cm[a] * cn[b];
        }
    }
    return v;
}

WedgeSpace exterior_product(const SuperAlgebra& l, const GradedSubspace& m, const GradedSubspace& n) {
    return WedgeSpace(l, m, n);
}

WedgeSpace exterior_square(const SuperAlgebra& l) {
    return WedgeSpace(l, GradedSubspace::whole(l), GradedSubspace::whole(l));
}

Subspace schur_multiplier(const WedgeSpace& w) { return kernel_basis(w.kappa()); }

Vector wedge_bracket(const WedgeSpace& w, const Vector& u, const Vector& v) {
    const SuperAlgebra& l = w.source();
    const auto& f = w.left_basis();
    const auto& g = w.right_basis();
    const auto lp = w.left().basis_parities();
    const auto rp = w.right().basis_parities();
    const Vector ru = w.project().lift(u);
    const Vector rv = w.project().lift(v);
    const std::size_t dn = g.size();
    Vector out(w.wedge_dim(), Scalar(0));
    for (std::size_t r = 0; r < ru.size(); ++r) {
        if (sgn(ru[r]) == 0) continue;
        const std::size_t a = r / dn, b = r % dn;
        const Vector nm = l.bracket(g[b], f[a]);
        for (std::size_t s = 0; s < rv.size(); ++s) {
            if (sgn(rv[s]) == 0) continue;
            const Vector mn = l.bracket(f[s / dn], g[s % dn]);
            add_scaled(out, -koszul_sign(lp[a], rp[b]) * ru[r] * rv[s], w.wedge(nm, mn));
        }
    }
    return out;
}

namespace {

FiberProblem square_problem(const SuperAlgebra& l, const WedgeSpace& w, Matrix check, Subspace goal,
                            const SaturationConfig& cfg) {
    if (!w.is_square() || w.left().dim() != l.dim()) {
        throw std::invalid_argument("saturation needs the exterior square L∧L");
    }
    FiberProblem p;
    p.even_dim = l.even_dim();
    p.odd_dim = l.odd_dim();
    p.target_dim = w.wedge_dim();
    const std::size_t n = l.dim();
    p.pairing.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.pairing.push_back(w.symbol(i, j));
    p.check = std::move(check);
    p.goal = std::move(goal);
    p.strata[0] = sampling_strata(l, Parity::kEven);
    p.strata[1] = sampling_strata(l, Parity::kOdd);
    p.batch = cfg.batch_for(l.dim());
    return p;
}

}  // namespace

M0Result m0_saturate(const SuperAlgebra& l, const WedgeSpace& w, const SaturationConfig& cfg) {
    Subspace schur = schur_multiplier(w);
    FiberProblem p = square_problem(l, w, w.kappa(), schur, cfg);
    SaturationOutcome o = saturate(p, cfg.seed, cfg.stable_rounds);
    M0Result r;
    r.status = o.span.dim() == schur.dim() ? B0Status::kCertifiedZero : B0Status::kStableNonzero;
    r.found = std::move(o.span);
    r.witnesses = std::move(o.witnesses);
    r.rounds = o.rounds;
    r.rounds_stable = o.rounds_stable;
    return r;
}

B0Report bogomolov(const SuperAlgebra& l, const SaturationConfig& cfg) {
    const WedgeSpace w = exterior_square(l);
    const Subspace schur = schur_multiplier(w);
    M0Result m0 = m0_saturate(l, w, cfg);
    B0Report r;
    r.dims.derived = derived(l).dim();
    r.dims.exterior_square = w.wedge_dim();
    r.dims.schur = schur.dim();
    r.dims.m0_found = m0.found.dim();
    r.dims.b0_bound = r.dims.schur - r.dims.m0_found;
    r.status = m0.status;
    r.witnesses = std::move(m0.witnesses);
    r.seed = cfg.seed;
    r.batch = cfg.batch_for(l.dim());
    r.stable_rounds = cfg.stable_rounds;
    r.rounds = m0.rounds;
    r.rounds_stable = m0.rounds_stable;
    return r;
}

CurlySquare curly_square(const SuperAlgebra& l, const SaturationConfig& cfg) {
    const WedgeSpace w = exterior_square(l);
    M0Result m0 = m0_saturate(l, w, cfg);
    CurlySquare c;
    c.dim = w.wedge_dim() - m0.found.dim();
    c.projection = quotient_coords(w.wedge_dim(), m0.found);
    c.status = m0.status;
    return c;
}

std::size_t curly_quotient_dim(const SuperAlgebra& l, const GradedSubspace& k, const SaturationConfig& cfg) {
    require_graded_ideal(l, k);
    const WedgeSpace w = exterior_square(l);
    const Matrix qk = quotient_coords(l.dim(), k.embed()).matrix();
    Matrix check = qk * w.kappa();
    Subspace goal = kernel_basis(check);
    FiberProblem p = square_problem(l, w, check, goal, cfg);
    Subspace t = saturate(p, cfg.seed, cfg.stable_rounds).span;
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Vector> basis = t.basis();
        for (const auto& u : basis) {
            for (const auto& v : basis) grew |= t.insert(wedge_bracket(w, u, v));
        }
    }
    return w.wedge_dim() - t.dim();
}

NotCentralError::NotCentralError(Vector ideal_vector, std::size_t basis_index, Vector bracket)
    : std::runtime_error("M not central: bracket of " + to_string(ideal_vector) + " with basis element " +
                         std::to_string(basis_index) + " is " + to_string(bracket)),
      ideal_vector(std::move(ideal_vector)),
      basis_index(basis_index),
      bracket(std::move(bracket)) {}

CpResult cp_check_central_extension(const SuperAlgebra& c, const GradedSubspace& m, const SaturationConfig& cfg) {
    for (const auto& v : m.homogeneous_basis()) {
        for (std::size_t j = 0; j < c.dim(); ++j) {
            Vector b = c.bracket(v, c.basis_vector(j));
            if (!is_zero(b)) throw NotCentralError(v, j, b);
        }
    }
    const Matrix q = quotient_coords(c.dim(), m.embed()).matrix();
    const std::size_t n = c.dim();

    auto search = [&](const Vector& x, Parity px) -> std::optional<CpWitness> {
        for (Parity py : {Parity::kEven, Parity::kOdd}) {
            const std::size_t off = c.block_offset(py);
            const std::size_t bd = c.block_dim(py);
            if (bd == 0) continue;
            Matrix a(q.rows(), bd);
            std::vector<Vector> images;
            for (std::size_t col = 0; col < bd; ++col) {
                images.push_back(c.bracket(x, c.basis_vector(off + col)));
                a.set_column(col, q.apply(images.back()));
            }
            const Subspace solutions = kernel_basis(a);
            for (const auto& sol : solutions.basis()) {
                Vector value(n, Scalar(0));
                Vector y(n, Scalar(0));
                for (std::size_t col = 0; col < bd; ++col) {
                    y[off + col] = sol[col];
                    add_scaled(value, sol[col], images[col]);
                }
                if (!is_zero(value)) return CpWitness{x, std::move(y), px, py, std::move(value)};
            }
        }
        return std::nullopt;
    };

    CpResult r;
    for (std::size_t i = 0; i < n; ++i) {
        if (auto w = search(c.basis_vector(i), c.parity(i))) {
            r.status = CpStatus::kCertifiedNo;
            r.witness = std::move(w);
            return r;
        }
    }
    const std::size_t batch = cfg.batch_for(n);
    for (std::size_t round = 1; round <= cfg.stable_rounds; ++round) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(round)};
        std::mt19937_64 rng(seq);
        for (std::size_t s = 0; s < batch; ++s) {
            for (Parity px : {Parity::kEven, Parity::kOdd}) {
                const std::size_t bd = c.block_dim(px);
                if (bd == 0) continue;
                Vector x(n, Scalar(0));
                for (std::size_t col = 0; col < bd; ++col) x[c.block_offset(px) + col] = static_cast<long>(rng() % 19) - 9;
                if (is_zero(x)) continue;
                if (auto w = search(x, px)) {
                    r.status = CpStatus::kCertifiedNo;
                    r.witness = std::move(w);
                    return r;
                }
            }
        }
    }
    return r;
}

bool verify_witnesses(const SuperAlgebra& l, const WedgeSpace& w, const std::vector<M0Witness>& ws) {
    const std::size_t n = l.dim();
    auto homogeneous = [&](const Vector& v, Parity p, bool allow_zero) {
        if (v.size() != n) return false;
        if (is_zero(v)) return allow_zero;
        auto q = l.parity_of(v);
        return q && *q == p;
    };
    for (const auto& x : ws) {
        if (!homogeneous(x.m, x.pm, false) || !homogeneous(x.n, x.pn, false)) return false;
        Vector cond = l.bracket(x.m, x.n);
        Vector image = w.wedge(x.m, x.n);
        if (x.scheme == WitnessScheme::kSinglePair) {
            if (x.pm != Parity::kEven || x.pn != Parity::kEven) return false;
        } else {
            if (!homogeneous(x.m2, x.pm2, true) || !homogeneous(x.n2, x.pn2, true)) return false;
            if (x.pm2 != x.pm + Parity::kOdd || x.pn2 != x.pn + Parity::kOdd) return false;
            if (x.sign != koszul_sign(x.pm2, x.pn2)) return false;
            add_scaled(cond, x.sign, l.bracket(x.m2, x.n2));
            add_scaled(image, x.sign, w.wedge(x.m2, x.n2));
            // The witness must come from the commuting pair X = m + m2, Y = n + sign·n2.
            if (!is_zero(l.bracket(x.m + x.m2, x.n + scaled(x.sign, x.n2)))) return false;
        }
        if (!is_zero(cond)) return false;
        if (image != x.image) return false;
    }
    return true;
}

}  // namespace superwedge
