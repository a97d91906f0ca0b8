#include "superwedge/saturation.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace superwedge {

const char* to_string(WitnessScheme s) { return s == WitnessScheme::kSinglePair ? "single-pair" : "two-pair"; }

namespace {

class Saturator {
public:
    explicit Saturator(const FiberProblem& p) : p_(p), span_(p.target_dim) {
        const std::size_t n = p.dim();
        checked_.reserve(n * n);
        for (const auto& v : p.pairing) checked_.push_back(p.check.apply(v));
    }

    bool done() const { return span_.dim() >= p_.goal.dim(); }

    // Basis pairs with vanishing check.
    void basis_pairs() {
        const std::size_t n = p_.dim();
        for (std::size_t i = 0; i < n && !done(); ++i) {
            for (std::size_t j = 0; j < n && !done(); ++j) {
                if (!is_zero(checked_[i * n + j])) continue;
                const Vector e_i = unit_vector(n, i);
                const Vector e_j = unit_vector(n, j);
                const Vector zero = zero_vector(n);
                if (p_.parity(i) == Parity::kEven) {
                    offer(e_i, e_j, zero, zero, p_.pairing[i * n + j]);
                } else {
                    offer(zero, zero, e_i, e_j, p_.pairing[i * n + j]);
                }
            }
        }
    }

    // x = x0 + x1 with x0 even and x1 odd. Solves C(P(x,y)) = 0 for y and
    // adds both homogeneous components of P(x,y) for every solution.
    bool fiber(const Vector& x0, const Vector& x1) {
        if (done()) return false;
        const std::size_t n = p_.dim();
        Matrix a(p_.check.rows(), n);
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar& xi = sgn(x0[i]) != 0 ? x0[i] : x1[i];
            if (sgn(xi) == 0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const Vector& col = checked_[i * n + c];
                for (std::size_t r = 0; r < col.size(); ++r) {
                    if (sgn(col[r]) != 0) a(r, c) += xi * col[r];
                }
            }
        }
        bool grew = false;
        const Subspace solutions = kernel_basis(a);
        for (const auto& y : solutions.basis()) {
            Vector y0 = y, y1 = y;
            for (std::size_t i = 0; i < n; ++i) (p_.parity(i) == Parity::kEven ? y1 : y0)[i] = 0;
            grew |= offer(x0, y0, x1, y1, pair(x0, y0) + pair(x1, y1));
            if (done()) break;
            grew |= offer(x0, y1, x1, y0, pair(x0, y1) + pair(x1, y0));
            if (done()) break;
        }
        return grew;
    }

    Subspace take_span() { return std::move(span_); }
    std::vector<M0Witness> take_witnesses() { return std::move(witnesses_); }

private:
    // image = P(a,b) + P(a2,b2), a even, a2 odd, and (a2,b2) of the opposite
    // parities to (a,b).
    bool offer(const Vector& a, const Vector& b, const Vector& a2, const Vector& b2, Vector image) {
        if (is_zero(image) || span_.contains(image)) return false;
        const bool first_zero = is_zero(a) || is_zero(b);
        const bool second_zero = is_zero(a2) || is_zero(b2);
        M0Witness w;
        if (first_zero || second_zero) {
            const Vector& m = first_zero ? a2 : a;
            const Vector& n = first_zero ? b2 : b;
            w.m = m;
            w.n = n;
            w.pm = parity_of(m);
            w.pn = parity_of(n);
            if (w.pm == Parity::kEven && w.pn == Parity::kEven) {
                w.scheme = WitnessScheme::kSinglePair;
            } else {
                w.scheme = WitnessScheme::kTwoPair;
                w.m2 = zero_vector(p_.dim());
                w.n2 = zero_vector(p_.dim());
                w.pm2 = w.pm + Parity::kOdd;
                w.pn2 = w.pn + Parity::kOdd;
                w.sign = koszul_sign(w.pm2, w.pn2);
            }
        } else {
            w.scheme = WitnessScheme::kTwoPair;
            w.m = a;
            w.n = b;
            w.pm = parity_of(a);
            w.pn = parity_of(b);
            w.m2 = a2;
            w.pm2 = parity_of(a2);
            w.pn2 = parity_of(b2);
            w.sign = koszul_sign(w.pm2, w.pn2);
            w.n2 = scaled(w.sign, b2);
        }
        w.image = std::move(image);
        span_.insert(w.image);
        witnesses_.push_back(std::move(w));
        return true;
    }

    Parity parity_of(const Vector& v) const {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (sgn(v[i]) != 0) return p_.parity(i);
        }
        return Parity::kEven;
    }

    Vector pair(const Vector& x, const Vector& y) const {
        const std::size_t n = p_.dim();
        Vector out(p_.target_dim, Scalar(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(y[j]) == 0) continue;
                add_scaled(out, x[i] * y[j], p_.pairing[i * n + j]);
            }
        }
        return out;
    }

    const FiberProblem& p_;
    std::vector<Vector> checked_;
    Subspace span_;
    std::vector<M0Witness> witnesses_;
};

class Sampler {
public:
    Sampler(const FiberProblem& p, std::uint64_t seed, std::uint64_t round) : p_(p) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(round), static_cast<std::uint32_t>(round >> 32)};
        rng_.seed(seq);
    }

    // Random nonzero vector of one stratum of block p, in full coordinates.
    Vector draw(Parity p, std::size_t k) {
        const auto& strata = p_.strata[static_cast<std::size_t>(p)];
        const Subspace& s = strata[k % strata.size()];
        const std::size_t off = p == Parity::kEven ? 0 : p_.even_dim;
        Vector v(p_.dim(), Scalar(0));
        bool nonzero = false;
        for (std::size_t b = 0; b < s.dim(); ++b) {
            long coef = static_cast<long>(rng_() % 19) - 9;
            if (coef == 0) continue;
            nonzero = true;
            for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
                if (sgn(s.basis()[b][c]) != 0) v[off + c] += coef * s.basis()[b][c];
            }
        }
        if (!nonzero) {
            for (std::size_t c = 0; c < s.ambient_dim(); ++c) v[off + c] = s.basis()[0][c];
        }
        return v;
    }

private:
    const FiberProblem& p_;
    std::mt19937_64 rng_;
};

}  // namespace

SaturationOutcome saturate(const FiberProblem& problem, std::uint64_t seed, std::size_t stable_rounds) {
    Saturator sat(problem);
    SaturationOutcome out;
    const std::size_t n = problem.dim();
    const Vector zero = zero_vector(n);

    sat.basis_pairs();
    for (std::size_t i = 0; i < n && !sat.done(); ++i) {
        const Vector e = unit_vector(n, i);
        problem.parity(i) == Parity::kEven ? sat.fiber(e, zero) : sat.fiber(zero, e);
    }
    for (std::size_t i = 0; i < problem.even_dim && !sat.done(); ++i) {
        for (std::size_t k = problem.even_dim; k < n && !sat.done(); ++k) {
            sat.fiber(unit_vector(n, i), unit_vector(n, k));
        }
    }

    const bool has_even = problem.even_dim > 0;
    const bool has_odd = problem.odd_dim > 0;
    while (!sat.done() && out.rounds_stable < stable_rounds && n > 0) {
        ++out.rounds;
        Sampler sampler(problem, seed, out.rounds);
        bool grew = false;
        for (std::size_t s = 0; s < problem.batch && !sat.done(); ++s) {
            const Vector x0 = has_even ? sampler.draw(Parity::kEven, s) : zero;
            const Vector x1 = has_odd ? sampler.draw(Parity::kOdd, s) : zero;
            if (has_even) grew |= sat.fiber(x0, zero);
            if (has_odd) grew |= sat.fiber(zero, x1);
            if (has_even && has_odd) grew |= sat.fiber(x0, x1);
        }
        out.rounds_stable = grew ? 0 : out.rounds_stable + 1;
    }

    out.span = sat.take_span();
    out.witnesses = sat.take_witnesses();
    return out;
}

std::vector<Subspace> sampling_strata(const SuperAlgebra& a, Parity p) {
    const bool even = p == Parity::kEven;
    std::vector<Subspace> out;
    const std::size_t bd = a.block_dim(p);
    if (bd == 0) return out;
    out.push_back(Subspace::full(bd));
    auto add = [&](const GradedSubspace& g) {
        const Subspace& s = even ? g.even : g.odd;
        if (s.dim() == 0) return;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    add(center(a));
    const LowerCentralSeries lcs = lower_central_series(a);
    for (std::size_t t = 1; t < lcs.terms.size(); ++t) add(lcs.terms[t]);
    for (std::size_t j = 0; j < a.dim(); ++j) {
        add(centralizer(a, GradedSubspace::span_components(a, {a.basis_vector(j)})));
    }
    return out;
}

}  // namespace superwedge
