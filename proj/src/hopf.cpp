#include "superwedge/hopf.hpp"

namespace superwedge {

namespace {

// Kernel of a parity-preserving map restricted to one block of the source.
Subspace block_kernel(const Matrix& map, const SuperAlgebra& source, Parity p) {
    const std::size_t off = source.block_offset(p);
    const std::size_t bd = source.block_dim(p);
    Matrix m(map.rows(), bd);
    for (std::size_t r = 0; r < map.rows(); ++r)
        for (std::size_t c = 0; c < bd; ++c) m(r, c) = map(r, off + c);
    return kernel_basis(m);
}

}  // namespace

Presentation presentation(const SuperAlgebra& l, GeneratorChoice choice) {
    if (l.dim() == 0) throw std::invalid_argument("the zero algebra has no free presentation");
    const LowerCentralSeries lcs = lower_central_series(l);
    if (!lcs.nilpotency_class) throw NotNilpotentError(l.name());
    const std::size_t c = *lcs.nilpotency_class;

    Presentation pr;
    if (choice == GeneratorChoice::kAllBasis) {
        for (std::size_t i = 0; i < l.dim(); ++i) pr.generator_images.push_back(i);
    } else {
        Subspace spanned = derived(l).embed();
        for (std::size_t i = 0; i < l.dim(); ++i) {
            if (spanned.insert(l.basis_vector(i))) pr.generator_images.push_back(i);
        }
    }
    std::size_t p = 0;
    std::vector<std::string> names;
    for (auto g : pr.generator_images) {
        p += l.parity(g) == Parity::kEven ? 1 : 0;
        names.push_back(l.basis_names()[g]);
    }
    const std::size_t q = pr.generator_images.size() - p;
    pr.free = free_nilpotent_super(p, q, c + 1, names);
    const SuperAlgebra& f = pr.free.algebra;

    std::vector<Vector> image(f.dim());
    for (std::size_t d = 1; d <= c + 1; ++d) {
        for (std::size_t i = 0; i < f.dim(); ++i) {
            if (pr.free.degree[i] != d) continue;
            if (!pr.free.factors[i]) {
                image[i] = l.basis_vector(pr.generator_images[pr.free.words[i][0]]);
            } else {
                image[i] = l.bracket(image[pr.free.factors[i]->first], image[pr.free.factors[i]->second]);
            }
        }
    }
    pr.pi = Matrix::from_columns(image, l.dim());
    pr.relations = {block_kernel(pr.pi, f, Parity::kEven), block_kernel(pr.pi, f, Parity::kOdd)};

    std::vector<Vector> commutators;
    for (const auto& r : pr.relations.homogeneous_basis()) {
        for (auto g : pr.free.generator_index) commutators.push_back(f.bracket(r, f.basis_vector(g)));
    }
    pr.relations_commutator = GradedSubspace::span_components(f, commutators);
    return pr;
}

std::size_t hopf_schur(const SuperAlgebra& l, GeneratorChoice choice) {
    if (l.dim() == 0) return 0;
    const Presentation pr = presentation(l, choice);
    const Subspace r_f2 = intersection(pr.relations.embed(), derived(pr.free.algebra).embed());
    return r_f2.dim() - pr.relations_commutator.dim();
}

B0Report hopf_bogomolov(const SuperAlgebra& l, const SaturationConfig& cfg, GeneratorChoice choice) {
    B0Report report;
    report.seed = cfg.seed;
    report.batch = cfg.batch_for(l.dim());
    report.stable_rounds = cfg.stable_rounds;
    if (l.dim() == 0) {
        report.status = B0Status::kCertifiedZero;
        return report;
    }
    const Presentation pr = presentation(l, choice);
    const QuotientResult fbar = quotient(pr.free.algebra, pr.relations_commutator);
    const SuperAlgebra& a = fbar.algebra;

    std::vector<Vector> rbar_vectors;
    for (const auto& r : pr.relations.homogeneous_basis()) rbar_vectors.push_back(fbar.projection.apply(r));
    const GradedSubspace rbar = GradedSubspace::span_components(a, rbar_vectors);
    const GradedSubspace fbar2 = derived(a);
    Subspace target = intersection(rbar.embed(), fbar2.embed());

    FiberProblem p;
    p.even_dim = a.even_dim();
    p.odd_dim = a.odd_dim();
    p.target_dim = a.dim();
    p.pairing.reserve(a.dim() * a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) p.pairing.push_back(a.structure(i, j));
    p.check = pr.pi * fbar.section;
    p.goal = target;
    p.strata[0] = sampling_strata(a, Parity::kEven);
    p.strata[1] = sampling_strata(a, Parity::kOdd);
    p.batch = report.batch;
    SaturationOutcome o = saturate(p, cfg.seed, cfg.stable_rounds);

    report.dims.derived = derived(l).dim();
    report.dims.exterior_square = fbar2.dim();
    report.dims.schur = target.dim();
    report.dims.m0_found = o.span.dim();
    report.dims.b0_bound = report.dims.schur - report.dims.m0_found;
    report.status = report.dims.b0_bound == 0 ? B0Status::kCertifiedZero : B0Status::kStableNonzero;
    report.witnesses = std::move(o.witnesses);
    report.rounds = o.rounds;
    report.rounds_stable = o.rounds_stable;
    return report;
}

bool verify_hopf_witnesses(const SuperAlgebra& l, const std::vector<M0Witness>& ws, GeneratorChoice choice) {
    if (l.dim() == 0) return ws.empty();
    const Presentation pr = presentation(l, choice);
    const QuotientResult fbar = quotient(pr.free.algebra, pr.relations_commutator);
    const SuperAlgebra& a = fbar.algebra;
    const Matrix check = pr.pi * fbar.section;
    auto homogeneous = [&](const Vector& v, Parity p, bool allow_zero) {
        if (v.size() != a.dim()) return false;
        if (is_zero(v)) return allow_zero;
        auto q = a.parity_of(v);
        return q && *q == p;
    };
    for (const auto& x : ws) {
        if (!homogeneous(x.m, x.pm, false) || !homogeneous(x.n, x.pn, false)) return false;
        Vector image = a.bracket(x.m, x.n);
        if (x.scheme == WitnessScheme::kSinglePair) {
            if (x.pm != Parity::kEven || x.pn != Parity::kEven) return false;
        } else {
            if (!homogeneous(x.m2, x.pm2, true) || !homogeneous(x.n2, x.pn2, true)) return false;
            if (x.pm2 != x.pm + Parity::kOdd || x.pn2 != x.pn + Parity::kOdd) return false;
            if (x.sign != koszul_sign(x.pm2, x.pn2)) return false;
            add_scaled(image, x.sign, a.bracket(x.m2, x.n2));
            if (!is_zero(check.apply(a.bracket(x.m + x.m2, x.n + scaled(x.sign, x.n2))))) return false;
        }
        // The image must lie in R/[R,F], i.e. map to zero in L.
        if (!is_zero(check.apply(image))) return false;
        if (image != x.image) return false;
    }
    return true;
}

}  // namespace superwedge
