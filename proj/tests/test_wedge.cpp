#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "superwedge/catalog.hpp"
#include "superwedge/wedge.hpp"

using namespace superwedge;

namespace {

Vector e(const SuperAlgebra& a, const char* name) { return a.basis_vector(*a.index_of(name)); }

GradedSubspace span_of(const SuperAlgebra& a, std::initializer_list<const char*> names) {
    std::vector<Vector> vs;
    for (const char* n : names) vs.push_back(e(a, n));
    return GradedSubspace::span_components(a, vs);
}

std::vector<CatalogEntry> small_catalog() {
    std::vector<CatalogEntry> out;
    for (auto& entry : catalog_list()) {
        if (entry.algebra.dim() <= 7) out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace

TEST(ExteriorSquare, AbelianOneOne) {
    const auto a = abelian(1, 1);
    const auto w = exterior_square(a);
    EXPECT_EQ(w.wedge_dim(), 2u);
    const Vector ev = e(a, "e1"), fv = e(a, "f1");
    EXPECT_TRUE(is_zero(w.wedge(ev, ev)));
    EXPECT_EQ(w.wedge(fv, ev), scaled(-1, w.wedge(ev, fv)));
    EXPECT_EQ(Subspace::span(2, {w.wedge(ev, fv), w.wedge(fv, fv)}).dim(), 2u);
}

TEST(ExteriorSquare, OddCenterSquareVanishes) {
    const auto h = heisenberg_odd(1);
    const auto w = exterior_square(h);
    EXPECT_TRUE(is_zero(w.wedge(e(h, "z"), e(h, "z"))));
}

TEST(ExteriorSquare, SpecialHeisenbergCenterWedgesVanish) {
    const auto h = heisenberg_special(2, 2);
    const auto w = exterior_square(h);
    for (const char* s : {"x1", "x2", "x3", "x4", "y1", "y2"}) {
        EXPECT_TRUE(is_zero(w.wedge(e(h, s), e(h, "z")))) << s;
    }
}

TEST(ExteriorProduct, RejectsNonIdeal) {
    const auto h = heisenberg_special(1, 0);
    EXPECT_THROW(exterior_product(h, span_of(h, {"x1"}), GradedSubspace::whole(h)), NotAnIdealError);
}

TEST(SchurMultiplier, Examples) {
    EXPECT_EQ(schur_multiplier(exterior_square(abelian(1, 1))).dim(), 2u);
    EXPECT_EQ(schur_multiplier(exterior_square(abelian(2, 0))).dim(), 1u);
    EXPECT_EQ(schur_multiplier(exterior_square(heisenberg_special(1, 0))).dim(), 2u);
}

// Reference: dim H^2 through 2-cocycles.
TEST(SchurMultiplier, MatchesCocycleOracleOnCatalog) {
    for (const auto& entry : small_catalog()) {
        const auto w = exterior_square(entry.algebra);
        EXPECT_EQ(schur_multiplier(w).dim(), oracle::schur_dim_by_cocycles(entry.algebra)) << entry.id;
    }
}

TEST(SchurMultiplier, MatchesCocycleOracleOnAllBackhouseSamples) {
    for (const auto& fam : backhouse_families()) {
        for (const auto& params : fam.samples) {
            const auto a = backhouse(fam.id, params);
            EXPECT_EQ(schur_multiplier(exterior_square(a)).dim(), oracle::schur_dim_by_cocycles(a))
                << fam.id << " " << format_params(params);
        }
    }
}

TEST(M0Saturate, AbelianCertifiedByBasisPairs) {
    const auto a = abelian(2, 3);
    const auto w = exterior_square(a);
    SaturationConfig cfg;
    cfg.batch = 0;
    auto r = m0_saturate(a, w, cfg);
    EXPECT_EQ(r.status, B0Status::kCertifiedZero);
    EXPECT_EQ(r.found, schur_multiplier(w));
}

TEST(M0Saturate, OddCenterHeisenbergCertified) {
    const auto h = heisenberg_odd(1);
    const auto w = exterior_square(h);
    auto r = m0_saturate(h, w);
    EXPECT_EQ(r.status, B0Status::kCertifiedZero);
    EXPECT_TRUE(verify_witnesses(h, w, r.witnesses));
}

TEST(M0Saturate, FiliformStaysNonzero) {
    const auto f = filiform5();
    auto r = bogomolov(f);
    EXPECT_EQ(r.status, B0Status::kStableNonzero);
    EXPECT_GE(r.dims.b0_bound, 1u);
    EXPECT_GE(r.rounds_stable, 3u);
}

TEST(Bogomolov, Examples) {
    for (const auto& a : {heisenberg_special(1, 1), backhouse("nontrivial:L_(1,1)", {}), abelian(2, 3)}) {
        auto r = bogomolov(a);
        EXPECT_EQ(r.status, B0Status::kCertifiedZero) << a.name();
        EXPECT_EQ(r.dims.b0_bound, 0u) << a.name();
    }
}

TEST(Bogomolov, ReportFieldsConsistent) {
    for (const auto& entry : small_catalog()) {
        auto r = bogomolov(entry.algebra);
        EXPECT_EQ(r.dims.b0_bound, r.dims.schur - r.dims.m0_found) << entry.id;
        EXPECT_EQ(r.status == B0Status::kCertifiedZero, r.dims.b0_bound == 0) << entry.id;
        EXPECT_EQ(r.seed, 0xB060u);
        EXPECT_EQ(r.batch, 16 * entry.algebra.dim() * entry.algebra.dim());
        EXPECT_EQ(r.stable_rounds, 3u);
    }
}

TEST(CurlySquare, Examples) {
    EXPECT_EQ(curly_square(abelian(1, 1)).dim, 0u);
    auto h = curly_square(heisenberg_special(1, 0));
    EXPECT_EQ(h.status, B0Status::kCertifiedZero);
    EXPECT_EQ(h.dim, 1u);
    for (const auto& entry : small_catalog()) {
        auto c = curly_square(entry.algebra);
        if (c.status == B0Status::kCertifiedZero) EXPECT_EQ(c.dim, derived(entry.algebra).dim()) << entry.id;
    }
}

TEST(CpCheck, HeisenbergCenterIsNotCp) {
    const auto h = heisenberg_special(1, 0);
    auto r = cp_check_central_extension(h, span_of(h, {"z"}));
    ASSERT_EQ(r.status, CpStatus::kCertifiedNo);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(h.bracket(r.witness->x, r.witness->y), r.witness->value);
    EXPECT_FALSE(is_zero(r.witness->value));
    EXPECT_TRUE(span_of(h, {"z"}).contains(r.witness->value));
}

TEST(CpCheck, AbelianIsCp) {
    const auto a = abelian(3, 0);
    EXPECT_EQ(cp_check_central_extension(a, span_of(a, {"e1"})).status, CpStatus::kStableYes);
}

TEST(CpCheck, AbelianSummandIsCp) {
    const auto c = direct_sum(heisenberg_special(1, 0), abelian(1, 0));
    auto r = cp_check_central_extension(c, span_of(c, {"e1"}));
    EXPECT_EQ(r.status, CpStatus::kStableYes);
    EXPECT_FALSE(r.witness.has_value());
}

TEST(CpCheck, NonCentralRejected) {
    const auto h = heisenberg_special(1, 0);
    EXPECT_THROW(cp_check_central_extension(h, span_of(h, {"x1"})), NotCentralError);
}

TEST(VerifyWitnesses, RoundTripAndTamper) {
    const auto h = heisenberg_special(1, 1);
    const auto w = exterior_square(h);
    auto r = bogomolov(h);
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_TRUE(verify_witnesses(h, w, r.witnesses));

    // Break the bracket condition of a witness with a nonzero bracket part.
    bool tampered = false;
    for (auto& wit : r.witnesses) {
        for (std::size_t k = 0; k < wit.m.size() && !tampered; ++k) {
            auto copy = r.witnesses;
            auto& target = copy[&wit - r.witnesses.data()];
            target.m[k] += 1;
            if (h.bracket(target.m, target.n) == h.bracket(wit.m, wit.n)) continue;
            EXPECT_FALSE(verify_witnesses(h, w, copy));
            tampered = true;
        }
        if (tampered) break;
    }
    EXPECT_TRUE(tampered);

    auto bad_image = r.witnesses;
    bad_image[0].image[0] += 1;
    EXPECT_FALSE(verify_witnesses(h, w, bad_image));
}

// Invariants.
TEST(WedgeProperties, KappaSurjectsOntoDerived) {
    for (const auto& entry : small_catalog()) {
        const auto w = exterior_square(entry.algebra);
        EXPECT_EQ(w.wedge_dim() - schur_multiplier(w).dim(), derived(entry.algebra).dim()) << entry.id;
    }
}

TEST(WedgeProperties, M0InsideSchur) {
    for (const auto& entry : small_catalog()) {
        const auto w = exterior_square(entry.algebra);
        const auto m = schur_multiplier(w);
        auto r = m0_saturate(entry.algebra, w);
        EXPECT_TRUE(m.contains(r.found)) << entry.id;
        for (const auto& wit : r.witnesses) EXPECT_TRUE(m.contains(wit.image)) << entry.id;
        EXPECT_TRUE(verify_witnesses(entry.algebra, w, r.witnesses)) << entry.id;
    }
}

TEST(WedgeProperties, Deterministic) {
    for (const char* id : {"filiform5", "heisenberg_special(2,1)", "nontrivial:L7_(2,2)", "trivial:L4_(1,3)"}) {
        const auto a = resolve(id).algebra;
        auto r1 = bogomolov(a), r2 = bogomolov(a);
        EXPECT_EQ(r1.dims, r2.dims) << id;
        EXPECT_EQ(r1.status, r2.status) << id;
        EXPECT_EQ(r1.witnesses, r2.witnesses) << id;
        EXPECT_EQ(r1.rounds, r2.rounds) << id;
        EXPECT_EQ(r1.rounds_stable, r2.rounds_stable) << id;
    }
}

TEST(WedgeProperties, MonotoneInBatchAndRounds) {
    for (const char* id : {"filiform5", "nontrivial:L11_(2,2)", "heisenberg_special(1,1)"}) {
        const auto a = resolve(id).algebra;
        std::size_t previous = 0;
        for (std::size_t scale : {0, 1, 4, 16}) {
            SaturationConfig cfg;
            cfg.batch = scale * a.dim();
            cfg.stable_rounds = 1 + scale / 4;
            const auto found = bogomolov(a, cfg).dims.m0_found;
            EXPECT_GE(found, previous) << id << " batch " << *cfg.batch;
            previous = found;
        }
    }
}

TEST(WedgeProperties, BracketOnWedgesFollowsCommutators) {
    for (const char* id : {"heisenberg_special(1,1)", "heisenberg_odd(2)", "filiform5", "nontrivial:L_(2,1)",
                           "trivial:L1_(1,3)", "nontrivial:L7_(2,2)"}) {
        const auto l = resolve(id).algebra;
        const auto w = exterior_square(l);
        const std::size_t n = l.dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    for (std::size_t m = 0; m < n; ++m) {
                        const Vector bi = l.basis_vector(i), bj = l.basis_vector(j);
                        const Vector bk = l.basis_vector(k), bm = l.basis_vector(m);
                        const Vector lhs = wedge_bracket(w, w.wedge(bi, bj), w.wedge(bk, bm));
                        const int s = koszul_sign(l.parity(i), l.parity(j));
                        const Vector rhs = scaled(-s, w.wedge(l.bracket(bj, bi), l.bracket(bk, bm)));
                        EXPECT_EQ(lhs, rhs) << id;
                    }
                }
            }
        }
    }
}

// L∧L with the induced bracket is itself a Lie superalgebra.
TEST(WedgeProperties, ExteriorSquareIsLieSuperalgebra) {
    for (const char* id : {"heisenberg_special(1,1)", "heisenberg_odd(1)", "filiform5", "nontrivial:L_(2,1)",
                           "trivial:L3_(2,2)", "nontrivial:L3_(3,1)"}) {
        const auto l = resolve(id).algebra;
        const auto w = exterior_square(l);
        const auto lp = w.left().basis_parities(), rp = w.right().basis_parities();
        const auto& cols = w.project().complement();
        std::vector<std::size_t> even, odd;
        for (std::size_t t = 0; t < cols.size(); ++t) {
            const std::size_t a = cols[t] / w.right_basis().size(), b = cols[t] % w.right_basis().size();
            (is_odd(lp[a] + rp[b]) ? odd : even).push_back(t);
        }
        std::vector<std::size_t> order = even;
        order.insert(order.end(), odd.begin(), odd.end());
        std::vector<std::string> en, on;
        for (std::size_t t = 0; t < even.size(); ++t) en.push_back("u" + std::to_string(t));
        for (std::size_t t = 0; t < odd.size(); ++t) on.push_back("v" + std::to_string(t));
        SuperAlgebra sq("square", en, on);
        auto reorder = [&](const Vector& v) {
            Vector out(v.size());
            for (std::size_t t = 0; t < order.size(); ++t) out[t] = v[order[t]];
            return out;
        };
        for (std::size_t p = 0; p < order.size(); ++p) {
            for (std::size_t q = 0; q < order.size(); ++q) {
                const Vector u = unit_vector(order.size(), order[p]);
                const Vector v = unit_vector(order.size(), order[q]);
                sq.set_structure(p, q, reorder(wedge_bracket(w, u, v)));
            }
        }
        EXPECT_FALSE(oracle::first_broken_identity(sq).has_value()) << id;
    }
}
