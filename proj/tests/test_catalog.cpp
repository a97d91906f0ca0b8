#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "superwedge/catalog.hpp"

using namespace superwedge;

namespace {

Vector e(const SuperAlgebra& a, const char* name) {
    auto i = a.index_of(name);
    if (!i) throw std::invalid_argument(std::string("no basis element ") + name);
    return a.basis_vector(*i);
}

Vector br(const SuperAlgebra& a, const char* x, const char* y) { return a.bracket(e(a, x), e(a, y)); }

Scalar q(const char* s) { return parse_rational(s); }

std::size_t count_if_prefix(const std::vector<CatalogEntry>& list, const std::string& prefix) {
    std::size_t n = 0;
    for (const auto& entry : list) n += entry.id.rfind(prefix, 0) == 0;
    return n;
}

}  // namespace

TEST(HeisenbergSpecial, Examples) {
    auto h10 = heisenberg_special(1, 0);
    EXPECT_EQ(h10.even_dim(), 3u);
    EXPECT_EQ(h10.odd_dim(), 0u);
    EXPECT_EQ(br(h10, "x1", "x2"), e(h10, "z"));

    auto h01 = heisenberg_special(0, 1);
    EXPECT_EQ(h01.even_dim(), 1u);
    EXPECT_EQ(h01.odd_dim(), 1u);
    EXPECT_EQ(br(h01, "y1", "y1"), e(h01, "z"));

    auto h22 = heisenberg_special(2, 2);
    EXPECT_EQ(h22.even_dim(), 5u);
    EXPECT_EQ(h22.odd_dim(), 2u);
    EXPECT_EQ(derived(h22), GradedSubspace::span_components(h22, {e(h22, "z")}));
    EXPECT_EQ(br(h22, "x2", "x4"), e(h22, "z"));
    EXPECT_TRUE(is_zero(br(h22, "x1", "x2")));
    EXPECT_TRUE(is_zero(br(h22, "y1", "y2")));

    EXPECT_THROW(heisenberg_special(0, 0), ParameterError);
}

TEST(HeisenbergOdd, Examples) {
    auto h1 = heisenberg_odd(1);
    EXPECT_EQ(h1.even_dim(), 1u);
    EXPECT_EQ(h1.odd_dim(), 2u);
    auto h2 = heisenberg_odd(2);
    EXPECT_EQ(center(h2), GradedSubspace::span_components(h2, {e(h2, "z")}));
    EXPECT_EQ(center(h2).odd.dim(), 1u);
    EXPECT_TRUE(validate(heisenberg_odd(3)).ok());
    EXPECT_THROW(heisenberg_odd(0), ParameterError);
}

TEST(Abelian, Examples) {
    auto zero = abelian(0, 0);
    EXPECT_EQ(zero.dim(), 0u);
    EXPECT_TRUE(validate(zero).ok());
    for (auto [m, n] : {std::pair{1, 1}, {2, 3}}) {
        auto a = abelian(m, n);
        EXPECT_EQ(derived(a).dim(), 0u);
        EXPECT_EQ(center(a), GradedSubspace::whole(a));
    }
}

TEST(Filiform, Examples) {
    auto f = filiform5();
    EXPECT_EQ(f.even_dim(), 5u);
    EXPECT_EQ(f.odd_dim(), 0u);
    EXPECT_EQ(br(f, "a", "b"), e(f, "c"));
    EXPECT_EQ(br(f, "a", "c"), e(f, "d"));
    EXPECT_EQ(br(f, "a", "d"), e(f, "e"));
    EXPECT_EQ(br(f, "b", "c"), e(f, "e"));
    EXPECT_EQ(lower_central_series(f).nilpotency_class, std::optional<std::size_t>(4));
    EXPECT_EQ(center(f), GradedSubspace::span_components(f, {e(f, "e")}));
    EXPECT_TRUE(validate(f).ok());
}

TEST(Backhouse, PrintedExamples) {
    auto t11 = backhouse("trivial:L_(1,1)", {});
    EXPECT_EQ(br(t11, "a", "alpha"), e(t11, "alpha"));
    EXPECT_TRUE(is_zero(br(t11, "alpha", "alpha")));

    auto n21 = backhouse("nontrivial:L_(2,1)", {});
    EXPECT_EQ(br(n21, "a", "b"), e(n21, "b"));
    EXPECT_EQ(br(n21, "a", "alpha"), scaled(q("1/2"), e(n21, "alpha")));
    EXPECT_EQ(br(n21, "alpha", "alpha"), e(n21, "b"));

    auto t412 = backhouse("trivial:L4_(1,2)", {{"p", 1}});
    EXPECT_EQ(br(t412, "a", "alpha"), e(t412, "alpha") - e(t412, "beta"));
    EXPECT_EQ(br(t412, "a", "beta"), e(t412, "alpha") + e(t412, "beta"));

    auto n7 = backhouse("nontrivial:L7_(2,2)", {});
    EXPECT_EQ(br(n7, "beta", "beta"), e(n7, "a"));
    EXPECT_EQ(br(n7, "alpha", "beta"), scaled(q("-1/2"), e(n7, "b")));

    auto n112 = backhouse("nontrivial:L1_(1,2)", {});
    EXPECT_EQ(br(n112, "alpha", "alpha"), e(n112, "a"));
    EXPECT_EQ(br(n112, "beta", "beta"), e(n112, "a"));
}

TEST(Backhouse, FamilyIdsAndCounts) {
    const auto& fams = backhouse_families();
    EXPECT_EQ(fams.size(), 49u);
    std::size_t trivial = 0, nontrivial_22 = 0;
    std::set<std::string> ids;
    for (const auto& f : fams) {
        trivial += f.trivial;
        nontrivial_22 += !f.trivial && f.id.find("_(2,2)") != std::string::npos;
        EXPECT_TRUE(ids.insert(f.id).second) << f.id;
        EXPECT_EQ(f.id.rfind(f.trivial ? "trivial:" : "nontrivial:", 0), 0u) << f.id;
        if (!f.param_names.empty()) EXPECT_EQ(f.samples.size(), 3u) << f.id;
    }
    EXPECT_EQ(trivial, 22u);
    EXPECT_EQ(nontrivial_22, 17u);
}

TEST(Backhouse, EverySampleValidatesWithPrintedDimensions) {
    for (const auto& f : backhouse_families()) {
        // "L3_(2,2)" -> (2|2)
        const auto open = f.id.rfind('(');
        const std::size_t m = std::stoul(f.id.substr(open + 1));
        const std::size_t n = std::stoul(f.id.substr(f.id.find(',', open) + 1));
        for (const auto& params : f.samples) {
            auto a = backhouse(f.id, params);
            EXPECT_TRUE(validate(a).ok()) << f.id << " " << format_params(params);
            EXPECT_FALSE(oracle::first_broken_identity(a).has_value()) << f.id;
            EXPECT_EQ(a.even_dim(), m) << f.id;
            EXPECT_EQ(a.odd_dim(), n) << f.id;
            if (a.dim() > 1) EXPECT_FALSE(a.is_abelian()) << f.id;
        }
    }
}

TEST(Backhouse, ParameterConstraintsEnforced) {
    try {
        backhouse("nontrivial:L11_(2,2)", {{"p", 0}});
        FAIL() << "p = 0 accepted";
    } catch (const ParameterError& err) {
        EXPECT_NE(std::string(err.what()).find("p > 0"), std::string::npos) << err.what();
    }
    EXPECT_THROW(backhouse("trivial:L_(2,1)", {{"p", 0}}), ParameterError);
    EXPECT_THROW(backhouse("trivial:L_(2,1)", {}), ParameterError);
    EXPECT_THROW(backhouse("trivial:L_(2,1)", {{"p", 1}, {"r", 1}}), ParameterError);

    // Every printed constraint is echoed when it fails.
    std::size_t rejected = 0;
    for (const auto& f : backhouse_families()) {
        if (f.param_names.empty()) continue;
        for (const Scalar bad : {Scalar(0), Scalar(-3), Scalar(7)}) {
            ParamMap params = f.samples.front();
            params[f.param_names.front()] = bad;
            try {
                backhouse(f.id, params);
            } catch (const ParameterError& err) {
                ++rejected;
                bool echoed = false;
                for (const auto& c : f.constraints) echoed |= std::string(err.what()).find(c) != std::string::npos;
                EXPECT_TRUE(echoed) << err.what();
            }
        }
    }
    EXPECT_GT(rejected, 10u);
}

TEST(Backhouse, UnknownId) {
    EXPECT_THROW(backhouse("trivial:L9_(1,2)", {}), UnknownIdError);
    EXPECT_THROW(resolve("nosuch"), UnknownIdError);
}

TEST(Backhouse, CorrectionsFlagged) {
    auto has = [](const char* id) {
        for (const auto& f : backhouse_families())
            if (f.id == id) return !f.corrections.empty();
        return false;
    };
    EXPECT_TRUE(has("trivial:L3_(1,3)"));
    EXPECT_TRUE(has("nontrivial:L15_(2,2)"));
    EXPECT_TRUE(has("trivial:L2_(3,1)"));
    EXPECT_FALSE(has("nontrivial:L7_(2,2)"));

    auto l3 = resolve("trivial:L3_(1,3)").algebra;
    EXPECT_EQ(br(l3, "a", "gamma"), e(l3, "beta") + e(l3, "gamma"));
}

TEST(CatalogList, Contents) {
    auto list = catalog_list();
    EXPECT_GE(list.size(), 40u);
    std::set<std::string> ids;
    for (const auto& entry : list) {
        EXPECT_TRUE(ids.insert(entry.id).second) << entry.id;
        EXPECT_TRUE(validate(entry.algebra).ok()) << entry.id;
        EXPECT_FALSE(entry.expected.source.empty()) << entry.id;
    }
    std::size_t nontrivial_22 = 0;
    for (const auto& entry : list) {
        nontrivial_22 += entry.id.rfind("nontrivial:", 0) == 0 && entry.id.find("_(2,2)") != std::string::npos;
    }
    EXPECT_EQ(nontrivial_22, 17u);
    EXPECT_EQ(count_if_prefix(list, "trivial:") + count_if_prefix(list, "nontrivial:"), 49u);

    auto find = [&](const std::string& id) -> const CatalogEntry* {
        for (const auto& entry : list) {
            if (entry.id == id) return &entry;
            for (const auto& alias : entry.aliases)
                if (alias == id) return &entry;
        }
        return nullptr;
    };
    ASSERT_NE(find("heisenberg_special(1,1)"), nullptr);
    EXPECT_TRUE(find("heisenberg_special(1,1)")->expected.b0_trivial);
    ASSERT_NE(find("thm58"), nullptr);
    EXPECT_FALSE(find("thm58")->expected.b0_trivial);
    for (const auto& entry : list) {
        if (entry.id.find(':') != std::string::npos) EXPECT_TRUE(entry.expected.b0_trivial) << entry.id;
    }
}

TEST(CatalogList, StableOrder) {
    auto a = catalog_list(), b = catalog_list();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].id, b[i].id);
}

TEST(Resolve, AcceptedForms) {
    EXPECT_EQ(resolve("abelian(2,3)").algebra.dim(), 5u);
    EXPECT_EQ(resolve("heisenberg_special(1,1)").algebra.dim(), 4u);
    EXPECT_EQ(resolve("heisenberg_odd(2)").algebra.dim(), 5u);
    EXPECT_EQ(resolve("thm58").id, resolve("filiform5").id);
    auto b = resolve("backhouse(trivial:L4_(1,2),p=1)");
    EXPECT_EQ(b.id, "trivial:L4_(1,2)");
    EXPECT_EQ(b.params.at("p"), 1);
    EXPECT_EQ(resolve("trivial:L^4_(1,2)").id, "trivial:L4_(1,2)");
    EXPECT_EQ(resolve("nontrivial:L^7_(2,2)").id, "nontrivial:L7_(2,2)");
    auto frac = resolve("backhouse(nontrivial:L11_(2,2),p=3/10)");
    EXPECT_EQ(frac.params.at("p"), q("3/10"));
    EXPECT_THROW(resolve("backhouse(nontrivial:L11_(2,2),p=-1)"), ParameterError);
    EXPECT_THROW(resolve("heisenberg_special(0,0)"), ParameterError);
}

TEST(Resolve, FormatParams) {
    EXPECT_EQ(format_params({{"p", q("1/2")}, {"q", 1}}), "p=1/2,q=1");
    EXPECT_EQ(format_params({}), "");
}
