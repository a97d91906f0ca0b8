#include "superwedge/catalog.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <utility>

namespace superwedge {

namespace {

using Combination = std::vector<std::pair<Scalar, std::string>>;

class Builder {
public:
    Builder(std::string name, std::vector<std::string> even, std::vector<std::string> odd)
        : a_(std::move(name), std::move(even), std::move(odd)) {}

    void set(std::string_view left, std::string_view right, const Combination& value) {
        Vector v = zero_vector(a_.dim());
        for (const auto& [coef, sym] : value) v[index(sym)] += coef;
        a_.define_bracket(index(left), index(right), v);
    }

    SuperAlgebra take() { return std::move(a_); }

private:
    std::size_t index(std::string_view s) const {
        auto i = a_.index_of(s);
        if (!i) throw std::logic_error("catalog: undeclared symbol " + std::string(s));
        return *i;
    }

    SuperAlgebra a_;
};

struct Constraint {
    std::string text;
    std::function<bool(const ParamMap&)> holds;
};

struct Family {
    BackhouseFamily info;
    std::vector<std::string> even, odd;
    std::vector<Constraint> constraints;
    std::function<void(Builder&, const ParamMap&)> brackets;
};

const Scalar& param(const ParamMap& p, const char* name) { return p.at(name); }

Constraint nonzero(const char* name) {
    return {std::string(name) + " != 0", [name](const ParamMap& p) { return sgn(param(p, name)) != 0; }};
}
Constraint positive(const char* name) {
    return {std::string(name) + " > 0", [name](const ParamMap& p) { return sgn(param(p, name)) > 0; }};
}
Constraint nonnegative(const char* name) {
    return {std::string(name) + " >= 0", [name](const ParamMap& p) { return sgn(param(p, name)) >= 0; }};
}

ParamMap params(std::initializer_list<std::pair<const char*, const char*>> values) {
    ParamMap out;
    for (const auto& [k, v] : values) out[k] = parse_rational(v);
    return out;
}

std::vector<ParamMap> samples_p(std::initializer_list<const char*> ps) {
    std::vector<ParamMap> out;
    for (auto p : ps) out.push_back(params({{"p", p}}));
    return out;
}

const std::vector<std::string> kA{"a"};
const std::vector<std::string> kAB{"a", "b"};
const std::vector<std::string> kABC{"a", "b", "c"};
const std::vector<std::string> kAlpha{"alpha"};
const std::vector<std::string> kAlphaBeta{"alpha", "beta"};
const std::vector<std::string> kAlphaBetaGamma{"alpha", "beta", "gamma"};

Family family(std::string id, std::vector<std::string> even, std::vector<std::string> odd,
              std::function<void(Builder&, const ParamMap&)> brackets) {
    Family f;
    f.info.id = std::move(id);
    f.info.trivial = f.info.id.rfind("trivial:", 0) == 0;
    f.even = std::move(even);
    f.odd = std::move(odd);
    f.brackets = std::move(brackets);
    f.info.samples = {ParamMap{}};
    return f;
}

Family with_params(Family f, std::vector<std::string> names, std::vector<Constraint> constraints,
                   std::vector<ParamMap> samples) {
    f.info.param_names = std::move(names);
    for (const auto& c : constraints) f.info.constraints.push_back(c.text);
    f.constraints = std::move(constraints);
    f.info.samples = std::move(samples);
    return f;
}

Family corrected(Family f, std::string note) {
    f.info.corrections.push_back(std::move(note));
    return f;
}

std::vector<Family> trivial_families() {
    std::vector<Family> out;
    out.push_back(family("trivial:L_(0,1)", {}, kAlpha, [](Builder&, const ParamMap&) {}));
    out.push_back(family("trivial:L_(1,1)", kA, kAlpha,
                         [](Builder& b, const ParamMap&) { b.set("a", "alpha", {{1, "alpha"}}); }));
    out.push_back(with_params(family("trivial:L_(2,1)", kAB, kAlpha,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("a", "b", {{1, "b"}});
                                         b.set("a", "alpha", {{p.at("p"), "alpha"}});
                                     }),
                              {"p"}, {nonzero("p")}, samples_p({"1/2", "1", "-2"})));
    out.push_back(with_params(
        family("trivial:L1_(1,2)", kA, kAlphaBeta,
               [](Builder& b, const ParamMap& p) {
                   b.set("a", "alpha", {{1, "alpha"}});
                   b.set("a", "beta", {{p.at("p"), "beta"}});
               }),
        {"p"},
        {{"0 < |p| <= 1",
          [](const ParamMap& p) { return sgn(p.at("p")) != 0 && abs(p.at("p")) <= 1; }}},
        samples_p({"1/2", "1", "-1/3"})));
    out.push_back(family("trivial:L2_(1,2)", kA, kAlphaBeta,
                         [](Builder& b, const ParamMap&) { b.set("a", "beta", {{1, "alpha"}}); }));
    out.push_back(family("trivial:L3_(1,2)", kA, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("a", "alpha", {{1, "alpha"}});
        b.set("a", "beta", {{1, "alpha"}, {1, "beta"}});
    }));
    out.push_back(with_params(family("trivial:L4_(1,2)", kA, kAlphaBeta,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("a", "alpha", {{p.at("p"), "alpha"}, {-1, "beta"}});
                                         b.set("a", "beta", {{1, "alpha"}, {p.at("p"), "beta"}});
                                     }),
                              {"p"}, {nonnegative("p")}, samples_p({"0", "1", "5/2"})));
    out.push_back(family("trivial:L1_(3,1)", kABC, kAlpha, [](Builder& b, const ParamMap&) {
        b.set("b", "c", {{1, "a"}});
        b.set("b", "alpha", {{1, "alpha"}});
    }));
    out.push_back(corrected(
        with_params(family("trivial:L2_(3,1)", kABC, kAlpha,
                           [](Builder& b, const ParamMap& p) {
                               b.set("a", "c", {{1, "a"}});
                               b.set("b", "c", {{1, "a"}, {1, "b"}});
                               b.set("c", "alpha", {{p.at("q"), "alpha"}});
                           }),
                    {"p", "q"}, {nonzero("p"), nonzero("q")},
                    {params({{"p", "1"}, {"q", "1/2"}}), params({{"p", "1"}, {"q", "1"}}),
                     params({{"p", "1"}, {"q", "-3"}})}),
        "the printed constraint pq != 0 names p, which no bracket uses; p is accepted and ignored"));
    out.push_back(with_params(family("trivial:L3_(3,1)", kABC, kAlpha,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("a", "c", {{p.at("p"), "a"}, {-1, "b"}});
                                         b.set("b", "c", {{1, "a"}, {p.at("p"), "b"}});
                                         b.set("c", "alpha", {{p.at("q"), "alpha"}});
                                     }),
                              {"p", "q"}, {nonzero("q")},
                              {params({{"p", "0"}, {"q", "1"}}), params({{"p", "1/2"}, {"q", "1"}}),
                               params({{"p", "-1"}, {"q", "2"}})}));
    out.push_back(family("trivial:L1_(2,2)", kAB, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("a", "alpha", {{1, "alpha"}});
        b.set("a", "beta", {{1, "beta"}});
        b.set("b", "beta", {{1, "alpha"}});
    }));
    out.push_back(family("trivial:L2_(2,2)", kAB, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("a", "alpha", {{1, "alpha"}});
        b.set("a", "beta", {{1, "beta"}});
        b.set("b", "alpha", {{-1, "beta"}});
        b.set("b", "beta", {{1, "alpha"}});
    }));
    out.push_back(with_params(
        family("trivial:L3_(2,2)", kAB, kAlphaBeta,
               [](Builder& b, const ParamMap& p) {
                   b.set("a", "b", {{1, "b"}});
                   b.set("a", "alpha", {{p.at("p"), "alpha"}});
                   b.set("a", "beta", {{p.at("q"), "beta"}});
               }),
        {"p", "q"},
        {nonzero("p"), nonzero("q"), {"p >= q", [](const ParamMap& p) { return p.at("p") >= p.at("q"); }}},
        {params({{"p", "1"}, {"q", "1"}}), params({{"p", "1"}, {"q", "1/2"}}), params({{"p", "2"}, {"q", "-1"}})}));
    out.push_back(with_params(family("trivial:L4_(2,2)", kAB, kAlphaBeta,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("a", "b", {{1, "b"}});
                                         b.set("a", "alpha", {{p.at("p"), "alpha"}});
                                         b.set("a", "beta", {{1, "alpha"}, {p.at("p"), "beta"}});
                                     }),
                              {"p"}, {nonzero("p")}, samples_p({"1/2", "1", "-1"})));
    out.push_back(with_params(family("trivial:L5_(2,2)", kAB, kAlphaBeta,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("a", "b", {{1, "b"}});
                                         b.set("a", "alpha", {{p.at("p"), "alpha"}, {-p.at("q"), "beta"}});
                                         b.set("a", "beta", {{p.at("q"), "alpha"}, {p.at("p"), "beta"}});
                                     }),
                              {"p", "q"}, {positive("q")},
                              {params({{"p", "0"}, {"q", "1"}}), params({{"p", "1/2"}, {"q", "1"}}),
                               params({{"p", "-1"}, {"q", "2"}})}));
    out.push_back(with_params(family("trivial:L6_(2,2)", kAB, kAlphaBeta,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("a", "b", {{1, "b"}});
                                         b.set("a", "alpha", {{p.at("p") + 1, "alpha"}});
                                         b.set("a", "beta", {{p.at("p"), "beta"}});
                                         b.set("b", "beta", {{1, "alpha"}});
                                     }),
                              {"p"}, {}, samples_p({"0", "1/2", "-1"})));
    out.push_back(with_params(family("trivial:L1_(1,3)", kA, kAlphaBetaGamma,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("a", "alpha", {{1, "alpha"}});
                                         b.set("a", "beta", {{p.at("p"), "beta"}});
                                         b.set("a", "gamma", {{p.at("q"), "gamma"}});
                                     }),
                              {"p", "q"}, {},
                              {params({{"p", "1"}, {"q", "1"}}), params({{"p", "1/2"}, {"q", "-1"}}),
                               params({{"p", "0"}, {"q", "2"}})}));
    out.push_back(family("trivial:L2_(1,3)", kA, kAlphaBetaGamma, [](Builder& b, const ParamMap&) {
        b.set("a", "alpha", {{1, "alpha"}});
        b.set("a", "gamma", {{1, "beta"}});
    }));
    out.push_back(corrected(
        with_params(family("trivial:L3_(1,3)", kA, kAlphaBetaGamma,
                           [](Builder& b, const ParamMap& p) {
                               b.set("a", "alpha", {{p.at("p"), "alpha"}});
                               b.set("a", "beta", {{1, "beta"}});
                               b.set("a", "gamma", {{1, "beta"}, {1, "gamma"}});
                           }),
                    {"p"}, {nonzero("p")}, samples_p({"1/2", "1", "-2"})),
        "[a,gamma] = b + gamma printed; b is not a basis element, read as beta + gamma"));
    out.push_back(with_params(family("trivial:L4_(1,3)", kA, kAlphaBetaGamma,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("a", "alpha", {{p.at("p"), "alpha"}});
                                         b.set("a", "beta", {{p.at("q"), "beta"}, {-1, "gamma"}});
                                         b.set("a", "gamma", {{1, "beta"}, {p.at("q"), "gamma"}});
                                     }),
                              {"p", "q"}, {nonnegative("q"), nonzero("p")},
                              {params({{"p", "1"}, {"q", "0"}}), params({{"p", "1/2"}, {"q", "1"}}),
                               params({{"p", "-2"}, {"q", "1/2"}})}));
    out.push_back(family("trivial:L5_(1,3)", kA, kAlphaBetaGamma, [](Builder& b, const ParamMap&) {
        b.set("a", "beta", {{1, "alpha"}});
        b.set("a", "gamma", {{1, "beta"}});
    }));
    out.push_back(family("trivial:L6_(1,3)", kA, kAlphaBetaGamma, [](Builder& b, const ParamMap&) {
        b.set("a", "alpha", {{1, "alpha"}});
        b.set("a", "beta", {{1, "alpha"}, {1, "beta"}});
        b.set("a", "gamma", {{1, "beta"}, {1, "gamma"}});
    }));
    return out;
}

std::vector<Family> nontrivial_families() {
    const Scalar half(1, 2);
    std::vector<Family> out;
    out.push_back(family("nontrivial:L_(1,1)", kA, kAlpha,
                         [](Builder& b, const ParamMap&) { b.set("alpha", "alpha", {{1, "a"}}); }));
    out.push_back(family("nontrivial:L_(2,1)", kAB, kAlpha, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{half, "alpha"}});
        b.set("alpha", "alpha", {{1, "b"}});
    }));
    out.push_back(family("nontrivial:L1_(1,2)", kA, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("alpha", "alpha", {{1, "a"}});
        b.set("beta", "beta", {{1, "a"}});
    }));
    out.push_back(family("nontrivial:L2_(1,2)", kA, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("alpha", "alpha", {{1, "a"}});
        b.set("beta", "beta", {{-1, "a"}});
    }));
    out.push_back(family("nontrivial:L1_(3,1)", kABC, kAlpha, [](Builder& b, const ParamMap&) {
        b.set("b", "c", {{1, "a"}});
        b.set("alpha", "alpha", {{1, "a"}});
    }));
    out.push_back(with_params(family("nontrivial:L2_(3,1)", kABC, kAlpha,
                                     [half](Builder& b, const ParamMap& p) {
                                         b.set("a", "b", {{1, "b"}});
                                         b.set("a", "c", {{p.at("p"), "c"}});
                                         b.set("a", "alpha", {{half, "alpha"}});
                                         b.set("alpha", "alpha", {{1, "b"}});
                                     }),
                              {"p"}, {nonzero("p")}, samples_p({"1/2", "1", "-2"})));
    out.push_back(family("nontrivial:L3_(3,1)", kABC, kAlpha, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "c", {{1, "b"}, {1, "c"}});
        b.set("a", "alpha", {{half, "alpha"}});
        b.set("alpha", "alpha", {{1, "b"}});
    }));
    out.push_back(family("nontrivial:L4_(3,1)", kABC, kAlpha, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "c", {{-1, "b"}, {1, "c"}});
        b.set("a", "alpha", {{half, "alpha"}});
        b.set("alpha", "alpha", {{1, "b"}});
    }));
    out.push_back(family("nontrivial:L1_(2,2)", kAB, kAlphaBeta, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{half, "alpha"}});
        b.set("a", "beta", {{half, "beta"}});
        b.set("alpha", "alpha", {{1, "b"}});
        b.set("beta", "beta", {{1, "b"}});
    }));
    out.push_back(family("nontrivial:L2_(2,2)", kAB, kAlphaBeta, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{half, "alpha"}});
        b.set("a", "beta", {{half, "beta"}});
        b.set("alpha", "alpha", {{1, "b"}});
        b.set("beta", "beta", {{-1, "b"}});
    }));
    out.push_back(family("nontrivial:L3_(2,2)", kAB, kAlphaBeta, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{half, "alpha"}});
        b.set("a", "beta", {{half, "beta"}});
        b.set("alpha", "alpha", {{1, "b"}});
    }));
    out.push_back(with_params(
        family("nontrivial:L4_(2,2)", kAB, kAlphaBeta,
               [](Builder& b, const ParamMap& p) {
                   b.set("a", "b", {{1, "b"}});
                   b.set("a", "alpha", {{p.at("p"), "alpha"}});
                   b.set("a", "beta", {{1 - p.at("p"), "beta"}});
                   b.set("alpha", "beta", {{1, "b"}});
               }),
        {"p"}, {{"p <= 1/2", [](const ParamMap& p) { return p.at("p") <= Scalar(1, 2); }}},
        samples_p({"1/2", "0", "-1"})));
    out.push_back(family("nontrivial:L5_(2,2)", kAB, kAlphaBeta, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{half, "alpha"}});
        b.set("a", "beta", {{1, "alpha"}, {half, "beta"}});
        b.set("beta", "beta", {{1, "b"}});
    }));
    out.push_back(with_params(family("nontrivial:L6_(2,2)", kAB, kAlphaBeta,
                                     [half](Builder& b, const ParamMap& p) {
                                         b.set("a", "b", {{1, "b"}});
                                         b.set("a", "alpha", {{half, "alpha"}, {-p.at("p"), "beta"}});
                                         b.set("a", "beta", {{p.at("p"), "alpha"}, {half, "beta"}});
                                         b.set("alpha", "alpha", {{1, "b"}});
                                         b.set("beta", "beta", {{1, "b"}});
                                     }),
                              {"p"}, {positive("p")}, samples_p({"1/2", "1", "3"})));
    out.push_back(family("nontrivial:L7_(2,2)", kAB, kAlphaBeta, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{1, "alpha"}});
        b.set("b", "beta", {{1, "alpha"}});
        b.set("beta", "beta", {{1, "a"}});
        b.set("alpha", "beta", {{-half, "b"}});
    }));
    out.push_back(family("nontrivial:L8_(2,2)", kAB, kAlphaBeta, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{1, "alpha"}});
        b.set("b", "beta", {{1, "alpha"}});
        b.set("beta", "beta", {{-1, "a"}});
        b.set("alpha", "beta", {{half, "b"}});
    }));
    out.push_back(family("nontrivial:L9_(2,2)", kAB, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("alpha", "alpha", {{1, "a"}});
        b.set("beta", "beta", {{1, "b"}});
    }));
    out.push_back(family("nontrivial:L10_(2,2)", kAB, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("alpha", "alpha", {{1, "a"}});
        b.set("beta", "beta", {{1, "b"}});
        b.set("alpha", "beta", {{1, "a"}});
    }));
    out.push_back(with_params(family("nontrivial:L11_(2,2)", kAB, kAlphaBeta,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("alpha", "alpha", {{1, "a"}});
                                         b.set("beta", "beta", {{1, "b"}});
                                         b.set("alpha", "beta", {{p.at("p"), "a"}, {p.at("p"), "b"}});
                                     }),
                              {"p"}, {positive("p")}, samples_p({"1/2", "1", "2"})));
    out.push_back(with_params(family("nontrivial:L12_(2,2)", kAB, kAlphaBeta,
                                     [](Builder& b, const ParamMap& p) {
                                         b.set("alpha", "alpha", {{1, "a"}});
                                         b.set("beta", "beta", {{1, "b"}});
                                         b.set("alpha", "beta", {{p.at("p"), "a"}, {-p.at("p"), "b"}});
                                     }),
                              {"p"}, {positive("p")}, samples_p({"1/2", "1", "2"})));
    out.push_back(family("nontrivial:L13_(2,2)", kAB, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{1, "alpha"}});
        b.set("alpha", "beta", {{1, "b"}});
    }));
    out.push_back(family("nontrivial:L14_(2,2)", kAB, kAlphaBeta, [half](Builder& b, const ParamMap&) {
        b.set("a", "b", {{1, "b"}});
        b.set("a", "alpha", {{half, "alpha"}});
        b.set("alpha", "alpha", {{1, "b"}});
    }));
    out.push_back(corrected(family("nontrivial:L15_(2,2)", kAB, kAlphaBeta,
                                   [](Builder& b, const ParamMap&) {
                                       b.set("a", "alpha", {{1, "alpha"}});
                                       b.set("a", "beta", {{-1, "beta"}});
                                       b.set("alpha", "beta", {{1, "b"}});
                                   }),
                            "[a,beta] is printed twice (= -beta and = b); the second is read as [alpha,beta] = b"));
    out.push_back(family("nontrivial:L16_(2,2)", kAB, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("a", "beta", {{1, "alpha"}});
        b.set("beta", "beta", {{1, "b"}});
    }));
    out.push_back(family("nontrivial:L17_(2,2)", kAB, kAlphaBeta, [](Builder& b, const ParamMap&) {
        b.set("a", "alpha", {{-1, "beta"}});
        b.set("a", "beta", {{1, "alpha"}});
        b.set("alpha", "alpha", {{1, "b"}});
        b.set("beta", "beta", {{1, "b"}});
    }));
    out.push_back(family("nontrivial:L1_(1,3)", kA, kAlphaBetaGamma, [](Builder& b, const ParamMap&) {
        b.set("alpha", "alpha", {{1, "a"}});
        b.set("beta", "beta", {{1, "a"}});
        b.set("gamma", "gamma", {{1, "a"}});
    }));
    out.push_back(family("nontrivial:L2_(1,3)", kA, kAlphaBetaGamma, [](Builder& b, const ParamMap&) {
        b.set("alpha", "alpha", {{1, "a"}});
        b.set("beta", "beta", {{1, "a"}});
        b.set("gamma", "gamma", {{-1, "a"}});
    }));
    return out;
}

const std::vector<Family>& families() {
    static const std::vector<Family> all = [] {
        std::vector<Family> out = trivial_families();
        for (auto& f : nontrivial_families()) out.push_back(std::move(f));
        return out;
    }();
    return all;
}

// "trivial:L^4_(1,2)" and "trivial:L4_(1,2)" name the same family.
std::string normalize_label(std::string_view id) {
    std::string s(id);
    const auto caret = s.find("L^");
    if (caret != std::string::npos) s.erase(caret + 1, 1);
    return s;
}

const Family& find_family(std::string_view id) {
    const std::string key = normalize_label(id);
    for (const auto& f : families()) {
        if (f.info.id == key) return f;
    }
    throw UnknownIdError(std::string(id));
}

std::string with_params_name(const std::string& id, const ParamMap& params) {
    return params.empty() ? id : id + "[" + format_params(params) + "]";
}

}  // namespace

std::string format_params(const ParamMap& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ",";
        out += k + "=" + to_string(v);
    }
    return out;
}

SuperAlgebra heisenberg_special(std::size_t m, std::size_t n) {
    if (m + n == 0) throw ParameterError("heisenberg_special needs m + n >= 1");
    std::vector<std::string> even, odd;
    for (std::size_t i = 1; i <= 2 * m; ++i) even.push_back("x" + std::to_string(i));
    even.push_back("z");
    for (std::size_t j = 1; j <= n; ++j) odd.push_back("y" + std::to_string(j));
    Builder b("heisenberg_special(" + std::to_string(m) + "," + std::to_string(n) + ")", even, odd);
    for (std::size_t i = 1; i <= m; ++i) b.set("x" + std::to_string(i), "x" + std::to_string(m + i), {{1, "z"}});
    for (std::size_t j = 1; j <= n; ++j) b.set("y" + std::to_string(j), "y" + std::to_string(j), {{1, "z"}});
    return b.take();
}

SuperAlgebra heisenberg_odd(std::size_t m) {
    if (m == 0) throw ParameterError("heisenberg_odd needs m >= 1");
    std::vector<std::string> even, odd;
    for (std::size_t i = 1; i <= m; ++i) even.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= m; ++i) odd.push_back("y" + std::to_string(i));
    odd.push_back("z");
    Builder b("heisenberg_odd(" + std::to_string(m) + ")", even, odd);
    for (std::size_t j = 1; j <= m; ++j) b.set("x" + std::to_string(j), "y" + std::to_string(j), {{1, "z"}});
    return b.take();
}

SuperAlgebra abelian(std::size_t m, std::size_t n) {
    std::vector<std::string> even, odd;
    for (std::size_t i = 1; i <= m; ++i) even.push_back("e" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) odd.push_back("f" + std::to_string(i));
    return SuperAlgebra("abelian(" + std::to_string(m) + "," + std::to_string(n) + ")", even, odd);
}

SuperAlgebra filiform5() {
    Builder b("filiform5", {"a", "b", "c", "d", "e"}, {});
    b.set("a", "b", {{1, "c"}});
    b.set("a", "c", {{1, "d"}});
    b.set("a", "d", {{1, "e"}});
    b.set("b", "c", {{1, "e"}});
    return b.take();
}

const std::vector<BackhouseFamily>& backhouse_families() {
    static const std::vector<BackhouseFamily> infos = [] {
        std::vector<BackhouseFamily> out;
        for (const auto& f : families()) out.push_back(f.info);
        return out;
    }();
    return infos;
}

SuperAlgebra backhouse(std::string_view id, const ParamMap& params) {
    const Family& f = find_family(id);
    for (const auto& [k, v] : params) {
        if (std::find(f.info.param_names.begin(), f.info.param_names.end(), k) == f.info.param_names.end()) {
            throw ParameterError(f.info.id + " has no parameter " + k);
        }
    }
    for (const auto& k : f.info.param_names) {
        if (!params.count(k)) throw ParameterError(f.info.id + " needs parameter " + k);
    }
    for (const auto& c : f.constraints) {
        if (!c.holds(params)) {
            throw ParameterError("parameter constraint violated for " + f.info.id + ": " + c.text + " (got " +
                                 format_params(params) + ")");
        }
    }
    Builder b(with_params_name(f.info.id, params), f.even, f.odd);
    f.brackets(b, params);
    return b.take();
}

CatalogEntry backhouse_entry(std::string_view id, const ParamMap& params) {
    const Family& f = find_family(id);
    CatalogEntry e;
    e.id = f.info.id;
    e.params = params;
    e.algebra = backhouse(id, params);
    e.expected = {true, f.info.trivial ? "Backhouse trivial, dimension <= 4" : "Backhouse nontrivial, dimension <= 4"};
    e.corrections = f.info.corrections;
    return e;
}

namespace {

CatalogEntry plain_entry(SuperAlgebra a, Expectation expected) {
    CatalogEntry e;
    e.id = a.name();
    e.algebra = std::move(a);
    e.expected = std::move(expected);
    return e;
}

CatalogEntry filiform_entry() {
    CatalogEntry e = plain_entry(filiform5(), {false, "5-dimensional filiform Lie algebra of class 4"});
    e.aliases = {"thm58"};
    return e;
}

std::size_t parse_count(const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); }

}  // namespace

std::vector<CatalogEntry> catalog_list() {
    std::vector<CatalogEntry> out;
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{0, 0}, {1, 1}, {2, 3}}) {
        out.push_back(plain_entry(abelian(m, n), {true, "abelian"}));
    }
    for (std::size_t m = 0; m <= 2; ++m) {
        for (std::size_t n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            out.push_back(plain_entry(heisenberg_special(m, n), {true, "special Heisenberg"}));
        }
    }
    for (std::size_t m = 1; m <= 3; ++m) {
        out.push_back(plain_entry(heisenberg_odd(m), {true, "Heisenberg with odd center"}));
    }
    out.push_back(filiform_entry());
    for (const auto& f : families()) out.push_back(backhouse_entry(f.info.id, f.info.samples.front()));
    return out;
}

CatalogEntry resolve(std::string_view spec_view) {
    const std::string spec(spec_view);
    static const std::regex two_counts(R"((abelian|heisenberg_special)\((\d+),(\d+)\))");
    static const std::regex one_count(R"(heisenberg_odd\((\d+)\))");
    static const std::regex label(R"(((?:non)?trivial:L\^?\d*_\(\d,\d\))((?:,[A-Za-z]\w*=[^,()]+)*))");
    std::smatch m;
    try {
        if (std::regex_match(spec, m, two_counts)) {
            const std::size_t a = parse_count(m[2]), b = parse_count(m[3]);
            if (m[1] == "abelian") return plain_entry(abelian(a, b), {true, "abelian"});
            return plain_entry(heisenberg_special(a, b), {true, "special Heisenberg"});
        }
        if (std::regex_match(spec, m, one_count)) {
            return plain_entry(heisenberg_odd(parse_count(m[1])), {true, "Heisenberg with odd center"});
        }
    } catch (const std::out_of_range&) {
        throw UnknownIdError(spec);
    }
    if (spec == "filiform5" || spec == "thm58") return filiform_entry();

    std::string inner = spec;
    if (inner.rfind("backhouse(", 0) == 0 && inner.back() == ')') inner = inner.substr(10, inner.size() - 11);
    if (!std::regex_match(inner, m, label)) throw UnknownIdError(spec);
    const Family& f = find_family(m[1].str());
    if (m[2].length() == 0) return backhouse_entry(f.info.id, f.info.samples.front());
    ParamMap params;
    static const std::regex assignment(R"(,([A-Za-z]\w*)=([^,()]+))");
    const std::string tail = m[2];
    for (auto it = std::sregex_iterator(tail.begin(), tail.end(), assignment); it != std::sregex_iterator(); ++it) {
        try {
            params[(*it)[1]] = parse_rational((*it)[2].str());
        } catch (const std::invalid_argument& e) {
            throw ParameterError("bad value for " + (*it)[1].str() + ": " + e.what());
        }
    }
    return backhouse_entry(f.info.id, params);
}

}  // namespace superwedge
