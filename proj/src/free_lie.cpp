#include "superwedge/free_lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace superwedge {

namespace {

// Element of the free associative superalgebra.
using Poly = std::map<Word, Scalar>;

Poly letter_poly(std::uint8_t a) { return Poly{{Word{a}, Scalar(1)}}; }

void accumulate(Poly& acc, const Word& w, const Scalar& c) {
    auto [it, inserted] = acc.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) acc.erase(it);
    }
}

// [A, B] = AB - (-1)^{|A||B|} BA for homogeneous A, B.
Poly supercommutator(const Poly& a, Parity pa, const Poly& b, Parity pb) {
    Poly out;
    const int s = koszul_sign(pa, pb);
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word ab = wa;
            ab.insert(ab.end(), wb.begin(), wb.end());
            accumulate(out, ab, ca * cb);
            Word ba = wb;
            ba.insert(ba.end(), wa.begin(), wa.end());
            accumulate(out, ba, Scalar(-s) * ca * cb);
        }
    }
    return out;
}

Parity word_parity(const Word& w, std::size_t p) {
    std::size_t odd = 0;
    for (auto a : w) odd += a >= p ? 1 : 0;
    return odd % 2 ? Parity::kOdd : Parity::kEven;
}

struct Element {
    Word word;
    std::size_t degree;
    Parity parity;
    Poly poly;
    std::optional<std::pair<std::size_t, std::size_t>> factors;  // indices into the element list
    std::string name;
};

// Solves coefficients of a degree-d element in the basis of that degree.
struct DegreeSolver {
    std::vector<std::size_t> members;  // element indices
    std::vector<Word> pivot_words;
    Matrix inverse;                    // of the pivot submatrix
};

}  // namespace

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end())) {
            return false;
        }
    }
    return true;
}

std::vector<Word> lyndon_words(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    if (k == 0 || n == 0) return out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        out.emplace_back(w.begin(), w.end());
        const std::size_t m = w.size();
        while (w.size() < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == static_cast<int>(k) - 1) w.pop_back();
    }
    return out;
}

FreeNilpotentSuper free_nilpotent_super(std::size_t p, std::size_t q, std::size_t c,
                                        std::vector<std::string> letter_names) {
    if (p + q == 0) throw std::invalid_argument("free nilpotent superalgebra needs at least one generator");
    if (c < 1 || c > kMaxFreeClass) {
        throw std::invalid_argument("class " + std::to_string(c) + " outside the supported range 1.." +
                                    std::to_string(kMaxFreeClass));
    }
    const std::size_t k = p + q;
    if (letter_names.empty()) {
        for (std::size_t i = 0; i < p; ++i) letter_names.push_back("x" + std::to_string(i + 1));
        for (std::size_t i = 0; i < q; ++i) letter_names.push_back("y" + std::to_string(i + 1));
    }
    if (letter_names.size() != k) throw std::invalid_argument("letter name count mismatch");

    std::vector<Element> elems;
    std::map<Word, std::size_t> by_word;
    std::vector<Word> lyndon = lyndon_words(k, c);
    // Factors are shorter than the word, so build by length.
    std::stable_sort(lyndon.begin(), lyndon.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    for (const Word& w : lyndon) {
        Element e;
        e.word = w;
        e.degree = w.size();
        e.parity = word_parity(w, p);
        if (w.size() == 1) {
            e.poly = letter_poly(w[0]);
            e.name = letter_names[w[0]];
        } else {
            // Standard factorization: v is the longest proper Lyndon suffix.
            std::size_t split = 1;
            while (!is_lyndon(Word(w.begin() + static_cast<std::ptrdiff_t>(split), w.end()))) ++split;
            const std::size_t u = by_word.at(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)));
            const std::size_t v = by_word.at(Word(w.begin() + static_cast<std::ptrdiff_t>(split), w.end()));
            e.poly = supercommutator(elems[u].poly, elems[u].parity, elems[v].poly, elems[v].parity);
            e.factors = std::make_pair(u, v);
            e.name = "[" + elems[u].name + "," + elems[v].name + "]";
        }
        by_word[w] = elems.size();
        elems.push_back(std::move(e));
    }
    const std::size_t lyndon_count = elems.size();
    for (std::size_t u = 0; u < lyndon_count; ++u) {
        if (elems[u].parity != Parity::kOdd || 2 * elems[u].degree > c) continue;
        Element e;
        e.word = elems[u].word;
        e.word.insert(e.word.end(), elems[u].word.begin(), elems[u].word.end());
        e.degree = 2 * elems[u].degree;
        e.parity = Parity::kEven;
        e.poly = supercommutator(elems[u].poly, Parity::kOdd, elems[u].poly, Parity::kOdd);
        e.factors = std::make_pair(u, u);
        e.name = "[" + elems[u].name + "," + elems[u].name + "]";
        elems.push_back(std::move(e));
    }

    // Basis order: parity, then degree, then word.
    std::vector<std::size_t> order(elems.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = elems[a];
        const auto& y = elems[b];
        if (x.parity != y.parity) return x.parity == Parity::kEven;
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.word < y.word;
    });
    std::vector<std::size_t> position(elems.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

    std::vector<std::string> even_names, odd_names;
    for (auto idx : order) (elems[idx].parity == Parity::kEven ? even_names : odd_names).push_back(elems[idx].name);

    FreeNilpotentSuper f;
    f.even_generators = p;
    f.odd_generators = q;
    f.nilpotency_class = c;
    f.algebra = SuperAlgebra("free(" + std::to_string(p) + "|" + std::to_string(q) + ";" + std::to_string(c) + ")",
                             even_names, odd_names);
    const std::size_t n = elems.size();
    f.words.resize(n);
    f.degree.resize(n);
    f.factors.resize(n);
    f.generator_index.resize(k);
    for (std::size_t i = 0; i < n; ++i) {
        const Element& e = elems[order[i]];
        f.words[i] = e.word;
        f.degree[i] = e.degree;
        if (e.factors) f.factors[i] = std::make_pair(position[e.factors->first], position[e.factors->second]);
        if (e.degree == 1) f.generator_index[e.word[0]] = i;
    }

    std::vector<DegreeSolver> solvers(c + 1);
    for (std::size_t d = 1; d <= c; ++d) {
        DegreeSolver& s = solvers[d];
        std::map<Word, std::size_t> columns;
        for (std::size_t i = 0; i < n; ++i) {
            if (elems[order[i]].degree != d) continue;
            s.members.push_back(i);
            for (const auto& term : elems[order[i]].poly) columns.emplace(term.first, 0);
        }
        if (s.members.empty()) continue;
        std::vector<Word> column_words;
        for (auto& [w, idx] : columns) {
            idx = column_words.size();
            column_words.push_back(w);
        }
        Matrix b(s.members.size(), column_words.size());
        for (std::size_t r = 0; r < s.members.size(); ++r) {
            for (const auto& [w, coef] : elems[order[s.members[r]]].poly) b(r, columns[w]) = coef;
        }
        RrefResult rr = rref(b);
        if (rr.rank != s.members.size()) throw std::logic_error("free Lie basis is linearly dependent");
        // The rows of b restricted to the pivot columns form an invertible S.
        Matrix st(s.members.size(), s.members.size() * 2);
        for (std::size_t r = 0; r < s.members.size(); ++r) {
            for (std::size_t t = 0; t < s.members.size(); ++t) st(r, t) = b(r, rr.pivots[t]);
            st(r, s.members.size() + r) = 1;
        }
        RrefResult inv = rref(st);
        s.inverse = Matrix(s.members.size(), s.members.size());
        for (std::size_t r = 0; r < s.members.size(); ++r)
            for (std::size_t t = 0; t < s.members.size(); ++t) s.inverse(r, t) = inv.reduced(r, s.members.size() + t);
        for (auto pc : rr.pivots) s.pivot_words.push_back(column_words[pc]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Element& a = elems[order[i]];
            const Element& b = elems[order[j]];
            const std::size_t d = a.degree + b.degree;
            if (d > c) continue;
            const Poly x = supercommutator(a.poly, a.parity, b.poly, b.parity);
            if (x.empty()) continue;
            const DegreeSolver& s = solvers[d];
            // Coefficients c with c·S = x restricted to pivot words.
            Vector rhs(s.members.size(), Scalar(0));
            for (std::size_t t = 0; t < s.pivot_words.size(); ++t) {
                auto it = x.find(s.pivot_words[t]);
                if (it != x.end()) rhs[t] = it->second;
            }
            Vector coef(s.members.size(), Scalar(0));
            for (std::size_t t = 0; t < s.members.size(); ++t) {
                if (sgn(rhs[t]) == 0) continue;
                for (std::size_t r = 0; r < s.members.size(); ++r) coef[r] += rhs[t] * s.inverse(t, r);
            }
            Poly check;
            for (std::size_t r = 0; r < s.members.size(); ++r) {
                if (sgn(coef[r]) == 0) continue;
                for (const auto& [w, cw] : elems[order[s.members[r]]].poly) accumulate(check, w, coef[r] * cw);
            }
            if (check != x) throw std::logic_error("bracket escapes the free Lie basis");
            Vector v(n, Scalar(0));
            for (std::size_t r = 0; r < s.members.size(); ++r) v[s.members[r]] = coef[r];
            f.algebra.set_structure(i, j, std::move(v));
        }
    }
    return f;
}

}  // namespace superwedge
