#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superwedge/rational.hpp"
#include "superwedge/superalgebra.hpp"

namespace superwedge {

using ParamMap = std::map<std::string, Scalar>;

class UnknownIdError : public std::invalid_argument {
public:
    explicit UnknownIdError(const std::string& id) : std::invalid_argument("unknown catalog id: " + id) {}
};

// Raised for parameter values outside a family's admissible range. The message
// echoes the violated constraint.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Expectation {
    bool b0_trivial = true;
    std::string source;
};

struct CatalogEntry {
    std::string id;
    ParamMap params;
    SuperAlgebra algebra;
    Expectation expected;
    std::vector<std::string> aliases;
    // Changes made to the printed presentation so that it defines a Lie superalgebra.
    std::vector<std::string> corrections;
};

// Even x1..x2m, z with [x_i, x_{m+i}] = z; odd y1..yn with [y_j, y_j] = z.
SuperAlgebra heisenberg_special(std::size_t m, std::size_t n);
// Even x1..xm; odd y1..ym, z with [x_j, y_j] = z.
SuperAlgebra heisenberg_odd(std::size_t m);
// Even e1..em, odd f1..fn, all brackets zero.
SuperAlgebra abelian(std::size_t m, std::size_t n);
// Even a..e with [a,b] = c, [a,c] = d, [a,d] = [b,c] = e.
SuperAlgebra filiform5();

struct BackhouseFamily {
    std::string id;  // "trivial:L4_(1,2)", "nontrivial:L_(2,1)", ...
    bool trivial = true;
    std::vector<std::string> param_names;
    std::vector<std::string> constraints;  // printed form, e.g. "p >= 0"
    std::vector<ParamMap> samples;         // admissible values used by reproduce
    std::vector<std::string> corrections;
};

// All transcribed real Lie superalgebras of dimension at most 4 that are not
// Lie algebras, trivial ones first.
const std::vector<BackhouseFamily>& backhouse_families();

// Throws UnknownIdError or ParameterError. Missing parameters are an error
// unless the family has none.
SuperAlgebra backhouse(std::string_view id, const ParamMap& params);
CatalogEntry backhouse_entry(std::string_view id, const ParamMap& params);

// Stable order: abelian, special Heisenberg, odd-center Heisenberg, the
// filiform example, then every Backhouse family at its first sample.
std::vector<CatalogEntry> catalog_list();

// Accepted forms:
//   abelian(m,n)  heisenberg_special(m,n)  heisenberg_odd(m)
//   filiform5  thm58
//   backhouse(trivial:L4_(1,2),p=1)  trivial:L4_(1,2)  nontrivial:L^7_(2,2)
// A Backhouse id without parameters takes its first sample.
CatalogEntry resolve(std::string_view spec);

std::string format_params(const ParamMap& params);

}  // namespace superwedge
