#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superwedge/superalgebra.hpp"
#include "superwedge/wedge.hpp"

namespace superwedge {

// Malformed input. line and column are 1-based; 0 when the problem is not
// tied to a position (e.g. an undeclared symbol).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::size_t line;
    std::size_t column;
};

// AlgebraFile:
//   {"brackets": [{"left": "x1", "right": "x2", "value": [["1", "z"]]}, ...],
//    "even_basis": [...], "name": "...", "odd_basis": [...]}
// Omitted brackets are zero. [y,x] may be given instead of [x,y]; giving both
// is accepted only when they agree under super-skew-symmetry.
SuperAlgebra parse_algebra(std::string_view text);
SuperAlgebra load_algebra(const std::string& path);
// Canonical form: sorted keys, one entry per basis pair i <= j with a nonzero
// bracket, coefficients in lowest terms. export -> parse -> export is the identity.
std::string algebra_json(const SuperAlgebra& a);

std::uint64_t fnv1a64(std::string_view bytes);
// "fnv1a64:" followed by 16 hex digits of the canonical AlgebraFile.
std::string algebra_hash(const SuperAlgebra& a);

const char* tool_version();

std::string status_string(const B0Report& r);

struct ReportFile {
    std::string tool_version;
    std::string route;  // wedge, hopf or both
    SuperAlgebra algebra;
    std::optional<B0Report> wedge;
    std::optional<B0Report> hopf;  // witnesses live in F/[R,F]
};

std::string report_json(const ReportFile& r);
ReportFile parse_report(std::string_view text);

// Re-runs the witness checks of every route present against a freshly built
// exterior square (or free presentation) of the embedded algebra, recomputes
// the exact dimensions, and checks that the witness images span the recorded
// M0 dimension.
bool verify_report(const ReportFile& r);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace superwedge
