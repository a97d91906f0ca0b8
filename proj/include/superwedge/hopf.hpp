#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "superwedge/free_lie.hpp"
#include "superwedge/saturation.hpp"
#include "superwedge/superalgebra.hpp"
#include "superwedge/wedge.hpp"

namespace superwedge {

class NotNilpotentError : public std::runtime_error {
public:
    explicit NotNilpotentError(const std::string& algebra_name)
        : std::runtime_error("not nilpotent: " + algebra_name + " (use the wedge route)") {}
};

enum class GeneratorChoice {
    kAllBasis,  // one free generator per basis element of L
    kMinimal,   // basis elements spanning L modulo L^2
};

// 0 -> R -> F -> L -> 0 with F free nilpotent of class c+1, c the class of L.
struct Presentation {
    FreeNilpotentSuper free;
    std::vector<std::size_t> generator_images;  // basis index in L of each free generator
    Matrix pi;                                  // dim L x dim F
    GradedSubspace relations;                   // R = ker pi
    GradedSubspace relations_commutator;        // [R, F]
};

Presentation presentation(const SuperAlgebra& l, GeneratorChoice choice = GeneratorChoice::kAllBasis);

// dim (R ∩ F^2) / [R, F]
std::size_t hopf_schur(const SuperAlgebra& l, GeneratorChoice choice = GeneratorChoice::kMinimal);

// B0 through F/[R,F]: M(L) is R̄ ∩ F̄^2 and M0 is spanned by the homogeneous
// components of the commutators [x,y] of F̄ that lie in R̄. Witness vectors are
// in the coordinates of F̄.
B0Report hopf_bogomolov(const SuperAlgebra& l, const SaturationConfig& cfg = {},
                        GeneratorChoice choice = GeneratorChoice::kMinimal);

// verify_witnesses for reports of hopf_bogomolov: rebuilds F/[R,F] with the
// same generator choice and re-checks every witness there.
bool verify_hopf_witnesses(const SuperAlgebra& l, const std::vector<M0Witness>& ws,
                           GeneratorChoice choice = GeneratorChoice::kMinimal);

}  // namespace superwedge
