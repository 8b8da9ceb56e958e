#pragma once

#include <string>
#include <vector>

#include "tracecode/curves.hpp"
#include "tracecode/field.hpp"
#include "tracecode/trace_code.hpp"

namespace tracecode {

/// A fibre product assembled from words of different construction cases.
/// parts[i] describes the span member with coordinate mask i+1.
struct ComboScenario {
    std::string name;
    int h_top = 0; // the R_h the span lives in
    std::vector<std::vector<std::string>> part_coeffs; // hex per span member
    std::vector<std::uint64_t> part_weights;
    std::vector<CurveSummary> parts;
    CurveSummary product;
};

/// m = 7: split a minimum-weight word of the h=2 code into its two pair
/// words, which live in the h=3 code, and take their fibre product
/// (genus 10 with 289 points).
ComboScenario combo_pair_split(const Field& field);

/// m = 7: same idea one level down; a minimum-weight word of the h=1 code
/// splits into a single-pair and a two-pair word of the h=3 code
/// (genus 9 with 241 points).
ComboScenario combo_triple_split(const Field& field);

/// m = 6: minimum-weight word of the h=2 code combined with a two-pair word
/// of the h=1 code (genus 5 with 129 points).
ComboScenario combo_mixed_even(const Field& field);

/// m = 6: span containing a nonzero polynomial with a vanishing word
/// (R = b x^8, b in F_8); the word image degenerates but the fibre product
/// identities still apply (genus 10 with 193 points).
ComboScenario combo_vanishing_word(const Field& field);

} // namespace tracecode
