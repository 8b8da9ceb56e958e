#pragma once

#include <cstdint>
#include <optional>

#include "tracecode/field.hpp"
#include "tracecode/linearized.hpp"
#include "tracecode/trace_code.hpp"

namespace tracecode {

/// Invariants of one smooth projective curve y^2 + y = x R(x) over F_q, or of
/// a fibre product of such covers.
struct CurveSummary {
    std::int64_t genus = 0;
    std::int64_t trace_frobenius = 0; // q + 1 - n_points
    std::int64_t n_points = 0;
    std::int64_t serre_bound = 0; // q + 1 + genus * floor(2 sqrt q)
    bool attains_serre = false;
    bool attains_hasse_weil = false; // n = q + 1 + 2 g sqrt(q), even m only
};

std::int64_t isqrt64(std::int64_t v);
std::int64_t serre_bound(std::int64_t genus, const Field& field);

/// Assembles a summary from genus and point count, including the bound
/// checks (a point count above the Serre bound is a hard error).
CurveSummary make_curve_summary(std::int64_t genus, std::int64_t n_points, const Field& field);

/// Curve of a single nonzero R: genus 2^(h'-1) where 2^h' is the effective
/// degree (genus 0 when R has degree 1), and n = 2 N(Q_R) + 1 points.
CurveSummary curve_of(const LinearizedPoly& r);

/// #{(x,y) : y^2 + y = x R(x)} by counting value collisions of y^2 + y
/// against x R(x); never consults the trace identity. Guarded to q <= 2^16.
std::int64_t affine_point_count_oracle(const LinearizedPoly& r);

/// Fibre product over the covers of a polynomial-level subcode: genus and
/// Frobenius trace add over the 2^r - 1 nonzero span members; the resulting
/// point count is cross-checked against the support formula
/// n = (q - w(D)) 2^r + 1. Every span member must have effective degree >= 2.
CurveSummary fibre_product(const PolySubcode& d);

/// The tabulated construction families.
enum class Family { odd1, odd2, odd3, even1, even2 };

const char* family_name(Family f); // "I", "II", "III"
/// Family for the (m, h) at hand; throws when the pair is not tabulated.
Family family_for(const Field& field, int h);
int family_h(Family f, const Field& field);
/// Largest r the family supports; odd3 depends on whether an F_8 tuple is
/// available (3 | m).
int family_default_max_r(Family f, const Field& field);

/// Closed-form (genus, points) row for a construction family. The caller may
/// pass the max_r of an explicitly built system; otherwise the family default
/// bounds r.
CurveSummary table_row(Family f, int r, const Field& field, std::optional<int> max_r = {});

} // namespace tracecode
