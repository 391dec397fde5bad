#pragma once

#include <cstdint>

#include "freelie/report.hpp"

namespace freelie {

/// Per-multigrade injectivity of the symmetric PBW evaluation at desk scale,
/// plus a polarization round-trip on repeated-variable grades.
VerificationReport pbw_symmetric_suite(int generators, int max_degree);

/// Per-multigrade independence of the ordered basis products, with count
/// matching the words of the grade, plus basic-rearrangement round-trips on
/// seeded random polynomials.
VerificationReport pbw_basic_suite(int generators, int max_degree, std::uint64_t seed = 1);

/// Per-multigrade embedding rank (bracket span = primitive count) and the
/// Z-form witness: every bracket monomial has integral coordinates over the
/// primitive-word basis.
VerificationReport magnus_representability_suite(int generators, int max_degree);

}  // namespace freelie
