#pragma once

#include <cstdint>
#include <vector>

#include "csbound/report.hpp"

namespace csbound {

// Full oracle suite: closed forms against quadrature, the published
// prior-information integrals, and Monte Carlo checks of the blind data
// information. One row per check.
std::vector<VerifyRow> run_verification(std::uint64_t seed);

bool all_passed(const std::vector<VerifyRow>& rows);

}  // namespace csbound
