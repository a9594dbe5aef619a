#pragma once

#include "wfk/fock/operators.hpp"
#include "wfk/report.hpp"

namespace wfk::fock {

// [q_n(α), q_m(β)] = n δ_{n+m,0} ∫αβ on every basis vector of weight ≤ cutoff, 0 < |n|,|m| ≤ modes.
Report heisenberg_report(const FockModel& m, int modes, int cutoff);

// [L_n(α), L_m(β)] = (n−m) L_{n+m}(αβ) − ((n³−n)/12) δ_{n+m,0} ∫c₂αβ, |n|,|m| ≤ modes.
Report virasoro_report(const FockModel& m, int modes, int cutoff);

// [d, q_n(α)] = n L_n(α); throws ModelMismatch when d is undefined for the model.
Report boundary_report(const FockModel& m, int modes, int cutoff);

}  // namespace wfk::fock
