#pragma once

#include "findom/extnat.hpp"

#include <cstddef>
#include <string>

namespace findom {

/// Homological invariants of one algebra. `exact` distinguishes the
/// combinatorial path (no cutoffs) from the bounded matrix path.
struct InvariantReport {
    ExtNat domdim;
    ExtNat codomdim;
    ExtNat findim;
    ExtNat inj_findim;
    ExtNat gdim;
    ExtNat gldim;
    bool selfinjective = false;
    bool exact = true;
    std::size_t simple_count = 0;
    std::size_t proj_noninjective_count = 0;
    std::uint32_t cutoff = 0; // 0 when exact
};

enum class Flag { False, True, Unknown };

inline const char* flag_str(Flag f) {
    switch (f) {
    case Flag::True: return "true";
    case Flag::False: return "false";
    case Flag::Unknown: return "unknown";
    }
    return "?";
}

/// Classification flags with the paper's implication chain
/// higher_auslander => auslander_gorenstein => finitistic_auslander
/// => weak_finitistic_auslander => qf3. Selfinjective algebras carry all
/// Auslander flags false by convention.
struct Verdict {
    Flag qf3 = Flag::Unknown;
    Flag ngas = Flag::Unknown;
    Flag weak_finitistic_auslander = Flag::Unknown;
    Flag finitistic_auslander = Flag::Unknown;
    Flag higher_auslander = Flag::Unknown;
    Flag auslander_gorenstein = Flag::Unknown;
    std::string witness;
};

} // namespace findom
