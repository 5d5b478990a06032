#pragma once

// Verification drivers comparing computed Lie closure dimensions against
// the classification predictions. Per representation the derived closure
// runs over F_p first (p = 1 mod the conductor, so the cyclotomic scalars
// reduce); the exact closure is run when the mod-p dimension misses the
// prediction, or always in exact mode. Small groups additionally get the
// joint-closure identities: total dimension, center spanned by the
// reflection class sums, and the determinant-sign splitting.

#include <cstdint>
#include <optional>

#include "reflie/lie.hpp"

namespace reflie {

enum class VerifyMode { modp_first, exact_always };

struct RepVerdict {
    int index = 0;
    std::string label;
    int dim = 0;
    std::string predicted_type;
    long long predicted_derived = 0;
    int modp_derived = -1;
    std::uint32_t prime = 0;
    std::optional<int> exact_derived;
    std::optional<int> exact_full;
    bool pass = false;
};

struct VerifyReport {
    std::string group_name;
    unsigned long long group_order = 0;
    int reflection_classes = 0;
    long long predicted_derived = 0;
    long long predicted_total = 0;
    std::vector<RepVerdict> reps;
    std::optional<JointClosure> joint;
    std::optional<CenterReport> center;
    std::optional<CompactSplitReport> split;
    bool joint_matches = true;
    bool all_pass = false;
};

std::string predicted_type_name(const RepRecord& rec);

// Derived closure dimension over F_p at the first usable prime >= 11 for
// the representation's conductor, retrying past primes that divide a
// denominator; reports the prime used.
std::pair<RepClosureDims, std::uint32_t> closure_dims_auto_prime(const Rep& rho);

VerifyReport verify_group(const Classification& cls, VerifyMode mode, bool with_joint,
                          int jobs = 1);

}  // namespace reflie
