#include "reflie/verify.hpp"

#include <atomic>
#include <thread>

#include "reflie/primefield.hpp"

namespace reflie {

std::string predicted_type_name(const RepRecord& rec) {
    if (rec.dim == 1) return "0";
    if (rec.lambda_ref) return "sl(" + std::to_string(rec.lambda_base) + ")";
    return lie_type_name(rec.type) + "(" + std::to_string(rec.dim) + ")";
}

std::pair<RepClosureDims, std::uint32_t> closure_dims_auto_prime(const Rep& rho) {
    long lower = 11;
    for (int attempt = 0; attempt < 8; ++attempt) {
        long p = first_usable_prime(rho.conductor, lower);
        try {
            return {rep_closure_dims_mod_p(rho, static_cast<std::uint32_t>(p)), static_cast<std::uint32_t>(p)};
        } catch (const BadPrime&) {
            lower = p + 1;
        }
    }
    throw std::runtime_error("verify: no usable prime found for " + rho.label);
}

VerifyReport verify_group(const Classification& cls, VerifyMode mode, bool with_joint, int jobs) {
    VerifyReport rep;
    rep.group_name = cls.group->params()->name();
    rep.group_order = cls.group->size();
    rep.reflection_classes = cls.center_dim;
    rep.predicted_derived = cls.predicted_derived;
    rep.predicted_total = cls.predicted_total;
    rep.reps.resize(cls.reps.size());

    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cls.reps.size()) return;
            const RepRecord& rec = cls.records[i];
            RepVerdict v;
            v.index = static_cast<int>(i);
            v.label = rec.label;
            v.dim = rec.dim;
            v.predicted_type = predicted_type_name(rec);
            v.predicted_derived = rec.predicted_derived_dim;
            auto [dims, prime] = closure_dims_auto_prime(cls.reps[i]);
            v.modp_derived = dims.derived;
            v.prime = prime;
            if (mode == VerifyMode::exact_always || dims.derived != rec.predicted_derived_dim) {
                RepClosureDims exact = rep_closure_dims(cls.reps[i]);
                v.exact_derived = exact.derived;
                v.exact_full = exact.full;
                v.pass = exact.derived == rec.predicted_derived_dim;
            } else {
                v.pass = true;
            }
            rep.reps[i] = std::move(v);
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    rep.all_pass = true;
    for (const auto& v : rep.reps)
        if (!v.pass) rep.all_pass = false;

    if (with_joint) {
        rep.center = center_check(cls);
        rep.split = compact_split_check(cls);
        rep.joint = JointClosure{rep.center->full, rep.center->derived};
        rep.joint_matches = rep.joint->derived == cls.predicted_derived &&
                            rep.joint->full == cls.predicted_total &&
                            rep.center->class_sums_in_closure && rep.center->class_sums_central &&
                            rep.center->dims_match && rep.split->split;
        if (!rep.joint_matches) rep.all_pass = false;
    }
    return rep;
}

}  // namespace reflie
