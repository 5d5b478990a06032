#pragma once

// Character-level classification of the irreducibles of a 2-reflection
// group G(de,e,r) with d <= 2. Each irreducible is tested for being a
// reflection representation (every reflection acts as a reflection or the
// identity), a twist of one by a degree-1 character, or a twisted exterior
// power of one; representations are grouped into classes under twisting by
// allowed +-1 characters and by twisted duality, and for the remaining
// classes the type of the invariant bilinear pairing decides whether the
// image of the derived infinitesimal algebra is a full, orthogonal or
// symplectic matrix algebra. The per-representation image dimensions and
// the total are predicted from this data alone.

#include "reflie/representation.hpp"

namespace reflie {

enum class LieType { sl, so, sp };

std::string lie_type_name(LieType t);
long long lie_type_dim(LieType t, int n);  // n*n-1, n(n-1)/2, n(n+1)/2

struct RepRecord {
    int index = 0;
    std::string label;
    int dim = 0;
    bool reflection = false;
    bool quasi_reflection = false;
    bool lambda_ref = false;  // twisted exterior power of a reflection rep
    int lambda_base = 0;      // dimension of the underlying reflection rep
    std::vector<int> allowed_twists;  // rep indices of the +-1 characters in X(rho)
    int dual_twist = -1;  // eta in X(rho) with rho* (x) eps = rho (x) eta, else -1
    LieType type = LieType::sl;
    long long predicted_derived_dim = 0;
    int approx_class = -1;
};

struct ApproxClass {
    std::vector<int> members;
    int rep = 0;  // member with the smallest (dim, label)
    bool quasi_reflection = false;
    bool counted = false;  // contributes a fresh simple ideal
    long long contribution = 0;
};

struct Classification {
    GroupPtr group;
    std::vector<Rep> reps;
    std::vector<Character> chars;
    std::vector<int> degree_one;  // indices of the degree-1 representations
    std::vector<int> pm_chars;    // the +-1-valued ones among them
    int eps = -1;                 // determinant character of the natural matrix group
    std::vector<int> reflection_classes;  // conjugacy class ids of the reflections
    std::vector<RepRecord> records;
    std::vector<ApproxClass> classes;
    int center_dim = 0;                 // = number of reflection classes
    long long predicted_derived = 0;    // sum of the fresh ideal dimensions
    long long predicted_total = 0;      // center + derived
};

Classification classify(GroupPtr W);

}  // namespace reflie
