#pragma once

// Generic-parameter matrix models of braided reflections over Q(q): every
// generator satisfies the quadratic relation (s - q)(s + 1/q) = 0 and pairs
// of generators either commute or braid. Provides the solver for the
// bar-sesquilinear invariant form J (transpose(J) = bar(J), normalized so
// J at q = 1 is the identity) and a signature profile of J on the unit
// circle q = exp(ix).

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "reflie/linalg.hpp"
#include "reflie/ratfunc.hpp"

namespace reflie {

struct HeckeModel {
    std::string label;
    int dim = 0;
    std::vector<std::pair<std::string, Mat<RF>>> generators;
};

// Reflection representation of the type D4 Artin group in a rational model
// acting on 4 coordinates; s1, s2, s4 commute pairwise and each braids
// with s3.
HeckeModel builtin_d4();

// Entrywise q -> 1/q.
Mat<RF> bar(const Mat<RF>& a);

// Exact evaluation at a rational point; throws on a pole.
Mat<Rational> evaluate(const Mat<RF>& a, const Rational& x);

struct HeckeRelationReport {
    bool quadratic = false;          // (s - q)(s + 1/q) = 0 for every generator
    bool pairwise = false;           // every pair commutes or braids
    bool orthogonal_at_one = false;  // q = 1 images are orthogonal involutions
    std::vector<std::pair<int, int>> commuting;  // generator index pairs
    std::vector<std::pair<int, int>> braiding;
    std::vector<std::string> failures;
    bool ok() const { return quadratic && pairwise && orthogonal_at_one; }
};

HeckeRelationReport check_relations(const HeckeModel& m);

// The invariant form: the unique J with bar(transpose(R(b))) J = J R(b)^-1
// for every generator b, symmetrized and scaled so that transpose(J) =
// bar(J), J at q = 1 is the identity, and the (0,0) entry is the constant 1
// (the solution line admits any bar-invariant scalar factor that is 1 at
// q = 1; the last condition pins the representative). Throws when the
// solution space of the linear system does not have dimension exactly 1
// (model reducible or relations violated), or when the q = 1 normalization
// fails.
Mat<RF> solve_form(const HeckeModel& m);

struct SignatureSample {
    double x = 0;  // q = exp(ix)
    int plus = 0, minus = 0, zero = 0;
};

struct SignatureInterval {
    double from = 0, to = 0;
    int plus = 0, minus = 0;
};

struct SignatureScan {
    std::vector<SignatureSample> samples;
    std::vector<SignatureInterval> intervals;  // maximal runs of constant signature
    std::vector<double> boundaries;            // bisected sign-change locations
    double max_hermitian_defect = 0;  // largest |J(q) - adjoint| entry seen
    std::vector<double> indeterminate;  // samples with a near-zero eigenvalue
};

// Evaluates J at q = exp(ix) on a uniform grid of the given size over
// (0, xmax], checks the result is Hermitian to 1e-9, and counts eigenvalue
// signs with |lambda| <= zero_band treated as zero. Signature changes
// between consecutive grid points are located by bisection to xtol.
SignatureScan signature_scan(const Mat<RF>& J, int samples, double xmax,
                             double zero_band = 1e-9, double xtol = 1e-6);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
std::vector<double> hermitian_eigenvalues(std::vector<std::vector<std::complex<double>>> a);

// File I/O in the shared representation format with "function_field": true;
// loading runs check_relations and throws naming the violated relation.
// Implemented with the serialization layer.
HeckeModel load_model(const std::string& path);
void save_model(const HeckeModel& m, const std::string& path);

}  // namespace reflie
