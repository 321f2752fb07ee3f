#pragma once

#include "brokenstick/polynomial.hpp"

#include <vector>

namespace brokenstick {

/// C(n, k), exact; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// n!, exact; requires n >= 0.
BigInt factorial(int n);

/// One layer of the nested integral over the ordered feasible region of the
/// broken stick: integrate the variable x_{variable_index} between lower and
/// upper, both affine in the next-outer variable x_{variable_index - 1}.
struct IntegralLayer {
    int variable_index = 0;  // 1-based
    AffineBound lower;
    AffineBound upper;

    bool operator==(const IntegralLayer&) const = default;
};

/// Bounds of the nested integral for n break points of which exactly k lie
/// below one half, ordered outermost (x_1) first:
///
///   layer 1:           0        .. 1/2
///   layers 2..k:       x_{i-1}  .. 1/2
///   layer k+1:         1/2      .. 1/2 + x_k
///   layers k+2..n:     x_{i-1}  .. 1
///
/// The middle block is empty for k = 1 and the tail block for k = n-1.
/// Throws std::invalid_argument unless n >= 2 and 1 <= k < n.
std::vector<IntegralLayer> build_integral_layers(int n, int k);

/// Iterated integral of y^alpha over the chain 0 <= y_m <= ... <= y_2 <= y_1:
/// y1^(alpha + m - 1) / prod_{i=1}^{m-1} (alpha + i).
/// Requires alpha >= 0 and m >= 2.
Rational simplex_monomial_integral(int alpha, int m, const Rational& y1);

/// Probability that n sorted uniform break points satisfy every polygon
/// constraint with exactly k points below one half, evaluated by expanding
/// the nested integral inside-out: start from the constant 1 in x_n and fold
/// each layer with definite_integral until a constant remains. Never touches
/// the closed form.
Rational symbolic_probability(int n, int k);

/// Same probability via the closed form (C(n,k) - 1) / (2^n * n!).
Rational closed_form_probability(int n, int k);

/// Probability that sorted break points X_1 <= ... <= X_n satisfy every
/// polygon constraint: (2^n - (n+1)) / (2^n * n!). Requires n >= 2.
Rational ordered_probability(int n);

/// Final answer over all orderings: 1 - (n+1)/2^n. Requires n >= 2.
Rational polygon_probability(int n);

struct ExactRow {
    int k = 0;
    Rational symbolic;
    Rational closed_form;
};

/// Per-k probabilities by both routes plus the aggregated totals.
/// ordered_probability is the sum of the symbolic column and
/// final_probability is n! times that sum.
struct ExactTable {
    int n = 0;
    std::vector<ExactRow> per_k;  // k = 1 .. n-1
    Rational ordered_probability;
    Rational final_probability;
};

ExactTable exact_table(int n);

}  // namespace brokenstick
