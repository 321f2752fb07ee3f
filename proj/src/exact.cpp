#include "brokenstick/exact.hpp"

#include <stdexcept>

namespace brokenstick {

namespace {

void require_valid_n(int n) {
    if (n < 2) throw std::invalid_argument("n must satisfy n >= 2");
}

void require_valid_nk(int n, int k) {
    require_valid_n(n);
    if (k < 1 || k >= n) throw std::invalid_argument("k must satisfy 1 <= k < n");
}

const Rational kHalf(1, 2);

}  // namespace

BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    // Multiplicative form; each partial product is divisible by i.
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial requires n >= 0");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

std::vector<IntegralLayer> build_integral_layers(int n, int k) {
    require_valid_nk(n, k);
    std::vector<IntegralLayer> layers;
    layers.reserve(static_cast<std::size_t>(n));

    layers.push_back({1, AffineBound::fixed(0), AffineBound::fixed(kHalf)});
    for (int i = 2; i <= k; ++i)
        layers.push_back({i, AffineBound::outer_plus(0), AffineBound::fixed(kHalf)});
    layers.push_back({k + 1, AffineBound::fixed(kHalf), AffineBound::outer_plus(kHalf)});
    for (int i = k + 2; i <= n; ++i)
        layers.push_back({i, AffineBound::outer_plus(0), AffineBound::fixed(1)});

    return layers;
}

Rational simplex_monomial_integral(int alpha, int m, const Rational& y1) {
    if (alpha < 0) throw std::invalid_argument("simplex_monomial_integral requires alpha >= 0");
    if (m < 2) throw std::invalid_argument("simplex_monomial_integral requires m >= 2");

    BigInt denom = 1;
    for (int i = 1; i <= m - 1; ++i) denom *= alpha + i;
    return y1.pow(static_cast<unsigned>(alpha + m - 1)) / Rational(denom);
}

Rational symbolic_probability(int n, int k) {
    const auto layers = build_integral_layers(n, k);

    // Fold the layers from the innermost variable outward. The running value
    // is a polynomial in the variable of the next layer; after layer 1 only a
    // constant remains.
    Polynomial current = Polynomial::constant(1);
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        current = definite_integral(current, it->lower, it->upper);
    }

    if (!current.is_zero() && current.degree() != std::size_t{0})
        throw std::logic_error("nested integral did not reduce to a constant");
    return current.coefficient(0);
}

Rational closed_form_probability(int n, int k) {
    require_valid_nk(n, k);
    const BigInt numer = binomial(n, k) - 1;
    const BigInt denom = (BigInt(1) << n) * factorial(n);
    return Rational(numer, denom);
}

Rational ordered_probability(int n) {
    require_valid_n(n);
    const BigInt two_n = BigInt(1) << n;
    return Rational(two_n - (n + 1), two_n * factorial(n));
}

Rational polygon_probability(int n) {
    require_valid_n(n);
    return Rational(1) - Rational(n + 1, BigInt(1) << n);
}

ExactTable exact_table(int n) {
    require_valid_n(n);
    ExactTable table;
    table.n = n;
    table.per_k.reserve(static_cast<std::size_t>(n - 1));

    Rational sum(0);
    for (int k = 1; k < n; ++k) {
        ExactRow row;
        row.k = k;
        row.symbolic = symbolic_probability(n, k);
        row.closed_form = closed_form_probability(n, k);
        sum += row.symbolic;
        table.per_k.push_back(std::move(row));
    }
    table.ordered_probability = sum;
    table.final_probability = Rational(factorial(n)) * sum;
    return table;
}

}  // namespace brokenstick
