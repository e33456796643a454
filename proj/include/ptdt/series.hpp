#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptdt/half_integer.hpp"
#include "ptdt/partition.hpp"

namespace ptdt {

using Coefficient = boost::multiprecision::cpp_int;

// Σ c_e q^e over half-integer exponents e <= bound. Zero coefficients are never stored.
class TruncatedSeries {
public:
    explicit TruncatedSeries(HalfInteger bound) : bound_(bound) {}
    static TruncatedSeries one(HalfInteger bound) { return monomial(HalfInteger{}, 1, bound); }
    static TruncatedSeries monomial(HalfInteger exponent, const Coefficient& c, HalfInteger bound);

    HalfInteger bound() const { return bound_; }
    const std::map<HalfInteger, Coefficient>& terms() const { return terms_; }
    Coefficient coefficient(HalfInteger exponent) const;
    std::optional<HalfInteger> lowest() const;
    bool is_zero() const { return terms_.empty(); }

    // Terms above the bound are dropped.
    void add_term(HalfInteger exponent, const Coefficient& c);
    // Multiply by q^by, keeping the bound.
    TruncatedSeries shifted(HalfInteger by) const;
    TruncatedSeries truncated(HalfInteger bound) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    // Coefficients of q^0, q^1, ..., q^floor(bound); throws domain_error on a half-integer or negative term.
    std::vector<Coefficient> integer_coefficients() const;
    // "1 + q + 3q^{2}", or "0".
    std::string to_string() const;

private:
    HalfInteger bound_;
    std::map<HalfInteger, Coefficient> terms_;
};

// Convolution truncated at the smaller bound.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Σ_{k>=0} q^{k·a} up to D; a must be positive.
TruncatedSeries geometric(HalfInteger a, HalfInteger bound);

// Γ_sign(q^exponent); sign +1 fans |λ⟩ out to µ ≻ λ, sign -1 to µ ≺ λ.
struct VertexOp {
    int sign = +1;
    HalfInteger exponent;
    friend bool operator==(const VertexOp&, const VertexOp&) = default;
};

// ⟨bra| ops[0] ops[1] ... ops[n-1] |ket⟩.
struct OperatorWord {
    std::vector<VertexOp> ops;
    Partition bra;
    Partition ket;
};

using StateVector = std::map<Partition, TruncatedSeries>;

// One operator applied to a ket-side state vector; terms above D are discarded.
// Throws convergence_error for Γ_+ with a nonpositive exponent.
StateVector gamma_apply(const StateVector& s, int sign, HalfInteger exponent, HalfInteger bound);

// Bra-ket coefficient of the word up to D. Throws convergence_error when the word
// has infinitely many contributions below D.
TruncatedSeries evaluate(const OperatorWord& word, HalfInteger bound);

// Exponent contributed by one filling of the word's states: states[k] sits left
// of ops[k], so states has ops.size() + 1 entries. Throws domain_error when a
// pair of neighbours does not interlace in the direction the operator requires.
HalfInteger word_exponent(const OperatorWord& word, const std::vector<Partition>& states);

enum class ShapeKind { one_leg, two_leg_spp, two_leg_rpp };

// one_leg uses lambda only. Two-leg: lambda indexes columns, mu indexes rows.
struct Shape {
    ShapeKind kind = ShapeKind::one_leg;
    Partition lambda;
    Partition mu;
};

// Operators at edges n = -cutoff..cutoff.
//   one_leg:      ⟨∅| Π Γ_{e(n)}(q^{p(n)}) |∅⟩
//   two_leg_spp:  ⟨λ| ...Γ_-(q^{3/2})Γ_-(q^{1/2}) Γ_+(q^{1/2})Γ_+(q^{3/2})... |µ⟩
//   two_leg_rpp:  ⟨µ| ...Γ_+(q^{3/2})Γ_+(q^{1/2}) Γ_-(q^{1/2})Γ_-(q^{3/2})... |λ⟩
OperatorWord shape_word(const Shape& shape, int cutoff);

// Smallest cutoff that keeps every irregular edge of the shape inside the word.
int minimal_cutoff(const Shape& shape);

// evaluate(shape_word) with the cutoff doubled until two successive cutoffs agree to D.
TruncatedSeries evaluate_shape(const Shape& shape, HalfInteger bound);

enum class ProductRegion { plane, inside, outside };

// Π 1/(1 - q^{h(□)}) over the boxes of the region with h(□) <= D.
TruncatedSeries hook_product(ProductRegion region, const Partition& lambda, HalfInteger bound);

}  // namespace ptdt
