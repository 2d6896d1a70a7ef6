#ifndef HFT_LOCALIZE_HPP
#define HFT_LOCALIZE_HPP

// Equivariant weights, Euler classes and localization contributions in the
// parameters s1,s2,s3 (torus) and v1..vr (frame).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <hft/charring.hpp>
#include <hft/fixedpoints.hpp>
#include <hft/rational.hpp>

namespace hft
{

// Parameters are indexed like the character variables: s1,s2,s3,v1..vr.
std::string parameter_name(int index);
inline int parameter_count(int rank)
{
    return VariableSet::torus_count + rank;
}

// Integer linear form sum a_i p_i + b. The constant only appears after
// specializations such as v1 = 1.
class WeightForm
{
public:
    WeightForm() = default;
    explicit WeightForm(std::vector<Integer> coefficients, Integer constant = 0);

    // t1^a t2^b t3^c w^e -> a s1 + b s2 + c s3 + sum e_j v_j
    static WeightForm of_monomial(const Monomial &m);

    int size() const noexcept
    {
        return static_cast<int>(coeffs_.size());
    }
    const std::vector<Integer> &coefficients() const noexcept
    {
        return coeffs_;
    }
    const Integer &coefficient(int i) const
    {
        return coeffs_.at(static_cast<std::size_t>(i));
    }
    const Integer &constant() const noexcept
    {
        return constant_;
    }
    bool is_zero() const;
    // No parameter appears.
    bool is_constant() const;
    // Index of the first parameter with nonzero coefficient, or -1.
    int leading_index() const;

    // Signed gcd so that *this == content() * primitive() and the primitive
    // form has its first nonzero entry positive.
    Integer content() const;
    WeightForm primitive() const;

    Rational evaluate(const std::vector<Rational> &point) const;

    WeightForm operator-() const;
    WeightForm operator+(const WeightForm &o) const;
    WeightForm operator*(const Integer &k) const;

    friend bool operator==(const WeightForm &a, const WeightForm &b);
    friend bool operator<(const WeightForm &a, const WeightForm &b);

private:
    std::vector<Integer> coeffs_;
    Integer constant_ = 0;
};

std::string to_string(const WeightForm &f);

// Rational-coefficient linear expression, the right-hand side of a
// specialization step.
struct LinearExpr {
    std::vector<Rational> coefficients;
    Rational constant = 0;

    static LinearExpr of(const WeightForm &f);
    bool references(int index) const;
};

// Ordered list of assignments param = linear expression, applied left to
// right. A right-hand side may not mention its own or any earlier left-hand
// side.
class Specialization
{
public:
    Specialization() = default;

    // "s3=-s1-s2,v1=1,v2=1/2*s1". Throws Error(ParseError) with the column
    // of the problem.
    static Specialization parse(std::string_view text, int rank);
    // The Calabi-Yau constraint s3 = -s1 - s2 together with v_j = 1.
    static Specialization calabi_yau_unit_frame(int rank);

    void assign(int parameter, LinearExpr expr);

    bool is_identity() const noexcept
    {
        return steps_.empty();
    }
    const std::string &text() const noexcept
    {
        return text_;
    }

    LinearExpr apply(const LinearExpr &e) const;
    // Image of f as scalar * integer form.
    std::pair<Rational, WeightForm> apply(const WeightForm &f) const;

private:
    std::vector<std::pair<int, LinearExpr>> steps_;
    std::string text_;
};

// Integer form proportional to a rational linear expression: e = scale * form.
std::pair<Rational, WeightForm> clear_denominators(const LinearExpr &e);

// scalar * prod num / prod den, forms primitive with positive leading entry,
// common factors cancelled, factors sorted. This form is unique.
class WeightFunction
{
public:
    explicit WeightFunction(int parameter_count, Rational scalar = 1);
    WeightFunction(int parameter_count, Rational scalar, std::vector<WeightForm> num, std::vector<WeightForm> den);

    int parameter_count() const noexcept
    {
        return params_;
    }
    const Rational &scalar() const noexcept
    {
        return scalar_;
    }
    const std::vector<WeightForm> &numerator() const noexcept
    {
        return num_;
    }
    const std::vector<WeightForm> &denominator() const noexcept
    {
        return den_;
    }
    bool is_zero() const noexcept
    {
        return scalar_ == 0;
    }
    // Both form lists contain only homogeneous forms.
    bool is_homogeneous() const;
    // Numerator count minus denominator count; the scaling degree when
    // homogeneous.
    int degree() const noexcept
    {
        return static_cast<int>(num_.size()) - static_cast<int>(den_.size());
    }

    Rational evaluate(const std::vector<Rational> &point) const;

    WeightFunction operator*(const WeightFunction &o) const;
    WeightFunction inverse() const;

    friend bool operator==(const WeightFunction &, const WeightFunction &) = default;

private:
    void canonicalize();

    int params_;
    Rational scalar_;
    std::vector<WeightForm> num_;
    std::vector<WeightForm> den_;
};

std::string to_string(const WeightFunction &f);

// Weights of a character counted with sign and multiplicity.
struct WeightMultiset {
    int parameter_count = 0;
    std::vector<WeightForm> positive;
    std::vector<WeightForm> negative;
};

// Throws Error(ZeroWeight) if the constant monomial occurs, and
// Error(NonIntegerMultiplicity) for a non-integer coefficient.
WeightMultiset weights_of(const LaurentPoly &p);

// e(-V) = prod(negative weights) / prod(positive weights).
WeightFunction euler_of_minus(const WeightMultiset &w);

enum class Mode { character, paper };

std::string_view to_string(Mode mode) noexcept;
// "character" or "paper"; throws Error(ModeUnavailable) otherwise.
Mode parse_mode(std::string_view text);

// character: euler_of_minus(weights_of(total_character(b, n))).
// paper: product over frame blocks j of
//   prod_{i=0..d_j-1} ((i+n)s1 - s2 - s3 + sigma_j) / prod_{i=1..d_j} (-(i+n)s1 - sigma_j)
// with sigma_j = sum_{l != j} (v_l - v_j), times the beta blocks at n = 0
// read in the chart-change coordinates.
WeightFunction contribution(const BoxTuple &b, int twist, Mode mode);

// Throws Error(DivisionByZero) if a denominator form vanishes; `where` is
// copied into the error context.
WeightFunction specialize(const WeightFunction &f, const Specialization &sp, const std::string &where = {});

} // namespace hft

#endif
