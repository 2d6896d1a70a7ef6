#ifndef HFT_PARAMFUNC_HPP
#define HFT_PARAMFUNC_HPP

// Rational functions of the equivariant parameters that are closed under
// addition: scalar * prod(num forms) * residual / prod(den forms), where the
// residual is a polynomial that did not factor into known linear forms.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <hft/localize.hpp>

namespace hft
{

class ParamPoly
{
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational, std::greater<>>;

    explicit ParamPoly(int parameter_count) : params_(parameter_count) {}
    static ParamPoly constant(int parameter_count, const Rational &c);
    static ParamPoly of(const WeightForm &f);
    static ParamPoly of(const LinearExpr &e);

    int parameter_count() const noexcept
    {
        return params_;
    }
    const TermMap &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_constant() const;
    Rational constant_term() const;
    // Coefficient of the lexicographically largest exponent vector.
    Rational leading_coefficient() const;
    bool is_homogeneous() const;
    int total_degree() const;

    void add_term(const Exponents &e, const Rational &c);

    ParamPoly &operator+=(const ParamPoly &o);
    ParamPoly &operator-=(const ParamPoly &o);
    ParamPoly operator+(const ParamPoly &o) const;
    ParamPoly operator-(const ParamPoly &o) const;
    ParamPoly operator*(const ParamPoly &o) const;
    ParamPoly operator*(const Rational &c) const;
    // Product with a linear form.
    ParamPoly times(const WeightForm &f) const;

    Rational evaluate(const std::vector<Rational> &point) const;
    ParamPoly specialize(const Specialization &sp) const;
    // Exact quotient by a non-constant linear form.
    std::optional<ParamPoly> divide(const WeightForm &f) const;

    friend bool operator==(const ParamPoly &, const ParamPoly &) = default;

private:
    int params_;
    TermMap terms_;
};

std::string to_string(const ParamPoly &p);

class ParamFunction
{
public:
    // The constant function.
    explicit ParamFunction(int parameter_count, Rational scalar = 1);
    ParamFunction(const WeightFunction &f);
    ParamFunction(Rational scalar, std::vector<WeightForm> num, ParamPoly residual, std::vector<WeightForm> den);

    int parameter_count() const noexcept
    {
        return residual_.parameter_count();
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
    // 1 unless a sum failed to factor.
    const ParamPoly &residual() const noexcept
    {
        return residual_;
    }
    bool is_zero() const noexcept
    {
        return scalar_ == 0;
    }

    std::optional<WeightFunction> as_weight_function() const;

    bool is_homogeneous() const;
    // Scaling degree, meaningful when homogeneous.
    int degree() const;

    Rational evaluate(const std::vector<Rational> &point) const;
    // Throws Error(DivisionByZero) if a denominator form vanishes.
    ParamFunction specialize(const Specialization &sp, const std::string &where = {}) const;

    ParamFunction operator+(const ParamFunction &o) const;
    ParamFunction operator-(const ParamFunction &o) const;
    ParamFunction operator-() const;
    ParamFunction operator*(const ParamFunction &o) const;
    ParamFunction operator*(const Rational &c) const;

    // Structural equality of the stored representation.
    bool same_representation(const ParamFunction &o) const;
    // Equality as rational functions.
    // Sum over the least common denominator of all terms at once.
    friend ParamFunction sum(const std::vector<ParamFunction> &terms, int parameter_count);

    friend bool operator==(const ParamFunction &a, const ParamFunction &b)
    {
        return (a - b).is_zero();
    }

private:
    void canonicalize(const std::vector<WeightForm> &extra_candidates = {});

    Rational scalar_;
    std::vector<WeightForm> num_;
    ParamPoly residual_;
    std::vector<WeightForm> den_;
};

ParamFunction sum(const std::vector<ParamFunction> &terms, int parameter_count);
std::string to_string(const ParamFunction &f);

} // namespace hft

#endif
