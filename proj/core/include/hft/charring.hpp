#ifndef HFT_CHARRING_HPP
#define HFT_CHARRING_HPP

// Exact arithmetic for torus characters: monomials in t1,t2,t3 (the
// three-torus) and w1..wr (the frame torus), sparse Laurent polynomials with
// rational coefficients, and rational characters whose denominators are
// products of (1 - monomial) factors.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include <hft/rational.hpp>

namespace hft
{

// Variables are indexed densely: 0,1,2 are t1,t2,t3 and 3.. are w1..wr.
class VariableSet
{
public:
    static constexpr int torus_count = 3;

    explicit VariableSet(int frame_count);

    int frame_count() const noexcept
    {
        return frame_count_;
    }
    int size() const noexcept
    {
        return torus_count + frame_count_;
    }
    // 1-based accessors matching the usual notation.
    static int t(int i) noexcept
    {
        return i - 1;
    }
    static int w(int j) noexcept
    {
        return torus_count + j - 1;
    }
    std::string name(int index) const;

    friend bool operator==(const VariableSet &, const VariableSet &) = default;

private:
    int frame_count_;
};

class Monomial
{
public:
    // Inline storage covers the torus plus five frame variables.
    using Exponents = boost::container::small_vector<int, 8>;

    Monomial() = default;
    explicit Monomial(Exponents exponents) : exps_(std::move(exponents)) {}
    explicit Monomial(const std::vector<int> &exponents) : exps_(exponents.begin(), exponents.end()) {}
    Monomial(std::initializer_list<int> exponents) : exps_(exponents) {}

    static Monomial one(const VariableSet &vars);
    static Monomial variable(const VariableSet &vars, int index, int power = 1);

    int size() const noexcept
    {
        return static_cast<int>(exps_.size());
    }
    int operator[](int i) const
    {
        return exps_[static_cast<std::size_t>(i)];
    }
    const Exponents &exponents() const noexcept
    {
        return exps_;
    }

    int degree() const noexcept;
    bool is_one() const noexcept;
    // Strictly greater than 1 in the graded lexicographic order.
    bool is_positive() const noexcept;

    Monomial operator*(const Monomial &other) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    Exponents exps_;
};

// Graded lexicographic order (total degree first, then t1,t2,t3,w1..), used
// descending so the largest monomial comes first in storage and output.
struct GrlexDescending {
    bool operator()(const Monomial &a, const Monomial &b) const noexcept;
};

class LaurentPoly
{
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    explicit LaurentPoly(VariableSet vars) : vars_(vars) {}
    LaurentPoly(VariableSet vars, const Monomial &m, const Rational &c = 1);

    static LaurentPoly constant(VariableSet vars, const Rational &c);
    static LaurentPoly variable(VariableSet vars, int index, int power = 1);

    const VariableSet &vars() const noexcept
    {
        return vars_;
    }
    const TermMap &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    Rational coefficient(const Monomial &m) const;
    // Sum of coefficients, i.e. the value at all variables equal to 1.
    Rational coefficient_sum() const;

    void add_term(const Monomial &m, const Rational &c);

    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);
    LaurentPoly &operator*=(const Rational &c);
    LaurentPoly operator-() const;
    LaurentPoly times(const Monomial &m) const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b)
    {
        return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b)
    {
        return a -= b;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational &c)
    {
        return a *= c;
    }

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
    VariableSet vars_;
    TermMap terms_;
};

// Every variable inverted, torus and frame alike.
LaurentPoly bar(const LaurentPoly &p);

// w1 + ... + wr and w1^-1 + ... + wr^-1.
LaurentPoly frame_sum(const VariableSet &vars);
LaurentPoly frame_dual_sum(const VariableSet &vars);

// Numerator over a multiset of (1 - m) factors. Constructed values are only
// validated; normalize() brings them to canonical form.
class RationalCharacter
{
public:
    explicit RationalCharacter(LaurentPoly numerator) : num_(std::move(numerator)) {}
    RationalCharacter(LaurentPoly numerator, std::vector<Monomial> denominator);

    const VariableSet &vars() const noexcept
    {
        return num_.vars();
    }
    const LaurentPoly &numerator() const noexcept
    {
        return num_;
    }
    const std::vector<Monomial> &denominator() const noexcept
    {
        return den_;
    }
    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }
    bool is_laurent() const noexcept
    {
        return den_.empty();
    }

    friend bool operator==(const RationalCharacter &, const RationalCharacter &) = default;

private:
    LaurentPoly num_;
    std::vector<Monomial> den_;
};

enum class CombineOp { add, sub, mul };

RationalCharacter combine(const RationalCharacter &a, const RationalCharacter &b, CombineOp op);
RationalCharacter operator+(const RationalCharacter &a, const RationalCharacter &b);
RationalCharacter operator-(const RationalCharacter &a, const RationalCharacter &b);
RationalCharacter operator*(const RationalCharacter &a, const RationalCharacter &b);
RationalCharacter operator-(const RationalCharacter &a);
// All terms over one common denominator, normalized once.
RationalCharacter sum(const std::vector<RationalCharacter> &terms);

RationalCharacter embed(const LaurentPoly &p);
RationalCharacter bar(const RationalCharacter &x);

// Canonical form: every factor oriented so its monomial is positive in the
// grlex order (1/(1-m) = -m^-1/(1-m^-1)), every factor dividing the
// numerator cancelled, factors sorted.
RationalCharacter normalize(const RationalCharacter &x);

// Throws Error(NotPolynomial) if a denominator factor survives normalization.
LaurentPoly reduce_to_laurent(const RationalCharacter &x);

// Equality as rational functions, by cross-multiplication.
bool equivalent(const RationalCharacter &a, const RationalCharacter &b);

// p / (1 - m) when the division is exact.
std::optional<LaurentPoly> divide_by_one_minus(const LaurentPoly &p, const Monomial &m);

// A replacement v -> sign * monomial. sign == 0 denotes the zero replacement,
// which is rejected.
struct SignedMonomial {
    int sign = 1;
    Monomial monomial;
};

class Substitution
{
public:
    explicit Substitution(VariableSet vars);

    // t1 -> t1^-1, t2 -> t2 t1, t3 -> t3 t1: restriction from the chart at
    // 0 to the chart at infinity of local P^1. It is an involution.
    static Substitution chart_change(VariableSet vars);

    Substitution &set(int variable, SignedMonomial image);
    SignedMonomial image(int variable) const;
    const VariableSet &vars() const noexcept
    {
        return vars_;
    }

private:
    VariableSet vars_;
    std::vector<SignedMonomial> images_;
};

LaurentPoly substitute(const LaurentPoly &p, const Substitution &map);
RationalCharacter substitute(const RationalCharacter &x, const Substitution &map);

// Text contract: terms in canonical order rendered as
// `<rational>*t1^a*t2^b*...` (zero exponents omitted) joined by " + "/" - ".
std::string to_string(const Monomial &m, const VariableSet &vars);
std::string to_string(const LaurentPoly &p);
// `(<numerator>)/((1-<m1>)*(1-<m2>)...)`, or `(<numerator>)` with no factors.
std::string to_string(const RationalCharacter &x);

} // namespace hft

#endif
