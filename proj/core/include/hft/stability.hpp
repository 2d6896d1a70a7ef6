#ifndef HFT_STABILITY_HPP
#define HFT_STABILITY_HPP

// Stability of frozen triples checked as exact inequalities between
// polynomials in m for m >> 0.

#include <string>
#include <vector>

#include <hft/rational.hpp>

namespace hft
{

// Coefficients lowest degree first, trailing zeros trimmed.
class HilbertPoly
{
public:
    HilbertPoly() = default;
    HilbertPoly(std::vector<Rational> coefficients);
    HilbertPoly(std::initializer_list<Rational> coefficients)
        : HilbertPoly(std::vector<Rational>(coefficients))
    {
    }

    const std::vector<Rational> &coefficients() const noexcept
    {
        return c_;
    }
    // -1 for the zero polynomial.
    int degree() const noexcept
    {
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return c_.empty();
    }
    Rational coefficient(int i) const;
    Rational leading() const;
    // Coefficient of m, the rank of a sheaf supported on a line.
    Rational rank() const
    {
        return coefficient(1);
    }
    Rational evaluate(const Rational &m) const;

    HilbertPoly operator+(const HilbertPoly &o) const;
    HilbertPoly operator-(const HilbertPoly &o) const;
    HilbertPoly operator*(const Rational &s) const;

    friend bool operator==(const HilbertPoly &, const HilbertPoly &) = default;

private:
    std::vector<Rational> c_;
};

std::string to_string(const HilbertPoly &p);

enum class Ordering { less, equal, greater };

// Order of p(m) and q(m) for all sufficiently large m.
Ordering poly_compare_asymptotic(const HilbertPoly &p, const HilbertPoly &q);

struct Subobject {
    HilbertPoly hilbert;
    bool factors_through = false;
};

struct FrozenTripleModel {
    int rank_E = 1;
    HilbertPoly sheaf;
    HilbertPoly image;
    std::vector<Subobject> subobjects;
};

// Throws Error(InvalidModel) unless the sheaf polynomial is linear with
// positive leading coefficient and the image is asymptotically no larger.
void validate_model(const FrozenTripleModel &model);

// True iff every proper listed subobject satisfies its strict inequality for
// m >> 0. Throws Error(InvalidStabilityParameter) if q's leading coefficient
// is not positive.
bool tau_stability_check(const FrozenTripleModel &model, const HilbertPoly &q);

struct LimitVerdict {
    bool stable = false;
    bool cokernel_zero_dim = false;
    bool agree() const noexcept
    {
        return stable == cokernel_zero_dim;
    }
};

// Stability tested against the image subobject alone, paired with the
// zero-dimensional-cokernel test rank(image) == rank(sheaf). Requires
// deg q >= 2.
LimitVerdict limit_stable_equiv(const FrozenTripleModel &model, const HilbertPoly &q);

} // namespace hft

#endif
