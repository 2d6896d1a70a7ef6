#ifndef HFT_VERTEXCALC_HPP
#define HFT_VERTEXCALC_HPP

// Characters of the virtual tangent space at a fixed point on local P^1:
// chart traces, the redistributed edge function G, vertex characters and the
// total Laurent character per box tuple.

#include <array>
#include <utility>
#include <vector>

#include <hft/charring.hpp>
#include <hft/fixedpoints.hpp>

namespace hft
{

// Local coordinates of a chart expressed in the global variables, plus the
// twist correction C of O(-n) restricted to the chart.
struct ChartFrame {
    Chart chart = Chart::alpha;
    Substitution local;
    LaurentPoly correction;

    // Identity coordinates, C = t1^n.
    static ChartFrame alpha(const VariableSet &vars, int twist);
    // t1 -> t1^-1, t2 -> t2 t1, t3 -> t3 t1, C = 1.
    static ChartFrame beta(const VariableSet &vars);

    // Image of t_i (1-based) in global variables.
    Monomial torus(int i) const;
};

// Normal bundle degrees of the edge curve; (-1, -1) for local P^1.
struct EdgeData {
    int normal_degree = -1;
    int normal_degree_prime = -1;
};

// F W^bar C^bar - F^bar W C/(T1T2T3) + F F^bar D/(T1T2T3) + (1 - W W^bar C C^bar)/D
// with D = (1-T1)(1-T2)(1-T3), T_i the frame's local coordinates.
RationalCharacter trace_vertex(const RationalCharacter &f, const ChartFrame &frame);
// The four summands above, in order.
std::array<RationalCharacter, 4> trace_terms(const RationalCharacter &f, const ChartFrame &frame);

// The frame part of the edge restriction of F, w1 + ... + wr; the normal
// factor 1/((1-t2)(1-t3)) is carried by edge_G itself.
LaurentPoly edge_frame_character(const VariableSet &vars);

// -F W^bar C^bar - F^bar W C/(t2t3) + F F^bar (1-t2)(1-t3)/(t2t3)
//   - (1 - W W^bar C C^bar)/((1-t2)(1-t3))
// in the variables of the chart it is attached to.
RationalCharacter edge_G(const LaurentPoly &edge_frame, const LaurentPoly &correction);

// (1 - sum_ij w_i w_j^-1)/(1 - t3) and 1 - sum_ij w_i w_j^-1.
RationalCharacter triple_G(const VariableSet &vars);
LaurentPoly quad_G(const VariableSet &vars);

// An edge function in the chart's local variables and the axis (1..3) of
// the leg it sits on.
struct EdgeTerm {
    RationalCharacter g;
    int axis = 1;
};

// trace + sum G/(1 - T_axis), reduced to a Laurent polynomial. Throws
// Error(NotPolynomial) if the sum keeps a pole.
LaurentPoly vertex_character(const RationalCharacter &trace, const ChartFrame &frame,
                             const std::vector<EdgeTerm> &edges);

// V for one chart of local P^1.
LaurentPoly chart_vertex(const BoxTuple &b, Chart chart, int twist);

// V_alpha + V_beta.
LaurentPoly total_character(const BoxTuple &b, int twist);

// Sum over frame blocks j of
//   W^bar w_j sum_{i=1..d_j} t1^(-i-n) - W w_j^-1 sum_{i=0..d_j-1} t1^(i+n)/(t2t3)
// with the beta blocks (n = 0) pushed through the chart change.
LaurentPoly closed_form_character(const BoxTuple &b, int twist);

// Cross-block part of F F^bar D/(T1T2T3) + ... left over after the closed
// form: -X sum_{i != j} w_i w_j^-1 (t1^(d_j-d_i) - 1)/(1-t1) per chart, with
// X = (1-t2)(1-t3)/(t2t3). Zero for rank 1 and for equal lengths.
LaurentPoly cross_block_residual(const BoxTuple &b);

// (t1^-1 G(t2,t3) - G(t2 t1^-m, t3 t1^-m'))/(1 - t1^-1).
LaurentPoly edge_E(const RationalCharacter &g, const EdgeData &edge);
// Same construction with G depending on t3 only, then wrapped in the t2
// redistribution; keeps the pole of G in t3.
RationalCharacter edge_E_triple(const RationalCharacter &g, const EdgeData &edge);
// Constant G wrapped in the t1, t2, t3 redistributions.
LaurentPoly edge_E_quad(const LaurentPoly &g);

} // namespace hft

#endif
