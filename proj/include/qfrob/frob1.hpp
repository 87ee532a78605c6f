#pragma once

#include <map>
#include <vector>

#include "qfrob/graded.hpp"
#include "qfrob/rational.hpp"

namespace qfrob {

/// coeff · e_{m,n}, the generator of the one-dimensional component Frob₁(m,n).
/// The (1,1) component is zero, so such elements are normalized to coefficient 0.
struct Frob1Elem {
    int m = 1;
    int n = 1;
    Rat coeff;

    /// Throws std::invalid_argument unless m, n >= 1.
    static Frob1Elem make(int m, int n, const Rat& coeff);

    Degree degree() const { return Degree(n - 1); }
    bool is_zero() const { return coeff.is_zero(); }
    friend bool operator==(const Frob1Elem&, const Frob1Elem&) = default;
};

/// Feeds output `b_output` of b into input `a_input` of a. In the standard output
/// order the composite lists a's outputs, then b's remaining outputs; `out_perm`
/// moves standard output i to slot out_perm(i). Throws std::invalid_argument for
/// out-of-range slots or a wrongly sized permutation.
Frob1Elem frob1_compose(const Frob1Elem& a, int a_input, const Frob1Elem& b, int b_output,
                        const Permutation& out_perm);
/// Identity output order.
Frob1Elem frob1_compose(const Frob1Elem& a, int a_input, const Frob1Elem& b, int b_output);

/// Sign of the composite when e_{2,n1+1} feeds its last output into e_{2,n2} and
/// the composite lists the feeder's remaining outputs before the receiver's.
int interleaving_sign(int n1, int n2);

/// A connected composite along `edges` parallel wires; zero unless edges == 1.
Frob1Elem frob1_compose_multi(const Frob1Elem& a, const Frob1Elem& b, int edges);

/// Three-vertex dioperadic graphs on (x, y, z):
///   chain: y.out0 -> x.in0 and z.out1 -> y.in1
///   fork:  z.out0 -> x.in0 and z.out1 -> y.in1
///   join:  y.out0 -> x.in0 and z.out1 -> x.in1
enum class ShapeKind { chain, fork, join };
struct Frob1Shape {
    ShapeKind kind;
    int in0;
    int out0;
    int in1;
    int out1;
};

/// True iff both ways of contracting the graph give the same element.
/// Throws std::invalid_argument for slots that do not fit the elements.
bool frob1_associativity_check(const Frob1Elem& x, const Frob1Elem& y, const Frob1Elem& z,
                               const Frob1Shape& shape);

/// Number of (triple, shape) cases checked and the number that failed, over all
/// shapes whose composite has m + n <= max_total.
struct SweepResult {
    long cases = 0;
    long failures = 0;
};
SweepResult frob1_associativity_sweep(int max_total);

/// c1 · 1 + cw · ω in H•(S¹).
struct HElem {
    Rat c1;
    Rat cw;
    static HElem one() { return {Rat(1), Rat(0)}; }
    static HElem omega() { return {Rat(0), Rat(1)}; }
    friend bool operator==(const HElem&, const HElem&) = default;
};

/// Formal sums of k-fold tensors of 1 (index 0) and ω (index 1).
class HTensor {
public:
    explicit HTensor(int arity) : arity_(arity) {}
    static HTensor of(const std::vector<HElem>& factors);

    int arity() const { return arity_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    Rat coeff(const std::vector<int>& t) const;
    HTensor& add(const std::vector<int>& t, const Rat& r);
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const HTensor&, const HTensor&) = default;
    friend HTensor operator+(const HTensor& a, const HTensor& b);
    friend HTensor operator-(const HTensor& a);

private:
    int arity_;
    std::map<std::vector<int>, Rat> terms_;
};

HElem h_mult(const HElem& a, const HElem& b);
/// Δ(1) = -1⊗ω + ω⊗1, Δ(ω) = ω⊗ω.
HTensor h_comult(const HElem& a);
/// id^{⊗slot} ⊗ Δ ⊗ id: Δ has degree 1 and passes the factors before `slot`.
HTensor h_apply_comult(const HTensor& t, int slot);
/// Multiplies factors slot and slot+1.
HTensor h_apply_mult(const HTensor& t, int slot);

/// Counts for the graph generators of the resolution at genus β.
struct GenStats {
    int m;
    int n;
    int beta;
    int n_mult;
    int n_comult;
    int coh_degree;
};
/// Throws std::invalid_argument if m < 1, n < 1, β < 0, or (m,n,β) = (1,1,0).
GenStats generator_stats(int m, int n, int beta);

}  // namespace qfrob
