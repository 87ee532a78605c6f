#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfrob/circle.hpp"
#include "qfrob/graded.hpp"
#include "qfrob/rational.hpp"

namespace qfrob {

/// Quasilocality radius. Always finite for operations on a finite complex;
/// `infinite()` exists for callers that bound radii over unbounded families.
struct QRadius {
    std::optional<int> value;

    static QRadius finite(int r) { return {r}; }
    static QRadius infinite() { return {std::nullopt}; }
    bool is_infinite() const { return !value.has_value(); }
    bool within(int ell) const { return value && *value <= ell; }
    friend bool operator==(const QRadius&, const QRadius&) = default;
};

/// Formal sparse sum of basis tensors of a fixed arity.
class Tensor {
public:
    explicit Tensor(int arity) : arity_(arity) {}

    int arity() const { return arity_; }
    const std::map<Tuple, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Tuple& t) const;
    Tensor& add(const Tuple& t, const Rat& r);

    /// v_0 ⊗ ... ⊗ v_{k-1} expanded on basis tuples.
    static Tensor product(const std::vector<Cochain>& factors);
    /// Reads an arity-1 tensor back as a cochain of the given degree.
    Cochain as_cochain(Degree degree) const;

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    int arity_;
    std::map<Tuple, Rat> terms_;
};

/// An m-to-n graded multilinear map on C•(S¹), stored as a sparse matrix from
/// input basis tuples to output basis tuples.
class Operation {
public:
    using Row = std::map<Tuple, Rat>;

    /// Throws std::invalid_argument for m < 1 or n < 1.
    Operation(const CircleComplex& complex, int m, int n, Degree p);

    /// The operation with the single entry in -> out of coefficient 1.
    static Operation matrix_unit(const CircleComplex& complex, const Tuple& in, const Tuple& out);

    const CircleComplex& complex() const { return complex_; }
    int m() const { return m_; }
    int n() const { return n_; }
    Degree degree() const { return p_; }

    const std::map<Tuple, Row>& entries() const { return entries_; }
    Rat entry(const Tuple& in, const Tuple& out) const;
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const;

    /// Accumulates r into the (in, out) entry. Throws std::invalid_argument on
    /// arity mismatch or if the entry has the wrong degree.
    Operation& add_entry(const Tuple& in, const Tuple& out, const Rat& r);

    /// Human-readable entry list, one "in -> coeff out" per line.
    std::string describe() const;

    friend bool operator==(const Operation&, const Operation&) = default;

private:
    void check_tuple(const Tuple& t, int arity, const char* what) const;

    CircleComplex complex_;
    int m_;
    int n_;
    Degree p_;
    std::map<Tuple, Row> entries_;
};

Operation id_op(const CircleComplex& complex);
/// The differential of C•(S¹) as a (1,1) operation of degree 1.
Operation d_op(const CircleComplex& complex);
Operation zero_op(const CircleComplex& complex, int m, int n, Degree p);

/// Multilinear extension of the entry table. Throws std::invalid_argument on
/// arity mismatch.
Tensor apply(const Operation& op, const Tensor& input);
Tensor apply(const Operation& op, const std::vector<Cochain>& factors);

/// Calls `emit(in', out', coefficient)` for every term that the single entry
/// (in -> out, c) of a degree-p operation contributes to d∘P - (-1)^p P∘d.
using EntrySink = std::function<void(const Tuple&, const Tuple&, const Rat&)>;
void for_each_d_term(const CircleComplex& complex, Degree p, const Tuple& in, const Tuple& out,
                     const Rat& c, const EntrySink& emit);

/// D(P) = d∘P - (-1)^p P∘d, with d acting on tensor powers by the graded Leibniz rule.
Operation commutator_with_d(const Operation& op);

/// P∘σ⁻¹ on inputs: input factor i is moved to slot σ(i), with its Koszul sign.
Operation permute_inputs(const Operation& op, const Permutation& sigma);
/// σ∘P on outputs: output factor j is moved to slot σ(j), with its Koszul sign.
Operation permute_outputs(const Operation& op, const Permutation& sigma);

/// A free leg of a two-vertex composite: a slot of the inner (Q) or outer (P) box.
struct Leg {
    enum class Box { inner, outer };
    Box box;
    int slot;

    static Leg inner(int s) { return {Box::inner, s}; }
    static Leg outer(int s) { return {Box::outer, s}; }
    friend bool operator==(const Leg&, const Leg&) = default;
};

/// One wire: output `from_inner` of Q feeds input `to_outer` of P.
struct Wire {
    int from_inner;
    int to_outer;
};

/// Properadic composite P∘Q along the given wires. The result's inputs are Q's
/// inputs and P's unwired inputs; its outputs are Q's unwired outputs and P's
/// outputs. By default these appear as [Q inputs, P free inputs] and
/// [Q free outputs, P outputs], each block in slot order; explicit orders list
/// every free leg exactly once. Factors are moved with their Koszul signs and
/// P passes over Q's free outputs with sign (-1)^{deg P · deg}. Throws
/// std::invalid_argument for empty wiring, slot collisions, complex mismatch,
/// or malformed orders.
Operation compose(const Operation& outer, const Operation& inner, const std::vector<Wire>& wires,
                  const std::optional<std::vector<Leg>>& input_order = std::nullopt,
                  const std::optional<std::vector<Leg>>& output_order = std::nullopt);

/// Throws std::invalid_argument on arity, degree or complex mismatch.
Operation add(const Operation& a, const Operation& b);
Operation scale(const Operation& a, const Rat& r);
Operation operator+(const Operation& a, const Operation& b);
Operation operator-(const Operation& a, const Operation& b);
Operation operator*(const Rat& r, const Operation& a);

/// Conjugation by the rotation x -> x + steps.
Operation rotate(const Operation& op, int steps);

QRadius quasilocality_radius(const Operation& op);

/// The first entry (in lexicographic tuple order) where a and b differ,
/// rendered as "in -> out: a vs b"; nullopt if they are equal.
std::optional<std::string> first_difference(const Operation& a, const Operation& b);

/// Scalars by which a closed degree-0 (1,1) operation acts on H⁰ and H¹.
/// Throws ContractError if the operation is not of that kind.
std::pair<Rat, Rat> cohomology_action_11(const Operation& op);

}  // namespace qfrob
