#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qfrob/operation.hpp"

namespace qfrob {

/// The explicit quasilocal lifts of the Frobenius structure on C•(S¹).
struct LiftSet {
    CircleComplex complex;
    Operation mult;          // (2,1), degree 0
    Operation comult;        // (1,2), degree 1
    Operation associator;    // (3,1), degree -1
    Operation coassociator;  // (1,3), degree 1
    Operation frobeniator;   // (2,2), degree 0
    Operation d_gen;         // (2,1), degree -1
    Operation a_gen;         // (1,2), degree 0

    int n() const { return complex.n(); }
};

/// Generators of the resolution whose homotopy equations are checked. `b_gen` has
/// no lift; its right-hand side is the obstruction.
enum class Generator { associator, coassociator, frobeniator, d_gen, a_gen, b_gen };

/// The five generators that carry a lift, in weight order.
const std::vector<Generator>& homotopy_generators();
std::string_view generator_name(Generator g);
/// Throws std::invalid_argument for an unknown name.
Generator parse_generator(std::string_view name);

/// Throws std::invalid_argument for N < 5.
LiftSet build_lifts(int n_cells);

/// The lift attached to a generator. Throws std::invalid_argument for b_gen.
const Operation& lift_of(const LiftSet& lifts, Generator g);

/// Right-hand side of the homotopy equation, written out as a literal table.
Operation rhs_from_tables(Generator g, int n_cells);

/// Right-hand side assembled from compositions of the lower lifts.
Operation rhs_from_compositions(Generator g, const LiftSet& lifts);

/// True iff D(h) equals rhs exactly.
bool verify_homotopy(const Operation& h, const Operation& rhs);

/// The B right-hand side. Throws VerificationError unless it is -1/12·id, closed,
/// and acts by (-1/12, -1/12) on cohomology.
Operation b_obstruction(const LiftSet& lifts);

/// True iff (1 + c + c²) kills op on its inputs (or outputs), c the 3-cycle.
bool cyclic_sum_vanishes(const Operation& op, bool on_inputs);

/// Associator on inputs and coassociator on outputs.
bool s3_symmetry_check(const LiftSet& lifts);

}  // namespace qfrob
