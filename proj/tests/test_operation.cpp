#include <doctest.h>

#include <stdexcept>

#include "qfrob/errors.hpp"
#include "qfrob/lifts.hpp"
#include "qfrob/random_ops.hpp"

using namespace qfrob;

namespace {

Cochain basis(CellIndex c) {
    Cochain x(c.degree());
    x.add(c, Rat(1));
    return x;
}

}  // namespace

TEST_SUITE("operation") {
    TEST_CASE("identity") {
        const CircleComplex cx(6);
        const Operation id = id_op(cx);
        CHECK(apply(id, {basis(cx.vertex(0))}).as_cochain(Degree(0)) == basis(cx.vertex(0)));
        CHECK(apply(id, {basis(cx.edge(0))}).as_cochain(Degree(1)) == basis(cx.edge(0)));
        CHECK(quasilocality_radius(id) == QRadius::finite(0));
        CHECK(commutator_with_d(id).is_zero());
    }

    TEST_CASE("apply") {
        const auto L = build_lifts(6);
        const auto& cx = L.complex;
        const Tensor ff = apply(L.mult, {basis(cx.vertex(0)), basis(cx.vertex(0))});
        CHECK(ff.coeff({cx.vertex(0)}) == Rat(1));
        CHECK(ff.terms().size() == 1);
        CHECK(apply(L.mult, {basis(cx.vertex(0)), basis(cx.vertex(1))}).is_zero());
        CHECK(apply(zero_op(cx, 2, 1, Degree(0)), {cx.unit(), cx.unit()}).is_zero());
        CHECK_THROWS_AS(apply(L.mult, {cx.unit()}), std::invalid_argument);
        // the unit is a unit for the cellular product
        const Tensor u = apply(L.mult, {cx.unit(), cx.unit()});
        CHECK(u.as_cochain(Degree(0)) == cx.unit());
    }

    TEST_CASE("entries are validated against the declared degree") {
        const CircleComplex cx(5);
        Operation op(cx, 1, 1, Degree(0));
        CHECK_THROWS_AS(op.add_entry({cx.vertex(0)}, {cx.edge(0)}, Rat(1)), std::invalid_argument);
        CHECK_THROWS_AS(op.add_entry({cx.vertex(0), cx.vertex(0)}, {cx.vertex(0)}, Rat(1)), std::invalid_argument);
        CHECK_THROWS_AS(op.add_entry({CellIndex{10}}, {CellIndex{10}}, Rat(1)), std::invalid_argument);
        CHECK_THROWS_AS(Operation(cx, 0, 1, Degree(0)), std::invalid_argument);
        op.add_entry({cx.vertex(0)}, {cx.vertex(0)}, Rat(2));
        op.add_entry({cx.vertex(0)}, {cx.vertex(0)}, Rat(-2));
        CHECK(op.is_zero());
    }

    TEST_CASE("commutator with d") {
        const auto L = build_lifts(5);
        const auto& cx = L.complex;
        CHECK(commutator_with_d(L.mult).is_zero());
        CHECK(commutator_with_d(L.comult).is_zero());
        const Operation da = commutator_with_d(L.associator);
        CHECK(da.degree() == Degree(0));
        for (int x = 0; x < 5; ++x) {
            CHECK(da.entry({cx.edge(x), cx.vertex(x), cx.vertex(x)}, {cx.edge(x)}) == Rat(1, 4));
            CHECK(da.entry({cx.edge(x - 1), cx.vertex(x), cx.vertex(x)}, {cx.edge(x - 1)}) == Rat(1, 4));
        }
        CHECK(commutator_with_d(d_op(cx)).is_zero());
    }

    TEST_CASE("permutations") {
        const CircleComplex cx(6);
        Operation op(cx, 1, 2, Degree(2));
        op.add_entry({cx.vertex(0)}, {cx.edge(0), cx.edge(1)}, Rat(1));
        const Operation swapped = permute_outputs(op, Permutation::transposition(2, 0, 1));
        CHECK(swapped.entry({cx.vertex(0)}, {cx.edge(1), cx.edge(0)}) == Rat(-1));
        CHECK(swapped.nnz() == 1);
        const auto L = build_lifts(6);
        CHECK(permute_inputs(L.mult, Permutation::identity(2)) == L.mult);
        CHECK(permute_inputs(L.mult, Permutation::transposition(2, 0, 1)) == L.mult);
        CHECK_THROWS_AS(permute_inputs(L.mult, Permutation::identity(3)), std::invalid_argument);
        CHECK_THROWS_AS(permute_outputs(L.mult, Permutation::identity(2)), std::invalid_argument);
    }

    TEST_CASE("composition") {
        const auto L = build_lifts(6);
        const auto& cx = L.complex;
        const Operation mm = compose(L.mult, L.mult, {{0, 0}});
        CHECK(mm.m() == 3);
        CHECK(mm.entry({cx.vertex(0), cx.vertex(0), cx.vertex(0)}, {cx.vertex(0)}) == Rat(1));
        CHECK(compose(d_op(cx), id_op(cx), {{0, 0}}) == d_op(cx));
        CHECK(compose(id_op(cx), d_op(cx), {{0, 0}}) == d_op(cx));
        // the two wirings of the Frobenius shape differ by the frobeniator target
        const Operation straight = compose(L.comult, L.mult, {{0, 0}});
        const Operation zigzag = compose(L.mult, L.comult, {{1, 0}});
        const Operation target = rhs_from_tables(Generator::frobeniator, 6);
        CHECK(straight - zigzag == target);
        const auto f = cx.vertex(2);
        CHECK(target.entry({f, f}, {f, cx.edge(1)}) == Rat(-1, 4));
        CHECK(target.entry({f, f}, {f, cx.edge(2)}) == Rat(-1, 4));
    }

    TEST_CASE("composition argument errors") {
        const auto L = build_lifts(5);
        CHECK_THROWS_AS(compose(L.mult, L.mult, {}), std::invalid_argument);
        CHECK_THROWS_AS(compose(L.mult, L.comult, {{0, 0}, {1, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(compose(L.mult, L.comult, {{0, 0}, {0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(compose(L.mult, L.mult, {{1, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(compose(L.mult, L.mult, {{0, 0}}, std::vector<Leg>{Leg::inner(0), Leg::inner(1)}),
                        std::invalid_argument);
        CHECK_THROWS_AS(compose(L.mult, L.mult, {{0, 0}},
                                std::vector<Leg>{Leg::inner(0), Leg::inner(0), Leg::outer(1)}),
                        std::invalid_argument);
        const auto other = build_lifts(6);
        CHECK_THROWS_AS(compose(L.mult, other.mult, {{0, 0}}), std::invalid_argument);
    }

    TEST_CASE("explicit leg orders agree with permuting the default composite") {
        const auto L = build_lifts(6);
        const Operation dflt = compose(L.mult, L.mult, {{0, 1}});
        const Operation ordered =
            compose(L.mult, L.mult, {{0, 1}}, std::vector<Leg>{Leg::outer(0), Leg::inner(0), Leg::inner(1)});
        CHECK(ordered == permute_inputs(dflt, Permutation({1, 2, 0})));
        const Operation outs = compose(L.comult, L.comult, {{0, 0}}, std::nullopt,
                                       std::vector<Leg>{Leg::outer(0), Leg::outer(1), Leg::inner(1)});
        CHECK(outs == permute_outputs(compose(L.comult, L.comult, {{0, 0}}), Permutation({2, 0, 1})));
    }

    TEST_CASE("linear structure") {
        const auto L = build_lifts(5);
        const auto& cx = L.complex;
        CHECK(add(L.mult, scale(L.mult, Rat(-1))).is_zero());
        CHECK(scale(L.mult, Rat(2)).entry({cx.vertex(0), cx.vertex(0)}, {cx.vertex(0)}) == Rat(2));
        CHECK(scale(L.mult, Rat(0)).is_zero());
        CHECK_THROWS_AS(add(L.mult, L.d_gen), std::invalid_argument);
        CHECK_THROWS_AS(add(L.mult, L.frobeniator), std::invalid_argument);
    }

    TEST_CASE("quasilocality radius") {
        const auto L = build_lifts(8);
        CHECK(quasilocality_radius(L.mult) == QRadius::finite(0));
        CHECK(quasilocality_radius(L.comult) == QRadius::finite(0));
        CHECK(quasilocality_radius(L.frobeniator) == QRadius::finite(1));
        CHECK(quasilocality_radius(L.associator).within(1));
        CHECK(quasilocality_radius(rhs_from_tables(Generator::frobeniator, 8)).within(1));
        CHECK(quasilocality_radius(zero_op(L.complex, 2, 2, Degree(0))) == QRadius::finite(0));
        CHECK(quasilocality_radius(d_op(L.complex)) == QRadius::finite(0));
        CHECK(QRadius::infinite().is_infinite());
        CHECK_FALSE(QRadius::infinite().within(100));
    }

    TEST_CASE("the composition radius can exceed r + r' + 1") {
        // P: f_{-1} ⊗ f_2 -> g_{1/2} has radius 1, Q: f_2 -> f_2 ⊗ g_{5/2} has radius 0,
        // yet the free input f_{-1} of P ends up three cells from the free output g_{5/2} of Q.
        const CircleComplex cx(12);
        Operation P(cx, 2, 1, Degree(1));
        P.add_entry({cx.vertex(-1), cx.vertex(2)}, {cx.edge(0)}, Rat(1));
        Operation Q(cx, 1, 2, Degree(1));
        Q.add_entry({cx.vertex(2)}, {cx.vertex(2), cx.edge(2)}, Rat(1));
        REQUIRE(quasilocality_radius(P) == QRadius::finite(1));
        REQUIRE(quasilocality_radius(Q) == QRadius::finite(0));
        const Operation PQ = compose(P, Q, {{0, 1}});
        CHECK_FALSE(PQ.is_zero());
        CHECK(quasilocality_radius(PQ) == QRadius::finite(3));
    }

    TEST_CASE("composition radius obeys 2(r + r' + 1) and operadic wiring obeys r + r'") {
        Rng rng(99);
        const CircleComplex cx(14);
        for (int i = 0; i < 300; ++i) {
            const auto pr = random_composable_pair(cx, 2, 2, rng);
            const int rp = *quasilocality_radius(pr.outer).value;
            const int rq = *quasilocality_radius(pr.inner).value;
            const int r = *quasilocality_radius(compose(pr.outer, pr.inner, {pr.wire})).value;
            REQUIRE(r <= 2 * (rp + rq + 1));
            if (pr.outer.m() == 1 || pr.inner.n() == 1) REQUIRE(r <= rp + rq);
        }
    }

    TEST_CASE("differentiation does not increase the radius") {
        Rng rng(5);
        const CircleComplex cx(10);
        for (int i = 0; i < 200; ++i) {
            const int r = static_cast<int>(rng() % 3);
            const Operation P = random_operation(cx, 1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2),
                                                 Degree(0), 5, rng, r);
            REQUIRE(*quasilocality_radius(commutator_with_d(P)).value <= *quasilocality_radius(P).value);
        }
    }

    TEST_CASE("action on cohomology") {
        const CircleComplex cx(7);
        CHECK(cohomology_action_11(id_op(cx)) == std::pair{Rat(1), Rat(1)});
        Rng rng(11);
        for (int i = 0; i < 50; ++i) {
            const Operation h = random_operation(cx, 1, 1, Degree(-1), 4, rng);
            REQUIRE(cohomology_action_11(commutator_with_d(h)) == std::pair{Rat(0), Rat(0)});
            const Operation h2 = random_operation(cx, 1, 1, Degree(-1), 4, rng);
            const Operation sum = scale(id_op(cx), Rat(3)) + commutator_with_d(h2);
            REQUIRE(cohomology_action_11(sum) == std::pair{Rat(3), Rat(3)});
        }
        CHECK_THROWS_AS(cohomology_action_11(d_op(cx)), ContractError);
        const auto L = build_lifts(7);
        CHECK_THROWS_AS(cohomology_action_11(L.mult), ContractError);
        Operation open(cx, 1, 1, Degree(0));
        open.add_entry({cx.vertex(0)}, {cx.vertex(0)}, Rat(1));
        CHECK_THROWS_AS(cohomology_action_11(open), ContractError);
    }

    TEST_CASE("rotation") {
        const auto L = build_lifts(7);
        CHECK(rotate(L.associator, 1) == L.associator);
        CHECK(rotate(L.coassociator, 3) == L.coassociator);
        Operation single = Operation::matrix_unit(L.complex, {L.complex.vertex(0)}, {L.complex.vertex(0)});
        CHECK_FALSE(rotate(single, 1) == single);
        CHECK(rotate(rotate(single, 3), 4) == single);
    }
}
