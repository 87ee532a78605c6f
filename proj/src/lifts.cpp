#include "qfrob/lifts.hpp"

#include <array>
#include <stdexcept>

#include "qfrob/errors.hpp"

namespace qfrob {

namespace {

constexpr std::array<int, 2> kSides{-1, +1};

// The cells around vertex x: f_x, the edge on side s, and f_{x+s}.
struct Around {
    CellIndex f;
    CellIndex e_minus;
    CellIndex e_plus;
    CellIndex edge(int s) const { return s < 0 ? e_minus : e_plus; }
};

Around around(const CircleComplex& cx, int x) { return {cx.vertex(x), cx.edge(x - 1), cx.edge(x)}; }

// Adds r · (prefix ⊗ (g_{x-1/2} - g_{x+1/2}) ⊗ suffix) to the input row `in`.
void add_with_delta(Operation& op, const Tuple& in, const Tuple& prefix, const Around& a, const Tuple& suffix,
                    const Rat& r) {
    for (int s : kSides) {
        Tuple out = prefix;
        out.push_back(a.edge(s));
        out.insert(out.end(), suffix.begin(), suffix.end());
        op.add_entry(in, out, s < 0 ? r : -r);
    }
}

Operation make_mult(const CircleComplex& cx) {
    Operation op(cx, 2, 1, Degree(0));
    const Rat half(1, 2);
    for (int x = 0; x < cx.n(); ++x) {
        const auto a = around(cx, x);
        op.add_entry({a.f, a.f}, {a.f}, Rat(1));
        for (int s : kSides) {
            op.add_entry({a.f, a.edge(s)}, {a.edge(s)}, half);
            op.add_entry({a.edge(s), a.f}, {a.edge(s)}, half);
        }
    }
    return op;
}

Operation make_comult(const CircleComplex& cx) {
    Operation op(cx, 1, 2, Degree(1));
    const Rat half(1, 2);
    for (int x = 0; x < cx.n(); ++x) {
        const auto a = around(cx, x);
        for (int s : kSides) {
            op.add_entry({a.f}, {a.edge(s), a.f}, half);
            op.add_entry({a.f}, {a.f, a.edge(s)}, -half);
        }
        op.add_entry({a.e_plus}, {a.e_plus, a.e_plus}, Rat(1));
    }
    return op;
}

Operation make_associator(const CircleComplex& cx) {
    Operation op(cx, 3, 1, Degree(-1));
    for (int x = 0; x < cx.n(); ++x) {
        const auto a = around(cx, x);
        for (int s : kSides) {
            const auto e = a.edge(s);
            op.add_entry({e, e, a.f}, {e}, Rat(s, 12));
            op.add_entry({e, a.f, e}, {e}, Rat(s, 6));
            op.add_entry({a.f, e, e}, {e}, Rat(s, 12));
        }
    }
    return op;
}

Operation make_coassociator(const CircleComplex& cx) {
    Operation op(cx, 1, 3, Degree(1));
    for (int x = 0; x < cx.n(); ++x) {
        const auto a = around(cx, x);
        add_with_delta(op, {a.f}, {}, a, {a.f, a.f}, Rat(1, 12));
        add_with_delta(op, {a.f}, {a.f}, a, {a.f}, Rat(-1, 6));
        add_with_delta(op, {a.f}, {a.f, a.f}, a, {}, Rat(1, 12));
    }
    return op;
}

Operation make_frobeniator(const CircleComplex& cx) {
    Operation op(cx, 2, 2, Degree(0));
    for (int x = 0; x < cx.n(); ++x) {
        const auto a = around(cx, x);
        for (int s : kSides) op.add_entry({a.f, a.edge(s)}, {a.f, a.edge(s)}, Rat(-s, 4));
    }
    return op;
}

Operation make_d_gen(const CircleComplex& cx) {
    Operation op(cx, 2, 1, Degree(-1));
    for (int x = 0; x < cx.n(); ++x) op.add_entry({cx.edge(x), cx.edge(x)}, {cx.edge(x)}, Rat(-1, 12));
    return op;
}

Operation make_a_gen(const CircleComplex& cx) {
    Operation op(cx, 1, 2, Degree(0));
    for (int x = 0; x < cx.n(); ++x) op.add_entry({cx.vertex(x)}, {cx.vertex(x), cx.vertex(x)}, Rat(1, 12));
    return op;
}

}  // namespace

const std::vector<Generator>& homotopy_generators() {
    static const std::vector<Generator> gens{Generator::associator, Generator::coassociator, Generator::frobeniator,
                                             Generator::d_gen, Generator::a_gen};
    return gens;
}

std::string_view generator_name(Generator g) {
    switch (g) {
        case Generator::associator: return "associator";
        case Generator::coassociator: return "coassociator";
        case Generator::frobeniator: return "frobeniator";
        case Generator::d_gen: return "d_gen";
        case Generator::a_gen: return "a_gen";
        case Generator::b_gen: return "b_gen";
    }
    return "?";
}

Generator parse_generator(std::string_view name) {
    for (auto g : {Generator::associator, Generator::coassociator, Generator::frobeniator, Generator::d_gen,
                   Generator::a_gen, Generator::b_gen})
        if (generator_name(g) == name) return g;
    throw std::invalid_argument("unknown generator: " + std::string(name));
}

LiftSet build_lifts(int n_cells) {
    if (n_cells < 5) throw std::invalid_argument("build_lifts: need at least 5 cells");
    const CircleComplex cx(n_cells);
    return LiftSet{cx,
                   make_mult(cx),
                   make_comult(cx),
                   make_associator(cx),
                   make_coassociator(cx),
                   make_frobeniator(cx),
                   make_d_gen(cx),
                   make_a_gen(cx)};
}

const Operation& lift_of(const LiftSet& lifts, Generator g) {
    switch (g) {
        case Generator::associator: return lifts.associator;
        case Generator::coassociator: return lifts.coassociator;
        case Generator::frobeniator: return lifts.frobeniator;
        case Generator::d_gen: return lifts.d_gen;
        case Generator::a_gen: return lifts.a_gen;
        case Generator::b_gen: break;
    }
    throw std::invalid_argument("lift_of: b_gen has no lift");
}

Operation rhs_from_tables(Generator g, int n_cells) {
    if (n_cells < 5) throw std::invalid_argument("rhs_from_tables: need at least 5 cells");
    const CircleComplex cx(n_cells);
    switch (g) {
        case Generator::associator: {
            Operation op(cx, 3, 1, Degree(0));
            for (int x = 0; x < cx.n(); ++x) {
                const auto a = around(cx, x);
                for (int s : kSides) {
                    const auto e = a.edge(s);
                    const auto fs = cx.vertex(x + s);
                    op.add_entry({e, a.f, a.f}, {e}, Rat(1, 4));
                    op.add_entry({a.f, a.f, e}, {e}, Rat(-1, 4));
                    op.add_entry({e, a.f, fs}, {e}, Rat(-1, 4));
                    op.add_entry({a.f, fs, e}, {e}, Rat(1, 4));
                }
            }
            return op;
        }
        case Generator::coassociator: {
            Operation op(cx, 1, 3, Degree(2));
            for (int x = 0; x < cx.n(); ++x) {
                const auto a = around(cx, x);
                for (int s : kSides)
                    for (int t : kSides) {
                        const Rat sign(s == t ? 1 : -1);
                        op.add_entry({a.f}, {a.edge(s), a.edge(t), a.f}, Rat(-1, 4) * sign);
                        op.add_entry({a.f}, {a.f, a.edge(s), a.edge(t)}, Rat(1, 4) * sign);
                    }
            }
            return op;
        }
        case Generator::frobeniator: {
            Operation op(cx, 2, 2, Degree(1));
            for (int x = 0; x < cx.n(); ++x) {
                const auto a = around(cx, x);
                for (int s : kSides) {
                    op.add_entry({a.f, a.f}, {a.f, a.edge(s)}, Rat(-1, 4));
                    op.add_entry({a.f, cx.vertex(x + s)}, {a.f, a.edge(s)}, Rat(1, 4));
                    add_with_delta(op, {a.f, a.edge(s)}, {}, a, {a.edge(s)}, Rat(-s, 4));
                }
            }
            return op;
        }
        case Generator::d_gen: {
            Operation op(cx, 2, 1, Degree(0));
            for (int x = 0; x < cx.n(); ++x) {
                const auto a = around(cx, x);
                for (int s : kSides) {
                    op.add_entry({a.f, a.edge(s)}, {a.edge(s)}, Rat(s, 12));
                    op.add_entry({a.edge(s), a.f}, {a.edge(s)}, Rat(-s, 12));
                }
            }
            return op;
        }
        case Generator::a_gen: {
            Operation op(cx, 1, 2, Degree(1));
            for (int x = 0; x < cx.n(); ++x) {
                const auto a = around(cx, x);
                add_with_delta(op, {a.f}, {}, a, {a.f}, Rat(1, 12));
                add_with_delta(op, {a.f}, {a.f}, a, {}, Rat(1, 12));
            }
            return op;
        }
        case Generator::b_gen: return scale(id_op(cx), Rat(-1, 12));
    }
    throw std::invalid_argument("rhs_from_tables: unknown generator");
}

Operation rhs_from_compositions(Generator g, const LiftSet& L) {
    using W = std::vector<Wire>;
    switch (g) {
        case Generator::associator: {
            const auto left = compose(L.mult, L.mult, W{{0, 0}});
            const auto right =
                compose(L.mult, L.mult, W{{0, 1}}, std::vector<Leg>{Leg::outer(0), Leg::inner(0), Leg::inner(1)});
            return right - left;
        }
        case Generator::coassociator: {
            const auto left = compose(L.comult, L.comult, W{{0, 0}}, std::nullopt,
                                      std::vector<Leg>{Leg::outer(0), Leg::outer(1), Leg::inner(1)});
            const auto right = compose(L.comult, L.comult, W{{1, 0}});
            return scale(left + right, Rat(-1));
        }
        case Generator::frobeniator: {
            const auto straight = compose(L.comult, L.mult, W{{0, 0}});
            const auto zigzag = compose(L.mult, L.comult, W{{1, 0}});
            return straight - zigzag;
        }
        case Generator::d_gen: {
            const auto capped = compose(L.associator, L.comult, W{{0, 0}, {1, 1}});
            const auto joined = compose(L.mult, L.frobeniator, W{{0, 0}, {1, 1}});
            return scale(capped + joined, Rat(-1));
        }
        case Generator::a_gen: {
            const auto capped = compose(L.frobeniator, L.comult, W{{0, 0}, {1, 1}});
            const auto joined = compose(L.mult, L.coassociator, W{{1, 0}, {2, 1}});
            return joined - capped;
        }
        case Generator::b_gen: {
            const auto d_part = compose(L.d_gen, L.comult, W{{0, 0}, {1, 1}});
            const auto a_part = compose(L.mult, L.a_gen, W{{0, 0}, {1, 1}});
            const auto triple = compose(L.associator, L.coassociator, W{{0, 1}, {1, 2}, {2, 0}});
            return d_part - a_part + scale(triple, Rat(1, 3));
        }
    }
    throw std::invalid_argument("rhs_from_compositions: unknown generator");
}

bool verify_homotopy(const Operation& h, const Operation& rhs) { return commutator_with_d(h) == rhs; }

Operation b_obstruction(const LiftSet& lifts) {
    Operation b = rhs_from_compositions(Generator::b_gen, lifts);
    const Operation expected = scale(id_op(lifts.complex), Rat(-1, 12));
    if (b.m() != 1 || b.n() != 1 || b.degree() != Degree(0))
        throw VerificationError("b_obstruction: wrong shape", "arity/degree");
    if (auto diff = first_difference(b, expected)) throw VerificationError("b_obstruction: not -1/12·id", *diff);
    if (!commutator_with_d(b).is_zero())
        throw VerificationError("b_obstruction: not closed", commutator_with_d(b).describe());
    const auto [h0, h1] = cohomology_action_11(b);
    if (h0 != Rat(-1, 12) || h1 != Rat(-1, 12))
        throw VerificationError("b_obstruction: wrong cohomology action", h0.str() + ", " + h1.str());
    return b;
}

bool cyclic_sum_vanishes(const Operation& op, bool on_inputs) {
    const int k = on_inputs ? op.m() : op.n();
    if (k != 3) throw std::invalid_argument("cyclic_sum_vanishes: needs three slots");
    const Permutation c = Permutation::cycle(3);
    const Permutation c2 = c * c;
    auto act = [&](const Permutation& p) { return on_inputs ? permute_inputs(op, p) : permute_outputs(op, p); };
    return (op + act(c) + act(c2)).is_zero();
}

bool s3_symmetry_check(const LiftSet& lifts) {
    return cyclic_sum_vanishes(lifts.associator, true) && cyclic_sum_vanishes(lifts.coassociator, false);
}

}  // namespace qfrob
