#include "qfrob/suites.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "qfrob/derham.hpp"
#include "qfrob/errors.hpp"
#include "qfrob/lifts.hpp"
#include "qfrob/qloc.hpp"
#include "qfrob/random_ops.hpp"

namespace qfrob {

namespace {

template <typename Body>
Report timed(const std::string& name, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r(name);
    body(r);
    r.set_duration(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return r;
}

std::string radius_str(const Operation& op) { return std::to_string(*quasilocality_radius(op).value); }

std::string dims_str(const std::map<int, int>& dims) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [p, d] : dims) {
        if (!d) continue;
        os << (first ? "" : ", ") << p << ":" << d;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

std::string render(const HTensor& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : t.terms()) {
        Rat mag = c.sign() < 0 ? -c : c;
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        if (mag != Rat(1)) os << mag << "·";
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "⊗" : "") << (idx[i] ? "ω" : "1");
        first = false;
    }
    return os.str();
}

Report suite_verify_discrete(const SuiteOptions& o) {
    return timed("verify-discrete", [&](Report& r) {
        r.parameters() = {{"cells", o.cells}, {"seed", o.seed}};
        const LiftSet L = build_lifts(o.cells);
        r.exact("radius(mult)", "0", radius_str(L.mult));
        r.exact("radius(comult)", "0", radius_str(L.comult));
        for (auto g : homotopy_generators()) {
            const std::string name(generator_name(g));
            const Operation& h = lift_of(L, g);
            r.flag("radius(" + name + ") <= 1", quasilocality_radius(h).within(1), radius_str(h));
            const Operation table = rhs_from_tables(g, o.cells);
            const Operation dh = commutator_with_d(h);
            r.flag("D(" + name + ") == table", dh == table, first_difference(dh, table).value_or(""));
            const Operation comp = rhs_from_compositions(g, L);
            r.flag("table == compositions for " + name, comp == table, first_difference(comp, table).value_or(""));
        }
        const Operation b = rhs_from_compositions(Generator::b_gen, L);
        const Operation b_table = rhs_from_tables(Generator::b_gen, o.cells);
        r.flag("B compositions == -1/12·id", b == b_table, first_difference(b, b_table).value_or(""));
        r.flag("associator and coassociator cyclic sums vanish", s3_symmetry_check(L));
        bool invariant = true;
        for (const Operation* op : {&L.mult, &L.comult, &L.associator, &L.coassociator, &L.frobeniator, &L.d_gen,
                                    &L.a_gen})
            invariant = invariant && rotate(*op, 1) == *op;
        r.flag("lifts are rotation invariant", invariant);

        Rng rng(o.seed);
        const CircleComplex cx(o.cells);
        int d2_bad = 0, leibniz_bad = 0;
        constexpr int kCases = 50;
        for (int i = 0; i < kCases; ++i) {
            const int m = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
            const Degree p(static_cast<int>(rng() % static_cast<unsigned>(m + n + 1)) - m);
            const Operation P = random_operation(cx, m, n, p, 6, rng);
            if (!commutator_with_d(commutator_with_d(P)).is_zero()) ++d2_bad;
            auto pr = random_composable_pair(cx, 2, 1, rng);
            const auto& Po = pr.outer;
            const auto& Q = pr.inner;
            const Operation lhs = commutator_with_d(compose(Po, Q, {pr.wire}));
            const Operation rhs = compose(commutator_with_d(Po), Q, {pr.wire}) +
                                  scale(compose(Po, commutator_with_d(Q), {pr.wire}),
                                        Rat(parity_sign(Po.degree().value)));
            if (!(lhs == rhs)) ++leibniz_bad;
        }
        r.exact("D² = 0 on " + std::to_string(kCases) + " random operations", "0 failures",
                std::to_string(d2_bad) + " failures");
        r.exact("Leibniz rule on " + std::to_string(kCases) + " random compositions", "0 failures",
                std::to_string(leibniz_bad) + " failures");
    });
}

Report suite_homology_model(const SuiteOptions&) {
    return timed("verify-homology-model", [&](Report& r) {
        const HElem one = HElem::one(), w = HElem::omega();
        const std::vector<std::pair<std::string, std::pair<HElem, HElem>>> inputs{
            {"1⊗1", {one, one}}, {"1⊗ω", {one, w}}, {"ω⊗1", {w, one}}, {"ω⊗ω", {w, w}}};
        const std::map<std::string, std::pair<std::string, std::string>> expected{
            {"1⊗1", {"-1⊗ω + ω⊗1", "-1⊗ω + ω⊗1"}},
            {"1⊗ω", {"ω⊗ω", "ω⊗ω"}},
            {"ω⊗1", {"ω⊗ω", "ω⊗ω"}},
            {"ω⊗ω", {"0", "0"}}};
        for (const auto& [label, ab] : inputs) {
            const HTensor left = h_comult(h_mult(ab.first, ab.second));
            const HTensor right = h_apply_mult(h_apply_comult(HTensor::of({ab.first, ab.second}), 0), 1);
            r.exact("Δ∘mult on " + label, expected.at(label).first, render(left));
            r.exact("(id⊗mult)∘(Δ⊗id) on " + label, expected.at(label).second, render(right));
        }
        for (const auto& [label, x] : {std::pair{std::string("1"), one}, std::pair{std::string("ω"), w}}) {
            const HTensor d = h_comult(x);
            const HTensor left = h_apply_comult(d, 0);
            const HTensor right = h_apply_comult(d, 1);
            r.exact("(Δ⊗id)∘Δ on " + label, label == "1" ? "1⊗ω⊗ω - ω⊗1⊗ω + ω⊗ω⊗1" : "ω⊗ω⊗ω", render(left));
            r.exact("(id⊗Δ)∘Δ on " + label, label == "1" ? "-1⊗ω⊗ω + ω⊗1⊗ω - ω⊗ω⊗1" : "-ω⊗ω⊗ω", render(right));
            r.exact("coassociativity sum on " + label, "0", render(left + right));
        }
        r.exact("ω·ω", "0", h_mult(w, w) == HElem{} ? "0" : "nonzero");
    });
}

Report suite_frob1(const SuiteOptions&) {
    return timed("verify-frob1", [&](Report& r) {
        const auto a = Frob1Elem::make(1, 2, Rat(1));
        const auto b = Frob1Elem::make(2, 1, Rat(1));
        const auto std_c = frob1_compose(a, 0, b, 0);
        r.exact("standard e_{2,1} into e_{1,2}", "+1·e_{2,2}",
                (std_c.coeff.sign() > 0 ? "+" : "") + std_c.coeff.str() + "·e_{" + std::to_string(std_c.m) + "," +
                    std::to_string(std_c.n) + "}");
        int sign_bad = 0;
        for (int n1 = 1; n1 <= 4; ++n1)
            for (int n2 = 1; n2 <= 4; ++n2)
                if (interleaving_sign(n1, n2) != parity_sign(n1 * (n2 - 1))) ++sign_bad;
        r.exact("interleaving sign (-1)^{n1(n2-1)} for n1, n2 <= 4", "0 mismatches",
                std::to_string(sign_bad) + " mismatches");
        r.exact("two-edge composite vanishes", "0",
                frob1_compose_multi(Frob1Elem::make(2, 2, Rat(1)), Frob1Elem::make(2, 2, Rat(1)), 2).coeff.str());
        const auto sweep = frob1_associativity_sweep(8);
        r.exact("associativity over " + std::to_string(sweep.cases) + " shapes with m+n <= 8", "0 failures",
                std::to_string(sweep.failures) + " failures");
        auto stats = [](int m, int n, int beta) {
            const auto s = generator_stats(m, n, beta);
            return "(" + std::to_string(s.n_mult) + "," + std::to_string(s.n_comult) + "," +
                   std::to_string(s.coh_degree) + ")";
        };
        r.exact("generator_stats(1,1,2)", "(2,2,-1)", stats(1, 1, 2));
        r.exact("generator_stats(2,1,0)", "(1,0,0)", stats(2, 1, 0));
        r.exact("generator_stats(1,2,1)", "(1,2,0)", stats(1, 2, 1));
    });
}

Report suite_qloc_dims(const SuiteOptions& o) {
    return timed("qloc-dims", [&](Report& r) {
        r.parameters() = {{"cells", o.cells}, {"m", o.m}, {"n", o.n}, {"ell", o.ell}};
        try {
            const auto res = cohomology_dims(o.cells, o.m, o.n, o.ell);
            r.exact("dims", dims_str(expected_qloc_dims(o.m, o.n)), dims_str(res.dims));
            bool d2 = true;
            for (int p = -o.m; p + 2 <= o.n; ++p)
                d2 = d2 && d_squared_vanishes(qloc_basis(o.cells, o.m, o.n, o.ell, p),
                                              qloc_basis(o.cells, o.m, o.n, o.ell, p + 1),
                                              qloc_basis(o.cells, o.m, o.n, o.ell, p + 2));
            r.flag("D² = 0 on the quasilocal complex", d2);
            r.flag("quasilocal subspace closed under D", true);
        } catch (const VerificationError& e) {
            r.flag("quasilocal subspace closed under D", false, e.detail());
        }
    });
}

Report suite_derham(const SuiteOptions& o) {
    return timed("verify-derham", [&](Report& r) {
        r.parameters() = {{"epsilon", o.epsilon}, {"step_div", o.step_div}};
        for (auto shape : {BumpShape::mollifier, BumpShape::steep}) {
            const std::string tag = std::string(bump_shape_name(shape)) + ": ";
            const Grid1D g = Grid1D::for_epsilon(o.epsilon, o.step_div);
            const Profile phi = bump_profile(o.epsilon, g, shape);
            const Profile F = primitive(phi);
            const auto mom = moment_checks(phi, F);
            r.approx(tag + "∫φF", 0.5, mom.m1, 1e-8);
            r.approx(tag + "∫φF²", 1.0 / 3.0, mom.m2, 1e-8);
            const auto u0 = u_integrals(0.0, phi, F);
            r.approx(tag + "A(0)", 1.0, u0.a, 1e-8);
            r.approx(tag + "B", -0.5, u0.b, 1e-8);
            double worst = 0.0;
            for (double t : {-0.8, -0.35, 0.0, 0.4, 0.85}) {
                const double y = t * o.epsilon;
                worst = std::max(worst, std::abs(u_integrals(y, phi, F).c + (1.0 - F(y))));
            }
            r.approx(tag + "max |C(y) + 1 - F(y)| at 5 points", 0.0, worst, 1e-8);
            const auto mu = mu_total_and_halfplane(phi, F);
            r.approx(tag + "∫∫μ", 0.0, mu.total, 1e-6);
            r.approx(tag + "half-plane ∫∫μ", -1.0 / 12.0, mu.half, 1e-6);
            const auto direct = mu_direct(phi, F);
            r.approx(tag + "direct half-plane ∫∫μ", -1.0 / 12.0, direct.half, 1e-4);
            r.approx(tag + "direct ∫∫μ", 0.0, direct.full, 1e-4);
        }
    });
}

Report suite_obstruction(const SuiteOptions& o) {
    return timed("obstruction", [&](Report& r) {
        r.parameters() = {{"cells", o.cells}};
        const LiftSet L = build_lifts(o.cells);
        try {
            const Operation b = b_obstruction(L);
            const auto [h0, h1] = cohomology_action_11(b);
            r.exact("h0", "-1/12", h0.str());
            r.exact("h1", "-1/12", h1.str());
            const CircleComplex& cx = L.complex;
            r.exact("B(f0)", "-1/12", b.entry({cx.vertex(0)}, {cx.vertex(0)}).str());
            r.exact("B(g1/2)", "-1/12", b.entry({cx.edge(0)}, {cx.edge(0)}).str());
            r.flag("B acts nontrivially on cohomology, hence is not exact", !(h0.is_zero() && h1.is_zero()));
        } catch (const VerificationError& e) {
            r.flag("B obstruction equals -1/12·id", false, e.detail());
        }
    });
}

Report suite_all(const SuiteOptions& o) {
    return timed("all", [&](Report& r) {
        r.parameters() = {{"cells", o.cells}, {"ell", o.ell}, {"epsilon", o.epsilon}, {"step_div", o.step_div},
                          {"seed", o.seed},   {"m", o.m},     {"n", o.n}};
        for (auto suite : {suite_verify_discrete, suite_homology_model, suite_frob1, suite_qloc_dims, suite_derham,
                           suite_obstruction}) {
            r.add_child(suite(o));
            if (o.fail_fast && !r.children().back().pass()) break;
        }
    });
}

}  // namespace qfrob
