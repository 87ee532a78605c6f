#include "qfrob/frob1.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qfrob {

Frob1Elem Frob1Elem::make(int m, int n, const Rat& coeff) {
    if (m < 1 || n < 1) throw std::invalid_argument("Frob1Elem: arities must be positive");
    return {m, n, (m == 1 && n == 1) ? Rat(0) : coeff};
}

Frob1Elem frob1_compose(const Frob1Elem& a, int a_input, const Frob1Elem& b, int b_output,
                        const Permutation& out_perm) {
    if (a_input < 0 || a_input >= a.m) throw std::invalid_argument("frob1_compose: input slot out of range");
    if (b_output < 0 || b_output >= b.n) throw std::invalid_argument("frob1_compose: output slot out of range");
    const int m = a.m + b.m - 1;
    const int n = a.n + b.n - 1;
    if (static_cast<int>(out_perm.size()) != n)
        throw std::invalid_argument("frob1_compose: output permutation has the wrong size");
    // outputs carry the sign representation: bring b's wired output to the front, then reorder
    const int sign = parity_sign(b_output) * out_perm.sign();
    return Frob1Elem::make(m, n, a.coeff * b.coeff * Rat(sign));
}

Frob1Elem frob1_compose(const Frob1Elem& a, int a_input, const Frob1Elem& b, int b_output) {
    return frob1_compose(a, a_input, b, b_output, Permutation::identity(static_cast<std::size_t>(a.n + b.n - 1)));
}

int interleaving_sign(int n1, int n2) {
    const auto a = Frob1Elem::make(2, n2, Rat(1));
    const auto b = Frob1Elem::make(2, n1 + 1, Rat(1));
    std::vector<int> images;
    for (int i = 0; i < n2; ++i) images.push_back(n1 + i);
    for (int j = 0; j < n1; ++j) images.push_back(j);
    return frob1_compose(a, 0, b, n1, Permutation(images)).coeff.sign();
}

Frob1Elem frob1_compose_multi(const Frob1Elem& a, const Frob1Elem& b, int edges) {
    if (edges < 1 || edges > a.m || edges > b.n)
        throw std::invalid_argument("frob1_compose_multi: edge count does not fit the arities");
    if (edges == 1) return frob1_compose(a, 0, b, 0);
    return Frob1Elem::make(a.m + b.m - edges, a.n + b.n - edges, Rat(0));
}

namespace {

using Label = std::pair<int, int>;  // (vertex, local slot)

struct Labeled {
    Frob1Elem e;
    std::vector<Label> ins;
    std::vector<Label> outs;
};

Labeled vertex(const Frob1Elem& e, int id) {
    Labeled l{e, {}, {}};
    for (int i = 0; i < e.m; ++i) l.ins.emplace_back(id, i);
    for (int j = 0; j < e.n; ++j) l.outs.emplace_back(id, j);
    return l;
}

int index_of(const std::vector<Label>& v, Label l) {
    auto it = std::find(v.begin(), v.end(), l);
    if (it == v.end()) throw std::invalid_argument("frob1 shape: slot does not exist");
    return static_cast<int>(it - v.begin());
}

Labeled compose_labeled(const Labeled& a, Label a_in, const Labeled& b, Label b_out) {
    const int ai = index_of(a.ins, a_in);
    const int bo = index_of(b.outs, b_out);
    Labeled r{frob1_compose(a.e, ai, b.e, bo), {}, a.outs};
    for (int k = 0; k < static_cast<int>(b.outs.size()); ++k)
        if (k != bo) r.outs.push_back(b.outs[static_cast<std::size_t>(k)]);
    r.ins = a.ins;
    r.ins.erase(r.ins.begin() + ai);
    r.ins.insert(r.ins.begin() + ai, b.ins.begin(), b.ins.end());
    return r;
}

// Coefficient with outputs sorted by label.
Rat canonical_coeff(const Labeled& l) {
    auto sorted = l.outs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> images;
    for (const auto& o : l.outs) images.push_back(index_of(sorted, o));
    return l.e.coeff * Rat(Permutation(images).sign());
}

}  // namespace

bool frob1_associativity_check(const Frob1Elem& x, const Frob1Elem& y, const Frob1Elem& z,
                               const Frob1Shape& s) {
    const Labeled X = vertex(x, 0), Y = vertex(y, 1), Z = vertex(z, 2);
    Rat first, second;
    switch (s.kind) {
        case ShapeKind::chain: {
            const auto xy = compose_labeled(X, {0, s.in0}, Y, {1, s.out0});
            first = canonical_coeff(compose_labeled(xy, {1, s.in1}, Z, {2, s.out1}));
            const auto yz = compose_labeled(Y, {1, s.in1}, Z, {2, s.out1});
            second = canonical_coeff(compose_labeled(X, {0, s.in0}, yz, {1, s.out0}));
            break;
        }
        case ShapeKind::fork: {
            if (s.out0 == s.out1) throw std::invalid_argument("frob1 shape: fork reuses an output");
            const auto xz = compose_labeled(X, {0, s.in0}, Z, {2, s.out0});
            first = canonical_coeff(compose_labeled(Y, {1, s.in1}, xz, {2, s.out1}));
            const auto yz = compose_labeled(Y, {1, s.in1}, Z, {2, s.out1});
            second = canonical_coeff(compose_labeled(X, {0, s.in0}, yz, {2, s.out0}));
            second *= Rat(parity_sign(x.degree().value * y.degree().value));
            break;
        }
        case ShapeKind::join: {
            if (s.in0 == s.in1) throw std::invalid_argument("frob1 shape: join reuses an input");
            const auto xy = compose_labeled(X, {0, s.in0}, Y, {1, s.out0});
            first = canonical_coeff(compose_labeled(xy, {0, s.in1}, Z, {2, s.out1}));
            const auto xz = compose_labeled(X, {0, s.in1}, Z, {2, s.out1});
            second = canonical_coeff(compose_labeled(xz, {0, s.in0}, Y, {1, s.out0}));
            second *= Rat(parity_sign(y.degree().value * z.degree().value));
            break;
        }
    }
    return first == second;
}

SweepResult frob1_associativity_sweep(int max_total) {
    SweepResult res;
    // the composite of three vertices along two wires has m + n = (sum of all arities) - 4
    const int budget = max_total + 4;
    const int hi = budget - 5;
    for (int xm = 1; xm <= hi; ++xm)
        for (int xn = 1; xn <= hi; ++xn)
            for (int ym = 1; ym <= hi; ++ym)
                for (int yn = 1; yn <= hi; ++yn)
                    for (int zm = 1; zm <= hi; ++zm)
                        for (int zn = 1; zn <= hi; ++zn) {
                            if (xm + xn + ym + yn + zm + zn > budget) continue;
                            const auto x = Frob1Elem::make(xm, xn, Rat(2));
                            const auto y = Frob1Elem::make(ym, yn, Rat(3));
                            const auto z = Frob1Elem::make(zm, zn, Rat(5));
                            auto run = [&](const Frob1Shape& s) {
                                ++res.cases;
                                if (!frob1_associativity_check(x, y, z, s)) ++res.failures;
                            };
                            // chain
                            for (int i0 = 0; i0 < xm; ++i0)
                                for (int o0 = 0; o0 < yn; ++o0)
                                    for (int i1 = 0; i1 < ym; ++i1)
                                        for (int o1 = 0; o1 < zn; ++o1) run({ShapeKind::chain, i0, o0, i1, o1});
                            // fork
                            for (int i0 = 0; i0 < xm; ++i0)
                                for (int i1 = 0; i1 < ym; ++i1)
                                    for (int o0 = 0; o0 < zn; ++o0)
                                        for (int o1 = 0; o1 < zn; ++o1)
                                            if (o0 != o1) run({ShapeKind::fork, i0, o0, i1, o1});
                            // join
                            for (int i0 = 0; i0 < xm; ++i0)
                                for (int i1 = 0; i1 < xm; ++i1)
                                    for (int o0 = 0; o0 < yn; ++o0)
                                        for (int o1 = 0; o1 < zn; ++o1)
                                            if (i0 != i1) run({ShapeKind::join, i0, o0, i1, o1});
                        }
    return res;
}

HTensor HTensor::of(const std::vector<HElem>& factors) {
    HTensor t(static_cast<int>(factors.size()));
    std::vector<std::pair<std::vector<int>, Rat>> partial{{{}, Rat(1)}};
    for (const auto& f : factors) {
        std::vector<std::pair<std::vector<int>, Rat>> next;
        for (const auto& [idx, r] : partial) {
            for (int b = 0; b < 2; ++b) {
                const Rat& c = b == 0 ? f.c1 : f.cw;
                if (c.is_zero()) continue;
                auto u = idx;
                u.push_back(b);
                next.emplace_back(std::move(u), r * c);
            }
        }
        partial = std::move(next);
    }
    for (const auto& [idx, r] : partial) t.add(idx, r);
    return t;
}

Rat HTensor::coeff(const std::vector<int>& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rat(0) : it->second;
}

HTensor& HTensor::add(const std::vector<int>& t, const Rat& r) {
    if (static_cast<int>(t.size()) != arity_) throw std::invalid_argument("HTensor::add: arity mismatch");
    if (r.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(t, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

HTensor operator+(const HTensor& a, const HTensor& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("HTensor: arity mismatch");
    HTensor r = a;
    for (const auto& [t, c] : b.terms()) r.add(t, c);
    return r;
}

HTensor operator-(const HTensor& a) {
    HTensor r(a.arity());
    for (const auto& [t, c] : a.terms()) r.add(t, -c);
    return r;
}

HElem h_mult(const HElem& a, const HElem& b) { return {a.c1 * b.c1, a.c1 * b.cw + a.cw * b.c1}; }

HTensor h_comult(const HElem& a) {
    HTensor t(2);
    t.add({0, 1}, -a.c1);
    t.add({1, 0}, a.c1);
    t.add({1, 1}, a.cw);
    return t;
}

HTensor h_apply_comult(const HTensor& t, int slot) {
    if (slot < 0 || slot >= t.arity()) throw std::invalid_argument("h_apply_comult: slot out of range");
    HTensor out(t.arity() + 1);
    for (const auto& [idx, c] : t.terms()) {
        int passed = 0;
        for (int i = 0; i < slot; ++i) passed += idx[static_cast<std::size_t>(i)];
        const HElem factor = idx[static_cast<std::size_t>(slot)] == 0 ? HElem::one() : HElem::omega();
        const HTensor split = h_comult(factor);
        for (const auto& [pair, r] : split.terms()) {
            std::vector<int> u(idx.begin(), idx.begin() + slot);
            u.insert(u.end(), pair.begin(), pair.end());
            u.insert(u.end(), idx.begin() + slot + 1, idx.end());
            out.add(u, c * r * Rat(parity_sign(passed)));
        }
    }
    return out;
}

HTensor h_apply_mult(const HTensor& t, int slot) {
    if (slot < 0 || slot + 1 >= t.arity()) throw std::invalid_argument("h_apply_mult: slot out of range");
    HTensor out(t.arity() - 1);
    for (const auto& [idx, c] : t.terms()) {
        const int a = idx[static_cast<std::size_t>(slot)];
        const int b = idx[static_cast<std::size_t>(slot) + 1];
        if (a + b > 1) continue;
        std::vector<int> u(idx.begin(), idx.begin() + slot);
        u.push_back(a + b);
        u.insert(u.end(), idx.begin() + slot + 2, idx.end());
        out.add(u, c);
    }
    return out;
}

GenStats generator_stats(int m, int n, int beta) {
    if (m < 1 || n < 1 || beta < 0) throw std::invalid_argument("generator_stats: need m, n >= 1 and beta >= 0");
    if (m == 1 && n == 1 && beta == 0) throw std::invalid_argument("generator_stats: (1,1) at genus 0 is empty");
    return {m, n, beta, beta + m - 1, beta + n - 1, 2 - (beta + m)};
}

}  // namespace qfrob
