#include "qfrob/operation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qfrob/errors.hpp"

namespace qfrob {

namespace {

std::vector<int> degrees_of(const Tuple& t) {
    std::vector<int> d(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) d[i] = t[i].degree().value;
    return d;
}

int degree_prefix(const Tuple& t, std::size_t upto) {
    int s = 0;
    for (std::size_t i = 0; i < upto; ++i) s += t[i].degree().value;
    return s;
}

void require_compatible(const Operation& a, const Operation& b, const char* what) {
    if (!(a.complex() == b.complex()))
        throw std::invalid_argument(std::string(what) + ": operations live on different complexes");
    if (a.m() != b.m() || a.n() != b.n() || a.degree() != b.degree())
        throw std::invalid_argument(std::string(what) + ": arity or degree mismatch");
}

}  // namespace

Rat Tensor::coeff(const Tuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rat(0) : it->second;
}

Tensor& Tensor::add(const Tuple& t, const Rat& r) {
    if (static_cast<int>(t.size()) != arity_) throw std::invalid_argument("Tensor::add: arity mismatch");
    if (r.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(t, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Tensor Tensor::product(const std::vector<Cochain>& factors) {
    Tensor out(static_cast<int>(factors.size()));
    std::vector<std::pair<Tuple, Rat>> partial{{Tuple{}, Rat(1)}};
    for (const auto& f : factors) {
        std::vector<std::pair<Tuple, Rat>> next;
        for (const auto& [t, r] : partial)
            for (const auto& [cell, c] : f.coeffs()) {
                Tuple u = t;
                u.push_back(cell);
                next.emplace_back(std::move(u), r * c);
            }
        partial = std::move(next);
    }
    for (const auto& [t, r] : partial) out.add(t, r);
    return out;
}

Cochain Tensor::as_cochain(Degree degree) const {
    if (arity_ != 1) throw std::invalid_argument("Tensor::as_cochain: arity is not 1");
    Cochain c(degree);
    for (const auto& [t, r] : terms_) c.add(t[0], r);
    return c;
}

Operation::Operation(const CircleComplex& complex, int m, int n, Degree p)
    : complex_(complex), m_(m), n_(n), p_(p) {
    if (m < 1 || n < 1) throw std::invalid_argument("Operation: arities must be positive");
}

Operation Operation::matrix_unit(const CircleComplex& complex, const Tuple& in, const Tuple& out) {
    Operation op(complex, static_cast<int>(in.size()), static_cast<int>(out.size()),
                 total_degree(out) - total_degree(in));
    op.add_entry(in, out, Rat(1));
    return op;
}

void Operation::check_tuple(const Tuple& t, int arity, const char* what) const {
    if (static_cast<int>(t.size()) != arity)
        throw std::invalid_argument(std::string("Operation: ") + what + " tuple has wrong arity");
    for (auto c : t)
        if (c.doubled < 0 || c.doubled >= complex_.basis_size())
            throw std::invalid_argument(std::string("Operation: ") + what + " cell out of range");
}

Operation& Operation::add_entry(const Tuple& in, const Tuple& out, const Rat& r) {
    check_tuple(in, m_, "input");
    check_tuple(out, n_, "output");
    if (total_degree(out) - total_degree(in) != p_)
        throw std::invalid_argument("Operation: entry " + complex_.name(in) + " -> " + complex_.name(out) +
                                    " does not have the declared degree");
    if (r.is_zero()) return *this;
    auto& row = entries_[in];
    auto [it, inserted] = row.try_emplace(out, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) {
            row.erase(it);
            if (row.empty()) entries_.erase(in);
        }
    }
    return *this;
}

Rat Operation::entry(const Tuple& in, const Tuple& out) const {
    auto it = entries_.find(in);
    if (it == entries_.end()) return Rat(0);
    auto jt = it->second.find(out);
    return jt == it->second.end() ? Rat(0) : jt->second;
}

std::size_t Operation::nnz() const {
    std::size_t k = 0;
    for (const auto& [in, row] : entries_) k += row.size();
    return k;
}

std::string Operation::describe() const {
    std::ostringstream os;
    for (const auto& [in, row] : entries_)
        for (const auto& [out, r] : row)
            os << complex_.name(in) << " -> " << r << " " << complex_.name(out) << "\n";
    return os.str();
}

Operation id_op(const CircleComplex& complex) {
    Operation op(complex, 1, 1, Degree(0));
    for (auto c : complex.cells()) op.add_entry({c}, {c}, Rat(1));
    return op;
}

Operation d_op(const CircleComplex& complex) {
    Operation op(complex, 1, 1, Degree(1));
    for (auto c : complex.cells())
        for (const auto& t : complex.boundary(c)) op.add_entry({c}, {t.target}, Rat(t.sign));
    return op;
}

Operation zero_op(const CircleComplex& complex, int m, int n, Degree p) { return Operation(complex, m, n, p); }

Tensor apply(const Operation& op, const Tensor& input) {
    if (input.arity() != op.m()) throw std::invalid_argument("apply: input arity mismatch");
    Tensor out(op.n());
    for (const auto& [t, r] : input.terms()) {
        auto it = op.entries().find(t);
        if (it == op.entries().end()) continue;
        for (const auto& [o, c] : it->second) out.add(o, r * c);
    }
    return out;
}

Tensor apply(const Operation& op, const std::vector<Cochain>& factors) {
    if (static_cast<int>(factors.size()) != op.m()) throw std::invalid_argument("apply: input arity mismatch");
    return apply(op, Tensor::product(factors));
}

void for_each_d_term(const CircleComplex& complex, Degree p, const Tuple& in, const Tuple& out, const Rat& c,
                     const EntrySink& emit) {
    // d after P: differentiate each output vertex, Leibniz sign from the factors before it
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out[i].is_vertex()) continue;
        const int pre = degree_prefix(out, i);
        for (const auto& t : complex.boundary(out[i])) {
            Tuple o = out;
            o[i] = t.target;
            emit(in, o, c * Rat(t.sign * parity_sign(pre)));
        }
    }
    // P after d: every vertex whose boundary hits an input edge
    const int outer_sign = -parity_sign(p.value);
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (!in[i].is_edge()) continue;
        const int pre = degree_prefix(in, i);
        for (const auto& s : complex.coboundary_sources(in[i])) {
            Tuple x = in;
            x[i] = s.target;
            emit(x, out, c * Rat(outer_sign * s.sign * parity_sign(pre)));
        }
    }
}

Operation commutator_with_d(const Operation& op) {
    Operation out(op.complex(), op.m(), op.n(), op.degree() + Degree(1));
    const EntrySink sink = [&out](const Tuple& i, const Tuple& o, const Rat& r) { out.add_entry(i, o, r); };
    for (const auto& [in, row] : op.entries())
        for (const auto& [o, c] : row) for_each_d_term(op.complex(), op.degree(), in, o, c, sink);
    return out;
}

Operation permute_inputs(const Operation& op, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != op.m()) throw std::invalid_argument("permute_inputs: size mismatch");
    Operation out(op.complex(), op.m(), op.n(), op.degree());
    for (const auto& [in, row] : op.entries()) {
        const auto deg = degrees_of(in);
        const int s = koszul_sign(sigma, deg);
        const Tuple moved = sigma.apply(in);
        for (const auto& [o, c] : row) out.add_entry(moved, o, c * Rat(s));
    }
    return out;
}

Operation permute_outputs(const Operation& op, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != op.n()) throw std::invalid_argument("permute_outputs: size mismatch");
    Operation out(op.complex(), op.m(), op.n(), op.degree());
    for (const auto& [in, row] : op.entries())
        for (const auto& [o, c] : row) {
            const int s = koszul_sign(sigma, degrees_of(o));
            out.add_entry(in, sigma.apply(o), c * Rat(s));
        }
    return out;
}

namespace {

Permutation order_permutation(const std::vector<Leg>& order, std::size_t size,
                              const std::function<std::optional<int>(const Leg&)>& canonical,
                              const char* what) {
    if (order.size() != size)
        throw std::invalid_argument(std::string("compose: ") + what + " order lists the wrong number of legs");
    std::vector<int> images(size, -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        auto idx = canonical(order[pos]);
        if (!idx || images[static_cast<std::size_t>(*idx)] != -1)
            throw std::invalid_argument(std::string("compose: ") + what + " order names an invalid or repeated leg");
        images[static_cast<std::size_t>(*idx)] = static_cast<int>(pos);
    }
    return Permutation(std::move(images));
}

}  // namespace

Operation compose(const Operation& outer, const Operation& inner, const std::vector<Wire>& wires,
                  const std::optional<std::vector<Leg>>& input_order,
                  const std::optional<std::vector<Leg>>& output_order) {
    if (!(outer.complex() == inner.complex()))
        throw std::invalid_argument("compose: operations live on different complexes");
    if (wires.empty()) throw std::invalid_argument("compose: disconnected composition (no wires)");
    std::vector<int> q_target(static_cast<std::size_t>(inner.n()), -1);
    std::vector<bool> p_wired(static_cast<std::size_t>(outer.m()), false);
    for (const auto& w : wires) {
        if (w.from_inner < 0 || w.from_inner >= inner.n() || w.to_outer < 0 || w.to_outer >= outer.m())
            throw std::invalid_argument("compose: wire slot out of range");
        if (q_target[static_cast<std::size_t>(w.from_inner)] != -1 || p_wired[static_cast<std::size_t>(w.to_outer)])
            throw std::invalid_argument("compose: slot collision in wiring");
        q_target[static_cast<std::size_t>(w.from_inner)] = w.to_outer;
        p_wired[static_cast<std::size_t>(w.to_outer)] = true;
    }
    std::vector<int> q_free, p_free;
    for (int k = 0; k < inner.n(); ++k)
        if (q_target[static_cast<std::size_t>(k)] == -1) q_free.push_back(k);
    for (int j = 0; j < outer.m(); ++j)
        if (!p_wired[static_cast<std::size_t>(j)]) p_free.push_back(j);

    const int nq_free = static_cast<int>(q_free.size());
    const int res_m = inner.m() + static_cast<int>(p_free.size());
    const int res_n = nq_free + outer.n();

    // [Q outputs | P free inputs] -> [Q free outputs | P inputs in slot order]
    std::vector<int> route(static_cast<std::size_t>(inner.n()) + p_free.size());
    {
        int r = 0;
        for (int k = 0; k < inner.n(); ++k) {
            const int tgt = q_target[static_cast<std::size_t>(k)];
            route[static_cast<std::size_t>(k)] = tgt == -1 ? r++ : nq_free + tgt;
        }
        for (std::size_t i = 0; i < p_free.size(); ++i)
            route[static_cast<std::size_t>(inner.n()) + i] = nq_free + p_free[i];
    }
    const Permutation route_perm(route);

    std::map<Tuple, std::vector<const std::pair<const Tuple, Operation::Row>*>> by_wired;
    for (const auto& e : outer.entries()) {
        Tuple key;
        for (const auto& w : wires) key.push_back(e.first[static_cast<std::size_t>(w.to_outer)]);
        by_wired[key].push_back(&e);
    }

    Operation canon(inner.complex(), res_m, res_n, outer.degree() + inner.degree());
    for (const auto& [qi, qrow] : inner.entries()) {
        for (const auto& [qo, cq] : qrow) {
            Tuple key;
            for (const auto& w : wires) key.push_back(qo[static_cast<std::size_t>(w.from_inner)]);
            auto hit = by_wired.find(key);
            if (hit == by_wired.end()) continue;
            Tuple qo_free;
            for (int k : q_free) qo_free.push_back(qo[static_cast<std::size_t>(k)]);
            const int pass = parity_sign(outer.degree().value * total_degree(qo_free).value);
            for (const auto* pe : hit->second) {
                const Tuple& pin = pe->first;
                Tuple mid = qo;
                Tuple res_in = qi;
                for (int j : p_free) {
                    mid.push_back(pin[static_cast<std::size_t>(j)]);
                    res_in.push_back(pin[static_cast<std::size_t>(j)]);
                }
                const int ks = koszul_sign(route_perm, degrees_of(mid));
                const Rat base = cq * Rat(ks * pass);
                for (const auto& [po, cp] : pe->second) {
                    Tuple res_out = qo_free;
                    res_out.insert(res_out.end(), po.begin(), po.end());
                    canon.add_entry(res_in, res_out, base * cp);
                }
            }
        }
    }

    Operation result = std::move(canon);
    if (input_order) {
        auto canonical = [&](const Leg& l) -> std::optional<int> {
            if (l.box == Leg::Box::inner) {
                if (l.slot < 0 || l.slot >= inner.m()) return std::nullopt;
                return l.slot;
            }
            auto it = std::find(p_free.begin(), p_free.end(), l.slot);
            if (it == p_free.end()) return std::nullopt;
            return inner.m() + static_cast<int>(it - p_free.begin());
        };
        result = permute_inputs(result,
                                order_permutation(*input_order, static_cast<std::size_t>(res_m), canonical, "input"));
    }
    if (output_order) {
        auto canonical = [&](const Leg& l) -> std::optional<int> {
            if (l.box == Leg::Box::outer) {
                if (l.slot < 0 || l.slot >= outer.n()) return std::nullopt;
                return nq_free + l.slot;
            }
            auto it = std::find(q_free.begin(), q_free.end(), l.slot);
            if (it == q_free.end()) return std::nullopt;
            return static_cast<int>(it - q_free.begin());
        };
        result = permute_outputs(
            result, order_permutation(*output_order, static_cast<std::size_t>(res_n), canonical, "output"));
    }
    return result;
}

Operation add(const Operation& a, const Operation& b) {
    require_compatible(a, b, "add");
    Operation out = a;
    for (const auto& [in, row] : b.entries())
        for (const auto& [o, c] : row) out.add_entry(in, o, c);
    return out;
}

Operation scale(const Operation& a, const Rat& r) {
    Operation out(a.complex(), a.m(), a.n(), a.degree());
    if (r.is_zero()) return out;
    for (const auto& [in, row] : a.entries())
        for (const auto& [o, c] : row) out.add_entry(in, o, c * r);
    return out;
}

Operation operator+(const Operation& a, const Operation& b) { return add(a, b); }
Operation operator-(const Operation& a, const Operation& b) { return add(a, scale(b, Rat(-1))); }
Operation operator*(const Rat& r, const Operation& a) { return scale(a, r); }

Operation rotate(const Operation& op, int steps) {
    const auto& cx = op.complex();
    auto shift = [&](const Tuple& t) {
        Tuple u = t;
        for (auto& c : u) c = cx.shift(c, steps);
        return u;
    };
    Operation out(cx, op.m(), op.n(), op.degree());
    for (const auto& [in, row] : op.entries())
        for (const auto& [o, c] : row) out.add_entry(shift(in), shift(o), c);
    return out;
}

QRadius quasilocality_radius(const Operation& op) {
    int r = 0;
    const auto& cx = op.complex();
    for (const auto& [in, row] : op.entries())
        for (const auto& [o, c] : row)
            for (auto x : in)
                for (auto y : o) r = std::max(r, cx.distance(x, y));
    return QRadius::finite(r);
}

std::optional<std::string> first_difference(const Operation& a, const Operation& b) {
    require_compatible(a, b, "first_difference");
    const Operation diff = a - b;
    if (diff.is_zero()) return std::nullopt;
    const auto& [in, row] = *diff.entries().begin();
    const auto& out = row.begin()->first;
    std::ostringstream os;
    os << a.complex().name(in) << " -> " << a.complex().name(out) << ": " << a.entry(in, out) << " vs "
       << b.entry(in, out);
    return os.str();
}

std::pair<Rat, Rat> cohomology_action_11(const Operation& op) {
    if (op.m() != 1 || op.n() != 1) throw ContractError("cohomology_action_11: operation is not (1,1)");
    if (op.degree() != Degree(0)) throw ContractError("cohomology_action_11: operation does not have degree 0");
    if (!commutator_with_d(op).is_zero()) throw ContractError("cohomology_action_11: operation is not closed");
    const auto& cx = op.complex();
    const Cochain on_unit = apply(op, {cx.unit()}).as_cochain(Degree(0));
    const Cochain on_vol = apply(op, {cx.volume()}).as_cochain(Degree(1));
    return {cx.cohomology_class(on_unit).h0, cx.cohomology_class(on_vol).h1};
}

}  // namespace qfrob
