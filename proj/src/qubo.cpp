// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include "tabuq/qubo.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <string>

namespace tabuq {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t hash_double(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    return splitmix64(bits);
}

// Incremental token for the bitstring half of MoveTable::owner_hash: XOR of
// per-set-bit codes, so a flip updates it in O(1).
std::uint64_t bit_token(int i) { return splitmix64(0x5b1e5e2fULL + static_cast<std::uint64_t>(i)); }

std::uint64_t bitstring_hash(const BitString& x) {
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) h ^= bit_token(static_cast<int>(i));
    return h;
}

}  // namespace

Qubo::Qubo(int n, std::vector<QuboTerm> terms, double offset, Sense sense)
    : n_(n), offset_(offset), sense_(sense) {
    if (n < 0) throw std::invalid_argument("Qubo: negative variable count");
    std::map<std::pair<int, int>, double> acc;
    for (const auto& t : terms) {
        int i = t.i, j = t.j;
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n)
            throw std::invalid_argument("Qubo: term index (" + std::to_string(t.i) + "," +
                                        std::to_string(t.j) + ") out of range for n=" +
                                        std::to_string(n));
        acc[{i, j}] += t.value;
    }
    terms_.reserve(acc.size());
    diagonal_.assign(static_cast<std::size_t>(n), 0.0);
    adjacency_.assign(static_cast<std::size_t>(n), {});
    std::uint64_t h = splitmix64(static_cast<std::uint64_t>(n)) ^ hash_double(offset);
    for (const auto& [key, value] : acc) {
        const auto [i, j] = key;
        terms_.push_back({i, j, value});
        h ^= splitmix64(splitmix64(static_cast<std::uint64_t>(i)) ^
                        static_cast<std::uint64_t>(j)) ^ hash_double(value);
        if (i == j) {
            diagonal_[static_cast<std::size_t>(i)] = value;
        } else {
            adjacency_[static_cast<std::size_t>(i)].push_back({j, value});
            adjacency_[static_cast<std::size_t>(j)].push_back({i, value});
        }
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.index < b.index; });
    hash_ = h;
}

double Qubo::evaluate(const BitString& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("Qubo::evaluate: bitstring length " +
                                    std::to_string(x.size()) + " != n=" + std::to_string(n_));
    double f = offset_;
    for (const auto& t : terms_)
        if (x[static_cast<std::size_t>(t.i)] && x[static_cast<std::size_t>(t.j)]) f += t.value;
    return f;
}

double Qubo::pair_coefficient(int i, int j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    const auto& adj = adjacency_.at(static_cast<std::size_t>(i));
    auto it = std::lower_bound(adj.begin(), adj.end(), j,
                               [](const Neighbor& a, int v) { return a.index < v; });
    return (it != adj.end() && it->index == j) ? it->value : 0.0;
}

double IsingModel::energy(const std::vector<int>& spins) const {
    if (static_cast<int>(spins.size()) != n)
        throw std::invalid_argument("IsingModel::energy: spin count mismatch");
    double e = 0.0;
    for (int i = 0; i < n; ++i) e += h[static_cast<std::size_t>(i)] * spins[static_cast<std::size_t>(i)];
    for (const auto& c : couplings)
        e += c.value * spins[static_cast<std::size_t>(c.i)] * spins[static_cast<std::size_t>(c.j)];
    return e;
}

IsingModel to_ising(const Qubo& q) {
    IsingModel m;
    m.n = q.num_vars();
    m.h.assign(static_cast<std::size_t>(m.n), 0.0);
    m.offset = q.offset();
    for (const auto& t : q.terms()) {
        if (t.i == t.j) {
            // c x = c (1 - s)/2
            m.h[static_cast<std::size_t>(t.i)] -= t.value / 2.0;
            m.offset += t.value / 2.0;
        } else {
            // Q x_i x_j = Q (1 - s_i - s_j + s_i s_j)/4
            m.couplings.push_back({t.i, t.j, t.value / 4.0});
            m.h[static_cast<std::size_t>(t.i)] -= t.value / 4.0;
            m.h[static_cast<std::size_t>(t.j)] -= t.value / 4.0;
            m.offset += t.value / 4.0;
        }
    }
    return m;
}

std::vector<int> spins_of(const BitString& x) {
    std::vector<int> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? -1 : 1;
    return s;
}

MoveTable init_move_table(const Qubo& q, const BitString& x) {
    const int n = q.num_vars();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("init_move_table: bitstring length mismatch");
    MoveTable t;
    t.delta.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = q.diagonal(i);
        for (const auto& nb : q.neighbors(i))
            if (x[static_cast<std::size_t>(nb.index)]) s += nb.value;
        t.delta[static_cast<std::size_t>(i)] = (1.0 - 2.0 * x[static_cast<std::size_t>(i)]) * s;
    }
    t.owner_hash = q.content_hash() ^ bitstring_hash(x);
    return t;
}

void apply_flip(const Qubo& q, BitString& x, MoveTable& table, int i) {
    const int n = q.num_vars();
    if (i < 0 || i >= n) throw std::out_of_range("apply_flip: index " + std::to_string(i));
    auto& xi = x[static_cast<std::size_t>(i)];
    // delta_j gains (1-2x_j) * Q_ij * (x_i' - x_i), and x_i' - x_i = 1-2x_i
    const double sigma_i_old = 1.0 - 2.0 * xi;
    xi ^= 1u;
    table.delta[static_cast<std::size_t>(i)] = -table.delta[static_cast<std::size_t>(i)];
    for (const auto& nb : q.neighbors(i)) {
        const double sigma_j = 1.0 - 2.0 * x[static_cast<std::size_t>(nb.index)];
        table.delta[static_cast<std::size_t>(nb.index)] += sigma_j * sigma_i_old * nb.value;
    }
    table.owner_hash ^= bit_token(i);
}

BitString SubProblem::embed(const BitString& y) const {
    if (y.size() != parent_indices.size())
        throw std::invalid_argument("SubProblem::embed: assignment length mismatch");
    BitString full = base;
    for (std::size_t t = 0; t < parent_indices.size(); ++t)
        full[static_cast<std::size_t>(parent_indices[t])] = y[t];
    return full;
}

BitString SubProblem::base_restricted() const {
    BitString y(parent_indices.size());
    for (std::size_t t = 0; t < parent_indices.size(); ++t)
        y[t] = base[static_cast<std::size_t>(parent_indices[t])];
    return y;
}

SubProblem clamp(const Qubo& q, const BitString& x_ts, const std::vector<int>& selected) {
    const int n = q.num_vars();
    if (static_cast<int>(x_ts.size()) != n)
        throw std::invalid_argument("clamp: reference solution length mismatch");
    if (selected.empty()) throw std::invalid_argument("clamp: empty selection");

    std::vector<int> order = selected;
    std::sort(order.begin(), order.end());
    if (std::adjacent_find(order.begin(), order.end()) != order.end())
        throw std::invalid_argument("clamp: duplicate selected index");
    if (order.front() < 0 || order.back() >= n)
        throw std::invalid_argument("clamp: selected index out of range");

    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (std::size_t t = 0; t < order.size(); ++t)
        local[static_cast<std::size_t>(order[t])] = static_cast<int>(t);

    std::vector<QuboTerm> terms;
    double offset = q.offset();
    for (const auto& t : q.terms()) {
        const int li = local[static_cast<std::size_t>(t.i)];
        const int lj = local[static_cast<std::size_t>(t.j)];
        if (li >= 0 && lj >= 0) {
            terms.push_back({li, lj, t.value});
        } else if (li >= 0) {
            if (x_ts[static_cast<std::size_t>(t.j)]) terms.push_back({li, li, t.value});
        } else if (lj >= 0) {
            if (x_ts[static_cast<std::size_t>(t.i)]) terms.push_back({lj, lj, t.value});
        } else {
            if (x_ts[static_cast<std::size_t>(t.i)] && x_ts[static_cast<std::size_t>(t.j)])
                offset += t.value;
        }
    }
    SubProblem sub{order,
                   Qubo(static_cast<int>(order.size()), std::move(terms), offset, q.sense()),
                   x_ts};
    return sub;
}

}  // namespace tabuq
