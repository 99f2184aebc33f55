#include "ffva/linalg.hpp"

#include <stdexcept>

#include "ffva/fields.hpp"

namespace ffva {

std::vector<std::map<std::size_t, Rational>> nullspace(const std::vector<std::map<std::size_t, Rational>>& rows,
                                                       std::size_t ncols) {
    // Short rows first: singleton constraints clear their columns cheaply.
    std::vector<const std::map<std::size_t, Rational>*> order;
    order.reserve(rows.size());
    for (const auto& r : rows) {
        if (!r.empty()) order.push_back(&r);
    }
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->size() < b->size(); });

    SparseEchelon<std::size_t> ech;
    for (const auto* r : order) {
        for (const auto& [col, x] : *r) {
            if (col >= ncols) throw std::out_of_range("nullspace: column index out of range");
        }
        ech.insert(*r);
        if (ech.rank() == ncols) break;
    }
    const auto rref = ech.reduced_basis();

    std::vector<std::map<std::size_t, Rational>> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (ech.is_pivot(f)) continue;
        std::map<std::size_t, Rational> x;
        x.emplace(f, 1);
        for (const auto& row : rref) {
            auto it = row.find(f);
            if (it != row.end()) x.emplace(row.begin()->first, -it->second);
        }
        out.push_back(std::move(x));
    }
    return out;
}

State as_state(const std::map<BasisVector, Rational>& row, int species_count) {
    State s(species_count);
    for (const auto& [v, c] : row) s.add_term(v, c);
    return s;
}

std::size_t GradedSubspace::dim(HalfInt w) const {
    auto it = basis.find(w);
    return it == basis.end() ? 0 : it->second.size();
}

std::vector<std::size_t> GradedSubspace::dims() const {
    std::vector<std::size_t> out;
    for (std::int64_t h = 0; h <= max_weight.halves(); ++h) out.push_back(dim(HalfInt::from_halves(h)));
    return out;
}

std::vector<std::size_t> GradedSubspace::integer_dims() const {
    std::vector<std::size_t> out;
    for (std::int64_t w = 0; w <= max_weight.floor(); ++w) out.push_back(dim(HalfInt(w)));
    return out;
}

bool GradedSubspace::contains(const State& s) const {
    // Split s by weight; each homogeneous piece must lie in its weight space.
    std::map<HalfInt, State> pieces;
    for (const auto& [v, c] : s.terms()) pieces.try_emplace(weight(v), State(s.species_count())).first->second.add_term(v, c);
    for (const auto& [w, piece] : pieces) {
        if (w > max_weight) return false;
        SparseEchelon<BasisVector> ech;
        auto it = basis.find(w);
        if (it != basis.end()) {
            for (const auto& b : it->second) ech.insert(as_row(b));
        }
        if (!ech.contains(as_row(piece))) return false;
    }
    return true;
}

namespace {

HalfInt homogeneous_weight(const State& u) {
    if (u.is_zero()) throw std::invalid_argument("zero generator");
    const HalfInt w = weight(u.terms().begin()->first);
    for (const auto& [v, c] : u.terms()) {
        if (weight(v) != w) throw std::invalid_argument("generator is not homogeneous");
    }
    return w;
}

}  // namespace

GradedSubspace span_closure(const std::vector<State>& generators, HalfInt max_weight, int species_count) {
    std::vector<HalfInt> gen_weights;
    for (const auto& u : generators) gen_weights.push_back(homogeneous_weight(u));

    std::map<HalfInt, std::vector<State>> spanning;
    std::map<HalfInt, SparseEchelon<BasisVector>> echelons;
    spanning[HalfInt(0)].push_back(State::vacuum(species_count));
    echelons[HalfInt(0)].insert(as_row(State::vacuum(species_count)));

    for (std::int64_t h = 1; h <= max_weight.halves(); ++h) {
        const HalfInt target = HalfInt::from_halves(h);
        auto& ech = echelons[target];
        auto& span = spanning[target];
        for (std::size_t g = 0; g < generators.size(); ++g) {
            // wt(u(-k) w) = wt(u) + wt(w) + k - 1
            for (std::int64_t k = 1;; ++k) {
                const HalfInt source = target - gen_weights[g] - HalfInt(k - 1);
                if (source < HalfInt(0)) break;
                auto it = spanning.find(source);
                if (it == spanning.end()) continue;
                for (const auto& w : it->second) {
                    State prod = vertex_mode(generators[g], -k, w);
                    if (prod.is_zero()) continue;
                    if (ech.insert(as_row(prod))) span.push_back(std::move(prod));
                }
            }
        }
    }

    GradedSubspace out;
    out.species_count = species_count;
    out.max_weight = max_weight;
    for (const auto& [w, ech] : echelons) {
        if (ech.rank() == 0) continue;
        auto& b = out.basis[w];
        for (const auto& row : ech.reduced_basis()) b.push_back(as_state(row, species_count));
    }
    return out;
}

SubspaceComparison compare_subspaces(const GradedSubspace& left, const GradedSubspace& right) {
    SubspaceComparison cmp;
    cmp.left_dims = left.dims();
    cmp.right_dims = right.dims();
    for (const auto& [w, vecs] : left.basis) {
        SparseEchelon<BasisVector> ech;
        if (auto it = right.basis.find(w); it != right.basis.end()) {
            for (const auto& b : it->second) ech.insert(as_row(b));
        }
        for (const auto& v : vecs) {
            if (weight(v.terms().begin()->first) != w || !ech.contains(as_row(v))) {
                cmp.left_contained_in_right = false;
                break;
            }
        }
    }
    cmp.equal = cmp.left_contained_in_right && cmp.left_dims == cmp.right_dims;
    return cmp;
}

GradedSubspace coordinate_subspace(const std::vector<BasisVector>& vectors, HalfInt max_weight, int species_count) {
    GradedSubspace out;
    out.species_count = species_count;
    out.max_weight = max_weight;
    for (const auto& v : vectors) {
        const HalfInt w = weight(v);
        if (w <= max_weight) out.basis[w].push_back(State::basis(v, species_count));
    }
    return out;
}

}  // namespace ffva
