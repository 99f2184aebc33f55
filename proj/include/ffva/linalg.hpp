#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ffva/fock.hpp"
#include "ffva/rational.hpp"

namespace ffva {

/// Incremental row echelon form over Q, stored fraction-free.
///
/// Each row is a primitive integer vector whose smallest key is its pivot
/// (positive entry); all other entries have larger keys. Reduction scales the
/// candidate by the pivot entry and removes the content, so no fractions are
/// ever formed.
template <class Key>
class SparseEchelon {
public:
    using IntRow = std::map<Key, Integer>;
    using RatRow = std::map<Key, Rational>;

    /// Returns true iff v was independent of the rows so far (and adds it).
    bool insert(const RatRow& v) {
        IntRow r = reduce(to_integral(v));
        if (r.empty()) return false;
        normalize(r);
        const Key pivot = r.begin()->first;
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    bool contains(const RatRow& v) const { return reduce(to_integral(v)).empty(); }

    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

    /// Reduced row echelon basis, pivot entries equal to one, ordered by pivot.
    std::vector<RatRow> reduced_basis() const {
        std::map<Key, IntRow> done;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            IntRow r = it->second;
            // Clear every other pivot column using already reduced rows (larger pivots).
            for (auto jt = std::next(r.begin()); jt != r.end();) {
                auto piv = done.find(jt->first);
                if (piv == done.end()) {
                    ++jt;
                    continue;
                }
                const Key col = jt->first;
                eliminate(r, col, piv->second);
                jt = r.upper_bound(col);
            }
            normalize(r);
            done.emplace(it->first, std::move(r));
        }
        std::vector<RatRow> out;
        out.reserve(done.size());
        for (const auto& [pivot, r] : done) {
            RatRow q;
            const Integer& p = r.at(pivot);
            for (const auto& [k, x] : r) {
                Rational v(x, p);
                v.canonicalize();
                q.emplace(k, v);
            }
            out.push_back(std::move(q));
        }
        return out;
    }

private:
    static IntRow to_integral(const RatRow& v) {
        Integer den = 1;
        for (const auto& [k, x] : v) {
            if (sgn(x) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
        IntRow r;
        for (const auto& [k, x] : v) {
            if (sgn(x) == 0) continue;
            r.emplace(k, x.get_num() * (den / x.get_den()));
        }
        return r;
    }

    static void normalize(IntRow& r) {
        if (r.empty()) return;
        Integer g = 0;
        for (const auto& [k, x] : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        const bool flip = sgn(r.begin()->second) < 0;
        if (g == 1 && !flip) return;
        for (auto& [k, x] : r) {
            if (g != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            if (flip) x = -x;
        }
    }

    // r <- p*r - c*row, where row has pivot col with entry p and r[col] = c.
    static void eliminate(IntRow& r, const Key& col, const IntRow& row) {
        const Integer c = r.at(col);
        const Integer& p = row.begin()->second;
        if (p != 1) {
            for (auto& [k, x] : r) x *= p;
        }
        for (const auto& [k, x] : row) {
            auto [it, inserted] = r.try_emplace(k, 0);
            it->second -= c * x;
            if (sgn(it->second) == 0) r.erase(it);
        }
    }

    IntRow reduce(IntRow v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto piv = rows_.find(it->first);
            if (piv == rows_.end()) {
                ++it;
                continue;
            }
            const Key col = it->first;
            eliminate(v, col, piv->second);
            normalize(v);
            it = v.upper_bound(col);
        }
        return v;
    }

    std::map<Key, IntRow> rows_;
};

/// Basis of {x : rows * x = 0} for a sparse matrix with ncols columns, in
/// reduced echelon form with respect to the free columns.
std::vector<std::map<std::size_t, Rational>> nullspace(const std::vector<std::map<std::size_t, Rational>>& rows,
                                                       std::size_t ncols);

inline std::map<BasisVector, Rational> as_row(const State& s) { return {s.terms().begin(), s.terms().end()}; }
State as_state(const std::map<BasisVector, Rational>& row, int species_count);

/// Per-weight bases of a graded subspace of F^(n) (x) M^(n).
struct GradedSubspace {
    int species_count = 1;
    HalfInt max_weight;
    std::map<HalfInt, std::vector<State>> basis;

    std::size_t dim(HalfInt w) const;
    /// Dimensions at weights 0, 1/2, ..., max_weight.
    std::vector<std::size_t> dims() const;
    /// Dimensions at integer weights 0, 1, ..., floor(max_weight).
    std::vector<std::size_t> integer_dims() const;
    bool contains(const State& s) const;
};

/// Span of all u_1(-k_1) ... u_r(-k_r)|0> (k_i >= 1) of weight <= max_weight,
/// for homogeneous generators u. Bases are reduced echelon.
GradedSubspace span_closure(const std::vector<State>& generators, HalfInt max_weight, int species_count);

struct SubspaceComparison {
    std::vector<std::size_t> left_dims;
    std::vector<std::size_t> right_dims;
    bool left_contained_in_right = true;
    bool equal = false;
};

/// left == right as graded spaces: containment of every left basis vector plus
/// equal dimensions weight by weight.
SubspaceComparison compare_subspaces(const GradedSubspace& left, const GradedSubspace& right);

/// Grades a set of basis vectors into a GradedSubspace of unit vectors.
GradedSubspace coordinate_subspace(const std::vector<BasisVector>& vectors, HalfInt max_weight, int species_count);

}  // namespace ffva
