#include "ffva/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "ffva/errors.hpp"
#include "ffva/parallel.hpp"

namespace ffva {

State gl_action(GLnUnit u, const State& v) {
    const int n = v.species_count();
    if (u.i < 1 || u.j < 1 || u.i > n || u.j > n) throw SpeciesMismatch(std::max(u.i, u.j), n);
    State out = fermion_bilinear_mode(u.i, u.j, 0, v);
    for (const auto& [b, c] : v.terms()) {
        const auto& comm = b.comm.factors();
        for (std::size_t p = 0; p < comm.size(); ++p) {
            const BosonMode& m = comm[p];
            if (m.sign == Sign::Plus && m.species == u.j) {
                out.add_term(BasisVector{b.ferm, b.comm.with_replaced(p, BosonMode(u.i, Sign::Plus, m.index))}, c);
            } else if (m.sign == Sign::Minus && m.species == u.i) {
                out.add_term(BasisVector{b.ferm, b.comm.with_replaced(p, BosonMode(u.j, Sign::Minus, m.index))}, -c);
            }
        }
    }
    return out;
}

namespace {

std::vector<State> fixed_level(int n, HalfInt w, Sector sector) {
    EnumerateOptions opt;
    opt.sector = sector;
    opt.charge.species_balanced = true;
    const auto basis = enumerate_weight(n, w, opt);
    if (basis.empty()) return {};

    std::map<std::tuple<int, int, BasisVector>, std::map<std::size_t, Rational>> rows;
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const State b = State::basis(basis[col], n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const State img = gl_action(GLnUnit{i, j}, b);
                for (const auto& [u, c] : img.terms()) rows[{i, j, u}].emplace(col, c);
            }
        }
    }
    std::vector<std::map<std::size_t, Rational>> matrix;
    matrix.reserve(rows.size());
    for (auto& [key, row] : rows) matrix.push_back(std::move(row));

    std::vector<State> out;
    for (const auto& x : nullspace(matrix, basis.size())) {
        State s(n);
        for (const auto& [col, c] : x) s.add_term(basis[col], c);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::size_t> as_dims(const GradedSubspace& s) { return s.dims(); }

SpanCheck compare(const GradedSubspace& span, const GradedSubspace& target) {
    const SubspaceComparison cmp = compare_subspaces(span, target);
    return SpanCheck{as_dims(span), as_dims(target), cmp.left_contained_in_right};
}

std::optional<CentralityFailure> first_noncentral_mode(const State& w, const std::vector<State>& gens, std::int64_t r_max) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::int64_t r = 0; r <= r_max; ++r) {
            State img = vertex_mode(gens[g], r, w);
            if (!img.is_zero()) return CentralityFailure{w, g, r, std::move(img)};
        }
    }
    return std::nullopt;
}

VnKernelLevel vn_kernel_level(HalfInt w, const std::vector<State>& vn_level, const std::vector<State>& candidate_level,
                              const std::vector<State>& gens, std::int64_t r_max) {
    VnKernelLevel level;
    level.weight = w;
    level.vn_dim = vn_level.size();
    level.candidate_dim = candidate_level.size();
    std::map<std::tuple<std::size_t, std::int64_t, BasisVector>, std::map<std::size_t, Rational>> rows;
    for (std::size_t col = 0; col < vn_level.size(); ++col) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            for (std::int64_t r = 0; r <= r_max; ++r) {
                const State img = vertex_mode(gens[g], r, vn_level[col]);
                for (const auto& [u, c] : img.terms()) rows[{g, r, u}].emplace(col, c);
            }
        }
    }
    std::vector<std::map<std::size_t, Rational>> matrix;
    for (auto& [key, row] : rows) matrix.push_back(std::move(row));
    const auto kernel = nullspace(matrix, vn_level.size());
    level.kernel_dim = kernel.size();

    SparseEchelon<BasisVector> ech;
    for (const auto& x : kernel) {
        State s(vn_level.empty() ? 1 : vn_level.front().species_count());
        for (const auto& [col, c] : x) s += vn_level[col] * c;
        ech.insert(as_row(s));
    }
    for (const auto& c : candidate_level) {
        if (!ech.contains(as_row(c))) level.candidate_contained = false;
    }
    return level;
}

}  // namespace

GradedSubspace fixed_space(int n, HalfInt max_weight, Sector sector, int jobs) {
    if (n < 1) throw std::invalid_argument("fixed_space needs n >= 1");
    const auto levels = parallel_map(static_cast<std::size_t>(max_weight.halves() + 1), jobs, [&](std::size_t h) {
        return fixed_level(n, HalfInt::from_halves(static_cast<std::int64_t>(h)), sector);
    });
    GradedSubspace out;
    out.species_count = n;
    out.max_weight = max_weight;
    for (std::size_t h = 0; h < levels.size(); ++h) {
        if (!levels[h].empty()) out.basis[HalfInt::from_halves(static_cast<std::int64_t>(h))] = levels[h];
    }
    return out;
}

std::string to_string(VnKind kind) {
    switch (kind) {
        case VnKind::Zero: return "0";
        case VnKind::One: return "1";
        case VnKind::Plus: return "+";
        case VnKind::Minus: return "-";
    }
    return "?";
}

State vn_generator(VnKind kind, int k, int n) {
    if (k < 0) throw std::invalid_argument("vn_generator needs k >= 0");
    const HalfInt lead = -HalfInt::half();
    const HalfInt deep = -HalfInt(k) - HalfInt::half();
    State out(n);
    for (int i = 1; i <= n; ++i) {
        switch (kind) {
            case VnKind::Zero:
                out -= monomial_state({psi(Sign::Plus, lead, i), psi(Sign::Minus, deep, i)}, {}, n);
                break;
            case VnKind::One:
                out += monomial_state({}, {boson(Sign::Plus, lead, i), boson(Sign::Minus, deep, i)}, n);
                break;
            case VnKind::Plus:
                out -= monomial_state({psi(Sign::Plus, lead, i)}, {boson(Sign::Minus, deep, i)}, n);
                break;
            case VnKind::Minus:
                out += monomial_state({psi(Sign::Minus, deep, i)}, {boson(Sign::Plus, lead, i)}, n);
                break;
        }
    }
    return out;
}

std::vector<State> vn_generators(int n) {
    std::vector<State> out;
    for (VnKind kind : {VnKind::Zero, VnKind::One, VnKind::Plus, VnKind::Minus}) {
        for (int k = 0; k < n; ++k) out.push_back(vn_generator(kind, k, n));
    }
    return out;
}

std::vector<State> m_invariant_generators(int n, HalfInt max_weight) {
    std::vector<State> out;
    for (int m = 0; HalfInt(m + 1) <= max_weight; ++m) out.push_back(vn_generator(VnKind::One, m, n));
    return out;
}

SpanCheck strong_generation_check(int n, HalfInt max_weight, int jobs) {
    return compare(span_closure(vn_generators(n), max_weight, n), fixed_space(n, max_weight, Sector::Full, jobs));
}

SpanCheck m_invariants_strong_gen_check(int n, HalfInt max_weight, int jobs) {
    return compare(span_closure(m_invariant_generators(n, max_weight), max_weight, n),
                   fixed_space(n, max_weight, Sector::Bosonic, jobs));
}

bool VnCenterReport::pass() const {
    if (!failures.empty()) return false;
    if (!std::all_of(kernel.begin(), kernel.end(), [](const VnKernelLevel& k) { return k.pass(); })) return false;
    return std::all_of(controls.begin(), controls.end(), [](const VnControl& c) { return c.pass(); });
}

VnCenterReport center_vn_check(int n, HalfInt max_weight, std::int64_t r_max, int jobs) {
    VnCenterReport report;
    report.n = n;
    report.max_weight = max_weight;
    report.r_max = r_max;
    const auto gens = vn_generators(n);
    const GradedSubspace candidate = fixed_space(n, max_weight, Sector::Bosonic, jobs);
    const GradedSubspace vn = fixed_space(n, max_weight, Sector::Full, jobs);
    report.candidate_dims = candidate.dims();

    std::vector<State> cands;
    for (const auto& [w, vs] : candidate.basis) cands.insert(cands.end(), vs.begin(), vs.end());
    auto found = parallel_map(cands.size(), jobs, [&](std::size_t i) { return first_noncentral_mode(cands[i], gens, r_max); });
    for (auto& f : found) {
        if (f) report.failures.push_back(std::move(*f));
    }

    std::vector<HalfInt> weights;
    for (const auto& [w, vs] : vn.basis) weights.push_back(w);
    report.kernel = parallel_map(weights.size(), jobs, [&](std::size_t i) {
        const HalfInt w = weights[i];
        static const std::vector<State> none;
        auto it = candidate.basis.find(w);
        return vn_kernel_level(w, vn.basis.at(w), it == candidate.basis.end() ? none : it->second, gens, r_max);
    });

    std::vector<std::pair<State, std::string>> controls{
        {vn_generator(VnKind::Zero, 0, n), "j^{0,0}"},
        {vn_generator(VnKind::Plus, 0, n), "j^{+,0}"},
        {vn_generator(VnKind::Minus, 0, n), "j^{-,0}"},
    };
    if (max_weight >= HalfInt(2)) controls.emplace_back(vn_generator(VnKind::Zero, 1, n), "j^{0,1}");
    for (auto& [s, name] : controls) {
        auto witness = first_noncentral_mode(s, gens, r_max);
        report.controls.push_back(VnControl{std::move(s), name, std::move(witness)});
    }
    return report;
}

std::vector<DecouplingEntry> decoupling_check(int n, int k_max, HalfInt max_weight) {
    std::vector<State> fermionic;
    for (int k = 0; k < n; ++k) fermionic.push_back(vn_generator(VnKind::Zero, k, n));
    const GradedSubspace span = span_closure(fermionic, max_weight, n);
    std::vector<DecouplingEntry> out;
    for (int k = n; k <= k_max; ++k) {
        if (HalfInt(k + 1) > max_weight) break;
        out.push_back(DecouplingEntry{k, span.contains(vn_generator(VnKind::Zero, k, n))});
    }
    return out;
}

}  // namespace ffva
