#include "griess/bplus.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "integer_rows.hpp"

namespace griess {

std::size_t BPlusAlgebra::sym_index(std::size_t a, std::size_t b) const {
    const std::size_t l = rs_->rank();
    if (a > b) std::swap(a, b);
    if (b >= l) throw InvalidArgument("simple root index out of range");
    return a * l - a * (a - 1) / 2 + (b - a);
}

std::size_t BPlusAlgebra::component_sum_dim() const {
    std::size_t d = 0;
    for (const auto& t : rs_->components()) {
        const auto l = static_cast<std::size_t>(t.rank);
        d += l * (l + 1) / 2 + static_cast<std::size_t>(t.positive_root_count());
    }
    return d;
}

bool BPlusAlgebra::is_cross_term(std::size_t index) const {
    if (index >= sym_dim_) return false;
    const std::size_t l = rs_->rank();
    std::size_t a = 0;
    while (index >= l - a) {
        index -= l - a;
        ++a;
    }
    const std::size_t b = a + index;
    const auto& simple = rs_->simple_roots();
    return rs_->component_of(simple[a]) != rs_->component_of(simple[b]);
}

SparseVector BPlusAlgebra::root_square(std::size_t root) const {
    const std::vector<int> c = rs_->global_coefficients(root);
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (std::size_t a = 0; a < c.size(); ++a) {
        if (c[a] == 0) continue;
        for (std::size_t b = a; b < c.size(); ++b) {
            if (c[b] == 0) continue;
            terms.emplace_back(sym_index(a, b), Rational((a == b ? 1 : 2) * c[a] * c[b]));
        }
    }
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVector out;
    for (auto& [i, v] : terms) out.push_back({i, std::move(v)});
    return out;
}

BPlusAlgebra build_bplus(std::shared_ptr<const RootSystem> rs) {
    if (!rs) throw InvalidArgument("null root system");
    BPlusAlgebra bp;
    bp.rs_ = rs;
    const RootSystem& R = *rs;
    const std::size_t l = R.rank();
    const std::size_t n = R.positive_root_count();
    bp.sym_dim_ = l * (l + 1) / 2;

    const QMatrix cartan = R.cartan_matrix();
    std::vector<std::vector<int>> C(l, std::vector<int>(l));
    for (std::size_t a = 0; a < l; ++a) {
        for (std::size_t b = 0; b < l; ++b) C[a][b] = static_cast<int>(cartan(a, b).get_num().get_si());
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < l; ++a) {
        for (std::size_t b = a; b < l; ++b) {
            pairs.emplace_back(a, b);
            labels.push_back("s" + std::to_string(a + 1) + "s" + std::to_string(b + 1));
        }
    }
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x(" + R.root_label(i) + ")");
    StructureAlgebra::Builder builder(std::move(labels));
    const auto X = [&bp](std::size_t i) { return bp.x_index(i); };

    // Neighbours in the Dynkin diagram (plus the vertex itself) bound which
    // symmetric products can interact.
    std::vector<std::vector<std::size_t>> near(l);
    for (std::size_t a = 0; a < l; ++a) {
        for (std::size_t b = 0; b < l; ++b) {
            if (C[a][b] != 0) near[a].push_back(b);
        }
    }

    // (s_a s_b)(s_c s_d) = C_ac s_b s_d + C_ad s_b s_c + C_bc s_a s_d + C_bd s_a s_c
    // <s_a s_b, s_c s_d> = C_ac C_bd + C_ad C_bc
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [a, b] = pairs[p];
        std::vector<std::size_t> partners;
        for (auto x : near[a]) {
            for (std::size_t y = 0; y < l; ++y) partners.push_back(bp.sym_index(x, y));
        }
        for (auto x : near[b]) {
            for (std::size_t y = 0; y < l; ++y) partners.push_back(bp.sym_index(x, y));
        }
        std::sort(partners.begin(), partners.end());
        partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
        for (auto q : partners) {
            if (q < p) continue;
            const auto [c, d] = pairs[q];
            if (C[a][c]) builder.add_product(p, q, bp.sym_index(b, d), C[a][c]);
            if (C[a][d]) builder.add_product(p, q, bp.sym_index(b, c), C[a][d]);
            if (C[b][c]) builder.add_product(p, q, bp.sym_index(a, d), C[b][c]);
            if (C[b][d]) builder.add_product(p, q, bp.sym_index(a, c), C[b][d]);
            const int g = C[a][c] * C[b][d] + C[a][d] * C[b][c];
            if (g) builder.set_form(p, q, g);
        }
    }

    std::vector<std::vector<int>> pairing(n, std::vector<int>(l));  // (s_a, alpha)
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<int> c = R.global_coefficients(i);
        for (std::size_t a = 0; a < l; ++a) {
            int s = 0;
            for (auto b : near[a]) s += C[a][b] * c[b];
            pairing[i][a] = s;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        // (s_a s_b) x_alpha = 2 (s_a, alpha)(s_b, alpha) x_alpha
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const int v = 2 * pairing[i][pairs[p].first] * pairing[i][pairs[p].second];
            if (v) builder.add_product(p, X(i), X(i), v);
        }
        // x_alpha^2 = 2 alpha^2, x_alpha x_beta = x_gamma
        for (const auto& t : bp.root_square(i)) builder.add_product(X(i), X(i), t.index, 2 * t.coeff);
        builder.set_form(X(i), X(i), 2);
        const auto [b, e] = R.component_range(R.component_of(i));
        for (std::size_t j = std::max(b, i + 1); j < e; ++j) {
            if (R.related(i, j)) builder.add_product(X(i), X(j), X(R.triple(i, j)), 1);
        }
    }

    bp.alg_ = std::move(builder).build();
    if (bp.dim() != bp.sym_dim_ + n) throw Error("B+ has the wrong dimension");
    if (rank(bp.alg_->gram()) != bp.dim()) throw Error("B+ form is degenerate");
    return bp;
}

PhiMap build_phi(const RootAlgebra& ra, const BPlusAlgebra& bp) {
    if (ra.t_only()) throw InvalidArgument("phi is defined on A(Phi), not T(Phi)");
    if (ra.system().components() != bp.system().components()) {
        throw InvalidArgument("phi: root systems differ (" + ra.system().spec() + " vs " + bp.system().spec() + ")");
    }
    PhiMap phi(ra, bp);
    const std::size_t n = ra.system().positive_root_count();
    phi.images_.resize(ra.dim());
    phi.matrix_ = QMatrix(bp.dim(), ra.dim());
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVector sq = bp.root_square(i);
        for (auto& t : sq) t.coeff *= half;
        SparseVector t_image = sq;
        SparseVector u_image = sq;
        t_image.push_back({bp.x_index(i), Rational(-1)});
        u_image.push_back({bp.x_index(i), Rational(1)});
        phi.images_[ra.t_index(i)] = std::move(t_image);
        phi.images_[ra.u_index(i)] = std::move(u_image);
    }
    for (std::size_t j = 0; j < ra.dim(); ++j) {
        for (const auto& t : phi.images_[j]) phi.matrix_(t.index, j) = t.coeff;
    }
    return phi;
}

AlgebraElement PhiMap::apply(const AlgebraElement& a) const {
    if (a.algebra_ptr() != domain_.algebra()) throw AlgebraMismatch();
    QVector out(codomain_.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (is_zero(a[j])) continue;
        for (const auto& t : images_[j]) out[t.index] += a[j] * t.coeff;
    }
    return AlgebraElement(codomain_.algebra(), std::move(out));
}

namespace {

template <class Task>
void parallel_rows(std::size_t count, unsigned threads, Task task) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) task(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

// Keeps the lexicographically smallest failing pair so output is deterministic.
struct FirstFailure {
    std::mutex m;
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    void record(std::size_t i, std::size_t j) {
        std::lock_guard lock(m);
        if (!pair || std::make_pair(i, j) < *pair) pair = std::make_pair(i, j);
    }
};

// Exact sweep in scaled integers: with D the common denominator of the images
// and psi = D phi, checks psi(a) psi(b) = D psi(ab) and
// <psi(a), psi(b)> = D^2 <a, b>. Returns false when the data are not small
// integers, leaving the rational sweep to run.
bool integer_sweep(const PhiMap& phi, unsigned threads, FirstFailure& hom_fail, FirstFailure& iso_fail) {
    const StructureAlgebra& A = *phi.domain().algebra();
    const StructureAlgebra& B = *phi.codomain().algebra();
    const detail::IntegerRows* a_rows = A.integer_rows();
    const detail::IntegerRows* b_rows = B.integer_rows();
    if (!a_rows || !b_rows) return false;
    const std::size_t n = A.dim();
    const std::size_t m = B.dim();

    Integer D = 1;
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& t : phi.image_of_basis(j)) D = lcm(D, Integer(t.coeff.get_den()));
    }
    auto d_small = detail::small_integer(Rational(D));
    if (!d_small) return false;
    std::vector<detail::IntSparse> psi(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& t : phi.image_of_basis(j)) {
            auto v = detail::small_integer(t.coeff * Rational(D));
            if (!v) return false;
            psi[j].emplace_back(static_cast<std::uint32_t>(t.index), *v);
        }
    }
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> gram(m);
    for (std::size_t p = 0; p < m; ++p) {
        for (const auto& t : B.gram_row(p)) {
            auto v = detail::small_integer(t.coeff);
            if (!v) return false;
            gram[p].emplace_back(static_cast<std::uint32_t>(t.index), *v);
        }
    }
    const Rational d2 = Rational(D * D);

    parallel_rows(n, threads, [&](std::size_t i) {
        std::vector<std::int64_t> yi(m, 0);
        for (const auto& [q, v] : psi[i]) yi[q] = v;
        std::vector<detail::Wide> wi(m, 0);  // G_B psi(b_i)
        for (const auto& [q, v] : psi[i]) {
            for (const auto& [p, g] : gram[q]) wi[p] += static_cast<detail::Wide>(g) * v;
        }
        detail::Accumulator acc(m);
        for (std::size_t j = i; j < n; ++j) {
            // psi(b_j) psi(b_i) - D psi(b_i b_j)
            for (const auto& [p, xp] : psi[j]) {
                for (const auto& e : b_rows->rows[p]) {
                    const std::int64_t yq = yi[e.other];
                    if (yq == 0) continue;
                    const detail::Wide s = static_cast<detail::Wide>(xp) * yq;
                    for (const auto& [k, c] : e.value) acc.add(k, s * c);
                }
            }
            for (const auto& t : A.product(i, j)) {
                auto c = detail::small_integer(t.coeff);
                if (!c) {
                    hom_fail.record(i, j);
                    continue;
                }
                const detail::Wide s = static_cast<detail::Wide>(*c) * *d_small;
                for (const auto& [k, v] : psi[t.index]) acc.add(k, -s * v);
            }
            for (auto k : acc.touched) {
                if (acc.acc[k] != 0) {
                    hom_fail.record(i, j);
                    break;
                }
            }
            acc.clear();

            detail::Wide dot = 0;
            for (const auto& [p, v] : psi[j]) dot += wi[p] * v;
            if (Rational(detail::to_integer(dot)) != d2 * A.gram()(i, j)) iso_fail.record(i, j);
        }
    });
    return true;
}

}  // namespace

PhiReport verify_theorem_3_1(const PhiMap& phi, unsigned threads) {
    PhiReport rep;
    const StructureAlgebra& A = *phi.domain().algebra();
    const AlgebraPtr& B = phi.codomain().algebra();
    const std::size_t n = A.dim();

    FirstFailure hom_fail;
    FirstFailure iso_fail;
    if (!integer_sweep(phi, threads, hom_fail, iso_fail)) {
        std::vector<AlgebraElement> images;
        images.reserve(n);
        for (std::size_t j = 0; j < n; ++j) images.emplace_back(B, phi.image_of_basis(j));
        parallel_rows(n, threads, [&](std::size_t i) {
            QVector expected(B->dim());
            for (std::size_t j = i; j < n; ++j) {
                std::fill(expected.begin(), expected.end(), Rational(0));
                for (const auto& t : A.product(i, j)) {
                    for (const auto& s : phi.image_of_basis(t.index)) expected[s.index] += t.coeff * s.coeff;
                }
                if (multiply(images[i], images[j]).coefficients() != expected) hom_fail.record(i, j);
                if (form(images[i], images[j]) != A.gram()(i, j)) iso_fail.record(i, j);
            }
        });
    }

    rep.homomorphism.description = "phi(ab) = phi(a)phi(b) for all basis pairs";
    rep.homomorphism.pass = !hom_fail.pair;
    if (hom_fail.pair) {
        rep.homomorphism.counterexample = A.label(hom_fail.pair->first) + " * " + A.label(hom_fail.pair->second);
    }
    rep.isometry.description = "<phi(a), phi(b)> = <a, b> for all basis pairs";
    rep.isometry.pass = !iso_fail.pair;
    if (iso_fail.pair) {
        rep.isometry.counterexample = "<" + A.label(iso_fail.pair->first) + ", " + A.label(iso_fail.pair->second) + ">";
    }

    const BPlusAlgebra& bp = phi.codomain();
    rep.map_rank = rank(phi.matrix());
    rep.target_dimension = bp.component_sum_dim();
    bool block = true;
    for (std::size_t j = 0; j < n && block; ++j) {
        for (const auto& t : phi.image_of_basis(j)) block = block && !bp.is_cross_term(t.index);
    }
    if (rep.target_dimension == B->dim()) {
        rep.surjective.description = "rank of phi = dim B+ = " + std::to_string(B->dim());
    } else {
        rep.surjective.description = "phi maps onto the component sum of B+ (rank " + std::to_string(rep.target_dimension) +
                                     "; the " + std::to_string(B->dim() - rep.target_dimension) +
                                     " cross-component products s_a s_b are not images)";
    }
    rep.surjective.pass = block && rep.map_rank == rep.target_dimension;
    if (!block) {
        rep.surjective.counterexample = "an image has a cross-component term";
    } else if (!rep.surjective.pass) {
        rep.surjective.counterexample = "rank " + std::to_string(rep.map_rank) + " < " + std::to_string(rep.target_dimension);
    }
    rep.kernel_dimension = n - rep.map_rank;
    rep.radical_dimension = radical_dimension(A);
    rep.bijective = rep.surjective.pass && rep.kernel_dimension == 0;
    if (rep.kernel_dimension != rep.radical_dimension) {
        rep.kernel_is_radical = false;
    } else if (rep.kernel_dimension == 0) {
        rep.kernel_is_radical = true;
    } else {
        rep.kernel_is_radical = same_span(kernel_basis(phi.matrix()), kernel_basis(A.gram()));
    }
    return rep;
}

}  // namespace griess
