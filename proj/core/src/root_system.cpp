#include "griess/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "griess/error.hpp"

namespace griess {

void SimpleType::validate() const {
    switch (family) {
        case Family::A:
            if (rank < 1) throw InvalidArgument("A_l needs l >= 1");
            break;
        case Family::D:
            if (rank < 4) throw InvalidArgument("D_l needs l >= 4");
            break;
        case Family::E:
            if (rank < 6 || rank > 8) throw InvalidArgument("E_l needs l in {6, 7, 8}");
            break;
    }
}

std::string SimpleType::name() const {
    const char letter = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, letter) + std::to_string(rank);
}

int SimpleType::coxeter_number() const {
    switch (family) {
        case Family::A:
            return rank + 1;
        case Family::D:
            return 2 * rank - 2;
        case Family::E:
            return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    }
    return 0;
}

int SimpleType::positive_root_count() const {
    switch (family) {
        case Family::A:
            return rank * (rank + 1) / 2;
        case Family::D:
            return rank * (rank - 1);
        case Family::E:
            return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    }
    return 0;
}

int Root::height() const { return std::accumulate(coefficients.begin(), coefficients.end(), 0); }

namespace {

// Vectors in doubled coordinates so that E_8 half-integers stay integral.
using Doubled = std::vector<int>;

int dot4(const Doubled& a, const Doubled& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;  // four times the inner product
}

Doubled unit_difference(std::size_t dim, std::size_t i, std::size_t j, int sj) {
    Doubled v(dim, 0);
    v[i] = 2;
    v[j] = 2 * sj;
    return v;
}

struct CoordinateModel {
    std::size_t dim = 0;
    std::vector<Doubled> simple;
    std::vector<Doubled> roots;  // all roots, both signs
    std::size_t keep = 0;        // leading simple roots kept (E_7, E_6 truncate E_8)
};

CoordinateModel coordinate_model(const SimpleType& type) {
    CoordinateModel m;
    const auto l = static_cast<std::size_t>(type.rank);
    switch (type.family) {
        case Family::A: {
            m.dim = l + 1;
            for (std::size_t i = 0; i < l; ++i) {
                m.simple.push_back(unit_difference(m.dim, i, i + 1, -1));
            }
            for (std::size_t i = 0; i < m.dim; ++i) {
                for (std::size_t j = 0; j < m.dim; ++j) {
                    if (i != j) m.roots.push_back(unit_difference(m.dim, i, j, -1));
                }
            }
            m.keep = l;
            break;
        }
        case Family::D: {
            m.dim = l;
            for (std::size_t i = 0; i + 1 < l; ++i) {
                m.simple.push_back(unit_difference(m.dim, i, i + 1, -1));
            }
            m.simple.push_back(unit_difference(m.dim, l - 2, l - 1, +1));
            for (std::size_t i = 0; i < l; ++i) {
                for (std::size_t j = i + 1; j < l; ++j) {
                    for (int si : {1, -1}) {
                        for (int sj : {1, -1}) {
                            Doubled v(m.dim, 0);
                            v[i] = 2 * si;
                            v[j] = 2 * sj;
                            m.roots.push_back(v);
                        }
                    }
                }
            }
            m.keep = l;
            break;
        }
        case Family::E: {
            m.dim = 8;
            m.simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
            m.simple.push_back({2, 2, 0, 0, 0, 0, 0, 0});
            m.simple.push_back({-2, 2, 0, 0, 0, 0, 0, 0});
            for (std::size_t i = 1; i < 6; ++i) {
                Doubled v(8, 0);
                v[i] = -2;
                v[i + 1] = 2;
                m.simple.push_back(v);
            }
            for (std::size_t i = 0; i < 8; ++i) {
                for (std::size_t j = i + 1; j < 8; ++j) {
                    for (int si : {1, -1}) {
                        for (int sj : {1, -1}) {
                            Doubled v(8, 0);
                            v[i] = 2 * si;
                            v[j] = 2 * sj;
                            m.roots.push_back(v);
                        }
                    }
                }
            }
            for (unsigned signs = 0; signs < 256; ++signs) {
                if (__builtin_popcount(signs) % 2 != 0) continue;
                Doubled v(8);
                for (std::size_t i = 0; i < 8; ++i) {
                    v[i] = ((signs >> i) & 1u) != 0 ? -1 : 1;
                }
                m.roots.push_back(v);
            }
            m.keep = l;
            break;
        }
    }
    return m;
}

QMatrix inverse(const QMatrix& m) {
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RowEchelonForm ref = reduced_row_echelon(std::move(aug));
    if (ref.pivot_columns.size() != n || ref.pivot_columns.back() != n - 1) {
        throw Error("singular Cartan matrix");
    }
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ref.reduced(i, n + j);
    }
    return inv;
}

// Positive roots of one simple component, unsorted.
std::vector<Root> component_roots(const SimpleType& type, std::size_t component) {
    const CoordinateModel model = coordinate_model(type);
    const std::size_t full = model.simple.size();
    QMatrix cartan(full, full);
    for (std::size_t i = 0; i < full; ++i) {
        for (std::size_t j = 0; j < full; ++j) {
            cartan(i, j) = dot4(model.simple[i], model.simple[j]) / 4;
        }
    }
    const QMatrix cartan_inverse = inverse(cartan);

    std::vector<Root> out;
    for (const auto& r : model.roots) {
        QVector products(full);
        for (std::size_t k = 0; k < full; ++k) {
            products[k] = make_rational(dot4(r, model.simple[k]), 4);
        }
        const QVector coeffs = cartan_inverse * products;
        std::vector<int> c(full);
        bool positive = true;
        for (std::size_t k = 0; k < full; ++k) {
            if (coeffs[k].get_den() != 1) {
                throw Error("root with non-integral simple coefficients");
            }
            c[k] = static_cast<int>(coeffs[k].get_num().get_si());
            if (c[k] < 0) positive = false;
        }
        if (!positive) continue;
        const bool outside = std::any_of(c.begin() + static_cast<std::ptrdiff_t>(model.keep), c.end(),
                                         [](int x) { return x != 0; });
        if (outside) continue;
        c.resize(model.keep);
        Root root;
        root.component = component;
        root.coefficients = std::move(c);
        root.coordinates.resize(model.dim);
        for (std::size_t i = 0; i < model.dim; ++i) {
            root.coordinates[i] = make_rational(r[i], 2);
        }
        out.push_back(std::move(root));
    }
    return out;
}

SimpleType infer_type(std::size_t rank, std::size_t positive_roots) {
    const int l = static_cast<int>(rank);
    const int n = static_cast<int>(positive_roots);
    SimpleType t;
    t.rank = l;
    if (n == l * (l + 1) / 2) {
        t.family = Family::A;
    } else if (l >= 4 && n == l * (l - 1)) {
        t.family = Family::D;
    } else {
        t.family = Family::E;
    }
    t.validate();
    if (t.positive_root_count() != n) {
        throw Error("sub-system with unrecognised type");
    }
    return t;
}

}  // namespace

std::string RootSystem::key(std::size_t component, const std::vector<int>& coefficients) {
    std::string out = std::to_string(component) + ':';
    for (int c : coefficients) {
        out.push_back(static_cast<char>('0' + c + 16));
    }
    return out;
}

RootSystem RootSystem::build(const std::vector<SimpleType>& components) {
    if (components.empty()) {
        throw InvalidArgument("root system needs at least one component");
    }
    RootSystem rs;
    rs.components_ = components;
    for (std::size_t c = 0; c < components.size(); ++c) {
        components[c].validate();
        auto roots = component_roots(components[c], c);
        rs.roots_.insert(rs.roots_.end(), std::make_move_iterator(roots.begin()),
                         std::make_move_iterator(roots.end()));
    }
    rs.finalize();
    return rs;
}

void RootSystem::finalize() {
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
        if (a.component != b.component) return a.component < b.component;
        return a.coefficients < b.coefficients;
    });
    const std::size_t n = roots_.size();
    const std::size_t k = components_.size();

    component_begin_.assign(k + 1, n);
    simple_begin_.assign(k + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        component_begin_[roots_[i].component] = i;
    }
    for (std::size_t c = k; c-- > 0;) {
        if (component_begin_[c] > component_begin_[c + 1]) component_begin_[c] = component_begin_[c + 1];
    }

    lookup_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        lookup_.emplace(key(roots_[i].component, roots_[i].coefficients), i);
    }

    simple_.clear();
    for (std::size_t c = 0; c < k; ++c) {
        simple_begin_[c] = simple_.size();
        const auto l = static_cast<std::size_t>(components_[c].rank);
        for (std::size_t j = 0; j < l; ++j) {
            std::vector<int> e(l, 0);
            e[j] = 1;
            auto it = lookup_.find(key(c, e));
            if (it == lookup_.end()) {
                throw Error("simple root missing from positive roots");
            }
            simple_.push_back(it->second);
        }
    }
    simple_begin_[k] = simple_.size();

    // Integral inner products; coordinates are half-integers at worst.
    std::vector<Doubled> doubled(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& x : roots_[i].coordinates) {
            doubled[i].push_back(static_cast<int>(Rational(2 * x).get_num().get_si()));
        }
    }
    inner_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (roots_[i].component != roots_[j].component) continue;
            const int d = dot4(doubled[i], doubled[j]);
            if (d % 4 != 0) throw Error("non-integral inner product between roots");
            inner_[i * n + j] = inner_[j * n + i] = static_cast<std::int8_t>(d / 4);
        }
    }

    // Invariants: normalisation, simply-laced, 2N = lh, |Delta_1| = 2h - 4,
    // and the triple relation.
    for (std::size_t c = 0; c < k; ++c) {
        const auto [b, e] = component_range(c);
        const int h = components_[c].coxeter_number();
        if (2 * static_cast<int>(e - b) != components_[c].rank * h) {
            throw Error("2N != lh for component " + components_[c].name());
        }
        for (std::size_t i = b; i < e; ++i) {
            if (inner(i, i) != 2) throw Error("root of norm != 2");
            int related_count = 0;
            for (std::size_t j = b; j < e; ++j) {
                if (i == j) continue;
                const int ip = inner(i, j);
                if (ip < -1 || ip > 1) throw Error("system is not simply laced");
                if (ip != 0) {
                    ++related_count;
                    (void)triple(i, j);
                }
            }
            if (related_count != 2 * h - 4) {
                throw Error("|Delta_1(alpha)| != 2h - 4 in component " + components_[c].name());
            }
        }
    }
}

std::pair<std::size_t, std::size_t> RootSystem::component_range(std::size_t c) const {
    if (c >= components_.size()) throw InvalidArgument("component index out of range");
    return {component_begin_[c], component_begin_[c + 1]};
}

std::pair<std::size_t, std::size_t> RootSystem::simple_range(std::size_t c) const {
    if (c >= components_.size()) throw InvalidArgument("component index out of range");
    return {simple_begin_[c], simple_begin_[c + 1]};
}

Rational RootSystem::inner(const Root& a, const Root& b) {
    if (a.component != b.component || a.coordinates.size() != b.coordinates.size()) {
        return 0;
    }
    Rational s;
    for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
        s += a.coordinates[i] * b.coordinates[i];
    }
    return s;
}

std::optional<std::size_t> RootSystem::find(std::size_t component, const std::vector<int>& coefficients) const {
    auto it = lookup_.find(key(component, coefficients));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> RootSystem::find(const Root& r) const {
    auto i = find(r.component, r.coefficients);
    if (!i || roots_[*i].coordinates != r.coordinates) return std::nullopt;
    return i;
}

std::size_t RootSystem::index_of(const Root& r) const {
    auto i = find(r);
    if (!i) throw InvalidArgument("not a positive root of this system");
    return *i;
}

std::vector<int> RootSystem::global_coefficients(std::size_t i) const {
    std::vector<int> g(rank(), 0);
    const Root& r = roots_.at(i);
    const std::size_t offset = simple_begin_[r.component];
    for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
        g[offset + j] = r.coefficients[j];
    }
    return g;
}

QMatrix RootSystem::cartan_matrix() const {
    const std::size_t l = rank();
    QMatrix c(l, l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            c(i, j) = inner(simple_[i], simple_[j]);
        }
    }
    return c;
}

DeltaPartition RootSystem::delta_partition(std::size_t alpha) const {
    if (alpha >= roots_.size()) throw InvalidArgument("delta_partition: not a positive root");
    DeltaPartition p;
    p.delta0 = alpha;
    for (std::size_t j = 0; j < roots_.size(); ++j) {
        if (j == alpha) continue;
        (inner(alpha, j) != 0 ? p.delta1 : p.delta2).push_back(j);
    }
    return p;
}

std::size_t RootSystem::triple(std::size_t alpha, std::size_t beta) const {
    if (alpha >= roots_.size() || beta >= roots_.size()) {
        throw InvalidArgument("triple: not a positive root");
    }
    if (roots_[alpha].component != roots_[beta].component) {
        throw InvalidArgument("triple: roots lie in different components");
    }
    if (!related(alpha, beta)) {
        throw InvalidArgument("triple: roots are not related");
    }
    const auto& a = roots_[alpha].coefficients;
    const auto& b = roots_[beta].coefficients;
    std::optional<std::size_t> found;
    for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
            if (sa < 0 && sb < 0) continue;
            std::vector<int> c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) c[i] = sa * a[i] + sb * b[i];
            if (auto idx = find(roots_[alpha].component, c)) {
                if (found) throw Error("triple: gamma is not unique");
                found = idx;
            }
        }
    }
    if (!found) throw Error("triple: no positive root completes the triangle");
    return *found;
}

SubsystemEmbedding RootSystem::subsystem(std::vector<std::size_t> simple_subset) const {
    std::sort(simple_subset.begin(), simple_subset.end());
    if (std::adjacent_find(simple_subset.begin(), simple_subset.end()) != simple_subset.end()) {
        throw InvalidArgument("subsystem: repeated simple root index");
    }
    for (auto s : simple_subset) {
        if (s >= rank()) throw InvalidArgument("subsystem: simple root index out of range");
    }

    // Connected pieces of the induced Dynkin diagram, by smallest index.
    std::vector<int> piece(simple_subset.size(), -1);
    int pieces = 0;
    for (std::size_t i = 0; i < simple_subset.size(); ++i) {
        if (piece[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        piece[i] = pieces;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < simple_subset.size(); ++v) {
                if (piece[v] < 0 && inner(simple_[simple_subset[u]], simple_[simple_subset[v]]) != 0) {
                    piece[v] = pieces;
                    stack.push_back(v);
                }
            }
        }
        ++pieces;
    }

    RootSystem sub;
    std::vector<std::size_t> parent_component(static_cast<std::size_t>(pieces));
    std::vector<std::vector<std::size_t>> local_positions(static_cast<std::size_t>(pieces));
    for (std::size_t i = 0; i < simple_subset.size(); ++i) {
        const auto p = static_cast<std::size_t>(piece[i]);
        const std::size_t parent_root = simple_[simple_subset[i]];
        parent_component[p] = roots_[parent_root].component;
        local_positions[p].push_back(simple_subset[i] - simple_begin_[parent_component[p]]);
    }

    for (std::size_t p = 0; p < static_cast<std::size_t>(pieces); ++p) {
        const std::size_t pc = parent_component[p];
        const auto& pos = local_positions[p];
        const auto [b, e] = component_range(pc);
        std::size_t count = 0;
        for (std::size_t i = b; i < e; ++i) {
            const auto& c = roots_[i].coefficients;
            bool inside = true;
            for (std::size_t j = 0; j < c.size() && inside; ++j) {
                if (c[j] != 0 && std::find(pos.begin(), pos.end(), j) == pos.end()) inside = false;
            }
            if (!inside) continue;
            Root r;
            r.component = p;
            for (auto j : pos) r.coefficients.push_back(c[j]);
            r.coordinates = roots_[i].coordinates;
            sub.roots_.push_back(std::move(r));
            ++count;
        }
        sub.components_.push_back(infer_type(pos.size(), count));
    }
    sub.finalize();

    SubsystemEmbedding out{std::move(sub), simple_subset, {}};
    for (std::size_t i = 0; i < out.system.roots_.size(); ++i) {
        const Root& r = out.system.roots_[i];
        const std::size_t pc = parent_component[r.component];
        std::vector<int> c(static_cast<std::size_t>(components_[pc].rank), 0);
        const auto& pos = local_positions[r.component];
        for (std::size_t j = 0; j < pos.size(); ++j) c[pos[j]] = r.coefficients[j];
        out.parent_index.push_back(*find(pc, c));
    }
    return out;
}

std::string RootSystem::root_label(std::size_t i) const {
    const Root& r = roots_.at(i);
    std::string s = std::to_string(r.component) + "|";
    for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
        if (j != 0) s += ',';
        s += std::to_string(r.coefficients[j]);
    }
    return s;
}

std::vector<SubsystemEmbedding> subsystem_chain(const RootSystem& rs) {
    if (rs.component_count() != 1 || rs.components()[0].family != Family::A) {
        throw InvalidArgument("subsystem_chain: needs a simple system of type A");
    }
    std::vector<SubsystemEmbedding> chain;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        subset.push_back(i);
        chain.push_back(rs.subsystem(subset));
    }
    return chain;
}

}  // namespace griess
