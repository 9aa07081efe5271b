#include "griess/modular.hpp"

#include <algorithm>
#include <cmath>

#include "griess/error.hpp"

namespace griess::modular {
namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 base, u64 exp, u64 p) {
    u64 result = 1;
    base %= p;
    while (exp != 0) {
        if ((exp & 1u) != 0) {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1u;
    }
    return result;
}

u64 inverse(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// Dense matrix over Z/p, row-major.
struct ModMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<u64> data;

    u64& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

std::optional<ModMatrix> reduce_matrix(const QMatrix& m, std::uint32_t p) {
    ModMatrix out{m.rows(), m.cols(), std::vector<u64>(m.rows() * m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            if (is_zero(x)) {
                continue;
            }
            auto r = reduce(x, p);
            if (!r) {
                return std::nullopt;
            }
            out.at(i, j) = *r;
        }
    }
    return out;
}

// Gauss-Jordan on `m`; returns the rank. When `inverse_of` is non-null and m
// is square and nonsingular, it receives m^{-1}.
std::size_t eliminate(ModMatrix m, u64 p, ModMatrix* inverse_of) {
    const std::size_t n = m.rows;
    ModMatrix inv;
    if (inverse_of != nullptr) {
        inv = {n, n, std::vector<u64>(n * n)};
        for (std::size_t i = 0; i < n; ++i) {
            inv.at(i, i) = 1;
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) {
            ++piv;
        }
        if (piv == m.rows) {
            if (inverse_of != nullptr) {
                return r;
            }
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols; ++j) {
                std::swap(m.at(piv, j), m.at(r, j));
            }
            if (inverse_of != nullptr) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(inv.at(piv, j), inv.at(r, j));
                }
            }
        }
        const u64 scale = inverse(m.at(r, c), p);
        for (std::size_t j = c; j < m.cols; ++j) {
            m.at(r, j) = m.at(r, j) * scale % p;
        }
        if (inverse_of != nullptr) {
            for (std::size_t j = 0; j < n; ++j) {
                inv.at(r, j) = inv.at(r, j) * scale % p;
            }
        }
        const std::size_t first = inverse_of != nullptr ? 0 : r + 1;
        for (std::size_t i = first; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) {
                continue;
            }
            const u64 f = p - m.at(i, c);
            u64* target = &m.at(i, 0);
            const u64* source = &m.at(r, 0);
            for (std::size_t j = c; j < m.cols; ++j) {
                if (source[j] != 0) {
                    target[j] = (target[j] + f * source[j]) % p;
                }
            }
            if (inverse_of != nullptr) {
                u64* it = &inv.at(i, 0);
                const u64* is = &inv.at(r, 0);
                for (std::size_t j = 0; j < n; ++j) {
                    if (is[j] != 0) {
                        it[j] = (it[j] + f * is[j]) % p;
                    }
                }
            }
        }
        ++r;
    }
    if (inverse_of != nullptr) {
        *inverse_of = std::move(inv);
    }
    return r;
}

// Bits of the Hadamard bound on any n x n minor of the integer matrix [a|b].
double hadamard_bits(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n) {
    double bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Integer norm2 = b[i] * b[i];
        for (std::size_t j = 0; j < n; ++j) {
            norm2 += a[i * n + j] * a[i * n + j];
        }
        if (sgn(norm2) > 0) {
            bits += 0.5 * static_cast<double>(mpz_sizeinbase(norm2.get_mpz_t(), 2));
        }
    }
    return bits;
}

}  // namespace

std::optional<std::uint32_t> reduce(const Rational& x, std::uint32_t p) {
    const unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
    if (den == 0) {
        return std::nullopt;
    }
    const unsigned long num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
    return static_cast<std::uint32_t>(static_cast<u64>(num) * inverse(den, p) % p);
}

std::optional<std::size_t> rank_mod(const QMatrix& m, std::uint32_t p) {
    auto reduced = reduce_matrix(m, p);
    if (!reduced) {
        return std::nullopt;
    }
    return eliminate(std::move(*reduced), p, nullptr);
}

std::optional<Rational> reconstruct(const Integer& residue, const Integer& modulus) {
    Integer bound;
    {
        Integer half = modulus / 2;
        mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    }
    Integer r0 = modulus;
    Integer r1 = residue % modulus;
    if (sgn(r1) < 0) {
        r1 += modulus;
    }
    Integer t0 = 0;
    Integer t1 = 1;
    Integer q;
    Integer tmp;
    while (r1 > bound) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (sgn(t1) == 0 || abs(t1) > bound) {
        return std::nullopt;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) {
        return std::nullopt;
    }
    return make_rational(sgn(t1) < 0 ? Integer(-r1) : r1, abs(t1));
}

std::optional<QVector> solve_nonsingular(const QMatrix& a, const QVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw InvalidArgument("solve_nonsingular: system must be square");
    }
    if (n == 0) {
        return QVector{};
    }

    // Clear denominators row by row: A x = B with A, B integral.
    std::vector<Integer> ai(n * n);
    std::vector<Integer> bi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer den = b[i].get_den();
        for (const auto& x : a.row(i)) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            ai[i * n + j] = a(i, j).get_num() * (den / a(i, j).get_den());
        }
        bi[i] = b[i].get_num() * (den / b[i].get_den());
    }

    // Entries of the solution are quotients of n x n minors of [A|B], so two
    // Hadamard bounds plus slack bound the modulus needed for reconstruction.
    const double needed_bits = 2.0 * hadamard_bits(ai, bi, n) + 64.0;

    for (const auto p : primes) {
        ModMatrix am{n, n, std::vector<u64>(n * n)};
        for (std::size_t k = 0; k < n * n; ++k) {
            am.data[k] = mpz_fdiv_ui(ai[k].get_mpz_t(), p);
        }
        ModMatrix inv;
        if (eliminate(am, p, &inv) != n) {
            continue;
        }

        std::vector<Integer> residual = bi;
        std::vector<Integer> accumulated(n);
        Integer modulus = 1;
        std::vector<u64> rmod(n);
        std::vector<u64> digit(n);
        std::size_t steps = 0;
        std::size_t next_check = 1;
        Integer tmp;
        while (true) {
            for (std::size_t i = 0; i < n; ++i) {
                rmod[i] = mpz_fdiv_ui(residual[i].get_mpz_t(), p);
            }
            for (std::size_t i = 0; i < n; ++i) {
                u64 acc = 0;
                const u64* row = &inv.data[i * n];
                for (std::size_t j = 0; j < n; ++j) {
                    if (row[j] != 0 && rmod[j] != 0) {
                        acc = (acc + row[j] * rmod[j]) % p;
                    }
                }
                digit[i] = acc;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (digit[i] != 0) {
                    tmp = modulus * static_cast<unsigned long>(digit[i]);
                    accumulated[i] += tmp;
                }
            }
            // residual <- (residual - A * digit) / p, exact.
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (digit[j] != 0 && sgn(ai[i * n + j]) != 0) {
                        mpz_submul_ui(residual[i].get_mpz_t(), ai[i * n + j].get_mpz_t(),
                                      static_cast<unsigned long>(digit[j]));
                    }
                }
                mpz_divexact_ui(residual[i].get_mpz_t(), residual[i].get_mpz_t(), p);
            }
            modulus *= static_cast<unsigned long>(p);
            ++steps;

            const bool exhausted =
                static_cast<double>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) > needed_bits;
            if (steps == next_check || exhausted) {
                next_check *= 2;
                QVector x(n);
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) {
                    auto r = reconstruct(accumulated[i], modulus);
                    if (r) {
                        x[i] = std::move(*r);
                    } else {
                        ok = false;
                    }
                }
                if (ok && a * x == b) {
                    return x;
                }
                if (exhausted) {
                    break;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace griess::modular
