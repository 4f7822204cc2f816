#include <doctest.h>

#include <stdexcept>

#include <random>

#include "incidence/fpmatrix.hpp"

using namespace incidence;

namespace {

FpMatrix random_matrix(std::mt19937& rng, unsigned p, std::size_t rows, std::size_t cols) {
    FpMatrix m(p, rows, cols);
    std::uniform_int_distribution<long> entry(0, p - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entry(rng));
    return m;
}

// reference rank over F_p with naive long arithmetic
std::size_t naive_rank(const FpMatrix& m) {
    const long p = m.modulus();
    std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = rank; i < m.rows(); ++i)
            if (a[i][c] % p) { piv = i; break; }
        if (piv == m.rows()) continue;
        std::swap(a[rank], a[piv]);
        const long inv = fp_inverse(static_cast<unsigned>(a[rank][c]), static_cast<unsigned>(p));
        for (auto& x : a[rank]) x = x * inv % p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][c] % p == 0) continue;
            const long f = a[i][c] % p;
            for (std::size_t j = 0; j < m.cols(); ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p * p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("identity and zero") {
    for (unsigned p : {2u, 3u, 251u}) {
        CHECK(FpMatrix::identity(p, 6).rank() == 6);
        CHECK(FpMatrix(p, 4, 7).rank() == 0);
        CHECK(FpMatrix(p, 4, 7).kernel_dimension() == 7);
        CHECK(FpMatrix(p, 0, 0).rank() == 0);
    }
    CHECK_THROWS_AS(FpMatrix(4, 2, 2), std::invalid_argument);
}

TEST_CASE("rank matches a naive elimination on random matrices") {
    std::mt19937 rng(99);
    for (unsigned p : {2u, 3u, 5u, 7u, 251u}) {
        for (int iter = 0; iter < 30; ++iter) {
            const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
            const FpMatrix m = random_matrix(rng, p, r, c);
            CHECK(m.rank() == naive_rank(m));
        }
    }
}

TEST_CASE("rank of a product is bounded and multiply reduces mod p") {
    std::mt19937 rng(3);
    for (unsigned p : {2u, 5u}) {
        const FpMatrix a = random_matrix(rng, p, 6, 4), b = random_matrix(rng, p, 4, 5);
        const FpMatrix ab = a.multiply(b);
        CHECK(ab.rows() == 6);
        CHECK(ab.cols() == 5);
        CHECK(ab.rank() <= std::min(a.rank(), b.rank()));
        for (std::size_t i = 0; i < ab.rows(); ++i)
            for (std::size_t j = 0; j < ab.cols(); ++j) CHECK(ab.at(i, j) < p);
    }
}

TEST_CASE("fp_inverse") {
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 251u})
        for (unsigned a = 1; a < p; ++a) CHECK(a * fp_inverse(a, p) % p == 1);
}
