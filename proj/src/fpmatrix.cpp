#include "incidence/fpmatrix.hpp"

#include <stdexcept>

#include "incidence/symfunc.hpp"

namespace incidence {

unsigned fp_inverse(unsigned a, unsigned p) {
    unsigned r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!is_prime(static_cast<long>(p)) || p > 251)
        throw std::invalid_argument("FpMatrix: modulus must be a prime <= 251");
}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long v) {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += p_;
    a_[r * cols_ + c] = static_cast<std::uint8_t>(m);
}

void FpMatrix::add_at(std::size_t r, std::size_t c, long v) {
    set(r, c, static_cast<long>(a_[r * cols_ + c]) + v);
}

FpMatrix FpMatrix::multiply(const FpMatrix& o) const {
    if (p_ != o.p_ || cols_ != o.rows_)
        throw std::invalid_argument("FpMatrix: incompatible product");
    FpMatrix out(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            unsigned v = a_[i * cols_ + k];
            if (!v) continue;
            std::uint8_t* dst = &out.a_[i * o.cols_];
            const std::uint8_t* src = &o.a_[k * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j)
                dst[j] = static_cast<std::uint8_t>((dst[j] + v * src[j]) % p_);
        }
    }
    return out;
}

std::size_t FpMatrix::rank_gf2() const {
    const std::size_t words = (cols_ + 63) / 64;
    std::vector<std::uint64_t> rows(rows_ * words, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (a_[i * cols_ + j] & 1)
                rows[i * words + (j >> 6)] |= std::uint64_t(1) << (j & 63);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = std::uint64_t(1) << (c & 63);
        std::size_t piv = rows_;
        for (std::size_t i = rank; i < rows_; ++i)
            if (rows[i * words + w] & bit) { piv = i; break; }
        if (piv == rows_) continue;
        for (std::size_t k = 0; k < words; ++k)
            std::swap(rows[rank * words + k], rows[piv * words + k]);
        for (std::size_t i = rank + 1; i < rows_; ++i)
            if (rows[i * words + w] & bit)
                for (std::size_t k = w; k < words; ++k)
                    rows[i * words + k] ^= rows[rank * words + k];
        ++rank;
    }
    return rank;
}

std::size_t FpMatrix::rank_odd() const {
    std::vector<std::uint8_t> m = a_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t piv = rows_;
        for (std::size_t i = rank; i < rows_; ++i)
            if (m[i * cols_ + c]) { piv = i; break; }
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t k = 0; k < cols_; ++k)
                std::swap(m[rank * cols_ + k], m[piv * cols_ + k]);
        const unsigned inv = fp_inverse(m[rank * cols_ + c], p_);
        for (std::size_t k = c; k < cols_; ++k)
            m[rank * cols_ + k] = static_cast<std::uint8_t>(m[rank * cols_ + k] * inv % p_);
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            const unsigned f = m[i * cols_ + c];
            if (!f) continue;
            for (std::size_t k = c; k < cols_; ++k) {
                unsigned v = m[i * cols_ + k] + p_ * p_ - f * m[rank * cols_ + k];
                m[i * cols_ + k] = static_cast<std::uint8_t>(v % p_);
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t FpMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return p_ == 2 ? rank_gf2() : rank_odd();
}

}  // namespace incidence
