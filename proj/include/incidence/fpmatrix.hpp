#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace incidence {

/// Dense matrix over a prime field F_p, p <= 251. Entries stored reduced in
/// [0, p). Rank uses fraction-free Gaussian elimination with partial pivoting;
/// for p = 2 rows are bit-packed into machine words and eliminated with XOR.
class FpMatrix {
public:
    FpMatrix(unsigned p, std::size_t rows, std::size_t cols);

    static FpMatrix identity(unsigned p, std::size_t n);

    unsigned modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long v);
    void add_at(std::size_t r, std::size_t c, long v);

    FpMatrix multiply(const FpMatrix& o) const;

    std::size_t rank() const;
    std::size_t kernel_dimension() const { return cols_ - rank(); }

    bool operator==(const FpMatrix& o) const = default;

private:
    unsigned p_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;

    std::size_t rank_gf2() const;
    std::size_t rank_odd() const;
};

/// Multiplicative inverse mod p (p prime, 0 < a < p).
unsigned fp_inverse(unsigned a, unsigned p);

}  // namespace incidence
