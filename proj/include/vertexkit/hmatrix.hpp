#pragma once

#include <cstddef>
#include <vector>

#include "vertexkit/core.hpp"

namespace vk {

/// Lower-triangular step-size matrix of size (N-1) x (N-1), stored by rows.
/// Indices in the accessors are 1-based: h(k, j) with 1 <= j <= k <= N-1.
class HMatrix {
public:
    HMatrix() = default;
    /// Zero matrix for horizon n (size n-1).
    explicit HMatrix(std::size_t n);
    static HMatrix from_rows(std::vector<std::vector<Rational>> rows);

    std::size_t horizon() const { return rows_.size() + 1; }
    std::size_t size() const { return rows_.size(); }

    const Rational& operator()(std::size_t k, std::size_t j) const;
    Rational& at(std::size_t k, std::size_t j);
    /// Entry or zero when j > k.
    Rational get(std::size_t k, std::size_t j) const;

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    RMatrix dense() const;
    /// Leading principal block of the given size.
    HMatrix leading(std::size_t size) const;

    bool operator==(const HMatrix& o) const { return rows_ == o.rows_; }
    bool operator!=(const HMatrix& o) const { return rows_ != o.rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
};

std::string to_string(const HMatrix& h);

}  // namespace vk
