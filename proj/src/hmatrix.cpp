#include "vertexkit/hmatrix.hpp"

#include <sstream>

namespace vk {

HMatrix::HMatrix(std::size_t n) {
    if (n == 0) throw std::invalid_argument("horizon must be at least 1");
    rows_.resize(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) rows_[k].resize(k + 1);
}

HMatrix HMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k].size() != k + 1) throw DimensionError("row " + std::to_string(k + 1) + " of a lower-triangular matrix must have " + std::to_string(k + 1) + " entries");
    HMatrix h;
    h.rows_ = std::move(rows);
    return h;
}

const Rational& HMatrix::operator()(std::size_t k, std::size_t j) const { return rows_.at(k - 1).at(j - 1); }

Rational& HMatrix::at(std::size_t k, std::size_t j) { return rows_.at(k - 1).at(j - 1); }

Rational HMatrix::get(std::size_t k, std::size_t j) const {
    if (j > k) return 0;
    return rows_.at(k - 1).at(j - 1);
}

RMatrix HMatrix::dense() const {
    RMatrix m(size(), size());
    for (std::size_t k = 0; k < size(); ++k)
        for (std::size_t j = 0; j <= k; ++j) m(k, j) = rows_[k][j];
    return m;
}

HMatrix HMatrix::leading(std::size_t s) const {
    if (s > size()) throw DimensionError("leading block larger than matrix");
    return from_rows({rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(s)});
}

std::string to_string(const HMatrix& h) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < h.size(); ++k) {
        os << (k ? "; " : "");
        for (std::size_t j = 0; j <= k; ++j) os << (j ? ", " : "") << to_string(h.rows()[k][j]);
    }
    os << ']';
    return os.str();
}

}  // namespace vk
