#pragma once

// Dense row-major 64-bit float tensor. The only data carrier in the library:
// parameters, batches, gradients and metric inputs are all Tensors.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace minimax {

// Error taxonomy. Shape and contract violations are programming errors on the
// caller's side; nonfinite_error is a queryable runtime failure (overflow,
// division blowup) carrying the offending node path.
struct shape_error : std::runtime_error {
    explicit shape_error(const std::string& what) : std::runtime_error(what) {}
};
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};
struct nonfinite_error : std::runtime_error {
    explicit nonfinite_error(const std::string& what) : std::runtime_error(what) {}
};

using Shape = std::vector<std::size_t>;

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
    os << ']';
    return os.str();
}

inline std::size_t shape_numel(const Shape& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
}

class Tensor {
public:
    Tensor() : shape_{0}, data_{} {}

    Tensor(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
        if (shape_numel(shape_) != data_.size())
            throw shape_error("tensor: shape " + shape_str(shape_) + " does not match " +
                              std::to_string(data_.size()) + " elements");
    }

    static Tensor zeros(Shape shape) {
        std::size_t n = shape_numel(shape);
        return Tensor(std::move(shape), std::vector<double>(n, 0.0));
    }
    static Tensor ones(Shape shape) {
        std::size_t n = shape_numel(shape);
        return Tensor(std::move(shape), std::vector<double>(n, 1.0));
    }
    static Tensor full(Shape shape, double value) {
        std::size_t n = shape_numel(shape);
        return Tensor(std::move(shape), std::vector<double>(n, value));
    }
    static Tensor scalar(double value) { return Tensor({1}, {value}); }
    static Tensor vector(std::vector<double> v) {
        Shape s{v.size()};
        return Tensor(std::move(s), std::move(v));
    }

    const Shape& shape() const { return shape_; }
    std::size_t ndim() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    std::size_t dim(std::size_t i) const { return shape_.at(i); }

    // 2-D accessors; rows/cols throw unless the tensor is a matrix.
    std::size_t rows() const {
        require_ndim(2, "rows");
        return shape_[0];
    }
    std::size_t cols() const {
        require_ndim(2, "cols");
        return shape_[1];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<double> span() { return {data_.data(), data_.size()}; }
    std::span<const double> span() const { return {data_.data(), data_.size()}; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double& at2(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }
    double at2(std::size_t i, std::size_t j) const { return data_[i * shape_[1] + j]; }

    double item() const {
        if (size() != 1) throw contract_error("item(): tensor has " + std::to_string(size()) + " elements");
        return data_[0];
    }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    Tensor reshaped(Shape shape) const {
        if (shape_numel(shape) != size())
            throw shape_error("reshape: " + shape_str(shape_) + " -> " + shape_str(shape) + " changes element count");
        return Tensor(std::move(shape), data_);
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.shape_ == b.shape_ && a.data_ == b.data_;
    }

private:
    void require_ndim(std::size_t n, const char* who) const {
        if (shape_.size() != n)
            throw shape_error(std::string(who) + ": expected " + std::to_string(n) + "-d tensor, got " +
                              shape_str(shape_));
    }

    Shape shape_;
    std::vector<double> data_;
};

// One-hot encoding of integer class labels, used to condition the generator.
inline Tensor one_hot(const std::vector<int>& labels, std::size_t class_count) {
    Tensor out = Tensor::zeros({labels.size(), class_count});
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int y = labels[i];
        if (y < 0 || static_cast<std::size_t>(y) >= class_count)
            throw contract_error("one_hot: label " + std::to_string(y) + " out of range [0," +
                                 std::to_string(class_count) + ")");
        out.at2(i, static_cast<std::size_t>(y)) = 1.0;
    }
    return out;
}

inline double dot(const Tensor& a, const Tensor& b) {
    if (a.size() != b.size()) throw shape_error("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Tensor& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Tensor& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

// Concatenate flat views of several tensors into one vector.
inline Tensor flatten_cat(const std::vector<Tensor>& parts) {
    std::size_t n = 0;
    for (const auto& t : parts) n += t.size();
    std::vector<double> data;
    data.reserve(n);
    for (const auto& t : parts) data.insert(data.end(), t.span().begin(), t.span().end());
    return Tensor({n}, std::move(data));
}

// Split a flat vector back into tensors with the given shapes.
inline std::vector<Tensor> unflatten(const Tensor& flat, const std::vector<Shape>& shapes) {
    std::vector<Tensor> out;
    out.reserve(shapes.size());
    std::size_t off = 0;
    for (const auto& s : shapes) {
        std::size_t n = shape_numel(s);
        if (off + n > flat.size()) throw shape_error("unflatten: flat vector too short");
        std::vector<double> chunk(flat.data() + off, flat.data() + off + n);
        out.emplace_back(s, std::move(chunk));
        off += n;
    }
    if (off != flat.size()) throw shape_error("unflatten: flat vector too long");
    return out;
}

}  // namespace minimax
