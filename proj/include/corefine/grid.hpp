#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace corefine {

// Dense H x W grid, row-major. The workhorse type for probability maps,
// masks, action indices and per-pixel reward/value maps.
template <class T>
class Grid {
public:
    Grid() = default;
    Grid(int height, int width, T fill = T{})
        : height_(height), width_(width), data_(static_cast<size_t>(height) * width, fill)
    {
        if (height <= 0 || width <= 0)
            throw std::invalid_argument("Grid: dimensions must be positive");
    }

    int height() const { return height_; }
    int width() const { return width_; }
    std::int64_t size() const { return static_cast<std::int64_t>(height_) * width_; }
    bool empty() const { return data_.empty(); }

    T& at(int r, int c) { return data_[static_cast<size_t>(r) * width_ + c]; }
    const T& at(int r, int c) const { return data_[static_cast<size_t>(r) * width_ + c]; }
    T& operator[](std::int64_t i) { return data_[i]; }
    const T& operator[](std::int64_t i) const { return data_[i]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    bool same_shape(int h, int w) const { return height_ == h && width_ == w; }
    template <class U>
    bool same_shape(const Grid<U>& o) const { return same_shape(o.height(), o.width()); }

    bool operator==(const Grid& o) const
    {
        return height_ == o.height_ && width_ == o.width_ && data_ == o.data_;
    }

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<T> data_;
};

using ProbMap = Grid<double>;
using Mask = Grid<std::uint8_t>;
using ActionGrid = Grid<int>;
using ValueMap = Grid<double>;  // immediate rewards, returns, value predictions

inline void require_same_shape(int h1, int w1, int h2, int w2, const char* what)
{
    if (h1 != h2 || w1 != w2)
        throw std::invalid_argument(std::string(what) + ": shape mismatch (" + std::to_string(h1)
                                    + "x" + std::to_string(w1) + " vs " + std::to_string(h2) + "x"
                                    + std::to_string(w2) + ")");
}

template <class A, class B>
void require_same_shape(const Grid<A>& a, const Grid<B>& b, const char* what)
{
    require_same_shape(a.height(), a.width(), b.height(), b.width(), what);
}

inline bool is_valid_prob_map(const ProbMap& p)
{
    for (std::int64_t i = 0; i < p.size(); ++i)
        if (!(p[i] >= 0.0 && p[i] <= 1.0))
            return false;
    return true;
}

inline bool is_binary_mask(const Mask& m)
{
    for (std::int64_t i = 0; i < m.size(); ++i)
        if (m[i] != 0 && m[i] != 1)
            return false;
    return true;
}

}  // namespace corefine
