#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pgon/error.hpp"

namespace pgon {

// 1-based leg positions, e.g. {1, 3} names the first and third tensor factor.
using MultiIndex = std::vector<int>;

// Bijection on legs 1..n.  The factor sitting at position p moves to image[p-1].
class LegPermutation {
public:
    LegPermutation() = default;
    explicit LegPermutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<char> seen(image_.size() + 1, 0);
        for (int v : image_) {
            if (v < 1 || v > static_cast<int>(image_.size()) || seen[v]) {
                throw ShapeError("leg permutation is not a bijection on 1.." +
                                 std::to_string(image_.size()));
            }
            seen[v] = 1;
        }
    }

    static LegPermutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return LegPermutation(std::move(img));
    }

    // Order-reversing permutation p -> n+1-p.
    static LegPermutation reversal(int n) {
        std::vector<int> img(n);
        for (int p = 0; p < n; ++p) img[p] = n - p;
        return LegPermutation(std::move(img));
    }

    // Swap of adjacent legs i, i+1.
    static LegPermutation transposition(int n, int i) {
        auto p = identity(n);
        if (i < 1 || i >= n) throw ShapeError("transposition out of range");
        std::swap(p.image_[i - 1], p.image_[i]);
        return p;
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int p) const { return image_[p - 1]; }
    const std::vector<int>& image() const { return image_; }

    LegPermutation inverse() const {
        std::vector<int> inv(image_.size());
        for (int p = 0; p < size(); ++p) inv[image_[p] - 1] = p + 1;
        return LegPermutation(std::move(inv));
    }

    // (a.then(b))(p) = b(a(p)): move by a first, then by b.
    LegPermutation then(const LegPermutation& b) const {
        if (b.size() != size()) throw ShapeError("permutation sizes differ");
        std::vector<int> img(image_.size());
        for (int p = 0; p < size(); ++p) img[p] = b(image_[p]);
        return LegPermutation(std::move(img));
    }

    bool is_identity() const {
        for (int p = 0; p < size(); ++p) {
            if (image_[p] != p + 1) return false;
        }
        return true;
    }

    friend bool operator==(const LegPermutation&, const LegPermutation&) = default;

private:
    std::vector<int> image_;
};

}  // namespace pgon
