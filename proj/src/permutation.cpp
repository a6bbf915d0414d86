#include "cb/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cb {

Permutation::Permutation(int degree) {
    if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
    images_.resize(degree);
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::transposition(int degree, int a, int b) {
    if (a < 1 || a > degree || b < 1 || b > degree)
        throw std::invalid_argument("Permutation::transposition: point out of range");
    if (a == b) throw std::invalid_argument("Permutation::transposition: a == b");
    Permutation p(degree);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("Permutation::from_images: not a bijection");
        seen[v - 1] = true;
    }
    Permutation p(n);
    p.images_ = std::move(images);
    return p;
}

int Permutation::apply(int i) const {
    if (i < 1 || i > degree()) throw std::out_of_range("Permutation::apply: point out of range");
    return images_[i - 1];
}

Permutation Permutation::inverse() const {
    Permutation p(degree());
    for (int i = 1; i <= degree(); ++i) p.images_[images_[i - 1] - 1] = i;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (images_[i - 1] != i) return false;
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("Permutation product: degree mismatch");
    Permutation p(a.degree());
    for (int i = 1; i <= a.degree(); ++i) p.images_[i - 1] = a.apply(b.apply(i));
    return p;
}

} // namespace cb
