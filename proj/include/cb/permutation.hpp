#pragma once

#include <vector>

namespace cb {

// Element of the symmetric group S_n. Points are 1-based throughout;
// composition is (a*b)(i) = a(b(i)), so in a product the right factor
// acts first.
class Permutation {
public:
    // Identity on {1,...,degree}.
    explicit Permutation(int degree);

    // Transposition (a,b); a != b required.
    static Permutation transposition(int degree, int a, int b);

    // images[i-1] is the image of i. Must be a bijection of {1,...,n}.
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int i) const;
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> images_;
};

} // namespace cb
