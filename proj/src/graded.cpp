#include "qfrob/graded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qfrob {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(std::size_t k) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t k, int a, int b) {
    auto v = identity(k).images_;
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= k || static_cast<std::size_t>(b) >= k)
        throw std::invalid_argument("Permutation::transposition: slot out of range");
    std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
    return Permutation(std::move(v));
}

Permutation Permutation::cycle(std::size_t k) {
    std::vector<int> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<int>((i + 1) % k);
    return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(std::size_t k) {
    std::vector<Permutation> out;
    auto v = identity(k).images_;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

int Permutation::sign() const {
    int s = 1;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) s = -s;
    return s;
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("Permutation: size mismatch in product");
    std::vector<int> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[i] = images_[static_cast<std::size_t>(other.images_[i])];
    return Permutation(std::move(v));
}

int koszul_sign(const Permutation& perm, std::span<const int> degrees) {
    if (degrees.size() != perm.size())
        throw std::invalid_argument("koszul_sign: permutation and degree list differ in length");
    const auto& img = perm.images();
    int s = 1;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if ((degrees[i] & 1) == 0) continue;
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if ((degrees[j] & 1) != 0 && img[i] > img[j]) s = -s;
    }
    return s;
}

int koszul_sign(const Permutation& perm, std::span<const Degree> degrees) {
    std::vector<int> d(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) d[i] = degrees[i].value;
    return koszul_sign(perm, std::span<const int>(d));
}

}  // namespace qfrob
