#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qfrob {

/// Cohomological degree.
struct Degree {
    int value = 0;

    constexpr Degree() = default;
    constexpr explicit Degree(int v) : value(v) {}

    constexpr bool odd() const { return (value & 1) != 0; }
    friend constexpr bool operator==(Degree, Degree) = default;
    friend constexpr auto operator<=>(Degree, Degree) = default;
    friend constexpr Degree operator+(Degree a, Degree b) { return Degree(a.value + b.value); }
    friend constexpr Degree operator-(Degree a, Degree b) { return Degree(a.value - b.value); }
};

/// (-1)^k as an integer.
constexpr int parity_sign(int k) { return (k & 1) ? -1 : 1; }

/// A bijection of {0..k-1}. Slot i is sent to slot images()[i].
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t k);
    /// The transposition of slots a and b in S_k.
    static Permutation transposition(std::size_t k, int a, int b);
    /// i -> i+1 mod k.
    static Permutation cycle(std::size_t k);
    /// All k! permutations in lexicographic order of images.
    static std::vector<Permutation> all(std::size_t k);

    std::size_t size() const { return images_.size(); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// Sign of the permutation as an element of S_k.
    int sign() const;

    /// (this ∘ other)(i) = this(other(i)).
    Permutation operator*(const Permutation& other) const;
    friend bool operator==(const Permutation&, const Permutation&) = default;

    /// Rearranges `items` so that items[i] lands in slot (*this)(i).
    template <typename T>
    std::vector<T> apply(std::span<const T> items) const {
        std::vector<T> out(items.size());
        for (std::size_t i = 0; i < items.size(); ++i)
            out[static_cast<std::size_t>(images_[i])] = items[i];
        return out;
    }
    template <typename T>
    std::vector<T> apply(const std::vector<T>& items) const {
        return apply(std::span<const T>(items));
    }

private:
    std::vector<int> images_;
};

/// Koszul sign picked up when the homogeneous factors v_0 ⊗ ... ⊗ v_{k-1} of the
/// given degrees are moved so that v_i lands in slot perm(i): the product of
/// (-1)^{d_i d_j} over inverted pairs i < j.
int koszul_sign(const Permutation& perm, std::span<const Degree> degrees);

/// Same, with degrees supplied as plain integers.
int koszul_sign(const Permutation& perm, std::span<const int> degrees);

}  // namespace qfrob
