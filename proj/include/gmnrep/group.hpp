#pragma once

#include "gmnrep/certificate.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gmnrep {

/// Default ceiling on |G(m,1,n)| for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

/**
 * Element of G(m,1,n) = C_m wr S_n in the normal form
 * t_1^{r_1} ... t_n^{r_n} w, with t_1 = t and t_{i+1} = s_i t_i s_i.
 *
 * The permutation w acts on positions; it is stored 0-based in one-line
 * notation (perm[x] = w(x)). The product is
 *   (r, w)(r', w') = (r + w.r' mod m, w o w'),   (w.r')_j = r'_{w^{-1}(j)}.
 */
class GroupElement {
public:
    GroupElement() = default;
    /// Validates residues (reduced mod m) and that perm is a bijection of {0..n-1}.
    GroupElement(int m, int n, std::vector<int> residues, std::vector<int> perm);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<int>& residues() const { return residues_; }
    const std::vector<int>& perm() const { return perm_; }

    bool is_identity() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    /// Canonical order: residues lexicographically, then one-line permutation.
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

private:
    int m_ = 1;
    int n_ = 0;
    std::vector<int> residues_;
    std::vector<int> perm_;
};

GroupElement identity(int m, int n);
GroupElement gen_t(int m, int n);
/// s_i, 1 <= i <= n-1.
GroupElement gen_s(int m, int n, int i);
/// t_i = s_{i-1} ... s_1 t s_1 ... s_{i-1}, 1 <= i <= n.
GroupElement gen_t_i(int m, int n, int i);

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, std::int64_t e);

/// One letter of a word in t, t^{-1}, s_1..s_{n-1}, with an integer exponent.
struct Letter {
    enum class Kind { T, S };
    Kind kind = Kind::T;
    int index = 0;  // s-index, unused for t
    std::int64_t power = 1;
};

using Word = std::vector<Letter>;

/**
 * Parses whitespace-separated tokens such as "t", "t^-1", "t^m", "s1", "s2^3".
 * The exponent "m" stands for the group parameter m. Throws std::invalid_argument.
 */
Word parse_word(std::string_view text, int m);
std::string format_word(const Word& w);

/// Throws std::out_of_range on an s-index outside [1, n-1].
GroupElement evaluate_word(int m, int n, const Word& word);
GroupElement evaluate_word(int m, int n, std::string_view text);

/// Reduced word s_{a_1} ... s_{a_k} (1-based indices) for the permutation part of w.
std::vector<int> permutation_word(const std::vector<int>& perm);

std::uint64_t group_order(int m, int n);

/// All elements in canonical order. Throws std::length_error if the order exceeds cap.
std::vector<GroupElement> enumerate_group(int m, int n, std::uint64_t cap = kDefaultGroupCap);

/// Dense index in [0, m^n n!): residue rank times n! plus Lehmer rank of the permutation.
std::uint64_t group_rank(const GroupElement& g);
GroupElement group_unrank(int m, int n, std::uint64_t rank);

std::string to_string(const GroupElement& g);

/// Every defining relation of G(m,1,n), evaluated as a word, gives the identity.
Certificate group_relations_check(int m, int n);

}  // namespace gmnrep
