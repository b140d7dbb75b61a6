#include "gmnrep/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmnrep {

namespace {

void check_mn(int m, int n) {
    if (m < 1 || n < 0) {
        throw std::domain_error("G(m,1,n): need m >= 1 and n >= 0, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
    }
}

void check_same(const GroupElement& g, const GroupElement& h) {
    if (g.m() != h.m() || g.n() != h.n()) throw std::domain_error("group elements from different groups");
}

int mod(std::int64_t a, int m) {
    auto r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

}  // namespace

GroupElement::GroupElement(int m, int n, std::vector<int> residues, std::vector<int> perm)
    : m_(m), n_(n), residues_(std::move(residues)), perm_(std::move(perm)) {
    check_mn(m, n);
    if (residues_.size() != static_cast<std::size_t>(n) || perm_.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("GroupElement: residues and perm must have length n");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x : perm_) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("GroupElement: perm is not a bijection");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
    for (int& r : residues_) r = mod(r, m);
}

bool GroupElement::is_identity() const {
    for (int j = 0; j < n_; ++j) {
        if (residues_[static_cast<std::size_t>(j)] != 0 || perm_[static_cast<std::size_t>(j)] != j) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.residues_ <=> b.residues_; c != 0) return c;
    return a.perm_ <=> b.perm_;
}

GroupElement identity(int m, int n) {
    check_mn(m, n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    return GroupElement(m, n, std::vector<int>(static_cast<std::size_t>(n), 0), std::move(perm));
}

GroupElement gen_t(int m, int n) { return gen_t_i(m, n, 1); }

GroupElement gen_t_i(int m, int n, int i) {
    check_mn(m, n);
    if (i < 1 || i > n) throw std::out_of_range("t_i: index " + std::to_string(i) + " outside [1, n]");
    GroupElement e = identity(m, n);
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i - 1)] = 1;
    return GroupElement(m, n, std::move(r), e.perm());
}

GroupElement gen_s(int m, int n, int i) {
    check_mn(m, n);
    if (i < 1 || i > n - 1) throw std::out_of_range("s_i: index " + std::to_string(i) + " outside [1, n-1]");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    return GroupElement(m, n, std::vector<int>(static_cast<std::size_t>(n), 0), std::move(perm));
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    check_same(g, h);
    const auto n = static_cast<std::size_t>(g.n());
    const int m = g.m();
    std::vector<int> res(g.residues());
    std::vector<int> perm(n);
    const auto& w = g.perm();
    for (std::size_t x = 0; x < n; ++x) {
        // (w.r')_{w(x)} = r'_x
        auto wx = static_cast<std::size_t>(w[x]);
        res[wx] = (res[wx] + h.residues()[x]) % m;
        perm[x] = w[static_cast<std::size_t>(h.perm()[x])];
    }
    return GroupElement(m, g.n(), std::move(res), std::move(perm));
}

GroupElement inverse(const GroupElement& g) {
    // (r, w)^{-1} = (-w^{-1}.r, w^{-1})
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> inv(n);
    for (std::size_t x = 0; x < n; ++x) inv[static_cast<std::size_t>(g.perm()[x])] = static_cast<int>(x);
    std::vector<int> res(n);
    for (std::size_t j = 0; j < n; ++j) {
        // (w^{-1}.r)_j = r_{w(j)}
        res[j] = -g.residues()[static_cast<std::size_t>(g.perm()[j])];
    }
    return GroupElement(g.m(), g.n(), std::move(res), std::move(inv));
}

GroupElement power(const GroupElement& g, std::int64_t e) {
    GroupElement base = e < 0 ? inverse(g) : g;
    if (e < 0) e = -e;
    GroupElement result = identity(g.m(), g.n());
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }
    return result;
}

Word parse_word(std::string_view text, int m) {
    Word word;
    std::istringstream in{std::string(text)};
    std::string tok;
    auto parse_int = [&](std::string_view s) -> std::int64_t {
        if (s == "m") return m;
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
            throw std::invalid_argument("word: bad integer '" + std::string(s) + "'");
        }
        return v;
    };
    while (in >> tok) {
        std::string_view sv(tok);
        std::int64_t exponent = 1;
        if (auto caret = sv.find('^'); caret != std::string_view::npos) {
            exponent = parse_int(sv.substr(caret + 1));
            sv = sv.substr(0, caret);
        }
        Letter l;
        l.power = exponent;
        if (sv == "t") {
            l.kind = Letter::Kind::T;
        } else if (sv.size() >= 2 && sv[0] == 's') {
            l.kind = Letter::Kind::S;
            l.index = static_cast<int>(parse_int(sv.substr(1)));
        } else {
            throw std::invalid_argument("word: bad letter '" + tok + "'");
        }
        word.push_back(l);
    }
    return word;
}

std::string format_word(const Word& w) {
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l.kind == Letter::Kind::T ? "t" : "s" + std::to_string(l.index);
        if (l.power != 1) out += "^" + std::to_string(l.power);
    }
    return out;
}

GroupElement evaluate_word(int m, int n, const Word& word) {
    GroupElement g = identity(m, n);
    for (const auto& l : word) {
        GroupElement x = l.kind == Letter::Kind::T ? gen_t(m, n) : gen_s(m, n, l.index);
        g = multiply(g, power(x, l.power));
    }
    return g;
}

GroupElement evaluate_word(int m, int n, std::string_view text) { return evaluate_word(m, n, parse_word(text, m)); }

std::vector<int> permutation_word(const std::vector<int>& perm) {
    // Bubble sort w down to the identity: w = s_{a_1} ... s_{a_k}.
    std::vector<int> w(perm);
    std::vector<int> letters;
    const auto n = w.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (w[i] > w[i + 1]) {
                // w = w' o s_{i+1}, so record the letter at the right end
                std::swap(w[i], w[i + 1]);
                letters.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
        }
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

std::uint64_t group_order(int m, int n) {
    check_mn(m, n);
    std::uint64_t order = factorial(n);
    for (int k = 0; k < n; ++k) order *= static_cast<std::uint64_t>(m);
    return order;
}

std::uint64_t group_rank(const GroupElement& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::uint64_t res_rank = 0;
    for (std::size_t j = 0; j < n; ++j) res_rank = res_rank * static_cast<std::uint64_t>(g.m()) + static_cast<std::uint64_t>(g.residues()[j]);
    std::uint64_t perm_rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) smaller += g.perm()[j] < g.perm()[i] ? 1 : 0;
        perm_rank = perm_rank * (n - i) + smaller;
    }
    return res_rank * factorial(g.n()) + perm_rank;
}

GroupElement group_unrank(int m, int n, std::uint64_t rank) {
    const std::uint64_t nf = factorial(n);
    std::uint64_t perm_rank = rank % nf;
    std::uint64_t res_rank = rank / nf;
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> res(un);
    for (std::size_t j = un; j-- > 0;) {
        res[j] = static_cast<int>(res_rank % static_cast<std::uint64_t>(m));
        res_rank /= static_cast<std::uint64_t>(m);
    }
    std::vector<std::uint64_t> digits(un);
    for (std::size_t i = un; i-- > 0;) {
        std::uint64_t base = un - i;
        digits[i] = perm_rank % base;
        perm_rank /= base;
    }
    std::vector<int> avail(un);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> perm(un);
    for (std::size_t i = 0; i < un; ++i) {
        auto it = avail.begin() + static_cast<std::ptrdiff_t>(digits[i]);
        perm[i] = *it;
        avail.erase(it);
    }
    return GroupElement(m, n, std::move(res), std::move(perm));
}

std::vector<GroupElement> enumerate_group(int m, int n, std::uint64_t cap) {
    const std::uint64_t order = group_order(m, n);
    if (order > cap) {
        throw std::length_error("enumerate_group: |G(" + std::to_string(m) + ",1," + std::to_string(n) +
                                ")| = " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<GroupElement> out;
    out.reserve(order);
    // Ranks are increasing in residues and then in the permutation, matching the canonical order.
    for (std::uint64_t r = 0; r < order; ++r) out.push_back(group_unrank(m, n, r));
    return out;
}

std::string to_string(const GroupElement& g) {
    std::string s = "(r=[";
    for (std::size_t j = 0; j < g.residues().size(); ++j) s += (j ? "," : "") + std::to_string(g.residues()[j]);
    s += "], w=[";
    for (std::size_t j = 0; j < g.perm().size(); ++j) s += (j ? "," : "") + std::to_string(g.perm()[j] + 1);
    return s + "])";
}

Certificate group_relations_check(int m, int n) {
    Certificate cert;
    cert.subject = "group relations m=" + std::to_string(m) + " n=" + std::to_string(n);
    auto s = [](int i) { return "s" + std::to_string(i); };
    auto check = [&](const std::string& lhs, const std::string& rhs) {
        cert.add(lhs + " = " + (rhs.empty() ? "1" : rhs), evaluate_word(m, n, lhs) == evaluate_word(m, n, rhs));
    };
    for (int i = 1; i + 1 < n; ++i) check(s(i) + " " + s(i + 1) + " " + s(i), s(i + 1) + " " + s(i) + " " + s(i + 1));
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) check(s(i) + " " + s(j), s(j) + " " + s(i));
    }
    for (int i = 1; i < n; ++i) check(s(i) + " " + s(i), "");
    if (n >= 2) check("t s1 t s1", "s1 t s1 t");
    for (int i = 2; i < n; ++i) check("t " + s(i), s(i) + " t");
    check("t^m", "");
    return cert;
}

}  // namespace gmnrep
