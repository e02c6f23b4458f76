#include "motivic/seq.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>

namespace motivic {

namespace {
std::atomic<std::size_t> g_seq_cap{64};
}

std::size_t seq_cap() { return g_seq_cap.load(std::memory_order_relaxed); }

void set_seq_cap(std::size_t cap) { g_seq_cap.store(cap, std::memory_order_relaxed); }

Nat checked_add(Nat a, Nat b) {
    Nat r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("natural addition overflow");
    return r;
}

Nat checked_mul(Nat a, Nat b) {
    Nat r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("natural multiplication overflow");
    return r;
}

Nat checked_shl(Nat a, unsigned k) {
    if (a == 0) return 0;
    if (k >= 64 || std::countl_zero(a) < static_cast<int>(k)) throw Overflow("weighted sum overflow");
    return a << k;
}

Seq::Seq(std::vector<Nat> entries) : e_(std::move(entries)) {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
    if (e_.size() > seq_cap())
        throw IndexOverCap("sequence support index " + std::to_string(e_.size() - 1) +
                           " exceeds cap " + std::to_string(seq_cap()));
}

std::string Seq::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    os << ')';
    return os.str();
}

Seq unit_seq(Nat n, std::size_t i) {
    if (i >= seq_cap())
        throw IndexOverCap("index " + std::to_string(i) + " exceeds cap " + std::to_string(seq_cap()));
    if (n == 0) return Seq{};
    std::vector<Nat> e(i + 1, 0);
    e[i] = n;
    return Seq(std::move(e));
}

Nat wsum(const Seq& r) {
    Nat w = 0;
    for (std::size_t i = 0; i < r.size(); ++i) w = checked_add(w, checked_shl(r.at(i), static_cast<unsigned>(i)));
    return w;
}

Nat nsum(const Seq& r) {
    Nat n = 0;
    for (Nat v : r.entries()) n = checked_add(n, v);
    return n;
}

bool seq_leq(const Seq& a, const Seq& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.at(i) > b.at(i)) return false;
    return true;
}

Seq seq_add(const Seq& a, const Seq& b) {
    std::vector<Nat> e(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a.at(i), b.at(i));
    return Seq(std::move(e));
}

Seq seq_sub(const Seq& a, const Seq& b) {
    if (!seq_leq(b, a)) throw SubUnderflow("sequence subtraction underflow");
    std::vector<Nat> e(a.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.at(i) - b.at(i);
    return Seq(std::move(e));
}

Seq drop_index0(const Seq& s) {
    if (s.at(0) == 0) return s;
    std::vector<Nat> e = s.entries();
    e[0] = 0;
    return Seq(std::move(e));
}

int seq_lex_cmp(const Seq& a, const Seq& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i) != b.at(i)) return a.at(i) < b.at(i) ? -1 : 1;
    }
    return 0;
}

SeqE::SeqE(Seq s) : s_(std::move(s)) {
    for (Nat v : s_.entries())
        if (v > 1) throw Error("SeqE entry exceeds 1: " + s_.str());
}

SeqE from_wsum(Nat w) {
    std::vector<Nat> e;
    for (std::size_t i = 0; w != 0; ++i, w >>= 1) {
        if (w & 1) {
            if (i >= seq_cap())
                throw IndexOverCap("bit index " + std::to_string(i) + " exceeds cap");
            e.resize(i + 1, 0);
            e[i] = 1;
        }
    }
    return SeqE(Seq(std::move(e)));
}

bool is_seqe(const Seq& s) {
    return std::ranges::all_of(s.entries(), [](Nat v) { return v <= 1; });
}

bool binom_mod2(Nat m, Nat n) {
    if (m < n) return false;
    return (m & n) == n;  // Lucas
}

bool binom_seq_mod2(const Seq& r, const Seq& rp) {
    std::size_t n = std::max(r.size(), rp.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!binom_mod2(r.at(i), rp.at(i))) return false;
    return true;
}

bool multinomial_mod2(std::span<const Nat> parts) {
    /* odd iff the binary additions are carry-free */
    Nat acc = 0;
    for (Nat p : parts) {
        if (acc & p) return false;
        acc = checked_add(acc, p);
    }
    return true;
}

Bidegree bidegree_of_tau_xi(const Seq& s, const Seq& r) {
    Bidegree d;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto c = static_cast<std::int64_t>(s.at(i));
        d.p += c * ((std::int64_t{2} << i) - 1);  // |tau_i| = (2^{i+1}-1, 2^i-1)
        d.q += c * ((std::int64_t{1} << i) - 1);
    }
    for (std::size_t j = 0; j < r.size(); ++j) {
        auto c = static_cast<std::int64_t>(r.at(j));
        d.p += c * ((std::int64_t{2} << j) - 2);  // |xi_j| = (2^{j+1}-2, 2^j-1)
        d.q += c * ((std::int64_t{1} << j) - 1);
    }
    return d;
}

Bidegree bidegree_of_basis(const SeqE& e, const Seq& r) { return bidegree_of_tau_xi(e.as_seq(), r); }

}  // namespace motivic
