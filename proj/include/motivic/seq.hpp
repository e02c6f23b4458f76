#ifndef MOTIVIC_SEQ_HPP
#define MOTIVIC_SEQ_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "motivic/error.hpp"

namespace motivic {

using Nat = std::uint64_t;

/* process-wide bound on sequence support indices; default 64 */
std::size_t seq_cap();
void set_seq_cap(std::size_t cap);

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);
Nat checked_shl(Nat a, unsigned k);  // a * 2^k

struct Bidegree {
    std::int64_t p = 0;  // topological degree
    std::int64_t q = 0;  // weight
    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.p + b.p, a.q + b.q}; }
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/* finitely supported sequence of naturals indexed from 0, stored without
   trailing zeros */
class Seq {
  public:
    Seq() = default;
    explicit Seq(std::vector<Nat> entries);
    Seq(std::initializer_list<Nat> entries) : Seq(std::vector<Nat>(entries)) {}

    Nat at(std::size_t i) const { return i < e_.size() ? e_[i] : 0; }
    std::size_t size() const { return e_.size(); }  // one past the last nonzero index
    bool is_zero() const { return e_.empty(); }
    const std::vector<Nat>& entries() const { return e_; }

    friend bool operator==(const Seq&, const Seq&) = default;

    std::string str() const;

  private:
    std::vector<Nat> e_;
};

Seq unit_seq(Nat n, std::size_t i);
Nat wsum(const Seq& r);  // sum r_i * 2^i
Nat nsum(const Seq& r);  // sum r_i
bool seq_leq(const Seq& a, const Seq& b);
Seq seq_add(const Seq& a, const Seq& b);
Seq seq_sub(const Seq& a, const Seq& b);  // throws SubUnderflow
int seq_lex_cmp(const Seq& a, const Seq& b);

inline bool operator<(const Seq& a, const Seq& b) { return seq_lex_cmp(a, b) < 0; }

Seq drop_index0(const Seq& s);  // same sequence with the index-0 entry set to 0

/* sequence with entries in {0,1}; in bijection with its wsum */
class SeqE {
  public:
    SeqE() = default;
    explicit SeqE(Seq s);
    SeqE(std::initializer_list<Nat> entries) : SeqE(Seq(entries)) {}

    const Seq& as_seq() const { return s_; }
    Nat at(std::size_t i) const { return s_.at(i); }
    std::size_t size() const { return s_.size(); }
    bool is_zero() const { return s_.is_zero(); }

    friend bool operator==(const SeqE&, const SeqE&) = default;
    friend bool operator<(const SeqE& a, const SeqE& b) { return a.s_ < b.s_; }

  private:
    Seq s_;
};

SeqE from_wsum(Nat w);
bool is_seqe(const Seq& s);

bool binom_mod2(Nat m, Nat n);
bool binom_seq_mod2(const Seq& r, const Seq& rp);  // entrywise product
bool multinomial_mod2(std::span<const Nat> parts);

Bidegree bidegree_of_basis(const SeqE& e, const Seq& r);
/* same degree formula with unconstrained tau exponents (tau(S) for general S) */
Bidegree bidegree_of_tau_xi(const Seq& s, const Seq& r);

}  // namespace motivic

#endif
